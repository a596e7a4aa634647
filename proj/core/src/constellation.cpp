#include "npc/constellation.hpp"

#include <algorithm>
#include <sstream>

namespace npc {

namespace {

void require_length(const Constellation& c, std::size_t n, const char* what) {
  if (n != c.size()) {
    std::ostringstream os;
    os << what << ": length " << n << " does not match constellation size " << c.size();
    throw std::invalid_argument(os.str());
  }
}

// Solve n p = m by forward substitution: n_i = m_i + sum_{j in prox(i)} n_j.
IntegerVector solve_star(const Constellation& c, const IntegerVector& m) {
  IntegerVector n(m);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (auto j : c.point(i).prox) n[i] += n[j];
  return n;
}

}  // namespace

Constellation::Constellation(int dim, std::vector<Point> points) : dim_(dim), points_(std::move(points)) {
  if (dim_ < 2) throw ValidationError("constellation: dimension must be at least 2");
  if (points_.empty()) throw ValidationError("constellation: at least one point (the root) is required");
  if (points_[0].parent || !points_[0].prox.empty())
    throw ValidationError("constellation: point 1 is the root and has no parent or proximities");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    auto& pt = points_[i];
    std::ostringstream where;
    where << "constellation point " << (i + 1) << ": ";
    if (!pt.parent) throw ValidationError(where.str() + "non-root point without parent");
    if (*pt.parent >= i) throw ValidationError(where.str() + "parent must precede its child (topological order)");
    std::sort(pt.prox.begin(), pt.prox.end());
    if (std::adjacent_find(pt.prox.begin(), pt.prox.end()) != pt.prox.end())
      throw ValidationError(where.str() + "duplicate proximity entry");
    if (!std::binary_search(pt.prox.begin(), pt.prox.end(), *pt.parent))
      throw ValidationError(where.str() + "parent must belong to prox");
    for (auto j : pt.prox)
      if (j >= i || !is_ancestor(j, i))
        throw ValidationError(where.str() + "prox entries must be strict ancestors");
    if (pt.prox.size() > static_cast<std::size_t>(dim_))
      throw ValidationError(where.str() + "proximate to more than d points");
  }

  const std::size_t r = points_.size();
  p_.assign(r, IntegerVector(r, Integer(0)));
  for (std::size_t i = 0; i < r; ++i) {
    p_[i][i] = 1;
    for (auto j : points_[i].prox) p_[j][i] = -1;
  }
  p_inv_.reserve(r);
  for (std::size_t j = 0; j < r; ++j) {
    IntegerVector unit(r, Integer(0));
    unit[j] = 1;
    p_inv_.push_back(solve_star(*this, unit));
  }
}

Constellation Constellation::free_chain(int dim, std::size_t length) {
  std::vector<Point> pts(length);
  for (std::size_t i = 1; i < length; ++i) {
    pts[i].parent = i - 1;
    pts[i].prox = {i - 1};
  }
  return Constellation(dim, std::move(pts));
}

bool Constellation::proximate(std::size_t i, std::size_t j) const {
  const auto& prox = points_.at(i).prox;
  return std::binary_search(prox.begin(), prox.end(), j);
}

bool Constellation::is_ancestor(std::size_t ancestor, std::size_t i) const {
  auto cur = points_.at(i).parent;
  while (cur) {
    if (*cur == ancestor) return true;
    cur = points_.at(*cur).parent;
  }
  return false;
}

std::size_t Constellation::depth(std::size_t i) const {
  std::size_t depth = 0;
  for (auto cur = points_.at(i).parent; cur; cur = points_.at(*cur).parent) ++depth;
  return depth;
}

bool operator==(const Constellation::Point& a, const Constellation::Point& b) {
  return a.parent == b.parent && a.prox == b.prox;
}

bool operator==(const Constellation& a, const Constellation& b) {
  return a.dim_ == b.dim_ && a.points_ == b.points_;
}

PointBasis::PointBasis(IntegerVector values) : values_(std::move(values)) {
  for (const auto& v : values_)
    if (v < 0) throw std::invalid_argument("point basis entries must be nonnegative");
}

bool PointBasis::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Integer& v) { return v == 0; });
}

ProximityMatrices proximity_matrix(const Constellation& c) { return {c.proximity(), c.proximity_inverse()}; }

DivisorStar to_star(const Constellation& c, const DivisorE& divisor) {
  require_length(c, divisor.coeffs.size(), "to_star");
  const auto& p = c.proximity();
  IntegerVector m(c.size(), Integer(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (p[j][i] != 0) m[i] += divisor.coeffs[j] * p[j][i];
  return {std::move(m)};
}

DivisorE from_star(const Constellation& c, const DivisorStar& star) {
  require_length(c, star.coords.size(), "from_star");
  const auto& pinv = c.proximity_inverse();
  IntegerVector n(c.size(), Integer(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (pinv[j][i] != 0) n[i] += star.coords[j] * pinv[j][i];
  return {std::move(n)};
}

bool is_full(const Constellation& c, const DivisorE& divisor) {
  const auto m = to_star(c, divisor);
  return std::all_of(m.coords.begin(), m.coords.end(), [](const Integer& v) { return v >= 0; });
}

bool is_full_by_definition(const Constellation& c, const DivisorE& divisor) {
  require_length(c, divisor.coeffs.size(), "is_full");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (divisor.coeffs[i] < 0) return false;
    Integer below = 0;
    for (auto j : c.point(i).prox) below += divisor.coeffs[j];
    if (divisor.coeffs[i] < below) return false;
  }
  return true;
}

DivisorE divisor_of_basis(const Constellation& c, const PointBasis& basis) {
  return from_star(c, DivisorStar{basis.values()});
}

PointBasis basis_of_divisor(const Constellation& c, const DivisorE& divisor) {
  return PointBasis(to_star(c, divisor).coords);
}

PointBasis adjoint_basis(const PointBasis& basis, int dim) {
  IntegerVector out;
  out.reserve(basis.size());
  for (const auto& r : basis.values()) {
    Integer v = r + 1 - dim;
    out.push_back(v > 0 ? v : Integer(0));
  }
  return PointBasis(std::move(out));
}

PointBasis product_basis(const PointBasis& a, const PointBasis& b) {
  if (a.size() != b.size()) throw std::invalid_argument("product_basis: length mismatch");
  IntegerVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return PointBasis(std::move(out));
}

DivisorE canonical_divisor(const Constellation& c) {
  return from_star(c, DivisorStar{IntegerVector(c.size(), Integer(c.dim() - 1))});
}

DivisorE fiber_divisor(const Constellation& c) {
  IntegerVector m(c.size(), Integer(0));
  m[0] = 1;
  return from_star(c, DivisorStar{std::move(m)});
}

DivisorE operator+(const DivisorE& a, const DivisorE& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("divisor sum: length mismatch");
  DivisorE out = a;
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

DivisorE operator*(const Integer& k, const DivisorE& d) {
  DivisorE out = d;
  for (auto& v : out.coeffs) v *= k;
  return out;
}

DivisorE floor_scale(const DivisorE& d, const BigRational& c) {
  DivisorE out;
  out.coeffs.reserve(d.coeffs.size());
  const Integer num = boost::multiprecision::numerator(c);
  const Integer den = boost::multiprecision::denominator(c);
  for (const auto& n : d.coeffs) {
    Integer prod = n * num;
    Integer q = prod / den;  // truncates toward zero
    if (prod % den != 0 && prod < 0) q -= 1;
    out.coeffs.push_back(q);
  }
  return out;
}

}  // namespace npc
