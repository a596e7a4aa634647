#include "npc/lp.hpp"

#include <optional>
#include <stdexcept>

#include "npc/linalg.hpp"

namespace npc {

namespace {

template <class Q>
class Tableau {
 public:
  Tableau(const LinearProgram& lp) : m_(lp.b.size()), n_(lp.c.size()), t_(m_, n_ + m_ + 1), basis_(m_) {
    for (std::size_t r = 0; r < m_; ++r) {
      const std::int64_t s = lp.b[r] < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) t_(r, j) = Q(s * lp.a[r][j]);
      t_(r, n_ + r) = Q(1);
      t_(r, rhs()) = Q(s * lp.b[r]);
      basis_[r] = n_ + r;
    }
  }

  LpStatus optimize(const std::vector<Q>& cost, std::size_t allowed_cols) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed_cols && !entering; ++j) {
        if (is_basic(j)) continue;
        Q reduced = cost[j];
        for (std::size_t r = 0; r < m_; ++r)
          if (!is_zero(t_(r, j))) reduced -= cost[basis_[r]] * t_(r, j);
        if (sign_of(reduced) > 0) entering = j;
      }
      if (!entering) return LpStatus::kOptimal;
      std::optional<std::size_t> leaving;
      Q best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (sign_of(t_(r, *entering)) <= 0) continue;
        Q ratio = t_(r, rhs()) / t_(r, *entering);
        if (!leaving || ratio < best || (ratio == best && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best = ratio;
        }
      }
      if (!leaving) return LpStatus::kUnbounded;
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Q inv = Q(1) / t_(row, col);
    for (std::size_t c = 0; c <= rhs(); ++c) t_(row, c) *= inv;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row || is_zero(t_(r, col))) continue;
      const Q f = t_(r, col);
      for (std::size_t c = 0; c <= rhs(); ++c)
        if (!is_zero(t_(row, c))) t_(r, c) -= f * t_(row, c);
    }
    basis_[row] = col;
  }

  // Move artificial variables that sit at zero out of the basis where possible.
  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!is_zero(t_(r, j)) && !is_basic(j)) {
          pivot(r, j);
          break;
        }
    }
  }

  Q objective(const std::vector<Q>& cost) const {
    Q v = Q(0);
    for (std::size_t r = 0; r < m_; ++r) v += cost[basis_[r]] * t_(r, rhs());
    return v;
  }

  std::vector<Q> primal() const {
    std::vector<Q> x(n_, Q(0));
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] < n_) x[basis_[r]] = t_(r, rhs());
    return x;
  }

  [[nodiscard]] std::size_t vars() const { return n_; }
  [[nodiscard]] std::size_t total_cols() const { return n_ + m_; }

 private:
  [[nodiscard]] std::size_t rhs() const { return n_ + m_; }
  [[nodiscard]] bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  std::size_t m_, n_;
  Matrix<Q> t_;
  std::vector<std::size_t> basis_;
};

template <class Q>
LpSolution solve_in(const LinearProgram& lp) {
  Tableau<Q> tab(lp);
  std::vector<Q> phase1(tab.total_cols(), Q(0));
  for (std::size_t j = tab.vars(); j < tab.total_cols(); ++j) phase1[j] = Q(-1);
  tab.optimize(phase1, tab.total_cols());
  LpSolution sol;
  if (sign_of(tab.objective(phase1)) < 0) {
    sol.status = LpStatus::kInfeasible;
    return sol;
  }
  tab.drive_out_artificials();
  std::vector<Q> phase2(tab.total_cols(), Q(0));
  for (std::size_t j = 0; j < lp.c.size(); ++j) phase2[j] = Q(lp.c[j]);
  sol.status = tab.optimize(phase2, tab.vars());
  if (sol.status == LpStatus::kOptimal) {
    sol.objective = to_big(tab.objective(phase2));
    for (const auto& v : tab.primal()) sol.x.push_back(to_big(v));
  }
  return sol;
}

}  // namespace

LpSolution solve(const LinearProgram& lp) {
  if (lp.a.size() != lp.b.size()) throw std::invalid_argument("lp: row count mismatch");
  for (const auto& row : lp.a)
    if (row.size() != lp.c.size()) throw std::invalid_argument("lp: column count mismatch");
  return with_exact_field([&]<class Q>() { return solve_in<Q>(lp); });
}

}  // namespace npc
