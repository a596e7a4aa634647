#include "npc/linalg.hpp"

namespace npc {

std::size_t exact_rank(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  if (rows.empty() || cols == 0) return 0;
  return with_exact_field([&]<class Q>() { return rank(Matrix<Q>::from_integers(rows, cols)); });
}

std::size_t cohomology_dimension(const CochainDegree& deg) {
  const std::size_t r_out = exact_rank(deg.d_out, deg.dim_cur);
  const std::size_t r_in = exact_rank(deg.d_in, deg.dim_prev);
  return deg.dim_cur - r_out - r_in;
}

std::size_t induced_rank(const CochainDegree& source, const CochainDegree& target,
                         const std::vector<std::vector<std::int64_t>>& f) {
  if (source.dim_cur == 0 || target.dim_cur == 0) return 0;
  return with_exact_field([&]<class Q>() -> std::size_t {
    // Cocycles of the source.
    Matrix<Q> cocycles;
    if (source.dim_next == 0 || source.d_out.empty()) {
      cocycles = Matrix<Q>(source.dim_cur, source.dim_cur);
      for (std::size_t i = 0; i < source.dim_cur; ++i) cocycles(i, i) = Q(1);
    } else {
      cocycles = nullspace(Matrix<Q>::from_integers(source.d_out, source.dim_cur));
    }
    if (cocycles.cols() == 0) return 0;
    const Matrix<Q> image = multiply(Matrix<Q>::from_integers(f, source.dim_cur), cocycles);
    Matrix<Q> boundaries(target.dim_cur, 0);
    if (target.dim_prev > 0 && !target.d_in.empty())
      boundaries = Matrix<Q>::from_integers(target.d_in, target.dim_prev);
    const std::size_t base = boundaries.cols() == 0 ? 0 : rank(boundaries);
    return rank(hconcat(boundaries, image)) - base;
  });
}

}  // namespace npc
