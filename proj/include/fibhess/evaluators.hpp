#ifndef FIBHESS_EVALUATORS_HPP
#define FIBHESS_EVALUATORS_HPP

#include "fibhess/hessenberg.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibhess {

/// Raised when a brute-force oracle is asked for an order above its cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Order caps for the brute-force oracles.
struct EvalBudget {
  std::size_t max_oracle_order = 10;     // Laplace expansion
  std::size_t max_permanent_order = 8;   // permutation sum
};

namespace detail {

enum class Signed { Det, Per };

// Walks the leading principal minors A_0 = 1, A_1, ..., A_n using
//   X(A_k) = a_kk X(A_{k-1}) + sum_{r<k} s(k-r) a_kr (prod_{j=r}^{k-1} a_{j,j+1}) X(A_{r-1})
// with s = (-1)^{k-r} for det and s = 1 for per. Rows are scanned for their
// nonzero strictly-lower entries, so a single band costs p superdiagonal
// multiplications per row.
template <Signed kind>
BivarPoly hessenberg_recursion(const HessenbergMatrix& a) {
  a.require_lower_hessenberg();
  const std::size_t n = a.order();
  std::vector<BivarPoly> minors;
  minors.reserve(n + 1);
  minors.emplace_back(1);

  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t row = k - 1;
    BivarPoly acc = a(row, row) * minors[row];

    std::size_t lowest = row;
    for (std::size_t c = 0; c < row; ++c) {
      if (!a(row, c).is_zero()) {
        lowest = c;
        break;
      }
    }

    BivarPoly super_product(1);
    for (std::size_t c = row; c-- > lowest;) {
      super_product *= a(c, c + 1);
      if (super_product.is_zero()) break;
      const BivarPoly& entry = a(row, c);
      if (entry.is_zero() || minors[c].is_zero()) continue;
      BivarPoly term = entry * super_product * minors[c];
      // (-1)^{k-r} with r = c + 1
      if (kind == Signed::Det && (row - c) % 2 == 1)
        acc -= term;
      else
        acc += term;
    }
    minors.push_back(std::move(acc));
  }
  return std::move(minors.back());
}

inline BivarPoly laplace_first_row(const HessenbergMatrix& a, std::size_t row, std::vector<std::size_t>& cols) {
  if (cols.empty()) return BivarPoly(1);
  BivarPoly total;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const BivarPoly& entry = a(row, cols[idx]);
    if (entry.is_zero()) continue;
    std::size_t col = cols[idx];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
    BivarPoly minor = laplace_first_row(a, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), col);
    if (minor.is_zero()) continue;
    BivarPoly term = entry * minor;
    if (idx % 2 == 1)
      total -= term;
    else
      total += term;
  }
  return total;
}

}  // namespace detail

/// Determinant of a lower-Hessenberg matrix via the leading-minor recursion.
/// Throws ShapeError if the matrix is not lower Hessenberg.
inline BivarPoly det_hessenberg(const HessenbergMatrix& a) {
  return detail::hessenberg_recursion<detail::Signed::Det>(a);
}

/// Permanent of a lower-Hessenberg matrix via the sign-free recursion.
inline BivarPoly per_hessenberg(const HessenbergMatrix& a) {
  return detail::hessenberg_recursion<detail::Signed::Per>(a);
}

/// Determinant by first-row cofactor expansion; ignores the Hessenberg shape.
inline BivarPoly det_oracle(const HessenbergMatrix& a, const EvalBudget& budget = {}) {
  if (a.order() > budget.max_oracle_order)
    throw BudgetExceeded("det_oracle: order " + std::to_string(a.order()) + " exceeds cap " +
                         std::to_string(budget.max_oracle_order));
  std::vector<std::size_t> cols(a.order());
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  return detail::laplace_first_row(a, 0, cols);
}

/// Permanent as the sum over all permutations of prod_i a(i, sigma(i)).
inline BivarPoly per_oracle(const HessenbergMatrix& a, const EvalBudget& budget = {}) {
  if (a.order() > budget.max_permanent_order)
    throw BudgetExceeded("per_oracle: order " + std::to_string(a.order()) + " exceeds cap " +
                         std::to_string(budget.max_permanent_order));
  const std::size_t n = a.order();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  BivarPoly total;
  do {
    BivarPoly term(1);
    for (std::size_t r = 0; r < n && !term.is_zero(); ++r) {
      const BivarPoly& entry = a(r, sigma[r]);
      if (entry.is_zero())
        term = BivarPoly();
      else
        term *= entry;
    }
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace fibhess

#endif  // FIBHESS_EVALUATORS_HPP
