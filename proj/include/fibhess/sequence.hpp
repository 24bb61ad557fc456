#ifndef FIBHESS_SEQUENCE_HPP
#define FIBHESS_SEQUENCE_HPP

#include "fibhess/evaluators.hpp"
#include "fibhess/hessenberg.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibhess {

struct SequenceParams {
  int p = 1;
  int n = 0;
};

/// F_{p,0}, ..., F_{p,n} with F_{p,0} = 0, F_{p,m} = x^{m-1} for 1 <= m <= p,
/// and F_{p,m} = x F_{p,m-1} + y F_{p,m-p-1} for m > p.
inline std::vector<BivarPoly> f_poly_prefix(int p, int n) {
  if (p < 1) throw std::invalid_argument("f_poly: p must be >= 1");
  if (n < 0) throw std::invalid_argument("f_poly: n must be >= 0");
  const BivarPoly x = BivarPoly::x();
  const BivarPoly y = BivarPoly::y();
  std::vector<BivarPoly> seq;
  seq.reserve(static_cast<std::size_t>(n) + 1);
  seq.emplace_back();
  for (int m = 1; m <= n; ++m) {
    if (m <= p)
      seq.push_back(BivarPoly::monomial({static_cast<std::uint32_t>(m - 1), 0}));
    else
      seq.push_back(x * seq[m - 1] + y * seq[m - p - 1]);
  }
  return seq;
}

inline BivarPoly f_poly(SequenceParams params) {
  return std::move(f_poly_prefix(params.p, params.n).back());
}

/// Fibonacci p-number: p+1 leading ones, then F_p(n) = F_p(n-1) + F_p(n-p-1).
inline BigInt fib_p_number(int p, int n) {
  if (p < 1) throw std::invalid_argument("fib_p_number: p must be >= 1");
  if (n < 1) throw std::invalid_argument("fib_p_number: n must be >= 1");
  std::vector<BigInt> seq(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) seq[m] = m <= p + 1 ? BigInt(1) : seq[m - 1] + seq[m - p - 1];
  return seq[n];
}

class UnknownFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A named substitution into F_{p,n}: family(n) = F_{p,n+index_offset}(xsub, ysub).
/// `p` is empty when the family is parameterized by p.
struct FamilySpec {
  std::string name;
  std::string description;
  BivarPoly xsub;
  BivarPoly ysub;
  std::optional<int> p;
  int index_offset = 0;
};

inline const std::vector<FamilySpec>& builtin_families() {
  static const std::vector<FamilySpec> families = [] {
    const BivarPoly x = BivarPoly::x();
    const BivarPoly y = BivarPoly::y();
    const BivarPoly two_x = x.scaled(2);
    const BivarPoly two_y = y.scaled(2);
    const BivarPoly one(1);
    return std::vector<FamilySpec>{
        {"fibonacci-bivariate-p", "generalized bivariate Fibonacci p-polynomials F_{p,n}(x,y)", x, y, std::nullopt, 0},
        {"fibonacci-bivariate", "bivariate Fibonacci polynomials F_n(x,y)", x, y, 1, 0},
        {"fibonacci-p-poly", "Fibonacci p-polynomials F_{p,n}(x)", x, one, std::nullopt, 0},
        {"fibonacci-poly", "Fibonacci polynomials f_n(x)", x, one, 1, 0},
        {"fibonacci-p-numbers", "Fibonacci p-numbers F_p(n)", one, one, std::nullopt, 0},
        {"fibonacci-numbers", "Fibonacci numbers F_n", one, one, 1, 0},
        {"pell-bivariate-p", "bivariate Pell p-polynomials F_{p,n}(2x,y)", two_x, y, std::nullopt, 0},
        {"pell-bivariate", "bivariate Pell polynomials F_n(2x,y)", two_x, y, 1, 0},
        {"pell-p-poly", "Pell p-polynomials P_{p,n}(x)", two_x, one, std::nullopt, 0},
        {"pell-poly", "Pell polynomials P_n(x)", two_x, one, 1, 0},
        {"pell-numbers", "Pell numbers P_n", BivarPoly(2), one, 1, 0},
        {"chebyshev-U", "Chebyshev polynomials of the second kind U_n(x)", two_x, BivarPoly(-1), 1, 1},
        {"jacobsthal-bivariate-p", "bivariate Jacobsthal p-polynomials F_{p,n}(x,2y)", x, two_y, std::nullopt, 0},
        {"jacobsthal-bivariate", "bivariate Jacobsthal polynomials F_n(x,2y)", x, two_y, 1, 0},
        {"jacobsthal-poly", "Jacobsthal polynomials J_n(y)", one, two_y, 1, 0},
        {"jacobsthal-numbers", "Jacobsthal numbers J_n", one, BivarPoly(2), 1, 0},
    };
  }();
  return families;
}

inline std::string family_names() {
  std::string out;
  for (const auto& f : builtin_families()) {
    if (!out.empty()) out += ", ";
    out += f.name;
  }
  return out;
}

inline const FamilySpec& find_family(std::string_view name) {
  for (const auto& f : builtin_families())
    if (f.name == name) return f;
  throw UnknownFamily("unknown family '" + std::string(name) + "'; available: " + family_names());
}

/// Effective p for a family. Fixed-p families reject a conflicting override;
/// p-parameterized families require one.
inline int family_p(const FamilySpec& spec, std::optional<int> p_override) {
  if (spec.p) {
    if (p_override && *p_override != *spec.p)
      throw std::invalid_argument("family '" + spec.name + "' fixes p = " + std::to_string(*spec.p));
    return *spec.p;
  }
  if (!p_override) throw std::invalid_argument("family '" + spec.name + "' requires p");
  return *p_override;
}

inline BivarPoly family_value(const FamilySpec& spec, int n, std::optional<int> p_override = std::nullopt) {
  if (n < 0) throw std::invalid_argument("family_value: n must be >= 0");
  const int p = family_p(spec, p_override);
  return substitute(f_poly({p, n + spec.index_offset}), spec.xsub, spec.ysub);
}

inline BivarPoly family_value(std::string_view name, int n, std::optional<int> p_override = std::nullopt) {
  return family_value(find_family(name), n, p_override);
}

/// The five ways of computing F_{p,n+1}.
enum class Route { Recurrence, DetW, DetM, PerH, PerK };

inline constexpr std::array<Route, 5> kAllRoutes = {Route::Recurrence, Route::DetW, Route::DetM, Route::PerH,
                                                    Route::PerK};

inline const char* route_name(Route r) {
  switch (r) {
    case Route::Recurrence: return "recurrence";
    case Route::DetW: return "det-w";
    case Route::DetM: return "det-m";
    case Route::PerH: return "per-h";
    case Route::PerK: return "per-k";
  }
  return "?";
}

/// Matrix builders used by cross_check; replaceable so a harness can inject
/// a faulty builder.
struct MatrixBuilders {
  std::function<HessenbergMatrix(int, int)> w = build_W;
  std::function<HessenbergMatrix(int, int)> m = build_M;
  std::function<HessenbergMatrix(int, int)> h = build_H;
  std::function<HessenbergMatrix(int, int)> k = build_K;
};

struct CrossCheckReport {
  int p = 0;
  int n = 0;
  std::array<BivarPoly, 5> values;
  bool all_equal = false;
  std::optional<std::pair<Route, Route>> first_mismatch;

  const BivarPoly& value(Route r) const { return values[static_cast<std::size_t>(r)]; }
};

/// Computes F_{p,n+1} by the recurrence and by det W, det M, per H, per K of
/// order n, and compares them.
inline CrossCheckReport cross_check(int p, int n, const MatrixBuilders& builders = {}) {
  if (n < 1) throw std::invalid_argument("cross_check: n must be >= 1");
  CrossCheckReport rep;
  rep.p = p;
  rep.n = n;
  rep.values[0] = f_poly({p, n + 1});
  rep.values[1] = det_hessenberg(builders.w(p, n));
  rep.values[2] = det_hessenberg(builders.m(p, n));
  rep.values[3] = per_hessenberg(builders.h(p, n));
  rep.values[4] = per_hessenberg(builders.k(p, n));
  for (std::size_t i = 1; i < rep.values.size() && !rep.first_mismatch; ++i)
    if (!(rep.values[i] == rep.values[0])) rep.first_mismatch = std::pair{kAllRoutes[0], kAllRoutes[i]};
  rep.all_equal = !rep.first_mismatch;
  return rep;
}

}  // namespace fibhess

#endif  // FIBHESS_SEQUENCE_HPP
