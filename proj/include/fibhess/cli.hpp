#ifndef FIBHESS_CLI_HPP
#define FIBHESS_CLI_HPP

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it in-process.

#include "fibhess/evaluators.hpp"
#include "fibhess/hessenberg.hpp"
#include "fibhess/json_io.hpp"
#include "fibhess/sequence.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace fibhess::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kBudgetExceeded = 3,
};

enum class Format { Text, Json };

inline const std::vector<std::string>& gen_methods() {
  static const std::vector<std::string> methods = {"recurrence", "det-w",        "det-m",       "per-h",
                                                   "per-k",      "oracle-det-w", "oracle-per-h"};
  return methods;
}

/// F_{p,n} by the named method. Matrix methods use order n-1 so every method
/// answers for the same index; order 0 is the empty matrix with value 1.
inline BivarPoly compute(int p, int n, const std::string& method, const EvalBudget& budget = {}) {
  if (p < 1) throw CLI::ValidationError("--p", "must be >= 1");
  if (n < 0) throw CLI::ValidationError("--n", "must be >= 0");
  const auto& methods = gen_methods();
  if (std::find(methods.begin(), methods.end(), method) == methods.end())
    throw CLI::ValidationError("--method", "unknown method '" + method + "'");
  if (method == "recurrence") return f_poly({p, n});
  if (n == 0) throw CLI::ValidationError("--n", "matrix methods need n >= 1 (order n-1)");
  if (n == 1) return BivarPoly(1);
  const int order = n - 1;
  if (method == "det-w") return det_hessenberg(build_W(p, order));
  if (method == "det-m") return det_hessenberg(build_M(p, order));
  if (method == "per-h") return per_hessenberg(build_H(p, order));
  if (method == "per-k") return per_hessenberg(build_K(p, order));
  if (method == "oracle-det-w") return det_oracle(build_W(p, order), budget);
  return per_oracle(build_H(p, order), budget);
}

inline void emit(std::ostream& out, Format fmt, const OutputRecord& rec) {
  if (fmt == Format::Json)
    out << to_json(rec).dump() << '\n';
  else
    out << rec.poly.to_string() << '\n';
}

/// Runs cross_check over 1..p_max x 1..n_max on a few worker threads.
/// Reports come back ordered by (p, n).
inline std::vector<CrossCheckReport> check_grid(int p_max, int n_max, const MatrixBuilders& builders = {},
                                                unsigned workers = std::max(1u, std::thread::hardware_concurrency())) {
  const std::size_t total = static_cast<std::size_t>(p_max) * static_cast<std::size_t>(n_max);
  std::vector<CrossCheckReport> reports(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t idx; (idx = next.fetch_add(1)) < total;) {
      int p = static_cast<int>(idx / static_cast<std::size_t>(n_max)) + 1;
      int n = static_cast<int>(idx % static_cast<std::size_t>(n_max)) + 1;
      try {
        reports[idx] = cross_check(p, n, builders);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = total;
      }
    }
  };
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

inline int run_check(int p_max, int n_max, Format fmt, std::ostream& out, const MatrixBuilders& builders = {}) {
  if (p_max < 1) throw CLI::ValidationError("--p-max", "must be >= 1");
  if (n_max < 1) throw CLI::ValidationError("--n-max", "must be >= 1");
  const auto reports = check_grid(p_max, n_max, builders);
  std::size_t passed = 0;
  const CrossCheckReport* first_bad = nullptr;
  for (const auto& rep : reports) {
    if (rep.all_equal)
      ++passed;
    else if (!first_bad)
      first_bad = &rep;
    if (fmt == Format::Json) out << to_json(rep).dump() << '\n';
  }
  if (fmt == Format::Json) {
    json summary = {{"checks", reports.size()}, {"passed", passed}, {"first_mismatch", nullptr}};
    if (first_bad)
      summary["first_mismatch"] = {{"p", first_bad->p},
                                   {"n", first_bad->n},
                                   {"routes", {route_name(first_bad->first_mismatch->first),
                                               route_name(first_bad->first_mismatch->second)}}};
    out << summary.dump() << '\n';
  } else {
    out << reports.size() << (reports.size() == 1 ? " check, " : " checks, ") << passed << " passed\n";
    if (first_bad)
      out << "first mismatch at p=" << first_bad->p << " n=" << first_bad->n << ": "
          << route_name(first_bad->first_mismatch->first) << " vs " << route_name(first_bad->first_mismatch->second)
          << '\n';
  }
  return first_bad ? kCheckFailed : kSuccess;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               const MatrixBuilders& builders = {}) {
  CLI::App app{"Generalized bivariate Fibonacci p-polynomials via recurrences and Hessenberg matrices", "fibhess"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
  Format fmt = Format::Text;

  int p = 1;
  int n = 0;
  std::string method = "recurrence";
  auto* gen = app.add_subcommand("gen", "Compute F_{p,n}(x,y) by one route");
  gen->add_option("--p", p, "Band offset p >= 1")->required();
  gen->add_option("--n", n, "Index n >= 0")->required();
  gen->add_option("--method", method, "Computation route")->check(CLI::IsMember(gen_methods()));
  gen->add_option("--format", fmt, "text or json")->transform(CLI::CheckedTransformer(formats));

  std::string family_name;
  std::optional<int> family_p_opt;
  auto* family = app.add_subcommand("family", "Evaluate a named specialization");
  family->add_option("--name", family_name, "Family name")->required();
  family->add_option("--n", n, "Index n >= 0")->required();
  family->add_option("--p", family_p_opt, "p for p-parameterized families");
  family->add_option("--format", fmt, "text or json")->transform(CLI::CheckedTransformer(formats));

  int p_max = 1;
  int n_max = 1;
  auto* check = app.add_subcommand("check", "Cross-check all five routes over a grid");
  check->add_option("--p-max", p_max, "Largest p")->required();
  check->add_option("--n-max", n_max, "Largest matrix order")->required();
  check->add_option("--format", fmt, "text or json")->transform(CLI::CheckedTransformer(formats));

  std::string kind_str;
  int order = 1;
  auto* matrix = app.add_subcommand("matrix", "Print one of the W, M, H, K matrices");
  matrix->add_option("--kind", kind_str, "w, m, h or k")->required()->check(CLI::IsMember({"w", "m", "h", "k"}));
  matrix->add_option("--p", p, "Band offset p >= 1")->required();
  matrix->add_option("--order", order, "Matrix order >= 1")->required();
  matrix->add_option("--format", fmt, "text or json")->transform(CLI::CheckedTransformer(formats));

  try {
    app.parse(argc, argv);

    if (*gen) {
      emit(out, fmt, {p, n, method, compute(p, n, method)});
      return kSuccess;
    }
    if (*family) {
      const FamilySpec* spec = nullptr;
      try {
        spec = &find_family(family_name);
      } catch (const UnknownFamily& e) {
        err << e.what() << '\n';
        return kUsage;
      }
      if (n < 0) throw CLI::ValidationError("--n", "must be >= 0");
      const int eff_p = family_p(*spec, family_p_opt);
      if (eff_p < 1) throw CLI::ValidationError("--p", "must be >= 1");
      emit(out, fmt, {eff_p, n, spec->name, family_value(*spec, n, eff_p)});
      return kSuccess;
    }
    if (*check) return run_check(p_max, n_max, fmt, out, builders);
    if (*matrix) {
      const MatrixKind kind = kind_str == "w"   ? MatrixKind::W
                              : kind_str == "m" ? MatrixKind::M
                              : kind_str == "h" ? MatrixKind::H
                                                : MatrixKind::K;
      const HessenbergMatrix a = build(kind, p, order);
      if (fmt == Format::Json)
        out << json{{"kind", kind_name(kind)}, {"p", p}, {"order", order}, {"rows", matrix_to_json(a)}}.dump() << '\n';
      else
        out << a.to_string();
      return kSuccess;
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const MatrixBuilders& builders = {}) {
  std::vector<const char*> argv{"fibhess"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err, builders);
}

}  // namespace fibhess::cli

#endif  // FIBHESS_CLI_HPP
