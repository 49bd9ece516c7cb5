#include "splitquat/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "splitquat/fuzz.hpp"
#include "splitquat/literal.hpp"
#include "splitquat/oracle.hpp"
#include "splitquat/reduction.hpp"
#include "splitquat/serialize.hpp"
#include "splitquat/solver.hpp"
#include "splitquat/sqrt.hpp"

namespace splitquat {

namespace {

std::string g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string num17(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string paren(const SplitQuaternion& q) { return "(" + pretty_quaternion(q) + ")"; }

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SplitQuaternion literal(const std::string& flag, const std::string& text) {
  try {
    return parse_quaternion(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what() + " in \"" + text + "\"");
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Coeffs {
  std::string a = "0", b = "0", c = "0", file;

  void add(CLI::App* app) {
    app->add_option("--a", a, "leading coefficient literal");
    app->add_option("--b", b, "linear coefficient literal");
    app->add_option("--c", c, "constant coefficient literal");
  }
  EquationCoefficients get() const {
    if (!file.empty()) {
      try {
        return parse_equation(slurp(file));
      } catch (const FormatError& e) {
        throw UsageError(file + ": " + e.what());
      }
    }
    return {literal("--a", a), literal("--b", b), literal("--c", c)};
  }
};

void print_set(std::ostream& out, const CertifiedSolutionSet& s) {
  if (s.empty()) out << "no solution\n";
  for (std::size_t n = 0; n < s.components.size(); ++n) {
    const auto& r = s.report[n];
    out << "  [" << kind_name(s.components[n]) << "] " << describe(s.components[n]) << "\n"
        << "      max relative residual " << g(r.max_residual) << " over " << r.samples << " sample(s)";
    if (r.dropped) out << ", dropped (" << r.failed_condition.value_or("?") << ")";
    out << "\n";
  }
  if (!s.failed_conditions.empty()) {
    out << "failed conditions:";
    for (const auto& f : s.failed_conditions) out << " " << f;
    out << "\n";
  }
}

}  // namespace

std::string describe(const SolutionComponent& comp) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Point>) {
          return "x = " + pretty_quaternion(c.q);
        } else if constexpr (std::is_same_v<T, AffineLine>) {
          return "x = " + pretty_quaternion(c.base) + " + " + c.param + "·" + paren(c.dir);
        } else if constexpr (std::is_same_v<T, AffinePlane>) {
          return "x = " + pretty_quaternion(c.base) + " + " + c.param1 + "·" + paren(c.dir1) + " + " + c.param2 +
                 "·" + paren(c.dir2);
        } else if constexpr (std::is_same_v<T, QuadricFamily>) {
          return "x = " + g(c.x0) + " + x1·i + x2·j + x3·k with −x1² + x2² + x3² = " + g(c.level);
        } else if constexpr (std::is_same_v<T, TiltedPlanePair>) {
          return "x = " + g(c.offset) + " ± " + g(std::sqrt(std::max(0.0, -c.c0))) + " − (" + g(c.a2) + ")·x2 − (" +
                 g(c.a3) + ")·x3 + ((" + g(c.a2) + ")·x3 − (" + g(c.a3) + ")·x2)·i + x2·j + x3·k";
        } else if constexpr (std::is_same_v<T, ImplicitQuarticFamily>) {
          std::string params;
          for (const auto& p : parameter_names(SolutionComponent{c})) params += (params.empty() ? "" : ", ") + p;
          return "implicit family " + case_name(c.tag) + " in (" + params + "): a2=" + g(c.a2) + " a3=" + g(c.a3) +
                 " b1=" + g(c.b1) + " c0=" + g(c.c0) + " c1=" + g(c.c1) + " offset=" + g(c.offset);
        } else if constexpr (std::is_same_v<T, ParabolicCurve>) {
          return "x = " + g(c.offset) + " + x0 + x1·i + (" + g(c.q0) + " + (" + g(c.q1) + ")·x1)·j + (" + g(c.r0) +
                 " + (" + g(c.r1) + ")·x1)·k with x1 = " + g(c.p2) + "·x0² + (" + g(c.p1) + ")·x0 + (" + g(c.p0) +
                 ")";
        } else {
          return "every split quaternion";
        }
      },
      comp);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic equations a·x² + b·x + c = 0 over the split quaternions"};
  app.require_subcommand(1);

  bool json = false;
  double eps = 1e-9;
  double tol = 1e-8;
  std::uint64_t seed = 42;

  Coeffs solve_c;
  auto* solve_cmd = app.add_subcommand("solve", "closed-form solution set with residual certificates");
  solve_c.add(solve_cmd);
  solve_cmd->add_option("--file", solve_c.file, "JSON file {\"a\":[...],\"b\":[...],\"c\":[...]}");
  solve_cmd->add_flag("--json", json, "machine-readable output");
  solve_cmd->add_option("--eps", eps, "zero-classification tolerance")->check(CLI::PositiveNumber);

  std::string w = "0";
  auto* sqrt_cmd = app.add_subcommand("sqrt", "all square roots of w");
  sqrt_cmd->add_option("--w", w, "radicand literal")->required();
  sqrt_cmd->add_flag("--json", json, "machine-readable output");

  Coeffs verify_c;
  std::string x = "0";
  auto* verify_cmd = app.add_subcommand("verify", "residual of a candidate root");
  verify_c.add(verify_cmd);
  verify_cmd->add_option("--x", x, "candidate root literal")->required();
  verify_cmd->add_option("--tol", tol, "bound on the relative residual")->check(CLI::PositiveNumber);

  int trials = 1000;
  std::string type;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "planted-root recovery statistics");
  fuzz_cmd->add_option("--trials", trials, "trials per equation type")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--seed", seed, "mt19937_64 seed");
  fuzz_cmd->add_option("--type", type, "I, II, III or IV (default: all)")->check(CLI::IsMember({"I", "II", "III", "IV"}));

  Coeffs oracle_c;
  int starts = 256;
  auto* oracle_cmd = app.add_subcommand("oracle", "multistart numeric roots cross-checked against solve");
  oracle_c.add(oracle_cmd);
  oracle_cmd->add_option("--starts", starts, "number of random starts")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--seed", seed, "mt19937_64 seed");
  oracle_cmd->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*solve_cmd) {
      const auto [a, b, c] = solve_c.get();
      SolveConfig cfg;
      cfg.eps = eps;
      const auto s = solve(a, b, c, cfg);
      if (json) {
        out << to_json(s) << "\n";
      } else {
        const auto r = classify(a, b, c, eps);
        out << "equation: (" << pretty_quaternion(a) << ")x² + (" << pretty_quaternion(b) << ")x + ("
            << pretty_quaternion(c) << ") = 0\n"
            << "reduced form: " << to_string(r.kind) << ", shift " << g(r.shift) << "\n";
        print_set(out, s);
      }
      return s.empty() ? 2 : 0;
    }
    if (*sqrt_cmd) {
      const auto r = split_sqrt(literal("--w", w));
      if (json) {
        out << to_json(r) << "\n";
      } else {
        if (r.points.empty() && !r.quadric) out << "no square root\n";
        for (const auto& p : r.points) out << "  " << pretty_quaternion(p) << "\n";
        if (r.quadric) out << "  " << describe(*r.quadric) << "\n";
      }
      return 0;
    }
    if (*verify_cmd) {
      const auto [a, b, c] = verify_c.get();
      const SplitQuaternion xq = literal("--x", x);
      const double abs_r = residual(a, b, c, xq), rel = relative_residual(a, b, c, xq);
      out << "residual " << g(abs_r) << "\nrelative residual " << g(rel) << "\n";
      return rel <= tol ? 0 : 2;
    }
    if (*fuzz_cmd) {
      std::vector<FuzzType> types = {FuzzType::I, FuzzType::II, FuzzType::III, FuzzType::IV};
      if (!type.empty()) types = {*parse_fuzz_type(type)};
      bool pass = true;
      for (FuzzType t : types) {
        const FuzzStats st = run_fuzz(t, trials, seed);
        const bool ok = st.rate() >= 0.999 && st.max_residual <= 1e-8;
        pass = pass && ok;
        out << "type " << to_string(t) << ": recovered " << st.recovered << "/" << st.trials << " ("
            << std::setprecision(5) << 100.0 * st.rate() << "%), max distance " << g(st.max_distance)
            << ", max residual " << g(st.max_residual) << ", dropped components " << st.dropped_components
            << (ok ? "  PASS" : "  FAIL") << "\n";
        for (const auto& f : st.failures)
          out << "  miss trial " << f.trial << " [" << f.instance.variant << "] a=" << format_quaternion(f.instance.a)
              << " b=" << format_quaternion(f.instance.b) << " c=" << format_quaternion(f.instance.c)
              << " root=" << format_quaternion(f.instance.root) << " distance " << g(f.distance) << "\n";
      }
      return pass ? 0 : 2;
    }
    if (*oracle_cmd) {
      const auto [a, b, c] = oracle_c.get();
      OracleConfig ocfg;
      ocfg.starts = starts;
      ocfg.seed = seed;
      const auto roots = oracle_roots(a, b, c, ocfg);
      const auto s = solve(a, b, c);
      if (json) {
        out << "{\"roots\":[";
        for (std::size_t n = 0; n < roots.size(); ++n) {
          const double d = membership_distance(s, roots[n]);
          out << (n ? "," : "") << "{\"q\":[" << num17(roots[n].s0) << "," << num17(roots[n].s1) << ","
              << num17(roots[n].s2) << "," << num17(roots[n].s3) << "],\"distance\":" << num17(d) << "}";
        }
        out << "]}\n";
      } else {
        out << roots.size() << " oracle root(s)\n";
        for (const auto& r : roots)
          out << "  " << pretty_quaternion(r) << "   distance to solve(): " << g(membership_distance(s, r)) << "\n";
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace splitquat
