#include "cli_app.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "schwartz/calculus.hpp"
#include "schwartz/dsl.hpp"
#include "schwartz/seminorm.hpp"
#include "schwartz/verify.hpp"

namespace schwartz::cli {

namespace {

using Json = nlohmann::ordered_json;

// Adding +0.0 turns a signed zero into 0.
Json complex_json(Complex z) { return Json::array({z.real() + 0.0, z.imag() + 0.0}); }

Json vector_json(const RealVector& v) {
  Json a = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) a.push_back(v[k]);
  return a;
}

struct CliFailure {
  int code;
  std::string kind;
  std::string message;
  int line = 0;
  int column = 0;
};

SchwartzFunction function_from(const std::string& src) {
  dsl::Value v = dsl::evaluate_source(src);
  if (auto* f = std::get_if<SchwartzFunction>(&v)) return *f;
  throw dsl::TypeError("expected a function expression, found a distribution", {});
}

TemperedDistribution distribution_from(const std::string& src) {
  dsl::Value v = dsl::evaluate_source(src);
  if (auto* d = std::get_if<TemperedDistribution>(&v)) return *d;
  throw dsl::TypeError("expected a distribution expression, found a function", {});
}

/// Rows of a DSL array literal, one point per row.
std::vector<RealVector> points_from(const std::string& src, std::size_t dimension) {
  const dsl::Expression e = dsl::parse(src);
  if (e->kind != dsl::Kind::Array) throw dsl::TypeError("--at expects an array literal", e->pos);
  if (!e->array.imag().isZero(0.0)) throw dsl::TypeError("--at points must be real", e->pos);
  const RealMatrix rows = e->array.real();
  if (static_cast<std::size_t>(rows.cols()) != dimension) {
    throw dsl::TypeError("--at points must have " + std::to_string(dimension) + " coordinates per row", e->pos);
  }
  std::vector<RealVector> out;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) out.emplace_back(rows.row(i).transpose());
  return out;
}

MultiIndex index_from(const std::string& src, std::size_t dimension, const char* flag) {
  if (src.empty()) return MultiIndex::zero(dimension);
  const dsl::Expression e = dsl::parse(src);
  if (e->kind != dsl::Kind::Array || (e->array.rows() != 1 && e->array.cols() != 1)) {
    throw dsl::TypeError(std::string(flag) + " expects a multi-index like [1, 0]", e->pos);
  }
  std::vector<int> ex;
  for (Eigen::Index k = 0; k < e->array.size(); ++k) {
    const Complex v = e->array.data()[k];
    if (v.imag() != 0.0 || v.real() < 0.0 || v.real() != std::floor(v.real()) || v.real() > 1e6) {
      throw dsl::TypeError(std::string(flag) + " entries must be non-negative integers", e->pos);
    }
    ex.push_back(static_cast<int>(v.real()));
  }
  if (ex.size() != dimension) {
    throw dsl::TypeError(std::string(flag) + " must have " + std::to_string(dimension) + " entries", e->pos);
  }
  return MultiIndex(std::move(ex));
}

Json eval_report(const std::string& expr, const std::vector<std::string>& at) {
  const dsl::Value v = dsl::evaluate_source(expr);
  Json report;
  const bool is_function = std::holds_alternative<SchwartzFunction>(v);
  const std::size_t n =
      is_function ? std::get<SchwartzFunction>(v).dimension() : std::get<TemperedDistribution>(v).dimension();
  report["kind"] = is_function ? "function" : "distribution";
  report["dimension"] = n;
  report["canonical"] = dsl::format(v);
  if (!at.empty()) {
    if (!is_function) throw dsl::TypeError("--at requires a function expression", {});
    const auto& f = std::get<SchwartzFunction>(v);
    Json values = Json::array();
    for (const auto& src : at) {
      for (const auto& x : points_from(src, n)) {
        values.push_back(Json{{"at", vector_json(x)}, {"value", complex_json(evaluate(f, x))}});
      }
    }
    report["values"] = std::move(values);
  }
  return report;
}

Json seminorm_report(const std::string& expr, const std::string& alpha, const std::string& beta) {
  const SchwartzFunction f = function_from(expr);
  const SeminormIndex idx(index_from(alpha, f.dimension(), "--alpha"), index_from(beta, f.dimension(), "--beta"));
  const SeminormResult r = seminorm(f, idx);
  return Json{{"value", r.value},
              {"witness", vector_json(r.witness)},
              {"tail_radius", r.tail_radius},
              {"tail_bound", r.tail_bound}};
}

Json pair_report(const std::string& dist, const std::string& func) {
  return Json{{"value", complex_json(pair(distribution_from(dist), function_from(func)))}};
}

std::string format_sample(Real x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_samples(const std::string& expr, Real box, int points, const std::string& path, std::ostream& out) {
  const SchwartzFunction f = function_from(expr);
  if (points < 1) throw dsl::TypeError("--points must be positive", {});
  if (!(box > 0.0)) throw dsl::TypeError("--box must be positive", {});
  std::ofstream file;
  std::ostream* os = &out;
  if (path != "-") {
    file.open(path);
    if (!file) throw CliFailure{kIoError, "io", "cannot open '" + path + "' for writing"};
    os = &file;
  }
  const std::size_t n = f.dimension();
  for (std::size_t j = 1; j <= n; ++j) *os << "x_" << j << ",";
  *os << "re,im\n";
  const FunctionEvaluator eval(f);
  const Real step = points > 1 ? 2.0 * box / (points - 1) : 0.0;
  std::vector<int> counter(n, 0);
  RealVector x(static_cast<Eigen::Index>(n));
  while (true) {
    for (std::size_t j = 0; j < n; ++j) {
      x[static_cast<Eigen::Index>(j)] = points > 1 ? -box + step * counter[j] : 0.0;
      *os << format_sample(x[static_cast<Eigen::Index>(j)]) << ",";
    }
    const Complex v = eval(x);
    *os << format_sample(v.real()) << "," << format_sample(v.imag()) << "\n";
    std::size_t j = n;
    bool done = true;
    while (j > 0) {
      --j;
      if (++counter[j] < points) {
        done = false;
        break;
      }
      counter[j] = 0;
    }
    if (done) break;
  }
  os->flush();
  if (!*os) throw CliFailure{kIoError, "io", "failed writing '" + path + "'"};
}

Json verify_report(const std::string& suite, std::uint64_t seed, bool& passed) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = verify::suite_names();
  } else {
    const auto& known = verify::suite_names();
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
      throw CliFailure{kUsageError, "usage", "unknown suite '" + suite + "'"};
    }
    names = {suite};
  }
  Json suites = Json::array();
  passed = true;
  for (const auto& name : names) {
    const verify::SuiteResult s = verify::run_suite(name, seed);
    Json props = Json::array();
    for (const auto& p : s.properties) {
      props.push_back(Json{{"name", p.name},
                           {"passed", p.passed},
                           {"cases", p.cases},
                           {"worst", p.worst},
                           {"tolerance", p.tolerance}});
    }
    suites.push_back(Json{{"name", s.name}, {"passed", s.passed()}, {"properties", std::move(props)}});
    passed = passed && s.passed();
  }
  return Json{{"suite", suite}, {"seed", seed}, {"passed", passed}, {"suites", std::move(suites)}};
}

int report_failure(const CliFailure& f, std::ostream& out, std::ostream& err) {
  Json e{{"kind", f.kind}, {"message", f.message}};
  if (f.line > 0) {
    e["line"] = f.line;
    e["column"] = f.column;
  }
  out << Json{{"error", e}}.dump() << "\n";
  err << "error: " << f.message << "\n";
  return f.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculus on Gaussian-atom Schwartz functions and tempered distributions", "schwartz-cli"};
  app.require_subcommand(1);

  std::string expr, dist_expr, out_path, suite;
  std::vector<std::string> at;
  std::string alpha, beta;
  Real box = 3.0;
  int points = 101;
  std::uint64_t seed = 7;

  auto* eval_cmd = app.add_subcommand("eval", "Canonical form and point values of an expression");
  eval_cmd->add_option("expr", expr, "DSL expression")->required()->allow_extra_args(false);
  eval_cmd->add_option("--at", at, "Evaluation points, one per array row, e.g. \"[0; 0.5]\"")->allow_extra_args(false);

  auto* semi_cmd = app.add_subcommand("seminorm", "sup |x^alpha d^beta f|");
  semi_cmd->add_option("expr", expr, "DSL function expression")->required()->allow_extra_args(false);
  semi_cmd->add_option("--alpha", alpha, "Monomial multi-index, default zero")->allow_extra_args(false);
  semi_cmd->add_option("--beta", beta, "Derivative multi-index, default zero")->allow_extra_args(false);

  auto* pair_cmd = app.add_subcommand("pair", "Pair a distribution with a test function");
  pair_cmd->add_option("dist", dist_expr, "DSL distribution expression")->required()->allow_extra_args(false);
  pair_cmd->add_option("func", expr, "DSL function expression")->required()->allow_extra_args(false);

  auto* sample_cmd = app.add_subcommand("sample", "Write a CSV grid of values");
  sample_cmd->add_option("expr", expr, "DSL function expression")->required()->allow_extra_args(false);
  sample_cmd->add_option("--box", box, "Half-width of the sampling cube");
  sample_cmd->add_option("--points", points, "Points per axis");
  sample_cmd->add_option("--out", out_path, "Output CSV path ('-' for standard output)")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  std::string suite_flag;
  verify_cmd->add_option("SUITE", suite, "roundtrip, convolution, exchange, oracle, seminorm, duality or all");
  verify_cmd->add_option("--suite", suite_flag, "Same as the positional suite name");
  verify_cmd->add_option("--seed", seed, "Seed for the random corpora");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    return report_failure({kUsageError, "usage", e.what()}, out, err);
  }

  try {
    if (eval_cmd->parsed()) {
      out << eval_report(expr, at).dump() << "\n";
    } else if (semi_cmd->parsed()) {
      out << seminorm_report(expr, alpha, beta).dump() << "\n";
    } else if (pair_cmd->parsed()) {
      out << pair_report(dist_expr, expr).dump() << "\n";
    } else if (sample_cmd->parsed()) {
      write_samples(expr, box, points, out_path, out);
    } else if (verify_cmd->parsed()) {
      if (suite.empty()) suite = suite_flag;
      if (suite.empty()) throw CliFailure{kUsageError, "usage", "verify needs a suite name"};
      bool passed = false;
      out << verify_report(suite, seed, passed).dump(2) << "\n";
      return passed ? kSuccess : kVerificationFailed;
    }
  } catch (const CliFailure& f) {
    return report_failure(f, out, err);
  } catch (const dsl::ParseError& e) {
    return report_failure({kUsageError, "parse", e.what(), e.position().line, e.position().column}, out, err);
  } catch (const dsl::TypeError& e) {
    return report_failure({kUsageError, "type", e.what(), e.position().line, e.position().column}, out, err);
  } catch (const DimensionError& e) {
    return report_failure({kUsageError, "dimension", e.what()}, out, err);
  } catch (const DomainError& e) {
    return report_failure({kNumericError, "domain", e.what()}, out, err);
  } catch (const Error& e) {
    return report_failure({kNumericError, "numeric", e.what()}, out, err);
  }
  return kSuccess;
}

}  // namespace schwartz::cli
