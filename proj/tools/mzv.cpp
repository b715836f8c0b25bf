#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "mzv/ihara.hpp"
#include "mzv/matrix.hpp"
#include "mzv/period.hpp"
#include "mzv/report.hpp"
#include "mzv/tasaka.hpp"
#include "mzv/verify.hpp"
#include "mzv/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// Output sink: stdout by default, a file when --out is given.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::ios_base::failure("cannot open output file: " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int run_period(long weight, const std::string& out) {
  Sink sink(out);
  const mzv::PeriodBasis basis = mzv::period_space(weight);
  sink.stream() << "element,s,t,coefficient\n";
  for (std::size_t i = 0; i < basis.elements.size(); ++i)
    for (const auto& [st, c] : basis.elements[i].coefficients())
      sink.stream() << i << ',' << st.first << ',' << st.second << ',' << c.str() << '\n';
  return kExitOk;
}

int run_matrix(const std::string& kind, long weight, long depth, const std::string& out) {
  const mzv::TasakaMatrix* m = nullptr;
  if (kind == "E") {
    m = &mzv::cached_matrix(weight, depth, mzv::MatrixKind::E);
  } else if (kind == "C") {
    m = &mzv::cached_matrix(weight, depth, mzv::MatrixKind::C);
  } else if (kind.size() > 1 && kind[0] == 'E') {
    long super = 0;
    try {
      super = std::stol(kind.substr(1));
    } catch (const std::exception&) {
      std::cerr << "unknown matrix kind '" << kind << "'\n";
      return kExitUsage;
    }
    if (super < 2 || super > depth - 1) {
      std::cerr << "shifted kind E" << super << " needs 2 <= " << super << " <= depth-1\n";
      return kExitUsage;
    }
    m = &mzv::cached_matrix(weight, depth, mzv::MatrixKind::E_shifted, depth - super);
  } else {
    std::cerr << "unknown matrix kind '" << kind << "' (expected E, C or E<i>)\n";
    return kExitUsage;
  }
  Sink sink(out);
  mzv::write_matrix_csv(sink.stream(), m->matrix, m->labels());
  return kExitOk;
}

int run_wspace(long weight, long depth, const std::string& out) {
  const mzv::WSpace w = mzv::w_space(weight, depth);
  std::vector<std::string> labels;
  for (const auto& c : mzv::enumerate_compositions(weight, depth)) labels.push_back(c.label());
  Sink sink(out);
  mzv::write_matrix_csv(sink.stream(), w.subspace.basis(), labels);
  return kExitOk;
}

int run_verify(std::vector<std::string> suites, long max_weight, const std::string& format,
               const std::string& out) {
  if (suites.empty()) suites = {"depth2", "depth3", "lie", "bk"};
  std::vector<mzv::CheckResult> results;
  for (const std::string& suite : suites) {
    if (suite == "depth2") {
      auto r = mzv::verify_depth2(max_weight > 0 ? max_weight : 30);
      results.insert(results.end(), r.begin(), r.end());
    } else if (suite == "depth3") {
      auto r = mzv::verify_depth3(max_weight > 0 ? max_weight : 27);
      results.insert(results.end(), r.begin(), r.end());
    } else if (suite == "lie") {
      auto r = mzv::verify_lie(max_weight > 0 ? max_weight : 18);
      results.insert(results.end(), r.begin(), r.end());
    } else if (suite == "bk") {
      auto table = mzv::bk_table(max_weight > 0 ? max_weight : 20, 4);
      results.insert(results.end(), table.checks.begin(), table.checks.end());
    } else {
      std::cerr << "unknown suite '" << suite << "' (expected depth2, depth3, lie or bk)\n";
      return kExitUsage;
    }
  }
  Sink sink(out);
  if (format == "json")
    mzv::write_report_json(sink.stream(), results);
  else
    mzv::write_report_csv(sink.stream(), results);
  for (const mzv::CheckResult* v : mzv::violated_conjectures(results))
    std::cerr << "CONJECTURE_VIOLATED: " << v->check_id << " N=" << v->weight
              << " r=" << v->depth << " lhs=" << v->lhs << " rhs=" << v->rhs << '\n';
  return mzv::has_failure(results) ? kExitVerifyFail : kExitOk;
}

int run_bk(long max_weight, long max_depth, const std::string& series, const std::string& out) {
  Sink sink(out);
  const auto nx = static_cast<std::size_t>(max_weight);
  const auto ny = static_cast<std::size_t>(max_depth);
  if (series.empty()) {
    mzv::write_bk_csv(sink.stream(), mzv::bk_table(max_weight, max_depth));
  } else if (series == "bk") {
    mzv::write_series_csv(sink.stream(), mzv::bk_series(nx, ny));
  } else if (series == "uneven") {
    mzv::write_series_csv(sink.stream(), mzv::uneven_bk_series(nx, ny));
  } else if (series == "a") {
    mzv::write_series_csv(sink.stream(), mzv::graded_a_series(nx, ny));
  } else {
    std::cerr << "unknown series '" << series << "' (expected bk, uneven or a)\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run_product(const std::vector<long>& factors, bool as_bracket, const std::string& out) {
  if (factors.size() < 2) {
    std::cerr << "product needs at least two factors\n";
    return kExitUsage;
  }
  for (long f : factors)
    if (f < 3 || f % 2 == 0) {
      std::cerr << "factors must be odd and >= 3\n";
      return kExitUsage;
    }
  Sink sink(out);
  if (as_bracket) {
    mzv::BracketWord b = mzv::BracketWord::leaf(static_cast<int>(factors[0]));
    for (std::size_t i = 1; i < factors.size(); ++i)
      b = mzv::BracketWord::bracket(b, mzv::BracketWord::leaf(static_cast<int>(factors[i])));
    sink.stream() << mzv::evaluate_bracket(b).poly.str() << '\n';
  } else {
    mzv::DepthGradedElement acc = mzv::sigma_element(factors.back());
    for (std::size_t i = factors.size() - 1; i-- > 0;)
      acc = mzv::circle_product(mzv::sigma_element(factors[i]), acc);
    sink.stream() << acc.poly.str() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact linear algebra for depth-graded multiple zeta value structures"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Optional key=value config file; command line flags win");

  std::string out;
  long weight = 12, depth = 2, max_weight = 0, max_depth = 6;
  std::string kind = "E", format = "csv";
  std::vector<std::string> suites;
  std::vector<long> factors;
  bool as_bracket = false;

  CLI::App* period = app.add_subcommand("period", "Basis of restricted even period polynomials as (s,t,coefficient) CSV");
  period->add_option("--weight", weight, "Weight N")->required()->check(CLI::Range(1L, 200L));

  CLI::App* matrix = app.add_subcommand("matrix", "Dump E, E<i> or C as CSV over the composition ordering");
  matrix->add_option("--kind", kind, "E, C, or E<i> for the shifted matrix with superscript i")->required();
  matrix->add_option("--weight", weight, "Weight N")->required()->check(CLI::Range(1L, 200L));
  matrix->add_option("--depth", depth, "Depth r")->required()->check(CLI::Range(1L, 8L));

  CLI::App* wspace = app.add_subcommand("wspace", "Basis of W_{N,r} as CSV rows over the composition ordering");
  wspace->add_option("--weight", weight, "Weight N")->required()->check(CLI::Range(1L, 200L));
  wspace->add_option("--depth", depth, "Depth r")->required()->check(CLI::Range(1L, 8L));

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites and emit a report");
  verify->add_option("--suite", suites, "depth2, depth3, lie, bk (repeatable; default all)");
  verify->add_option("--max-weight", max_weight, "Weight cap; 0 keeps per-suite defaults")
      ->check(CLI::Range(0L, 200L));
  verify->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  CLI::App* bk = app.add_subcommand("bk", "Predicted dimension table (N, r, predicted_A, predicted_H, computed, provenance)");
  bk->add_option("--max-weight", max_weight, "Truncation order in x (default 40)");
  bk->add_option("--max-depth", max_depth, "Truncation order in y (default 6)");
  std::string series;
  bk->add_option("--series", series,
                 "Emit raw (N, r, coefficient) rows of one series instead: bk, uneven or a");

  CLI::App* product = app.add_subcommand("product", "Dump a circle product (or bracket) of generators as a polynomial");
  product->add_option("--factors", factors, "Comma separated odd generator weights")->required()->delimiter(',');
  product->add_flag("--bracket", as_bracket, "Left-nested Ihara bracket instead of the product");

  for (CLI::App* sub : {period, matrix, wspace, verify, bk, product}) {
    sub->add_option("--out", out, "Write output to this file instead of stdout");
    sub->fallthrough();  // lets --config appear after the subcommand
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (period->parsed()) return run_period(weight, out);
    if (matrix->parsed()) return run_matrix(kind, weight, depth, out);
    if (wspace->parsed()) return run_wspace(weight, depth, out);
    if (verify->parsed()) return run_verify(suites, max_weight, format, out);
    if (bk->parsed()) return run_bk(max_weight > 0 ? max_weight : 40, max_depth, series, out);
    if (product->parsed()) return run_product(factors, as_bracket, out);
  } catch (const std::ios_base::failure& e) {
    std::cerr << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
