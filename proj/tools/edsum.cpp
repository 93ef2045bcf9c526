// edsum: exact and elliptic Dedekind-type sums from the command line.
//
// Exit status: 0 success, 1 a check or scan reported failures, 2 bad usage.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "edsum/elliptic_sums.hpp"
#include "edsum/errors.hpp"
#include "edsum/exact.hpp"
#include "edsum/parallel.hpp"
#include "edsum/scan.hpp"
#include "edsum/tables.hpp"
#include "edsum/verify.hpp"

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::complex<double> parse_tau(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("tau must be given as \"re,im\", got '" + text + "'");
  try {
    std::size_t used = 0;
    const double re = std::stod(text.substr(0, comma), &used);
    const std::string im_text = text.substr(comma + 1);
    std::size_t used_im = 0;
    const double im = std::stod(im_text, &used_im);
    if (used_im != im_text.size()) throw UsageError("bad tau '" + text + "'");
    return {re, im};
  } catch (const std::logic_error&) {
    throw UsageError("bad tau '" + text + "'");
  }
}

// "1,3,5" or "1..21"; a range keeps only values of the given parity.
std::vector<std::int64_t> parse_axis(const std::string& text, int parity) {
  std::vector<std::int64_t> out;
  try {
    if (const auto dots = text.find(".."); dots != std::string::npos) {
      const auto lo = std::stoll(text.substr(0, dots));
      const auto hi = std::stoll(text.substr(dots + 2));
      for (auto v = lo; v <= hi; ++v)
        if (((v % 2) + 2) % 2 == parity) out.push_back(v);
      return out;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoll(item));
  } catch (const std::logic_error&) {
    throw UsageError("bad axis list '" + text + "'");
  }
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

edsum::SumKind parse_kind(const std::string& k) {
  if (k == "s") return edsum::SumKind::DedekindS;
  if (k == "S") return edsum::SumKind::HardyBerndtS;
  if (k == "Q") return edsum::SumKind::QPart;
  if (k == "M") return edsum::SumKind::MPart;
  throw UsageError("unknown kind '" + k + "' (expected s, S, Q or M)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dedekind, Hardy-Berndt and elliptic Dedekind sums"};
  app.require_subcommand(1);

  // sum
  std::int64_t a = 0, b = 0;
  std::string kind = "Q", route_name = "main", format = "text";
  auto* sum = app.add_subcommand("sum", "one exact value");
  sum->add_option("--a", a, "numerator argument")->required();
  sum->add_option("--b", b, "modulus, >= 1")->required();
  sum->add_option("--kind", kind, "s | S | Q | M")->check(CLI::IsMember({"s", "S", "Q", "M"}));
  sum->add_option("--route", route_name, "main | rao | euclid (Q only)");
  sum->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  // table
  std::string which = "t1", rows_text, cols_text, table_format = "text", out_path;
  int workers = edsum::default_worker_count();
  auto* table = app.add_subcommand("table", "bQ grids");
  table->add_option("--which", which, "t1 | t2 | t3")->check(CLI::IsMember({"t1", "t2", "t3"}));
  table->add_option("--rows", rows_text, "b values: list \"1,3,5\" or range \"1..21\"");
  table->add_option("--cols", cols_text, "a values: list or range");
  table->add_option("--format", table_format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  table->add_option("--workers", workers, "threads")->check(CLI::Range(1, 1024));
  table->add_option("--out", out_path, "write to file instead of stdout");

  // scan
  std::string law = "mod4";
  std::int64_t a_min = 1, a_max = 0, b_min = 1, b_max = 0;
  std::string scan_format;
  auto* scan = app.add_subcommand("scan", "divisibility-law scan over a rectangle");
  scan->add_option("--law", law, "mod4 | mod12")->check(CLI::IsMember({"mod4", "mod12"}));
  scan->add_option("--a-min", a_min, "smallest a");
  scan->add_option("--a-max", a_max, "largest a")->required();
  scan->add_option("--b-min", b_min, "smallest b");
  scan->add_option("--b-max", b_max, "largest b")->required();
  scan->add_option("--workers", workers, "threads (default EDSUM_WORKERS or 1)")->check(CLI::Range(1, 1024));
  scan->add_option("--route", route_name, "main | rao | euclid");
  scan->add_option("--format", scan_format, "json | csv (default: from --out extension, else json)")
      ->check(CLI::IsMember({"json", "csv"}));
  scan->add_option("--out", out_path, "output file");

  // verify
  std::string scope = "exact", verify_format = "text";
  std::int64_t bound = 30;
  std::vector<std::string> taus;
  double tol = 1e-6;
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--scope", scope, "exact | full")->check(CLI::IsMember({"exact", "full"}));
  verify->add_option("--bound", bound, "largest a, b")->check(CLI::PositiveNumber);
  verify->add_option("--tau", taus, "\"re,im\"; repeatable (full scope)");
  verify->add_option("--tol", tol, "cross-engine tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_format, "text | json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "output file");

  // elliptic
  std::string tau_text = "0,1", mode = "tabulated", elliptic_format = "text";
  int order = 0;
  auto* elliptic = app.add_subcommand("elliptic", "lattice sum s_tau(a;b) or its order-N variant");
  elliptic->add_option("--a", a, "numerator argument")->required();
  elliptic->add_option("--b", b, "modulus, 1..4096")->required();
  elliptic->add_option("--tau", tau_text, "\"re,im\" with im > 0");
  elliptic->add_option("--order", order, "derivative order N (0 for s_tau)")->check(CLI::Range(0, 8));
  elliptic->add_option("--mode", mode, "tabulated | direct")
      ->check(CLI::IsMember({"tabulated", "direct"}));
  elliptic->add_option("--format", elliptic_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*sum) {
      const auto pair = edsum::CoprimePair::make(a, b);
      const auto record = edsum::compute_record(pair, parse_kind(kind), edsum::parse_route(route_name));
      if (format == "json")
        std::cout << edsum::to_json(record);
      else
        std::cout << record.value.to_string() << '\n';
      return 0;
    }

    if (*table) {
      auto spec = edsum::TableSpec::standard(edsum::parse_table_kind(which));
      const int row_parity = spec.which == edsum::TableKind::T2BqOddA ? 0 : 1;
      if (!rows_text.empty()) spec.rows = parse_axis(rows_text, row_parity);
      if (!cols_text.empty()) spec.cols = parse_axis(cols_text, 1 - row_parity);
      const auto rendered = edsum::render_table(spec, edsum::Route::MainResult, workers);
      if (table_format == "csv")
        emit(rendered.to_csv(), out_path);
      else if (table_format == "json")
        emit(rendered.to_json(), out_path);
      else
        emit(rendered.to_text(), out_path);
      return 0;
    }

    if (*scan) {
      edsum::ScanOptions options{workers, edsum::parse_route(route_name)};
      const auto report = edsum::conjecture_scan({a_min, a_max}, {b_min, b_max},
                                                 edsum::parse_law(law), options);
      if (scan_format.empty())
        scan_format = out_path.size() > 4 && out_path.ends_with(".csv") ? "csv" : "json";
      emit(scan_format == "csv" ? report.to_csv() : report.to_json(options), out_path);
      std::cerr << "checked " << report.checked << " pairs, " << report.violations.size()
                << " violations, " << report.elapsed_ms << " ms\n";
      return report.violations.empty() ? 0 : 1;
    }

    if (*verify) {
      edsum::VerifyOptions options;
      options.scope = edsum::parse_scope(scope);
      options.bound = bound;
      options.tol = tol;
      for (const auto& t : taus) options.taus.push_back(edsum::TauPoint::make(parse_tau(t)));
      const auto report = edsum::verify_suite(options);
      emit(verify_format == "json" ? report.to_json() : report.to_text(), out_path);
      return report.all_passed() ? 0 : 1;
    }

    if (*elliptic) {
      const auto pair = edsum::CoprimePair::make(a, b);
      const auto ctx = edsum::build_context(parse_tau(tau_text));
      const auto eval = mode == "direct" ? edsum::LatticeEvaluation::Direct
                                         : edsum::LatticeEvaluation::Tabulated;
      const auto result = order == 0 ? edsum::elliptic_sum(pair, ctx, eval)
                                     : edsum::apostol_sum(order, pair, ctx, eval);
      if (elliptic_format == "json") {
        std::cout << edsum::to_json(result);
      } else {
        std::cout << std::setprecision(15) << result.value.real() << (result.value.imag() < 0 ? " - " : " + ")
                  << std::abs(result.value.imag()) << "i\n";
        if (order == 0 && pair.in_u_odd() && std::abs(edsum::rational_prefactor(ctx)) >= 1e-8) {
          const auto extract = edsum::rational_extract(pair, ctx);
          std::cout << "Q ~ " << extract.q_estimate.real() << " (exact " << extract.q_exact.to_string()
                    << ", error " << std::setprecision(3) << extract.abs_error << ")\n";
        }
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "edsum: " << e.what() << '\n';
    return kUsage;
  } catch (const edsum::DomainError& e) {
    std::cerr << "edsum: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "edsum: " << e.what() << '\n';
    return kUsage;
  }
  return 0;
}
