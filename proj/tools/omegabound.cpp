// omegabound: sieve, valuation and inequality-verification front end.
//
//   verify               scan a cataloged inequality over a range (exit 1 on any fail)
//   threshold-check      evaluate a bound's threshold comparison at and above its threshold
//   eval                 emit (n, lhs, rhs, margin) or (n, value) tables for plotting
//   factorial-valuation  print v_m(n!)
//   sieve-info           prime sums and Ω prefix sum at n
//
// Exit codes: 0 success (marginal points only warn), 1 at least one fail, 2 usage or domain error.

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "omegabound/bounds.hpp"
#include "omegabound/catalog.hpp"
#include "omegabound/errors.hpp"
#include "omegabound/report_io.hpp"
#include "omegabound/series.hpp"
#include "omegabound/sieve.hpp"
#include "omegabound/valuations.hpp"
#include "omegabound/verifier.hpp"

namespace ob = omegabound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInterrupted = 130;

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted = true; }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

std::string render(const ob::VerificationReport& report, const std::string& format) {
  return format == "csv" ? ob::report_to_csv(report) : ob::report_to_json_string(report);
}

int report_exit(const ob::VerificationReport& report) {
  if (report.counts.marginal > 0) {
    std::cerr << "warning: " << report.counts.marginal << " marginal point(s) for '" << report.spec_id
              << "' (within eps_rel=" << ob::format_real(report.eps_rel) << " of the bound)\n";
  }
  if (report.counts.fail > 0) {
    std::cerr << "FAIL: " << report.counts.fail << " violation(s) of '" << report.spec_id << "'\n";
    return kExitFail;
  }
  return kExitOk;
}

std::string catalog_listing() {
  std::ostringstream out;
  out << "Bounds:\n";
  for (const auto& spec : ob::bound_catalog()) {
    out << "  " << spec.id << (spec.primes_only_eligible ? " [primes-only ok]" : "") << "  (n >= "
        << spec.domain_min << ")\n      " << spec.description << '\n';
  }
  out << "Functions (eval only):\n ";
  for (const auto name : ob::series_functions()) out << ' ' << name;
  out << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime-factor counting, factorial valuations and explicit-bound verification"};
  app.require_subcommand(1);
  app.footer(catalog_listing());

  // verify
  ob::ScanConfig scan_cfg;
  bool primes_only = false;
  std::string out_path;
  std::string format = "json";
  std::string checkpoint_path;
  bool resume = false;
  auto* verify = app.add_subcommand("verify", "Scan a cataloged inequality over [from, to]");
  verify->add_option("--spec", scan_cfg.spec_id, "Bound identifier")->required();
  verify->add_option("--from", scan_cfg.from, "First n")->required();
  verify->add_option("--to", scan_cfg.to, "Last n")->required();
  verify->add_flag("--primes-only", primes_only, "Evaluate only at prime n (eligible bounds only)");
  verify->add_option("--eps", scan_cfg.eps_rel, "Relative tolerance for marginal classification")
      ->capture_default_str();
  verify->add_option("--segment-size", scan_cfg.segment_size, "Integers per sieve segment")->capture_default_str();
  verify->add_option("--out", out_path, "Report path (default stdout)");
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--checkpoint", checkpoint_path, "Write a resumable checkpoint after every segment");
  verify->add_flag("--resume", resume, "Continue from --checkpoint when it exists");

  // threshold-check
  std::string threshold_spec;
  std::optional<std::uint64_t> threshold;
  unsigned samples = ob::kDefaultThresholdSamples;
  double threshold_eps = ob::kDefaultEpsRel;
  auto* tcheck = app.add_subcommand("threshold-check", "Check a bound's defining comparison at and above a threshold");
  tcheck->add_option("--spec", threshold_spec, "Bound identifier")->required();
  tcheck->add_option("--threshold", threshold, "Threshold (default: the cataloged one)");
  tcheck->add_option("--samples", samples, "Geometric samples above the threshold")->capture_default_str();
  tcheck->add_option("--eps", threshold_eps, "Relative tolerance")->capture_default_str();
  tcheck->add_option("--out", out_path, "Report path (default stdout)");
  tcheck->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));

  // eval
  std::string eval_name;
  std::optional<std::uint64_t> eval_n;
  std::uint64_t eval_from = 0;
  std::uint64_t eval_to = 0;
  std::uint64_t stride = 1;
  std::size_t log_points = 0;
  std::uint64_t eval_segment = ob::kDefaultSegmentSize;
  auto* eval = app.add_subcommand("eval", "Emit a bound or function over a set of n");
  eval->add_option("--spec", eval_name, "Bound identifier or function name")->required();
  auto* n_opt = eval->add_option("--n", eval_n, "Single point");
  auto* from_opt = eval->add_option("--from", eval_from, "First n");
  auto* to_opt = eval->add_option("--to", eval_to, "Last n");
  eval->add_option("--stride", stride, "Step between points")->capture_default_str();
  eval->add_option("--log-points", log_points, "Use about this many log-spaced points instead of a stride");
  eval->add_option("--segment-size", eval_segment, "Integers per sieve segment")->capture_default_str();
  eval->add_option("--out", out_path, "Output path (default stdout)");
  eval->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  n_opt->excludes(from_opt)->excludes(to_opt);
  from_opt->needs(to_opt);
  to_opt->needs(from_opt);

  // factorial-valuation
  std::uint64_t fv_n = 0;
  std::uint64_t fv_base = 0;
  bool allow_large = false;
  auto* fval = app.add_subcommand("factorial-valuation", "Print v_base(n!)");
  fval->add_option("--n", fv_n, "n")->required();
  fval->add_option("--base", fv_base, "Prime or composite base, 2 <= base <= n")->required();
  fval->add_flag("--allow-large", allow_large, "Lift the 2^31-entry sieve budget");

  // sieve-info
  std::uint64_t info_n = 0;
  std::uint64_t info_segment = ob::kDefaultSegmentSize;
  auto* info = app.add_subcommand("sieve-info", "Prime sums and the Omega prefix sum at n");
  info->add_option("--to", info_n, "n")->required();
  info->add_option("--segment-size", info_segment, "Integers per sieve segment")->capture_default_str();
  info->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  info->add_option("--out", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      scan_cfg.mode = primes_only ? ob::ScanMode::primes_only : ob::ScanMode::all;
      if (resume && checkpoint_path.empty()) throw CLI::ValidationError("--resume", "requires --checkpoint");
      std::optional<ob::Scanner> scanner;
      if (resume) {
        if (auto saved = ob::load_checkpoint(checkpoint_path)) {
          scanner.emplace(ob::resume_scan(scan_cfg, std::move(*saved)));
          std::cerr << "resuming '" << scan_cfg.spec_id << "' at n=" << scanner->state().next << '\n';
        }
      }
      if (!scanner) scanner.emplace(scan_cfg);
      std::signal(SIGINT, on_sigint);
      while (!scanner->done()) {
        scanner->step();
        if (!checkpoint_path.empty()) ob::save_checkpoint(checkpoint_path, scanner->state());
        if (g_interrupted) {
          std::cerr << "interrupted at n=" << scanner->state().next
                    << (checkpoint_path.empty() ? "; no checkpoint written\n" : "; rerun with --resume\n");
          return kExitInterrupted;
        }
      }
      if (!checkpoint_path.empty()) ob::save_checkpoint(checkpoint_path, scanner->state());
      const auto report = scanner->report();
      emit(render(report, format), out_path);
      return report_exit(report);
    }

    if (*tcheck) {
      const auto report = ob::threshold_check(threshold_spec, threshold, samples, threshold_eps);
      emit(render(report, format), out_path);
      return report_exit(report);
    }

    if (*eval) {
      std::vector<std::uint64_t> points;
      if (eval_n) {
        points = {*eval_n};
      } else if (from_opt->count() > 0) {
        points = log_points > 0 ? ob::log_spaced_points(eval_from, eval_to, log_points)
                                : ob::linear_points(eval_from, eval_to, stride);
      } else {
        throw CLI::ValidationError("eval", "give --n or --from/--to");
      }
      const auto table = ob::evaluate_series(eval_name, points, eval_segment);
      emit(format == "csv" ? ob::series_to_csv(table) : ob::series_to_json(table).dump(2) + "\n", out_path);
      return kExitOk;
    }

    if (*fval) {
      if (fv_base < 2) throw ob::DomainError("base must be >= 2 (v_1 is undefined)");
      if (fv_base > fv_n) throw ob::DomainError("base must not exceed n");
      std::uint64_t value = 0;
      if (ob::is_prime(fv_base)) {
        value = ob::legendre_valuation(fv_n, fv_base);
      } else {
        const auto budget = allow_large ? std::numeric_limits<std::uint64_t>::max() : ob::kDefaultSieveBudget;
        value = ob::generalized_valuation(fv_base, fv_n, ob::build_spf(fv_n, budget));
      }
      std::cout << value << '\n';
      return kExitOk;
    }

    if (*info) {
      if (info_n < 2) throw ob::DomainError("sieve-info needs n >= 2");
      const auto sums = ob::prime_sums(info_n, info_segment);
      const auto prefix = ob::omega_prefix_sum(info_n, info_segment);
      const std::uint64_t segments = (info_n + info_segment - 1) / info_segment;
      const std::uint64_t table_bytes = (info_n + 1) * sizeof(std::uint32_t);
      const bool fits = info_n + 1 <= ob::kDefaultSieveBudget;
      std::string text;
      if (format == "csv") {
        text = "n,pi,theta,sum_inv_pm1,sum_inv_logp,omega_prefix_sum,segment_size,segments,spf_table_bytes,"
               "fits_sieve_budget\n" +
               std::to_string(info_n) + ',' + std::to_string(sums.pi) + ',' + ob::format_real(sums.theta) + ',' +
               ob::format_real(sums.sum_inv_pm1) + ',' + ob::format_real(sums.sum_inv_logp) + ',' +
               std::to_string(prefix) + ',' + std::to_string(info_segment) + ',' + std::to_string(segments) +
               ',' + std::to_string(table_bytes) + ',' + (fits ? "true" : "false") + '\n';
      } else {
        nlohmann::ordered_json j;
        j["n"] = info_n;
        j["pi"] = sums.pi;
        j["theta"] = sums.theta;
        j["sum_inv_pm1"] = sums.sum_inv_pm1;
        j["sum_inv_logp"] = sums.sum_inv_logp;
        j["omega_prefix_sum"] = prefix;
        j["segment_size"] = info_segment;
        j["segments"] = segments;
        j["spf_table_bytes"] = table_bytes;
        j["fits_sieve_budget"] = fits;
        text = j.dump(2) + "\n";
      }
      emit(text, out_path);
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {  // DomainError, CatalogError, ModeError
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {  // ResourceError, CheckpointError, I/O
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
