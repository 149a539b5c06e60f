#include "omegabound/verifier.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "omegabound/errors.hpp"

namespace omegabound {

std::string_view to_string(ScanMode mode) noexcept {
  return mode == ScanMode::primes_only ? "primes-only" : "all";
}

ScanMode parse_scan_mode(std::string_view text) {
  if (text == "all") return ScanMode::all;
  if (text == "primes-only") return ScanMode::primes_only;
  throw ModeError("unknown scan mode '" + std::string(text) + "'");
}

void validate(const ScanConfig& config) {
  const BoundSpec& spec = find_bound(config.spec_id);
  if (config.from < spec.domain_min) {
    throw DomainError("'" + config.spec_id + "' is defined from n=" + std::to_string(spec.domain_min) +
                      ", requested from=" + std::to_string(config.from));
  }
  if (config.to < config.from) throw DomainError("scan range is empty: to < from");
  if (config.to >= (std::uint64_t{1} << 62)) throw DomainError("scan range end too large");
  if (config.mode == ScanMode::primes_only && !spec.primes_only_eligible) {
    throw ModeError("'" + config.spec_id + "' is not eligible for primes-only scanning");
  }
  if (!(config.eps_rel >= 0.0) || !std::isfinite(config.eps_rel)) {
    throw DomainError("eps_rel must be finite and >= 0");
  }
  if (config.segment_size < 1) throw DomainError("segment_size must be >= 1");
}

namespace {

ScanState fresh_state(ScanConfig config) {
  validate(config);
  ScanState state;
  state.next = find_bound(config.spec_id).needs_sieve ? 1 : config.from;
  state.config = std::move(config);
  return state;
}

}  // namespace

Scanner::Scanner(ScanConfig config) : Scanner(fresh_state(std::move(config))) {}

Scanner::Scanner(ScanState saved) : spec_(&find_bound(saved.config.spec_id)), state_(std::move(saved)) {
  validate(state_.config);
  if (spec_->needs_sieve) {
    engine_.emplace(state_.config.to);
    if (state_.next < 1) throw CheckpointError("checkpoint: next must be >= 1");
    if (spec_->needs_prime_list && state_.next > 2) primes_ = primes_up_to(state_.next - 1);
  }
}

void Scanner::record(const CheckRecord& r) {
  switch (r.cls) {
    case CheckClass::pass:
      ++state_.counts.pass;
      break;
    case CheckClass::marginal:
      ++state_.counts.marginal;
      break;
    case CheckClass::fail:
      ++state_.counts.fail;
      if (state_.counterexamples.size() < state_.config.counterexample_cap) state_.counterexamples.push_back(r);
      break;
  }
  if (!state_.extremal || r.margin < state_.extremal->margin) state_.extremal = r;
}

void Scanner::step() {
  if (done()) return;
  const auto started = std::chrono::steady_clock::now();
  const ScanConfig& cfg = state_.config;
  const std::uint64_t lo = state_.next;
  const std::uint64_t hi = (cfg.to + 1 - lo > cfg.segment_size) ? lo + cfg.segment_size : cfg.to + 1;

  if (!spec_->needs_sieve) {
    PointContext ctx;
    for (std::uint64_t n = lo; n < hi; ++n) {
      ctx.n = n;
      record(spec_->check(ctx, cfg.eps_rel));
    }
  } else {
    engine_->compute(lo, hi, omega_);
    PointContext ctx;
    for (std::size_t i = 0; i < omega_.size(); ++i) {
      const std::uint64_t n = lo + i;
      const int w = omega_[i];
      state_.omega_prefix += static_cast<std::uint64_t>(w);
      if (w == 1) {
        state_.sums.add_prime(n);
        if (spec_->needs_prime_list) primes_.push_back(static_cast<std::uint32_t>(n));
      }
      if (n < cfg.from) continue;
      if (cfg.mode == ScanMode::primes_only && w != 1) continue;
      ctx.n = n;
      ctx.omega = w;
      ctx.omega_prefix = state_.omega_prefix;
      ctx.sums = state_.sums.at(n);
      ctx.primes = primes_;
      record(spec_->check(ctx, cfg.eps_rel));
    }
  }

  state_.next = hi;
  state_.elapsed_seconds +=
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
}

void Scanner::run() {
  while (!done()) step();
}

VerificationReport Scanner::report() const {
  VerificationReport r;
  const ScanConfig& cfg = state_.config;
  r.spec_id = cfg.spec_id;
  r.from = cfg.from;
  r.to = cfg.to;
  r.mode = std::string(to_string(cfg.mode));
  r.counts = state_.counts;
  r.counterexamples = state_.counterexamples;
  r.extremal = state_.extremal;
  r.runtime_seconds = state_.elapsed_seconds;
  r.eps_rel = cfg.eps_rel;
  r.segment_size = cfg.segment_size;
  r.counterexample_cap = cfg.counterexample_cap;
  return r;
}

VerificationReport scan(const ScanConfig& config) {
  Scanner scanner(config);
  scanner.run();
  return scanner.report();
}

VerificationReport threshold_check(std::string_view spec_id, std::optional<std::uint64_t> threshold,
                                   unsigned samples, double eps_rel) {
  const auto started = std::chrono::steady_clock::now();
  const BoundSpec& spec = find_bound(spec_id);
  if (!spec.threshold) {
    throw ModeError("'" + std::string(spec_id) + "' has no formula-only threshold comparison");
  }
  if (!(eps_rel >= 0.0) || !std::isfinite(eps_rel)) throw DomainError("eps_rel must be finite and >= 0");
  const ThresholdComparison& tc = *spec.threshold;
  const std::uint64_t t = threshold.value_or(tc.threshold);
  if (t < tc.domain_min) {
    throw DomainError("threshold " + std::to_string(t) + " below the comparison's domain start " +
                      std::to_string(tc.domain_min));
  }

  VerificationReport r;
  r.spec_id = std::string(spec_id);
  r.mode = "threshold";
  r.from = t;
  r.eps_rel = eps_rel;
  r.segment_size = 0;

  const auto record = [&](std::uint64_t n) {
    PointContext ctx;
    ctx.n = n;
    const CheckRecord rec = tc.comparison.evaluate(ctx, eps_rel);
    switch (rec.cls) {
      case CheckClass::pass:
        ++r.counts.pass;
        break;
      case CheckClass::marginal:
        ++r.counts.marginal;
        break;
      case CheckClass::fail:
        ++r.counts.fail;
        if (r.counterexamples.size() < r.counterexample_cap) r.counterexamples.push_back(rec);
        break;
    }
    if (!r.extremal || rec.margin < r.extremal->margin) r.extremal = rec;
    r.to = n;
  };

  record(t);
  std::uint64_t n = t;
  for (unsigned i = 0; i < samples; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / 2) break;
    n *= 2;
    record(n);
  }
  if (t - 1 >= tc.domain_min) {
    PointContext ctx;
    ctx.n = t - 1;
    r.below_threshold = tc.comparison.evaluate(ctx, eps_rel);
  }
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return r;
}

Scanner resume_scan(const ScanConfig& expected, ScanState saved) {
  if (!(saved.config == expected)) {
    throw CheckpointError("checkpoint config does not match the requested run (spec, range, mode, eps, "
                          "segment size and counterexample cap must all agree)");
  }
  return Scanner(std::move(saved));
}

}  // namespace omegabound
