#include <doctest.h>

#include <cmath>

#include "omegabound/errors.hpp"
#include "omegabound/report_io.hpp"
#include "omegabound/verifier.hpp"

using namespace omegabound;

namespace {

ScanConfig config(std::string id, std::uint64_t from, std::uint64_t to, ScanMode mode = ScanMode::all,
                  std::uint64_t segment = kDefaultSegmentSize) {
  ScanConfig c;
  c.spec_id = std::move(id);
  c.from = from;
  c.to = to;
  c.mode = mode;
  c.segment_size = segment;
  return c;
}

std::string payload(const VerificationReport& r) { return report_to_json_string(r, false); }

std::uint64_t straight_state_prefix(const ScanConfig& cfg) {
  Scanner s(cfg);
  s.run();
  return s.state().omega_prefix;
}

}  // namespace

TEST_CASE("scan vp-sandwich at the single point n = 2") {
  const auto r = scan(config("vp-sandwich", 2, 2));
  CHECK(r.counts.total() == 1);
  CHECK(r.counts.pass == 1);
  REQUIRE(r.extremal.has_value());
  CHECK(r.extremal->n == 2);
  CHECK(r.extremal->lhs == 1.0);
  CHECK(r.extremal->rhs == 1.0);
  CHECK(r.extremal->margin == 0.0);
  CHECK(r.extremal->cls == CheckClass::pass);
}

TEST_CASE("scan rejects bad configurations") {
  CHECK_THROWS_AS(scan(config("nope", 3, 10)), CatalogError);
  CHECK_THROWS_AS(scan(config("main-theorem", 2, 10)), DomainError);
  CHECK_THROWS_AS(scan(config("main-theorem", 10, 9)), DomainError);
  CHECK_THROWS_AS(scan(config("main-theorem", 3, 10, ScanMode::primes_only)), ModeError);
  CHECK_THROWS_AS(scan(config("pi-upper", 2, 10, ScanMode::primes_only)), ModeError);
  CHECK_NOTHROW(scan(config("prop1-band-upper", 3, 10, ScanMode::primes_only)));
  auto bad_eps = config("main-theorem", 3, 10);
  bad_eps.eps_rel = -1.0;
  CHECK_THROWS_AS(scan(bad_eps), DomainError);
  auto bad_seg = config("main-theorem", 3, 10);
  bad_seg.segment_size = 0;
  CHECK_THROWS_AS(scan(bad_seg), DomainError);
}

TEST_CASE("counts cover every evaluation point exactly once") {
  const auto all = scan(config("main-theorem", 3, 5000, ScanMode::all, 777));
  CHECK(all.counts.total() == 4998);
  const auto primes = scan(config("prop1-band-upper", 3, 5000, ScanMode::primes_only, 777));
  CHECK(primes.counts.total() == 669 - 1);  // π(5000) minus the prime 2
  CHECK(all.counts.fail == 0);
  CHECK(primes.counts.fail == 0);
}

TEST_CASE("scan is deterministic and independent of segment size") {
  for (const char* id : {"main-theorem", "prop1-band-lower", "prop2-envelope", "theta-env1", "vp-sandwich",
                         "omega-gamma-band", "pi-upper"}) {
    CAPTURE(std::string(id));
    const std::uint64_t from = find_bound(id).domain_min;
    const auto a = scan(config(id, from, 3000, ScanMode::all, 1));
    const auto b = scan(config(id, from, 3000, ScanMode::all, 1000));
    auto c_cfg = config(id, from, 3000, ScanMode::all, 1000);
    const auto c = scan(c_cfg);
    CHECK(a.extremal == b.extremal);
    CHECK(a.counts == b.counts);
    // payload differs only in the echoed segment size
    auto a2 = a;
    a2.segment_size = b.segment_size;
    CHECK(payload(a2) == payload(b));
    CHECK(payload(b) == payload(c));
  }
}

TEST_CASE("primes-only scan misses no failure of the full scan") {
  for (const auto& spec : bound_catalog()) {
    if (!spec.primes_only_eligible) continue;
    CAPTURE(std::string(spec.id));
    auto full_cfg = config(std::string(spec.id), spec.domain_min, 10000);
    auto prime_cfg = config(std::string(spec.id), spec.domain_min, 10000, ScanMode::primes_only);
    const auto full = scan(full_cfg);
    const auto primes = scan(prime_cfg);
    CHECK(full.counts.fail == 0);
    CHECK(primes.counts.fail == full.counts.fail);
    REQUIRE(full.extremal);
    REQUIRE(primes.extremal);
    // lhs constant between primes, rhs increasing: the minimum margin sits at a prime
    CHECK(primes.extremal->margin == full.extremal->margin);
  }
}

TEST_CASE("formula-only scan of r-envelope-vs-9n") {
  const auto r = scan(config("r-envelope-vs-9n", 563206, 563206 + 5000, ScanMode::all, 999));
  CHECK(r.counts.total() == 5001);
  CHECK(r.counts.fail == 0);
  CHECK(r.extremal->n == 563206);
}

TEST_CASE("Scanner steps one segment at a time and resumes bit-identically") {
  const auto cfg = config("prop1-band-upper", 3, 200000, ScanMode::primes_only, 30000);
  const auto straight = scan(cfg);

  Scanner first(cfg);
  first.step();
  first.step();
  CHECK(first.state().next == 60001);
  const ScanState saved = parse_checkpoint(serialize_checkpoint(first.state()));
  CHECK(saved.sums == first.state().sums);
  Scanner resumed = resume_scan(cfg, saved);
  resumed.run();
  CHECK(payload(resumed.report()) == payload(straight));
  CHECK(resumed.state().omega_prefix == straight_state_prefix(cfg));
}

TEST_CASE("resume of vp-sandwich rebuilds its prime list") {
  const auto cfg = config("vp-sandwich", 2, 3000, ScanMode::all, 500);
  const auto straight = scan(cfg);
  Scanner s(cfg);
  s.step();
  s.step();
  s.step();
  Scanner resumed = resume_scan(cfg, parse_checkpoint(serialize_checkpoint(s.state())));
  resumed.run();
  CHECK(payload(resumed.report()) == payload(straight));
}

TEST_CASE("resume refuses a mismatched config") {
  const auto cfg = config("main-theorem", 3, 50000, ScanMode::all, 10000);
  Scanner s(cfg);
  s.step();
  auto other = cfg;
  other.eps_rel = 1e-6;
  CHECK_THROWS_AS(resume_scan(other, s.state()), CheckpointError);
  other = cfg;
  other.to = 60000;
  CHECK_THROWS_AS(resume_scan(other, s.state()), CheckpointError);
  CHECK_NOTHROW(resume_scan(cfg, s.state()));
}

TEST_CASE("threshold_check at the cataloged thresholds") {
  for (const char* id :
       {"prop1-refined-lower", "prop1-refined-upper", "prop2-refined-lower", "prop2-refined-upper", "r-envelope-vs-9n"}) {
    CAPTURE(std::string(id));
    const auto r = threshold_check(id);
    CHECK(r.mode == "threshold");
    CHECK(r.counts.total() == 11);
    CHECK(r.counts.fail == 0);
    CHECK(r.counts.marginal == 0);
    REQUIRE(r.below_threshold.has_value());
    CHECK(r.below_threshold->n == r.from - 1);
  }
}

TEST_CASE("threshold_check records failures below a threshold") {
  // The tail comparison for the Σ 1/log p lower bound is false for small n.
  const auto r = threshold_check("prop2-refined-lower", 2, 5);
  CHECK(r.counts.fail > 0);
  CHECK(r.counterexamples.size() == r.counts.fail);
  CHECK(r.counterexamples.front().n == 2);
  CHECK(r.to == 64);
  CHECK_FALSE(r.below_threshold.has_value());
  CHECK_FALSE(r.ok());
}

TEST_CASE("threshold_check errors") {
  CHECK_THROWS_AS(threshold_check("main-theorem"), ModeError);
  CHECK_THROWS_AS(threshold_check("nope"), CatalogError);
  CHECK_THROWS_AS(threshold_check("prop1-refined-lower", 2), DomainError);
}
