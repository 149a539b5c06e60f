#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omegabound/catalog.hpp"
#include "omegabound/sieve.hpp"

namespace omegabound {

inline constexpr double kDefaultEpsRel = 1e-9;
inline constexpr std::size_t kDefaultCounterexampleCap = 1000;
inline constexpr unsigned kDefaultThresholdSamples = 10;

enum class ScanMode { all, primes_only };

std::string_view to_string(ScanMode mode) noexcept;
ScanMode parse_scan_mode(std::string_view text);

struct ScanConfig {
  std::string spec_id;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  ScanMode mode = ScanMode::all;
  double eps_rel = kDefaultEpsRel;
  std::uint64_t segment_size = kDefaultSegmentSize;
  std::size_t counterexample_cap = kDefaultCounterexampleCap;

  friend bool operator==(const ScanConfig&, const ScanConfig&) = default;
};

/// Throws CatalogError, ModeError or DomainError.
void validate(const ScanConfig& config);

struct Counts {
  std::uint64_t pass = 0;
  std::uint64_t marginal = 0;
  std::uint64_t fail = 0;

  [[nodiscard]] std::uint64_t total() const noexcept { return pass + marginal + fail; }
  friend bool operator==(const Counts&, const Counts&) = default;
};

struct VerificationReport {
  std::string spec_id;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::string mode;  // "all", "primes-only" or "threshold"
  Counts counts;
  std::vector<CheckRecord> counterexamples;  // fails only, capped
  std::optional<CheckRecord> extremal;       // smallest margin seen
  double runtime_seconds = 0.0;
  double eps_rel = kDefaultEpsRel;
  std::uint64_t segment_size = kDefaultSegmentSize;
  std::size_t counterexample_cap = kDefaultCounterexampleCap;
  std::optional<CheckRecord> below_threshold;  // threshold checks: informational point at threshold - 1

  [[nodiscard]] bool ok() const noexcept { return counts.fail == 0; }
};

/// Everything needed to continue a scan from a segment boundary.
struct ScanState {
  ScanConfig config;
  std::uint64_t next = 1;  // first integer not yet processed
  std::uint64_t omega_prefix = 0;
  PrimeSumsAccumulator sums;
  Counts counts;
  std::vector<CheckRecord> counterexamples;
  std::optional<CheckRecord> extremal;
  double elapsed_seconds = 0.0;

  [[nodiscard]] bool complete() const noexcept { return next > config.to; }
};

/// Segment-at-a-time campaign over one cataloged bound.
///
/// The sieve always starts at 1 so prefix quantities are exact; points below
/// `from` feed the accumulators but are not classified.
class Scanner {
 public:
  explicit Scanner(ScanConfig config);

  /// Continues from a saved state. The state's config is re-validated.
  explicit Scanner(ScanState saved);

  [[nodiscard]] bool done() const noexcept { return state_.complete(); }

  /// Processes one segment; no-op once done.
  void step();

  void run();

  [[nodiscard]] const ScanState& state() const noexcept { return state_; }

  [[nodiscard]] VerificationReport report() const;

 private:
  void record(const CheckRecord& r);

  const BoundSpec* spec_;
  ScanState state_;
  std::optional<SegmentedOmega> engine_;
  std::vector<std::uint8_t> omega_;
  std::vector<std::uint32_t> primes_;
};

VerificationReport scan(const ScanConfig& config);

/// Evaluates the bound's formula-only threshold comparison at the threshold and at
/// threshold * 2^i for i = 1..samples, plus an informational point at threshold - 1.
/// Throws ModeError for bounds without such a comparison.
VerificationReport threshold_check(std::string_view spec_id, std::optional<std::uint64_t> threshold = std::nullopt,
                                   unsigned samples = kDefaultThresholdSamples, double eps_rel = kDefaultEpsRel);

// Checkpoints: versioned key=value lines with a trailing CRC-32.
inline constexpr int kCheckpointVersion = 1;

std::string serialize_checkpoint(const ScanState& state);

/// Throws CheckpointError on any format, version or checksum problem.
ScanState parse_checkpoint(std::string_view text);

/// Writes through a temporary file and renames it into place.
void save_checkpoint(const std::filesystem::path& path, const ScanState& state);

/// std::nullopt when the file is missing or empty (fresh start).
std::optional<ScanState> load_checkpoint(const std::filesystem::path& path);

/// Resumes `saved` after checking that its config echo equals `expected`; throws CheckpointError otherwise.
Scanner resume_scan(const ScanConfig& expected, ScanState saved);

}  // namespace omegabound
