#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <boost/crc.hpp>

#include "omegabound/errors.hpp"
#include "omegabound/verifier.hpp"

using namespace omegabound;

namespace {

ScanState sample_state() {
  ScanConfig cfg;
  cfg.spec_id = "main-theorem";
  cfg.from = 3;
  cfg.to = 100;
  cfg.segment_size = 50;
  Scanner s(cfg);
  s.step();
  auto state = s.state();
  state.elapsed_seconds = 0.25;
  return state;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("checkpoint text matches the golden example") {
  const auto golden = read_file(std::filesystem::path(OMEGABOUND_GOLDEN_DIR) / "checkpoint_main_theorem.txt");
  REQUIRE_FALSE(golden.empty());
  CHECK(serialize_checkpoint(sample_state()) == golden);
}

TEST_CASE("checkpoint round trip preserves every field") {
  const auto state = sample_state();
  const auto back = parse_checkpoint(serialize_checkpoint(state));
  CHECK(back.config == state.config);
  CHECK(back.next == state.next);
  CHECK(back.omega_prefix == state.omega_prefix);
  CHECK(back.sums == state.sums);
  CHECK(back.counts == state.counts);
  CHECK(back.extremal == state.extremal);
  CHECK(back.counterexamples == state.counterexamples);
  CHECK(back.elapsed_seconds == state.elapsed_seconds);
}

TEST_CASE("checkpoint round trip with counterexamples and awkward doubles") {
  auto state = sample_state();
  state.sums.theta = {0.1 + 0.2, -1.1102230246251565e-17};
  state.counterexamples.push_back({7, 1.0 / 3.0, -0.0, 5e-324, CheckClass::fail});
  state.counterexamples.push_back({9, 1e300, 2.5, -1e-300, CheckClass::fail});
  const auto back = parse_checkpoint(serialize_checkpoint(state));
  CHECK(back.sums.theta == state.sums.theta);
  CHECK(back.counterexamples == state.counterexamples);
  CHECK(std::signbit(back.counterexamples[0].rhs));
}

TEST_CASE("corrupted checkpoints are refused") {
  const std::string text = serialize_checkpoint(sample_state());

  std::string flipped = text;
  flipped[flipped.find("omega_prefix=") + 13] ^= 1;
  CHECK_THROWS_AS(parse_checkpoint(flipped), CheckpointError);

  CHECK_THROWS_AS(parse_checkpoint(text.substr(0, text.size() / 2)), CheckpointError);
  CHECK_THROWS_AS(parse_checkpoint(""), CheckpointError);
  CHECK_THROWS_AS(parse_checkpoint("garbage\ncrc32=00000000\n"), CheckpointError);
}

TEST_CASE("version mismatch is refused even with a valid checksum") {
  const std::string text = serialize_checkpoint(sample_state());
  std::string body = text.substr(0, text.rfind("crc32="));
  body.replace(body.find("version=1"), 9, "version=2");
  boost::crc_32_type crc;
  crc.process_bytes(body.data(), body.size());
  char hex[16];
  std::snprintf(hex, sizeof hex, "%08x", static_cast<unsigned>(crc.checksum()));
  const std::string resigned = body + "crc32=" + hex + "\n";
  try {
    parse_checkpoint(resigned);
    FAIL("expected CheckpointError");
  } catch (const CheckpointError& e) {
    CHECK(std::string(e.what()).find("version") != std::string::npos);
  }
}

TEST_CASE("save/load through the filesystem") {
  const auto dir = std::filesystem::temp_directory_path() / "omegabound_ckpt_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "state.ckpt";
  std::filesystem::remove(path);

  CHECK_FALSE(load_checkpoint(path).has_value());  // missing: fresh start
  { std::ofstream(path) << "\n"; }
  CHECK_FALSE(load_checkpoint(path).has_value());  // empty: fresh start

  const auto state = sample_state();
  save_checkpoint(path, state);
  const auto loaded = load_checkpoint(path);
  REQUIRE(loaded.has_value());
  CHECK(loaded->next == state.next);
  CHECK(loaded->sums == state.sums);
  CHECK_FALSE(std::filesystem::exists(dir / "state.ckpt.tmp"));
  std::filesystem::remove_all(dir);
}
