#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <system_error>

#include <boost/crc.hpp>

#include "omegabound/errors.hpp"
#include "omegabound/report_io.hpp"
#include "omegabound/verifier.hpp"

namespace omegabound {

namespace {

constexpr std::string_view kMagic = "omegabound-checkpoint";

std::uint32_t crc32_of(std::string_view text) {
  boost::crc_32_type crc;
  crc.process_bytes(text.data(), text.size());
  return crc.checksum();
}

std::string hex32(std::uint32_t v) {
  char buf[9];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, 16);
  std::string s(buf, res.ptr);
  return std::string(8 - s.size(), '0') + s;
}

std::string record_line(const CheckRecord& r) {
  return std::to_string(r.n) + ',' + format_real(r.lhs) + ',' + format_real(r.rhs) + ',' + format_real(r.margin) +
         ',' + std::string(to_string(r.cls));
}

std::uint64_t parse_u64(std::string_view key, std::string_view text) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw CheckpointError("checkpoint: field '" + std::string(key) + "' is not an unsigned integer");
  }
  return v;
}

double parse_double(std::string_view key, std::string_view text) {
  try {
    return parse_real(text);
  } catch (const std::invalid_argument&) {
    throw CheckpointError("checkpoint: field '" + std::string(key) + "' is not a real number");
  }
}

CheckRecord parse_record(std::string_view key, std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 5) throw CheckpointError("checkpoint: malformed record in '" + std::string(key) + "'");
  CheckRecord r;
  r.n = parse_u64(key, parts[0]);
  r.lhs = parse_double(key, parts[1]);
  r.rhs = parse_double(key, parts[2]);
  r.margin = parse_double(key, parts[3]);
  try {
    r.cls = parse_check_class(parts[4]);
  } catch (const std::invalid_argument&) {
    throw CheckpointError("checkpoint: bad class in '" + std::string(key) + "'");
  }
  return r;
}

}  // namespace

std::string serialize_checkpoint(const ScanState& s) {
  std::ostringstream body;
  const auto kv = [&body](std::string_view key, const std::string& value) { body << key << '=' << value << '\n'; };
  body << kMagic << '\n';
  kv("version", std::to_string(kCheckpointVersion));
  kv("spec", s.config.spec_id);
  kv("from", std::to_string(s.config.from));
  kv("to", std::to_string(s.config.to));
  kv("mode", std::string(to_string(s.config.mode)));
  kv("eps_rel", format_real(s.config.eps_rel));
  kv("segment_size", std::to_string(s.config.segment_size));
  kv("counterexample_cap", std::to_string(s.config.counterexample_cap));
  kv("next", std::to_string(s.next));
  kv("omega_prefix", std::to_string(s.omega_prefix));
  kv("pi", std::to_string(s.sums.pi));
  kv("theta.sum", format_real(s.sums.theta.sum));
  kv("theta.compensation", format_real(s.sums.theta.compensation));
  kv("inv_pm1.sum", format_real(s.sums.inv_pm1.sum));
  kv("inv_pm1.compensation", format_real(s.sums.inv_pm1.compensation));
  kv("inv_logp.sum", format_real(s.sums.inv_logp.sum));
  kv("inv_logp.compensation", format_real(s.sums.inv_logp.compensation));
  kv("count.pass", std::to_string(s.counts.pass));
  kv("count.marginal", std::to_string(s.counts.marginal));
  kv("count.fail", std::to_string(s.counts.fail));
  kv("elapsed_seconds", format_real(s.elapsed_seconds));
  kv("extremal", s.extremal ? record_line(*s.extremal) : std::string("none"));
  for (const auto& r : s.counterexamples) kv("counterexample", record_line(r));
  const std::string text = body.str();
  return text + "crc32=" + hex32(crc32_of(text)) + "\n";
}

ScanState parse_checkpoint(std::string_view text) {
  const auto crc_pos = text.rfind("crc32=");
  if (crc_pos == std::string_view::npos || (crc_pos > 0 && text[crc_pos - 1] != '\n')) {
    throw CheckpointError("checkpoint: missing checksum line (truncated file?)");
  }
  const std::string_view body = text.substr(0, crc_pos);
  std::string_view stored = text.substr(crc_pos + 6);
  while (!stored.empty() && (stored.back() == '\n' || stored.back() == '\r')) stored.remove_suffix(1);
  if (stored != hex32(crc32_of(body))) throw CheckpointError("checkpoint: checksum mismatch (corrupted file)");

  std::map<std::string, std::string, std::less<>> fields;
  std::vector<CheckRecord> counterexamples;
  bool magic_seen = false;
  std::size_t start = 0;
  while (start < body.size()) {
    auto end = body.find('\n', start);
    if (end == std::string_view::npos) end = body.size();
    const std::string_view line = body.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    if (!magic_seen) {
      if (line != kMagic) throw CheckpointError("checkpoint: not an omegabound checkpoint");
      magic_seen = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw CheckpointError("checkpoint: malformed line '" + std::string(line) + "'");
    const std::string_view key = line.substr(0, eq);
    const std::string_view value = line.substr(eq + 1);
    if (key == "counterexample") {
      counterexamples.push_back(parse_record(key, value));
    } else if (!fields.emplace(std::string(key), std::string(value)).second) {
      throw CheckpointError("checkpoint: duplicate field '" + std::string(key) + "'");
    }
  }
  if (!magic_seen) throw CheckpointError("checkpoint: empty");

  const auto get = [&fields](std::string_view key) -> const std::string& {
    const auto it = fields.find(key);
    if (it == fields.end()) throw CheckpointError("checkpoint: missing field '" + std::string(key) + "'");
    return it->second;
  };
  const auto u64 = [&](std::string_view key) { return parse_u64(key, get(key)); };
  const auto real = [&](std::string_view key) { return parse_double(key, get(key)); };

  if (u64("version") != static_cast<std::uint64_t>(kCheckpointVersion)) {
    throw CheckpointError("checkpoint: unsupported version " + get("version"));
  }

  ScanState s;
  s.config.spec_id = get("spec");
  s.config.from = u64("from");
  s.config.to = u64("to");
  try {
    s.config.mode = parse_scan_mode(get("mode"));
  } catch (const ModeError&) {
    throw CheckpointError("checkpoint: unknown mode '" + get("mode") + "'");
  }
  s.config.eps_rel = real("eps_rel");
  s.config.segment_size = u64("segment_size");
  s.config.counterexample_cap = u64("counterexample_cap");
  s.next = u64("next");
  s.omega_prefix = u64("omega_prefix");
  s.sums.pi = u64("pi");
  s.sums.theta = {real("theta.sum"), real("theta.compensation")};
  s.sums.inv_pm1 = {real("inv_pm1.sum"), real("inv_pm1.compensation")};
  s.sums.inv_logp = {real("inv_logp.sum"), real("inv_logp.compensation")};
  s.counts = {u64("count.pass"), u64("count.marginal"), u64("count.fail")};
  s.elapsed_seconds = real("elapsed_seconds");
  if (get("extremal") != "none") s.extremal = parse_record("extremal", get("extremal"));
  s.counterexamples = std::move(counterexamples);
  return s;
}

void save_checkpoint(const std::filesystem::path& path, const ScanState& state) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointError("checkpoint: cannot write " + tmp.string());
    out << serialize_checkpoint(state);
    if (!out.flush()) throw CheckpointError("checkpoint: write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CheckpointError("checkpoint: cannot move into place: " + ec.message());
}

std::optional<ScanState> load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return std::nullopt;
  return parse_checkpoint(text);
}

}  // namespace omegabound
