#include "omegabound/report_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace omegabound {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

double parse_real(std::string_view text) {
  if (text == "nan") return std::nan("");
  if (text == "inf") return HUGE_VAL;
  if (text == "-inf") return -HUGE_VAL;
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed real '" + std::string(text) + "'");
  }
  return value;
}

nlohmann::ordered_json to_json(const CheckRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["class"] = std::string(to_string(r.cls));
  return j;
}

CheckRecord check_record_from_json(const nlohmann::json& j) {
  CheckRecord r;
  r.n = j.at("n").get<std::uint64_t>();
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.margin = j.at("margin").get<double>();
  r.cls = parse_check_class(j.at("class").get<std::string>());
  return r;
}

nlohmann::ordered_json to_json(const VerificationReport& report, bool include_runtime) {
  nlohmann::ordered_json j;
  j["format"] = "omegabound-report";
  j["version"] = 1;
  j["spec_id"] = report.spec_id;
  j["range"] = {{"from", report.from}, {"to", report.to}};
  j["mode"] = report.mode;
  j["counts"] = {{"pass", report.counts.pass}, {"marginal", report.counts.marginal}, {"fail", report.counts.fail}};
  auto& list = j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& r : report.counterexamples) list.push_back(to_json(r));
  j["extremal"] = report.extremal ? to_json(*report.extremal) : nlohmann::ordered_json(nullptr);
  if (report.below_threshold) j["below_threshold"] = to_json(*report.below_threshold);
  if (include_runtime) j["runtime_seconds"] = report.runtime_seconds;
  j["config"] = {{"eps_rel", report.eps_rel},
                 {"segment_size", report.segment_size},
                 {"counterexample_cap", report.counterexample_cap}};
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  if (j.value("format", std::string{}) != "omegabound-report") {
    throw std::invalid_argument("not an omegabound report");
  }
  VerificationReport r;
  r.spec_id = j.at("spec_id").get<std::string>();
  r.from = j.at("range").at("from").get<std::uint64_t>();
  r.to = j.at("range").at("to").get<std::uint64_t>();
  r.mode = j.at("mode").get<std::string>();
  r.counts.pass = j.at("counts").at("pass").get<std::uint64_t>();
  r.counts.marginal = j.at("counts").at("marginal").get<std::uint64_t>();
  r.counts.fail = j.at("counts").at("fail").get<std::uint64_t>();
  for (const auto& c : j.at("counterexamples")) r.counterexamples.push_back(check_record_from_json(c));
  if (!j.at("extremal").is_null()) r.extremal = check_record_from_json(j.at("extremal"));
  if (j.contains("below_threshold")) r.below_threshold = check_record_from_json(j.at("below_threshold"));
  r.runtime_seconds = j.value("runtime_seconds", 0.0);
  r.eps_rel = j.at("config").at("eps_rel").get<double>();
  r.segment_size = j.at("config").at("segment_size").get<std::uint64_t>();
  r.counterexample_cap = j.at("config").at("counterexample_cap").get<std::size_t>();
  return r;
}

std::string report_to_json_string(const VerificationReport& report, bool include_runtime) {
  return to_json(report, include_runtime).dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "spec_id,from,to,mode,eps_rel,segment_size,pass,marginal,fail,"
         "extremal_n,extremal_lhs,extremal_rhs,extremal_margin,extremal_class\n";
  out << report.spec_id << ',' << report.from << ',' << report.to << ',' << report.mode << ','
      << format_real(report.eps_rel) << ',' << report.segment_size << ',' << report.counts.pass << ','
      << report.counts.marginal << ',' << report.counts.fail << ',';
  if (report.extremal) {
    const auto& e = *report.extremal;
    out << e.n << ',' << format_real(e.lhs) << ',' << format_real(e.rhs) << ',' << format_real(e.margin) << ','
        << to_string(e.cls);
  } else {
    out << ",,,,";
  }
  out << '\n';
  return out.str();
}

}  // namespace omegabound
