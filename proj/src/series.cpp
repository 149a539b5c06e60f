#include "omegabound/series.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>

#include "omegabound/bounds.hpp"
#include "omegabound/catalog.hpp"
#include "omegabound/errors.hpp"
#include "omegabound/report_io.hpp"
#include "omegabound/valuations.hpp"

namespace omegabound {

namespace {

// Streams the sieve from 1 to points.back() and calls `visit` at each requested point.
void walk_points(std::span<const std::uint64_t> points, std::uint64_t segment_size, bool need_primes,
                 const std::function<void(const PointContext&)>& visit) {
  if (points.empty()) return;
  const std::uint64_t end = points.back();
  SegmentedOmega engine(end);
  std::vector<std::uint8_t> omega;
  std::vector<std::uint32_t> primes;
  PrimeSumsAccumulator sums;
  std::uint64_t prefix = 0;
  std::size_t next_point = 0;
  PointContext ctx;
  for (std::uint64_t lo = 1; lo <= end;) {
    const std::uint64_t hi = (end + 1 - lo > segment_size) ? lo + segment_size : end + 1;
    engine.compute(lo, hi, omega);
    for (std::size_t i = 0; i < omega.size(); ++i) {
      const std::uint64_t n = lo + i;
      prefix += omega[i];
      if (omega[i] == 1) {
        sums.add_prime(n);
        if (need_primes) primes.push_back(static_cast<std::uint32_t>(n));
      }
      if (n != points[next_point]) continue;
      ctx.n = n;
      ctx.omega = omega[i];
      ctx.omega_prefix = prefix;
      ctx.sums = sums.at(n);
      ctx.primes = primes;
      visit(ctx);
      ++next_point;
    }
    lo = hi;
  }
}

void require_min(std::span<const std::uint64_t> points, std::uint64_t min, std::string_view name) {
  if (!points.empty() && points.front() < min) {
    throw DomainError("'" + std::string(name) + "' is defined from n=" + std::to_string(min));
  }
}

using PointFunction = std::function<double(const PointContext&)>;

struct ContextFunction {
  std::string_view name;
  std::uint64_t domain_min;
  PointFunction eval;
};

const std::vector<ContextFunction>& context_functions() {
  static const std::vector<ContextFunction> fns = {
      {"hardy-ramanujan-remainder", 3,
       [](const PointContext& c) {
         const double x = static_cast<double>(c.n);
         return (static_cast<double>(c.omega_prefix) - hardy_ramanujan_main(c.n)) * std::log(x) / x;
       }},
      {"omega-prefix-sum", 1, [](const PointContext& c) { return static_cast<double>(c.omega_prefix); }},
      {"big-omega", 1, [](const PointContext& c) { return static_cast<double>(c.omega); }},
      {"pi", 2, [](const PointContext& c) { return static_cast<double>(c.sums.pi); }},
      {"theta", 2, [](const PointContext& c) { return c.sums.theta; }},
      {"sum-inv-pm1", 2, [](const PointContext& c) { return c.sums.sum_inv_pm1; }},
      {"sum-inv-logp", 2, [](const PointContext& c) { return c.sums.sum_inv_logp; }},
      {"correction-term", 2,
       [](const PointContext& c) {
         return static_cast<double>(c.sums.pi) + std::log(static_cast<double>(c.n)) * c.sums.sum_inv_logp;
       }},
  };
  return fns;
}

void check_points(std::span<const std::uint64_t> points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i] <= points[i - 1]) throw DomainError("evaluation points must be strictly increasing");
  }
}

}  // namespace

const std::vector<std::string_view>& series_functions() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out{"f-ratio", "upsilon", "inverse-gamma"};
    for (const auto& f : context_functions()) out.push_back(f.name);
    return out;
  }();
  return names;
}

std::vector<std::uint64_t> linear_points(std::uint64_t from, std::uint64_t to, std::uint64_t stride) {
  if (stride < 1) throw DomainError("stride must be >= 1");
  if (to < from) throw DomainError("empty range: to < from");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = from;; n += stride) {
    out.push_back(n);
    if (to - n < stride) break;
  }
  return out;
}

std::vector<std::uint64_t> log_spaced_points(std::uint64_t from, std::uint64_t to, std::size_t count) {
  if (from < 1 || to < from) throw DomainError("log spacing needs 1 <= from <= to");
  if (count < 2 || from == to) return {from};
  std::vector<std::uint64_t> out;
  const double a = std::log(static_cast<double>(from));
  const double b = std::log(static_cast<double>(to));
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    auto n = static_cast<std::uint64_t>(std::llround(std::exp(a + t * (b - a))));
    n = std::clamp(n, from, to);
    if (out.empty() || n > out.back()) out.push_back(n);
  }
  if (out.back() != to) out.push_back(to);
  return out;
}

SeriesTable evaluate_series(std::string_view name, std::span<const std::uint64_t> points,
                            std::uint64_t segment_size) {
  check_points(points);
  SeriesTable table;
  table.name = std::string(name);

  for (const auto& spec : bound_catalog()) {
    if (spec.id != name) continue;
    require_min(points, spec.domain_min, name);
    table.columns = {"lhs", "rhs", "margin"};
    const auto emit = [&](const PointContext& ctx) {
      const CheckRecord r = spec.check(ctx, 0.0);
      table.n.push_back(ctx.n);
      table.rows.push_back({r.lhs, r.rhs, r.margin});
    };
    if (spec.needs_sieve) {
      walk_points(points, segment_size, spec.needs_prime_list, emit);
    } else {
      PointContext ctx;
      for (const auto n : points) {
        ctx.n = n;
        emit(ctx);
      }
    }
    return table;
  }

  table.columns = {"value"};
  if (name == "f-ratio" || name == "upsilon") {
    require_min(points, 2, name);
    if (points.empty()) return table;
    const FactorSieve sieve = build_spf(std::max<std::uint64_t>(points.back(), 2));
    for (const auto n : points) {
      table.n.push_back(n);
      table.rows.push_back(
          {name == "f-ratio" ? f_ratio(n, sieve) : static_cast<double>(upsilon(n, sieve))});
    }
    return table;
  }
  if (name == "inverse-gamma") {
    require_min(points, 2, name);
    for (const auto n : points) {
      table.n.push_back(n);
      table.rows.push_back({inverse_gamma(static_cast<double>(n))});
    }
    return table;
  }
  for (const auto& fn : context_functions()) {
    if (fn.name != name) continue;
    require_min(points, fn.domain_min, name);
    walk_points(points, segment_size, false, [&](const PointContext& ctx) {
      table.n.push_back(ctx.n);
      table.rows.push_back({fn.eval(ctx)});
    });
    return table;
  }
  throw CatalogError("unknown bound or function '" + std::string(name) + "'");
}

std::string series_to_csv(const SeriesTable& table) {
  std::ostringstream out;
  out << 'n';
  for (const auto& c : table.columns) out << ',' << c;
  out << '\n';
  for (std::size_t i = 0; i < table.n.size(); ++i) {
    out << table.n[i];
    for (const double v : table.rows[i]) out << ',' << format_real(v);
    out << '\n';
  }
  return out.str();
}

nlohmann::ordered_json series_to_json(const SeriesTable& table) {
  nlohmann::ordered_json j;
  j["name"] = table.name;
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < table.n.size(); ++i) {
    nlohmann::ordered_json row;
    row["n"] = table.n[i];
    for (std::size_t c = 0; c < table.columns.size(); ++c) row[table.columns[c]] = table.rows[i][c];
    rows.push_back(std::move(row));
  }
  return j;
}

}  // namespace omegabound
