#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "omegabound/sieve.hpp"

namespace omegabound {

/// Rows of (n, values...) ordered by n. Catalog bounds produce (lhs, rhs, margin);
/// plain functions produce a single "value" column.
struct SeriesTable {
  std::string name;
  std::vector<std::string> columns;  // excluding the leading "n"
  std::vector<std::uint64_t> n;
  std::vector<std::vector<double>> rows;
};

/// Names accepted by evaluate_series besides the catalog ids.
const std::vector<std::string_view>& series_functions();

std::vector<std::uint64_t> linear_points(std::uint64_t from, std::uint64_t to, std::uint64_t stride);

/// About `count` points spaced evenly in log n over [from, to], rounded, deduplicated, endpoints included.
std::vector<std::uint64_t> log_spaced_points(std::uint64_t from, std::uint64_t to, std::size_t count);

/// `points` must be strictly increasing. Throws CatalogError for unknown names and
/// DomainError when a point is outside the function's domain.
SeriesTable evaluate_series(std::string_view name, std::span<const std::uint64_t> points,
                            std::uint64_t segment_size = kDefaultSegmentSize);

std::string series_to_csv(const SeriesTable& table);
nlohmann::ordered_json series_to_json(const SeriesTable& table);

}  // namespace omegabound
