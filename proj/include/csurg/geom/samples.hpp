#pragma once

#include <cstdint>
#include <istream>
#include <vector>

#include "csurg/geom/chart.hpp"

namespace csurg::geom {

// One point per line, whitespace-separated coordinates; blank lines and lines
// starting with '#' are skipped. Throws malformed_text with the line number.
std::vector<ChartPoint> parse_samples(std::istream& in, const Chart& chart);

// Seeded points strictly inside the chart's domain (constraints satisfied to
// rounding). Box coordinates are drawn from [-1,1], handle and collar
// parameters stay 10% away from their ends.
std::vector<ChartPoint> random_samples(const Chart& chart, std::size_t count, std::uint64_t seed);

}  // namespace csurg::geom
