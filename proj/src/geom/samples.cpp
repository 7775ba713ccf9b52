#include "csurg/geom/samples.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "csurg/error.hpp"

namespace csurg::geom {

std::vector<ChartPoint> parse_samples(std::istream& in, const Chart& chart) {
  std::vector<ChartPoint> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<double> values;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        throw Error(ErrorCode::malformed_text,
                    "line " + std::to_string(lineno) + ": not a number: " + tok);
      values.push_back(v);
    }
    Vec x = Eigen::Map<Vec>(values.data(), static_cast<Eigen::Index>(values.size()));
    try {
      out.push_back(make_point(chart, std::move(x)));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

namespace {

Vec gaussian(std::mt19937_64& rng, int m) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(m);
  for (int i = 0; i < m; ++i) v(i) = g(rng);
  return v;
}

Vec draw(const Chart& chart, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int m = chart.ambient_dim();
  Vec x(m);
  for (int i = 0; i < m; ++i) x(i) = box(rng);
  switch (chart.id) {
    case ChartId::sphere:
      x = gaussian(rng, m).normalized();
      break;
    case ChartId::handle:
      x(0) *= 0.9;
      break;
    case ChartId::rounding_collar:
      x(1) *= 0.9;
      break;
    case ChartId::symplectization:
      x(0) = 0.5 + 0.5 * unit(rng);
      break;
    case ChartId::handle_belt: {
      const int k = chart.k;
      if (k > 0) {
        const Vec dir = gaussian(rng, k).normalized();
        const double r = 0.9 * std::pow(unit(rng), 1.0 / k);
        for (int j = 0; j < k; ++j) x(2 * j) = r * dir(j);
      }
      const int sphere_dim = m - k;
      const Vec s = gaussian(rng, sphere_dim).normalized();
      int idx = 0;
      for (int i = 0; i < m; ++i) {
        const bool disk = i / 2 < k && i % 2 == 0;
        if (!disk) x(i) = s(idx++);
      }
      break;
    }
    case ChartId::cotangent_sphere: {
      const int d = chart.n + 1;
      const Vec u = gaussian(rng, d).normalized();
      Vec v = gaussian(rng, d);
      v -= u.dot(v) * u;
      x.head(d) = u;
      x.tail(d) = v;
      break;
    }
    default:
      break;
  }
  return x;
}

}  // namespace

std::vector<ChartPoint> random_samples(const Chart& chart, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ChartPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(make_point(chart, draw(chart, rng)));
  return out;
}

}  // namespace csurg::geom
