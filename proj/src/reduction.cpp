#include "elliptica/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace elliptica {

namespace {

constexpr double kZeroThreshold = 1e-300;

std::vector<double> sample_field(const CoefficientField& field, double r,
                                 const SphereNodes& nodes) {
  std::vector<double> out(static_cast<std::size_t>(nodes.count()));
  for (int i = 0; i < nodes.count(); ++i) {
    const double v = field.value(r, nodes.point(i));
    if (!std::isfinite(v) || v < 0.0)
      throw std::runtime_error("coefficient sample not finite/nonnegative");
    out[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

double node_minimum(const CoefficientField& field, double r,
                    const SphereQuadrature& quad, int dimension,
                    std::uint64_t salt) {
  SphereQuadrature q = quad;
  double prev = -1.0;
  while (true) {
    const auto nodes = q.nodes(dimension, salt);
    const auto vals = sample_field(field, r, nodes);
    const double cur = *std::min_element(vals.begin(), vals.end());
    if (prev >= 0.0) {
      const double scale = std::max(cur, 1e-300);
      if (std::abs(cur - prev) < 1e-6 * scale) return cur;
    }
    if (q.node_count >= (1 << 20)) return cur;
    prev = cur;
    q.node_count *= 2;
  }
}

}  // namespace

double reduce_coefficient(const CoefficientField& field, double exponent,
                          double r, const SphereQuadrature& quad,
                          int dimension, std::uint64_t salt) {
  if (!(r > 0.0)) throw std::invalid_argument("reduce: radius must be > 0");
  if (!(exponent >= 1.0))
    throw std::invalid_argument(
        "reduce: exponent must be >= 1 (no reduction is defined below 1)");

  if (exponent == 1.0) return node_minimum(field, r, quad, dimension, salt);

  const auto nodes = quad.nodes(dimension, salt);
  const auto vals = sample_field(field, r, nodes);
  for (double v : vals)
    if (v <= kZeroThreshold) return 0.0;

  // Power mean of order p = 1/(1-exponent) < 0, in log space so extreme
  // exponents cannot overflow.
  const double p = 1.0 / (1.0 - exponent);
  const double omega = surface_area(dimension);
  std::vector<double> logs(vals.size());
  double lmax = -HUGE_VAL;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    logs[i] = p * std::log(vals[i]);
    lmax = std::max(lmax, logs[i]);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i)
    acc += nodes.weights[i] / omega * std::exp(logs[i] - lmax);
  const double log_mean = lmax + std::log(acc);
  return std::exp((1.0 - exponent) * log_mean);
}

RadialTable reduced_profile(const CoefficientField& field, double exponent,
                            std::span<const double> grid,
                            const SphereQuadrature& quad, int dimension) {
  if (grid.empty()) throw std::invalid_argument("reduced_profile: empty grid");
  RadialTable out;
  out.radii.assign(grid.begin(), grid.end());
  out.values.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw std::invalid_argument("reduced_profile: grid must be increasing");
    out.values[i] =
        reduce_coefficient(field, exponent, grid[i], quad, dimension, i);
  }
  out.validate();
  return out;
}

}  // namespace elliptica
