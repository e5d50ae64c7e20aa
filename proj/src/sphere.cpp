#include "elliptica/sphere.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "elliptica/detail/format.hpp"

namespace elliptica {

double surface_area(int dimension) {
  if (dimension < 2) throw std::invalid_argument("surface_area: N must be >= 2");
  const double half = 0.5 * dimension;
  return std::exp(std::log(2.0) + half * std::log(M_PI) - std::lgamma(half));
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(
    int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  std::vector<double> x(order), w(order);
  const int n = order;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton iteration from the Chebyshev-based initial guess.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  return cache.emplace(order, std::make_pair(std::move(x), std::move(w)))
      .first->second;
}

namespace {

SphereNodes product_gauss_nodes(int node_count) {
  int n_polar = 2;
  while (2 * n_polar * n_polar < node_count) ++n_polar;
  const int n_az = 2 * n_polar;
  const auto& [gx, gw] = gauss_legendre(n_polar);

  SphereNodes out;
  out.dimension = 3;
  out.points.reserve(static_cast<std::size_t>(n_polar) * n_az * 3);
  out.weights.reserve(static_cast<std::size_t>(n_polar) * n_az);
  const double az_weight = 2.0 * M_PI / n_az;
  for (int i = 0; i < n_polar; ++i) {
    const double z = gx[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int j = 0; j < n_az; ++j) {
      const double phi = 2.0 * M_PI * (j + 0.5) / n_az;
      out.points.push_back(s * std::cos(phi));
      out.points.push_back(s * std::sin(phi));
      out.points.push_back(z);
      out.weights.push_back(gw[i] * az_weight);
    }
  }
  return out;
}

// Deterministic uniform doubles in [0, 1) from a counter-mode stream.
struct BitStream {
  std::uint64_t state;
  explicit BitStream(std::uint64_t s) : state(s) {}
  double next() {
    state = detail::splitmix64(state);
    return static_cast<double>(state >> 11) * 0x1.0p-53;
  }
};

SphereNodes monte_carlo_nodes(int dimension, int node_count,
                              std::uint64_t seed, std::uint64_t salt) {
  SphereNodes out;
  out.dimension = dimension;
  out.points.resize(static_cast<std::size_t>(node_count) * dimension);
  out.weights.assign(node_count,
                     surface_area(dimension) / static_cast<double>(node_count));

  BitStream rng(detail::splitmix64(seed ^ detail::splitmix64(salt + 1)) ^
                static_cast<std::uint64_t>(node_count) * 0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < node_count; ++i) {
    double* p = out.points.data() + static_cast<std::size_t>(i) * dimension;
    double norm2 = 0.0;
    do {
      // Box-Muller pairs; hand rolled so node sets never depend on the
      // standard library's distribution internals.
      for (int d = 0; d < dimension; d += 2) {
        double u1 = rng.next();
        while (u1 <= 0.0) u1 = rng.next();
        const double u2 = rng.next();
        const double m = std::sqrt(-2.0 * std::log(u1));
        p[d] = m * std::cos(2.0 * M_PI * u2);
        if (d + 1 < dimension) p[d + 1] = m * std::sin(2.0 * M_PI * u2);
      }
      norm2 = 0.0;
      for (int d = 0; d < dimension; ++d) norm2 += p[d] * p[d];
    } while (norm2 < 1e-300);
    const double inv = 1.0 / std::sqrt(norm2);
    for (int d = 0; d < dimension; ++d) p[d] *= inv;
  }
  return out;
}

}  // namespace

SphereNodes SphereQuadrature::nodes(int dimension, std::uint64_t salt) const {
  if (dimension < 3)
    throw std::invalid_argument("sphere quadrature: N must be >= 3");
  if (node_count < 1)
    throw std::invalid_argument("sphere quadrature: node_count must be >= 1");
  if (scheme == Scheme::ProductGauss) {
    if (dimension != 3)
      throw std::invalid_argument("ProductGauss scheme is defined for N = 3");
    return product_gauss_nodes(node_count);
  }
  return monte_carlo_nodes(dimension, node_count, seed, salt);
}

}  // namespace elliptica
