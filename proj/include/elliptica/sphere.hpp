#pragma once
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace elliptica {

// Surface area of the unit sphere in R^N: 2 pi^{N/2} / Gamma(N/2).
// Computed through lgamma; relative error <= 1e-12.  Requires N >= 2.
double surface_area(int dimension);

// Gauss-Legendre rule on [-1, 1], cached per order (thread safe).
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(
    int order);

struct SphereNodes {
  int dimension = 3;
  std::vector<double> points;   // count x dimension, row major unit vectors
  std::vector<double> weights;  // sum to surface_area(dimension)

  int count() const { return static_cast<int>(weights.size()); }
  std::span<const double> point(int i) const {
    return {points.data() + static_cast<std::size_t>(i) * dimension,
            static_cast<std::size_t>(dimension)};
  }
};

// Quadrature node generator for spheres.  ProductGauss (N = 3 only) pairs
// Gauss-Legendre in the polar cosine with uniform azimuth; MonteCarlo
// (any N >= 3) draws directions from normalized Gaussians with equal
// weights.  Node sets are a pure function of (seed, salt, node_count), so
// per-radius evaluations can run concurrently without changing results.
struct SphereQuadrature {
  enum class Scheme { ProductGauss, MonteCarlo };

  Scheme scheme = Scheme::ProductGauss;
  int node_count = 512;
  std::uint64_t seed = 0;

  SphereNodes nodes(int dimension, std::uint64_t salt = 0) const;
};

}  // namespace elliptica
