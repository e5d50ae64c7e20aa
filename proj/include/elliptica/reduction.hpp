#pragma once
#include <cstdint>
#include <span>

#include "elliptica/coefficient_field.hpp"
#include "elliptica/sphere.hpp"

namespace elliptica {

// Generalized spherical mean reducing a coefficient field to a radial
// profile.  For exponent > 1 it is the power mean of order 1/(1-exponent)
// over the sphere |x| = r:
//     ( (1 / (omega_N r^{N-1})) \oint f^{1/(1-exponent)} dS )^{1-exponent},
// which equals the radial part exactly for radial fields.  For
// exponent = 1 it is the minimum over the sphere, estimated by the node
// minimum with node doubling until the estimate moves by < 1e-6 relative
// (node cap 2^20).  If the field drops below 1e-300 at any node and
// exponent > 1 the reduced value is 0 (the negative-power surface integral
// diverges).  Exponents below 1 are rejected.
double reduce_coefficient(const CoefficientField& field, double exponent,
                          double r, const SphereQuadrature& quad,
                          int dimension, std::uint64_t salt = 0);

// reduce_coefficient on every grid radius; MonteCarlo node sets are salted
// with the radius index, so parallel evaluation order cannot change results.
RadialTable reduced_profile(const CoefficientField& field, double exponent,
                            std::span<const double> grid,
                            const SphereQuadrature& quad, int dimension);

}  // namespace elliptica
