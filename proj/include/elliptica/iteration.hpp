#pragma once
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "elliptica/classifier.hpp"
#include "elliptica/radial_table.hpp"

namespace elliptica {

// Log-uniform radial grid; nodes[0] = start, with start >= 1 so the log
// coordinate is nonnegative.
struct RadialGrid {
  std::vector<double> nodes;

  static RadialGrid make(double start, double end, int count);
  void validate() const;
  double start() const { return nodes.front(); }
  double end() const { return nodes.back(); }
  double log_step() const;
};

// Grids of the lower-bound iterates u_k, v_k on a radial grid, together
// with the reduced coefficient profiles driving them.  k = 0 is the
// all-ones seed; later iterates vanish at the grid start.
struct IterationState {
  int k = 0;
  std::vector<double> u_values;
  std::vector<double> v_values;
  SystemConfig config;
  RadialTable p_profile;
  RadialTable q_profile;
  bool saturated = false;  // an iterate exceeded 1e300 and was clamped

  static IterationState initial(const SystemConfig& cfg, const RadialGrid& grid,
                                const std::function<double(double)>& p_tilde,
                                const std::function<double(double)>& q_tilde);

  // Interpolated accessors (linear in ln r, clamped at the ends).
  double u_at(double r, const RadialGrid& grid) const;
  double v_at(double r, const RadialGrid& grid) const;

  // CSV columns r,u_k,v_k preceded by "# k=<k> alpha=<a> beta=<b> N=<N>".
  void write_csv(std::ostream& out, const RadialGrid& grid) const;
};

// Window/exponent parameters for the windowed functionals.  Requires
// 1 < a < b <= 2; m and n must make r^{1-m} p(r) and r^{1-n} q(r)
// nonincreasing on the grid (validated numerically on the profiles).
struct WindowParams {
  int m = 1;
  int n = 1;
  double a = 1.5;
  double b = 2.0;

  void validate() const;
};

// One recurrence step:
//   u_new(r) = 1/(N-2) int_rho^r s p(s) [1 - (s/r)^{N-2}] v_old^alpha(s) ds
// and symmetrically for v with q and beta.  Trapezoidal in ln s on a
// substeps-refined copy of the grid, kernel split exactly into its two
// cumulative terms.  Values exceeding 1e300 set the saturation flag and the
// step completes with clamped values.
IterationState iterate(const IterationState& state, const RadialGrid& grid,
                       int substeps = 16);

// Windowed functionals on [R, aR] (window edges become exact quadrature
// nodes):
//   y_k = int_R^{aR} (aR-s)^m s^{1-m} p(s) v_k^alpha(s) ds
//   z_k = int_R^{aR} (aR-s)^n s^{1-n} q(s) u_k^beta(s) ds
std::pair<double, double> window_functionals(const IterationState& state,
                                             const RadialGrid& grid,
                                             const WindowParams& w, double R,
                                             int substeps = 16);

enum class OscBranch { Y, Z };

// Divergence-probe quantity at window start R.  For the Z branch:
//   z_k^{(ab-1)/((m+1)b+n+1)}(R) *
//     int_{aR}^{bR} ( s^{1-n} q(s) (s^{1-m} p(s))^b )^{1/((m+1)b+n+1)} ds
// and mirrored for Y with exponent (ab-1)/((n+1)a+m+1).
double oscillation_quantity(const IterationState& state, const RadialGrid& grid,
                            const WindowParams& w, double R, OscBranch branch,
                            int substeps = 16);

struct OscillationProbe {
  std::vector<std::pair<double, double>> samples;  // (R, quantity)
  double growth_order = 0.0;  // fitted exponent of (ln R)^sigma growth
  double residual = 0.0;
  bool divergence_signature = false;  // positive growth with residual < 0.2
};

// Evaluates the quantity over the geometric schedule R0 * 2^j,
// j = 0 .. octaves-1, and fits the growth order in ln R.
OscillationProbe oscillation_probe(const IterationState& state,
                                   const RadialGrid& grid,
                                   const WindowParams& w, double R0,
                                   int octaves, OscBranch branch,
                                   int substeps = 16);

enum class GrowthModel { PowerOfR, PowerOfLnR, PowerOfLnLnR };

struct GrowthFit {
  double exponent = 0.0;
  double residual = 0.0;  // RMS deviation in the fitted log coordinates
};

// Least-squares slope of ln(value) against the model coordinate
// (ln r, ln ln r, or ln ln ln r) over the upper half of the sample range.
// Requires >= 8 samples with positive values.
GrowthFit fit_growth_exponent(
    std::span<const std::pair<double, double>> samples, GrowthModel model);

// Randomized verification of the kernel lower bounds used by the window
// machinery: for R <= s <= r <= bR,
//   1 - (s/r)^{N-2} >= ((N-2)/b^{N-2}) ((r-s)/s)^m   and
//   1 - (s/r)^{N-2} >= (r-s)/r.
bool kernel_bounds_check(int dimension, double b, int m, long trials,
                         std::uint64_t seed);

// Smallest integer m >= 1 with r^{1-m} profile(r) nonincreasing across all
// consecutive grid nodes; nullopt if none <= 64 works.
std::optional<int> minimal_monotone_order(const RadialTable& profile);

// ln-exponent sequence governing iterate growth:
//   sigma_k = -xi - beta nu + (alpha^k beta^k - 1)(1 - xi - beta nu)
//             * alpha beta / (alpha beta - 1).
double sigma_exponent(const SystemConfig& cfg, double nu, double xi, int k);

// Smallest k <= 64 with sigma_k > 0, if any.
std::optional<int> sigma_positive_from(const SystemConfig& cfg, double nu,
                                       double xi);

}  // namespace elliptica
