#pragma once
#include <functional>
#include <vector>

namespace elliptica {

// n-point Gauss-Legendre integral of f over [a, b].
double gauss_panel(const std::function<double(double)>& f, double a, double b,
                   int order = 15);

// Cumulative integral of a locally smooth nonnegative function on [0, oo):
// fixed uniform panels on [0, 1], geometrically spaced panels beyond
// (panels_per_octave per factor of two), 15-point Gauss-Legendre on each
// panel.  Kink radii are inserted as panel edges.  The panel/prefix arrays
// extend lazily as larger upper limits are requested.
class CumulativeIntegral {
 public:
  CumulativeIntegral(std::function<double(double)> f,
                     std::vector<double> kinks, int panels_per_octave = 16,
                     int head_panels = 32);

  // Integral over [0, t]; t <= 0 yields 0.
  double up_to(double t) const;

 private:
  void extend_to(double t) const;

  std::function<double(double)> f_;
  std::vector<double> pending_kinks_;  // sorted, not yet crossed
  double growth_;                      // 2^(1/panels_per_octave)
  mutable std::vector<double> edges_;
  mutable std::vector<double> prefix_;
  mutable std::size_t next_kink_ = 0;
};

}  // namespace elliptica
