#pragma once
#include <iosfwd>
#include <vector>

namespace elliptica {

// Tabulated nonnegative radial profile.  Evaluation interpolates the values
// linearly in ln r and clamps to the end values outside the knot range
// (constant extension), so profiles stay defined down to r = 0.
struct RadialTable {
  std::vector<double> radii;   // strictly increasing, positive
  std::vector<double> values;  // nonnegative, finite

  void validate() const;
  double operator()(double r) const;
  bool empty() const { return radii.empty(); }
  std::size_t size() const { return radii.size(); }

  // Two-column CSV "r,value" with 17-significant-digit floats.
  void write_csv(std::ostream& out) const;
  static RadialTable read_csv(std::istream& in);
};

}  // namespace elliptica
