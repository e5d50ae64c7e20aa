#pragma once
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "elliptica/radial_table.hpp"

namespace elliptica {

// Nonnegative radial coefficient r -> value together with the kink radii
// downstream quadratures should honor as panel edges.
struct RadialFunction {
  std::function<double(double)> eval;
  std::vector<double> kinks;

  double operator()(double r) const { return eval(r); }

  static RadialFunction zero();
  static RadialFunction constant(double c);
  // L r^-power (ln r)^-log_power for r >= r_start, held at the r_start
  // value below it.  Requires L > 0 and r_start > 1.
  static RadialFunction power_log(double L, double power, double log_power,
                                  double r_start);
  // min(1, r^-k); the k = 0 case is the constant 1.
  static RadialFunction bounded_power(double k);
  static RadialFunction from_table(RadialTable table);

  // Micro-grammar used by the CLI: "zero", "const:C", "bounded:K",
  // "powerlog:L,POWER,LOGPOWER,RSTART", "table:PATH".
  static RadialFunction parse(const std::string& spec);
};

RadialFunction scaled(const RadialFunction& f, double c);

}  // namespace elliptica
