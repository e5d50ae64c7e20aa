#pragma once
#include <functional>
#include <span>
#include <variant>

#include "elliptica/radial_function.hpp"
#include "elliptica/radial_table.hpp"

namespace elliptica {

// Strictly positive continuous modulation on the unit sphere, sampled at
// unit direction vectors.
using AngularFactor = std::function<double(std::span<const double>)>;

// Coefficient function p or q: an analytic power-log radial form or a
// tabulated radial profile, optionally times an angular factor.
class CoefficientField {
 public:
  enum class Form { PowerLog, RadialTable, AngularProduct };

  struct PowerLogSpec {
    double L = 1.0;
    double power = 0.0;
    double log_power = 0.0;
    double r_start = 2.0;  // > 1 so ln r > 0 on the active range
  };

  static CoefficientField power_log(double L, double power, double log_power,
                                    double r_start);
  static CoefficientField table(RadialTable t);
  static CoefficientField angular_product(CoefficientField radial_part,
                                          AngularFactor factor);

  Form form() const { return form_; }
  bool has_angular() const { return static_cast<bool>(angular_); }

  // Value of the radial part at radius r (constant extension below the
  // power-log onset and outside table knots).
  double radial_value(double r) const;

  // Full value at the point r * unit_dir.
  double value(double r, std::span<const double> unit_dir) const;

  // The radial part as a RadialFunction (kinks included).
  RadialFunction radial_function() const;

 private:
  CoefficientField() = default;
  Form form_ = Form::PowerLog;
  std::variant<PowerLogSpec, RadialTable> radial_;
  AngularFactor angular_;
};

}  // namespace elliptica
