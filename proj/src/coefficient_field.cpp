#include "elliptica/coefficient_field.hpp"

#include <cmath>
#include <stdexcept>

namespace elliptica {

CoefficientField CoefficientField::power_log(double L, double power,
                                             double log_power, double r_start) {
  if (!(L > 0.0)) throw std::invalid_argument("coefficient: L must be > 0");
  if (!(r_start > 1.0))
    throw std::invalid_argument("coefficient: onset radius must exceed 1");
  CoefficientField f;
  f.form_ = Form::PowerLog;
  f.radial_ = PowerLogSpec{L, power, log_power, r_start};
  return f;
}

CoefficientField CoefficientField::table(RadialTable t) {
  t.validate();
  CoefficientField f;
  f.form_ = Form::RadialTable;
  f.radial_ = std::move(t);
  return f;
}

CoefficientField CoefficientField::angular_product(CoefficientField radial_part,
                                                   AngularFactor factor) {
  if (radial_part.has_angular())
    throw std::invalid_argument("angular_product: radial part already angular");
  if (!factor) throw std::invalid_argument("angular_product: empty factor");
  CoefficientField f = std::move(radial_part);
  f.form_ = Form::AngularProduct;
  f.angular_ = std::move(factor);
  return f;
}

double CoefficientField::radial_value(double r) const {
  if (std::holds_alternative<PowerLogSpec>(radial_)) {
    const auto& s = std::get<PowerLogSpec>(radial_);
    const double rr = std::max(r, s.r_start);
    return s.L * std::pow(rr, -s.power) * std::pow(std::log(rr), -s.log_power);
  }
  return std::get<RadialTable>(radial_)(r);
}

double CoefficientField::value(double r, std::span<const double> unit_dir) const {
  const double base = radial_value(r);
  if (!angular_) return base;
  const double g = angular_(unit_dir);
  if (!(g > 0.0) || !std::isfinite(g))
    throw std::runtime_error("angular factor must be strictly positive");
  return base * g;
}

RadialFunction CoefficientField::radial_function() const {
  if (std::holds_alternative<PowerLogSpec>(radial_)) {
    const auto& s = std::get<PowerLogSpec>(radial_);
    return RadialFunction::power_log(s.L, s.power, s.log_power, s.r_start);
  }
  return RadialFunction::from_table(std::get<RadialTable>(radial_));
}

}  // namespace elliptica
