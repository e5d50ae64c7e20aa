#include "elliptica/radial_function.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace elliptica {

RadialFunction RadialFunction::zero() {
  return {[](double) { return 0.0; }, {}};
}

RadialFunction RadialFunction::constant(double c) {
  if (!(c >= 0.0) || !std::isfinite(c))
    throw std::invalid_argument("constant field must be nonnegative");
  return {[c](double) { return c; }, {}};
}

RadialFunction RadialFunction::power_log(double L, double power,
                                         double log_power, double r_start) {
  if (!(L > 0.0)) throw std::invalid_argument("power_log: L must be > 0");
  if (!(r_start > 1.0))
    throw std::invalid_argument("power_log: onset radius must exceed 1");
  const double onset_value =
      L * std::pow(r_start, -power) * std::pow(std::log(r_start), -log_power);
  auto f = [=](double r) {
    if (r < r_start) return onset_value;
    return L * std::pow(r, -power) * std::pow(std::log(r), -log_power);
  };
  return {f, {r_start}};
}

RadialFunction RadialFunction::bounded_power(double k) {
  if (!(k >= 0.0)) throw std::invalid_argument("bounded_power: k must be >= 0");
  if (k == 0.0) return constant(1.0);
  auto f = [k](double r) { return r <= 1.0 ? 1.0 : std::pow(r, -k); };
  return {f, {1.0}};
}

RadialFunction RadialFunction::from_table(RadialTable table) {
  table.validate();
  auto shared = std::make_shared<RadialTable>(std::move(table));
  std::vector<double> kinks = shared->radii;
  return {[shared](double r) { return (*shared)(r); }, std::move(kinks)};
}

RadialFunction RadialFunction::parse(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? std::string() : spec.substr(colon + 1);
  if (head == "zero") return zero();
  if (head == "const") return constant(std::stod(rest));
  if (head == "bounded") return bounded_power(std::stod(rest));
  if (head == "powerlog") {
    std::istringstream in(rest);
    double vals[4];
    char sep = ',';
    for (int i = 0; i < 4; ++i) {
      if (i > 0 && !(in >> sep && sep == ','))
        throw std::invalid_argument("powerlog spec: expected L,P,LP,RSTART");
      if (!(in >> vals[i]))
        throw std::invalid_argument("powerlog spec: expected L,P,LP,RSTART");
    }
    return power_log(vals[0], vals[1], vals[2], vals[3]);
  }
  if (head == "table") {
    std::ifstream in(rest);
    if (!in) throw std::invalid_argument("table spec: cannot open " + rest);
    return from_table(RadialTable::read_csv(in));
  }
  throw std::invalid_argument("unknown radial field spec: " + spec);
}

RadialFunction scaled(const RadialFunction& f, double c) {
  if (!(c >= 0.0)) throw std::invalid_argument("scale must be nonnegative");
  auto g = f.eval;
  return {[g, c](double r) { return c * g(r); }, f.kinks};
}

}  // namespace elliptica
