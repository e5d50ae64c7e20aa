#include "elliptica/radial_table.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "elliptica/detail/format.hpp"

namespace elliptica {

void RadialTable::validate() const {
  if (radii.size() != values.size())
    throw std::invalid_argument("radial table: radii/values size mismatch");
  if (radii.empty()) throw std::invalid_argument("radial table: empty");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || !std::isfinite(radii[i]))
      throw std::invalid_argument("radial table: radii must be positive");
    if (i > 0 && !(radii[i] > radii[i - 1]))
      throw std::invalid_argument("radial table: radii must be increasing");
    if (values[i] < 0.0 || !std::isfinite(values[i]))
      throw std::invalid_argument("radial table: values must be nonnegative");
  }
}

double RadialTable::operator()(double r) const {
  if (radii.empty()) throw std::invalid_argument("radial table: empty");
  if (r <= radii.front()) return values.front();
  if (r >= radii.back()) return values.back();
  auto it = std::upper_bound(radii.begin(), radii.end(), r);
  const std::size_t hi = static_cast<std::size_t>(it - radii.begin());
  const std::size_t lo = hi - 1;
  const double t = (std::log(r) - std::log(radii[lo])) /
                   (std::log(radii[hi]) - std::log(radii[lo]));
  return values[lo] + t * (values[hi] - values[lo]);
}

void RadialTable::write_csv(std::ostream& out) const {
  out << "r,value\n";
  for (std::size_t i = 0; i < radii.size(); ++i)
    out << detail::g17(radii[i]) << ',' << detail::g17(values[i]) << '\n';
}

RadialTable RadialTable::read_csv(std::istream& in) {
  RadialTable t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (first) {
      first = false;
      if (line.rfind("r,", 0) == 0) continue;  // header row
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("radial table csv: missing comma");
    t.radii.push_back(std::stod(line.substr(0, comma)));
    t.values.push_back(std::stod(line.substr(comma + 1)));
  }
  t.validate();
  return t;
}

}  // namespace elliptica
