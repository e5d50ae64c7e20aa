#include "elliptica/classifier.hpp"

#include <cmath>
#include <stdexcept>

namespace elliptica {

void SystemConfig::validate() const {
  if (dimension < 3) throw std::invalid_argument("dimension must be >= 3");
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("alpha and beta must be positive");
  if (!(alpha * beta > 1.0))
    throw std::invalid_argument("alpha*beta must exceed 1");
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    throw std::invalid_argument("alpha and beta must be finite");
}

void DecayProfile::validate() const {
  if (!(L_p > 0.0) || !(L_q > 0.0))
    throw std::invalid_argument("envelope constants must be positive");
  if (!(r_start > 1.0))
    throw std::invalid_argument("envelope onset radius must exceed 1");
  for (double x : {lambda, nu, mu, xi})
    if (!std::isfinite(x))
      throw std::invalid_argument("envelope exponents must be finite");
}

const char* to_string(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::Nonexistence: return "Nonexistence";
    case RegimeKind::Existence: return "Existence";
    case RegimeKind::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

std::array<bool, 6> nonexistence_conditions(const SystemConfig& cfg,
                                            const DecayProfile& prof,
                                            bool symmetric_mode) {
  cfg.validate();
  prof.validate();
  if (!symmetric_mode && (cfg.alpha < 1.0 || cfg.beta < 1.0))
    throw std::invalid_argument(
        "nonexistence battery requires alpha >= 1 and beta >= 1 unless "
        "symmetric_mode restricts attention to radial solutions");

  const double a = cfg.alpha, b = cfg.beta;
  const double la = prof.lambda, nu = prof.nu, mu = prof.mu, xi = prof.xi;
  const double e1 = 2.0 - mu + b * (2.0 - la);
  const double e2 = 2.0 - la + a * (2.0 - mu);

  std::array<bool, 6> out{};
  out[0] = e1 > 0.0;
  out[1] = e2 > 0.0;
  out[2] = e1 == 0.0 && la < 2.0 && (1.0 - xi - b * nu) > 0.0;
  out[3] = e2 == 0.0 && mu < 2.0 && (1.0 - nu - a * xi) > 0.0;
  out[4] = la == 2.0 && mu == 2.0 && (1.0 - xi + b * (1.0 - nu)) > 0.0;
  out[5] = la == 2.0 && mu == 2.0 && (1.0 - nu + a * (1.0 - xi)) > 0.0;
  return out;
}

std::array<bool, 4> existence_conditions(const SystemConfig& cfg,
                                         const DecayProfile& prof) {
  cfg.validate();
  prof.validate();

  const double a = cfg.alpha, b = cfg.beta;
  const double la = prof.lambda, nu = prof.nu, mu = prof.mu, xi = prof.xi;
  const double e1 = 2.0 - mu + b * (2.0 - la);
  const double e2 = 2.0 - la + a * (2.0 - mu);

  std::array<bool, 4> out{};
  out[0] = e1 < 0.0 && e2 < 0.0;
  out[1] = e1 == 0.0 && la < 2.0 && (1.0 - xi - b * nu) < 0.0;
  out[2] = e2 == 0.0 && mu < 2.0 && (1.0 - nu - a * xi) < 0.0;
  out[3] = la == 2.0 && mu == 2.0 && (1.0 - xi + b * (1.0 - nu)) < 0.0 &&
           (1.0 - nu + a * (1.0 - xi)) < 0.0;
  return out;
}

Verdict classify(const SystemConfig& cfg, const DecayProfile& prof,
                 bool symmetric_mode) {
  static const char* t1_labels[6] = {"T1.i",  "T1.ii", "T1.iii",
                                     "T1.iv", "T1.v",  "T1.vi"};
  static const char* t3_labels[4] = {"T3.i", "T3.ii", "T3.iii", "T3.iv"};

  Verdict v;
  v.symmetric_mode = symmetric_mode;

  const auto t1 = nonexistence_conditions(cfg, prof, symmetric_mode);
  for (int i = 0; i < 6; ++i)
    if (t1[i]) v.satisfied_conditions.push_back(t1_labels[i]);
  if (!v.satisfied_conditions.empty()) {
    v.kind = RegimeKind::Nonexistence;
    return v;
  }

  const auto t3 = existence_conditions(cfg, prof);
  for (int i = 0; i < 4; ++i)
    if (t3[i]) v.satisfied_conditions.push_back(t3_labels[i]);
  v.kind = v.satisfied_conditions.empty() ? RegimeKind::Undetermined
                                          : RegimeKind::Existence;
  return v;
}

}  // namespace elliptica
