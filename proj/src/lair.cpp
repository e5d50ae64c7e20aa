#include "elliptica/lair.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace elliptica {

const char* to_string(TailStatus status) {
  switch (status) {
    case TailStatus::Converged: return "converged";
    case TailStatus::Divergent: return "divergent";
    case TailStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* to_string(LairOutcome outcome) {
  switch (outcome) {
    case LairOutcome::ExistenceByQ: return "ExistenceByQ";
    case LairOutcome::ExistenceByP: return "ExistenceByP";
    case LairOutcome::NeitherDetected: return "NeitherDetected";
    case LairOutcome::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

nlohmann::json IntegralEstimate::to_json() const {
  nlohmann::json h = nlohmann::json::array();
  for (const auto& [t, v] : history) h.push_back({t, v});
  // Non-finite tail exponents (identically vanishing integrand) serialize
  // as null per the JSON number model.
  return nlohmann::json{{"value", value},
                        {"converged", converged()},
                        {"tail_exponent", tail_exponent},
                        {"truncation_radius", truncation_radius},
                        {"history", std::move(h)}};
}

LairInnerEvaluator::LairInnerEvaluator(int dimension,
                                       const RadialFunction& q_field,
                                       int panels_per_octave)
    : dimension_(dimension) {
  if (dimension < 3) throw std::invalid_argument("lair: N must be >= 3");
  auto q = q_field.eval;
  inner_ = std::make_shared<CumulativeIntegral>(
      [q](double tau) { return tau * q(tau); }, q_field.kinks,
      panels_per_octave);
  auto inner = inner_;
  const double spow = static_cast<double>(dimension - 3);
  outer_ = std::make_shared<CumulativeIntegral>(
      [inner, spow](double s) {
        return std::pow(s, spow) * inner->up_to(s);
      },
      q_field.kinks, panels_per_octave);
}

double LairInnerEvaluator::operator()(double t) const {
  if (!(t > 0.0)) return 0.0;
  return std::pow(t, 2.0 - dimension_) * outer_->up_to(t);
}

double lair_inner(const SystemConfig& cfg, const RadialFunction& q_field,
                  double t, int panels_per_octave) {
  cfg.validate();
  if (!(t > 0.0)) throw std::invalid_argument("lair_inner: t must be > 0");
  double prev = LairInnerEvaluator(cfg.dimension, q_field, panels_per_octave)(t);
  for (int ppo = panels_per_octave * 2; ppo <= 128; ppo *= 2) {
    const double cur = LairInnerEvaluator(cfg.dimension, q_field, ppo)(t);
    if (std::abs(cur - prev) <= 1e-8 * std::max(std::abs(cur), 1e-300))
      return cur;
    prev = cur;
  }
  return prev;
}

namespace {

// Decay order gamma of g (g ~ t^-gamma) fitted over [t_lo, t_hi] by
// least squares in log-log coordinates.  +inf when g vanishes there.
double fit_tail_exponent(const std::function<double(double)>& g, double t_lo,
                         double t_hi, int samples = 33) {
  std::vector<double> xs, ys;
  xs.reserve(samples);
  ys.reserve(samples);
  const double la = std::log(t_lo), lb = std::log(t_hi);
  for (int i = 0; i < samples; ++i) {
    const double t = std::exp(la + (lb - la) * i / (samples - 1));
    const double v = g(t);
    if (v > 0.0 && std::isfinite(v)) {
      xs.push_back(std::log(t));
      ys.push_back(std::log(v));
    }
  }
  if (xs.size() < 2) return HUGE_VAL;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= xs.size();
  my /= ys.size();
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) return HUGE_VAL;
  return -sxy / sxx;
}

}  // namespace

IntegralEstimate lair_condition(const SystemConfig& cfg,
                                const RadialFunction& outer_field,
                                const RadialFunction& inner_field,
                                double outer_exponent,
                                const LairControls& controls) {
  cfg.validate();
  if (!(outer_exponent > 0.0))
    throw std::invalid_argument("lair_condition: exponent must be > 0");
  if (!(controls.t0 > 0.0) || controls.j_max < 1)
    throw std::invalid_argument("lair_condition: bad controls");

  LairInnerEvaluator inner(cfg.dimension, inner_field,
                           controls.panels_per_octave);
  auto outer = outer_field.eval;
  auto integrand = [outer, inner, outer_exponent](double t) {
    const double base = inner(t);
    return t * outer(t) * (base > 0.0 ? std::pow(base, outer_exponent) : 0.0);
  };

  std::vector<double> kinks = outer_field.kinks;
  kinks.insert(kinks.end(), inner_field.kinks.begin(), inner_field.kinks.end());
  CumulativeIntegral total(integrand, std::move(kinks),
                           controls.panels_per_octave);

  IntegralEstimate est;
  double prev_value = 0.0;
  double prev_t = 0.0;
  for (int j = 0; j <= controls.j_max; ++j) {
    const double t = controls.t0 * std::pow(2.0, j);
    const double value = total.up_to(t);
    est.history.emplace_back(t, value);
    est.value = value;
    est.truncation_radius = t;

    if (!std::isfinite(value) || value > 1e250) {
      est.status = TailStatus::Divergent;
      est.tail_exponent = fit_tail_exponent(integrand, prev_t > 0 ? prev_t : t / 2, t);
      return est;
    }
    if (j > 0) {
      const double gamma = fit_tail_exponent(integrand, prev_t, t);
      est.tail_exponent = gamma;
      const bool cauchy =
          std::abs(value - prev_value) <=
          controls.rel_tol * std::max(value, 1e-300);
      if (cauchy && gamma > 1.0 + controls.gamma_margin) {
        est.status = TailStatus::Converged;
        return est;
      }
      if (prev_value > 0.0 && value >= prev_value * (1.0 + controls.div_tol) &&
          gamma <= 1.0) {
        est.status = TailStatus::Divergent;
        return est;
      }
    }
    prev_value = value;
    prev_t = t;
  }

  // Zero fields never produce a positive sample; call that converged.
  if (est.value == 0.0) {
    est.status = TailStatus::Converged;
    est.tail_exponent = HUGE_VAL;
    return est;
  }
  est.status = TailStatus::Inconclusive;
  return est;
}

LairVerdict lair_verdict(const SystemConfig& cfg, const RadialFunction& p_field,
                         const RadialFunction& q_field,
                         const LairControls& controls) {
  cfg.validate();
  LairVerdict v;
  v.q_condition = lair_condition(cfg, p_field, q_field, cfg.alpha, controls);
  v.p_condition = lair_condition(cfg, q_field, p_field, cfg.beta, controls);
  v.existence_by_q = v.q_condition.converged();
  v.existence_by_p = v.p_condition.converged();
  if (v.existence_by_q)
    v.outcome = LairOutcome::ExistenceByQ;
  else if (v.existence_by_p)
    v.outcome = LairOutcome::ExistenceByP;
  else if (v.q_condition.status == TailStatus::Inconclusive ||
           v.p_condition.status == TailStatus::Inconclusive)
    v.outcome = LairOutcome::Inconclusive;
  else
    v.outcome = LairOutcome::NeitherDetected;
  return v;
}

}  // namespace elliptica
