#pragma once
#include <memory>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "elliptica/classifier.hpp"
#include "elliptica/quadrature.hpp"
#include "elliptica/radial_function.hpp"

namespace elliptica {

enum class TailStatus { Converged, Divergent, Inconclusive };

const char* to_string(TailStatus status);

// Outcome of probing an improper integral with a doubling truncation
// schedule.  "Converged" needs both a Cauchy-small last increment and a
// fitted outer-integrand decay order safely above 1; "Divergent" needs
// visible octave growth with decay order at most 1.  Anything else stays
// Inconclusive - log-corrected integrands can converge or diverge
// arbitrarily slowly, so no boolean is forced.
struct IntegralEstimate {
  double value = 0.0;
  TailStatus status = TailStatus::Inconclusive;
  double tail_exponent = 0.0;  // fitted decay order gamma of the outer
                               // integrand (g ~ t^-gamma) over the last octave
  double truncation_radius = 0.0;
  std::vector<std::pair<double, double>> history;  // (T, partial integral)

  bool converged() const { return status == TailStatus::Converged; }

  // JSON object with fields exactly: value, converged, tail_exponent,
  // truncation_radius, history.
  nlohmann::json to_json() const;
};

struct LairControls {
  double t0 = 8.0;          // first truncation radius
  int j_max = 24;           // doubling steps
  double rel_tol = 1e-4;    // Cauchy agreement between octaves
  double gamma_margin = 0.05;
  double div_tol = 0.5;     // octave growth ratio - 1 flagging divergence
  int panels_per_octave = 16;
};

// Nested radial integral  t^{2-N} int_0^t s^{N-3} int_0^s tau q(tau) dtau ds,
// refined by panel-density doubling to a 1e-8 relative target.
double lair_inner(const SystemConfig& cfg, const RadialFunction& q_field,
                  double t, int panels_per_octave = 16);

// Cached evaluator for the same quantity; cheap to call at many t.
class LairInnerEvaluator {
 public:
  LairInnerEvaluator(int dimension, const RadialFunction& q_field,
                     int panels_per_octave = 16);
  double operator()(double t) const;

 private:
  int dimension_;
  std::shared_ptr<CumulativeIntegral> inner_;  // tau q(tau)
  std::shared_ptr<CumulativeIntegral> outer_;  // s^{N-3} * inner(s)
};

// Probes  int_0^T t outer(t) (inner nested integral)^outer_exponent dt
// over the doubling schedule T = t0 * 2^j.  Never throws on divergence;
// the status/tail diagnostics carry the outcome.
IntegralEstimate lair_condition(const SystemConfig& cfg,
                                const RadialFunction& outer_field,
                                const RadialFunction& inner_field,
                                double outer_exponent,
                                const LairControls& controls = {});

enum class LairOutcome { ExistenceByQ, ExistenceByP, NeitherDetected,
                         Inconclusive };

const char* to_string(LairOutcome outcome);

struct LairVerdict {
  LairOutcome outcome = LairOutcome::Inconclusive;
  bool existence_by_q = false;  // condition with q inside the nested integral
  bool existence_by_p = false;  // condition with p inside the nested integral
  IntegralEstimate q_condition;
  IntegralEstimate p_condition;
};

// Evaluates both sufficient conditions.  NeitherDetected is not a proof of
// nonexistence and is labeled as such by the CLI.
LairVerdict lair_verdict(const SystemConfig& cfg, const RadialFunction& p_field,
                         const RadialFunction& q_field,
                         const LairControls& controls = {});

}  // namespace elliptica
