#pragma once
// Closed-form parameter-regime classification for the coupled system
//   Lap(u) = p(x) v^alpha,   Lap(v) = q(x) u^beta   on R^N, N >= 3,
// where the reduced radial coefficients obey power-log envelopes
//   p ~ L_p r^-lambda (ln r)^-nu,   q ~ L_q r^-mu (ln r)^-xi,  r >= r_start.
//
// Two condition batteries are evaluated: the nonexistence battery
// (labels T1.i .. T1.vi, envelope read as a lower bound) and the
// existence battery (labels T3.i .. T3.iv, envelope read as an upper
// bound).  All equality tests are exact floating comparisons; boundary
// inputs fall through to Undetermined by design.

#include <array>
#include <string>
#include <vector>

namespace elliptica {

struct SystemConfig {
  int dimension = 3;   // N
  double alpha = 2.0;  // exponent on v
  double beta = 2.0;   // exponent on u

  // Requires N >= 3, alpha > 0, beta > 0, alpha*beta > 1.
  void validate() const;
};

// Four-exponent power-log envelope with constants and onset radius.
struct DecayProfile {
  double lambda = 0.0;  // radial power, p-envelope
  double nu = 0.0;      // log power, p-envelope
  double mu = 0.0;      // radial power, q-envelope
  double xi = 0.0;      // log power, q-envelope
  double L_p = 1.0;
  double L_q = 1.0;
  double r_start = 2.0;  // onset radius, > 1

  void validate() const;
};

enum class RegimeKind { Nonexistence, Existence, Undetermined };

const char* to_string(RegimeKind kind);

struct Verdict {
  RegimeKind kind = RegimeKind::Undetermined;
  // All satisfied condition labels ("T1.i" .. "T1.vi" or "T3.i" .. "T3.iv").
  std::vector<std::string> satisfied_conditions;
  bool symmetric_mode = false;
};

// Nonexistence battery.  Entry j is true iff condition T1.(j+1) holds:
//   (i)   2 - mu + beta (2 - lambda) > 0
//   (ii)  2 - lambda + alpha (2 - mu) > 0
//   (iii) 2 - mu + beta (2 - lambda) = 0, lambda < 2, 1 - xi - beta nu > 0
//   (iv)  2 - lambda + alpha (2 - mu) = 0, mu < 2, 1 - nu - alpha xi > 0
//   (v)   lambda = 2, mu = 2, 1 - xi + beta (1 - nu) > 0
//   (vi)  lambda = 2, mu = 2, 1 - nu + alpha (1 - xi) > 0
// Unless symmetric_mode is set, requires alpha >= 1 and beta >= 1; with
// symmetric_mode the caller restricts attention to spherically symmetric
// solutions and the hypothesis is waived.
std::array<bool, 6> nonexistence_conditions(const SystemConfig& cfg,
                                            const DecayProfile& prof,
                                            bool symmetric_mode);

// Existence battery.  Entry j is true iff condition T3.(j+1) holds:
//   (i)   2 - mu + beta (2 - lambda) < 0 and 2 - lambda + alpha (2 - mu) < 0
//   (ii)  2 - mu + beta (2 - lambda) = 0, lambda < 2, 1 - xi - beta nu < 0
//   (iii) 2 - lambda + alpha (2 - mu) = 0, mu < 2, 1 - nu - alpha xi < 0
//   (iv)  lambda = 2, mu = 2, 1 - xi + beta (1 - nu) < 0,
//                             1 - nu + alpha (1 - xi) < 0
std::array<bool, 4> existence_conditions(const SystemConfig& cfg,
                                         const DecayProfile& prof);

// Merged verdict: Nonexistence if any T1 condition holds (listing all that
// do), else Existence if any T3 condition holds, else Undetermined.
Verdict classify(const SystemConfig& cfg, const DecayProfile& prof,
                 bool symmetric_mode = false);

}  // namespace elliptica
