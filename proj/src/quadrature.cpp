#include "elliptica/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "elliptica/sphere.hpp"

namespace elliptica {

double gauss_panel(const std::function<double(double)>& f, double a, double b,
                   int order) {
  if (!(b > a)) return 0.0;
  const auto& [x, w] = gauss_legendre(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * f(mid + half * x[i]);
  const double out = half * acc;
  if (!std::isfinite(out))
    throw std::runtime_error("quadrature: non-finite integrand sample");
  return out;
}

CumulativeIntegral::CumulativeIntegral(std::function<double(double)> f,
                                       std::vector<double> kinks,
                                       int panels_per_octave, int head_panels)
    : f_(std::move(f)) {
  if (panels_per_octave < 1 || head_panels < 1)
    throw std::invalid_argument("cumulative integral: bad panel counts");
  growth_ = std::pow(2.0, 1.0 / panels_per_octave);

  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());

  edges_.push_back(0.0);
  for (int i = 1; i <= head_panels; ++i)
    edges_.push_back(static_cast<double>(i) / head_panels);
  for (double k : kinks) {
    if (k > 0.0 && k < 1.0) edges_.push_back(k);
    if (k > 1.0) pending_kinks_.push_back(k);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  prefix_.resize(edges_.size());
  prefix_[0] = 0.0;
  for (std::size_t i = 1; i < edges_.size(); ++i)
    prefix_[i] = prefix_[i - 1] + gauss_panel(f_, edges_[i - 1], edges_[i]);
}

void CumulativeIntegral::extend_to(double t) const {
  while (edges_.back() < t) {
    double next = edges_.back() * growth_;
    if (next_kink_ < pending_kinks_.size() &&
        pending_kinks_[next_kink_] > edges_.back() &&
        pending_kinks_[next_kink_] < next) {
      next = pending_kinks_[next_kink_];
      ++next_kink_;
    } else if (next_kink_ < pending_kinks_.size() &&
               pending_kinks_[next_kink_] <= edges_.back()) {
      ++next_kink_;
      continue;
    }
    prefix_.push_back(prefix_.back() + gauss_panel(f_, edges_.back(), next));
    edges_.push_back(next);
  }
}

double CumulativeIntegral::up_to(double t) const {
  if (!(t > 0.0)) return 0.0;
  if (!std::isfinite(t))
    throw std::invalid_argument("cumulative integral: non-finite limit");
  extend_to(t);
  const auto it = std::upper_bound(edges_.begin(), edges_.end(), t);
  const std::size_t idx = static_cast<std::size_t>(it - edges_.begin()) - 1;
  double out = prefix_[idx];
  if (t > edges_[idx]) out += gauss_panel(f_, edges_[idx], t);
  return out;
}

}  // namespace elliptica
