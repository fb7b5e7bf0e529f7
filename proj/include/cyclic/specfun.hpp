#pragma once

#include <span>
#include <vector>

namespace cyclic::specfun {

// Clausen's integral Cl2(x) = -int_0^x log|2 sin(t/2)| dt.
// Odd and 2*pi-periodic. Throws DomainError on non-finite x.
double clausen2(double x);

// Milnor's Lobachevsky function, Cl2(2x)/2.
double lobachevsky(double x);

// Clh2(x) = -int_0^x log|2 sinh(t/2)| dt, the hyperbolic analogue of Cl2.
//
// Uses the log-corrected power series for |x| <= 1 and the closed form
//   Clh2(x) = pi^2/6 - x^2/4 - Li2(exp(-x)),   x > 0
// (extended by oddness) elsewhere.
double clh2(double x);

// Clh2 through the identity Re Li2(e^x) + x^2/4 - pi^2/6, using
// real_dilog. An independent route used to cross-check clh2.
double clh2_via_dilog(double x);

// Real part of the dilogarithm Li2(x) for real x. On x > 1 this is the
// principal-branch real part.
double real_dilog(double x);

// A discrete probability distribution: non-negative weights summing to 1.
class ProbDist {
 public:
  static constexpr double kSumTolerance = 1e-12;

  // Throws DomainError unless the weights form a distribution.
  explicit ProbDist(std::vector<double> weights);

  std::span<const double> weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

 private:
  std::vector<double> weights_;
};

// sum_k p_k log(p_k / q_k), with 0 log(0/q) = 0.
// Throws DimensionMismatch on length mismatch and InfiniteDivergence when
// some p_k > 0 meets q_k == 0.
double kl_divergence(const ProbDist& p, const ProbDist& q);

}  // namespace cyclic::specfun
