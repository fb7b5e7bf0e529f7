#pragma once

// Reference values computed by routes independent of the library:
// numerical quadrature of the defining integrals and brute-force
// root bracketing.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline boost::math::quadrature::tanh_sinh<double>& integrator() {
  static thread_local boost::math::quadrature::tanh_sinh<double> q(20);
  return q;
}

// -int_0^x log|2 sin(t/2)| dt. The range is split at multiples of 2 pi,
// where the integrand has log singularities, and each piece is integrated
// in its local coordinate u = t - 2 pi k, using the endpoint distance that
// tanh-sinh supplies to keep the singular ends accurate.
inline double clausen2(double x) {
  if (x == 0.0) return 0.0;
  const double span = std::abs(x);
  double total = 0.0;
  for (double start = 0.0; start < span; start += kTwoPi) {
    const double len = std::min(kTwoPi, span - start);
    const bool full = (span - start) >= kTwoPi;
    auto f = [len, full](double u, double uc) {
      double s;
      if (u < 0.5 * len) {
        s = std::sin(0.5 * u);  // u is exact near the left end
      } else if (full) {
        s = std::sin(0.5 * uc);  // distance to the right singularity
      } else {
        s = std::sin(0.5 * u);
      }
      return -std::log(2.0 * std::abs(s));
    };
    total += integrator().integrate(f, 0.0, len, 1e-15);
  }
  return x < 0.0 ? -total : total;
}

// -int_0^x log|2 sinh(t/2)| dt.
inline double clh2(double x) {
  if (x == 0.0) return 0.0;
  auto f = [](double t) { return -std::log(2.0 * std::sinh(0.5 * t)); };
  const double v = integrator().integrate(f, 0.0, std::abs(x), 1e-15);
  return x < 0.0 ? -v : v;
}

// Smallest x in [lo, hi] where a monotone-through-zero function crosses
// from <= 0 to > 0, by plain bisection to the last representable step.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  for (int i = 0; i < 2000; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) <= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Circumradius of the Euclidean cyclic polygon by bisection on the
// central-angle sum. For R above the longest half-side each side
// subtends either 2 asin(l/2R) or, for the longest side with the center
// outside, 2 pi minus that; whichever closing condition has a sign change
// on [l_max/2, inf) is solved.
inline double euclidean_radius(std::span<const double> l) {
  const double lmax = *std::max_element(l.begin(), l.end());
  const std::size_t m = static_cast<std::size_t>(
      std::distance(l.begin(), std::max_element(l.begin(), l.end())));
  auto total = [&](double r) {
    double s = 0.0;
    for (double x : l) s += 2.0 * std::asin(std::min(1.0, x / (2.0 * r)));
    return s;
  };
  auto outside = [&](double r) {
    double s = 0.0;
    for (std::size_t k = 0; k < l.size(); ++k) {
      const double a = 2.0 * std::asin(std::min(1.0, l[k] / (2.0 * r)));
      s += (k == m) ? (kTwoPi - a) : a;
    }
    return s;
  };
  const double r0 = lmax / 2.0;
  double hi = 2.0 * r0;
  while (total(hi) > kTwoPi) hi *= 2.0;
  if (total(r0) >= kTwoPi) {
    return bisect([&](double r) { return kTwoPi - total(r); }, r0, hi);
  }
  // Center outside: outside(r) - 2 pi rises from below 0 at l_max/2 to
  // above 0 for large r.
  hi = 2.0 * r0;
  while (outside(hi) <= kTwoPi) hi *= 2.0;
  return bisect([&](double r) { return outside(r) - kTwoPi; }, r0, hi);
}

// Phi(x) written out directly from its definition, dominant chord last.
inline double phi(double x, std::span<const double> c) {
  double v = std::asinh(c.back() / (2.0 * x));
  for (std::size_t k = 0; k + 1 < c.size(); ++k) v -= std::asinh(c[k] / (2.0 * x));
  return v;
}

// Zero of Phi on (lo, inf) by bisection; Phi(lo) < 0 assumed.
inline double phi_root(std::span<const double> c, double lo) {
  double hi = lo * 2.0;
  while (phi(hi, c) <= 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  return bisect([&](double x) { return phi(x, c); }, lo, hi);
}

}  // namespace oracle
