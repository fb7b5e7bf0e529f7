#include "cyclic/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "cyclic/errors.hpp"

namespace cyclic::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPiSq6 = kPi * kPi / 6.0;

constexpr int kZetaTerms = 48;

// zeta(2n) for n = 1..kZetaTerms; index 0 is unused.
const std::array<double, kZetaTerms + 1>& even_zeta() {
  static const std::array<double, kZetaTerms + 1> table = [] {
    std::array<double, kZetaTerms + 1> z{};
    const double p2 = kPi * kPi;
    z[1] = p2 / 6.0;
    z[2] = p2 * p2 / 90.0;
    z[3] = p2 * p2 * p2 / 945.0;
    z[4] = p2 * p2 * p2 * p2 / 9450.0;
    z[5] = p2 * p2 * p2 * p2 * p2 / 93555.0;
    for (int n = 6; n <= kZetaTerms; ++n) {
      // Tail beyond k = 40 is below 40^(1-2n) < 1e-19.
      double s = 0.0;
      for (int k = 40; k >= 1; --k) s += std::pow(static_cast<double>(k), -2.0 * n);
      z[n] = s;
    }
    return z;
  }();
  return table;
}

void require_finite(double x, const char* fn) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": argument must be finite");
  }
}

// Shared log-corrected series
//   t - t log t + sum_n sign^n 2 zeta(2n) / (2n (2n+1)) t (t / 2pi)^(2n)
// sign = +1 gives Cl2 on [0, pi], sign = -1 gives Clh2 on [0, 2pi).
double log_corrected_series(double t, double sign) {
  if (t == 0.0) return 0.0;
  const auto& zeta = even_zeta();
  const double r2 = (t / kTwoPi) * (t / kTwoPi);
  double power = t;
  double s = 0.0;
  double alt = 1.0;
  for (int n = 1; n <= kZetaTerms; ++n) {
    power *= r2;
    alt *= sign;
    const double term = alt * 2.0 * zeta[n] / (2.0 * n * (2.0 * n + 1.0)) * power;
    s += term;
    if (std::abs(term) < 1e-18 * t) break;
  }
  return t - t * std::log(t) + s;
}

// Li2(z) = sum z^k / k^2 for 0 <= z <= 1/e.
double dilog_small_positive(double z) {
  double s = 0.0;
  double zk = 1.0;
  for (int k = 1; k < 200; ++k) {
    zk *= z;
    const double term = zk / (static_cast<double>(k) * k);
    s += term;
    if (term < 1e-18 * s) break;
  }
  return s;
}

// Bernoulli series in u = -log(1 - z), accurate for -1 <= z <= 1/2.
double dilog_bernoulli(double z) {
  const double u = -std::log1p(-z);
  const auto& zeta = even_zeta();
  const double r2 = (u / kTwoPi) * (u / kTwoPi);
  double power = u;
  double s = u - u * u / 4.0;
  double sign = 1.0;
  for (int k = 1; k <= kZetaTerms; ++k) {
    power *= r2;
    const double term = sign * 2.0 * zeta[k] / (2.0 * k + 1.0) * power;
    s += term;
    sign = -sign;
    if (std::abs(term) < 1e-18 * std::abs(s)) break;
  }
  return s;
}

}  // namespace

double clausen2(double x) {
  require_finite(x, "clausen2");
  const double r = std::remainder(x, kTwoPi);
  const double t = std::abs(r);
  double value;
  if (t <= kPi / 2.0) {
    value = log_corrected_series(t, 1.0);
  } else {
    // Cl2(pi - h) = Cl2(h) - Cl2(2h)/2, from the duplication formula.
    const double h = kPi - t;
    value = log_corrected_series(h, 1.0) - 0.5 * log_corrected_series(2.0 * h, 1.0);
  }
  return r < 0.0 ? -value : value;
}

double lobachevsky(double x) {
  require_finite(x, "lobachevsky");
  return 0.5 * clausen2(2.0 * x);
}

double clh2(double x) {
  require_finite(x, "clh2");
  const double t = std::abs(x);
  double value;
  if (t <= 1.0) {
    value = log_corrected_series(t, -1.0);
  } else {
    value = kPiSq6 - t * t / 4.0 - dilog_small_positive(std::exp(-t));
  }
  return x < 0.0 ? -value : value;
}

double real_dilog(double x) {
  require_finite(x, "real_dilog");
  if (x == 1.0) return kPiSq6;
  if (x > 2.0) {
    const double lx = std::log(x);
    return 2.0 * kPiSq6 - 0.5 * lx * lx - real_dilog(1.0 / x);
  }
  if (x > 1.0) {
    return kPiSq6 - std::log(x) * std::log(x - 1.0) - dilog_bernoulli(1.0 - x);
  }
  if (x > 0.5) {
    return kPiSq6 - std::log(x) * std::log1p(-x) - dilog_bernoulli(1.0 - x);
  }
  if (x >= -1.0) return dilog_bernoulli(x);
  const double lx = std::log(-x);
  return -kPiSq6 - 0.5 * lx * lx - dilog_bernoulli(1.0 / x);
}

double clh2_via_dilog(double x) {
  require_finite(x, "clh2_via_dilog");
  const double e = std::exp(x);
  double re_li2;
  if (std::isinf(e)) {
    // exp(x) overflows; apply the inversion formula with log(e^x) = x.
    re_li2 = 2.0 * kPiSq6 - 0.5 * x * x - real_dilog(std::exp(-x));
  } else {
    re_li2 = real_dilog(e);
  }
  return re_li2 + x * x / 4.0 - kPiSq6;
}

ProbDist::ProbDist(std::vector<double> weights) : weights_(std::move(weights)) {
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw DomainError("ProbDist: weights must be finite and non-negative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw DomainError("ProbDist: weights sum to " + std::to_string(sum) + ", not 1");
  }
}

double kl_divergence(const ProbDist& p, const ProbDist& q) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("kl_divergence: distributions have different lengths");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0.0) continue;
    if (q[k] == 0.0) {
      throw InfiniteDivergence(
          k, "kl_divergence: p has mass where q has none (index " + std::to_string(k) + ")");
    }
    sum += p[k] * std::log(p[k] / q[k]);
  }
  return sum;
}

}  // namespace cyclic::specfun
