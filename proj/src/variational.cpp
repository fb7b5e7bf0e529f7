#include "cyclic/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "cyclic/errors.hpp"
#include "cyclic/specfun.hpp"

namespace cyclic::variational {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_same_size(const SideLengths& lengths, const CentralAngles& alpha) {
  if (lengths.size() != alpha.size()) {
    throw DimensionMismatch("side lengths and central angles differ in count");
  }
}

double objective(std::span<const double> log_len, std::span<const double> a) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    s += specfun::clausen2(a[k]) + log_len[k] * a[k];
  }
  return s;
}

void gradient(std::span<const double> log_len, std::span<const double> a,
              std::vector<double>& g) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    g[k] = log_len[k] - std::log(2.0 * std::sin(0.5 * a[k]));
  }
}

double spread(const std::vector<double>& g) {
  const auto [lo, hi] = std::minmax_element(g.begin(), g.end());
  return *hi - *lo;
}

// Re-establishes sum = 2 pi exactly by absorbing the drift into the
// largest entry.
void renormalize(std::vector<double>& a) {
  const auto m = static_cast<std::size_t>(
      std::distance(a.begin(), std::max_element(a.begin(), a.end())));
  double rest = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k != m) rest += a[k];
  }
  a[m] = kTwoPi - rest;
}

// Newton step for max g.d + d^T H d / 2 subject to sum d = 0, with
// H = diag(-cot(a_k / 2) / 2). Uses w_k = 1/h_k = -2 tan(a_k / 2), which
// stays finite at a_k = pi where h_k vanishes. The entry with the largest
// |w| is recovered from the constraint to avoid cancellation.
bool newton_direction(std::span<const double> a, const std::vector<double>& g,
                      std::vector<double>& d) {
  const std::size_t n = a.size();
  std::vector<double> w(n);
  std::size_t m = 0;
  for (std::size_t k = 0; k < n; ++k) {
    w[k] = -2.0 * std::tan(0.5 * a[k]);
    if (std::abs(w[k]) > std::abs(w[m])) m = k;
  }
  double w_sum = 0.0;
  double num = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    w_sum += w[k];
    if (k != m) num += (g[k] - g[m]) * w[k];
  }
  if (!std::isfinite(w_sum) || w_sum == 0.0) return false;
  const double shift = num / w_sum;  // lambda - g_m
  double rest = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == m) continue;
    d[k] = (shift - (g[k] - g[m])) * w[k];
    rest += d[k];
  }
  d[m] = -rest;
  return std::all_of(d.begin(), d.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

double f_ell(const SideLengths& lengths, const CentralAngles& alpha) {
  require_same_size(lengths, alpha);
  double s = 0.0;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    s += specfun::clausen2(alpha[k]) + std::log(lengths[k]) * alpha[k];
  }
  return s;
}

double v_n(const CentralAngles& alpha) {
  double s = 0.0;
  for (double a : alpha.values()) s += specfun::clausen2(a);
  return s;
}

std::vector<double> grad_f_ell(const SideLengths& lengths, const CentralAngles& alpha) {
  require_same_size(lengths, alpha);
  std::vector<double> g(alpha.size());
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    const double a = alpha[k];
    if (a <= 0.0 || a >= kTwoPi) {
      throw SingularGradient("gradient of f is unbounded at a boundary point of the simplex");
    }
    g[k] = std::log(lengths[k]) - std::log(2.0 * std::sin(0.5 * a));
  }
  return g;
}

SimplexMaximum maximize_on_simplex(const SideLengths& lengths, const MaximizerOptions& options) {
  const std::size_t n = lengths.size();
  std::vector<double> log_len(n);
  for (std::size_t k = 0; k < n; ++k) log_len[k] = std::log(lengths[k]);

  std::vector<double> a(n, kTwoPi / static_cast<double>(n));
  std::vector<double> g(n), d(n), trial(n), g_trial(n);
  std::vector<double> best = a;
  double best_spread = std::numeric_limits<double>::infinity();

  for (int iter = 0; iter <= options.max_iterations; ++iter) {
    gradient(log_len, a, g);
    const double sp = spread(g);
    if (sp < best_spread) {
      best_spread = sp;
      best = a;
    }
    if (sp <= options.spread_tolerance) {
      renormalize(a);
      return SimplexMaximum{CentralAngles(std::move(a)), iter, sp};
    }
    if (iter == options.max_iterations) break;

    const double g_mean = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(n);
    double slope = 0.0;
    bool newton = newton_direction(a, g, d);
    if (newton) {
      for (std::size_t k = 0; k < n; ++k) slope += (g[k] - g_mean) * d[k];
    }
    if (!newton || !(slope > 0.0)) {
      // Projected gradient on the constraint plane.
      slope = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        d[k] = g[k] - g_mean;
        slope += d[k] * d[k];
      }
    }

    // Fraction-to-boundary: never move more than 90% of the way to the guard.
    double step = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (d[k] < 0.0) {
        const double room = a[k] - options.boundary_guard;
        step = std::min(step, room > 0.0 ? 0.9 * room / -d[k] : 0.0);
      }
    }

    const double f0 = objective(log_len, a);
    bool accepted = false;
    for (int ls = 0; ls < 60 && step > 0.0; ++ls, step *= 0.5) {
      for (std::size_t k = 0; k < n; ++k) trial[k] = a[k] + step * d[k];
      if (std::any_of(trial.begin(), trial.end(),
                      [&](double x) { return !(x >= options.boundary_guard); })) {
        continue;
      }
      const double f1 = objective(log_len, trial);
      if (f1 >= f0 + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      // Objective differences at rounding level carry no information;
      // fall back to the optimality measure itself.
      if (step * slope <= 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(f0))) {
        gradient(log_len, trial, g_trial);
        if (spread(g_trial) < sp) {
          accepted = true;
          break;
        }
      }
    }
    if (!accepted) break;
    a.swap(trial);
  }
  throw ConvergenceError("maximize_on_simplex: no interior maximizer found (gradient spread " +
                             std::to_string(best_spread) + ")",
                         std::move(best), best_spread);
}

CriticalPointCheck check_critical_point(const SideLengths& lengths, const CentralAngles& alpha,
                                        double relative_tolerance) {
  require_same_size(lengths, alpha);
  CriticalPointCheck out;
  out.min_ratio = std::numeric_limits<double>::infinity();
  out.max_ratio = 0.0;
  double log_sum = 0.0;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    const double r = lengths[k] / (2.0 * std::sin(0.5 * alpha[k]));
    if (!(r > 0.0) || !std::isfinite(r)) {
      out.min_ratio = 0.0;
      out.max_ratio = std::numeric_limits<double>::infinity();
      out.relative_spread = std::numeric_limits<double>::infinity();
      return out;
    }
    out.min_ratio = std::min(out.min_ratio, r);
    out.max_ratio = std::max(out.max_ratio, r);
    log_sum += std::log(r);
  }
  out.relative_spread = (out.max_ratio - out.min_ratio) / out.min_ratio;
  if (out.relative_spread <= relative_tolerance) {
    out.radius = std::exp(log_sum / static_cast<double>(alpha.size()));
  }
  return out;
}

}  // namespace cyclic::variational
