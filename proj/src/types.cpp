#include "cyclic/types.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "cyclic/errors.hpp"

namespace cyclic {

SideLengths::SideLengths(std::vector<double> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.size() < 3) {
    throw DomainError("a polygon needs at least 3 sides, got " +
                      std::to_string(lengths_.size()));
  }
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (!std::isfinite(lengths_[i]) || lengths_[i] <= 0.0) {
      throw DomainError("side " + std::to_string(i + 1) +
                        " must be a positive finite length");
    }
  }
}

double SideLengths::sum() const {
  return std::accumulate(lengths_.begin(), lengths_.end(), 0.0);
}

std::size_t SideLengths::longest() const {
  return static_cast<std::size_t>(
      std::distance(lengths_.begin(), std::max_element(lengths_.begin(), lengths_.end())));
}

CentralAngles::CentralAngles(std::vector<double> angles) : angles_(std::move(angles)) {
  double sum = 0.0;
  for (double a : angles_) {
    if (!std::isfinite(a) || a < 0.0) {
      throw DomainError("central angles must be finite and non-negative");
    }
    sum += a;
  }
  if (std::abs(sum - 2.0 * std::numbers::pi) > kSumTolerance) {
    throw DomainError("central angles must sum to 2*pi");
  }
}

bool CentralAngles::interior() const {
  return std::all_of(angles_.begin(), angles_.end(), [](double a) { return a > 0.0; });
}

}  // namespace cyclic
