#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cyclic {

// n >= 3 strictly positive, finite side lengths, in caller order.
class SideLengths {
 public:
  // Throws DomainError when n < 3 or some entry is not positive and finite.
  explicit SideLengths(std::vector<double> lengths);

  std::size_t size() const { return lengths_.size(); }
  double operator[](std::size_t i) const { return lengths_[i]; }
  std::span<const double> values() const { return lengths_; }

  double sum() const;
  // Index of the longest side; the first one on ties.
  std::size_t longest() const;

 private:
  std::vector<double> lengths_;
};

// A point of the closed simplex of central angles: entries >= 0 summing
// to 2*pi.
class CentralAngles {
 public:
  static constexpr double kSumTolerance = 1e-12;

  // Throws DomainError on negative or non-finite entries or when the sum
  // misses 2*pi by more than kSumTolerance.
  explicit CentralAngles(std::vector<double> angles);

  std::size_t size() const { return angles_.size(); }
  double operator[](std::size_t i) const { return angles_[i]; }
  std::span<const double> values() const { return angles_; }

  // True iff every angle is strictly positive (the open simplex).
  bool interior() const;

 private:
  std::vector<double> angles_;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

}  // namespace cyclic
