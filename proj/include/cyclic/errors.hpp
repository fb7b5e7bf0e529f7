#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclic {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite or out-of-range scalar argument.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Gradient requested at a point where some central angle is 0 or 2*pi.
class SingularGradient : public Error {
 public:
  using Error::Error;
};

// KL divergence with p_k > 0 and q_k == 0.
class InfiniteDivergence : public Error {
 public:
  InfiniteDivergence(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// An internal guarantee failed; always indicates a bug, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> best_iterate,
                   double gradient_spread)
      : Error(what),
        best_iterate_(std::move(best_iterate)),
        gradient_spread_(gradient_spread) {}

  const std::vector<double>& best_iterate() const { return best_iterate_; }
  double gradient_spread() const { return gradient_spread_; }

 private:
  std::vector<double> best_iterate_;
  double gradient_spread_;
};

enum class Infeasibility {
  kPolygonEquality,    // l_k == sum of the others: flat polygon
  kPolygonViolated,    // l_k > sum of the others
  kPerimeterBound,     // spherical perimeter >= 2*pi
  kNoDominantSide,     // spacetime polygon needs l_k > sum of the others
  kNearDegenerate,     // strict, but the circumradius overflows
};

const char* infeasibility_code(Infeasibility reason);

// No polygon with the requested side lengths exists in the geometry.
class NoPolygon : public Error {
 public:
  NoPolygon(Infeasibility reason, std::optional<std::size_t> side,
            const std::string& what)
      : Error(what), reason_(reason), side_(side) {}

  Infeasibility reason() const { return reason_; }
  // Zero-based index of the offending side, if the condition names one.
  std::optional<std::size_t> side() const { return side_; }

 private:
  Infeasibility reason_;
  std::optional<std::size_t> side_;
};

}  // namespace cyclic
