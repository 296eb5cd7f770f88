#ifndef ZETACF_ERRORS_HPP
#define ZETACF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zetacf {

/// A truncated series was asked for a coefficient it cannot produce exactly.
class InsufficientOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A continued fraction denominator vanished during evaluation.
class ZeroDenominator : public std::domain_error {
 public:
  explicit ZeroDenominator(std::size_t level)
      : std::domain_error("continued fraction denominator vanished at level " + std::to_string(level)),
        level_(level) {}
  std::size_t level() const { return level_; }

 private:
  std::size_t level_;
};

/// Two routes that must agree exactly did not. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zetacf

#endif  // ZETACF_ERRORS_HPP
