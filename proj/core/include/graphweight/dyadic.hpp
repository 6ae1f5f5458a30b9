#pragma once

#include <iosfwd>
#include <string>

#include "graphweight/bigint.hpp"

namespace graphweight {

/// Exact value num * 2^(-k), kept normalised: num is odd, or num == 0 and
/// k == 0. Two values are equal iff their (num, k) pairs are equal.
class DyadicRational {
 public:
  DyadicRational() = default;
  /// num * 2^(-k), normalised on construction.
  DyadicRational(BigInt num, unsigned k);
  DyadicRational(long long value) : DyadicRational(BigInt{value}, 0) {}  // NOLINT

  [[nodiscard]] const BigInt& numerator() const noexcept { return num_; }
  [[nodiscard]] unsigned exponent() const noexcept { return k_; }
  [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }

  /// "num/2^k", e.g. "15/2^9" or "0/2^0".
  [[nodiscard]] std::string to_exact_string() const;
  /// "num/den" with den written out, e.g. "15/512"; integers print bare.
  [[nodiscard]] std::string to_fraction_string() const;
  /// Nearest double; approximate by nature.
  [[nodiscard]] double to_double() const;

  /// Inverse of to_exact_string. Throws std::invalid_argument.
  static DyadicRational parse_exact(const std::string& text);

  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator-(const DyadicRational& a);
  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.k_ == b.k_ && a.num_ == b.num_;
  }
  friend bool operator<(const DyadicRational& a, const DyadicRational& b);

 private:
  BigInt num_{0};
  unsigned k_ = 0;
};

std::ostream& operator<<(std::ostream& os, const DyadicRational& d);

}  // namespace graphweight
