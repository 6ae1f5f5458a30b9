#include "graphweight/dyadic.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace graphweight {

DyadicRational::DyadicRational(BigInt num, unsigned k) : num_(std::move(num)), k_(k) {
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  const auto twos = static_cast<unsigned>(boost::multiprecision::lsb(abs(num_)));
  const unsigned shift = twos < k_ ? twos : k_;
  num_ >>= shift;  // exact: the low `shift` bits are zero
  k_ -= shift;
}

std::string DyadicRational::to_exact_string() const {
  return num_.str() + "/2^" + std::to_string(k_);
}

std::string DyadicRational::to_fraction_string() const {
  if (k_ == 0) return num_.str();
  return num_.str() + "/" + (BigInt{1} << k_).str();
}

double DyadicRational::to_double() const {
  if (num_.is_zero()) return 0.0;
  // Keep the top 64 significant bits so the conversion never overflows for
  // huge numerators.
  const BigInt mag = abs(num_);
  const auto bits = static_cast<long>(boost::multiprecision::msb(mag)) + 1;
  const long drop = bits > 64 ? bits - 64 : 0;
  const double top = static_cast<double>(static_cast<std::uint64_t>(mag >> drop));
  const double v = std::ldexp(top, static_cast<int>(drop - static_cast<long>(k_)));
  return num_.sign() < 0 ? -v : v;
}

DyadicRational DyadicRational::parse_exact(const std::string& text) {
  const auto slash = text.find("/2^");
  if (slash == std::string::npos || slash == 0)
    throw std::invalid_argument("not an exact dyadic string: '" + text + "'");
  const auto exp_text = text.substr(slash + 3);
  if (exp_text.empty() || exp_text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad exponent in '" + text + "'");
  const auto num_text = text.substr(0, slash);
  const auto digits = num_text.substr(num_text[0] == '-' ? 1 : 0);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad numerator in '" + text + "'");
  return {BigInt{num_text}, static_cast<unsigned>(std::stoul(exp_text))};
}

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  if (a.k_ >= b.k_) return {a.num_ + (b.num_ << (a.k_ - b.k_)), a.k_};
  return {(a.num_ << (b.k_ - a.k_)) + b.num_, b.k_};
}

DyadicRational operator-(const DyadicRational& a) { return {-a.num_, a.k_}; }

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) { return a + (-b); }

DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
  return {a.num_ * b.num_, a.k_ + b.k_};
}

bool operator<(const DyadicRational& a, const DyadicRational& b) {
  return (a - b).numerator().sign() < 0;
}

std::ostream& operator<<(std::ostream& os, const DyadicRational& d) {
  return os << d.to_exact_string();
}

}  // namespace graphweight
