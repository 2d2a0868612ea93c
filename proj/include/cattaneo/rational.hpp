#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>

namespace cattaneo {

/// Exact rational on 64-bit numerator/denominator, always reduced with
/// positive denominator. Intermediates run through __int128; results that do
/// not fit back into 64 bits throw std::overflow_error.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}
  Rational(long long n, long long d);

  /// Exact dyadic value of a finite double (every finite double is m * 2^e).
  /// Throws std::overflow_error when the reduced form needs more than 64 bits.
  static Rational from_double(double x);

  long long num() const { return num_; }
  long long den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const { return make(-static_cast<__int128>(num_), den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b);

  std::string str() const;  // "3/2", "-1/6", "2"

  static Rational make(__int128 n, __int128 d);

 private:
  long long num_ = 0;
  long long den_ = 1;
};

/// One term of an integer-coefficient linear combination of doubles.
struct LinearTerm {
  int coeff;
  double x;
};

/// Exact value of (sum num) / (sum den), both sums taken over dyadic
/// decompositions of the inputs with a common binary exponent, so the scale
/// cancels and the ratio is exact for any representable double inputs.
Rational exact_ratio(std::initializer_list<LinearTerm> num,
                     std::initializer_list<LinearTerm> den);

}  // namespace cattaneo
