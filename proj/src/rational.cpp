#include "cattaneo/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cattaneo {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kInt64Max = std::numeric_limits<long long>::max();

// Dyadic decomposition x = mant * 2^exp with |mant| < 2^53.
struct Dyadic {
  long long mant = 0;
  int exp = 0;
};

Dyadic dyadic_of(double x) {
  if (!std::isfinite(x)) throw std::domain_error("rational: non-finite input");
  if (x == 0.0) return {0, 0};
  int e = 0;
  double m = std::frexp(x, &e);  // x = m * 2^e, 0.5 <= |m| < 1
  Dyadic d;
  d.mant = static_cast<long long>(std::ldexp(m, 53));
  d.exp = e - 53;
  while (d.mant != 0 && (d.mant & 1) == 0) {
    d.mant >>= 1;
    ++d.exp;
  }
  return d;
}

}  // namespace

Rational Rational::make(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n > kInt64Max || -n > kInt64Max || d > kInt64Max)
    throw std::overflow_error("rational: value does not fit in 64 bits");
  Rational r;
  r.num_ = static_cast<long long>(n);
  r.den_ = static_cast<long long>(d);
  return r;
}

Rational::Rational(long long n, long long d) { *this = make(n, d); }

Rational Rational::from_double(double x) {
  Dyadic d = dyadic_of(x);
  if (d.mant == 0) return Rational(0);
  if (d.exp >= 0) {
    if (d.exp > 62) throw std::overflow_error("rational: exponent too large");
    return make(static_cast<__int128>(d.mant) << d.exp, 1);
  }
  if (-d.exp > 62) throw std::overflow_error("rational: exponent too small");
  return make(d.mant, static_cast<__int128>(1) << -d.exp);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::make(static_cast<__int128>(a.num_) * b.den_ +
                            static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::make(static_cast<__int128>(a.num_) * b.num_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational: division by zero");
  return Rational::make(static_cast<__int128>(a.num_) * b.den_,
                        static_cast<__int128>(a.den_) * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <
         static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational exact_ratio(std::initializer_list<LinearTerm> num,
                     std::initializer_list<LinearTerm> den) {
  // Common exponent across every nonzero term in both combinations; it
  // cancels in the ratio, so only the shifted integer sums matter.
  std::vector<std::pair<int, Dyadic>> terms;
  int emin = std::numeric_limits<int>::max();
  auto collect = [&](std::initializer_list<LinearTerm> list) {
    size_t first = terms.size();
    for (const LinearTerm& t : list) {
      Dyadic d = dyadic_of(t.x);
      if (t.coeff == 0 || d.mant == 0) {
        terms.emplace_back(0, Dyadic{});
        continue;
      }
      terms.emplace_back(t.coeff, d);
      if (d.exp < emin) emin = d.exp;
    }
    return first;
  };
  size_t num_begin = collect(num);
  size_t den_begin = collect(den);
  (void)num_begin;

  auto sum_range = [&](size_t begin, size_t end) {
    __int128 s = 0;
    for (size_t i = begin; i < end; ++i) {
      auto [c, d] = terms[i];
      if (c == 0) continue;
      int shift = d.exp - emin;
      if (shift > 70) throw std::overflow_error("rational: exponent spread too wide");
      s += static_cast<__int128>(c) * (static_cast<__int128>(d.mant) << shift);
    }
    return s;
  };

  __int128 n = sum_range(0, den_begin);
  __int128 d = sum_range(den_begin, terms.size());
  return Rational::make(n, d);
}

}  // namespace cattaneo
