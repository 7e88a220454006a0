#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <Eigen/Core>

namespace sp4 {

struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DecompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;
using Complex = std::complex<double>;

// A value in (1/2)Z, stored as twice the value.
struct HalfInt {
  long twice = 0;

  constexpr HalfInt() = default;
  constexpr HalfInt(int v) : twice(2L * v) {}
  constexpr HalfInt(long v) : twice(2 * v) {}
  static constexpr HalfInt from_twice(long t) {
    HalfInt h;
    h.twice = t;
    return h;
  }
  static HalfInt parse(const std::string& s);

  constexpr bool is_integer() const { return twice % 2 == 0; }
  long as_integer() const;
  double to_double() const { return twice / 2.0; }
  Rational to_rational() const { return Rational(twice, 2); }
  std::string str() const;

  constexpr HalfInt operator-() const { return from_twice(-twice); }
  constexpr HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice -= o.twice; return *this; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

// Sum of terms c * sqrt(r) * pi^(p/2) with c a complex rational and r squarefree.
// The common case is a single term; sums of different radicands stay unreduced
// but canonical (sorted by (r, p), no zero coefficients).
class Exact {
 public:
  struct Term {
    Rational re, im;
    std::uint64_t r = 1;
    int p = 0;
  };

  Exact() = default;
  Exact(int v) : Exact(Rational(v)) {}
  Exact(long v) : Exact(Rational(v)) {}
  Exact(const Rational& q);
  Exact(const mpz_class& z) : Exact(Rational(z)) {}
  Exact(const Rational& re, const Rational& im);
  static Exact i();
  static Exact pi_power(int p);  // pi^(p/2)
  static Exact sqrt(const Rational& q);  // principal root; negative q gives i*sqrt(-q)
  static Exact parse(const std::string& s);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() <= 1; }
  bool is_rational() const;
  bool is_real() const;
  Rational to_rational() const;  // throws DomainError unless is_rational()
  Complex to_complex() const;
  Exact conj() const;
  Exact inverse() const;
  std::string str() const;

  Exact operator-() const;
  Exact& operator+=(const Exact& o);
  Exact& operator-=(const Exact& o);
  Exact& operator*=(const Exact& o);
  Exact& operator/=(const Exact& o) { return *this *= o.inverse(); }
  friend Exact operator+(Exact a, const Exact& b) { return a += b; }
  friend Exact operator-(Exact a, const Exact& b) { return a -= b; }
  friend Exact operator*(const Exact& a, const Exact& b) { Exact c = a; return c *= b; }
  friend Exact operator/(const Exact& a, const Exact& b) { return a * b.inverse(); }
  friend bool operator==(const Exact& a, const Exact& b);
  friend bool operator!=(const Exact& a, const Exact& b) { return !(a == b); }

 private:
  void add_term(Term t);
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Exact& x);
std::ostream& operator<<(std::ostream& os, HalfInt h);

Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);
// Splits n = s^2 * r with r squarefree.
void squarefree_split(const mpz_class& n, mpz_class& s, mpz_class& r);
mpz_class factorial(long n);

// Per-scalar operations used by the templated numerics.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Exact> {
  static Exact from_rational(const Rational& q) { return Exact(q); }
  static Exact from_exact(const Exact& x) { return x; }
  static Exact i() { return Exact::i(); }
  static Exact sqrt_rational(const Rational& q) { return Exact::sqrt(q); }
  static bool is_zero(const Exact& x) { return x.is_zero(); }
};

template <>
struct ScalarTraits<Complex> {
  static Complex from_rational(const Rational& q) { return Complex(q.get_d(), 0.0); }
  static Complex from_exact(const Exact& x) { return x.to_complex(); }
  static Complex i() { return Complex(0.0, 1.0); }
  static Complex sqrt_rational(const Rational& q) { return std::sqrt(Complex(q.get_d(), 0.0)); }
  static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
};

// Rising factorial (a)^(n); for n < 0 this is 1/((a-1)(a-2)...(a+n)).
template <class S>
S pochhammer(const S& a, long n) {
  using T = ScalarTraits<S>;
  S acc = T::from_rational(1);
  if (n >= 0) {
    for (long k = 0; k < n; ++k) acc = acc * (a + T::from_rational(k));
    return acc;
  }
  for (long k = 1; k <= -n; ++k) {
    S f = a - T::from_rational(k);
    if (T::is_zero(f)) throw PoleError("pochhammer: factor (a-" + std::to_string(k) + ") vanishes");
    acc = acc * f;
  }
  return T::from_rational(1) / acc;
}

// Generalized binomial coefficient n(n-1)...(n-k+1)/k!.
template <class S>
S binomial(const S& n, long k) {
  using T = ScalarTraits<S>;
  S acc = T::from_rational(1);
  for (long i = 0; i < k; ++i) acc = acc * (n - T::from_rational(i));
  return acc * T::from_rational(Rational(1, 1) / Rational(factorial(k)));
}

// Gamma at a half-integer, as rational * sqrt(pi)^{0 or 1}.
Exact gamma_half(HalfInt a);

Complex cgamma(Complex z);

}  // namespace sp4

namespace Eigen {
template <>
struct NumTraits<sp4::Exact> : GenericNumTraits<sp4::Exact> {
  typedef sp4::Exact Real;
  typedef sp4::Exact NonInteger;
  typedef sp4::Exact Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };
};
}  // namespace Eigen
