#pragma once

#include <map>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "sp4/exact.hpp"

namespace sp4 {

bool nonpositive_integer(const Exact& x);
bool nonpositive_integer(const Complex& x);

// Index of W^{(j,n)}_{m1,m2}; construction rejects out-of-range or mixed-parity labels.
struct WignerIndex {
  HalfInt j, n, m1, m2;

  WignerIndex() = default;
  WignerIndex(HalfInt j, HalfInt n, HalfInt m1, HalfInt m2);
  std::string str() const;
  friend auto operator<=>(const WignerIndex&, const WignerIndex&) = default;
};

// Finite formal combination of Wigner basis vectors with no zero coefficients.
template <class S>
class LinComb {
 public:
  using Map = std::map<WignerIndex, S>;

  LinComb() = default;
  static LinComb unit(const WignerIndex& w) {
    LinComb c;
    c.terms_.emplace(w, ScalarTraits<S>::from_rational(1));
    return c;
  }

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  S coeff(const WignerIndex& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? ScalarTraits<S>::from_rational(0) : it->second;
  }

  void add(const WignerIndex& w, const S& c) {
    if (ScalarTraits<S>::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second = it->second + c;
      if (ScalarTraits<S>::is_zero(it->second)) terms_.erase(it);
    }
  }
  void add(const LinComb& o, const S& scale) {
    for (const auto& [w, c] : o.terms_) add(w, c * scale);
  }

  friend LinComb operator+(LinComb a, const LinComb& b) {
    for (const auto& [w, c] : b.terms_) a.add(w, c);
    return a;
  }
  friend LinComb operator-(LinComb a, const LinComb& b) {
    for (const auto& [w, c] : b.terms_) a.add(w, -c);
    return a;
  }
  friend LinComb operator*(const S& s, const LinComb& a) {
    LinComb out;
    for (const auto& [w, c] : a.terms_) out.add(w, s * c);
    return out;
  }
  friend bool operator==(const LinComb& a, const LinComb& b) { return (a - b).empty(); }

 private:
  Map terms_;
};

struct EulerAngles {
  double zeta = 0, psi = 0, theta = 0, phi = 0;
};

// Euler angles that are integer multiples of pi/2, stored as those integers.
struct QuarterAngles {
  int zeta = 0, psi = 0, theta = 0, phi = 0;
};

// c^j_m = sqrt((j+m)!(j-m)!)
Exact c_factor(HalfInt j, HalfInt m);

// exp(i*pi*k/4)
Exact eighth_root(long k);

double little_d(HalfInt j, HalfInt m1, HalfInt m2, double theta);
Exact little_d(HalfInt j, HalfInt m1, HalfInt m2, int theta_quarter_turns);

Complex wigner_D(const WignerIndex& w, const EulerAngles& a);
Exact wigner_D(const WignerIndex& w, const QuarterAngles& a);

// The little-d part via Jacobi polynomials; boundary angles are accepted only
// when both half-angle exponents are nonnegative.
double wigner_via_jacobi(const WignerIndex& w, double theta);
Exact wigner_via_jacobi(const WignerIndex& w, int theta_quarter_turns);

Eigen::Matrix2cd su2_matrix(const EulerAngles& a);
EulerAngles euler_from_matrix(const Eigen::Matrix2cd& g);

template <class S>
S jacobi_sum(long n, const S& alpha, const S& beta, const S& x) {
  using T = ScalarTraits<S>;
  if (nonpositive_integer(alpha + beta + T::from_rational(n + 1)))
    throw PoleError("jacobi_sum: Gamma(alpha+beta+n+1) prefactor is singular");
  S half_xm = (x - T::from_rational(1)) * T::from_rational(Rational(1, 2));
  S sum = T::from_rational(0), pw = T::from_rational(1);
  for (long m = 0; m <= n; ++m) {
    sum = sum + T::from_rational(Rational(factorial(n) / (factorial(m) * factorial(n - m)))) *
                    pochhammer(alpha + T::from_rational(m + 1), n - m) *
                    pochhammer(alpha + beta + T::from_rational(n + 1), m) * pw;
    pw = pw * half_xm;
  }
  return sum * T::from_rational(Rational(1) / Rational(factorial(n)));
}

template <class S>
S jacobi_hyp(long n, const S& alpha, const S& beta, const S& x) {
  using T = ScalarTraits<S>;
  S half_xp = (x + T::from_rational(1)) * T::from_rational(Rational(1, 2));
  S half_xm = (x - T::from_rational(1)) * T::from_rational(Rational(1, 2));
  S sum = T::from_rational(0);
  for (long m = 0; m <= n; ++m) {
    S term = pochhammer(T::from_rational(-n), m) * pochhammer(-beta - T::from_rational(n), m) *
             T::from_rational(Rational(1) / Rational(factorial(m))) * pochhammer(alpha + T::from_rational(m + 1), n - m);
    for (long k = 0; k < n - m; ++k) term = term * half_xp;
    for (long k = 0; k < m; ++k) term = term * half_xm;
    sum = sum + term;
  }
  return sum * T::from_rational(Rational(1) / Rational(factorial(n)));
}

// <j+j0, m1+m2 | j, m1; 1, m2>
Exact clebsch_gordan_j1(HalfInt j, HalfInt m1, int m2, int j0);

// W^{(j1,n1)}_{a,b} * W^{(1,n2)}_{c,d} expanded in W^{(J,n1+n2)}.
LinComb<Exact> product_expand(const WignerIndex& w1, const WignerIndex& w2);

enum class CompactGen { G0, G3, GPlus, GMinus };  // gamma_0, gamma_3, gamma_1 +- i gamma_2

LinComb<Exact> dl_gamma(CompactGen g, const WignerIndex& w);
LinComb<Exact> dr_gamma(CompactGen g, const WignerIndex& w);

// (1+(x+1)t/2)^alpha (1+(x-1)t/2)^beta against sum_n P^{(alpha-n,beta-n)}_n(x) t^n.
bool jacobi_genfun_check(const Rational& alpha, const Rational& beta, const Rational& x, long order);

}  // namespace sp4
