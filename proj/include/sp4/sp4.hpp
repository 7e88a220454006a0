#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "sp4/exact.hpp"

namespace sp4 {

template <class S>
using GMat = Eigen::Matrix<S, 4, 4>;

// Real roots (Chevalley picture).
enum class Root { a1, a2, a1a2, a1a1a2, neg_a1, neg_a2, neg_a1a2, neg_a1a1a2 };
// Roots in the compact picture; b1 and its negative are compact.
enum class CRoot { b1, b2, b1b2, b1b1b2, neg_b1, neg_b2, neg_b1b2, neg_b1b1b2 };

inline constexpr std::array<Root, 8> kAllRoots{Root::a1, Root::a2, Root::a1a2, Root::a1a1a2,
                                               Root::neg_a1, Root::neg_a2, Root::neg_a1a2, Root::neg_a1a1a2};

Root negate(Root r);
CRoot negate(CRoot r);
bool is_positive(Root r);
std::string name(Root r);
std::string name(CRoot r);
// alpha(H_1), alpha(H_2)
std::pair<int, int> root_weights(Root r);

template <class S>
GMat<S> elementary(int row, int col) {
  GMat<S> m = GMat<S>::Constant(S(0));
  m(row - 1, col - 1) = S(1);
  return m;
}

template <class S>
GMat<S> bracket(const GMat<S>& x, const GMat<S>& y) {
  return x * y - y * x;
}

const GMat<Exact>& symplectic_form();
GMat<Exact> chevalley(Root r);
GMat<Exact> cartan(int i);  // H_1 or H_2
std::array<GMat<Exact>, 4> u2_generators();

bool in_lie_algebra(const GMat<Exact>& x);  // X^t J + J X = 0
bool in_group(const GMat<Exact>& g);        // g^t J g = J
GMat<Exact> group_inverse(const GMat<Exact>& g);
GMat<Exact> conj(const GMat<Exact>& x);
GMat<Exact> cartan_involution(const GMat<Exact>& x);  // -X^t

// exp(angle*Y) for Y^3 = -Y with angle = k*pi/4.
GMat<Exact> exp_rotation(const GMat<Exact>& y, long eighth_turns);
// exp(X) for nilpotent X.
GMat<Exact> exp_nilpotent(const GMat<Exact>& x);
Eigen::Matrix4d exp_rotation(const Eigen::Matrix4d& y, double angle);
Eigen::Matrix4d exp_nilpotent(const Eigen::Matrix4d& x);
Eigen::Matrix4d to_double(const GMat<Exact>& x);

// w_alpha = exp(pi/2 (X_alpha - X_-alpha)) for simple alpha (0 -> alpha_1, 1 -> alpha_2).
GMat<Exact> weyl_reflection(int simple);
// gamma_alpha = exp(pi (X_alpha - X_-alpha)) = w_alpha^2.
GMat<Exact> gamma_element(Root r);

// Word entries are 0 (w_alpha1) or 1 (w_alpha2); the rightmost letter acts first.
template <class S>
std::pair<S, S> weyl_on_lambda(const std::vector<int>& word, std::pair<S, S> lambda) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it == 0)
      std::swap(lambda.first, lambda.second);
    else
      lambda.second = -lambda.second;
  }
  return lambda;
}
inline const std::vector<int> kLongestWord{1, 0, 1, 0};

template <class S>
struct IwasawaFactors {
  GMat<S> kappa, h, chi;
};

// exp(t X_-alpha) = kappa(t) h(sqrt(1+t^2)) chi(t/(1+t^2)); exact when 1+t^2 is a rational square.
IwasawaFactors<Exact> iwasawa_sl2(int simple, const Rational& t);
IwasawaFactors<double> iwasawa_sl2(int simple, double t);
// Ad(w_alpha^-1) sends X_alpha to the -alpha line and every other positive root vector to a positive one.
bool iwasawa_normal_check(int simple);

// Noncompact vectors v_beta and the Cayley elements exp(pi/4 (conj(v) - v)).
GMat<Exact> v_vector(CRoot b);
GMat<Exact> cayley_element(CRoot b);
bool cayley_check();

template <class S>
S hc_omega2(const S& l1, const S& l2) {
  using T = ScalarTraits<S>;
  return (l1 * l1 + l2 * l2 - T::from_rational(5)) * T::from_rational(Rational(1, 12));
}

template <class S>
S hc_omega4(const S& l1, const S& l2) {
  using T = ScalarTraits<S>;
  S a = l1 * l1, b = l2 * l2;
  return (a * a + b * b + T::from_rational(6) * a * b - T::from_rational(6) * (a + b) - T::from_rational(11)) *
         T::from_rational(Rational(1, 5184));
}

struct WordTerm {
  Rational coeff;
  std::vector<GMat<Exact>> word;
};
// Omega_2 as a sum of coefficient * product of algebra elements.
const std::vector<WordTerm>& omega2_words();

}  // namespace sp4
