#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "sp4/exact.hpp"
#include "sp4/gkmod.hpp"
#include "sp4/laurent.hpp"

namespace sp4 {

enum class OperatorKind { A1, A2, A3, A4, LONG, LONG_GENFUN };
std::string name(OperatorKind k);
OperatorKind parse_kind(const std::string& s);

// G(z)^power with G(z) = Gamma(z+1/2)Gamma(z-1/2)/Gamma(z)^2. Pairs
// (z)^(h)(z)^(-h) at half-odd h leave one such factor after normalization;
// it is carried symbolically so that entries stay exact.
template <class S>
struct GaugeFactor {
  S z;
  int power = 0;
};

template <class S>
struct Gauged {
  S value;
  int gauge = 0;
};

template <class S>
struct BlockMatrix {
  HalfInt j, n;
  std::vector<HalfInt> rows, cols;
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> entries;
  std::vector<GaugeFactor<S>> gauge;
};

template <class S>
BlockMatrix<S> operator*(const BlockMatrix<S>& a, const BlockMatrix<S>& b);

Complex gauge_value(const Complex& z);
// Entries with the gauge factors multiplied in.
Eigen::MatrixXcd materialize(const BlockMatrix<Complex>& b);

// Q(z,m) = pi 2^{2-2z} Gamma(2z-1)/(Gamma(z+m)Gamma(z-m)).
Exact q_factor(const Rational& z, HalfInt m);
Complex q_factor(const Complex& z, HalfInt m);
// S^{(0,n)}_{0,0}(z) = sqrt(pi) Gamma(z-1/2)/Gamma(z)
Exact s00(const Rational& z);

// Q(z,m)/Q(z,0) = 1/((z)^(m)(z)^(-m))
template <class S>
Gauged<S> q_ratio(const S& z, HalfInt m);
template <class S>
Gauged<S> t_norm(HalfInt n, HalfInt m, const S& z);

Exact i_power(long k);

// M at Euler angles (0,-pi/2,3pi/2,pi/2), N at (0,-pi/2,-3pi/2,pi/2); rows and columns -j..j.
std::pair<BlockMatrix<Exact>, BlockMatrix<Exact>> mn_matrices(HalfInt j, HalfInt n = HalfInt(0));
// Constant term of the Laurent generating function of M^j_{m3,m4}.
Exact m_entry_genfun(HalfInt j, HalfInt m3, HalfInt m4);

// Unnormalized sum over m4 of i^{-2m4} M N Q(z,m4); exact at half-integer z.
Exact s_entry_sum(HalfInt j, HalfInt n, HalfInt m3, HalfInt m2, const Rational& z);
// Unnormalized closed form with a terminating 3F2 at unit argument (integer j).
Exact s_entry_3f2(HalfInt j, HalfInt n, HalfInt m1, HalfInt m4, const Rational& z);

// Normalized entry S/S^{(0,n)}_{0,0} from the sum form.
template <class S>
Gauged<S> s_norm(HalfInt j, HalfInt n, HalfInt m1, HalfInt m2, const S& z);
// Normalized entry from the 3F2 form (integer j).
template <class S>
S s_norm_3f2(HalfInt j, HalfInt m1, HalfInt m2, const S& z);
// s_norm_3f2 at a rational point, taking the limit across removable singularities.
Exact s_norm_closed(HalfInt j, HalfInt m1, HalfInt m2, const Rational& z);

enum class HGForm { H, G };
// Laurent series in t of the H or G generating function.
template <class S>
LSeries1<S> hg_series(HGForm form, HalfInt j, HalfInt m1, HalfInt m2, const S& z, long order);
Exact hg_constant_term(HGForm form, HalfInt j, HalfInt m1, HalfInt m2, const Rational& z);

template <class S>
BlockMatrix<S> simple_operator(OperatorKind kind, HalfInt j, HalfInt n, const Character<S>& chi);
// A4 A3 A2 A1
template <class S>
BlockMatrix<S> long_operator_product(HalfInt j, HalfInt n, const Character<S>& chi);

// Parity marker: 0 when j-n = d1 mod 2, else 1.
int epsilon(HalfInt j, HalfInt n, int d1);
// Theorem entry from the two-variable generating function; order 0 selects 6j+6.
BlockMatrix<Exact> long_operator_genfun(HalfInt j, HalfInt n, const Character<Exact>& chi, long trunc_order = 0);

struct BlockComparison {
  bool proportional = false;
  Exact constant;
  std::string detail;
};
// Checks b = c a for one scalar c over every entry, with identical gauges.
BlockComparison compare_up_to_constant(const BlockMatrix<Exact>& a, const BlockMatrix<Exact>& b);

// sum_{m2} S_{m1,m2}(z) S_{m2,m3}(1-z) = delta_{m1,m3}
bool inversion_check(HalfInt j, HalfInt n, int d1, int d2, const Rational& z);

// 2 int_0^{pi/2} sin^{2z-2}(u) cos(2m(pi/2-u)) du, the Mellin transform after x = sin^2 u.
double mellin_integral(double z, HalfInt m);
bool mellin_numeric_check(double z, HalfInt m, double tol = 1e-8, double* rel_err = nullptr);

extern template Gauged<Exact> q_ratio(const Exact&, HalfInt);
extern template Gauged<Complex> q_ratio(const Complex&, HalfInt);
extern template Gauged<Exact> t_norm(HalfInt, HalfInt, const Exact&);
extern template Gauged<Complex> t_norm(HalfInt, HalfInt, const Complex&);
extern template Gauged<Exact> s_norm(HalfInt, HalfInt, HalfInt, HalfInt, const Exact&);
extern template Gauged<Complex> s_norm(HalfInt, HalfInt, HalfInt, HalfInt, const Complex&);
extern template BlockMatrix<Exact> simple_operator(OperatorKind, HalfInt, HalfInt, const Character<Exact>&);
extern template BlockMatrix<Complex> simple_operator(OperatorKind, HalfInt, HalfInt, const Character<Complex>&);
extern template BlockMatrix<Exact> long_operator_product(HalfInt, HalfInt, const Character<Exact>&);
extern template BlockMatrix<Complex> long_operator_product(HalfInt, HalfInt, const Character<Complex>&);

}  // namespace sp4
