#include "sp4/wigner.hpp"

#include <cmath>

#include "sp4/laurent.hpp"

namespace sp4 {

namespace {

Rational fact_q(long n) { return Rational(factorial(n)); }

Exact exact_pow(const Exact& x, long e) {
  if (e < 0) {
    if (x.is_zero()) throw DomainError("negative power of zero");
    return exact_pow(x.inverse(), -e);
  }
  Exact acc(1);
  for (long k = 0; k < e; ++k) acc *= x;
  return acc;
}

// cos and sin of k*pi/4
Exact cos_eighth(long k) {
  Exact w = eighth_root(k);
  return (w + w.conj()) * Exact(Rational(1, 2));
}
Exact sin_eighth(long k) {
  Exact w = eighth_root(k);
  return (w - w.conj()) * Exact(Rational(0), Rational(-1, 2));
}

double from_q(const Rational& q, double*) { return q.get_d(); }
Exact from_q(const Rational& q, Exact*) { return Exact(q); }

template <class S>
S little_d_sum(HalfInt j, HalfInt m1, HalfInt m2, const S& s, const S& c, S (*pw)(const S&, long)) {
  long jp1 = (j + m1).as_integer(), jm2 = (j - m2).as_integer(), d21 = (m2 - m1).as_integer();
  long twoj = (j + j).as_integer();
  long lo = std::max(0L, -d21), hi = std::min(jm2, jp1);
  S acc = from_q(0, static_cast<S*>(nullptr));
  for (long p = lo; p <= hi; ++p) {
    Rational coef = Rational(1) / (fact_q(jp1 - p) * fact_q(p) * fact_q(d21 + p) * fact_q(jm2 - p));
    if ((d21 + p) % 2) coef = -coef;
    acc = acc + from_q(coef, static_cast<S*>(nullptr)) * pw(s, d21 + 2 * p) * pw(c, twoj - d21 - 2 * p);
  }
  return acc;
}

double dpow(const double& x, long e) { return std::pow(x, static_cast<double>(e)); }
Exact epow(const Exact& x, long e) { return exact_pow(x, e); }

void check_index(HalfInt j, HalfInt m) {
  if (j.twice < 0 || m > j || m < -j || !(j - m).is_integer())
    throw DomainError("invalid Wigner label j=" + j.str() + " m=" + m.str());
}

}  // namespace

bool nonpositive_integer(const Exact& x) {
  if (!x.is_rational()) return false;
  Rational q = x.to_rational();
  return q.get_den() == 1 && q <= 0;
}

bool nonpositive_integer(const Complex& x) {
  return x.imag() == 0 && x.real() <= 0 && x.real() == std::floor(x.real());
}

WignerIndex::WignerIndex(HalfInt j_, HalfInt n_, HalfInt m1_, HalfInt m2_) : j(j_), n(n_), m1(m1_), m2(m2_) {
  check_index(j, m1);
  check_index(j, m2);
}

std::string WignerIndex::str() const {
  return "(" + j.str() + "," + n.str() + "," + m1.str() + "," + m2.str() + ")";
}

Exact c_factor(HalfInt j, HalfInt m) {
  check_index(j, m);
  return Exact::sqrt(Rational(factorial((j + m).as_integer()) * factorial((j - m).as_integer())));
}

Exact eighth_root(long k) {
  k = ((k % 8) + 8) % 8;
  Exact r2 = Exact::sqrt(Rational(1, 2));
  switch (k) {
    case 0: return Exact(1);
    case 1: return r2 * Exact(1, 1);
    case 2: return Exact::i();
    case 3: return r2 * Exact(-1, 1);
    case 4: return Exact(-1);
    case 5: return r2 * Exact(-1, -1);
    case 6: return -Exact::i();
    default: return r2 * Exact(1, -1);
  }
}

double little_d(HalfInt j, HalfInt m1, HalfInt m2, double theta) {
  check_index(j, m1);
  check_index(j, m2);
  return little_d_sum<double>(j, m1, m2, std::sin(theta / 2), std::cos(theta / 2), dpow);
}

Exact little_d(HalfInt j, HalfInt m1, HalfInt m2, int theta_quarter_turns) {
  check_index(j, m1);
  check_index(j, m2);
  return little_d_sum<Exact>(j, m1, m2, sin_eighth(theta_quarter_turns), cos_eighth(theta_quarter_turns), epow);
}

Complex wigner_D(const WignerIndex& w, const EulerAngles& a) {
  double c = (c_factor(w.j, w.m1) * c_factor(w.j, w.m2)).to_complex().real();
  double phase = w.n.to_double() * a.zeta + w.m1.to_double() * a.psi + w.m2.to_double() * a.phi;
  return c * std::polar(1.0, phase) * little_d(w.j, w.m1, w.m2, a.theta);
}

Exact wigner_D(const WignerIndex& w, const QuarterAngles& a) {
  long eighths = w.n.twice * a.zeta + w.m1.twice * a.psi + w.m2.twice * a.phi;
  return c_factor(w.j, w.m1) * c_factor(w.j, w.m2) * eighth_root(eighths) * little_d(w.j, w.m1, w.m2, a.theta);
}

double wigner_via_jacobi(const WignerIndex& w, double theta) {
  long es = (w.m1 - w.m2).as_integer(), ec = (w.m1 + w.m2).as_integer();
  double s = std::sin(theta / 2), c = std::cos(theta / 2);
  if ((s == 0 && es < 0) || (c == 0 && ec < 0)) throw DomainError("wigner_via_jacobi: negative power of a vanishing half-angle factor");
  long n = (w.j - w.m1).as_integer();
  // Exact at the binary value of cos(theta): negative beta makes the float sum cancel near theta = pi.
  double p = jacobi_sum<Exact>(n, Exact(Rational(es)), Exact(Rational(ec)), Exact(Rational(std::cos(theta)))).to_complex().real();
  double norm = Rational(fact_q((w.j + w.m2).as_integer()) * fact_q((w.j - w.m2).as_integer())).get_d();
  return std::pow(s, es) * std::pow(c, ec) * p / norm;
}

Exact wigner_via_jacobi(const WignerIndex& w, int theta_quarter_turns) {
  long es = (w.m1 - w.m2).as_integer(), ec = (w.m1 + w.m2).as_integer();
  Exact s = sin_eighth(theta_quarter_turns), c = cos_eighth(theta_quarter_turns);
  if ((s.is_zero() && es < 0) || (c.is_zero() && ec < 0)) throw DomainError("wigner_via_jacobi: negative power of a vanishing half-angle factor");
  long n = (w.j - w.m1).as_integer();
  Exact p = jacobi_sum<Exact>(n, Exact(es), Exact(ec), cos_eighth(2L * theta_quarter_turns));
  Rational norm = fact_q((w.j + w.m2).as_integer()) * fact_q((w.j - w.m2).as_integer());
  return exact_pow(s, es) * exact_pow(c, ec) * p / Exact(norm);
}

Eigen::Matrix2cd su2_matrix(const EulerAngles& a) {
  double c = std::cos(a.theta / 2), s = std::sin(a.theta / 2);
  auto e = [](double x) { return std::polar(1.0, x / 2); };
  Eigen::Matrix2cd g;
  g << e(-a.zeta - a.phi - a.psi) * c, -e(-a.zeta + a.phi - a.psi) * s,
       e(-a.zeta - a.phi + a.psi) * s, e(-a.zeta + a.phi + a.psi) * c;
  return g;
}

EulerAngles euler_from_matrix(const Eigen::Matrix2cd& g) {
  double A = std::arg(g(0, 0)), C = std::arg(g(1, 0)), D = std::arg(g(1, 1));
  EulerAngles a;
  a.theta = 2 * std::atan2(std::abs(g(1, 0)), std::abs(g(0, 0)));
  a.psi = C - A;
  a.phi = D - C;
  a.zeta = -(A + D);
  return a;
}

Exact clebsch_gordan_j1(HalfInt j, HalfInt m1, int m2, int j0) {
  check_index(j, m1);
  if (m2 < -1 || m2 > 1 || j0 < -1 || j0 > 1) throw DomainError("clebsch_gordan_j1: m2 and j0 must lie in {-1,0,1}");
  HalfInt J = j + HalfInt(j0), M = m1 + HalfInt(m2);
  if (J.twice < 0) throw OutOfRange("target spin " + J.str() + " is negative");
  if (M > J || M < -J) throw OutOfRange("target weight " + M.str() + " exceeds spin " + J.str());
  Rational jj = j.to_rational(), m = m1.to_rational();
  auto root = [](const Rational& num, const Rational& den) { return den == 0 ? Exact(0) : Exact::sqrt(num / den); };
  switch (j0) {
    case -1:
      if (m2 == -1) return root((jj + m) * (jj + m - 1), 2 * jj * (2 * jj + 1));
      if (m2 == 0) return -root((jj - m) * (jj + m), jj * (2 * jj + 1));
      return root((jj - m) * (jj - m - 1), 2 * jj * (2 * jj + 1));
    case 0:
      if (jj == 0) return Exact(0);
      if (m2 == -1) return root((jj + m) * (jj - m + 1), 2 * jj * (jj + 1));
      if (m2 == 0) return Exact(m) * Exact::sqrt(1 / (jj * (jj + 1)));
      return -root((jj - m) * (jj + m + 1), 2 * jj * (jj + 1));
    default:
      if (m2 == -1) return root((jj - m + 1) * (jj - m + 2), (2 * jj + 2) * (2 * jj + 1));
      if (m2 == 0) return root((jj - m + 1) * (jj + m + 1), (jj + 1) * (2 * jj + 1));
      return root((jj + m + 1) * (jj + m + 2), (2 * jj + 2) * (2 * jj + 1));
  }
}

LinComb<Exact> product_expand(const WignerIndex& w1, const WignerIndex& w2) {
  if (w2.j != HalfInt(1)) throw DomainError("product_expand: second factor must have j=1");
  int c = static_cast<int>(w2.m1.as_integer()), d = static_cast<int>(w2.m2.as_integer());
  LinComb<Exact> out;
  for (int j0 = -1; j0 <= 1; ++j0) {
    HalfInt J = w1.j + HalfInt(j0), a = w1.m1 + HalfInt(c), b = w1.m2 + HalfInt(d);
    if (J.twice < 0 || a > J || a < -J || b > J || b < -J) continue;
    Exact coef = clebsch_gordan_j1(w1.j, w1.m1, c, j0) * clebsch_gordan_j1(w1.j, w1.m2, d, j0);
    if (!coef.is_zero()) out.add(WignerIndex(J, w1.n + w2.n, a, b), coef);
  }
  return out;
}

LinComb<Exact> dl_gamma(CompactGen g, const WignerIndex& w) {
  LinComb<Exact> out;
  Exact i = Exact::i();
  Rational j = w.j.to_rational(), m = w.m1.to_rational();
  switch (g) {
    case CompactGen::G0: out.add(w, i * Exact(w.n.to_rational())); break;
    case CompactGen::G3: out.add(w, i * Exact(m)); break;
    case CompactGen::GPlus:
      if (w.m1 < w.j) out.add(WignerIndex(w.j, w.n, w.m1 + HalfInt(1), w.m2), -i * Exact::sqrt((j - m) * (j + m + 1)));
      break;
    case CompactGen::GMinus:
      if (w.m1 > -w.j) out.add(WignerIndex(w.j, w.n, w.m1 - HalfInt(1), w.m2), -i * Exact::sqrt((j + m) * (j - m + 1)));
      break;
  }
  return out;
}

LinComb<Exact> dr_gamma(CompactGen g, const WignerIndex& w) {
  LinComb<Exact> out;
  Exact i = Exact::i();
  Rational j = w.j.to_rational(), m = w.m2.to_rational();
  switch (g) {
    case CompactGen::G0: out.add(w, -i * Exact(w.n.to_rational())); break;
    case CompactGen::G3: out.add(w, -i * Exact(m)); break;
    case CompactGen::GPlus:
      if (w.m2 > -w.j) out.add(WignerIndex(w.j, w.n, w.m1, w.m2 - HalfInt(1)), i * Exact::sqrt((j + m) * (j - m + 1)));
      break;
    case CompactGen::GMinus:
      if (w.m2 < w.j) out.add(WignerIndex(w.j, w.n, w.m1, w.m2 + HalfInt(1)), i * Exact::sqrt((j - m) * (j + m + 1)));
      break;
  }
  return out;
}

bool jacobi_genfun_check(const Rational& alpha, const Rational& beta, const Rational& x, long order) {
  Exact xe(x);
  LSeries1<Exact> lhs = binom_series(Exact(alpha), 1, order, (xe + Exact(1)) * Exact(Rational(1, 2))) *
                        binom_series(Exact(beta), 1, order, (xe - Exact(1)) * Exact(Rational(1, 2)));
  for (long n = 0; n <= order; ++n)
    if (lhs.coeff(n) != jacobi_hyp<Exact>(n, Exact(alpha - n), Exact(beta - n), xe)) return false;
  return true;
}

}  // namespace sp4
