#include "sp4/intertwine.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sp4/wigner.hpp"

namespace sp4 {

namespace {

template <class S>
S from_half(HalfInt h) {
  return ScalarTraits<S>::from_rational(h.to_rational());
}

template <class S>
S from_q(const Rational& q) {
  return ScalarTraits<S>::from_rational(q);
}

std::string scalar_str(const Exact& x) { return x.is_rational() ? rational_str(x.to_rational()) : x.str(); }
std::string scalar_str(const Complex& x) {
  std::ostringstream os;
  os << x.real() << (x.imag() < 0 ? "" : "+") << x.imag() << "i";
  return os.str();
}

Rational pow2(long e) {
  mpz_class p = 1;
  p <<= static_cast<unsigned long>(std::labs(e));
  return e >= 0 ? Rational(p) : Rational(1) / Rational(p);
}

// 2^{k/2}
Exact sqrt2_power(long k) {
  Exact acc(1);
  Exact base = Exact::sqrt(k >= 0 ? Rational(2) : Rational(1, 2));
  for (long i = 0; i < std::labs(k); ++i) acc *= base;
  return acc;
}

long sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

std::vector<HalfInt> full_range(HalfInt j) {
  std::vector<HalfInt> out;
  for (HalfInt m = -j; m <= j; m += HalfInt(1)) out.push_back(m);
  return out;
}

void require_integer_j(HalfInt j, const char* what) {
  if (!j.is_integer()) throw DomainError(std::string(what) + ": integer j required, got " + j.str());
}

template <class S>
void merge_gauge(std::vector<GaugeFactor<S>>& g, const S& z, int power) {
  if (power == 0) return;
  for (auto it = g.begin(); it != g.end(); ++it) {
    if (it->z == z) {
      it->power += power;
      if (it->power == 0) g.erase(it);
      return;
    }
  }
  g.push_back({z, power});
}

template <class S>
bool same_gauge(const std::vector<GaugeFactor<S>>& a, const std::vector<GaugeFactor<S>>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    bool found = false;
    for (const auto& y : b) found = found || (x.z == y.z && x.power == y.power);
    if (!found) return false;
  }
  return true;
}

}  // namespace

std::string name(OperatorKind k) {
  switch (k) {
    case OperatorKind::A1: return "A1";
    case OperatorKind::A2: return "A2";
    case OperatorKind::A3: return "A3";
    case OperatorKind::A4: return "A4";
    case OperatorKind::LONG: return "LONG";
    case OperatorKind::LONG_GENFUN: return "LONG_GENFUN";
  }
  return "?";
}

OperatorKind parse_kind(const std::string& s) {
  for (OperatorKind k : {OperatorKind::A1, OperatorKind::A2, OperatorKind::A3, OperatorKind::A4, OperatorKind::LONG,
                         OperatorKind::LONG_GENFUN})
    if (name(k) == s) return k;
  throw ParseError("unknown operator kind '" + s + "'");
}

template <class S>
BlockMatrix<S> operator*(const BlockMatrix<S>& a, const BlockMatrix<S>& b) {
  if (a.cols != b.rows) throw std::logic_error("block product: index sets do not match");
  BlockMatrix<S> c;
  c.j = a.j;
  c.n = a.n;
  c.rows = a.rows;
  c.cols = b.cols;
  c.entries.resize(static_cast<Eigen::Index>(a.rows.size()), static_cast<Eigen::Index>(b.cols.size()));
  for (Eigen::Index r = 0; r < c.entries.rows(); ++r)
    for (Eigen::Index s = 0; s < c.entries.cols(); ++s) {
      S acc = from_q<S>(0);
      for (Eigen::Index k = 0; k < a.entries.cols(); ++k) acc = acc + a.entries(r, k) * b.entries(k, s);
      c.entries(r, s) = acc;
    }
  c.gauge = a.gauge;
  for (const auto& g : b.gauge) merge_gauge(c.gauge, g.z, g.power);
  return c;
}

template BlockMatrix<Exact> operator*(const BlockMatrix<Exact>&, const BlockMatrix<Exact>&);
template BlockMatrix<Complex> operator*(const BlockMatrix<Complex>&, const BlockMatrix<Complex>&);

Complex gauge_value(const Complex& z) {
  Complex g = cgamma(z);
  return cgamma(z + 0.5) * cgamma(z - 0.5) / (g * g);
}

Eigen::MatrixXcd materialize(const BlockMatrix<Complex>& b) {
  Complex f = 1.0;
  for (const auto& g : b.gauge) f *= std::pow(gauge_value(g.z), g.power);
  return b.entries * f;
}

Exact i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return Exact(1);
    case 1: return Exact::i();
    case 2: return Exact(-1);
    default: return -Exact::i();
  }
}

// ---------------------------------------------------------------------------
// Q and its normalizations

Exact q_factor(const Rational& z, HalfInt m) {
  Rational tz = 2 * z;
  if (tz.get_den() != 1) throw DomainError("q_factor: exact path needs z in (1/2)Z, got " + rational_str(z));
  long twoz = tz.get_num().get_si();
  long a = twoz - 1;
  HalfInt b = HalfInt::from_twice(twoz + m.twice), c = HalfInt::from_twice(twoz - m.twice);
  auto pole = [](HalfInt x) { return x.is_integer() && x <= HalfInt(0); };
  bool num_pole = a <= 0;
  int den_poles = (pole(b) ? 1 : 0) + (pole(c) ? 1 : 0);
  Exact base = Exact(pow2(2 - twoz)) * Exact::pi_power(2);
  if (den_poles > (num_pole ? 1 : 0)) return Exact(0);
  if (num_pole && den_poles == 0)
    throw PoleError("q_factor: Gamma(2z-1) has a pole at z = " + rational_str(z) + " (m = " + m.str() + ")");
  if (num_pole) {
    long k = -a;
    HalfInt pl = pole(b) ? b : c, other = pole(b) ? c : b;
    long l = -pl.as_integer();
    Rational lim = Rational(sign_power(k - l) * factorial(l), 2 * factorial(k));
    return base * Exact(lim) / gamma_half(other);
  }
  return base * Exact(Rational(factorial(a - 1))) / (gamma_half(b) * gamma_half(c));
}

Complex q_factor(const Complex& z, HalfInt m) {
  auto at_pole = [](const Complex& x) {
    return x.imag() == 0.0 && x.real() <= 0.0 && x.real() == std::round(x.real());
  };
  Complex a = 2.0 * z - 1.0, b = z + m.to_double(), c = z - m.to_double();
  int den_poles = (at_pole(b) ? 1 : 0) + (at_pole(c) ? 1 : 0);
  bool num_pole = at_pole(a);
  Complex base = M_PI * std::pow(Complex(2.0), 2.0 - 2.0 * z);
  if (den_poles > (num_pole ? 1 : 0)) return 0.0;
  if (num_pole && den_poles == 0) throw PoleError("q_factor: Gamma(2z-1) has a pole");
  if (num_pole) {
    long k = std::lround(-a.real());
    bool bp = at_pole(b);
    long l = std::lround(-(bp ? b : c).real());
    double lim = sign_power(k - l) * std::tgamma(static_cast<double>(l + 1)) / (2.0 * std::tgamma(static_cast<double>(k + 1)));
    return base * lim / cgamma(bp ? c : b);
  }
  return base * cgamma(a) / (cgamma(b) * cgamma(c));
}

Exact s00(const Rational& z) {
  Rational tz = 2 * z;
  if (tz.get_den() != 1) throw DomainError("s00: z must lie in (1/2)Z");
  long t = tz.get_num().get_si();
  return Exact::pi_power(1) * gamma_half(HalfInt::from_twice(t - 1)) / gamma_half(HalfInt::from_twice(t));
}

template <class S>
Gauged<S> q_ratio(const S& z, HalfInt m) {
  using T = ScalarTraits<S>;
  long a2 = std::labs(m.twice);
  long k = a2 / 2;
  S shift = a2 % 2 == 0 ? from_q<S>(0) : from_q<S>(Rational(1, 2));
  S num = from_q<S>(1), den = from_q<S>(1);
  for (long i = 1; i <= k; ++i) num = num * (z - shift - from_q<S>(i));
  for (long i = 0; i < k; ++i) {
    S f = z + shift + from_q<S>(i);
    if (T::is_zero(f)) throw PoleError("Pochhammer factor z+" + std::to_string(i) + (a2 % 2 ? "+1/2" : "") + " vanishes");
    den = den * f;
  }
  return {num / den, a2 % 2 == 0 ? 0 : -1};
}

template <class S>
Gauged<S> t_norm(HalfInt n, HalfInt m, const S& z) {
  HalfInt d = m - n;
  if (!d.is_integer()) throw DomainError("t_norm: m-n must be an integer");
  long k = d.as_integer();
  Gauged<S> r = q_ratio(z, HalfInt::from_twice(k));
  r.value = ScalarTraits<S>::from_exact(i_power(k)) * r.value;
  return r;
}

template Gauged<Exact> q_ratio(const Exact&, HalfInt);
template Gauged<Complex> q_ratio(const Complex&, HalfInt);
template Gauged<Exact> t_norm(HalfInt, HalfInt, const Exact&);
template Gauged<Complex> t_norm(HalfInt, HalfInt, const Complex&);

// ---------------------------------------------------------------------------
// Change of basis

namespace {

constexpr QuarterAngles kMAngles{0, -1, 3, 1};
constexpr QuarterAngles kNAngles{0, -1, -3, 1};

Exact m_entry(HalfInt j, HalfInt n, HalfInt a, HalfInt b) { return wigner_D(WignerIndex(j, n, a, b), kMAngles); }
Exact n_entry(HalfInt j, HalfInt n, HalfInt a, HalfInt b) { return wigner_D(WignerIndex(j, n, a, b), kNAngles); }

}  // namespace

std::pair<BlockMatrix<Exact>, BlockMatrix<Exact>> mn_matrices(HalfInt j, HalfInt n) {
  BlockMatrix<Exact> m, nn;
  m.j = nn.j = j;
  m.n = nn.n = n;
  m.rows = m.cols = nn.rows = nn.cols = full_range(j);
  auto sz = static_cast<Eigen::Index>(m.rows.size());
  m.entries.resize(sz, sz);
  nn.entries.resize(sz, sz);
  for (Eigen::Index r = 0; r < sz; ++r)
    for (Eigen::Index c = 0; c < sz; ++c) {
      m.entries(r, c) = m_entry(j, n, m.rows[r], m.cols[c]);
      nn.entries(r, c) = n_entry(j, n, m.rows[r], m.cols[c]);
    }
  return {m, nn};
}

Exact m_entry_genfun(HalfInt j, HalfInt m3, HalfInt m4) {
  long order = 2 * static_cast<long>(j.twice) + 2;
  Exact half(Rational(1, 2));
  LSeries1<Exact> f = binom_series<Exact>(Exact((j - m3).to_rational()), 1, order, half) *
                      binom_series<Exact>(Exact((j + m3).to_rational()), -1, order, half);
  Exact pre = Exact(sign_power(j.twice)) * c_factor(j, m4) / c_factor(j, m3) * i_power((m4 - m3).as_integer()) *
              sqrt2_power(-m4.twice);
  return pre * constant_term_1(f.shifted((m4 - j).as_integer()));
}

// ---------------------------------------------------------------------------
// Simple-operator entries

Exact s_entry_sum(HalfInt j, HalfInt n, HalfInt m3, HalfInt m2, const Rational& z) {
  Exact acc(0);
  for (HalfInt m4 : full_range(j)) {
    Exact mn = m_entry(j, n, m3, m4) * n_entry(j, n, m4, m2);
    if (mn.is_zero()) continue;
    acc += i_power(-m4.twice) * mn * q_factor(z, m4);
  }
  if (!acc.is_single_term())
    throw std::logic_error("s_entry_sum: result " + acc.str() + " does not share a single radicand");
  return acc;
}

template <class S>
Gauged<S> s_norm(HalfInt j, HalfInt n, HalfInt m1, HalfInt m2, const S& z) {
  using T = ScalarTraits<S>;
  S acc = from_q<S>(0);
  int gauge = 0;
  for (HalfInt m4 : full_range(j)) {
    Exact mn = m_entry(j, n, m1, m4) * n_entry(j, n, m4, m2);
    if (mn.is_zero()) continue;
    Gauged<S> q = q_ratio(z, m4);
    gauge = q.gauge;
    acc = acc + T::from_exact(i_power(-m4.twice) * mn) * q.value;
  }
  if (!j.is_integer()) gauge = -1;
  return {acc, gauge};
}

template Gauged<Exact> s_norm(HalfInt, HalfInt, HalfInt, HalfInt, const Exact&);
template Gauged<Complex> s_norm(HalfInt, HalfInt, HalfInt, HalfInt, const Complex&);

template <class S>
S s_norm_3f2(HalfInt j, HalfInt m1, HalfInt m2, const S& z) {
  require_integer_j(j, "s_norm_3f2");
  HalfInt d = m1 - m2;
  if (d.twice % 4 != 0) return from_q<S>(0);
  long jj = j.as_integer(), h = d.as_integer() / 2;
  Exact pre = Exact(sign_power((m1 + m2).as_integer() / 2)) * Exact(factorial(2 * jj)) * Exact::pi_power(1) /
              (c_factor(j, m1) * c_factor(j, m2) * gamma_half(HalfInt::from_twice(1 - j.twice - d.as_integer())));
  S half = from_q<S>(Rational(1, 2));
  S f = hyp_pfq_terminating<S>({z - from_q<S>(jj + 1), from_half<S>(-j - m1), from_half<S>(m2 - j)},
                               {from_q<S>(-2 * jj), from_q<S>(Rational(-2 * jj - 2 * h + 1, 2))}, from_q<S>(1));
  return ScalarTraits<S>::from_exact(pre) * pochhammer(z - half, -h) / pochhammer(z, jj) * f;
}

Exact s_norm_closed(HalfInt j, HalfInt m1, HalfInt m2, const Rational& z) {
  try {
    return s_norm_3f2<Exact>(j, m1, m2, Exact(z));
  } catch (const PoleError&) {
    return limit_at_zero([&](const LSeries1<Exact>& d) { return s_norm_3f2<LSeries1<Exact>>(j, m1, m2, LSeries1<Exact>(Exact(z)) + d); });
  }
}

Exact s_entry_3f2(HalfInt j, HalfInt n, HalfInt m1, HalfInt m4, const Rational& z) {
  (void)n;
  return s00(z) * s_norm_closed(j, m1, m4, z);
}

template <class S>
LSeries1<S> hg_series(HGForm form, HalfInt j, HalfInt m1, HalfInt m2, const S& z, long order) {
  require_integer_j(j, "hg_series");
  if (!(m1 + m2).is_integer() || (m1 + m2).as_integer() % 2 != 0)
    throw DomainError("hg_series: m1+m2 must be even");
  long jj = j.as_integer(), s = (m1 + m2).as_integer(), h = (m1 - m2).as_integer() / 2;
  bool is_h = form == HGForm::H;
  long fac = is_h ? (j + m1).as_integer() : (j - m2).as_integer();
  Exact pre = Exact(mpz_class(factorial(2 * jj) * factorial(fac))) / (c_factor(j, m1) * c_factor(j, m2) * Exact::pi_power(1)) *
              gamma_half(HalfInt::from_twice(is_h ? 1 - s : 1 + s)) * Exact(sign_power(fac));
  S half = from_q<S>(Rational(1, 2));
  S coef = ScalarTraits<S>::from_exact(pre) * pochhammer(z - half, -h) / pochhammer(z, jj);
  S expo = from_q<S>(Rational(is_h ? -1 + s : -1 - s, 2));
  HalfInt a = is_h ? m2 - j : -j - m1;
  LSeries1<S> f = binom_series<S>(expo, -1, order) *
                  hyp2f1_series<S>(from_half<S>(a), z - from_q<S>(jj + 1), from_q<S>(-2 * jj), from_q<S>(1), order);
  return (LSeries1<S>(coef) * f).shifted(-fac);
}

Exact hg_constant_term(HGForm form, HalfInt j, HalfInt m1, HalfInt m2, const Rational& z) {
  long order = 2 * j.as_integer() + 2;
  try {
    return constant_term_1(hg_series<Exact>(form, j, m1, m2, Exact(z), order));
  } catch (const PoleError&) {
    return limit_at_zero([&](const LSeries1<Exact>& d) {
      return constant_term_1(hg_series<LSeries1<Exact>>(form, j, m1, m2, LSeries1<Exact>(Exact(z)) + d, order));
    });
  }
}

// ---------------------------------------------------------------------------
// Operators

template <class S>
BlockMatrix<S> simple_operator(OperatorKind kind, HalfInt j, HalfInt n, const Character<S>& chi) {
  S one = from_q<S>(1), half = from_q<S>(Rational(1, 2));
  BlockMatrix<S> b;
  b.j = j;
  b.n = n;
  std::vector<HalfInt> m12 = m_set(j, n, chi.d1, chi.d2), m21 = m_set(j, n, chi.d2, chi.d1);
  S z;
  const char* zdef = "";
  switch (kind) {
    case OperatorKind::A1: z = (chi.l1 - chi.l2 + one) * half; zdef = "(l1-l2+1)/2"; b.rows = m21; b.cols = m12; break;
    case OperatorKind::A2: z = (chi.l1 + one) * half; zdef = "(l1+1)/2"; b.rows = b.cols = m21; break;
    case OperatorKind::A3: z = (chi.l1 + chi.l2 + one) * half; zdef = "(l1+l2+1)/2"; b.rows = m12; b.cols = m21; break;
    case OperatorKind::A4: z = (chi.l2 + one) * half; zdef = "(l2+1)/2"; b.rows = b.cols = m12; break;
    default: throw std::logic_error("simple_operator: " + name(kind) + " is not a simple stage");
  }
  auto nr = static_cast<Eigen::Index>(b.rows.size()), nc = static_cast<Eigen::Index>(b.cols.size());
  b.entries = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>::Constant(nr, nc, from_q<S>(0));
  bool diagonal = kind == OperatorKind::A2 || kind == OperatorKind::A4;
  int gauge = 0;
  try {
    for (Eigen::Index r = 0; r < nr; ++r)
      for (Eigen::Index c = 0; c < nc; ++c) {
        if (diagonal && r != c) continue;
        Gauged<S> e = diagonal ? t_norm(n, b.rows[r], z) : s_norm(j, n, b.rows[r], b.cols[c], z);
        b.entries(r, c) = e.value;
        gauge = e.gauge;
      }
  } catch (const PoleError& e) {
    throw PoleError(name(kind) + " on the hyperplane z = " + zdef + " = " + scalar_str(z) + " at (l1,l2) = (" + scalar_str(chi.l1) + "," +
                    scalar_str(chi.l2) + "), block (j,n) = (" + j.str() + "," + n.str() + "): " + e.what());
  }
  merge_gauge(b.gauge, z, gauge);
  return b;
}

template <class S>
BlockMatrix<S> long_operator_product(HalfInt j, HalfInt n, const Character<S>& chi) {
  BlockMatrix<S> a1 = simple_operator(OperatorKind::A1, j, n, chi);
  BlockMatrix<S> a2 = simple_operator(OperatorKind::A2, j, n, chi);
  BlockMatrix<S> a3 = simple_operator(OperatorKind::A3, j, n, chi);
  BlockMatrix<S> a4 = simple_operator(OperatorKind::A4, j, n, chi);
  return a4 * (a3 * (a2 * a1));
}

template BlockMatrix<Exact> simple_operator(OperatorKind, HalfInt, HalfInt, const Character<Exact>&);
template BlockMatrix<Complex> simple_operator(OperatorKind, HalfInt, HalfInt, const Character<Complex>&);
template BlockMatrix<Exact> long_operator_product(HalfInt, HalfInt, const Character<Exact>&);
template BlockMatrix<Complex> long_operator_product(HalfInt, HalfInt, const Character<Complex>&);

int epsilon(HalfInt j, HalfInt n, int d1) {
  HalfInt d = j - n;
  if (!d.is_integer()) throw DomainError("epsilon: j-n must be an integer");
  return ((d.as_integer() - d1) % 2 == 0) ? 0 : 1;
}

namespace {

template <class S>
Gauged<S> genfun_entry(long j, long n, long m1, long m2, int eps, const S& l1, const S& l2, long order) {
  using T = ScalarTraits<S>;
  S one = from_q<S>(1), half = from_q<S>(Rational(1, 2));
  S z2 = (l1 + one) * half, z4 = (l2 + one) * half;
  Gauged<S> p1 = q_ratio(z2, HalfInt::from_twice(j + n - eps));
  Gauged<S> p2 = q_ratio(z4, HalfInt::from_twice(m2 - n));
  Exact konst = Exact(sign_power(n)) * Exact(mpz_class(factorial(2 * j) * factorial(2 * j))) /
                (c_factor(HalfInt(j), HalfInt(m1)) * c_factor(HalfInt(j), HalfInt(m2))) *
                gamma_half(HalfInt::from_twice(1 - eps + j - m1)) / gamma_half(HalfInt::from_twice(1 - eps + j - m2));
  S pre = T::from_exact(konst) * p1.value * p2.value / (pochhammer((l1 - l2 + one) * half, j) * pochhammer((l1 + l2 + one) * half, j)) *
          pochhammer((l1 - l2) * half, (j + m1 - eps) / 2) * pochhammer((l1 + l2) * half, (-j - m2 + eps) / 2);

  LSeries1<S> f1 = hyp2f1_series<S>(from_q<S>(m1 - j), (l1 - l2 - from_q<S>(2 * j + 1)) * half, from_q<S>(-2 * j), one, order);
  LSeries1<S> f2 = hyp2f1_series<S>(from_q<S>(-j - m2), (l1 + l2 - from_q<S>(2 * j + 1)) * half, from_q<S>(-2 * j), one, order);
  std::vector<S> top{from_q<S>(Rational(-j + m2 + 1 + eps, 2)), (from_q<S>(-j - n + 1 + eps) - l1) * half,
                     (from_q<S>(-j - m2 + eps) + l1 + l2) * half};
  std::vector<S> bot{from_q<S>(Rational(-j + m1 + 1 + eps, 2)), (from_q<S>(-j - n + 1 + eps) + l1) * half,
                     (from_q<S>(-j - m1 + eps) - l1 + l2) * half + one};
  Rational e1(-1 + eps - j + m1, 2), e2(-1 - eps + j - m2, 2);

  LSeries2<S> g;
  S ck = one;
  for (long k = 0; k <= j - eps; ++k) {
    if (k > 0) {
      S num = one, den = one;  // the unit upper parameter cancels k!
      for (const S& a : top) num = num * (a + from_q<S>(k - 1));
      for (const S& b : bot) {
        S f = b + from_q<S>(k - 1);
        if (T::is_zero(f)) throw PoleError("Theorem series: lower parameter vanishes");
        den = den * f;
      }
      ck = ck * num / den;
    }
    LSeries1<S> g1 = (binom_series<S>(from_q<S>(e1 + k), -1, order) * f1).shifted(-eps - 2 * k);
    LSeries1<S> g2 = (binom_series<S>(from_q<S>(e2 - k), -1, order) * f2).shifted(eps - 2 * j + 2 * k);
    g.add(pre * ck, g1, g2);
  }
  return {constant_term_2(g), p1.gauge + p2.gauge};
}

}  // namespace

BlockMatrix<Exact> long_operator_genfun(HalfInt j, HalfInt n, const Character<Exact>& chi, long trunc_order) {
  require_integer_j(j, "long_operator_genfun");
  if (chi.d1 != chi.d2) throw DomainError("long_operator_genfun: delta must be (0,0) or (1,1)");
  long jj = j.as_integer(), nn = n.as_integer();
  int eps = epsilon(j, n, chi.d1);
  BlockMatrix<Exact> b;
  b.j = j;
  b.n = n;
  b.rows = b.cols = m_set(j, n, chi.d1, chi.d2);
  auto sz = static_cast<Eigen::Index>(b.rows.size());
  b.entries.resize(sz, sz);
  long order = trunc_order > 0 ? trunc_order : 6 * jj + 6;
  for (Eigen::Index r = 0; r < sz; ++r)
    for (Eigen::Index c = 0; c < sz; ++c) {
      long m1 = b.rows[r].as_integer(), m2 = b.cols[c].as_integer();
      for (int attempt = 0;; ++attempt) {
        long ord = order + 2 * attempt;
        try {
          try {
            b.entries(r, c) = genfun_entry<Exact>(jj, nn, m1, m2, eps, chi.l1, chi.l2, ord).value;
          } catch (const PoleError&) {
            b.entries(r, c) = limit_at_zero([&](const LSeries1<Exact>& d) {
              using L = LSeries1<Exact>;
              return genfun_entry<L>(jj, nn, m1, m2, eps, L(chi.l1) + d, L(chi.l2), ord).value;
            });
          }
          break;
        } catch (const TruncationError&) {
          if (attempt == 3) throw;
        }
      }
    }
  // Half-odd Pochhammer pairs at (l1+1)/2 and (l2+1)/2 occur exactly for delta = (1,1).
  Exact one(1), half(Rational(1, 2));
  merge_gauge(b.gauge, (chi.l1 + one) * half, -chi.d1);
  merge_gauge(b.gauge, (chi.l2 + one) * half, -chi.d1);
  return b;
}

BlockComparison compare_up_to_constant(const BlockMatrix<Exact>& a, const BlockMatrix<Exact>& b) {
  BlockComparison out;
  if (a.rows != b.rows || a.cols != b.cols) {
    out.detail = "index sets differ";
    return out;
  }
  if (!same_gauge(a.gauge, b.gauge)) {
    out.detail = "gauge factors differ";
    return out;
  }
  bool have = false;
  for (Eigen::Index r = 0; r < a.entries.rows(); ++r)
    for (Eigen::Index c = 0; c < a.entries.cols(); ++c) {
      const Exact &x = a.entries(r, c), &y = b.entries(r, c);
      if (x.is_zero()) {
        if (!y.is_zero()) {
          out.detail = "entry (" + a.rows[r].str() + "," + a.cols[c].str() + ") vanishes on one side only";
          return out;
        }
        continue;
      }
      if (!have) {
        out.constant = y / x;
        have = true;
      } else if (y != out.constant * x) {
        out.detail = "ratio at (" + a.rows[r].str() + "," + a.cols[c].str() + ") is " + (y / x).str() + ", expected " + out.constant.str();
        return out;
      }
    }
  if (!have) out.constant = Exact(1);
  out.proportional = true;
  return out;
}

bool inversion_check(HalfInt j, HalfInt n, int d1, int d2, const Rational& z) {
  require_integer_j(j, "inversion_check");
  std::vector<HalfInt> outer = m_set(j, n, d1, d2), inner = m_set(j, n, d2, d1);
  Exact za(z), zb(Rational(1) - z);
  for (HalfInt m1 : outer)
    for (HalfInt m3 : outer) {
      Exact acc(0);
      for (HalfInt m2 : inner) acc += s_norm(j, n, m1, m2, za).value * s_norm(j, n, m2, m3, zb).value;
      if (acc != Exact(m1 == m3 ? 1 : 0)) return false;
    }
  return true;
}

double mellin_integral(double z, HalfInt m) {
  double mm = m.to_double();
  auto f = [&](double u) { return 2.0 * std::pow(std::sin(u), 2.0 * z - 2.0) * std::cos(2.0 * mm * (M_PI / 2 - u)); };
  double err = 0.0;
  double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, M_PI / 2, 20, 1e-13, &err);
  if (!std::isfinite(v) || err > 1e-9 * std::max(1.0, std::fabs(v)))
    throw QuadratureError("mellin_integral: quadrature did not converge (error estimate " + std::to_string(err) + ")");
  return v;
}

bool mellin_numeric_check(double z, HalfInt m, double tol, double* rel_err) {
  if (!(z > 0.5)) throw DomainError("mellin_numeric_check: z must exceed 1/2");
  double q = q_factor(Complex(z, 0.0), m).real();
  double v = mellin_integral(z, m);
  // Q vanishes when Gamma(z-m) has a pole; the error is then absolute.
  double err = std::fabs(v - q) / (q == 0.0 ? 1.0 : std::fabs(q));
  if (rel_err) *rel_err = err;
  return err <= tol;
}

}  // namespace sp4
