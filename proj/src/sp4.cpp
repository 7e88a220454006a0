#include "sp4/sp4.hpp"

#include <cmath>
#include <optional>

#include "sp4/wigner.hpp"

namespace sp4 {

namespace {

GMat<Exact> zero() { return GMat<Exact>::Constant(Exact(0)); }
GMat<Exact> identity() {
  GMat<Exact> m = zero();
  for (int k = 0; k < 4; ++k) m(k, k) = Exact(1);
  return m;
}
GMat<Exact> E(int r, int c) { return elementary<Exact>(r, c); }

GMat<Exact> scaled(const GMat<Exact>& m, const Exact& s) {
  GMat<Exact> out = m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = out(r, c) * s;
  return out;
}

Exact cos_eighth(long k) {
  Exact w = eighth_root(k);
  return (w + w.conj()) * Exact(Rational(1, 2));
}
Exact sin_eighth(long k) {
  Exact w = eighth_root(k);
  return (w - w.conj()) * Exact(Rational(0), Rational(-1, 2));
}

std::optional<std::pair<Root, Exact>> identify_root_vector(const GMat<Exact>& y) {
  for (Root r : kAllRoots) {
    GMat<Exact> x = chevalley(r);
    for (int k = 0; k < 16; ++k) {
      if (x(k / 4, k % 4).is_zero()) continue;
      Exact c = y(k / 4, k % 4) / x(k / 4, k % 4);
      if (!c.is_zero() && y == scaled(x, c)) return std::make_pair(r, c);
      break;
    }
  }
  return std::nullopt;
}

Rational rational_sqrt(const Rational& q) {
  mpz_class n = q.get_num(), d = q.get_den();
  if (q < 0 || !mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    throw DomainError("1+t^2 is not a rational square");
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

Root simple_root(int simple) {
  if (simple != 0 && simple != 1) throw DomainError("simple root index must be 0 or 1");
  return simple == 0 ? Root::a1 : Root::a2;
}

}  // namespace

Root negate(Root r) { return static_cast<Root>((static_cast<int>(r) + 4) % 8); }
CRoot negate(CRoot r) { return static_cast<CRoot>((static_cast<int>(r) + 4) % 8); }
bool is_positive(Root r) { return static_cast<int>(r) < 4; }

std::string name(Root r) {
  static const char* names[] = {"a1", "a2", "a1+a2", "2a1+a2", "-a1", "-a2", "-(a1+a2)", "-(2a1+a2)"};
  return names[static_cast<int>(r)];
}

std::string name(CRoot r) {
  static const char* names[] = {"b1", "b2", "b1+b2", "2b1+b2", "-b1", "-b2", "-(b1+b2)", "-(2b1+b2)"};
  return names[static_cast<int>(r)];
}

std::pair<int, int> root_weights(Root r) {
  static const std::pair<int, int> w[] = {{1, -1}, {0, 2}, {1, 1}, {2, 0}};
  auto p = w[static_cast<int>(r) % 4];
  return is_positive(r) ? p : std::make_pair(-p.first, -p.second);
}

const GMat<Exact>& symplectic_form() {
  static const GMat<Exact> j = [] {
    GMat<Exact> m = zero();
    m(0, 2) = Exact(1);
    m(1, 3) = Exact(1);
    m(2, 0) = Exact(-1);
    m(3, 1) = Exact(-1);
    return m;
  }();
  return j;
}

GMat<Exact> chevalley(Root r) {
  GMat<Exact> x;
  switch (static_cast<Root>(static_cast<int>(r) % 4)) {
    case Root::a1: x = E(1, 2) - E(4, 3); break;
    case Root::a2: x = E(2, 4); break;
    case Root::a1a2: x = E(2, 3) + E(1, 4); break;
    default: x = E(1, 3); break;
  }
  return is_positive(r) ? x : GMat<Exact>(x.transpose());
}

GMat<Exact> cartan(int i) {
  if (i == 1) return E(1, 1) - E(3, 3);
  if (i == 2) return E(2, 2) - E(4, 4);
  throw DomainError("cartan index must be 1 or 2");
}

std::array<GMat<Exact>, 4> u2_generators() {
  Exact h(Rational(1, 2));
  std::array<GMat<Exact>, 4> u;
  u[0] = scaled(E(1, 3) + E(2, 4) - E(3, 1) - E(4, 2), h);
  u[1] = scaled(E(1, 4) + E(2, 3) - E(3, 2) - E(4, 1), h);
  u[2] = scaled(E(1, 2) - E(2, 1) + E(3, 4) - E(4, 3), h);
  u[3] = scaled(E(1, 3) - E(2, 4) - E(3, 1) + E(4, 2), h);
  return u;
}

bool in_lie_algebra(const GMat<Exact>& x) {
  const GMat<Exact>& j = symplectic_form();
  GMat<Exact> r = GMat<Exact>(x.transpose()) * j + j * x;
  return r == zero();
}

bool in_group(const GMat<Exact>& g) {
  return GMat<Exact>(g.transpose()) * symplectic_form() * g == symplectic_form();
}

GMat<Exact> group_inverse(const GMat<Exact>& g) {
  const GMat<Exact>& j = symplectic_form();
  return scaled(j * GMat<Exact>(g.transpose()) * j, Exact(-1));
}

GMat<Exact> conj(const GMat<Exact>& x) {
  GMat<Exact> out = x;
  for (int k = 0; k < 16; ++k) out(k / 4, k % 4) = x(k / 4, k % 4).conj();
  return out;
}

GMat<Exact> cartan_involution(const GMat<Exact>& x) { return scaled(GMat<Exact>(x.transpose()), Exact(-1)); }

GMat<Exact> exp_rotation(const GMat<Exact>& y, long eighth_turns) {
  GMat<Exact> y2 = y * y;
  if (y2 * y != scaled(y, Exact(-1))) throw DomainError("exp_rotation needs Y^3 = -Y");
  return identity() + scaled(y, sin_eighth(eighth_turns)) + scaled(y2, Exact(1) - cos_eighth(eighth_turns));
}

GMat<Exact> exp_nilpotent(const GMat<Exact>& x) {
  GMat<Exact> acc = identity(), pw = identity();
  for (int k = 1; k <= 4; ++k) {
    pw = scaled(pw * x, Exact(Rational(1, k)));
    acc += pw;
  }
  if (pw * x != zero()) throw DomainError("exp_nilpotent of a non-nilpotent matrix");
  return acc;
}

Eigen::Matrix4d exp_rotation(const Eigen::Matrix4d& y, double angle) {
  Eigen::Matrix4d y2 = y * y;
  if ((y2 * y + y).norm() > 1e-12 * (1 + y.norm())) throw DomainError("exp_rotation needs Y^3 = -Y");
  return Eigen::Matrix4d::Identity() + std::sin(angle) * y + (1 - std::cos(angle)) * y2;
}

Eigen::Matrix4d exp_nilpotent(const Eigen::Matrix4d& x) {
  Eigen::Matrix4d acc = Eigen::Matrix4d::Identity(), pw = Eigen::Matrix4d::Identity();
  for (int k = 1; k <= 4; ++k) {
    pw = pw * x / k;
    acc += pw;
  }
  return acc;
}

Eigen::Matrix4d to_double(const GMat<Exact>& x) {
  Eigen::Matrix4d m;
  for (int k = 0; k < 16; ++k) {
    Complex v = x(k / 4, k % 4).to_complex();
    if (v.imag() != 0) throw DomainError("to_double of a complex matrix");
    m(k / 4, k % 4) = v.real();
  }
  return m;
}

GMat<Exact> weyl_reflection(int simple) {
  Root a = simple_root(simple);
  return exp_rotation(GMat<Exact>(chevalley(a) - chevalley(negate(a))), 2);
}

GMat<Exact> gamma_element(Root r) {
  Root a = is_positive(r) ? r : negate(r);
  return exp_rotation(GMat<Exact>(chevalley(a) - chevalley(negate(a))), 4);
}

IwasawaFactors<Exact> iwasawa_sl2(int simple, const Rational& t) {
  Root a = simple_root(simple);
  Rational r2 = 1 + t * t;
  Rational r = rational_sqrt(r2);
  GMat<Exact> y = chevalley(a) - chevalley(negate(a));
  IwasawaFactors<Exact> f;
  f.kappa = identity() + scaled(y, Exact(-t / r)) + scaled(y * y, Exact(1 - 1 / r));
  f.h = identity();
  Exact er(r), einv(1 / r);
  if (simple == 0) {
    f.h(0, 0) = er;
    f.h(1, 1) = einv;
    f.h(2, 2) = einv;
    f.h(3, 3) = er;
  } else {
    f.h(1, 1) = er;
    f.h(3, 3) = einv;
  }
  f.chi = identity() + scaled(chevalley(a), Exact(t / r2));
  return f;
}

IwasawaFactors<double> iwasawa_sl2(int simple, double t) {
  Root a = simple_root(simple);
  double r = std::sqrt(1 + t * t);
  Eigen::Matrix4d x = to_double(chevalley(a)), y = x - to_double(chevalley(negate(a)));
  IwasawaFactors<double> f;
  f.kappa = exp_rotation(y, std::atan(-t));
  f.h = Eigen::Matrix4d::Identity();
  if (simple == 0) {
    f.h.diagonal() << r, 1 / r, 1 / r, r;
  } else {
    f.h.diagonal() << 1, r, 1, 1 / r;
  }
  f.chi = exp_nilpotent(Eigen::Matrix4d(t / (1 + t * t) * x));
  return f;
}

bool iwasawa_normal_check(int simple) {
  Root a = simple_root(simple);
  GMat<Exact> w = weyl_reflection(simple), winv = group_inverse(w);
  for (Root b : kAllRoots) {
    if (!is_positive(b)) continue;
    auto id = identify_root_vector(winv * chevalley(b) * w);
    if (!id) return false;
    if (b == a ? id->first != negate(a) : !is_positive(id->first)) return false;
  }
  return true;
}

GMat<Exact> v_vector(CRoot b) {
  Exact h(Rational(1, 2)), hi(Rational(0), Rational(1, 2));
  int sign = static_cast<int>(b) < 4 ? 1 : -1;
  Exact shi = sign > 0 ? hi : -hi;
  switch (static_cast<CRoot>(static_cast<int>(b) % 4)) {
    case CRoot::b1b1b2:
      return scaled(cartan(1), h) + scaled(GMat<Exact>(chevalley(Root::a1a1a2) + chevalley(Root::neg_a1a1a2)), shi);
    case CRoot::b2:
      return scaled(cartan(2), h) + scaled(GMat<Exact>(chevalley(Root::a2) + chevalley(Root::neg_a2)), shi);
    case CRoot::b1b2:
      return scaled(GMat<Exact>(chevalley(Root::a1a2) + chevalley(Root::neg_a1a2)), h) -
             scaled(GMat<Exact>(chevalley(Root::a1) + chevalley(Root::neg_a1)), shi);
    default:
      throw DomainError("v_vector: " + name(b) + " is a compact root");
  }
}

GMat<Exact> cayley_element(CRoot b) {
  GMat<Exact> v = v_vector(b);
  return exp_rotation(GMat<Exact>(conj(v) - v), 1);
}

bool cayley_check() {
  GMat<Exact> c2 = cayley_element(CRoot::b2), c12 = cayley_element(CRoot::b1b1b2);
  if (c2 * c12 != c12 * c2) return false;
  GMat<Exact> c = c2 * c12, cinv = group_inverse(c);
  const std::pair<CRoot, Root> images[] = {{CRoot::b2, Root::a2}, {CRoot::b1b1b2, Root::a1a1a2}, {CRoot::b1b2, Root::a1a2}};
  for (auto [b, a] : images) {
    // negative roots go to the conjugate multiple of the negative root vector
    Exact factor = b == CRoot::b1b2 ? Exact(1) : Exact::i();
    if (c * v_vector(b) * cinv != scaled(chevalley(a), factor)) return false;
    if (c * v_vector(negate(b)) * cinv != scaled(chevalley(negate(a)), factor.conj())) return false;
  }
  return true;
}

const std::vector<WordTerm>& omega2_words() {
  static const std::vector<WordTerm> words = [] {
    Rational s(1, 12);
    std::vector<WordTerm> w;
    w.push_back({s, {cartan(1), cartan(1)}});
    w.push_back({s, {cartan(2), cartan(2)}});
    w.push_back({4 * s, {cartan(1)}});
    w.push_back({2 * s, {cartan(2)}});
    w.push_back({2 * s, {chevalley(Root::neg_a1), chevalley(Root::a1)}});
    w.push_back({4 * s, {chevalley(Root::neg_a2), chevalley(Root::a2)}});
    w.push_back({2 * s, {chevalley(Root::neg_a1a2), chevalley(Root::a1a2)}});
    w.push_back({4 * s, {chevalley(Root::neg_a1a1a2), chevalley(Root::a1a1a2)}});
    return w;
  }();
  return words;
}

}  // namespace sp4
