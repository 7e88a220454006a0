#include "sp4/gkmod.hpp"

#include <stdexcept>

namespace sp4 {

namespace {

GMat<Exact> scaled(const GMat<Exact>& m, const Exact& s) {
  GMat<Exact> out = m;
  for (int k = 0; k < 16; ++k) out(k / 4, k % 4) = m(k / 4, k % 4) * s;
  return out;
}

using Coords = std::array<Exact, 10>;

// Coefficients of X along H_1, H_2 and the eight root vectors.
Coords chevalley_coords(const GMat<Exact>& x) {
  Coords c;
  c[0] = x(0, 0);
  c[1] = x(1, 1);
  GMat<Exact> rebuilt = scaled(cartan(1), c[0]) + scaled(cartan(2), c[1]);
  for (int k = 0; k < 8; ++k) {
    GMat<Exact> e = chevalley(kAllRoots[k]);
    for (int pos = 0; pos < 16; ++pos) {
      if (e(pos / 4, pos % 4).is_zero()) continue;
      c[2 + k] = x(pos / 4, pos % 4) / e(pos / 4, pos % 4);
      break;
    }
    rebuilt += scaled(e, c[2 + k]);
  }
  if (rebuilt != x) throw DecompositionError("element is not in sp(4,C)");
  return c;
}

std::array<GMat<Exact>, 10> basis_elements() {
  std::array<GMat<Exact>, 10> b;
  auto u = u2_generators();
  for (int k = 0; k < 4; ++k) b[k] = u[k];
  for (int k = 0; k < 6; ++k) b[4 + k] = u_vector(kNcRoots[k]);
  return b;
}

// Inverse of the matrix whose columns are the Chevalley coordinates of the basis.
const std::array<Coords, 10>& change_of_basis() {
  static const std::array<Coords, 10> inv = [] {
    auto b = basis_elements();
    std::array<std::array<Exact, 20>, 10> a;
    for (int col = 0; col < 10; ++col) {
      Coords c = chevalley_coords(b[col]);
      for (int row = 0; row < 10; ++row) a[row][col] = c[row];
    }
    for (int row = 0; row < 10; ++row)
      for (int k = 0; k < 10; ++k) a[row][10 + k] = Exact(row == k ? 1 : 0);
    for (int col = 0; col < 10; ++col) {
      int piv = col;
      while (piv < 10 && a[piv][col].is_zero()) ++piv;
      if (piv == 10) throw std::logic_error("noncompact basis is degenerate");
      std::swap(a[piv], a[col]);
      Exact inv_p = a[col][col].inverse();
      for (auto& e : a[col]) e *= inv_p;
      for (int row = 0; row < 10; ++row) {
        if (row == col || a[row][col].is_zero()) continue;
        Exact f = a[row][col];
        for (int k = 0; k < 20; ++k) a[row][k] -= f * a[col][k];
      }
    }
    std::array<Coords, 10> out;
    for (int row = 0; row < 10; ++row)
      for (int k = 0; k < 10; ++k) out[row][k] = a[row][10 + k];
    return out;
  }();
  return inv;
}

template <class S>
LinComb<S> convert(const LinComb<Exact>& f) {
  LinComb<S> out;
  for (const auto& [w, c] : f.terms()) out.add(w, ScalarTraits<S>::from_exact(c));
  return out;
}

bool in_range(HalfInt j, HalfInt m) { return m <= j && m >= -j; }

}  // namespace

NcLabel nc_label(NcRoot b) {
  static const NcLabel l[] = {{1, 1}, {0, 1}, {-1, 1}, {-1, -1}, {0, -1}, {1, -1}};
  return l[static_cast<int>(b)];
}

NcRoot nc_root(int m_beta, int n_beta) {
  for (NcRoot b : kNcRoots) {
    NcLabel l = nc_label(b);
    if (l.m_beta == m_beta && l.n_beta == n_beta) return b;
  }
  throw DomainError("no noncompact root with labels (" + std::to_string(m_beta) + "," + std::to_string(n_beta) + ")");
}

std::string name(NcRoot b) {
  static const char* names[] = {"2b1+b2", "b1+b2", "b2", "-(2b1+b2)", "-(b1+b2)", "-b2"};
  return names[static_cast<int>(b)];
}

GMat<Exact> u_vector(NcRoot b) {
  auto u = u2_generators();
  Exact i = Exact::i(), r = Exact::sqrt(Rational(1, 2));
  switch (b) {
    case NcRoot::p2b1b2: return scaled(GMat<Exact>(u[0] + u[3] + scaled(cartan(1), i) - scaled(chevalley(Root::a1a1a2), 2)), r);
    case NcRoot::m2b1b2: return scaled(GMat<Exact>(-u[0] - u[3] + scaled(cartan(1), i) + scaled(chevalley(Root::a1a1a2), 2)), r);
    case NcRoot::pb2: return scaled(GMat<Exact>(u[0] - u[3] + scaled(cartan(2), i) - scaled(chevalley(Root::a2), 2)), r);
    case NcRoot::mb2: return scaled(GMat<Exact>(-u[0] + u[3] + scaled(cartan(2), i) + scaled(chevalley(Root::a2), 2)), r);
    case NcRoot::pb1b2: return GMat<Exact>(-u[1] + scaled(u[2], i) + chevalley(Root::a1a2) - scaled(chevalley(Root::a1), i));
    default: return GMat<Exact>(-u[1] - scaled(u[2], i) + chevalley(Root::a1a2) + scaled(chevalley(Root::a1), i));
  }
}

std::vector<HalfInt> m_set(HalfInt j, HalfInt n, int d1, int d2) {
  std::vector<HalfInt> out;
  if (!(j - n).is_integer()) return out;
  for (HalfInt m = -j; m <= j; m += HalfInt(1)) {
    long a = (n - m).as_integer(), b = (n + m).as_integer();
    if (((a % 2) + 2) % 2 == d1 && ((b % 2) + 2) % 2 == d2) out.push_back(m);
  }
  return out;
}

bool admissible(const BasisIndex& v, int d1, int d2) {
  for (HalfInt m : m_set(v.j, v.n, d1, d2))
    if (m == v.m2) return true;
  return false;
}

std::vector<KType> ktypes(int d1, int d2, HalfInt jmax, HalfInt nmax) {
  if ((d1 != 0 && d1 != 1) || (d2 != 0 && d2 != 1)) throw DomainError("delta entries must be 0 or 1");
  long parity = (d1 + d2) % 2;
  std::vector<KType> out;
  for (HalfInt j = HalfInt::from_twice(parity); j <= jmax; j += HalfInt(1))
    for (HalfInt n = HalfInt::from_twice(-nmax.twice); n <= nmax; n += kHalf) {
      if (((n.twice % 2) + 2) % 2 != parity) continue;
      auto ms = m_set(j, n, d1, d2);
      if (!ms.empty()) out.push_back({j, n, ms});
    }
  return out;
}

std::vector<BasisIndex> basis(int d1, int d2, HalfInt jmax, HalfInt nmax) {
  std::vector<BasisIndex> out;
  for (const KType& k : ktypes(d1, d2, jmax, nmax))
    for (HalfInt m1 = -k.j; m1 <= k.j; m1 += HalfInt(1))
      for (HalfInt m2 : k.ms) out.emplace_back(k.j, k.n, m1, m2);
  return out;
}

Decomposition decompose(const GMat<Exact>& x) {
  Coords c = chevalley_coords(x);
  const auto& inv = change_of_basis();
  Decomposition d;
  for (int row = 0; row < 10; ++row) {
    Exact acc(0);
    for (int k = 0; k < 10; ++k)
      if (!c[k].is_zero() && !inv[row][k].is_zero()) acc += inv[row][k] * c[k];
    if (row < 4)
      d.u[row] = acc;
    else
      d.p[row - 4] = acc;
  }
  return d;
}

template <class S>
GKModule<S>::GKModule(Character<S> chi, TableVariant variant) : chi_(std::move(chi)), variant_(variant) {
  if ((chi_.d1 != 0 && chi_.d1 != 1) || (chi_.d2 != 0 && chi_.d2 != 1)) throw DomainError("delta entries must be 0 or 1");
}

template <class S>
LinComb<S> GKModule<S>::dr_p(NcRoot b, const BasisIndex& v) const {
  using T = ScalarTraits<S>;
  const S i = T::i();
  const S r = T::sqrt_rational(Rational(1, 2));
  const S n = T::from_rational(v.n.to_rational()), m2 = T::from_rational(v.m2.to_rational());
  const S one = T::from_rational(1), two = T::from_rational(2);
  Rational j = v.j.to_rational(), m = v.m2.to_rational();
  LinComb<S> out;
  auto ladder = [&](int step) {
    HalfInt target = v.m2 + HalfInt(step);
    if (!in_range(v.j, target)) return;
    Rational rad = step > 0 ? Rational((j - m) * (j + m + 1)) : Rational((j + m) * (j - m + 1));
    out.add(BasisIndex(v.j, v.n, v.m1, target), -i * T::sqrt_rational(rad));
  };
  bool printed = variant_ == TableVariant::printed;
  switch (b) {
    case NcRoot::p2b1b2: out.add(v, i * (-n - m2 - (chi_.l1 + two)) * r); break;
    case NcRoot::m2b1b2: out.add(v, i * (n + m2 - (chi_.l1 + two)) * r); break;
    case NcRoot::pb2: out.add(v, i * (-n + m2 - (chi_.l2 + one)) * r); break;
    case NcRoot::mb2: out.add(v, i * (n - m2 - (chi_.l2 + one)) * r); break;
    case NcRoot::pb1b2: ladder(printed ? -1 : 1); break;
    case NcRoot::mb1b2: ladder(printed ? 1 : -1); break;
  }
  return out;
}

template <class S>
LinComb<S> GKModule<S>::dl_p(NcRoot b, const BasisIndex& v) const {
  NcLabel l = nc_label(b);
  LinComb<S> out;
  for (int nu = -1; nu <= 1; ++nu) {
    BasisIndex factor(HalfInt(1), HalfInt(l.n_beta), HalfInt(l.m_beta), HalfInt(nu));
    LinComb<S> right = dr_p(nc_root(nu, l.n_beta), v);
    for (const auto& [w, c] : right.terms()) {
      LinComb<Exact> expanded = product_expand(w, factor);
      for (const auto& [target, cg] : expanded.terms())
        out.add(target, c * ScalarTraits<S>::from_exact(cg * Exact(kPActionSign)));
    }
  }
  return out;
}

template <class S>
LinComb<S> GKModule<S>::dl_p_table(NcRoot b, const BasisIndex& v) const {
  using T = ScalarTraits<S>;
  NcLabel l = nc_label(b);
  const bool plus = l.n_beta > 0;
  const Rational j = v.j.to_rational(), m2 = v.m2.to_rational(), n = v.n.to_rational();
  const S L1 = chi_.l1 + T::from_rational(2), L2 = chi_.l2 + T::from_rational(1);
  auto q = [&](int j0, int eps) -> Rational {
    switch (j0 * 3 + eps) {
      case -4: return (j + m2 - 1) * (j + m2);
      case -2: return (j - m2 - 1) * (j - m2);
      case -1: return (j + m2) * (j - m2 + 1);
      case 1: return (j - m2) * (j + m2 + 1);
      case 2: return (j - m2 + 1) * (j - m2 + 2);
      default: return (j + m2 + 1) * (j + m2 + 2);
    }
  };
  auto kappa = [&](int j0, int eps) -> S {
    auto R = [](const Rational& x) { return T::from_rational(x); };
    if (plus) {
      switch (j0 * 3 + eps) {
        case -4: return R(2 + 2 * j - m2 - n) - L2;
        case -2: return R(-n - m2) - L1;
        case -1: return R(2 - n - m2) - L2;
        case 1: return R(n + m2) + L1;
        case 2: return R(-2 * j - m2 - n) - L2;
        default: return R(-n - m2) - L1;
      }
    }
    switch (j0 * 3 + eps) {
      case -4: return R(n + m2) - L1;
      case -2: return R(2 + 2 * j + m2 + n) - L2;
      case -1: return R(n + m2) - L1;
      case 1: return R(-2 - n - m2) + L2;
      case 2: return R(n + m2) - L1;
      default: return R(-2 * j + m2 + n) - L2;
    }
  };
  LinComb<S> out;
  for (int j0 = -1; j0 <= 1; ++j0) {
    HalfInt J = v.j + HalfInt(j0), M1 = v.m1 + HalfInt(l.m_beta);
    if (J.twice < 0 || (v.j.twice == 0 && j0 <= 0) || !in_range(J, M1)) continue;
    Rational cden = j0 == -1 ? Rational(j * (2 * j + 1)) : j0 == 0 ? Rational(j * (j + 1)) : Rational((j + 1) * (2 * j + 1));
    Exact c = clebsch_gordan_j1(v.j, v.m1, l.m_beta, j0) * Exact::sqrt(1 / cden);
    for (int eps : {-1, 1}) {
      HalfInt M2 = v.m2 + HalfInt(eps);
      Rational qq = q(j0, eps);
      if (!in_range(J, M2)) {
        if (qq != 0) throw std::logic_error("coefficient table gives a nonzero weight outside the K-type");
        continue;
      }
      Exact coef = Exact(Rational(0), Rational(kPActionSign, 2)) * c * Exact::sqrt(qq);
      out.add(BasisIndex(J, v.n + HalfInt(l.n_beta), M1, M2), T::from_exact(coef) * kappa(j0, eps));
    }
  }
  return out;
}

template <class S>
LinComb<S> GKModule<S>::dl_k(int i, const BasisIndex& v) const {
  Exact half(Rational(1, 2));
  switch (i) {
    case 0: return convert<S>(dl_gamma(CompactGen::G0, v));
    case 3: return convert<S>(dl_gamma(CompactGen::G3, v));
    case 1: return convert<S>(half * (dl_gamma(CompactGen::GPlus, v) + dl_gamma(CompactGen::GMinus, v)));
    case 2: return convert<S>(Exact(Rational(0), Rational(-1, 2)) * (dl_gamma(CompactGen::GPlus, v) - dl_gamma(CompactGen::GMinus, v)));
    default: throw DomainError("compact generator index must be 0..3");
  }
}

template <class S>
LinComb<S> GKModule<S>::dl(const Decomposition& x, const BasisIndex& v) const {
  LinComb<S> out;
  for (int k = 0; k < 4; ++k)
    if (!x.u[k].is_zero()) out.add(dl_k(k, v), ScalarTraits<S>::from_exact(x.u[k]));
  for (int k = 0; k < 6; ++k)
    if (!x.p[k].is_zero()) out.add(dl_p(kNcRoots[k], v), ScalarTraits<S>::from_exact(x.p[k]));
  return out;
}

template <class S>
LinComb<S> GKModule<S>::dl(const GMat<Exact>& x, const LinComb<S>& f) const {
  Decomposition d = decompose(x);
  LinComb<S> out;
  for (const auto& [w, c] : f.terms()) out.add(dl(d, w), c);
  return out;
}

template <class S>
LinComb<S> GKModule<S>::dl_word(const std::vector<GMat<Exact>>& word, const LinComb<S>& f) const {
  LinComb<S> cur = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = dl(*it, cur);
  return cur;
}

template <class S>
Omega2Evaluator<S>::Omega2Evaluator(const GKModule<S>& module) : module_(module) {
  std::vector<GMat<Exact>> seen;
  for (const WordTerm& t : omega2_words()) {
    Step s{t.coeff, {}};
    for (const GMat<Exact>& x : t.word) {
      std::size_t k = 0;
      while (k < seen.size() && seen[k] != x) ++k;
      if (k == seen.size()) {
        seen.push_back(x);
        elements_.push_back(decompose(x));
      }
      s.word.push_back(k);
    }
    steps_.push_back(std::move(s));
  }
  cache_.resize(elements_.size());
}

template <class S>
const LinComb<S>& Omega2Evaluator<S>::action(std::size_t element, const BasisIndex& v) {
  auto& c = cache_[element];
  auto it = c.find(v);
  if (it == c.end()) it = c.emplace(v, module_.dl(elements_[element], v)).first;
  return it->second;
}

template <class S>
LinComb<S> Omega2Evaluator<S>::apply(const BasisIndex& v) {
  LinComb<S> out;
  for (const Step& s : steps_) {
    LinComb<S> cur = LinComb<S>::unit(v);
    for (auto it = s.word.rbegin(); it != s.word.rend(); ++it) {
      LinComb<S> next;
      for (const auto& [w, c] : cur.terms()) next.add(action(*it, w), c);
      cur = std::move(next);
    }
    out.add(cur, ScalarTraits<S>::from_rational(s.coeff));
  }
  return out;
}

template class GKModule<Exact>;
template class GKModule<Complex>;
template class Omega2Evaluator<Exact>;
template class Omega2Evaluator<Complex>;

}  // namespace sp4
