#include "sp4/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <sstream>
#include <random>
#include <thread>

#include <Eigen/Dense>

#include "sp4/gkmod.hpp"
#include "sp4/intertwine.hpp"
#include "sp4/sp4.hpp"
#include "sp4/wigner.hpp"

namespace sp4 {

namespace {

class Timer {
 public:
  explicit Timer(SuiteResult& r) : r_(r), t0_(std::chrono::steady_clock::now()) {}
  ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  SuiteResult& r_;
  std::chrono::steady_clock::time_point t0_;
};

std::vector<HalfInt> spins_upto(HalfInt jmax) {
  std::vector<HalfInt> out;
  for (long t = 0; t <= jmax.twice; ++t) out.push_back(HalfInt::from_twice(t));
  return out;
}

std::string lam_str(const RationalPair& l) { return "(" + rational_str(l.first) + "," + rational_str(l.second) + ")"; }

Rational random_rational(std::mt19937_64& rng, int num_range, int den_max) {
  std::uniform_int_distribution<int> num(-num_range, num_range), den(2, den_max);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

std::uint64_t seed_from_env(std::uint64_t fallback) {
  if (const char* s = std::getenv("SP4_SEED")) return std::strtoull(s, nullptr, 10);
  return fallback;
}

SuiteResult check_mn_inverse(HalfInt jmax) {
  SuiteResult r{"M N = I"};
  Timer t(r);
  for (HalfInt j : spins_upto(jmax)) {
    auto [m, n] = mn_matrices(j);
    BlockMatrix<Exact> p = m * n;
    ++r.cases;
    for (Eigen::Index a = 0; a < p.entries.rows(); ++a)
      for (Eigen::Index b = 0; b < p.entries.cols(); ++b)
        if (p.entries(a, b) != Exact(a == b ? 1 : 0)) {
          r.fail("j=" + j.str() + " entry (" + p.rows[a].str() + "," + p.cols[b].str() + ") = " + p.entries(a, b).str());
          a = p.entries.rows() - 1;
          break;
        }
  }
  return r;
}

SuiteResult check_closed_form(long jmax, const std::vector<Rational>& zs) {
  SuiteResult r{"sum form = 3F2 form"};
  Timer t(r);
  for (long j = 0; j <= jmax; ++j)
    for (long m1 = -j; m1 <= j; ++m1)
      for (long m2 = -j; m2 <= j; ++m2) {
        if ((m1 - m2) % 2 != 0) continue;
        for (const Rational& z : zs) {
          ++r.cases;
          std::string where = "j=" + std::to_string(j) + " m=(" + std::to_string(m1) + "," + std::to_string(m2) + ") z=" + rational_str(z);
          try {
            Exact a = s_entry_sum(j, 0, m1, m2, z), b = s_entry_3f2(j, 0, m1, m2, z);
            if (a != b) r.fail(where + ": " + a.str() + " vs " + b.str());
          } catch (const std::exception& e) {
            r.fail(where + ": " + e.what());
          }
        }
      }
  return r;
}

SuiteResult check_inversion(long jmax, long nmax, const std::vector<Rational>& zs) {
  SuiteResult r{"S(z) S(1-z) = I"};
  Timer t(r);
  for (int d : {0, 1})
    for (long j = 0; j <= jmax; ++j)
      for (long n = -nmax; n <= nmax; ++n) {
        if (m_set(j, n, d, d).empty()) continue;
        for (const Rational& z : zs) {
          ++r.cases;
          if (!inversion_check(j, n, d, d, z))
            r.fail("delta=(" + std::to_string(d) + "," + std::to_string(d) + ") j=" + std::to_string(j) + " n=" + std::to_string(n) + " z=" + rational_str(z));
        }
      }
  return r;
}

SuiteResult check_theorem(long jmax, long nmax, const std::vector<RationalPair>& lambdas, const std::vector<int>& deltas) {
  SuiteResult r{"generating function = product"};
  Timer t(r);
  bool seen[2] = {false, false};
  long unit = 0;
  for (const RationalPair& lam : lambdas)
    for (int d : deltas)
      for (long j = 0; j <= jmax; ++j)
        for (long n = -nmax; n <= nmax; ++n) {
          if (m_set(j, n, d, d).empty()) continue;
          Character<Exact> chi{d, d, Exact(lam.first), Exact(lam.second)};
          std::string where = "lambda=" + lam_str(lam) + " delta=(" + std::to_string(d) + "," + std::to_string(d) + ") j=" +
                              std::to_string(j) + " n=" + std::to_string(n);
          ++r.cases;
          seen[epsilon(j, n, d)] = true;
          try {
            BlockComparison c = compare_up_to_constant(long_operator_product<Exact>(j, n, chi), long_operator_genfun(j, n, chi));
            if (!c.proportional)
              r.fail(where + ": " + c.detail);
            else if (c.constant == Exact(1))
              ++unit;
          } catch (const std::exception& e) {
            r.fail(where + ": " + e.what());
          }
        }
  if (!seen[0] || !seen[1]) r.fail("grid does not cover both parities of epsilon");
  r.note = std::to_string(unit) + "/" + std::to_string(r.cases) + " blocks with constant 1";
  return r;
}

SuiteResult check_hg(long jmax, const std::vector<Rational>& zs) {
  SuiteResult r{"[H]_0 = [G]_0 = S"};
  Timer t(r);
  for (long j = 0; j <= jmax; ++j)
    for (long m1 = -j; m1 <= j; ++m1)
      for (long m2 = -j; m2 <= j; ++m2) {
        if ((m1 - m2) % 2 != 0) continue;
        for (const Rational& z : zs) {
          ++r.cases;
          std::string where = "j=" + std::to_string(j) + " m=(" + std::to_string(m1) + "," + std::to_string(m2) + ") z=" + rational_str(z);
          try {
            Exact s = s_norm<Exact>(j, 0, m1, m2, Exact(z)).value;
            Exact h = hg_constant_term(HGForm::H, j, m1, m2, z), g = hg_constant_term(HGForm::G, j, m1, m2, z);
            if (h != s || g != s) r.fail(where + ": S=" + s.str() + " H=" + h.str() + " G=" + g.str());
          } catch (const std::exception& e) {
            r.fail(where + ": " + e.what());
          }
        }
      }
  return r;
}

SuiteResult check_parity(HalfInt jmax, const std::vector<Rational>& zs) {
  SuiteResult r{"odd parity entries vanish"};
  Timer t(r);
  for (HalfInt j : spins_upto(jmax)) {
    HalfInt n = j.is_integer() ? HalfInt(0) : kHalf;
    for (HalfInt m3 = -j; m3 <= j; m3 += HalfInt(1))
      for (HalfInt m2 = -j; m2 <= j; m2 += HalfInt(1)) {
        if ((j.twice + (m3 - m2).as_integer()) % 2 == 0) continue;
        for (const Rational& z : zs) {
          ++r.cases;
          Exact v = s_entry_sum(j, n, m3, m2, z);
          if (!v.is_zero()) r.fail("j=" + j.str() + " m=(" + m3.str() + "," + m2.str() + ") z=" + rational_str(z) + ": " + v.str());
        }
      }
  }
  return r;
}

SuiteResult check_mellin(double tol) {
  SuiteResult r{"Mellin quadrature"};
  Timer t(r);
  double worst = 0;
  for (double z : {1.0, 1.5, 2.0, 2.5})
    for (long tm : {0, 1, 2, 3}) {
      ++r.cases;
      double err = 0;
      try {
        if (!mellin_numeric_check(z, HalfInt::from_twice(tm), tol, &err))
          r.fail("z=" + std::to_string(z) + " m=" + HalfInt::from_twice(tm).str() + " error " + std::to_string(err));
      } catch (const std::exception& e) {
        r.fail(e.what());
      }
      worst = std::max(worst, err);
    }
  std::ostringstream os;
  os << "worst error " << std::scientific << std::setprecision(2) << worst;
  r.note = os.str();
  return r;
}

namespace {

struct CasimirChunk {
  long cases = 0;
  std::vector<std::string> failures;
};

CasimirChunk casimir_chunk(const GKModule<Exact>& module, const std::vector<BasisIndex>& vs, const Exact& expected) {
  CasimirChunk out;
  Omega2Evaluator<Exact> ev(module);
  for (const BasisIndex& v : vs) {
    ++out.cases;
    LinComb<Exact> w = ev.apply(v);
    Exact c = w.coeff(v);
    if (w.size() > (c.is_zero() ? 0u : 1u) || c != expected)
      out.failures.push_back(v.str() + ": diagonal " + c.str() + " with " + std::to_string(w.size()) + " terms");
  }
  return out;
}

}  // namespace

SuiteResult check_casimir(const RationalPair& lambda, int d1, int d2, HalfInt jmax, HalfInt nmax, unsigned threads) {
  SuiteResult r{"Casimir scalar at lambda=" + lam_str(lambda)};
  Timer t(r);
  Exact l1(lambda.first), l2(lambda.second);
  Exact expected = hc_omega2(l1, l2);
  GKModule<Exact> module(Character<Exact>{d1, d2, l1, l2});
  std::vector<BasisIndex> vs = basis(d1, d2, jmax, nmax);
  if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::vector<BasisIndex>> parts(threads);
  for (std::size_t i = 0; i < vs.size(); ++i) parts[i % threads].push_back(vs[i]);
  std::vector<std::future<CasimirChunk>> fut;
  for (auto& p : parts) fut.push_back(std::async(std::launch::async, casimir_chunk, std::cref(module), std::cref(p), std::cref(expected)));
  for (auto& f : fut) {
    CasimirChunk c = f.get();
    r.cases += c.cases;
    for (const auto& s : c.failures) r.fail(s);
  }
  // The same scalar along the Weyl orbit, on the small K-types.
  std::vector<std::vector<int>> words{{}, {0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}, {1, 0, 1}, {1, 0, 1, 0}};
  std::vector<BasisIndex> small = basis(d1, d2, HalfInt(1), HalfInt(1));
  for (const auto& w : words) {
    auto [a, b] = weyl_on_lambda<Exact>(w, {l1, l2});
    GKModule<Exact> m(Character<Exact>{d1, d2, a, b});
    CasimirChunk c = casimir_chunk(m, small, expected);
    ++r.cases;
    if (!c.failures.empty()) r.fail("Weyl image (" + a.str() + "," + b.str() + "): " + c.failures.front());
  }
  r.note = "scalar " + (expected.is_rational() ? rational_str(expected.to_rational()) : expected.str()) + " on " + std::to_string(vs.size()) + " basis vectors";
  return r;
}

SuiteResult check_bracket(int pairs, HalfInt jmax, int d1, int d2, const RationalPair& lambda, std::uint64_t seed) {
  SuiteResult r{"[dl X, dl Y] = dl [X,Y]"};
  Timer t(r);
  std::vector<GMat<Exact>> gens;
  for (const auto& u : u2_generators()) gens.push_back(u);
  for (NcRoot b : kNcRoots) gens.push_back(u_vector(b));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  auto random_element = [&] {
    GMat<Exact> x = gens[pick(rng)] * Exact(random_rational(rng, 5, 4) + 1);
    return GMat<Exact>(x + gens[pick(rng)] * Exact(random_rational(rng, 5, 4)));
  };
  GKModule<Exact> module(Character<Exact>{d1, d2, Exact(lambda.first), Exact(lambda.second)});
  std::vector<BasisIndex> vs = basis(d1, d2, jmax, jmax + HalfInt(1));
  for (int p = 0; p < pairs; ++p) {
    GMat<Exact> x = random_element(), y = random_element(), xy = bracket(x, y);
    for (const BasisIndex& v : vs) {
      ++r.cases;
      LinComb<Exact> f = LinComb<Exact>::unit(v);
      LinComb<Exact> yf = module.dl(y, f), xf = module.dl(x, f);
      LinComb<Exact> lhs = module.dl(x, yf) - module.dl(y, xf);
      LinComb<Exact> rhs = module.dl(xy, f);
      if (!(lhs == rhs)) r.fail("pair " + std::to_string(p) + " on " + v.str() + " (seed " + std::to_string(seed) + ")");
    }
  }
  return r;
}

SuiteResult check_wigner(std::uint64_t seed) {
  SuiteResult r{"Wigner layer"};
  Timer t(r);
  std::mt19937_64 rng(seed);
  // Jacobi: sum definition against the hypergeometric definition.
  for (int k = 0; k < 50; ++k) {
    Exact a(random_rational(rng, 9, 7)), b(random_rational(rng, 9, 7)), x(random_rational(rng, 9, 7));
    for (long n = 0; n <= 10; ++n) {
      ++r.cases;
      try {
        if (jacobi_sum(n, a, b, x) != jacobi_hyp(n, a, b, x)) r.fail("jacobi n=" + std::to_string(n) + " at " + a.str() + "," + b.str() + "," + x.str());
      } catch (const PoleError&) {
        --r.cases;
      }
    }
  }
  std::uniform_real_distribution<double> ang(0.05, 2 * M_PI - 0.05);
  for (HalfInt j : spins_upto(HalfInt(5)))
    for (int k = 0; k < 3; ++k) {
      double th = ang(rng);
      if (std::fabs(th - M_PI) < 0.05) th += 0.1;
      for (HalfInt m1 = -j; m1 <= j; m1 += HalfInt(1))
        for (HalfInt m2 = -j; m2 <= j; m2 += HalfInt(1)) {
          ++r.cases;
          double a = little_d(j, m1, m2, th), b = wigner_via_jacobi(WignerIndex(j, HalfInt(0), m1, m2), th);
          if (std::fabs(a - b) > 1e-12 * std::max(1.0, std::fabs(a))) r.fail("little d j=" + j.str() + " m=(" + m1.str() + "," + m2.str() + ")");
        }
    }
  for (HalfInt j : spins_upto(HalfInt(5)))
    for (int quarter : {0, 2})
      for (HalfInt m1 = -j; m1 <= j; m1 += HalfInt(1))
        for (HalfInt m2 = -j; m2 <= j; m2 += HalfInt(1)) {
          WignerIndex w(j, j.is_integer() ? HalfInt(0) : kHalf, m1, m2);
          Exact b;
          try {
            b = wigner_via_jacobi(w, quarter);
          } catch (const DomainError&) {
            continue;
          }
          ++r.cases;
          if (little_d(j, m1, m2, quarter) != b) r.fail("exact little d j=" + j.str() + " m=(" + m1.str() + "," + m2.str() + ") quarter turns " + std::to_string(quarter));
        }
  auto random_angles = [&] { return EulerAngles{ang(rng), ang(rng), ang(rng), ang(rng)}; };
  for (HalfInt j : spins_upto(HalfInt(3))) {
    HalfInt n = j.is_integer() ? HalfInt(1) : kHalf;
    long d = j.twice + 1;
    EulerAngles a = random_angles(), b = random_angles();
    EulerAngles ab = euler_from_matrix(su2_matrix(a) * su2_matrix(b));
    auto dmat = [&](const EulerAngles& e) {
      Eigen::MatrixXcd m(d, d);
      for (long p = 0; p < d; ++p)
        for (long q = 0; q < d; ++q) {
          HalfInt mp = -j + HalfInt(p), mq = -j + HalfInt(q);
          m(p, q) = wigner_D(WignerIndex(j, n, mp, mq), e);
        }
      return m;
    };
    Eigen::MatrixXcd da = dmat(a), db = dmat(b), dab = dmat(ab);
    r.cases += 2;
    if ((da * da.adjoint() - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10) r.fail("unitarity j=" + j.str());
    if ((da * db - dab).cwiseAbs().maxCoeff() > 1e-10) r.fail("multiplicativity j=" + j.str());
  }
  std::uniform_int_distribution<int> coin(0, 1000);
  for (HalfInt j1 : spins_upto(HalfInt(2)))
    for (int k = 0; k < 4; ++k) {
      auto pick = [&](HalfInt j) { return -j + HalfInt(coin(rng) % (j.twice + 1)); };
      WignerIndex w1(j1, j1.is_integer() ? HalfInt(0) : kHalf, pick(j1), pick(j1));
      WignerIndex w2(HalfInt(1), HalfInt(1), pick(HalfInt(1)), pick(HalfInt(1)));
      LinComb<Exact> pe = product_expand(w1, w2);
      for (int s = 0; s < 20; ++s) {
        EulerAngles e = random_angles();
        Complex sum = 0;
        for (const auto& [w, c] : pe.terms()) sum += c.to_complex() * wigner_D(w, e);
        ++r.cases;
        if (std::abs(sum - wigner_D(w1, e) * wigner_D(w2, e)) > 1e-10 * std::max(1.0, std::abs(sum)))
          r.fail("product expansion " + w1.str() + " x " + w2.str());
      }
    }
  return r;
}

SuiteResult check_iwasawa(std::uint64_t seed) {
  SuiteResult r{"Iwasawa reconstruction"};
  Timer t(r);
  for (int s : {0, 1}) {
    Root neg = s == 0 ? Root::neg_a1 : Root::neg_a2;
    for (const Rational& tq : {Rational(3, 4), Rational(5, 12), Rational(8, 15)}) {
      ++r.cases;
      IwasawaFactors<Exact> f = iwasawa_sl2(s, tq);
      GMat<Exact> lhs = exp_nilpotent(GMat<Exact>(chevalley(neg) * Exact(tq)));
      if (!(f.kappa * f.h * f.chi == lhs)) r.fail("exact, simple root " + std::to_string(s) + " t=" + rational_str(tq));
    }
    std::mt19937_64 rng(seed + s);
    std::uniform_real_distribution<double> u(-3, 3);
    Eigen::Matrix4d x = to_double(chevalley(neg));
    for (int k = 0; k < 10; ++k) {
      double tv = u(rng);
      ++r.cases;
      IwasawaFactors<double> f = iwasawa_sl2(s, tv);
      Eigen::Matrix4d lhs = exp_nilpotent(Eigen::Matrix4d(tv * x));
      if ((f.kappa * f.h * f.chi - lhs).cwiseAbs().maxCoeff() > 1e-12) r.fail("float, simple root " + std::to_string(s) + " t=" + std::to_string(tv));
    }
  }
  return r;
}

}  // namespace sp4
