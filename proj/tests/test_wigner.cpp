#include <cmath>
#include <numbers>

#include "doctest.h"
#include "generators.hpp"
#include "sp4/wigner.hpp"

using namespace sp4;

namespace {

constexpr double kPi = std::numbers::pi;

Exact q(long a, long b = 1) { return Exact(Rational(a, b)); }

double fact(long n) { return std::tgamma(static_cast<double>(n) + 1); }

Complex eval(const LinComb<Exact>& f, const EulerAngles& a) {
  Complex s = 0;
  for (const auto& [w, c] : f.terms()) s += c.to_complex() * wigner_D(w, a);
  return s;
}

Complex at(const WignerIndex& w, const Eigen::Matrix2cd& g) { return wigner_D(w, euler_from_matrix(g)); }

// exp(-t gamma_k) with gamma_k = (i/2) sigma_k.
Eigen::Matrix2cd exp_gamma(int k, double t) {
  const Complex i(0, 1);
  Eigen::Matrix2cd s;
  switch (k) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return std::cos(t / 2) * Eigen::Matrix2cd::Identity() - i * std::sin(t / 2) * s;
}

// Central differences of t -> W(exp(-t gamma_k) g) and t -> W(g exp(t gamma_k)).
Complex dl_numeric(int k, const WignerIndex& w, const Eigen::Matrix2cd& g) {
  const double h = 1e-5;
  return (at(w, exp_gamma(k, h) * g) - at(w, exp_gamma(k, -h) * g)) / (2 * h);
}
Complex dr_numeric(int k, const WignerIndex& w, const Eigen::Matrix2cd& g) {
  const double h = 1e-5;
  return (at(w, g * exp_gamma(k, -h)) - at(w, g * exp_gamma(k, h))) / (2 * h);
}

// gamma_1 and gamma_2 from the raising and lowering combinations.
Complex from_ladder(int k, const LinComb<Exact>& plus, const LinComb<Exact>& minus, const EulerAngles& a) {
  Complex p = eval(plus, a), m = eval(minus, a);
  return k == 1 ? (p + m) / 2.0 : (p - m) / Complex(0, 2);
}

Exact cg_or_zero(HalfInt j, HalfInt m1, int m2, int j0) {
  try {
    return clebsch_gordan_j1(j, m1, m2, j0);
  } catch (const OutOfRange&) {
    return Exact(0);
  } catch (const DomainError&) {
    return Exact(0);
  }
}

}  // namespace

TEST_SUITE("wigner") {
  TEST_CASE("Jacobi examples") {
    Exact x = q(3, 7);
    CHECK(jacobi_sum(0, q(2), q(5), x) == q(1));
    CHECK(jacobi_sum(1, q(0), q(0), x) == x);
    // P_2^{(1,1)}(x) = (15x^2-3)/4
    CHECK(jacobi_sum(2, q(1), q(1), q(0)) == q(-3, 4));
    CHECK(jacobi_hyp(0, q(2), q(5), x) == q(1));
    CHECK(jacobi_hyp(1, q(0), q(0), q(1, 2)) == q(1, 2));
    CHECK(jacobi_hyp(3, q(2), q(-1), q(1)) == q(10));
  }

  TEST_CASE("Jacobi generating function") {
    CHECK(jacobi_genfun_check(Rational(2), Rational(1), Rational(1, 2), 0));
    CHECK(jacobi_genfun_check(Rational(2), Rational(1), Rational(1, 2), 3));
    CHECK(jacobi_genfun_check(Rational(-1), Rational(3), Rational(0), 4));
  }

  TEST_CASE("little d examples") {
    for (long t = 0; t <= 8; ++t) {
      HalfInt j = HalfInt::from_twice(t);
      double th = 0.73;
      CHECK(little_d(j, j, j, th) == doctest::Approx(std::pow(std::cos(th / 2), t) / fact(t)).epsilon(1e-13));
      for (HalfInt m1 = -j; m1 <= j; m1 += HalfInt(1))
        for (HalfInt m2 = -j; m2 <= j; m2 += HalfInt(1)) {
          double expect = m1 == m2 ? 1 / (fact((j + m1).as_integer()) * fact((j - m1).as_integer())) : 0.0;
          CHECK(little_d(j, m1, m2, 0.0) == doctest::Approx(expect).epsilon(1e-14));
        }
    }
    CHECK(little_d(HalfInt(1), HalfInt(0), HalfInt(0), 1).is_zero());
    CHECK(std::abs(little_d(HalfInt(1), HalfInt(0), HalfInt(0), kPi / 2)) < 1e-15);
  }

  TEST_CASE("Wigner D examples") {
    for (long t = 0; t <= 6; ++t) {
      HalfInt j = HalfInt::from_twice(t), n = j.is_integer() ? HalfInt(2) : kHalf;
      for (HalfInt m1 = -j; m1 <= j; m1 += HalfInt(1))
        for (HalfInt m2 = -j; m2 <= j; m2 += HalfInt(1)) {
          Complex w = wigner_D(WignerIndex(j, n, m1, m2), EulerAngles{});
          CHECK(std::abs(w - (m1 == m2 ? 1.0 : 0.0)) < 1e-14);
        }
      HalfInt m = -j;
      double zeta = 0.4, psi = 1.3;
      Complex w = wigner_D(WignerIndex(j, n, m, m), EulerAngles{zeta, psi, 0, 0});
      CHECK(std::abs(w - std::polar(1.0, n.to_double() * zeta + m.to_double() * psi)) < 1e-14);
    }
    // W^{(1,1)}_{1,-1} at theta = pi: one surviving term of the defining sum.
    Complex w = wigner_D(WignerIndex(HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(-1)), EulerAngles{0, 0, kPi, 0});
    CHECK(std::abs(w - 1.0) < 1e-14);
    CHECK(wigner_D(WignerIndex(HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(-1)), QuarterAngles{0, 0, 2, 0}) == q(1));
  }

  TEST_CASE("Jacobi form of little d at pi/3") {
    for (auto [j, m1, m2] : {std::tuple{1, 0, 0}, {2, 1, -1}, {3, 2, 0}}) {
      WignerIndex w(HalfInt(j), HalfInt(0), HalfInt(m1), HalfInt(m2));
      CHECK(wigner_via_jacobi(w, kPi / 3) == doctest::Approx(little_d(HalfInt(j), HalfInt(m1), HalfInt(m2), kPi / 3)).epsilon(1e-13));
    }
  }

  TEST_CASE("Euler angles round-trip through U(2)") {
    testing::Gen g;
    for (int k = 0; k < 50; ++k) {
      EulerAngles a{g.real(-3, 3), g.real(-3, 3), g.real(0.1, 3), g.real(-3, 3)};
      Eigen::Matrix2cd m = su2_matrix(a);
      CHECK((m * m.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-14);
      CHECK((su2_matrix(euler_from_matrix(m)) - m).cwiseAbs().maxCoeff() < 1e-13);
    }
  }

  TEST_CASE("Clebsch-Gordan examples") {
    for (long t = 2; t <= 8; ++t) {
      HalfInt j = HalfInt::from_twice(t);
      Rational jj = j.to_rational();
      for (HalfInt m = -j; m <= j; m += HalfInt(1))
        CHECK(clebsch_gordan_j1(j, m, 0, 0) == Exact(m.to_rational()) / Exact::sqrt(jj * (jj + 1)));
      CHECK(clebsch_gordan_j1(j, j, 1, 1) == q(1));
    }
    CHECK(clebsch_gordan_j1(HalfInt(1), HalfInt(1), 0, 0) == Exact::sqrt(Rational(1, 2)));
  }

  TEST_CASE("Clebsch-Gordan columns are orthonormal") {
    for (long t = 1; t <= 10; ++t) {
      HalfInt j = HalfInt::from_twice(t);
      for (HalfInt M = -j - HalfInt(1); M <= j + HalfInt(1); M += HalfInt(1))
        for (int a = -1; a <= 1; ++a)
          for (int b = -1; b <= 1; ++b) {
            Exact s;
            for (int m2 = -1; m2 <= 1; ++m2) {
              HalfInt m1 = M - HalfInt(m2);
              if (m1 < -j || m1 > j) continue;
              s += cg_or_zero(j, m1, m2, a) * cg_or_zero(j, m1, m2, b);
            }
            bool present = (j + HalfInt(a)).twice >= 0 && M <= j + HalfInt(a) && M >= -(j + HalfInt(a));
            CAPTURE(j.str());
            CAPTURE(M.str());
            CHECK(s == q(a == b && present ? 1 : 0));
          }
    }
  }

  TEST_CASE("product expansion examples") {
    WignerIndex w(HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(-1));
    LinComb<Exact> one = product_expand(WignerIndex(HalfInt(0), HalfInt(0), HalfInt(0), HalfInt(0)), w);
    CHECK(one == LinComb<Exact>::unit(w));
    LinComb<Exact> top = product_expand(WignerIndex(HalfInt(1), HalfInt(0), HalfInt(1), HalfInt(1)),
                                        WignerIndex(HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1)));
    CHECK(top == LinComb<Exact>::unit(WignerIndex(HalfInt(2), HalfInt(1), HalfInt(2), HalfInt(2))));
    WignerIndex a(HalfInt(1), HalfInt(0), HalfInt(0), HalfInt(0)), b(HalfInt(1), HalfInt(1), HalfInt(0), HalfInt(0));
    LinComb<Exact> three = product_expand(a, b);
    // <1 0; 1 0 | 1 0> = 0, so only J = 0 and J = 2 survive.
    CHECK(three.size() == 2);
    testing::Gen g;
    for (int k = 0; k < 10; ++k) {
      EulerAngles e{g.real(-3, 3), g.real(-3, 3), g.real(0, 3), g.real(-3, 3)};
      CHECK(std::abs(eval(three, e) - wigner_D(a, e) * wigner_D(b, e)) < 1e-12);
    }
  }

  TEST_CASE("compact action examples") {
    WignerIndex w(HalfInt::from_twice(3), kHalf, kHalf, -kHalf);
    CHECK(dr_gamma(CompactGen::G3, w) == (-Exact::i() * Exact(w.m2.to_rational())) * LinComb<Exact>::unit(w));
    HalfInt j(2);
    WignerIndex top(j, HalfInt(0), HalfInt(1), j);
    CHECK(dr_gamma(CompactGen::GPlus, top) ==
          (Exact::i() * Exact::sqrt(Rational(4))) * LinComb<Exact>::unit(WignerIndex(j, HalfInt(0), HalfInt(1), j - HalfInt(1))));
    CHECK(dl_gamma(CompactGen::GPlus, WignerIndex(j, HalfInt(0), j, HalfInt(0))).empty());
  }

  TEST_CASE("compact action agrees with differentiation of D") {
    testing::Gen g;
    for (int k = 0; k < 40; ++k) {
      HalfInt j = g.spin(6), n = j.is_integer() ? HalfInt(g.integer(-2, 2)) : kHalf;
      WignerIndex w(j, n, g.weight(j), g.weight(j));
      EulerAngles a{g.real(-3, 3), g.real(-3, 3), g.real(0.2, 2.9), g.real(-3, 3)};
      Eigen::Matrix2cd m = su2_matrix(a);
      CAPTURE(w.str());
      CHECK(std::abs(eval(dl_gamma(CompactGen::G0, w), a) - dl_numeric(0, w, m)) < 1e-7);
      CHECK(std::abs(eval(dl_gamma(CompactGen::G3, w), a) - dl_numeric(3, w, m)) < 1e-7);
      CHECK(std::abs(eval(dr_gamma(CompactGen::G0, w), a) - dr_numeric(0, w, m)) < 1e-7);
      CHECK(std::abs(eval(dr_gamma(CompactGen::G3, w), a) - dr_numeric(3, w, m)) < 1e-7);
      LinComb<Exact> lp = dl_gamma(CompactGen::GPlus, w), lm = dl_gamma(CompactGen::GMinus, w);
      LinComb<Exact> rp = dr_gamma(CompactGen::GPlus, w), rm = dr_gamma(CompactGen::GMinus, w);
      for (int c : {1, 2}) {
        CHECK(std::abs(from_ladder(c, lp, lm, a) - dl_numeric(c, w, m)) < 1e-7);
        CHECK(std::abs(from_ladder(c, rp, rm, a) - dr_numeric(c, w, m)) < 1e-7);
      }
    }
  }
}
