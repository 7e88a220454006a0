#include <cmath>
#include <numbers>

#include "doctest.h"
#include "generators.hpp"
#include "sp4/intertwine.hpp"

using namespace sp4;

namespace {

constexpr double kPi = std::numbers::pi;

Exact q(long a, long b = 1) { return Exact(Rational(a, b)); }
HalfInt h(long twice) { return HalfInt::from_twice(twice); }

bool is_identity(const BlockMatrix<Exact>& b) {
  for (Eigen::Index r = 0; r < b.entries.rows(); ++r)
    for (Eigen::Index c = 0; c < b.entries.cols(); ++c)
      if (!(b.entries(r, c) == q(r == c ? 1 : 0))) return false;
  return b.entries.rows() == b.entries.cols();
}

bool same_entries(const BlockMatrix<Exact>& a, const BlockMatrix<Exact>& b) {
  if (a.entries.rows() != b.entries.rows() || a.entries.cols() != b.entries.cols()) return false;
  for (Eigen::Index r = 0; r < a.entries.rows(); ++r)
    for (Eigen::Index c = 0; c < a.entries.cols(); ++c)
      if (!(a.entries(r, c) == b.entries(r, c))) return false;
  return true;
}

bool is_one_by_one_unit(const BlockMatrix<Exact>& b) { return b.entries.rows() == 1 && b.entries.cols() == 1 && b.entries(0, 0) == q(1); }

double q_float(double z, double m) { return kPi * std::pow(2.0, 2 - 2 * z) * std::tgamma(2 * z - 1) / (std::tgamma(z + m) * std::tgamma(z - m)); }

std::vector<HalfInt> spins(long tj) {
  std::vector<HalfInt> out;
  for (long t = -tj; t <= tj; t += 2) out.push_back(h(t));
  return out;
}

}  // namespace

TEST_SUITE("intertwine") {
  TEST_CASE("Q factor examples") {
    CHECK(q_factor(Rational(1), HalfInt(0)) == Exact::pi_power(2));
    CHECK(q_factor(Rational(3, 2), kHalf) == q(1, 2) * Exact::pi_power(2));
    for (long t : {3, 5, 7, 9, 11}) {
      Rational z(t, 2);
      // Gamma(z-1/2) sqrt(pi) / Gamma(z) from the half-integer gamma table
      Exact want = Exact::pi_power(1) * gamma_half(h(t - 1)) / gamma_half(h(t));
      CHECK(q_factor(z, HalfInt(0)) == want);
      CHECK(s00(z) == want);
    }
    for (double z : {1.25, 2.0, 3.5})
      for (long tm : {0, 1, 2}) CHECK(std::abs(q_factor(Complex(z, 0), h(tm)) - q_float(z, tm / 2.0)) < 1e-12 * q_float(z, tm / 2.0));
  }

  TEST_CASE("M and N") {
    auto [m0, n0] = mn_matrices(HalfInt(0));
    CHECK(is_one_by_one_unit(m0));
    CHECK(is_one_by_one_unit(n0));
    for (long tj = 1; tj <= 8; ++tj) {
      auto [m, n] = mn_matrices(h(tj), tj % 2 ? kHalf : HalfInt(0));
      CAPTURE(tj);
      CHECK(is_identity(m * n));
    }
    for (long tj = 0; tj <= 6; ++tj) {
      auto [m, n] = mn_matrices(h(tj));
      std::vector<HalfInt> ms = spins(tj);
      for (std::size_t r = 0; r < ms.size(); ++r)
        for (std::size_t c = 0; c < ms.size(); ++c) CHECK(m.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) == m_entry_genfun(h(tj), ms[r], ms[c]));
    }
  }

  TEST_CASE("unnormalized S entries") {
    for (long t : {3, 5, 7}) {
      Rational z(t, 2);
      CHECK(s_entry_sum(HalfInt(0), HalfInt(0), HalfInt(0), HalfInt(0), z) == q_factor(z, HalfInt(0)));
      CHECK(s_entry_sum(HalfInt(2), HalfInt(0), HalfInt(1), HalfInt(0), z).is_zero());
    }
    // Brute force: sum over m4 of i^{-2 m4} M_{m3,m4} N_{m4,m2} Q(z,m4).
    Rational z(5, 2);
    auto [m, n] = mn_matrices(HalfInt(2));
    std::vector<HalfInt> ms = spins(4);
    Exact want;
    for (std::size_t k = 0; k < ms.size(); ++k)
      want = want + i_power(-2 * ms[k].as_integer()) * m.entries(4, static_cast<Eigen::Index>(k)) * n.entries(static_cast<Eigen::Index>(k), 2) *
              q_factor(z, ms[k]);
    CHECK(s_entry_sum(HalfInt(2), HalfInt(0), HalfInt(2), HalfInt(0), z) == want);
    CHECK_FALSE(want.is_zero());

    CHECK(s_entry_3f2(HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), Rational(2)) ==
          s_entry_sum(HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), Rational(2)));
    CHECK(s_entry_3f2(HalfInt(2), HalfInt(0), HalfInt(0), HalfInt(-2), Rational(3, 2)) ==
          s_entry_sum(HalfInt(2), HalfInt(0), HalfInt(0), HalfInt(-2), Rational(3, 2)));
  }

  TEST_CASE("normalized entries") {
    Exact z = q(7, 3);
    CHECK(s_norm(HalfInt(0), HalfInt(1), HalfInt(0), HalfInt(0), z).value == q(1));
    CHECK(t_norm(HalfInt(2), HalfInt(2), z).value == q(1));
    CHECK(t_norm(HalfInt(2), HalfInt(0), z).value == -(z - q(1)) / z);
    CHECK(t_norm(HalfInt(2), HalfInt(0), z).gauge == 0);
    testing::Gen g;
    for (int k = 0; k < 20; ++k) {
      Rational zz = g.rational();
      HalfInt j(g.integer(0, 3));
      HalfInt m1 = g.weight(j), m2 = g.weight(j);
      if (!(m1 + m2).is_integer() || (m1 + m2).as_integer() % 2) continue;
      Exact a, b;
      try {
        a = s_norm(j, HalfInt(0), m1, m2, Exact(zz)).value;
        b = s_norm_closed(j, m1, m2, zz);
      } catch (const PoleError&) {
        continue;
      }
      CAPTURE(rational_str(zz));
      CHECK(a == b);
      CHECK(hg_constant_term(HGForm::H, j, m1, m2, zz) == a);
      CHECK(hg_constant_term(HGForm::G, j, m1, m2, zz) == a);
    }
  }

  TEST_CASE("simple operators") {
    Character<Exact> chi{0, 0, q(7, 2), q(3, 2)};
    for (OperatorKind k : {OperatorKind::A1, OperatorKind::A2, OperatorKind::A3, OperatorKind::A4})
      CHECK(is_one_by_one_unit(simple_operator(k, HalfInt(0), HalfInt(0), chi)));
    for (OperatorKind k : {OperatorKind::A2, OperatorKind::A4}) {
      auto b = simple_operator(k, HalfInt(3), HalfInt(1), chi);
      for (Eigen::Index r = 0; r < b.entries.rows(); ++r)
        for (Eigen::Index c = 0; c < b.entries.cols(); ++c)
          if (r != c) CHECK(b.entries(r, c).is_zero());
    }
    auto a1 = simple_operator(OperatorKind::A1, HalfInt(2), HalfInt(0), chi);
    REQUIRE(a1.entries.rows() == 3);
    REQUIRE(a1.entries.cols() == 3);
    for (Eigen::Index r = 0; r < 3; ++r)
      for (Eigen::Index c = 0; c < 3; ++c) CHECK(a1.entries(r, c) == s_norm_closed(HalfInt(2), a1.rows[r], a1.cols[c], Rational(3, 2)));
    CHECK_THROWS_AS(simple_operator(OperatorKind::A2, HalfInt(1), HalfInt(1), Character<Exact>{0, 0, q(-1), q(0)}), PoleError);
  }

  TEST_CASE("long operator") {
    Character<Exact> chi{0, 0, q(9, 2), q(5, 2)};
    CHECK(is_one_by_one_unit(long_operator_product<Exact>(HalfInt(0), HalfInt(0), chi)));
    auto p = long_operator_product<Exact>(HalfInt(1), HalfInt(1), chi);
    auto composed = simple_operator(OperatorKind::A4, HalfInt(1), HalfInt(1), chi) *
                    (simple_operator(OperatorKind::A3, HalfInt(1), HalfInt(1), chi) *
                     (simple_operator(OperatorKind::A2, HalfInt(1), HalfInt(1), chi) * simple_operator(OperatorKind::A1, HalfInt(1), HalfInt(1), chi)));
    CHECK(same_entries(p, composed));
    CHECK(epsilon(HalfInt(1), HalfInt(1), 0) == 0);
    CHECK(epsilon(HalfInt(2), HalfInt(1), 0) == 1);
    // (1,1) has epsilon 0 and (2,1) has epsilon 1.
    for (HalfInt j : {HalfInt(1), HalfInt(2)}) {
      auto cmp = compare_up_to_constant(long_operator_product<Exact>(j, HalfInt(1), chi), long_operator_genfun(j, HalfInt(1), chi));
      CAPTURE(cmp.detail);
      CHECK(cmp.proportional);
      CHECK(cmp.constant == q(1));
    }
  }

  TEST_CASE("complex path matches the exact path") {
    Character<Exact> ce{1, 1, q(11, 3), q(4, 7)};
    Character<Complex> cc{1, 1, Complex(11.0 / 3, 0), Complex(4.0 / 7, 0)};
    for (long j = 0; j <= 3; ++j)
      for (long n = -1; n <= 1; ++n) {
        if (m_set(HalfInt(j), HalfInt(n), 1, 1).empty()) continue;
        auto e = long_operator_product<Exact>(HalfInt(j), HalfInt(n), ce);
        Eigen::MatrixXcd c = materialize(long_operator_product<Complex>(HalfInt(j), HalfInt(n), cc));
        for (Eigen::Index r = 0; r < c.rows(); ++r)
          for (Eigen::Index k = 0; k < c.cols(); ++k) {
            Complex want = e.entries(r, k).to_complex();
            for (const auto& gf : e.gauge) want *= std::pow(gauge_value(gf.z.to_complex()), gf.power);
            CHECK(std::abs(c(r, k) - want) < 1e-10 * std::max(1.0, std::abs(want)));
          }
      }
  }

  TEST_CASE("inversion") {
    CHECK(inversion_check(HalfInt(0), HalfInt(0), 0, 0, Rational(5, 2)));
    CHECK(inversion_check(HalfInt(2), HalfInt(0), 0, 0, Rational(7, 2)));
    CHECK(inversion_check(HalfInt(3), HalfInt(1), 1, 1, Rational(5, 2)));
  }

  TEST_CASE("Mellin transform examples") {
    CHECK(std::abs(mellin_integral(1.0, HalfInt(0)) - kPi) < 1e-10);
    CHECK(std::abs(mellin_integral(2.0, HalfInt(1)) - q_float(2, 1)) < 1e-10);
    CHECK(std::abs(mellin_integral(1.5, kHalf) - kPi / 2) < 1e-10);
    CHECK(mellin_numeric_check(2.5, h(3)));
  }
}
