#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sp4/exact.hpp"

namespace sp4 {

struct SuiteResult {
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;
  std::string note;
  double seconds = 0;
  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

using RationalPair = std::pair<Rational, Rational>;

// Seed from SP4_SEED when set, else the fallback.
std::uint64_t seed_from_env(std::uint64_t fallback = 20240611);

SuiteResult check_mn_inverse(HalfInt jmax);
SuiteResult check_closed_form(long jmax, const std::vector<Rational>& zs);
SuiteResult check_inversion(long jmax, long nmax, const std::vector<Rational>& zs);
// Generating-function entries against the four-factor product, per block up to one constant.
SuiteResult check_theorem(long jmax, long nmax, const std::vector<RationalPair>& lambdas, const std::vector<int>& deltas);
SuiteResult check_hg(long jmax, const std::vector<Rational>& zs);
SuiteResult check_parity(HalfInt jmax, const std::vector<Rational>& zs);
SuiteResult check_mellin(double tol = 1e-8);
// dl(Omega_2) is one scalar on the basis, equal to (l1^2+l2^2-5)/12 and unchanged along the Weyl orbit of lambda.
SuiteResult check_casimir(const RationalPair& lambda, int d1, int d2, HalfInt jmax, HalfInt nmax, unsigned threads = 0);
SuiteResult check_bracket(int pairs, HalfInt jmax, int d1, int d2, const RationalPair& lambda, std::uint64_t seed);
SuiteResult check_wigner(std::uint64_t seed);
SuiteResult check_iwasawa(std::uint64_t seed);

}  // namespace sp4
