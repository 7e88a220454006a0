// One line per acceptance criterion; nonzero exit when any criterion fails.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sp4/verify.hpp"

using namespace sp4;

namespace {

struct Criterion {
  const char* id;
  const char* what;
  double budget_seconds;
  std::function<std::vector<SuiteResult>()> run;
};

std::vector<SuiteResult> one(SuiteResult r) { return {std::move(r)}; }

}  // namespace

int main() {
  std::uint64_t seed = seed_from_env();
  std::vector<Rational> z5{Rational(3, 2), Rational(5, 2), Rational(7, 2), Rational(9, 2), Rational(11, 2)};
  std::vector<Rational> z3{Rational(1, 3), Rational(5, 2), Rational(7, 2)};
  std::vector<RationalPair> theorem_lambdas{{Rational(9, 2), Rational(5, 2)}, {Rational(7, 2), Rational(3, 2)}, {Rational(13, 2), Rational(3, 2)}};
  std::vector<RationalPair> casimir_lambdas{{Rational(1, 2), Rational(1, 3)}, {Rational(2), Rational(1)}, {Rational(5), Rational(3)}};

  std::vector<Criterion> acs{
      {"AC1", "M N = I exactly, j <= 6", 5, [] { return one(check_mn_inverse(HalfInt(6))); }},
      {"AC2", "3F2 form = sum form exactly, j <= 4, 5 z", 30, [&] { return one(check_closed_form(4, z5)); }},
      {"AC3", "S(z) S(1-z) = I exactly, j <= 4, both delta, 3 z", 30, [&] { return one(check_inversion(4, 4, z3)); }},
      {"AC4", "generating function = product up to one constant per block, j <= 3, 3 lambda", 180,
       [&] { return one(check_theorem(3, 3, theorem_lambdas, {0, 1})); }},
      {"AC5", "[H]_0 = [G]_0 = S exactly, j <= 3", 20, [&] { return one(check_hg(3, z5)); }},
      {"AC6", "Casimir scalar (l1^2+l2^2-5)/12, j <= 4, 3 lambda", 120,
       [&] {
         std::vector<SuiteResult> out;
         for (const auto& l : casimir_lambdas) out.push_back(check_casimir(l, 0, 0, HalfInt(4), HalfInt(4)));
         return out;
       }},
      {"AC7", "[dl X, dl Y] = dl [X,Y] exactly, j <= 2, 20 pairs", 60,
       [&] { return one(check_bracket(20, HalfInt(2), 0, 0, {Rational(1, 2), Rational(1, 3)}, seed)); }},
      {"AC8", "Wigner layer: Jacobi forms, little d (1e-12), unitarity, multiplicativity, CG (1e-10)", 30,
       [&] { return one(check_wigner(seed)); }},
      {"AC9", "Iwasawa reconstruction: exact at Pythagorean t, float 1e-12", 5, [&] { return one(check_iwasawa(seed)); }},
      {"AC10", "Mellin quadrature vs Q(z,m), relative 1e-8", 10, [] { return one(check_mellin(1e-8)); }},
      {"AC11", "s_entry_sum vanishes when 2j+m3-m2 is odd, j <= 4", 5,
       [&] { return one(check_parity(HalfInt(4), z5)); }},
  };

  bool all = true;
  for (const Criterion& c : acs) {
    std::vector<SuiteResult> rs = c.run();
    long cases = 0, failures = 0;
    double seconds = 0;
    std::string first, note;
    for (const SuiteResult& r : rs) {
      cases += r.cases;
      failures += r.failures + (r.cases == 0);
      seconds += r.seconds;
      if (first.empty()) first = r.first_failure;
      if (!r.note.empty()) note += (note.empty() ? "" : "; ") + r.note;
    }
    bool in_time = seconds <= c.budget_seconds;
    bool ok = failures == 0 && in_time;
    all = all && ok;
    std::printf("%-5s %s  %s  [%ld cases, %ld failed, %.2f s of %.0f s]\n", c.id, ok ? "PASS" : "FAIL", c.what, cases, failures, seconds,
                c.budget_seconds);
    if (!note.empty()) std::printf("      %s\n", note.c_str());
    if (!first.empty()) std::printf("      first failure: %s\n", first.c_str());
    if (!in_time) std::printf("      over the runtime budget\n");
    std::fflush(stdout);
  }
  if (!all) std::printf("SP4_SEED=%llu\n", static_cast<unsigned long long>(seed));
  return all ? 0 : 1;
}
