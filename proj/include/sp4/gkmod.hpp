#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sp4/exact.hpp"
#include "sp4/sp4.hpp"
#include "sp4/wigner.hpp"

namespace sp4 {

using BasisIndex = WignerIndex;

// Noncompact roots with their (m_beta, n_beta) labels.
enum class NcRoot { p2b1b2, pb1b2, pb2, m2b1b2, mb1b2, mb2 };
inline constexpr std::array<NcRoot, 6> kNcRoots{NcRoot::p2b1b2, NcRoot::pb1b2, NcRoot::pb2,
                                                NcRoot::m2b1b2, NcRoot::mb1b2, NcRoot::mb2};

struct NcLabel {
  int m_beta, n_beta;
};
NcLabel nc_label(NcRoot b);
NcRoot nc_root(int m_beta, int n_beta);
std::string name(NcRoot b);
GMat<Exact> u_vector(NcRoot b);

// Ladder convention for the right action of u_{+-(b1+b2)}.
// printed: m2 -> m2 -+ 1 as in the published tables; corrected: m2 -> m2 +- 1, which is what
// makes the Casimir act by the Harish-Chandra scalar at lambda itself.
enum class TableVariant { corrected, printed };

// Global sign between dl(u_beta) and the right action; pinned by the Casimir test.
inline constexpr int kPActionSign = 1;

template <class S>
struct Character {
  int d1 = 0, d2 = 0;
  S l1, l2;
};

// M(j,n;d1,d2): m with n-m = d1 and n+m = d2 mod 2.
std::vector<HalfInt> m_set(HalfInt j, HalfInt n, int d1, int d2);
bool admissible(const BasisIndex& v, int d1, int d2);

struct KType {
  HalfInt j, n;
  std::vector<HalfInt> ms;
};
// K-types with j <= jmax, |n| <= nmax and nonempty M-set.
std::vector<KType> ktypes(int d1, int d2, HalfInt jmax, HalfInt nmax);
std::vector<BasisIndex> basis(int d1, int d2, HalfInt jmax, HalfInt nmax);

// Coordinates in the basis {U_0..U_3, u_beta}.
struct Decomposition {
  std::array<Exact, 4> u;
  std::array<Exact, 6> p;
};
Decomposition decompose(const GMat<Exact>& x);

template <class S>
class GKModule {
 public:
  explicit GKModule(Character<S> chi, TableVariant variant = TableVariant::corrected);

  const Character<S>& character() const { return chi_; }
  TableVariant variant() const { return variant_; }

  LinComb<S> dr_p(NcRoot b, const BasisIndex& v) const;
  LinComb<S> dl_p(NcRoot b, const BasisIndex& v) const;
  // Coefficient tables of the printed-variant action, evaluated entry by entry.
  LinComb<S> dl_p_table(NcRoot b, const BasisIndex& v) const;
  LinComb<S> dl_k(int i, const BasisIndex& v) const;  // U_i
  LinComb<S> dl(const Decomposition& x, const BasisIndex& v) const;
  LinComb<S> dl(const GMat<Exact>& x, const LinComb<S>& f) const;
  // Rightmost element acts first.
  LinComb<S> dl_word(const std::vector<GMat<Exact>>& word, const LinComb<S>& f) const;

 private:
  Character<S> chi_;
  TableVariant variant_;
};

// dl(Omega_2) with per-element caches; one instance per thread.
template <class S>
class Omega2Evaluator {
 public:
  explicit Omega2Evaluator(const GKModule<S>& module);
  LinComb<S> apply(const BasisIndex& v);

 private:
  const LinComb<S>& action(std::size_t element, const BasisIndex& v);

  const GKModule<S>& module_;
  std::vector<Decomposition> elements_;
  struct Step {
    Rational coeff;
    std::vector<std::size_t> word;
  };
  std::vector<Step> steps_;
  std::vector<std::map<BasisIndex, LinComb<S>>> cache_;
};

extern template class GKModule<Exact>;
extern template class GKModule<Complex>;
extern template class Omega2Evaluator<Exact>;
extern template class Omega2Evaluator<Complex>;

}  // namespace sp4
