#pragma once

#include <algorithm>
#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "sp4/exact.hpp"

namespace sp4 {

// Relative order used when inverting a series that is known exactly.
class TruncationScope {
 public:
  explicit TruncationScope(long order) : saved_(current_) { current_ = order; }
  ~TruncationScope() { current_ = saved_; }
  TruncationScope(const TruncationScope&) = delete;
  TruncationScope& operator=(const TruncationScope&) = delete;
  static long order() { return current_; }

 private:
  long saved_;
  static inline thread_local long current_ = 8;
};

// Truncated Laurent series sum_{e >= min_exp} c_e t^e, known for e <= trunc.
template <class S>
class LSeries1 {
 public:
  static constexpr long kExact = LONG_MAX / 4;
  using T = ScalarTraits<S>;

  LSeries1() = default;
  LSeries1(const S& c) : coeffs_{c} { normalize(); }
  LSeries1(long min_exp, std::vector<S> coeffs, long trunc, char var = 't')
      : min_exp_(min_exp), coeffs_(std::move(coeffs)), trunc_(trunc), var_(var) {
    normalize();
  }
  static LSeries1 monomial(const S& c, long e, char var = 't') { return LSeries1(e, {c}, kExact, var); }
  static LSeries1 unknown(long trunc_below) { return LSeries1(0, {}, trunc_below - 1); }

  long min_exp() const { return min_exp_; }
  long trunc() const { return trunc_; }
  bool is_exact() const { return trunc_ >= kExact; }
  const std::vector<S>& coeffs() const { return coeffs_; }
  char var() const { return var_; }
  long max_exp() const { return min_exp_ + static_cast<long>(coeffs_.size()) - 1; }

  S coeff(long e) const {
    if (e > trunc_) throw TruncationError("coefficient of " + std::string(1, var_) + "^" + std::to_string(e) + " lies beyond truncation order " + std::to_string(trunc_));
    if (e < min_exp_ || e > max_exp()) return T::from_rational(0);
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
  }

  // Lowest exponent with a nonzero coefficient; trunc+1 when none is known.
  long valuation() const {
    if (coeffs_.empty()) return is_exact() ? kExact : trunc_ + 1;
    return min_exp_;
  }
  bool is_zero() const { return coeffs_.empty() && is_exact(); }

  LSeries1 truncated(long order) const { return LSeries1(min_exp_, coeffs_, std::min(order, trunc_), var_); }
  LSeries1 shifted(long k) const { return LSeries1(min_exp_ + k, coeffs_, is_exact() ? kExact : trunc_ + k, var_); }
  // Substitutes t -> c t.
  LSeries1 rescaled(const S& c) const {
    std::vector<S> out = coeffs_;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = out[k] * power(c, min_exp_ + static_cast<long>(k));
    return LSeries1(min_exp_, std::move(out), trunc_, var_);
  }

  LSeries1 inverse() const {
    long v = valuation();
    if (v > trunc_) throw TruncationError("inverse of a series with no known nonzero coefficient");
    if (coeffs_.size() == 1 && is_exact()) return LSeries1(-v, {T::from_rational(1) / coeffs_[0]}, kExact, var_);
    long rel = is_exact() ? TruncationScope::order() : trunc_ - v;
    S inv0 = T::from_rational(1) / coeffs_[0];
    std::vector<S> b(static_cast<std::size_t>(rel + 1), T::from_rational(0));
    b[0] = inv0;
    for (long k = 1; k <= rel; ++k) {
      S acc = T::from_rational(0);
      for (long i = 1; i <= k && i < static_cast<long>(coeffs_.size()); ++i) acc = acc + coeffs_[i] * b[k - i];
      b[k] = -(inv0 * acc);
    }
    return LSeries1(-v, std::move(b), -v + rel, var_);
  }

  LSeries1 operator-() const {
    std::vector<S> out = coeffs_;
    for (S& c : out) c = -c;
    return LSeries1(min_exp_, std::move(out), trunc_, var_);
  }
  friend LSeries1 operator+(const LSeries1& a, const LSeries1& b) {
    long trunc = std::min(a.trunc_, b.trunc_);
    if (a.coeffs_.empty()) return b.truncated(trunc);
    if (b.coeffs_.empty()) return a.truncated(trunc);
    long lo = std::min(a.min_exp_, b.min_exp_);
    long hi = std::min(trunc, std::max(a.max_exp(), b.max_exp()));
    std::vector<S> out;
    for (long e = lo; e <= hi; ++e) out.push_back(a.raw(e) + b.raw(e));
    return LSeries1(lo, std::move(out), trunc, a.var_);
  }
  friend LSeries1 operator-(const LSeries1& a, const LSeries1& b) { return a + (-b); }
  friend LSeries1 operator*(const LSeries1& a, const LSeries1& b) {
    long va = a.valuation(), vb = b.valuation();
    long trunc = std::min(clamp_add(va, b.trunc_), clamp_add(vb, a.trunc_));
    if (a.coeffs_.empty() || b.coeffs_.empty()) return LSeries1(0, {}, trunc, a.var_);
    long lo = a.min_exp_ + b.min_exp_;
    long hi = std::min(trunc, a.max_exp() + b.max_exp());
    std::vector<S> out;
    for (long e = lo; e <= hi; ++e) {
      S acc = T::from_rational(0);
      long i0 = std::max(a.min_exp_, e - b.max_exp());
      long i1 = std::min(a.max_exp(), e - b.min_exp_);
      for (long i = i0; i <= i1; ++i) acc = acc + a.raw(i) * b.raw(e - i);
      out.push_back(std::move(acc));
    }
    return LSeries1(lo, std::move(out), trunc, a.var_);
  }
  friend LSeries1 operator/(const LSeries1& a, const LSeries1& b) { return a * b.inverse(); }
  LSeries1& operator+=(const LSeries1& o) { return *this = *this + o; }
  LSeries1& operator-=(const LSeries1& o) { return *this = *this - o; }
  LSeries1& operator*=(const LSeries1& o) { return *this = *this * o; }

  // Equality of the known window; both operands must share a truncation order.
  friend bool operator==(const LSeries1& a, const LSeries1& b) {
    if (a.trunc_ != b.trunc_) return false;
    LSeries1 d = a - b;
    return d.coeffs_.empty();
  }

 private:
  static long clamp_add(long x, long y) { return std::min(kExact, x + y); }
  static S power(const S& c, long e) {
    S acc = T::from_rational(1);
    S base = e < 0 ? T::from_rational(1) / c : c;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) acc = acc * base;
    return acc;
  }
  const S& raw_ref(long e) const { return coeffs_[static_cast<std::size_t>(e - min_exp_)]; }
  S raw(long e) const { return (e < min_exp_ || e > max_exp()) ? T::from_rational(0) : raw_ref(e); }

  void normalize() {
    if (!is_exact() && max_exp() > trunc_) coeffs_.resize(static_cast<std::size_t>(std::max(0L, trunc_ - min_exp_ + 1)));
    std::size_t lead = 0;
    while (lead < coeffs_.size() && T::is_zero(coeffs_[lead])) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      min_exp_ = 0;
      return;
    }
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    min_exp_ += static_cast<long>(lead);
    while (T::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  long min_exp_ = 0;
  std::vector<S> coeffs_;
  long trunc_ = kExact;
  char var_ = 't';
};

template <class S>
struct ScalarTraits<LSeries1<S>> {
  using L = LSeries1<S>;
  static L from_rational(const Rational& q) { return L(ScalarTraits<S>::from_rational(q)); }
  static L from_exact(const Exact& x) { return L(ScalarTraits<S>::from_exact(x)); }
  static L i() { return L(ScalarTraits<S>::i()); }
  static L sqrt_rational(const Rational& q) { return L(ScalarTraits<S>::sqrt_rational(q)); }
  static bool is_zero(const L& x) { return x.is_zero(); }
};

// Sum of separable terms coeff * f1(t1) * f2(t2).
template <class S>
struct LSeries2 {
  struct Term {
    S coeff;
    LSeries1<S> f1, f2;
  };
  std::vector<Term> terms;

  void add(S coeff, LSeries1<S> f1, LSeries1<S> f2) { terms.push_back({std::move(coeff), std::move(f1), std::move(f2)}); }
};

template <class S>
S constant_term_1(const LSeries1<S>& s) {
  return s.coeff(0);
}

template <class S>
S constant_term_2(const LSeries2<S>& s) {
  S acc = ScalarTraits<S>::from_rational(0);
  for (const auto& t : s.terms) acc = acc + t.coeff * t.f1.coeff(0) * t.f2.coeff(0);
  return acc;
}

// (1 + sign*scale*t)^exponent through t^order.
template <class S>
LSeries1<S> binom_series(const S& exponent, int sign, long order, const S& scale = ScalarTraits<S>::from_rational(1)) {
  using T = ScalarTraits<S>;
  std::vector<S> c;
  S term = T::from_rational(1);
  S step = sign < 0 ? -scale : scale;
  for (long k = 0; k <= order; ++k) {
    c.push_back(term);
    term = term * (exponent - T::from_rational(k)) * step * T::from_rational(Rational(1, k + 1));
  }
  return LSeries1<S>(0, std::move(c), order);
}

// Terminating or truncated 2F1(a,b;c;scale*t).
template <class S>
LSeries1<S> hyp2f1_series(const S& a, const S& b, const S& c, const S& scale, long order) {
  using T = ScalarTraits<S>;
  std::vector<S> out;
  S term = T::from_rational(1);
  for (long k = 0;; ++k) {
    if (k > order) return LSeries1<S>(0, std::move(out), order);
    out.push_back(term);
    S na = a + T::from_rational(k), nb = b + T::from_rational(k);
    if (T::is_zero(na) || T::is_zero(nb)) return LSeries1<S>(0, std::move(out), LSeries1<S>::kExact);
    S dc = c + T::from_rational(k);
    if (T::is_zero(dc)) throw PoleError("2F1: lower parameter reaches " + std::to_string(-k) + " before the series terminates");
    term = term * na * nb * scale / (dc * T::from_rational(k + 1));
  }
}

// Value of the terminating pFq at a point.
template <class S>
S hyp_pfq_terminating(const std::vector<S>& a, const std::vector<S>& b, const S& z, long max_terms = 1000) {
  using T = ScalarTraits<S>;
  S sum = T::from_rational(0), term = T::from_rational(1);
  for (long k = 0; k < max_terms; ++k) {
    sum = sum + term;
    S num = T::from_rational(1), den = T::from_rational(k + 1);
    bool stop = false;
    for (const S& x : a) {
      S f = x + T::from_rational(k);
      if (T::is_zero(f)) stop = true;
      num = num * f;
    }
    if (stop) return sum;
    for (const S& y : b) {
      S f = y + T::from_rational(k);
      if (T::is_zero(f)) throw PoleError("pFq: lower parameter hits a nonpositive integer before termination");
      den = den * f;
    }
    term = term * num * z / den;
  }
  throw DomainError("pFq does not terminate");
}

// sum_{k<=m} (a)_k/(b)_k z^k/k! checked against its reversed form.
bool partial_sum_check(const std::vector<Exact>& a, const std::vector<Exact>& b, const Exact& z, long m);

// Value at delta=0 of a function analytic there, computed through a Laurent
// expansion in delta so that removable singularities cancel exactly.
template <class F>
Exact limit_at_zero(F&& f, long order = 6) {
  for (int attempt = 0; attempt < 4; ++attempt, order += 4) {
    TruncationScope scope(order);
    try {
      LSeries1<Exact> v = f(LSeries1<Exact>::monomial(Exact(1), 1, 'd'));
      for (long e = v.min_exp(); e < 0; ++e)
        if (!v.coeff(e).is_zero()) throw PoleError("genuine pole: coefficient of delta^" + std::to_string(e) + " is " + v.coeff(e).str());
      return v.coeff(0);
    } catch (const TruncationError&) {
      if (attempt == 3) throw;
    }
  }
  throw TruncationError("limit_at_zero exhausted retries");
}

}  // namespace sp4
