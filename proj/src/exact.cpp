#include "sp4/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

namespace sp4 {

namespace {

bool term_less(const Exact::Term& a, std::uint64_t r, int p) {
  return a.r != r ? a.r < r : a.p < p;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t r) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= r; ++q) {
    if (r % q == 0) {
      out.push_back(q);
      while (r % q == 0) r /= q;
    }
  }
  if (r > 1) out.push_back(r);
  return out;
}

std::uint64_t to_u64(const mpz_class& z, const char* what) {
  if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64) throw DomainError(std::string(what) + ": radicand exceeds 64 bits");
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, z.get_mpz_t());
  return v;
}

mpz_class from_u64(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return z;
}

Exact::Term multiply(const Exact::Term& a, const Exact::Term& b) {
  Exact::Term t;
  t.re = a.re * b.re - a.im * b.im;
  t.im = a.re * b.im + a.im * b.re;
  std::uint64_t g = std::gcd(a.r, b.r);
  unsigned __int128 r = static_cast<unsigned __int128>(a.r / g) * (b.r / g);
  if (r > ~std::uint64_t{0}) throw DomainError("radicand exceeds 64 bits");
  t.r = static_cast<std::uint64_t>(r);
  if (g != 1) {
    t.re *= from_u64(g);
    t.im *= from_u64(g);
  }
  t.p = a.p + b.p;
  return t;
}

}  // namespace

HalfInt HalfInt::parse(const std::string& s) {
  Rational q = parse_rational(s);
  Rational t = 2 * q;
  if (t.get_den() != 1) throw ParseError("not a half-integer: " + s);
  return from_twice(t.get_num().get_si());
}

long HalfInt::as_integer() const {
  if (!is_integer()) throw DomainError("half-integer " + str() + " used as integer");
  return twice / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

void squarefree_split(const mpz_class& n, mpz_class& s, mpz_class& r) {
  if (n <= 0) throw DomainError("squarefree_split of nonpositive value");
  mpz_class rem = n;
  s = 1;
  r = 1;
  for (unsigned long p = 2;; p += (p == 2 ? 1 : 2)) {
    mpz_class pp = p;
    if (pp * pp * pp > rem) break;
    int e = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      rem /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) s *= p;
    if (e % 2) r *= p;
  }
  // rem has at most two prime factors, all larger than those removed
  if (rem > 1) {
    if (mpz_perfect_square_p(rem.get_mpz_t())) {
      mpz_class root;
      mpz_sqrt(root.get_mpz_t(), rem.get_mpz_t());
      s *= root;
    } else {
      r *= rem;
    }
  }
}

mpz_class factorial(long n) {
  if (n < 0) throw PoleError("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Exact::Exact(const Rational& q) {
  if (q != 0) terms_.push_back(Term{q, 0, 1, 0});
}

Exact::Exact(const Rational& re, const Rational& im) {
  if (re != 0 || im != 0) terms_.push_back(Term{re, im, 1, 0});
}

Exact Exact::i() { return Exact(Rational(0), Rational(1)); }

Exact Exact::pi_power(int p) {
  Exact x;
  x.terms_.push_back(Term{1, 0, 1, p});
  return x;
}

Exact Exact::sqrt(const Rational& q) {
  if (q == 0) return Exact();
  Rational a = abs(q);
  mpz_class prod = a.get_num() * a.get_den();
  mpz_class s, r;
  squarefree_split(prod, s, r);
  Rational c(s, a.get_den());
  c.canonicalize();
  Exact x;
  x.terms_.push_back(q > 0 ? Term{c, 0, to_u64(r, "sqrt"), 0} : Term{0, c, to_u64(r, "sqrt"), 0});
  return x;
}

void Exact::add_term(Term t) {
  if (t.re == 0 && t.im == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t, [](const Term& a, const Term& b) { return term_less(a, b.r, b.p); });
  if (it != terms_.end() && it->r == t.r && it->p == t.p) {
    it->re += t.re;
    it->im += t.im;
    if (it->re == 0 && it->im == 0) terms_.erase(it);
  } else {
    terms_.insert(it, std::move(t));
  }
}

bool Exact::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].r == 1 && terms_[0].p == 0 && terms_[0].im == 0);
}

bool Exact::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.im == 0; });
}

Rational Exact::to_rational() const {
  if (!is_rational()) throw DomainError("not a rational: " + str());
  return terms_.empty() ? Rational(0) : terms_[0].re;
}

Complex Exact::to_complex() const {
  Complex acc = 0;
  for (const Term& t : terms_) {
    double mag = std::sqrt(static_cast<double>(t.r)) * std::pow(std::numbers::pi, t.p / 2.0);
    acc += Complex(t.re.get_d(), t.im.get_d()) * mag;
  }
  return acc;
}

Exact Exact::conj() const {
  Exact x = *this;
  for (Term& t : x.terms_) t.im = -t.im;
  return x;
}

Exact Exact::inverse() const {
  if (terms_.empty()) throw PoleError("division by exact zero");
  int p = terms_[0].p;
  std::vector<std::uint64_t> primes;
  for (const Term& t : terms_) {
    if (t.p != p) throw DomainError("inverse of a sum with mixed pi powers: " + str());
    for (std::uint64_t q : prime_factors(t.r))
      if (std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);
  }
  Exact cur = *this * pi_power(-p);
  Exact num(1);
  for (std::uint64_t q : primes) {
    Exact c = cur;
    for (Term& t : c.terms_)
      if (t.r % q == 0) {
        t.re = -t.re;
        t.im = -t.im;
      }
    num *= c;
    cur *= c;
  }
  if (!cur.is_single_term() || cur.terms_[0].r != 1 || cur.terms_[0].p != 0) throw DomainError("radical elimination failed");
  const Rational& a = cur.terms_[0].re;
  const Rational& b = cur.terms_[0].im;
  Rational n2 = a * a + b * b;
  return num * Exact(a / n2, -b / n2) * pi_power(-p);
}

Exact Exact::operator-() const {
  Exact x = *this;
  for (Term& t : x.terms_) {
    t.re = -t.re;
    t.im = -t.im;
  }
  return x;
}

Exact& Exact::operator+=(const Exact& o) {
  for (const Term& t : o.terms_) add_term(t);
  return *this;
}

Exact& Exact::operator-=(const Exact& o) { return *this += -o; }

Exact& Exact::operator*=(const Exact& o) {
  if (terms_.empty() || o.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  Exact out;
  if (terms_.size() == 1 && o.terms_.size() == 1) {
    out.terms_.push_back(multiply(terms_[0], o.terms_[0]));
    if (out.terms_[0].re == 0 && out.terms_[0].im == 0) out.terms_.clear();
  } else {
    for (const Term& a : terms_)
      for (const Term& b : o.terms_) out.add_term(multiply(a, b));
  }
  *this = std::move(out);
  return *this;
}

bool operator==(const Exact& a, const Exact& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    const auto& x = a.terms_[k];
    const auto& y = b.terms_[k];
    if (x.r != y.r || x.p != y.p || x.re != y.re || x.im != y.im) return false;
  }
  return true;
}

std::string Exact::str() const {
  if (terms_.empty()) return "0/1*sqrt(1)*pi^(0/2)";
  std::string out;
  auto tail = [](const Term& t) { return "sqrt(" + std::to_string(t.r) + ")*pi^(" + std::to_string(t.p) + "/2)"; };
  for (const Term& t : terms_) {
    if (t.re != 0) {
      if (!out.empty()) out += " + ";
      out += rational_str(t.re) + "*" + tail(t);
    }
    if (t.im != 0) {
      if (!out.empty()) out += " + ";
      out += rational_str(t.im) + "*i*" + tail(t);
    }
  }
  return out;
}

Exact Exact::parse(const std::string& s) {
  Exact x;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(" + ", pos);
    std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    bool imag = false;
    std::uint64_t r = 1;
    int p = 0;
    std::string coef = tok;
    std::size_t star = tok.find('*');
    if (star != std::string::npos) {
      coef = tok.substr(0, star);
      std::string rest = tok.substr(star + 1);
      if (rest.rfind("i*", 0) == 0) {
        imag = true;
        rest = rest.substr(2);
      }
      unsigned long long rr = 0;
      int pp = 0;
      char c1 = 0;
      std::istringstream in(rest);
      std::string head(5, '\0');
      in.read(head.data(), 5);
      if (head != "sqrt(" || !(in >> rr) || !in.get(c1) || c1 != ')') throw ParseError("bad exact term: " + tok);
      std::string mid(4, '\0');
      in.read(mid.data(), 4);
      if (mid != "*pi^" || !in.get(c1) || c1 != '(' || !(in >> pp)) throw ParseError("bad exact term: " + tok);
      std::string end;
      in >> end;
      if (end != "/2)") throw ParseError("bad exact term: " + tok);
      mpz_class rz = static_cast<unsigned long>(rr), sq, rf;
      squarefree_split(rz, sq, rf);
      if (sq != 1) throw ParseError("radicand not squarefree: " + tok);
      r = rr;
      p = pp;
    } else if (tok == "i") {
      coef = "1";
      imag = true;
    }
    Rational q = parse_rational(coef);
    x.add_term(imag ? Term{0, q, r, p} : Term{q, 0, r, p});
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return x;
}

std::ostream& operator<<(std::ostream& os, const Exact& x) { return os << x.str(); }

Exact gamma_half(HalfInt a) {
  if (a.is_integer()) {
    long n = a.as_integer();
    if (n <= 0) throw PoleError("gamma pole at " + a.str());
    return Exact(factorial(n - 1));
  }
  long k = (a.twice - 1) / 2;  // a = 1/2 + k
  return pochhammer(Exact(Rational(1, 2)), k) * Exact::pi_power(1);
}

Complex cgamma(Complex z) {
  static const double g = 7;
  static const double c[] = {0.99999999999980993, 676.5203681218851, -1259.1392167224028,
                             771.32342877765313, -176.61502916214059, 12.507343278686905,
                             -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.real() < 0.5) {
    if (z.imag() == 0 && z.real() == std::floor(z.real())) throw PoleError("gamma pole at nonpositive integer");
    return std::numbers::pi / (std::sin(std::numbers::pi * z) * cgamma(1.0 - z));
  }
  z -= 1.0;
  Complex x = c[0];
  for (int k = 1; k < 9; ++k) x += c[k] / (z + static_cast<double>(k));
  Complex t = z + g + 0.5;
  return std::sqrt(2 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace sp4
