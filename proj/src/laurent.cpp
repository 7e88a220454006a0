#include "sp4/laurent.hpp"

namespace sp4 {

bool partial_sum_check(const std::vector<Exact>& a, const std::vector<Exact>& b, const Exact& z, long m) {
  Exact lhs(0), term(1);
  for (long k = 0; k <= m; ++k) {
    lhs += term;
    Exact num(1), den(k + 1);
    for (const Exact& x : a) num *= x + Exact(k);
    for (const Exact& y : b) {
      Exact f = y + Exact(k);
      if (f.is_zero() && k < m) throw PoleError("partial sum: lower parameter vanishes");
      den *= f;
    }
    if (k < m) term = term * num * z / den;
  }
  // (a)_m z^m / ((b)_m m!) * F(-m, 1, 1-m-b; 1-m-a; (-1)^{p+q+1}/z)
  Exact lead(1);
  for (const Exact& x : a) lead *= pochhammer(x, m);
  for (const Exact& y : b) lead /= pochhammer(y, m);
  for (long k = 0; k < m; ++k) lead *= z;
  lead /= Exact(factorial(m));
  std::vector<Exact> top{Exact(-m), Exact(1)};
  for (const Exact& y : b) top.push_back(Exact(1 - m) - y);
  std::vector<Exact> bot;
  for (const Exact& x : a) bot.push_back(Exact(1 - m) - x);
  long p = static_cast<long>(a.size()), q = static_cast<long>(b.size());
  Exact arg = ((p + q + 1) % 2 ? Exact(-1) : Exact(1)) / z;
  Exact rhs = lead * hyp_pfq_terminating(top, bot, arg);
  return lhs == rhs;
}

}  // namespace sp4
