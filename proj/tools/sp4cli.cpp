#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sp4/export.hpp"
#include "sp4/gkmod.hpp"
#include "sp4/intertwine.hpp"
#include "sp4/verify.hpp"

using namespace sp4;

namespace {

// Pole and configuration problems; mapped to exit status 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string delta = "0,0";
  std::string lambda = "9/2,5/2";
  std::string jmax = "2";
  std::string nmax;
  std::string kind = "LONG";
  std::string element = "2b1+b2";
  std::string out;
  std::string format = "json";
  bool deep = false;
  long trunc_order = 0;
};

std::pair<std::string, std::string> split_pair(const std::string& s, const char* what) {
  auto c = s.find(',');
  if (c == std::string::npos || s.find(',', c + 1) != std::string::npos)
    throw ConfigError(std::string(what) + " must be two comma-separated values, got '" + s + "'");
  return {s.substr(0, c), s.substr(c + 1)};
}

std::pair<int, int> parse_delta(const std::string& s) {
  auto [a, b] = split_pair(s, "--delta");
  auto bit = [](const std::string& x) {
    if (x != "0" && x != "1") throw ConfigError("--delta entries must be 0 or 1, got '" + x + "'");
    return x == "1" ? 1 : 0;
  };
  return {bit(a), bit(b)};
}

std::optional<RationalPair> parse_rational_lambda(const std::string& s) {
  auto [a, b] = split_pair(s, "--lambda");
  try {
    return RationalPair{parse_rational(a), parse_rational(b)};
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

std::pair<Complex, Complex> parse_complex_lambda(const std::string& s) {
  auto [a, b] = split_pair(s, "--lambda");
  return {parse_complex(a), parse_complex(b)};
}

HalfInt parse_bound(const std::string& s, const char* what) {
  try {
    HalfInt h = HalfInt::parse(s);
    if (h < HalfInt(0)) throw ConfigError(std::string(what) + " must be nonnegative");
    return h;
  } catch (const ParseError& e) {
    throw ConfigError(std::string(what) + ": " + e.what());
  }
}

HalfInt nmax_or(const Options& o, HalfInt jmax) { return o.nmax.empty() ? jmax : parse_bound(o.nmax, "--nmax"); }

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw ConfigError("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

BlockMatrix<Exact> exact_block(OperatorKind kind, HalfInt j, HalfInt n, const Character<Exact>& chi, long trunc) {
  switch (kind) {
    case OperatorKind::LONG: return long_operator_product<Exact>(j, n, chi);
    case OperatorKind::LONG_GENFUN: return long_operator_genfun(j, n, chi, trunc);
    default: return simple_operator<Exact>(kind, j, n, chi);
  }
}

int run_compute(const Options& o) {
  OperatorKind kind = parse_kind(o.kind);
  auto [d1, d2] = parse_delta(o.delta);
  HalfInt jmax = parse_bound(o.jmax, "--jmax"), nmax = nmax_or(o, jmax);
  if (o.format != "json" && o.format != "csv") throw ConfigError("--format must be json or csv");
  if (kind == OperatorKind::LONG_GENFUN && d1 != d2) throw ConfigError("LONG_GENFUN needs delta (0,0) or (1,1)");
  std::vector<KType> kts = ktypes(d1, d2, jmax, nmax);
  Output out(o.out);
  std::ostream& os = out.stream();

  if (auto lam = parse_rational_lambda(o.lambda)) {
    Character<Exact> chi{d1, d2, Exact(lam->first), Exact(lam->second)};
    nlohmann::json all = nlohmann::json::array();
    if (o.format == "csv") os << csv_header();
    for (const KType& kt : kts) {
      BlockRecord rec{kind, d1, d2, lam->first, lam->second, exact_block(kind, kt.j, kt.n, chi, o.trunc_order)};
      if (o.format == "csv")
        os << to_csv_rows(rec);
      else
        all.push_back(to_json(rec));
    }
    if (o.format == "json") os << all.dump(1) << "\n";
    return 0;
  }

  if (kind == OperatorKind::LONG_GENFUN) throw ConfigError("LONG_GENFUN needs a rational lambda");
  if (o.format == "csv") throw ConfigError("complex lambda supports json output only");
  auto [l1, l2] = parse_complex_lambda(o.lambda);
  Character<Complex> chi{d1, d2, l1, l2};
  nlohmann::json all = nlohmann::json::array();
  for (const KType& kt : kts) {
    BlockMatrix<Complex> b = kind == OperatorKind::LONG ? long_operator_product<Complex>(kt.j, kt.n, chi)
                                                        : simple_operator<Complex>(kind, kt.j, kt.n, chi);
    all.push_back(complex_block_json(b, kind, d1, d2, l1, l2));
  }
  os << all.dump(1) << "\n";
  return 0;
}

int run_action(const Options& o) {
  auto [d1, d2] = parse_delta(o.delta);
  auto lam = parse_rational_lambda(o.lambda);
  if (!lam) throw ConfigError("action needs a rational lambda");
  HalfInt jmax = parse_bound(o.jmax, "--jmax"), nmax = nmax_or(o, jmax);
  GKModule<Exact> m(Character<Exact>{d1, d2, Exact(lam->first), Exact(lam->second)});
  Output out(o.out);
  out.stream() << action_json(m, parse_element(o.element), jmax, nmax).dump(1) << "\n";
  return 0;
}

int run_ktypes(const Options& o) {
  auto [d1, d2] = parse_delta(o.delta);
  HalfInt jmax = parse_bound(o.jmax, "--jmax"), nmax = nmax_or(o, jmax);
  Output out(o.out);
  std::ostream& os = out.stream();
  os << std::left << std::setw(6) << "j" << std::setw(6) << "n" << std::setw(6) << "mult" << "M-set\n";
  for (const KType& kt : ktypes(d1, d2, jmax, nmax)) {
    std::string ms;
    for (HalfInt m : kt.ms) ms += (ms.empty() ? "" : " ") + m.str();
    os << std::setw(6) << kt.j.str() << std::setw(6) << kt.n.str() << std::setw(6) << kt.ms.size() << ms << "\n";
  }
  return 0;
}

int run_mellin(const Options& o) {
  Output out(o.out);
  std::ostream& os = out.stream();
  bool ok = true;
  os << std::left << std::setw(6) << "z" << std::setw(6) << "m" << std::setw(14) << "error" << "status\n";
  for (double z : {1.0, 1.5, 2.0, 2.5})
    for (long tm : {0, 1, 2, 3}) {
      double err = 0;
      bool pass = mellin_numeric_check(z, HalfInt::from_twice(tm), 1e-8, &err);
      ok = ok && pass;
      std::ostringstream e;
      e << std::scientific << std::setprecision(2) << err;
      os << std::setw(6) << z << std::setw(6) << HalfInt::from_twice(tm).str() << std::setw(14) << e.str() << (pass ? "ok" : "FAIL") << "\n";
    }
  return ok ? 0 : 1;
}

int run_verify(const Options& o) {
  auto [d1, d2] = parse_delta(o.delta);
  auto lam = parse_rational_lambda(o.lambda);
  if (!lam) throw ConfigError("verify needs a rational lambda");
  long j = parse_bound(o.jmax, "--jmax").as_integer();
  long deep = o.deep ? std::max(j, 4L) : j;
  std::uint64_t seed = seed_from_env();
  std::vector<Rational> zs{Rational(3, 2), Rational(5, 2), Rational(7, 2), Rational(9, 2), Rational(11, 2)};
  std::vector<Rational> zi{Rational(1, 3), Rational(5, 2), Rational(7, 2)};
  std::vector<RationalPair> lams{*lam};

  std::vector<std::future<SuiteResult>> jobs;
  auto launch = [&](auto f) { jobs.push_back(std::async(std::launch::async, f)); };
  launch([=] { return check_mn_inverse(HalfInt(o.deep ? std::max(j, 6L) : j)); });
  launch([=] { return check_closed_form(deep, zs); });
  launch([=] { return check_inversion(deep, deep, zi); });
  launch([=] { return check_hg(j, zs); });
  launch([=] { return check_parity(HalfInt(deep), zs); });
  launch([=] { return check_mellin(); });
  if (d1 == d2) launch([=] { return check_theorem(j, j, lams, {d1}); });
  launch([=] { return check_casimir(*lam, d1, d2, HalfInt(deep), HalfInt(deep)); });
  launch([=] { return check_bracket(o.deep ? 20 : 5, HalfInt(2), d1, d2, *lam, seed); });
  launch([=] { return check_wigner(seed); });
  launch([=] { return check_iwasawa(seed); });

  Output out(o.out);
  std::ostream& os = out.stream();
  bool ok = true;
  os << std::left << std::setw(40) << "suite" << std::setw(9) << "cases" << std::setw(9) << "failed" << std::setw(10) << "seconds" << "status\n";
  for (auto& f : jobs) {
    SuiteResult r = f.get();
    ok = ok && r.ok();
    std::ostringstream t;
    t << std::fixed << std::setprecision(2) << r.seconds;
    os << std::setw(40) << r.name << std::setw(9) << r.cases << std::setw(9) << r.failures << std::setw(10) << t.str() << (r.ok() ? "ok" : "FAIL") << "\n";
    if (!r.note.empty()) os << "  " << r.note << "\n";
    if (!r.first_failure.empty()) os << "  first failure: " << r.first_failure << "\n";
  }
  if (!ok) os << "SP4_SEED=" << seed << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(g,K)-module action and intertwining operators for Sp(4,R) principal series"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--delta", o.delta, "induction parameter d1,d2")->capture_default_str();
    c->add_option("--jmax", o.jmax, "largest j")->capture_default_str();
    c->add_option("--nmax", o.nmax, "largest |n| (defaults to --jmax)");
    c->add_option("--out", o.out, "output file (stdout when omitted)");
  };

  auto* compute = app.add_subcommand("compute", "operator blocks for every K-type within the bounds");
  common(compute);
  compute->add_option("--lambda", o.lambda, "p/q,p/q or re+imi,re+imi")->capture_default_str();
  compute->add_option("--kind", o.kind, "A1|A2|A3|A4|LONG|LONG_GENFUN")->capture_default_str();
  compute->add_option("--format", o.format, "json|csv")->capture_default_str();
  compute->add_option("--trunc-order", o.trunc_order, "Laurent truncation order for LONG_GENFUN (0 = automatic)");

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  common(verify);
  verify->add_option("--lambda", o.lambda, "p/q,p/q")->capture_default_str();
  verify->add_flag("--deep", o.deep, "raise the bounds to j <= 4 (j <= 6 for M N = I)");

  auto* action = app.add_subcommand("action", "matrix of dl(X) on the basis within the bounds, as JSON");
  common(action);
  action->add_option("--lambda", o.lambda, "p/q,p/q")->capture_default_str();
  action->add_option("--element", o.element, "U0..U3 or a noncompact root: 2b1+b2, b1+b2, b2, -(2b1+b2), -(b1+b2), -b2")
      ->capture_default_str();

  auto* kt = app.add_subcommand("ktypes", "K-types and multiplicities");
  common(kt);

  auto* mellin = app.add_subcommand("mellin-check", "quadrature against Q(z,m) on the standard grid");
  mellin->add_option("--out", o.out, "output file (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);
  if (verify->parsed() && verify->count("--jmax") == 0) o.jmax = "3";
  try {
    if (compute->parsed()) return run_compute(o);
    if (verify->parsed()) return run_verify(o);
    if (action->parsed()) return run_action(o);
    if (kt->parsed()) return run_ktypes(o);
    return run_mellin(o);
  } catch (const PoleError& e) {
    std::cerr << "pole: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "config: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "config: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
