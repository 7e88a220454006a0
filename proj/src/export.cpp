#include "sp4/export.hpp"

#include <iomanip>
#include <regex>
#include <sstream>

namespace sp4 {

using nlohmann::json;

namespace {

json half_list(const std::vector<HalfInt>& v) {
  json a = json::array();
  for (HalfInt h : v) a.push_back(h.str());
  return a;
}

std::vector<HalfInt> parse_half_list(const json& a) {
  std::vector<HalfInt> out;
  for (const auto& x : a) out.push_back(HalfInt::parse(x.get<std::string>()));
  return out;
}

}  // namespace

json to_json(const BlockRecord& r) {
  const BlockMatrix<Exact>& b = r.block;
  json out;
  out["ktype"] = {b.j.str(), b.n.str()};
  out["delta"] = {r.d1, r.d2};
  out["lambda"] = {rational_str(r.l1), rational_str(r.l2)};
  out["kind"] = name(r.kind);
  out["rows"] = half_list(b.rows);
  out["cols"] = half_list(b.cols);
  json e = json::array();
  for (Eigen::Index i = 0; i < b.entries.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < b.entries.cols(); ++k) row.push_back(b.entries(i, k).str());
    e.push_back(row);
  }
  out["entries"] = e;
  json g = json::array();
  for (const auto& f : b.gauge) g.push_back({{"z", rational_str(f.z.to_rational())}, {"power", f.power}});
  out["gauge"] = g;
  return out;
}

BlockRecord block_from_json(const json& j) {
  try {
    BlockRecord r;
    r.kind = parse_kind(j.at("kind").get<std::string>());
    r.d1 = j.at("delta").at(0).get<int>();
    r.d2 = j.at("delta").at(1).get<int>();
    r.l1 = parse_rational(j.at("lambda").at(0).get<std::string>());
    r.l2 = parse_rational(j.at("lambda").at(1).get<std::string>());
    BlockMatrix<Exact>& b = r.block;
    b.j = HalfInt::parse(j.at("ktype").at(0).get<std::string>());
    b.n = HalfInt::parse(j.at("ktype").at(1).get<std::string>());
    b.rows = parse_half_list(j.at("rows"));
    b.cols = parse_half_list(j.at("cols"));
    b.entries.resize(static_cast<Eigen::Index>(b.rows.size()), static_cast<Eigen::Index>(b.cols.size()));
    const json& e = j.at("entries");
    if (e.size() != b.rows.size()) throw ParseError("entry grid has the wrong number of rows");
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
      if (e[i].size() != b.cols.size()) throw ParseError("entry grid has the wrong number of columns");
      for (std::size_t k = 0; k < b.cols.size(); ++k)
        b.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = Exact::parse(e[i][k].get<std::string>());
    }
    if (j.contains("gauge"))
      for (const auto& f : j.at("gauge"))
        b.gauge.push_back({Exact(parse_rational(f.at("z").get<std::string>())), f.at("power").get<int>()});
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("block json: ") + e.what());
  }
}

std::string csv_header() { return "kind,j,n,row,col,entry\n"; }

std::string to_csv_rows(const BlockRecord& r) {
  std::ostringstream os;
  const BlockMatrix<Exact>& b = r.block;
  for (Eigen::Index i = 0; i < b.entries.rows(); ++i)
    for (Eigen::Index k = 0; k < b.entries.cols(); ++k)
      os << name(r.kind) << ',' << b.j.str() << ',' << b.n.str() << ',' << b.rows[i].str() << ',' << b.cols[k].str()
         << ",\"" << b.entries(i, k).str() << "\"\n";
  return os.str();
}

std::string complex_str(const Complex& z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::fabs(z.imag()) << "i";
  return os.str();
}

Complex parse_complex(const std::string& s) {
  static const std::regex full(R"(^\s*([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?)\s*([-+])\s*([0-9.]+(?:[eE][-+]?[0-9]+)?)?\s*i\s*$)");
  static const std::regex real(R"(^\s*([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?)\s*$)");
  std::smatch m;
  try {
    if (std::regex_match(s, m, full)) {
      double im = m[3].matched ? std::stod(m[3].str()) : 1.0;
      return {std::stod(m[1].str()), m[2].str() == "-" ? -im : im};
    }
    if (std::regex_match(s, m, real)) return {std::stod(m[1].str()), 0.0};
  } catch (const std::exception&) {
  }
  throw ParseError("bad complex number '" + s + "', expected re+imi");
}

json complex_block_json(const BlockMatrix<Complex>& b, OperatorKind kind, int d1, int d2, const Complex& l1,
                        const Complex& l2) {
  json out;
  out["ktype"] = {b.j.str(), b.n.str()};
  out["delta"] = {d1, d2};
  out["lambda"] = {complex_str(l1), complex_str(l2)};
  out["kind"] = name(kind);
  out["rows"] = half_list(b.rows);
  out["cols"] = half_list(b.cols);
  Eigen::MatrixXcd m = materialize(b);
  json e = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_str(m(i, k)));
    e.push_back(row);
  }
  out["entries"] = e;
  return out;
}

GMat<Exact> parse_element(const std::string& s) {
  auto u = u2_generators();
  for (int i = 0; i < 4; ++i)
    if (s == "U" + std::to_string(i)) return u[static_cast<std::size_t>(i)];
  for (NcRoot b : kNcRoots)
    if (s == name(b)) return u_vector(b);
  throw ParseError("unknown algebra element '" + s + "'");
}

json action_json(const GKModule<Exact>& m, const GMat<Exact>& x, HalfInt jmax, HalfInt nmax) {
  auto index = [](const WignerIndex& w) { return json{w.j.str(), w.n.str(), w.m1.str(), w.m2.str()}; };
  json out = json::array();
  for (const WignerIndex& w : basis(m.character().d1, m.character().d2, jmax, nmax)) {
    LinComb<Exact> image = m.dl(x, LinComb<Exact>::unit(w));
    for (const auto& [t, c] : image.terms()) {
      if (jmax < t.j || nmax < t.n || t.n < -nmax) continue;
      out.push_back({{"from", index(w)}, {"to", index(t)}, {"coeff", c.str()}});
    }
  }
  return out;
}

}  // namespace sp4
