#pragma once

#include <string>

#include "json.hpp"
#include "sp4/intertwine.hpp"

namespace sp4 {

// A computed block together with the parameters that produced it.
struct BlockRecord {
  OperatorKind kind = OperatorKind::LONG;
  int d1 = 0, d2 = 0;
  Rational l1, l2;
  BlockMatrix<Exact> block;
};

// {"ktype":[j,n], "delta":[d1,d2], "lambda":["p/q","p/q"], "kind":..., "rows":[...], "cols":[...],
//  "entries":[[scalar,...],...], "gauge":[{"z":"p/q","power":k},...]}
nlohmann::json to_json(const BlockRecord& r);
BlockRecord block_from_json(const nlohmann::json& j);

// One line per entry: j,n,row,col,scalar
std::string csv_header();
std::string to_csv_rows(const BlockRecord& r);

// Blocks computed at a complex parameter, gauge factors multiplied in.
nlohmann::json complex_block_json(const BlockMatrix<Complex>& b, OperatorKind kind, int d1, int d2, const Complex& l1,
                                  const Complex& l2);
std::string complex_str(const Complex& z);
// Inverse of complex_str; also accepts a bare real part.
Complex parse_complex(const std::string& s);

// U0..U3 or a noncompact root name such as "2b1+b2" or "-(b1+b2)".
GMat<Exact> parse_element(const std::string& s);
// [{"from":[j,n,m1,m2], "to":[j,n,m1,m2], "coeff":scalar}, ...] with both ends inside the bounds.
nlohmann::json action_json(const GKModule<Exact>& m, const GMat<Exact>& x, HalfInt jmax, HalfInt nmax);

}  // namespace sp4
