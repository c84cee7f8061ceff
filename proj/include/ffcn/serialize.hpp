#ifndef FFCN_SERIALIZE_HPP
#define FFCN_SERIALIZE_HPP

#include <cstdint>
#include <string>

#include "json.hpp"

#include "ffcn/rational.hpp"
#include "ffcn/theta.hpp"

namespace ffcn {

// Canonical output conventions, shared by the CLI and the golden-file
// tests.  JSON objects carry alphabetically sorted keys (the default map
// backing of nlohmann::json), rationals are {"den": "...", "num": "..."}
// with decimal strings, and documents are dump(2) plus a trailing newline,
// so equal tables serialize to equal bytes.

using Json = nlohmann::json;

inline Json rat_json(const Rat& r) {
  return Json{{"num", rat_num(r).str()}, {"den", rat_den(r).str()}};
}

inline std::string json_dump(const Json& j) { return j.dump(2) + "\n"; }

inline const char* theta_kind_name(ThetaKind k) {
  return k == ThetaKind::CmMass ? "theta-o" : "theta-lambda";
}

inline Json levels_json(const ThetaLevels& tl) {
  return Json{{"frak_d", tl.frak_d.str()},   {"frak_n", tl.frak_n.str()},
              {"d_plus", tl.d_plus.str()},   {"d_minus", tl.d_minus.str()},
              {"n_plus", tl.n_plus.str()},   {"n_minus", tl.n_minus.str()}};
}

// Table as JSON: the constant term is the first coefficient row, with the
// literal index "0"; all other rows follow in canonical index order.
inline Json table_json(const FourierTable& t, std::uint64_t seed) {
  Json coeffs = Json::array();
  {
    Json row;
    row["index"] = "0";
    row["num"] = rat_num(t.constant_term).str();
    row["den"] = rat_den(t.constant_term).str();
    coeffs.push_back(row);
  }
  for (const auto& [idx, val] : t.coefficients) {
    Json row;
    row["index"] = idx.str();
    row["num"] = rat_num(val).str();
    row["den"] = rat_den(val).str();
    coeffs.push_back(row);
  }
  Json out;
  out["command"] = theta_kind_name(t.kind);
  out["q"] = t.q;
  out["levels"] = levels_json(t.levels);
  out["max_deg"] = t.max_deg;
  out["seed"] = seed;
  out["coefficients"] = coeffs;
  return out;
}

// Table as CSV: '#' metadata lines, a fixed header, then one row per
// coefficient with the constant term first (index "0").
inline std::string table_csv(const FourierTable& t, std::uint64_t seed) {
  std::string out;
  out += std::string("# command: ") + theta_kind_name(t.kind) + "\n";
  out += "# q: " + std::to_string(t.q) + "\n";
  out += "# frak_d: " + t.levels.frak_d.str() + "\n";
  out += "# frak_n: " + t.levels.frak_n.str() + "\n";
  out += "# d_plus: " + t.levels.d_plus.str() + "\n";
  out += "# d_minus: " + t.levels.d_minus.str() + "\n";
  out += "# n_plus: " + t.levels.n_plus.str() + "\n";
  out += "# n_minus: " + t.levels.n_minus.str() + "\n";
  out += "# max_deg: " + std::to_string(t.max_deg) + "\n";
  out += "# seed: " + std::to_string(seed) + "\n";
  out += "index,numerator,denominator\n";
  out += "0," + rat_num(t.constant_term).str() + "," +
         rat_den(t.constant_term).str() + "\n";
  for (const auto& [idx, val] : t.coefficients) {
    out += idx.str() + "," + rat_num(val).str() + "," + rat_den(val).str() +
           "\n";
  }
  return out;
}

}  // namespace ffcn

#endif  // FFCN_SERIALIZE_HPP
