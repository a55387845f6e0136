#pragma once

// JSON schemas:
//   label          1..2g+1 or "inf"
//   branch set     {"g": int, "labels": [label]}      (classes use their representative)
//   characteristic {"top": [bit], "bottom": [bit]}
//   eta-map        [characteristic]
//   U-set          [label], ascending with "inf" last
//   integer matrix row-major [[int]]; integers beyond 64 bits are decimal strings
//   Siegel point   row-major [[[re, im]]]

#include <string>

#include <gmpxx.h>

#include "json.hpp"

#include "hyperu/eta.hpp"
#include "hyperu/symplectic.hpp"
#include "hyperu/theta.hpp"

namespace hyperu {

using Json = nlohmann::ordered_json;

Json encode(Label label);
Json encode(const BranchSet &set);
Json encode(const GBClass &cls);
Json encode(const Characteristic &xi);
Json encode(const EtaMap &eta);
Json encode(const USet &u);
Json encode(const mpz_class &n);
Json encode(const IntMatrix &m);
Json encode(const SpF2Matrix &m);
Json encode(const SiegelPoint &omega);
Json encode(const Complex &c);
Json encode(const EtaReport &report);
Json encode(const CriterionReport &report);
Json encode(const TwoTorsionTable &table);

Label decode_label(const Json &j);
BranchSet decode_branch_set(const Json &j);
GBClass decode_class(const Json &j);
Characteristic decode_characteristic(const Json &j);
EtaMap decode_eta(const Json &j);
USet decode_u_set(int g, const Json &j);
mpz_class decode_integer(const Json &j);
IntMatrix decode_int_matrix(const Json &j);
SiegelPoint decode_siegel(const Json &j);
ComplexVector decode_complex_vector(const Json &j);

/// Parses text, mapping syntax errors onto ErrorCode::invalid_argument.
Json parse_json(const std::string &text);

/// One line per characteristic: code,top,bottom,re,im,abs,vanishes.
std::string table_csv(const TwoTorsionTable &table);

} // namespace hyperu
