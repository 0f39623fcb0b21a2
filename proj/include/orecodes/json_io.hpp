#ifndef ORECODES_JSON_IO_HPP
#define ORECODES_JSON_IO_HPP

#include <json.hpp>

#include "orecodes/codes.hpp"

namespace orecodes {

using json = nlohmann::json;

// Element encodings:
//   prime field         integer
//   extension field     ascending coefficient array (nested for towers)
//   rational function   {"num": [...], "den": [...]} ascending over F_p
json elem_to_json(const Elem& x);
Elem elem_from_json(const FieldPtr& f, const json& j);

// F-side encoding: the base-field encoding in the frobenius kind, the plain
// K encoding in the differential kind (F-elements are K-elements there).
json felem_to_json(const CtxPtr& ctx, const Elem& x);
Elem felem_from_json(const CtxPtr& ctx, const json& j);

json orepoly_to_json(const OrePoly& f);
OrePoly orepoly_from_json(const CtxPtr& ctx, const json& j);

json centralpoly_to_json(const CentralPoly& c);
CentralPoly centralpoly_from_json(const CtxPtr& ctx, const json& j);

json laurent_to_json(const LaurentOre& f);

json matrix_to_json(const CtxPtr& ctx, const Matrix& m);  // row-major, F encodings
json operator_to_json(const LinearOperator& op);
json subspace_to_json(const CtxPtr& ctx, const Subspace& v);
Subspace subspace_from_json(const CtxPtr& ctx, const json& j);

// {"kind","p","e","s","twist","a"}; round-trips bit-exactly.
json context_to_json(const CtxPtr& ctx);
CtxPtr context_from_json(const json& j);
// The descriptor plus derived data (Z coefficients, basis, Gram matrix).
json context_describe(const CtxPtr& ctx);

json homtuple_to_json(const HomTuple& t);
json code_to_json(const CodeBasis& c);

// Shell syntax: extension elements as comma-separated integers ("1,2"),
// rational functions as "num/den" with ascending coefficient lists
// ("0,1/1" is t). Subspace shorthand accepts "0" and "K" in JSON strings.
Elem elem_from_string(const CtxPtr& ctx, const std::string& s);
Subspace subspace_from_json_flexible(const CtxPtr& ctx, const json& j);

}  // namespace orecodes

#endif
