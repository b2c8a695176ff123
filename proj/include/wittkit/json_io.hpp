#pragma once

#include <json.hpp>

#include "wittkit/almkvist.hpp"
#include "wittkit/linsys.hpp"
#include "wittkit/recseq.hpp"
#include "wittkit/torified.hpp"
#include "wittkit/witt.hpp"
#include "wittkit/zetapoly.hpp"

namespace wk::io {

using json = nlohmann::json;

// Scalars travel as JSON integers when they are integral and fit in 64 bits,
// otherwise as strings "p" or "p/q". Readers accept both; floats are rejected.
json to_json(const Scalar& x);
json to_json(const Integer& x);
json to_json(const std::vector<Scalar>& xs);
json to_json(const std::vector<Integer>& xs);
json to_json(const Poly& p);
json to_json(const TruncSeries& s);
json to_json(const RatFunc& r);
json to_json(const Matrix& m);
json to_json(const WittElement& p);
json to_json(const GhostVector& g);
json to_json(const RationalityReport& r);
json to_json(const RecSeq& s);
json to_json(const TensorDecomp& d);
json to_json(const EndoClass& a);
json to_json(const VirtualEndo& a);
json to_json(const LinSys& s);
json to_json(const TransferFunction& t);
json to_json(const GrothClass& x);
json to_json(const F1Zeta& z);
json to_json(const ComplexApprox& r);
json to_json(const ZetaPolyResult& r);

/// 15 significant digits, -0 folded to 0.
json real_to_json(double x);

Scalar scalar_from_json(const json& j);
Integer integer_from_json(const json& j);
std::vector<Scalar> vector_from_json(const json& j);
std::vector<Integer> integers_from_json(const json& j);
/// Coefficient array (lowest degree first) or a literal such as "1-2t+t^2".
Poly poly_from_json(const json& j, char var = 't');
/// {"order": N, "coeffs": [...]}; a bare array keeps its own length as order + 1.
TruncSeries series_from_json(const json& j);
/// {"num": [...], "den": [...]} or a literal.
RatFunc ratfunc_from_json(const json& j, char var = 't');
Matrix matrix_from_json(const json& j);
/// A literal or {"num","den"} (expanded to `order`), or a series object / array.
WittElement witt_from_json(const json& j, int order);
GhostVector ghost_from_json(const json& j);
/// {"recurrence": [...], "initial": [...], "ring"?: "Z"|"Q"}
RecSeq recseq_from_json(const json& j);
/// {"matrix": [[...]]} or a bare matrix.
EndoClass endo_from_json(const json& j);
/// {"plus": endo, "minus"?: endo} or a single endo.
VirtualEndo virtual_from_json(const json& j);
/// {"M", "v", "c", "ring"?}
LinSys linsys_from_json(const json& j);
/// {"num", "den"} in z.
TransferFunction transfer_from_json(const json& j);
/// {"basis": "T"|"L", "coeffs": [...]}, a bare T-basis array, or "T"/"L"/"1".
GrothClass groth_from_json(const json& j);
ComplexApprox root_from_json(const json& j);

/// Member `key` of an object, or DomainError naming the missing argument.
const json& require(const json& obj, const char* key);

}  // namespace wk::io
