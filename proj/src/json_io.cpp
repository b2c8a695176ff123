#include "wittkit/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "wittkit/errors.hpp"
#include "wittkit/expr.hpp"

namespace wk::io {

namespace {

bool fits_int64(const Integer& z) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return lo <= z && z <= hi;
}

json ring_json(Ring r) { return std::string(ring_name(r)); }

Ring ring_from(const json& obj, Ring fallback) {
  if (!obj.contains("ring")) return fallback;
  if (!obj["ring"].is_string()) throw DomainError("\"ring\" must be \"Z\" or \"Q\"");
  return parse_ring(obj["ring"].get<std::string>());
}

void expect_array(const json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be a JSON array");
}

}  // namespace

const json& require(const json& obj, const char* key) {
  if (!obj.is_object()) throw DomainError("arguments must be a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw DomainError(std::string("missing argument \"") + key + "\"");
  return *it;
}

json to_json(const Integer& x) {
  if (fits_int64(x)) return static_cast<std::int64_t>(std::stoll(x.get_str()));
  return x.get_str();
}

json to_json(const Scalar& x) {
  if (is_integer(x)) return to_json(Integer(x.get_num()));
  return to_string(x);
}

json to_json(const std::vector<Scalar>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

json to_json(const std::vector<Integer>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

json to_json(const Poly& p) { return to_json(p.coeffs()); }

json to_json(const TruncSeries& s) { return {{"order", s.order()}, {"coeffs", to_json(s.coeffs())}}; }

json to_json(const RatFunc& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

json to_json(const Matrix& m) {
  json a = json::array();
  for (int i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

json to_json(const WittElement& p) {
  return {{"order", p.order()}, {"coeffs", to_json(p.series().coeffs())}, {"ring", ring_json(p.ring())}};
}

json to_json(const GhostVector& g) { return to_json(g.components()); }

json to_json(const RationalityReport& r) {
  json j = {{"order", r.order}, {"ranks", r.ranks}, {"stabilized", r.stabilized}, {"stable_rank", r.stable_rank}};
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return j;
}

json to_json(const RecSeq& s) {
  return {{"recurrence", to_json(s.recurrence())}, {"initial", to_json(s.initial())}, {"ring", ring_json(s.ring())}};
}

json to_json(const TensorDecomp& d) { return {{"k", d.k}, {"coeffs", to_json(d.coeffs)}, {"field_level", d.field_level}}; }

json to_json(const EndoClass& a) { return {{"matrix", to_json(a.matrix())}}; }

json to_json(const VirtualEndo& a) { return {{"plus", to_json(a.plus())}, {"minus", to_json(a.minus())}}; }

json to_json(const LinSys& s) {
  return {{"M", to_json(s.M())}, {"v", to_json(s.v())}, {"c", to_json(s.c())}, {"ring", ring_json(s.ring())}};
}

json to_json(const TransferFunction& t) { return {{"num", to_json(t.num())}, {"den", to_json(t.den())}}; }

json to_json(const GrothClass& x) { return {{"basis", "T"}, {"coeffs", to_json(x.t_coeffs())}}; }

json to_json(const F1Zeta& z) { return {{"zeta", to_json(z.zeta)}, {"integral", z.integral}}; }

json real_to_json(double x) {
  if (x == 0 || !std::isfinite(x)) return 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return json::parse(buf);
}

json to_json(const ComplexApprox& r) {
  return {{"re", real_to_json(r.re)}, {"im", real_to_json(r.im)}, {"multiplicity", r.multiplicity}};
}

json to_json(const ZetaPolyResult& r) {
  json roots = json::array();
  for (const auto& x : r.roots) roots.push_back(to_json(x));
  return {{"H", to_json(r.H)},
          {"Z", to_json(r.Z)},
          {"e", r.e},
          {"functional_ok", r.functional_ok},
          {"roots", roots},
          {"max_critical_deviation", real_to_json(r.max_critical_deviation)}};
}

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Scalar(Integer(std::to_string(j.get<std::uint64_t>())))
                                  : Scalar(Integer(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw DomainError("expected an exact scalar (integer or \"p/q\" string), got " + j.dump());
}

Integer integer_from_json(const json& j) {
  const Scalar x = scalar_from_json(j);
  if (!is_integer(x)) throw DomainError("expected an integer, got " + j.dump());
  return x.get_num();
}

std::vector<Scalar> vector_from_json(const json& j) {
  expect_array(j, "vector");
  std::vector<Scalar> out;
  for (const auto& x : j) out.push_back(scalar_from_json(x));
  return out;
}

std::vector<Integer> integers_from_json(const json& j) {
  expect_array(j, "integer vector");
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

Poly poly_from_json(const json& j, char var) {
  if (j.is_string()) {
    const RatFunc r = parse_ratfunc(j.get<std::string>(), var);
    if (r.den().degree() != 0) throw DomainError("expected a polynomial, got " + j.dump());
    return (1 / r.den()[0]) * r.num();
  }
  return Poly(vector_from_json(j));
}

TruncSeries series_from_json(const json& j) {
  if (j.is_array()) {
    if (j.empty()) throw DomainError("series needs at least one coefficient");
    return TruncSeries(vector_from_json(j), static_cast<int>(j.size()) - 1);
  }
  const int order = require(j, "order").get<int>();
  if (order < 0) throw DomainError("series order must be >= 0");
  return TruncSeries(vector_from_json(require(j, "coeffs")), order);
}

RatFunc ratfunc_from_json(const json& j, char var) {
  if (j.is_string()) return parse_ratfunc(j.get<std::string>(), var);
  const Poly den = poly_from_json(require(j, "den"), var);
  if (den.is_zero()) throw DomainError("zero denominator");
  return RatFunc(poly_from_json(require(j, "num"), var), den);
}

Matrix matrix_from_json(const json& j) {
  expect_array(j, "matrix");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw DomainError("matrix rows must have equal length");
  return Matrix::from_rows(rows);
}

WittElement witt_from_json(const json& j, int order) {
  if (j.is_string() || (j.is_object() && j.contains("num"))) {
    const RatFunc r = ratfunc_from_json(j);
    if (r.den()[0] == 0) throw DomainError("rational function has a pole at t = 0");
    return WittElement(ratfunc_expand(r, order));
  }
  if (j.is_object()) {
    const TruncSeries s = series_from_json(j);
    return WittElement(s, ring_from(j, s.ring()));
  }
  return WittElement(series_from_json(j));
}

GhostVector ghost_from_json(const json& j) { return GhostVector(vector_from_json(j)); }

RecSeq recseq_from_json(const json& j) {
  auto rec = vector_from_json(require(j, "recurrence"));
  auto init = vector_from_json(require(j, "initial"));
  const Ring fallback = join(ring_of(rec), ring_of(init));
  return RecSeq(std::move(rec), std::move(init), ring_from(j, fallback));
}

EndoClass endo_from_json(const json& j) {
  if (j.is_object()) return EndoClass(matrix_from_json(require(j, "matrix")));
  return EndoClass(matrix_from_json(j));
}

VirtualEndo virtual_from_json(const json& j) {
  if (j.is_object() && j.contains("plus")) {
    EndoClass plus = endo_from_json(j["plus"]);
    if (!j.contains("minus")) return VirtualEndo(std::move(plus));
    return VirtualEndo(std::move(plus), endo_from_json(j["minus"]));
  }
  return VirtualEndo(endo_from_json(j));
}

LinSys linsys_from_json(const json& j) {
  Matrix m = matrix_from_json(require(j, "M"));
  Vector v = vector_from_json(require(j, "v"));
  Vector c = vector_from_json(require(j, "c"));
  const Ring fallback = join(m.ring(), join(ring_of(v), ring_of(c)));
  return LinSys(std::move(m), std::move(v), std::move(c), ring_from(j, fallback));
}

TransferFunction transfer_from_json(const json& j) {
  return TransferFunction(poly_from_json(require(j, "num"), 'z'), poly_from_json(require(j, "den"), 'z'));
}

GrothClass groth_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const bool lefschetz = s.find('L') != std::string::npos;
    if (lefschetz && s.find('T') != std::string::npos) throw DomainError("mix of T and L in class literal " + j.dump());
    std::vector<Integer> coeffs;
    const Poly p = poly_from_json(j, lefschetz ? 'L' : 'T');
    for (const auto& c : p.coeffs()) {
      if (!is_integer(c)) throw DomainError("class coefficients must be integers");
      coeffs.push_back(c.get_num());
    }
    return lefschetz ? GrothClass::from_L_basis(coeffs) : GrothClass(coeffs);
  }
  if (j.is_array()) return GrothClass(integers_from_json(j));
  const std::string basis = j.contains("basis") ? j["basis"].get<std::string>() : "T";
  auto coeffs = integers_from_json(require(j, "coeffs"));
  if (basis == "T") return GrothClass(std::move(coeffs));
  if (basis == "L") return GrothClass::from_L_basis(coeffs);
  throw DomainError("basis must be \"T\" or \"L\"");
}

ComplexApprox root_from_json(const json& j) {
  ComplexApprox r;
  r.re = require(j, "re").get<double>();
  r.im = require(j, "im").get<double>();
  if (j.contains("multiplicity")) r.multiplicity = j["multiplicity"].get<int>();
  return r;
}

}  // namespace wk::io
