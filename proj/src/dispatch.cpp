#include "wittkit/dispatch.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <istream>
#include <map>
#include <ostream>

#include "wittkit/errors.hpp"

namespace wk {

using io::json;
using io::require;
using io::to_json;

namespace {

constexpr int kMaxOrder = 4096;

struct Context {
  int order;
  std::optional<Ring> ring;
  double tol;
};

using Handler = std::function<json(const json&, const Context&)>;

int int_arg(const json& args, const char* key) {
  const Integer z = io::integer_from_json(require(args, key));
  if (!z.fits_sint_p()) throw DomainError(std::string("argument \"") + key + "\" out of range");
  return static_cast<int>(z.get_si());
}

int int_arg(const json& args, const char* key, int fallback) { return args.contains(key) ? int_arg(args, key) : fallback; }

TruncSeries series_arg(const json& args, const char* key, const Context& ctx) {
  const json& j = require(args, key);
  if (j.is_string() || (j.is_object() && j.contains("num"))) {
    const RatFunc r = io::ratfunc_from_json(j);
    if (r.den()[0] == 0) throw DomainError("rational function has a pole at t = 0");
    return ratfunc_expand(r, ctx.order);
  }
  return io::series_from_json(j);
}

WittElement witt_arg(const json& args, const char* key, const Context& ctx) {
  WittElement p = io::witt_from_json(require(args, key), ctx.order);
  return ctx.ring ? WittElement(p.series(), *ctx.ring) : p;
}

RecSeq recseq_arg(const json& args, const char* key, const Context& ctx) {
  RecSeq s = io::recseq_from_json(require(args, key));
  return ctx.ring ? RecSeq(s.recurrence(), s.initial(), *ctx.ring) : s;
}

LinSys linsys_of(const json& j, const Context& ctx) {
  LinSys s = io::linsys_from_json(j);
  return ctx.ring ? LinSys(s.M(), s.v(), s.c(), *ctx.ring) : s;
}

/// A unary system is either the argument object itself or its "S" member.
LinSys linsys_arg(const json& args, const Context& ctx) { return linsys_of(args.contains("S") ? args["S"] : args, ctx); }

Integer integer_arg(const json& args, const char* key) { return io::integer_from_json(require(args, key)); }

json with_terms(const RecSeq& s, int count) { return {{"sequence", to_json(s)}, {"terms", to_json(s.prefix(count))}}; }

json virtual_result(const VirtualEndo& a) {
  json j = to_json(a);
  j["L"] = to_json(a.canonical());
  return j;
}

std::string system_class(const LinSys& s) {
  if (is_split(s)) return "split";
  if (is_canonical(s)) return "canonical";
  if (is_completely_reachable(s)) return "reachable";
  if (is_completely_observable(s)) return "observable";
  return "none";
}

RootOptions root_options(const Context& ctx) {
  RootOptions o;
  o.tol = ctx.tol;
  return o;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      // exact-series
      {"series.mul", [](const json& a, const Context& c) { return to_json(series_mul(series_arg(a, "a", c), series_arg(a, "b", c))); }},
      {"series.inv", [](const json& a, const Context& c) {
         const TruncSeries s = series_arg(a, "a", c);
         if (s[0] == 0) throw DomainError("series_inv: constant term is zero");
         return to_json(series_inv(s));
       }},
      {"series.expand", [](const json& a, const Context& c) { return to_json(series_arg(a, "f", c)); }},
      {"series.exp", [](const json& a, const Context& c) {
         const TruncSeries s = series_arg(a, "f", c);
         if (s[0] != 0) throw DomainError("series_exp: constant term must be zero");
         return to_json(series_exp(s));
       }},
      {"series.log", [](const json& a, const Context& c) {
         const TruncSeries s = series_arg(a, "a", c);
         if (s[0] != 1) throw DomainError("series_log: constant term must be 1");
         return to_json(series_log(s));
       }},
      {"matrix.charpoly", [](const json& a, const Context&) {
         const Matrix m = io::matrix_from_json(require(a, "M"));
         if (!m.is_square()) throw DomainError("charpoly: matrix must be square");
         return to_json(charpoly(m));
       }},
      {"matrix.det", [](const json& a, const Context&) {
         const Matrix m = io::matrix_from_json(require(a, "M"));
         if (!m.is_square()) throw DomainError("det: matrix must be square");
         return to_json(det(m));
       }},
      {"matrix.kron", [](const json& a, const Context&) { return to_json(kron(io::matrix_from_json(require(a, "A")), io::matrix_from_json(require(a, "B")))); }},
      {"matrix.direct_sum", [](const json& a, const Context&) { return to_json(direct_sum(io::matrix_from_json(require(a, "A")), io::matrix_from_json(require(a, "B")))); }},
      {"matrix.invariant_factors", [](const json& a, const Context&) { return to_json(invariant_factors(io::matrix_from_json(require(a, "M")))); }},
      {"matrix.rank", [](const json& a, const Context&) { return json(rank_over_fraction_field(io::matrix_from_json(require(a, "M")))); }},
      {"poly.interpolate", [](const json& a, const Context&) {
         const json& pts = require(a, "points");
         if (!pts.is_array()) throw DomainError("points must be an array of [x, y] pairs");
         std::vector<std::pair<Scalar, Scalar>> points;
         for (const auto& p : pts) {
           if (!p.is_array() || p.size() != 2) throw DomainError("each point must be [x, y]");
           points.emplace_back(io::scalar_from_json(p[0]), io::scalar_from_json(p[1]));
         }
         return to_json(poly_interpolate(points));
       }},
      {"poly.cyclotomic", [](const json& a, const Context&) {
         const int n = int_arg(a, "n");
         if (n < 1 || n > 10000) throw DomainError("cyclotomic: n must be in [1, 10000]");
         return to_json(cyclotomic(n));
       }},

      // witt
      {"witt.add", [](const json& a, const Context& c) { return to_json(witt_add(witt_arg(a, "P", c), witt_arg(a, "Q", c))); }},
      {"witt.sub", [](const json& a, const Context& c) { return to_json(witt_sub(witt_arg(a, "P", c), witt_arg(a, "Q", c))); }},
      {"witt.neg", [](const json& a, const Context& c) { return to_json(witt_neg(witt_arg(a, "P", c))); }},
      {"witt.mul", [](const json& a, const Context& c) { return to_json(witt_mul(witt_arg(a, "P", c), witt_arg(a, "Q", c))); }},
      {"witt.teichmuller", [](const json& a, const Context& c) { return to_json(WittElement::teichmuller(io::scalar_from_json(require(a, "a")), c.order)); }},
      {"witt.ghost", [](const json& a, const Context& c) { return to_json(ghost(witt_arg(a, "P", c))); }},
      {"witt.ghost_inverse", [](const json& a, const Context&) { return to_json(ghost_inverse(io::ghost_from_json(require(a, "g")))); }},
      {"witt.frobenius_ghost", [](const json& a, const Context& c) {
         const WittElement p = witt_arg(a, "P", c);
         const int n = int_arg(a, "n");
         return to_json(a.contains("length") ? witt_frobenius_ghost(p, n, int_arg(a, "length")) : witt_frobenius_ghost(p, n));
       }},
      {"witt.rationality", [](const json& a, const Context& c) { return to_json(is_rational_up_to(witt_arg(a, "P", c))); }},

      // almkvist
      {"almkvist.add", [](const json& a, const Context&) { return virtual_result(io::virtual_from_json(require(a, "A")) + io::virtual_from_json(require(a, "B"))); }},
      {"almkvist.sub", [](const json& a, const Context&) { return virtual_result(io::virtual_from_json(require(a, "A")) - io::virtual_from_json(require(a, "B"))); }},
      {"almkvist.mul", [](const json& a, const Context&) { return virtual_result(io::virtual_from_json(require(a, "A")) * io::virtual_from_json(require(a, "B"))); }},
      {"almkvist.lmap", [](const json& a, const Context& c) {
         const VirtualEndo e = io::virtual_from_json(require(a, "A"));
         return json{{"series", to_json(L_map(e, c.order))}, {"ratfunc", to_json(e.canonical())}};
       }},
      {"almkvist.frobenius", [](const json& a, const Context&) { return to_json(frobenius(io::endo_from_json(require(a, "A")), int_arg(a, "n"))); }},
      {"almkvist.verschiebung", [](const json& a, const Context&) { return to_json(verschiebung(io::endo_from_json(require(a, "A")), int_arg(a, "n"))); }},
      {"almkvist.ghost_trace", [](const json& a, const Context& c) { return with_terms(ghost_trace(io::virtual_from_json(require(a, "A"))), c.order + 1); }},
      {"almkvist.quasi_unipotent", [](const json& a, const Context&) { return json(is_quasi_unipotent(io::endo_from_json(require(a, "A")))); }},
      {"almkvist.in_sigma", [](const json& a, const Context&) { return json(in_sigma_subring(io::endo_from_json(require(a, "A")))); }},

      // recseq
      {"recseq.term", [](const json& a, const Context& c) {
         const Integer n = integer_arg(a, "n");
         if (n < 0 || !n.fits_slong_p()) throw DomainError("term index must be a nonnegative machine integer");
         return to_json(recseq_arg(a, "s", c).term(n.get_si()));
       }},
      {"recseq.prefix", [](const json& a, const Context& c) {
         const int n = int_arg(a, "n", c.order + 1);
         if (n < 0 || n > 100000) throw DomainError("prefix length must be in [0, 100000]");
         return to_json(recseq_arg(a, "s", c).prefix(n));
       }},
      {"recseq.add", [](const json& a, const Context& c) { return to_json(seq_add(recseq_arg(a, "s", c), recseq_arg(a, "t", c))); }},
      {"recseq.sub", [](const json& a, const Context& c) { return to_json(seq_sub(recseq_arg(a, "s", c), recseq_arg(a, "t", c))); }},
      {"recseq.scale", [](const json& a, const Context& c) { return to_json(scale(io::scalar_from_json(require(a, "c")), recseq_arg(a, "s", c))); }},
      {"recseq.had_prod", [](const json& a, const Context& c) { return to_json(had_prod(recseq_arg(a, "s", c), recseq_arg(a, "t", c))); }},
      {"recseq.shift", [](const json& a, const Context& c) { return to_json(shift(recseq_arg(a, "s", c))); }},
      {"recseq.hankel", [](const json& a, const Context& c) {
         const RecSeq s = recseq_arg(a, "s", c);
         const int k = int_arg(a, "k", s.depth());
         if (k < 0 || k > 1000) throw DomainError("hankel size must be in [0, 1000]");
         const Matrix h = hankel(s, k);
         return json{{"matrix", to_json(h)}, {"det", to_json(det(h))}, {"rank", rank_over_fraction_field(h)}};
       }},
      {"recseq.hankel_dets", [](const json& a, const Context& c) {
         const RecSeq s = recseq_arg(a, "s", c);
         const int k = int_arg(a, "k", std::max(s.depth(), 1));
         if (k < 1 || k > 200) throw DomainError("hankel size must be in [1, 200]");
         std::vector<Scalar> dets;
         for (int i = 1; i <= k; ++i) dets.push_back(det(hankel(s, i)));
         return to_json(dets);
       }},
      {"recseq.rank", [](const json& a, const Context& c) { return json(max_hankel_rank(recseq_arg(a, "s", c))); }},
      {"recseq.minimize", [](const json& a, const Context& c) {
         const RecSeq m = minimize(recseq_arg(a, "s", c));
         json j = to_json(m);
         j["annihilator"] = to_json(m.annihilator());
         return j;
       }},
      {"recseq.counit", [](const json& a, const Context& c) { return to_json(counit(recseq_arg(a, "s", c))); }},
      {"recseq.comult", [](const json& a, const Context& c) { return to_json(comult(recseq_arg(a, "s", c))); }},
      {"recseq.classify", [](const json& a, const Context& c) {
         const RecSeq s = recseq_arg(a, "s", c);
         return json{{"grouplike", is_grouplike(s)}, {"primitive", is_primitive(s)}, {"depth", s.depth()}, {"minimal_depth", max_hankel_rank(s)}};
       }},

      // linsys
      {"linsys.bat", [](const json& a, const Context& c) { return with_terms(bat(linsys_arg(a, c)), c.order + 1); }},
      {"linsys.direct_sum", [](const json& a, const Context& c) { return to_json(direct_sum(linsys_of(require(a, "A"), c), linsys_of(require(a, "B"), c))); }},
      {"linsys.tensor", [](const json& a, const Context& c) { return to_json(tensor(linsys_of(require(a, "A"), c), linsys_of(require(a, "B"), c))); }},
      {"linsys.dual", [](const json& a, const Context& c) { return to_json(dual(linsys_arg(a, c))); }},
      {"linsys.classify", [](const json& a, const Context& c) {
         const LinSys s = linsys_arg(a, c);
         return json{{"reachable", is_completely_reachable(s)},
                     {"observable", is_completely_observable(s)},
                     {"canonical", is_canonical(s)},
                     {"split", is_split(s)},
                     {"class", system_class(s)}};
       }},
      {"linsys.realize", [](const json& a, const Context& c) { return to_json(realize(recseq_arg(a, "s", c))); }},
      {"linsys.minimal_realize", [](const json& a, const Context& c) { return to_json(minimal_realize(recseq_arg(a, "s", c))); }},
      {"linsys.transfer", [](const json& a, const Context& c) { return to_json(transfer(linsys_arg(a, c))); }},
      {"linsys.transfer_expand", [](const json& a, const Context& c) { return to_json(transfer(linsys_arg(a, c)).laurent(c.order + 1)); }},
      {"linsys.realize_transfer", [](const json& a, const Context&) { return to_json(realize_transfer(io::transfer_from_json(a))); }},
      {"linsys.sigma", [](const json& a, const Context& c) { return json(poles_zeros_in_sigma(linsys_arg(a, c))); }},

      // torified
      {"torified.count", [](const json& a, const Context&) { return to_json(count_points(io::groth_from_json(require(a, "X")), integer_arg(a, "m"))); }},
      {"torified.adams", [](const json& a, const Context&) { return to_json(adams(io::groth_from_json(require(a, "X")), int_arg(a, "k"))); }},
      {"torified.sigma", [](const json& a, const Context& c) { return to_json(sigma_eval(io::groth_from_json(require(a, "X")), integer_arg(a, "m"), c.order)); }},
      {"torified.zeta_mu", [](const json& a, const Context& c) {
         Measure mu;
         mu.m = integer_arg(a, "m");
         return to_json(zeta_mu(io::groth_from_json(require(a, "X")), mu, c.order));
       }},
      {"torified.r_mu", [](const json& a, const Context&) {
         Measure mu;
         mu.m = integer_arg(a, "m");
         return virtual_result(r_mu(io::groth_from_json(require(a, "X")), mu));
       }},
      {"torified.biring", [](const json& a, const Context& c) {
         Measure mu;
         mu.m = integer_arg(a, "m");
         if (a.contains("delta")) mu.delta = integer_arg(a, "delta");
         return with_terms(biring_measure(io::groth_from_json(require(a, "X")), mu), int_arg(a, "terms", c.order + 1));
       }},
      {"torified.polylog", [](const json& a, const Context& c) { return to_json(polylog(int_arg(a, "k"), c.order)); }},
      {"torified.f1zeta", [](const json& a, const Context& c) { return to_json(f1_zeta(io::groth_from_json(require(a, "X")), integer_arg(a, "m"), c.order)); }},
      {"torified.membership", [](const json& a, const Context& c) {
         const WittElement p = witt_arg(a, "P", c);
         return json(m_membership(p, recseq_arg(a, "s", c), p.order()));
       }},
      {"torified.nonrationality", [](const json& a, const Context& c) { return to_json(f1_nonrationality_report(integer_arg(a, "m"), c.order)); }},

      // zetapoly
      {"zetapoly.hilbert", [](const json& a, const Context&) { return to_json(hilbert_poly(io::poly_from_json(require(a, "U"), 'z'))); }},
      {"zetapoly.run", [](const json& a, const Context& c) { return to_json(zeta_poly(io::poly_from_json(require(a, "U"), 'z'), root_options(c))); }},
      {"zetapoly.functional", [](const json& a, const Context&) { return json(check_functional_equation(io::poly_from_json(require(a, "Z"), 'z'), int_arg(a, "e"))); }},
      {"zetapoly.unit_circle", [](const json& a, const Context& c) { return json(check_unit_circle(io::poly_from_json(require(a, "U"), 'z'), c.tol)); }},
      {"zetapoly.roots", [](const json& a, const Context& c) {
         json out = json::array();
         for (const auto& r : find_roots(io::poly_from_json(require(a, "p"), 'z'), root_options(c))) out.push_back(to_json(r));
         return out;
       }},
  };
  return table;
}

json error_response(const std::string& code, const std::string& message, int order) {
  return {{"ok", false}, {"error", {{"code", code}, {"message", message}}}, {"meta", {{"order", order}}}};
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : handlers()) names.push_back(name);
  return names;
}

Request parse_request(const std::string& line, const RequestDefaults& defaults) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("request must be a JSON object");
  Request r;
  r.order = defaults.order;
  r.ring = defaults.ring;
  r.tol = defaults.tol;
  if (!j.contains("command") || !j["command"].is_string()) throw ParseError("request needs a string \"command\"");
  r.command = j["command"].get<std::string>();
  if (j.contains("args")) {
    if (!j["args"].is_object()) throw ParseError("\"args\" must be a JSON object");
    r.args = j["args"];
  }
  if (j.contains("order")) {
    if (!j["order"].is_number_integer()) throw ParseError("\"order\" must be an integer");
    r.order = j["order"].get<int>();
  }
  if (j.contains("ring")) {
    if (!j["ring"].is_string()) throw ParseError("\"ring\" must be \"Z\" or \"Q\"");
    try {
      r.ring = parse_ring(j["ring"].get<std::string>());
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  if (j.contains("tol")) {
    if (!j["tol"].is_number()) throw ParseError("\"tol\" must be a number");
    r.tol = j["tol"].get<double>();
  }
  return r;
}

json dispatch(const Request& req, bool timings) {
  const auto it = handlers().find(req.command);
  if (it == handlers().end()) return error_response("E_UNKNOWN_COMMAND", "unknown command \"" + req.command + "\"", req.order);
  if (req.order < 1 || req.order > kMaxOrder)
    return error_response("E_DOMAIN", "order must be in [1, " + std::to_string(kMaxOrder) + "]", req.order);
  if (!(req.tol > 0)) return error_response("E_DOMAIN", "tol must be positive", req.order);
  const auto start = std::chrono::steady_clock::now();
  json response;
  try {
    json result = it->second(req.args, Context{req.order, req.ring, req.tol});
    response = {{"ok", true}, {"result", std::move(result)}, {"meta", {{"order", req.order}}}};
  } catch (const ParseError& e) {
    return error_response("E_PARSE", e.what(), req.order);
  } catch (const DomainError& e) {
    return error_response("E_DOMAIN", e.what(), req.order);
  } catch (const json::exception& e) {
    return error_response("E_DOMAIN", std::string("malformed argument: ") + e.what(), req.order);
  } catch (const NumericError& e) {
    return error_response("E_NUMERIC", e.what(), req.order);
  } catch (const std::exception& e) {
    return error_response("E_INTERNAL", e.what(), req.order);
  }
  if (timings) {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    response["meta"]["timings"] = {{"total_us", us}};
  }
  return response;
}

json handle_line(const std::string& line, const RequestDefaults& defaults) {
  Request req;
  try {
    req = parse_request(line, defaults);
  } catch (const ParseError& e) {
    return error_response("E_PARSE", e.what(), defaults.order);
  }
  return dispatch(req, defaults.timings);
}

bool batch(std::istream& in, std::ostream& out, const RequestDefaults& defaults) {
  bool all_ok = true;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const json response = handle_line(line, defaults);
    all_ok = all_ok && response["ok"].get<bool>();
    out << response.dump() << '\n';
  }
  out.flush();
  return all_ok;
}

}  // namespace wk
