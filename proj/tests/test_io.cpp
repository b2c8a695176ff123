#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "wittkit/dispatch.hpp"
#include "wittkit/errors.hpp"
#include "wittkit/json_io.hpp"

using namespace wk;
using io::json;
using wk::test::ints;
using wk::test::poly;

namespace {

json run(const std::string& line) { return handle_line(line); }

}  // namespace

TEST_CASE("scalars on the wire") {
  CHECK(io::to_json(Scalar(7)) == json(7));
  CHECK(io::to_json(Scalar(-3, 4)) == json("-3/4"));
  const Scalar big(Integer("123456789012345678901234567890"));
  CHECK(io::to_json(big) == json("123456789012345678901234567890"));
  CHECK(io::scalar_from_json(json("123456789012345678901234567890")) == big);
  CHECK(io::scalar_from_json(json(-5)) == -5);
  CHECK(io::scalar_from_json(json(std::numeric_limits<std::uint64_t>::max())) == Scalar(Integer("18446744073709551615")));
  CHECK_THROWS_AS(io::scalar_from_json(json(0.5)), DomainError);
  CHECK_THROWS_AS(io::scalar_from_json(json(nullptr)), DomainError);
  CHECK(io::real_to_json(-0.0).dump() == "0.0");
  CHECK(io::real_to_json(1.0 / 3).dump() == "0.333333333333333");
}

TEST_CASE("round trips for every domain type") {
  test::Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const WittElement w = test::random_witt(rng, 6);
    CHECK(io::witt_from_json(io::to_json(w), 6) == w);
    CHECK(io::witt_from_json(io::to_json(w), 6).ring() == w.ring());
    const RecSeq s = test::random_recseq(rng, 3);
    const RecSeq back = io::recseq_from_json(io::to_json(s));
    CHECK(back.recurrence() == s.recurrence());
    CHECK(back.initial() == s.initial());
    const LinSys sys = test::random_system(rng, 3);
    CHECK(io::linsys_from_json(io::to_json(sys)) == sys);
    const Matrix m = test::random_matrix(rng, 3, -5, 5);
    CHECK(io::matrix_from_json(io::to_json(m)) == m);
    const GrothClass x = test::random_effective(rng, 3, 4);
    CHECK(io::groth_from_json(io::to_json(x)) == x);
  }
  const Poly p({Scalar(1, 2), Scalar(0), Scalar(-7)});
  CHECK(io::poly_from_json(io::to_json(p)) == p);
  const TruncSeries ts({Scalar(1), Scalar(2, 3)}, 4);
  CHECK(io::series_from_json(io::to_json(ts)) == ts);
  const RatFunc r(poly({1, -1}), poly({1, -3}));
  CHECK(io::ratfunc_from_json(io::to_json(r)) == r);
  const GhostVector g(ints({1, -2, 3}));
  CHECK(io::ghost_from_json(io::to_json(g)) == g);
  const VirtualEndo v(EndoClass(Matrix{{3}}), EndoClass(Matrix{{1, 1}, {0, 2}}));
  const VirtualEndo vb = io::virtual_from_json(io::to_json(v));
  CHECK(vb.plus().matrix() == v.plus().matrix());
  CHECK(vb.minus().matrix() == v.minus().matrix());
  const VirtualEndo zero;
  CHECK(io::virtual_from_json(io::to_json(zero)).canonical() == zero.canonical());
  const EndoClass e(Matrix{{0, 1}, {1, 1}});
  CHECK(io::endo_from_json(io::to_json(e)).matrix() == e.matrix());
  const TransferFunction t(poly({2, -1, 2}), poly({-2, 1, -3, 1}));
  CHECK(io::transfer_from_json(io::to_json(t)) == t);
  const ComplexApprox root{0.5, -0.25, 0, 2};
  const ComplexApprox rb = io::root_from_json(io::to_json(root));
  CHECK(rb.re == root.re);
  CHECK(rb.im == root.im);
  CHECK(rb.multiplicity == 2);
}

TEST_CASE("class literals") {
  CHECK(io::groth_from_json(json("T")) == GrothClass::torus());
  CHECK(io::groth_from_json(json("L^2")) == GrothClass({1, 2, 1}));
  CHECK(io::groth_from_json(json{{"basis", "L"}, {"coeffs", {1, -1}}}) == GrothClass({0, -1}));
  CHECK_THROWS_AS(io::groth_from_json(json("T+L")), DomainError);
}

TEST_CASE("dispatch examples") {
  const json a = run(R"J({"command":"witt.mul","args":{"P":"1/(1-2t)","Q":"1/(1-3t)"},"order":8})J");
  CHECK(a["ok"] == true);
  CHECK(a["meta"]["order"] == 8);
  CHECK(a["result"]["coeffs"] == json::parse("[1,6,36,216,1296,7776,46656,279936,1679616]"));

  const json b = run(R"J({"command":"linsys.transfer","args":{"M":[[0,-1],[1,2]],"v":[1,0],"c":[1,2]}})J");
  CHECK(b["result"] == json::parse(R"J({"num":[0,1],"den":[1,-2,1]})J"));
  CHECK(b["meta"]["order"] == 32);

  const json c = run(R"J({"command":"zetapoly.run","args":{"U":[1,1]}})J");
  CHECK(c["result"]["Z"] == json::parse("[1,-2]"));
  CHECK(c["result"]["max_critical_deviation"] == 0.0);
  CHECK_FALSE(c.contains("error"));
}

TEST_CASE("dispatch errors") {
  CHECK(run("{")["error"]["code"] == "E_PARSE");
  CHECK(run("[1,2]")["error"]["code"] == "E_PARSE");
  CHECK(run(R"J({"args":{}})J")["error"]["code"] == "E_PARSE");
  CHECK(run(R"J({"command":"witt.mul","order":"x"})J")["error"]["code"] == "E_PARSE");
  CHECK(run(R"J({"command":"witt.nope"})J")["error"]["code"] == "E_UNKNOWN_COMMAND");
  CHECK(run(R"J({"command":"witt.mul","args":{"P":"1/(1-2t","Q":"1"}})J")["error"]["code"] == "E_PARSE");
  CHECK(run(R"J({"command":"witt.mul","args":{"P":"1/(1-2t)"}})J")["error"]["code"] == "E_DOMAIN");
  CHECK(run(R"J({"command":"witt.neg","args":{"P":"2/(1-2t)"}})J")["error"]["code"] == "E_DOMAIN");
  CHECK(run(R"J({"command":"witt.neg","args":{"P":"1/(1-2t)"},"order":0})J")["error"]["code"] == "E_DOMAIN");
  CHECK(run(R"J({"command":"witt.neg","args":{"P":[1,"1/2"]},"ring":"Z"})J")["error"]["code"] == "E_DOMAIN");
  CHECK(run(R"J({"command":"witt.neg","args":{"P":[1,"1/2"]},"ring":"Q"})J")["ok"] == true);
  CHECK(run(R"J({"command":"matrix.charpoly","args":{"M":[[1,2]]}})J")["error"]["code"] == "E_DOMAIN");
  CHECK(run(R"J({"command":"series.expand","args":{"f":{"num":[1],"den":{"a":1}}}})J")["error"]["code"] == "E_DOMAIN");
  CHECK(run(R"J({"command":"zetapoly.run","args":{"U":[1,1]},"tol":-1})J")["error"]["code"] == "E_DOMAIN");
  const json e = run(R"J({"command":"witt.nope"})J");
  CHECK_FALSE(e.contains("result"));
  CHECK(e["ok"] == false);
}

TEST_CASE("every command is reachable") {
  const auto names = command_names();
  CHECK(names.size() > 60);
  for (const auto& name : names) {
    const json r = run(R"J({"command":")J" + name + R"J(","args":{}})J");
    // Missing arguments are a domain error, never a crash or an unknown command.
    if (!r["ok"].get<bool>()) CHECK_MESSAGE(r["error"]["code"] == "E_DOMAIN", name);
  }
}

TEST_CASE("batch streams") {
  std::istringstream empty("");
  std::ostringstream out0;
  CHECK(batch(empty, out0));
  CHECK(out0.str().empty());

  std::istringstream in(
      R"J({"command":"recseq.prefix","args":{"s":{"recurrence":[1,1],"initial":[1,1]},"n":5}})J"
      "\n"
      R"J({"command":"matrix.rank","args":{"M":[[1,2],[2,4]]}})J"
      "\n\n"
      "not json\n"
      R"J({"command":"torified.count","args":{"X":"L^2","m":2}})J"
      "\n");
  std::ostringstream out;
  CHECK_FALSE(batch(in, out));
  std::istringstream lines(out.str());
  std::vector<json> responses;
  for (std::string line; std::getline(lines, line);) responses.push_back(json::parse(line));
  REQUIRE(responses.size() == 4);
  CHECK(responses[0]["result"] == json::parse("[1,1,2,3,5]"));
  CHECK(responses[1]["result"] == 1);
  CHECK(responses[2]["ok"] == false);
  CHECK(responses[3]["result"] == 9);
}

TEST_CASE("responses are deterministic") {
  const std::string req = R"J({"command":"zetapoly.run","args":{"U":[1,0,0,0,1]}})J";
  CHECK(run(req).dump() == run(req).dump());
  RequestDefaults d;
  d.timings = true;
  CHECK(handle_line(req, d)["meta"].contains("timings"));
  CHECK_FALSE(run(req)["meta"].contains("timings"));
}
