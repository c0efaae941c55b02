#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <optional>
#include <sstream>

#include "polypack/errors.hpp"
#include "polypack/serialize.hpp"

using namespace polypack;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<ErrorKind> kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

Json roundtrip_text(const Json& j) { return parse_json(dump(j)); }

}  // namespace

TEST_CASE("scalars") {
  CHECK(parse_scalar("3/6") == Scalar(1, 2));
  CHECK(parse_scalar("-4") == -4);
  CHECK(parse_scalar("+5/10") == Scalar(1, 2));
  CHECK(format_scalar(Scalar(2)) == "2/1");
  CHECK(format_scalar(parse_scalar("-6/4")) == "-3/2");
  for (const char* bad : {"", "1/", "/2", "1/0", "1.5", "a/b", "1/2/3", "--1"})
    CHECK(kind_of([&] { parse_scalar(bad); }) == ErrorKind::Parse);
  // beyond 64 bits
  Scalar big = parse_scalar("123456789012345678901234567890/7");
  CHECK(parse_scalar(format_scalar(big)) == big);
}

TEST_CASE("parse_json reports malformed text") {
  CHECK(kind_of([] { parse_json("{\"a\": "); }) == ErrorKind::Parse);
  CHECK(parse_json("[1, 2]").size() == 2);
}

TEST_CASE("instance round trip") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto inst = random_instance(5, 3, seed);
    auto back = instance_from_json(roundtrip_text(to_json(inst)));
    CHECK(back.width == inst.width);
    CHECK(back.height == inst.height);
    CHECK(back.and_gates == inst.and_gates);
    CHECK(to_json(back) == to_json(inst));
    CHECK(check_assignment(back, Assignment::all(5, 3, true)).size() ==
          check_assignment(inst, Assignment::all(5, 3, true)).size());
  }
}

TEST_CASE("instance parse errors") {
  CHECK(kind_of([] { instance_from_json(parse_json("{\"height\": 2}")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { instance_from_json(parse_json("{\"width\": \"2\", \"height\": 2}")); }) == ErrorKind::Parse);
  CHECK(kind_of([] {
          instance_from_json(parse_json(R"({"width":2,"height":1,"h_edges":[{"x":0,"y":0,"class":"xor"}]})"));
        }) == ErrorKind::Parse);
  CHECK(kind_of([] {
          instance_from_json(parse_json(
              R"({"width":2,"height":1,"h_edges":[{"x":0,"y":0,"class":"wire"},{"x":0,"y":0,"class":"inverter"}]})"));
        }) == ErrorKind::Parse);
  auto ok = instance_from_json(parse_json(R"({"width":2,"height":1})"));
  CHECK(ok.h_edges.empty());
  CHECK(ok.and_gates.empty());
}

TEST_CASE("assignment and state grid round trip") {
  Assignment a = Assignment::all(3, 2, true);
  a.set(1, 1, false);
  CHECK(assignment_from_json(roundtrip_text(to_json(a))) == a);
  CHECK(kind_of([] { assignment_from_json(parse_json(R"({"truth":[[1,0]]})")); }) == ErrorKind::Parse);

  StateGrid g = {{State::ETT, State::OF}, {State::EFF, State::OT}};
  CHECK(state_grid_from_json(roundtrip_text(to_json(g))) == g);
  CHECK(kind_of([] { state_grid_from_json(parse_json(R"({"states":[["ETT","XX"]]})")); }) == ErrorKind::Parse);
}

TEST_CASE("netlist and layout round trip the fixtures") {
  Netlist n = netlist_from_json(parse_json(slurp(POLYPACK_TEST_DATA "/crossover_netlist.json")));
  CHECK(netlist_from_json(roundtrip_text(to_json(n))) == n);
  LayoutHint h = layout_from_json(parse_json(slurp(POLYPACK_TEST_DATA "/crossover_layout.json")));
  LayoutHint back = layout_from_json(roundtrip_text(to_json(h)));
  CHECK(back.nodes == h.nodes);
  REQUIRE(back.routes.size() == h.routes.size());
  for (std::size_t i = 0; i < h.routes.size(); ++i) {
    CHECK(back.routes[i].connection == h.routes[i].connection);
    CHECK(back.routes[i].path == h.routes[i].path);
  }
  CHECK(kind_of([] { netlist_from_json(parse_json(R"({"nodes":[{"id":"a","kind":"nand3"}],"edges":[]})")); }) ==
        ErrorKind::UnsupportedKind);
  CHECK(kind_of([] {
          layout_from_json(parse_json(R"({"nodes":[{"id":"a","x":0,"y":0},{"id":"a","x":1,"y":0}],"routes":[]})"));
        }) == ErrorKind::Parse);
}

TEST_CASE("params round trip and partial overrides") {
  auto p = GadgetParams::defaults(3, 2);
  CHECK(params_from_json(roundtrip_text(to_json(p)), GadgetParams::defaults(1, 1)) == p);
  auto o = params_from_json(parse_json(R"({"eps": "1/500", "copies": 70})"), p);
  CHECK(o.eps == Scalar(1, 500));
  CHECK(o.copies == 70);
  CHECK(o.delta == p.delta);
  CHECK(kind_of([&] { params_from_json(parse_json(R"({"epsilon": "1/2"})"), p); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { params_from_json(parse_json(R"({"eps": 0.5})"), p); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { params_from_json(parse_json("[]"), p); }) == ErrorKind::Parse);
}

TEST_CASE("gadget polygons round trip exactly") {
  for (int phase = 1; phase <= 5; ++phase) {
    auto g = build_phase(phase, random_instance(3, 2, 4), GadgetParams::defaults(3, 2));
    auto j = to_json(g);
    auto back = polygons_from_json(roundtrip_text(j));
    CHECK(back.small.vertices == g.small.vertices);
    CHECK(back.small.tags == g.small.tags);
    CHECK(back.big.vertices == g.big.vertices);
    CHECK(back.frame.params == g.frame.params);
    CHECK(back.frame.phase == phase);
    CHECK(back.small_features.size() == g.small_features.size());
    CHECK(dump(to_json(back)) == dump(j));
  }
}

TEST_CASE("polygon parse errors") {
  CHECK(kind_of([] { polygon_from_json(parse_json(R"({"vertices":[["0/1","0/1"],["1/1","0/1"]]})")); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] { polygon_from_json(parse_json(R"({"vertices":[[0,0],[1,0],[0,1]]})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] {
          polygon_from_json(parse_json(R"({"vertices":[["0","0"],["1","0"],["0","1"]],"tags":["a"]})"));
        }) == ErrorKind::Parse);
}

TEST_CASE("certificates and reports round trip") {
  auto inst = random_instance(2, 2, 3);
  auto g = build_phase(5, inst, GadgetParams::defaults(2, 2));
  auto cert = canonical_certificate(inst, Assignment::all(2, 2, false), g.frame);
  cert.placements[0].c = Scalar(3, 5);
  cert.placements[0].s = Scalar(4, 5);
  CHECK(certificate_from_json(roundtrip_text(to_json(cert))) == cert);
  auto short_form = certificate_from_json(parse_json(R"([{"tx":"1/2","ty":3}])"));
  CHECK(short_form.placements.at(0) == Placement::translation(Scalar(1, 2), 3));

  auto report = verify_packing(g.big, g.small, cert);
  REQUIRE_FALSE(report.valid);
  auto back = report_from_json(roundtrip_text(to_json(report)));
  CHECK(back.valid == report.valid);
  REQUIRE(back.violations.size() == report.violations.size());
  for (std::size_t i = 0; i < back.violations.size(); ++i) {
    CHECK(back.violations[i].kind == report.violations[i].kind);
    CHECK(back.violations[i].indices == report.violations[i].indices);
    CHECK(back.violations[i].witness.has_value() == report.violations[i].witness.has_value());
    if (back.violations[i].witness) CHECK(back.violations[i].witness->point == report.violations[i].witness->point);
  }
  CHECK(kind_of([] { report_from_json(parse_json(R"({"valid":false,"violations":[{"kind":"Overlap","indices":[-1]}]})")); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] { certificate_from_json(parse_json(R"({"tx":"0"})")); }) == ErrorKind::Parse);
}

TEST_CASE("violation lists serialize with rule names") {
  GridSatInstance bad;
  bad.width = 5;
  bad.height = 1;
  bad.and_gates.insert({4, 0});
  auto j = to_json(validate_instance(bad));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["rule"] == "and-odd-x");
  auto p = GadgetParams::defaults(2, 2);
  p.copies = 1;
  CHECK(to_json(validate_params(p, 2, 2))[0]["rule"] == "copies");
}

TEST_CASE("dump is stable") {
  auto g = build_phase(3, random_instance(2, 2, 1), GadgetParams::defaults(2, 2));
  CHECK(dump(to_json(g)) == dump(to_json(g)));
  CHECK(dump(to_json(g)).back() == '\n');
}
