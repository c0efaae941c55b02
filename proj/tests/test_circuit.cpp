#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "polypack/circuit.hpp"
#include "polypack/errors.hpp"
#include "polypack/packcheck.hpp"
#include "polypack/serialize.hpp"

using namespace polypack;

namespace {

Json load(const std::string& name) {
  std::ifstream in(std::string(POLYPACK_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Netlist two_input(NodeKind k) {
  Netlist n;
  n.nodes = {{"a", NodeKind::Input}, {"b", NodeKind::Input}, {"g", k}, {"o", NodeKind::Output}};
  n.edges = {{"a", 0, "g", 0}, {"b", 0, "g", 1}, {"g", 0, "o", 0}};
  return n;
}

Netlist cross_netlist() {
  Netlist n;
  n.nodes = {{"p", NodeKind::Input}, {"q", NodeKind::Input}, {"c", NodeKind::Cross},
             {"n", NodeKind::Not},   {"o", NodeKind::Output}};
  n.edges = {{"p", 0, "c", 0}, {"q", 0, "c", 1}, {"c", 0, "n", 0}, {"n", 0, "o", 0}};
  return n;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Domain;
}

// Solutions of the lowered instance projected onto the named vertices.
std::set<std::vector<bool>> projected(const GridSatInstance& inst, const std::vector<Vertex>& at) {
  std::set<std::vector<bool>> out;
  for (const Assignment& a : all_solutions(inst)) {
    std::vector<bool> row;
    for (Vertex v : at) row.push_back(a.at(v.x, v.y));
    out.insert(row);
  }
  return out;
}

// Random netlist over inputs i0..i{k-1} using every macro kind.
Netlist random_netlist(std::mt19937_64& rng, int inputs, int gates) {
  Netlist n;
  std::vector<std::pair<std::string, int>> signals;
  for (int i = 0; i < inputs; ++i) {
    n.nodes.push_back({"i" + std::to_string(i), NodeKind::Input});
    signals.push_back({"i" + std::to_string(i), 0});
  }
  const NodeKind kinds[] = {NodeKind::Not, NodeKind::And2, NodeKind::Or2, NodeKind::Xor2, NodeKind::Cross};
  for (int g = 0; g < gates; ++g) {
    NodeKind k = kinds[rng() % 5];
    std::string id = "g" + std::to_string(g);
    n.nodes.push_back({id, k});
    for (int port = 0; port < input_arity(k); ++port) {
      auto s = signals[rng() % signals.size()];
      n.edges.push_back({s.first, s.second, id, port});
    }
    for (int port = 0; port < output_arity(k); ++port) signals.push_back({id, port});
  }
  n.nodes.push_back({"out", NodeKind::Output});
  auto s = signals.back();
  n.edges.push_back({s.first, s.second, "out", 0});
  return n;
}

}  // namespace

TEST_CASE("node kinds") {
  CHECK(parse_node_kind("xor2") == NodeKind::Xor2);
  CHECK(kind_of([] { parse_node_kind("mux"); }) == ErrorKind::UnsupportedKind);
  CHECK(input_arity(NodeKind::Input) == 0);
  CHECK(input_arity(NodeKind::Not) == 1);
  CHECK(output_arity(NodeKind::Cross) == 2);
}

TEST_CASE("netlist problems") {
  CHECK(netlist_problems(two_input(NodeKind::And2)).empty());
  Netlist n = two_input(NodeKind::And2);
  n.edges.pop_back();
  CHECK_FALSE(netlist_problems(n).empty());  // output lacks fan-in
  Netlist cyc;
  cyc.nodes = {{"a", NodeKind::Not}, {"b", NodeKind::Not}, {"o", NodeKind::Output}};
  cyc.edges = {{"a", 0, "b", 0}, {"b", 0, "a", 0}, {"b", 0, "o", 0}};
  CHECK_FALSE(netlist_problems(cyc).empty());
  Netlist two_out = two_input(NodeKind::And2);
  two_out.nodes.push_back({"o2", NodeKind::Output});
  two_out.edges.push_back({"g", 0, "o2", 0});
  CHECK_FALSE(netlist_problems(two_out).empty());
}

TEST_CASE("expand: Xor2 on (T,F) is True") {
  Netlist x = expand_macros(two_input(NodeKind::Xor2));
  for (const Node& node : x.nodes)
    CHECK((node.kind == NodeKind::Input || node.kind == NodeKind::Not || node.kind == NodeKind::And2 ||
           node.kind == NodeKind::Output));
  CHECK(evaluate_output(x, {{"a", true}, {"b", false}}));
  CHECK_FALSE(evaluate_output(x, {{"a", true}, {"b", true}}));
  CHECK(equivalent(x, two_input(NodeKind::Xor2)));
}

TEST_CASE("expand: Or2") {
  Netlist o = expand_macros(two_input(NodeKind::Or2));
  CHECK(o.nodes.size() == 7);
  CHECK(equivalent(o, two_input(NodeKind::Or2)));
}

TEST_CASE("expand: a single And2 is unchanged") {
  Netlist n = two_input(NodeKind::And2);
  CHECK(expand_macros(n) == n);
}

TEST_CASE("expand: crossover swaps its inputs on all four pairs") {
  Netlist n;
  n.nodes = {{"p", NodeKind::Input}, {"q", NodeKind::Input}, {"c", NodeKind::Cross}, {"o", NodeKind::Output}};
  n.edges = {{"p", 0, "c", 0}, {"q", 0, "c", 1}, {"c", 1, "o", 0}};
  Netlist x = expand_macros(n);
  CHECK(x.find("c.t") != nullptr);
  CHECK(x.find("c.0") != nullptr);
  CHECK(x.find("c.1") != nullptr);
  for (bool p : {false, true})
    for (bool q : {false, true}) {
      PortValues v = evaluate_ports(x, {{"p", p}, {"q", q}});
      CHECK(v.at({"c.0", 0}) == q);
      CHECK(v.at({"c.1", 0}) == p);
      CHECK(evaluate_output(x, {{"p", p}, {"q", q}}) == p);
      PortValues raw = evaluate_ports(n, {{"p", p}, {"q", q}});
      CHECK(raw.at({"c", 0}) == q);
      CHECK(raw.at({"c", 1}) == p);
    }
  CHECK(equivalent(expand_macros(cross_netlist()), cross_netlist()));
}

TEST_CASE("expand preserves evaluation on random netlists up to 10 inputs") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    int inputs = 1 + static_cast<int>(rng() % 10);
    Netlist n = random_netlist(rng, inputs, 1 + static_cast<int>(rng() % 8));
    REQUIRE(netlist_problems(n).empty());
    Netlist x = expand_macros(n);
    CHECK(netlist_problems(x).empty());
    CHECK(equivalent(n, x));
  }
}

TEST_CASE("expand rejects invalid netlists") {
  Netlist n = two_input(NodeKind::Or2);
  n.edges.erase(n.edges.begin());
  CHECK(kind_of([&] { expand_macros(n); }) == ErrorKind::Domain);
}

TEST_CASE("lower: single input wired to the anchor") {
  Netlist n;
  n.nodes = {{"a", NodeKind::Input}, {"o", NodeKind::Output}};
  n.edges = {{"a", 0, "o", 0}};
  LayoutHint h;
  h.nodes = {{"a", {1, 0}}, {"o", {0, 0}}};
  h.routes = {{{"a", 0, "o", 0}, {{1, 0}, {0, 0}}}};
  auto inst = lower_to_gridsat(n, h, 2, 1);
  CHECK(validate_instance(inst).empty());
  CHECK(inst.h_class(0, 0) == EdgeClass::Wire);
  CHECK(projected(inst, {{1, 0}}) == std::set<std::vector<bool>>{{true}});
}

TEST_CASE("lower: NOT between input and anchor") {
  Netlist n;
  n.nodes = {{"a", NodeKind::Input}, {"n", NodeKind::Not}, {"o", NodeKind::Output}};
  n.edges = {{"a", 0, "n", 0}, {"n", 0, "o", 0}};
  LayoutHint h;
  h.nodes = {{"a", {2, 0}}, {"n", {1, 0}}, {"o", {0, 0}}};
  h.routes = {{{"a", 0, "n", 0}, {{2, 0}, {1, 0}}}, {{"n", 0, "o", 0}, {{1, 0}, {0, 0}}}};
  auto inst = lower_to_gridsat(n, h, 3, 1);
  CHECK(inst.h_class(1, 0) == EdgeClass::Inverter);
  CHECK(inst.h_class(0, 0) == EdgeClass::Wire);
  CHECK(projected(inst, {{2, 0}}) == std::set<std::vector<bool>>{{false}});
}

TEST_CASE("lower: AND of two inputs") {
  Netlist n = two_input(NodeKind::And2);
  LayoutHint h;
  h.nodes = {{"a", {1, 1}}, {"b", {2, 1}}, {"g", {3, 0}}, {"o", {0, 0}}};
  h.routes = {{{"a", 0, "g", 0}, {{1, 1}, {1, 0}}},
              {{"b", 0, "g", 1}, {{2, 1}, {2, 0}}},
              {{"g", 0, "o", 0}, {{3, 0}, {3, 1}, {3, 2}, {2, 2}, {1, 2}, {0, 2}, {0, 1}, {0, 0}}}};
  auto inst = lower_to_gridsat(n, h, 4, 3);
  CHECK(inst.and_gates == std::set<Vertex>{{3, 0}});
  CHECK(inst.h_class(1, 0) == EdgeClass::AndLeft);
  auto sols = projected(inst, {{1, 1}, {2, 1}});
  CHECK(sols == std::set<std::vector<bool>>{{true, true}});
  // the netlist side of the same oracle
  int sat = 0;
  for (bool a : {false, true})
    for (bool b : {false, true}) sat += evaluate_output(n, {{"a", a}, {"b", b}});
  CHECK(sat == static_cast<int>(sols.size()));
}

TEST_CASE("lower: layout errors") {
  Netlist n = two_input(NodeKind::And2);
  LayoutHint h;
  h.nodes = {{"a", {1, 1}}, {"b", {2, 1}}, {"g", {3, 0}}, {"o", {0, 0}}};
  h.routes = {{{"a", 0, "g", 0}, {{1, 1}, {1, 0}}},
              {{"b", 0, "g", 1}, {{2, 1}, {2, 0}}},
              {{"g", 0, "o", 0}, {{3, 0}, {3, 1}, {3, 2}, {2, 2}, {1, 2}, {0, 2}, {0, 1}, {0, 0}}}};

  auto missing = h;
  missing.routes.pop_back();
  CHECK(kind_of([&] { lower_to_gridsat(n, missing, 4, 3); }) == ErrorKind::UnroutedConnection);

  auto crossing = h;  // b's route runs through a's vertex
  crossing.routes[1].path = {{2, 1}, {1, 1}, {1, 0}, {2, 0}};
  CHECK(kind_of([&] { lower_to_gridsat(n, crossing, 4, 3); }) == ErrorKind::LayoutConflict);

  auto even = h;
  even.nodes["g"] = {2, 0};
  CHECK(kind_of([&] { lower_to_gridsat(n, even, 4, 3); }) == ErrorKind::LayoutConflict);

  auto off = h;
  CHECK(kind_of([&] { lower_to_gridsat(n, off, 3, 3); }) == ErrorKind::LayoutConflict);

  auto wrong_end = h;
  wrong_end.routes[2].path.pop_back();
  CHECK(kind_of([&] { lower_to_gridsat(n, wrong_end, 4, 3); }) == ErrorKind::UnroutedConnection);

  auto jump = h;
  jump.routes[2].path = {{3, 0}, {3, 2}, {0, 2}, {0, 0}};
  CHECK(kind_of([&] { lower_to_gridsat(n, jump, 4, 3); }) == ErrorKind::LayoutConflict);

  CHECK(kind_of([&] { lower_to_gridsat(two_input(NodeKind::Xor2), h, 4, 3); }) == ErrorKind::UnsupportedKind);
}

TEST_CASE("lower: single XOR fixture matches its truth table") {
  Netlist n = netlist_from_json(load("xor_netlist.json"));
  Json lj = load("xor_layout.json");
  LayoutHint h = layout_from_json(lj);
  auto inst = lower_to_gridsat(expand_macros(n), h, lj["width"].get<int>(), lj["height"].get<int>());
  CHECK(validate_instance(inst).empty());
  CHECK(inst.and_gates.size() == 4);
  Vertex va = h.nodes.at("a"), vb = h.nodes.at("b");
  for (bool a : {false, true})
    for (bool b : {false, true}) {
      auto s = solve_propagated(inst, {{va, a}, {vb, b}});
      CHECK(s.has_value() == evaluate_output(n, {{"a", a}, {"b", b}}));
      if (s) CHECK(check_assignment(inst, *s).empty());
    }
}

TEST_CASE("lower: crossover fixture swaps p and q") {
  Netlist n = netlist_from_json(load("crossover_netlist.json"));
  Json lj = load("crossover_layout.json");
  LayoutHint h = layout_from_json(lj);
  Netlist x = expand_macros(n);
  auto inst = lower_to_gridsat(x, h, lj["width"].get<int>(), lj["height"].get<int>());
  CHECK(validate_instance(inst).empty());
  CHECK(inst.and_gates.size() == 12);
  Vertex vp = h.nodes.at("p"), vq = h.nodes.at("q");
  Vertex out_q = h.nodes.at("c.0"), out_p = h.nodes.at("c.1");
  for (bool p : {false, true})
    for (bool q : {false, true}) {
      auto s = solve_propagated(inst, {{vp, p}, {vq, q}});
      REQUIRE(s);
      CHECK(check_assignment(inst, *s).empty());
      CHECK(s->at(out_q.x, out_q.y) == q);
      CHECK(s->at(out_p.x, out_p.y) == p);
      // and the outputs are forced, not merely possible
      CHECK_FALSE(solve_propagated(inst, {{vp, p}, {vq, q}, {out_q, !q}}));
      CHECK_FALSE(solve_propagated(inst, {{vp, p}, {vq, q}, {out_p, !p}}));
    }
}
