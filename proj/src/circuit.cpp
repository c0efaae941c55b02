#include "polypack/circuit.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "polypack/errors.hpp"

namespace polypack {

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Input: return "input";
    case NodeKind::Not: return "not";
    case NodeKind::And2: return "and2";
    case NodeKind::Or2: return "or2";
    case NodeKind::Xor2: return "xor2";
    case NodeKind::Output: return "output";
    case NodeKind::Cross: return "cross";
  }
  return "?";
}

NodeKind parse_node_kind(const std::string& name) {
  for (NodeKind k : {NodeKind::Input, NodeKind::Not, NodeKind::And2, NodeKind::Or2, NodeKind::Xor2,
                     NodeKind::Output, NodeKind::Cross})
    if (name == to_string(k)) return k;
  throw Error(ErrorKind::UnsupportedKind, "unknown node kind '" + name + "'");
}

int input_arity(NodeKind k) {
  switch (k) {
    case NodeKind::Input: return 0;
    case NodeKind::Not:
    case NodeKind::Output: return 1;
    default: return 2;
  }
}

int output_arity(NodeKind k) {
  switch (k) {
    case NodeKind::Output: return 0;
    case NodeKind::Cross: return 2;
    default: return 1;
  }
}

const Node* Netlist::find(const std::string& id) const {
  for (const Node& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

std::vector<std::string> Netlist::inputs() const {
  std::vector<std::string> out;
  for (const Node& n : nodes)
    if (n.kind == NodeKind::Input) out.push_back(n.id);
  return out;
}

std::vector<std::string> netlist_problems(const Netlist& n) {
  std::vector<std::string> out;
  std::map<std::string, const Node*> by_id;
  int outputs = 0;
  for (const Node& node : n.nodes) {
    if (!by_id.emplace(node.id, &node).second) out.push_back("duplicate node id '" + node.id + "'");
    outputs += node.kind == NodeKind::Output;
  }
  if (outputs != 1) out.push_back("netlist needs exactly one output, found " + std::to_string(outputs));

  std::map<std::pair<std::string, int>, int> drivers;
  std::map<std::string, std::vector<std::string>> succ;
  for (const Connection& c : n.edges) {
    auto f = by_id.find(c.from);
    auto t = by_id.find(c.to);
    if (f == by_id.end() || t == by_id.end()) {
      out.push_back("connection " + c.from + "->" + c.to + " references an unknown node");
      continue;
    }
    if (c.from_port < 0 || c.from_port >= output_arity(f->second->kind))
      out.push_back("node '" + c.from + "' has no output port " + std::to_string(c.from_port));
    if (c.to_port < 0 || c.to_port >= input_arity(t->second->kind))
      out.push_back("node '" + c.to + "' has no input port " + std::to_string(c.to_port));
    ++drivers[{c.to, c.to_port}];
    succ[c.from].push_back(c.to);
  }
  for (const Node& node : n.nodes) {
    for (int p = 0; p < input_arity(node.kind); ++p) {
      int d = drivers.count({node.id, p}) ? drivers[{node.id, p}] : 0;
      if (d != 1)
        out.push_back("input port " + std::to_string(p) + " of '" + node.id + "' has " + std::to_string(d) +
                      " drivers");
    }
  }
  // Cycle check by colouring DFS.
  std::map<std::string, int> colour;
  std::function<bool(const std::string&)> cyclic = [&](const std::string& id) {
    int& c = colour[id];
    if (c == 1) return true;
    if (c == 2) return false;
    c = 1;
    for (const std::string& s : succ[id])
      if (by_id.count(s) && cyclic(s)) return true;
    colour[id] = 2;
    return false;
  };
  for (const Node& node : n.nodes)
    if (cyclic(node.id)) {
      out.push_back("netlist has a cycle through '" + node.id + "'");
      break;
    }
  return out;
}

namespace {

void require_valid(const Netlist& n) {
  auto problems = netlist_problems(n);
  if (!problems.empty()) throw Error(ErrorKind::Domain, "invalid netlist: " + problems.front());
}

}  // namespace

PortValues evaluate_ports(const Netlist& n, const std::map<std::string, bool>& inputs) {
  require_valid(n);
  std::map<std::pair<std::string, int>, std::pair<std::string, int>> driver;
  for (const Connection& c : n.edges) driver[{c.to, c.to_port}] = {c.from, c.from_port};
  PortValues val;
  std::function<bool(const std::string&, int)> port = [&](const std::string& id, int p) -> bool {
    auto it = val.find({id, p});
    if (it != val.end()) return it->second;
    const Node* node = n.find(id);
    auto in = [&](int k) {
      auto d = driver.at({id, k});
      return port(d.first, d.second);
    };
    bool v = false;
    switch (node->kind) {
      case NodeKind::Input: {
        auto i = inputs.find(id);
        if (i == inputs.end()) throw Error(ErrorKind::Domain, "no value for input '" + id + "'");
        v = i->second;
        break;
      }
      case NodeKind::Not: v = !in(0); break;
      case NodeKind::And2: v = in(0) && in(1); break;
      case NodeKind::Or2: v = in(0) || in(1); break;
      case NodeKind::Xor2: v = in(0) != in(1); break;
      case NodeKind::Output: v = in(0); break;
      case NodeKind::Cross: v = p == 0 ? in(1) : in(0); break;
    }
    val[{id, p}] = v;
    return v;
  };
  for (const Node& node : n.nodes) {
    int outs = std::max(1, output_arity(node.kind));
    for (int p = 0; p < outs; ++p) port(node.id, p);
  }
  return val;
}

bool evaluate_output(const Netlist& n, const std::map<std::string, bool>& inputs) {
  PortValues v = evaluate_ports(n, inputs);
  for (const Node& node : n.nodes)
    if (node.kind == NodeKind::Output) return v.at({node.id, 0});
  throw Error(ErrorKind::Domain, "netlist has no output");
}

namespace {

using PortRef = std::pair<std::string, int>;

struct Expansion {
  Netlist out;
  std::map<PortRef, std::vector<PortRef>> sinks;  // macro input port -> internal sinks
  std::map<PortRef, PortRef> sources;             // macro output port -> internal source

  void node(const std::string& id, NodeKind k) { out.nodes.push_back({id, k}); }
  void wire(const std::string& from, const std::string& to, int to_port) {
    out.edges.push_back({from, 0, to, to_port});
  }
};

bool expand_once(const Netlist& n, Netlist& result) {
  Expansion e;
  bool changed = false;
  for (const Node& node : n.nodes) {
    const std::string& g = node.id;
    switch (node.kind) {
      case NodeKind::Or2:
        changed = true;
        e.node(g + ".na", NodeKind::Not);
        e.node(g + ".nb", NodeKind::Not);
        e.node(g + ".and", NodeKind::And2);
        e.node(g, NodeKind::Not);
        e.wire(g + ".na", g + ".and", 0);
        e.wire(g + ".nb", g + ".and", 1);
        e.wire(g + ".and", g, 0);
        e.sinks[{g, 0}] = {{g + ".na", 0}};
        e.sinks[{g, 1}] = {{g + ".nb", 0}};
        e.sources[{g, 0}] = {g, 0};
        break;
      case NodeKind::Xor2:
        changed = true;
        for (const char* s : {".n1a", ".n2a", ".n3a", ".oa"}) e.node(g + s, NodeKind::And2);
        for (const char* s : {".n1", ".n2", ".n3"}) e.node(g + s, NodeKind::Not);
        e.node(g, NodeKind::Not);
        e.wire(g + ".n1a", g + ".n1", 0);
        e.wire(g + ".n1", g + ".n2a", 1);
        e.wire(g + ".n1", g + ".n3a", 0);
        e.wire(g + ".n2a", g + ".n2", 0);
        e.wire(g + ".n3a", g + ".n3", 0);
        e.wire(g + ".n2", g + ".oa", 0);
        e.wire(g + ".n3", g + ".oa", 1);
        e.wire(g + ".oa", g, 0);
        e.sinks[{g, 0}] = {{g + ".n1a", 0}, {g + ".n2a", 0}};
        e.sinks[{g, 1}] = {{g + ".n1a", 1}, {g + ".n3a", 1}};
        e.sources[{g, 0}] = {g, 0};
        break;
      case NodeKind::Cross:
        changed = true;
        e.node(g + ".t", NodeKind::Xor2);
        e.node(g + ".0", NodeKind::Xor2);
        e.node(g + ".1", NodeKind::Xor2);
        e.wire(g + ".t", g + ".0", 1);
        e.wire(g + ".t", g + ".1", 0);
        e.sinks[{g, 0}] = {{g + ".t", 0}, {g + ".0", 0}};
        e.sinks[{g, 1}] = {{g + ".t", 1}, {g + ".1", 1}};
        e.sources[{g, 0}] = {g + ".0", 0};
        e.sources[{g, 1}] = {g + ".1", 0};
        break;
      default:
        e.node(g, node.kind);
    }
  }
  for (const Connection& c : n.edges) {
    PortRef src{c.from, c.from_port};
    if (auto it = e.sources.find(src); it != e.sources.end()) src = it->second;
    std::vector<PortRef> dst{{c.to, c.to_port}};
    if (auto it = e.sinks.find(dst.front()); it != e.sinks.end()) dst = it->second;
    for (const PortRef& d : dst) e.out.edges.push_back({src.first, src.second, d.first, d.second});
  }
  result = std::move(e.out);
  return changed;
}

}  // namespace

Netlist expand_macros(const Netlist& n) {
  require_valid(n);
  Netlist cur = n;
  Netlist next;
  while (expand_once(cur, next)) cur = std::move(next);
  return cur;
}

bool equivalent(const Netlist& a, const Netlist& b) {
  std::vector<std::string> ins = a.inputs();
  std::vector<std::string> bins = b.inputs();
  if (std::set(ins.begin(), ins.end()) != std::set(bins.begin(), bins.end())) return false;
  if (ins.size() > 10) throw Error(ErrorKind::SizeLimitExceeded, "truth-table comparison limited to 10 inputs");
  for (std::uint32_t bits = 0; bits < (1u << ins.size()); ++bits) {
    std::map<std::string, bool> in;
    for (std::size_t i = 0; i < ins.size(); ++i) in[ins[i]] = (bits >> (ins.size() - 1 - i)) & 1u;
    PortValues va = evaluate_ports(a, in);
    PortValues vb = evaluate_ports(b, in);
    for (const auto& [k, v] : va) {
      auto it = vb.find(k);
      if (it != vb.end() && it->second != v) return false;
    }
  }
  return true;
}

// --- Lowering ---------------------------------------------------------------

namespace {

std::string vtx(Vertex v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

struct EdgeKey {
  Vertex lo;
  bool horizontal;
  auto operator<=>(const EdgeKey&) const = default;
};

std::optional<EdgeKey> edge_between(Vertex a, Vertex b) {
  if (b < a) std::swap(a, b);
  if (a.y == b.y && b.x == a.x + 1) return EdgeKey{a, true};
  if (a.x == b.x && b.y == a.y + 1) return EdgeKey{a, false};
  return std::nullopt;
}

[[noreturn]] void conflict(const std::string& msg) { throw Error(ErrorKind::LayoutConflict, msg); }
[[noreturn]] void unrouted(const std::string& msg) { throw Error(ErrorKind::UnroutedConnection, msg); }

std::string describe(const Connection& c) {
  return c.from + ":" + std::to_string(c.from_port) + "->" + c.to + ":" + std::to_string(c.to_port);
}

}  // namespace

GridSatInstance lower_to_gridsat(const Netlist& n, const LayoutHint& hints, int width, int height) {
  for (const Node& node : n.nodes)
    if (node.kind != NodeKind::Input && node.kind != NodeKind::Not && node.kind != NodeKind::And2 &&
        node.kind != NodeKind::Output)
      throw Error(ErrorKind::UnsupportedKind,
                  std::string("node '") + node.id + "' of kind " + to_string(node.kind) + " must be expanded first");
  require_valid(n);
  if (width < 1 || height < 1) throw Error(ErrorKind::Domain, "grid dimensions must be positive");

  GridSatInstance inst;
  inst.width = width;
  inst.height = height;

  std::map<Vertex, std::string> label;     // signal carried by a vertex
  std::map<Vertex, std::string> expected;  // signal a reserved vertex will carry
  std::map<EdgeKey, std::pair<EdgeClass, std::string>> used;
  std::set<EdgeKey> and_edges;

  auto claim = [&](Vertex v, const std::string& s) {
    if (!inst.on_grid(v)) conflict("vertex " + vtx(v) + " lies outside the grid");
    auto e = expected.find(v);
    if (e != expected.end() && e->second != s)
      conflict("vertex " + vtx(v) + " is reserved for signal '" + e->second + "', not '" + s + "'");
    auto [it, fresh] = label.emplace(v, s);
    if (!fresh && it->second != s)
      conflict("vertex " + vtx(v) + " carries both '" + it->second + "' and '" + s + "'");
  };
  auto reserve = [&](Vertex v, const std::string& s) {
    if (!inst.on_grid(v)) conflict("vertex " + vtx(v) + " lies outside the grid");
    auto [it, fresh] = expected.emplace(v, s);
    if (!fresh && it->second != s)
      conflict("vertex " + vtx(v) + " is needed by both '" + it->second + "' and '" + s + "'");
  };

  // Placements.
  std::map<std::string, Vertex> at;
  for (const Node& node : n.nodes) {
    auto it = hints.nodes.find(node.id);
    if (it == hints.nodes.end()) unrouted("node '" + node.id + "' has no placement");
    Vertex v = it->second;
    if (!inst.on_grid(v)) conflict("node '" + node.id + "' placed off the grid at " + vtx(v));
    at[node.id] = v;
    switch (node.kind) {
      case NodeKind::Output:
        if (v != Vertex{0, 0}) conflict("the output node must sit at (0,0) so the anchor forces it True");
        break;
      case NodeKind::And2:
        if (v.x % 2 == 0 || v.x < 3)
          conflict("AND node '" + node.id + "' at " + vtx(v) + " needs odd x >= 3");
        inst.and_gates.insert(v);
        and_edges.insert({{v.x - 2, v.y}, true});
        and_edges.insert({{v.x - 1, v.y}, true});
        [[fallthrough]];
      default:
        reserve(v, node.id);
    }
  }

  // Where each connection must arrive, and the signal it carries.
  std::map<Connection, Vertex> sink_vertex;
  for (const Connection& c : n.edges) {
    const Node* to = n.find(c.to);
    Vertex v = at[c.to];
    if (to->kind == NodeKind::And2) {
      v = {v.x - 2 + c.to_port, v.y};
      reserve(v, c.from);
    } else if (to->kind == NodeKind::Output) {
      reserve(v, c.from);
    }
    sink_vertex[c] = v;
  }
  for (const Node& node : n.nodes)
    if (node.kind != NodeKind::Output) claim(at[node.id], node.id);

  std::map<Connection, const Route*> route_for;
  for (const Route& r : hints.routes) {
    if (!sink_vertex.count(r.connection)) conflict("route for unknown connection " + describe(r.connection));
    if (!route_for.emplace(r.connection, &r).second)
      conflict("connection " + describe(r.connection) + " has more than one route");
  }
  for (const Connection& c : n.edges)
    if (!route_for.count(c)) unrouted("connection " + describe(c) + " has no route");

  auto take_edge = [&](Vertex a, Vertex b, EdgeClass cls, const std::string& sig) {
    auto key = edge_between(a, b);
    if (!key) conflict("route step " + vtx(a) + "->" + vtx(b) + " is not a lattice edge");
    if (and_edges.count(*key)) conflict("route uses an AND gate edge at " + vtx(key->lo));
    auto [it, fresh] = used.emplace(*key, std::pair{cls, sig});
    if (!fresh && it->second != std::pair{cls, sig})
      conflict("edge at " + vtx(key->lo) + " is used by two signals or classes");
  };

  auto process = [&](const Connection& c, const Route& r) {
    const std::string& sig = c.from;
    const Node* to = n.find(c.to);
    const Vertex goal = sink_vertex[c];
    if (r.path.empty()) unrouted("connection " + describe(c) + " has an empty route");
    if (r.path.back() != goal)
      unrouted("route " + describe(c) + " ends at " + vtx(r.path.back()) + " instead of " + vtx(goal));
    bool invert = to->kind == NodeKind::Not;
    if (invert && r.path.size() < 2) unrouted("route into NOT '" + c.to + "' needs at least one edge");
    std::size_t last_own = invert ? r.path.size() - 1 : r.path.size();
    for (std::size_t i = 0; i < last_own; ++i) claim(r.path[i], sig);
    for (std::size_t i = 0; i + 1 < r.path.size(); ++i) {
      bool inv = invert && i + 2 == r.path.size();
      take_edge(r.path[i], r.path[i + 1], inv ? EdgeClass::Inverter : EdgeClass::Wire, sig);
    }
  };

  std::vector<Connection> pending;
  for (const Connection& c : n.edges) pending.push_back(c);
  while (!pending.empty()) {
    std::vector<Connection> later;
    for (const Connection& c : pending) {
      const Route& r = *route_for[c];
      if (r.path.empty()) unrouted("connection " + describe(c) + " has an empty route");
      auto l = label.find(r.path.front());
      if (l != label.end() && l->second == c.from)
        process(c, r);
      else
        later.push_back(c);
    }
    if (later.size() == pending.size()) {
      const Connection& c = later.front();
      unrouted("route " + describe(c) + " starts at " + vtx(route_for[c]->path.front()) +
               ", which never carries signal '" + c.from + "'");
    }
    pending = std::move(later);
  }

  for (const auto& [key, val] : used) (key.horizontal ? inst.h_edges : inst.v_edges)[key.lo] = val.first;
  auto problems = validate_instance(inst);
  if (!problems.empty()) conflict("lowered instance is invalid: " + problems.front().detail);
  return inst;
}

}  // namespace polypack
