#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polypack/gridsat.hpp"

namespace polypack {

/// Cross is a declared wire crossing: inputs (p, q), outputs port 0 = q and
/// port 1 = p. It expands into three XORs.
enum class NodeKind { Input, Not, And2, Or2, Xor2, Output, Cross };

const char* to_string(NodeKind k);
/// Throws Error(UnsupportedKind) for unknown names.
NodeKind parse_node_kind(const std::string& name);

int input_arity(NodeKind k);
int output_arity(NodeKind k);

struct Node {
  std::string id;
  NodeKind kind;
  bool operator==(const Node&) const = default;
};

struct Connection {
  std::string from;
  int from_port = 0;
  std::string to;
  int to_port = 0;
  auto operator<=>(const Connection&) const = default;
};

struct Netlist {
  std::vector<Node> nodes;
  std::vector<Connection> edges;

  const Node* find(const std::string& id) const;
  std::vector<std::string> inputs() const;  // Input ids in declaration order
  bool operator==(const Netlist&) const = default;
};

/// Structural problems: duplicate ids, dangling references, bad ports,
/// missing or doubled fan-in, cycles, Output count != 1.
std::vector<std::string> netlist_problems(const Netlist& n);

using PortValues = std::map<std::pair<std::string, int>, bool>;

/// Value of every node output port. Throws Error(Domain) on an invalid
/// netlist or a missing input value.
PortValues evaluate_ports(const Netlist& n, const std::map<std::string, bool>& inputs);
bool evaluate_output(const Netlist& n, const std::map<std::string, bool>& inputs);

/// Rewrite Or2, Xor2 and Cross into Input/Not/And2/Output. A rewritten node
/// keeps its id on the node producing its output (port 0); helper nodes get
/// ids "<id>.<suffix>". Cross ports 0 and 1 become nodes "<id>.0", "<id>.1".
///   Or2(a,b)  = Not(And2(Not a, Not b))           suffixes na, nb, and
///   Xor2(a,b) = NAND(NAND(a, n1), NAND(n1, b)),  n1 = NAND(a, b)
///               suffixes n1a, n1, n2a, n2, n3a, n3, oa
///   Cross(p,q): t = Xor2(p,q), "<id>.0" = Xor2(p,t), "<id>.1" = Xor2(t,q)
/// Throws Error(Domain) on an invalid netlist.
Netlist expand_macros(const Netlist& n);

/// Every input vector, in binary counting order over inputs(), limited to 10
/// inputs; true iff both netlists agree on the Output value and on every
/// port present in both.
bool equivalent(const Netlist& a, const Netlist& b);

struct Route {
  Connection connection;
  std::vector<Vertex> path;
};

/// User-supplied embedding. A route runs from a vertex already carrying the
/// source signal to the sink's input vertex: the node vertex for Not and
/// Output, (x-2,y) for port 0 and (x-1,y) for port 1 of an And2 at (x,y).
struct LayoutHint {
  std::map<std::string, Vertex> nodes;
  std::vector<Route> routes;
};

/// Output must sit at (0,0) so the anchor forces it True. Route edges become
/// Wire except the last edge of a route into a Not, which is Inverter.
/// Throws Error(UnsupportedKind) if the netlist is not expanded,
/// Error(LayoutConflict) when two signals share a vertex or edge or a node
/// sits off the grid or at an illegal AND coordinate, and
/// Error(UnroutedConnection) when a connection has no usable route.
GridSatInstance lower_to_gridsat(const Netlist& n, const LayoutHint& hints, int width, int height);

}  // namespace polypack
