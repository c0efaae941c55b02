#include "polypack/gridsat.hpp"

#include <numeric>
#include <sstream>

#include "polypack/errors.hpp"

namespace polypack {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
    case ErrorKind::LayoutConflict: return "LayoutConflict";
    case ErrorKind::UnroutedConnection: return "UnroutedConnection";
    case ErrorKind::InvalidRotation: return "InvalidRotation";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::ParamViolation: return "ParamViolation";
    case ErrorKind::NonSimpleResult: return "NonSimpleResult";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Error";
}

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::DontCare: return "dontcare";
    case EdgeClass::Wire: return "wire";
    case EdgeClass::Inverter: return "inverter";
    case EdgeClass::AndLeft: return "and_left";
    case EdgeClass::AndRight: return "and_right";
  }
  return "?";
}

EdgeClass GridSatInstance::h_class(int x, int y) const {
  if (and_gates.count({x + 2, y})) return EdgeClass::AndLeft;
  if (and_gates.count({x + 1, y})) return EdgeClass::AndRight;
  auto it = h_edges.find({x, y});
  return it == h_edges.end() ? EdgeClass::DontCare : it->second;
}

EdgeClass GridSatInstance::v_class(int x, int y) const {
  auto it = v_edges.find({x, y});
  return it == v_edges.end() ? EdgeClass::DontCare : it->second;
}

Assignment Assignment::all(int width, int height, bool value) {
  Assignment a;
  a.truth.assign(height, std::vector<bool>(width, value));
  return a;
}

namespace {

std::string coord(Vertex v) {
  std::ostringstream os;
  os << "(" << v.x << "," << v.y << ")";
  return os.str();
}

bool stored_class_ok(EdgeClass c) {
  return c == EdgeClass::Wire || c == EdgeClass::Inverter || c == EdgeClass::DontCare;
}

}  // namespace

std::vector<Violation> validate_instance(const GridSatInstance& inst) {
  std::vector<Violation> out;
  if (inst.width < 1 || inst.height < 1) {
    out.push_back({"positive-dimensions", {inst.width, inst.height}, "width and height must be >= 1"});
    return out;
  }
  for (const auto& [v, c] : inst.h_edges) {
    if (!inst.on_grid(v) || !inst.on_grid({v.x + 1, v.y}))
      out.push_back({"edge-on-grid", v, "horizontal edge " + coord(v) + " leaves the lattice"});
    if (!stored_class_ok(c))
      out.push_back({"edge-class", v, "AND markers are derived from and_gates"});
  }
  for (const auto& [v, c] : inst.v_edges) {
    if (!inst.on_grid(v) || !inst.on_grid({v.x, v.y + 1}))
      out.push_back({"edge-on-grid", v, "vertical edge " + coord(v) + " leaves the lattice"});
    if (!stored_class_ok(c))
      out.push_back({"edge-class", v, "AND gates are horizontal only"});
  }
  for (Vertex g : inst.and_gates) {
    if (g.x % 2 == 0)
      out.push_back({"and-odd-x", g, "AND gate rightmost vertex must have odd x"});
    if (g.x < 3)
      out.push_back({"and-min-x", g, "AND gate needs x >= 3 so its left vertex is on the grid"});
    if (!inst.on_grid(g) || !inst.on_grid({g.x - 2, g.y}))
      out.push_back({"and-on-grid", g, "AND gate leaves the lattice"});
    for (int dx : {2, 1}) {
      Vertex e{g.x - dx, g.y};
      auto it = inst.h_edges.find(e);
      if (it != inst.h_edges.end() && it->second != EdgeClass::DontCare)
        out.push_back({"and-edge-conflict", e, "edge consumed by AND gate at " + coord(g) + " is also classified"});
    }
  }
  return out;
}

std::vector<Violation> check_assignment(const GridSatInstance& inst, const Assignment& a) {
  if (a.height() != inst.height || a.width() != inst.width) {
    throw Error(ErrorKind::Domain, "assignment does not cover the instance lattice");
  }
  for (const auto& row : a.truth) {
    if (static_cast<int>(row.size()) != inst.width)
      throw Error(ErrorKind::Domain, "ragged assignment rows");
  }
  std::vector<Violation> out;
  auto check_edge = [&](Vertex p, Vertex q, EdgeClass c) {
    bool same = a.at(p.x, p.y) == a.at(q.x, q.y);
    if (c == EdgeClass::Wire && !same)
      out.push_back({"wire", p, "wire " + coord(p) + "-" + coord(q) + " joins different values"});
    if (c == EdgeClass::Inverter && same)
      out.push_back({"inverter", p, "inverter " + coord(p) + "-" + coord(q) + " joins equal values"});
  };
  for (const auto& [v, c] : inst.h_edges) check_edge(v, {v.x + 1, v.y}, c);
  for (const auto& [v, c] : inst.v_edges) check_edge(v, {v.x, v.y + 1}, c);
  for (Vertex g : inst.and_gates) {
    bool expect = a.at(g.x - 1, g.y) && a.at(g.x - 2, g.y);
    if (a.at(g.x, g.y) != expect)
      out.push_back({"and", g, "AND output at " + coord(g) + " is not the conjunction of its inputs"});
  }
  if (!a.at(0, 0)) out.push_back({"anchor", {0, 0}, "upper-left vertex must be True"});
  return out;
}

std::optional<Assignment> solve_bruteforce(const GridSatInstance& inst) {
  const int n = inst.vertex_count();
  if (n > kBruteForceVertexLimit) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "brute force limited to " + std::to_string(kBruteForceVertexLimit) + " vertices");
  }
  Assignment a = Assignment::all(inst.width, inst.height, false);
  // Vertex 0 is the most significant bit so counting up walks lexicographic order.
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    for (int i = 0; i < n; ++i) {
      a.set(i % inst.width, i / inst.width, (bits >> (n - 1 - i)) & 1u);
    }
    if (check_assignment(inst, a).empty()) return a;
  }
  return std::nullopt;
}

namespace {

// Union-find carrying the parity of each vertex relative to its root.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<int, int> find(int v) {
    int p = 0;
    int r = v;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    // Path compression with parity fix-up.
    int acc = p;
    while (parent_[v] != v) {
      int next = parent_[v];
      int next_parity = acc ^ parity_[v];
      parent_[v] = r;
      parity_[v] = acc;
      acc = next_parity;
      v = next;
    }
    return {r, p};
  }

  // Returns false if the relation contradicts earlier ones.
  bool unite(int a, int b, int differ) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == differ;
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ differ;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
  std::vector<int> rank_;
};

}  // namespace

std::optional<Assignment> solve_propagated(const GridSatInstance& inst,
                                           const std::map<Vertex, bool>& fixed) {
  const int w = inst.width;
  const int n = inst.vertex_count();
  auto id = [w](Vertex v) { return v.y * w + v.x; };
  ParityUnionFind uf(n);

  for (const auto& [v, c] : inst.h_edges) {
    if (c == EdgeClass::Wire || c == EdgeClass::Inverter)
      if (!uf.unite(id(v), id({v.x + 1, v.y}), c == EdgeClass::Inverter)) return std::nullopt;
  }
  for (const auto& [v, c] : inst.v_edges) {
    if (c == EdgeClass::Wire || c == EdgeClass::Inverter)
      if (!uf.unite(id(v), id({v.x, v.y + 1}), c == EdgeClass::Inverter)) return std::nullopt;
  }

  // Root value: -1 unknown, else 0/1. A vertex's value is root ^ parity.
  std::vector<int> root_value(n, -1);
  auto pin = [&](Vertex v, bool value) {
    auto [r, p] = uf.find(id(v));
    int want = static_cast<int>(value) ^ p;
    if (root_value[r] == -1) {
      root_value[r] = want;
      return true;
    }
    return root_value[r] == want;
  };
  if (!pin({0, 0}, true)) return std::nullopt;
  for (const auto& [v, value] : fixed) {
    if (!inst.on_grid(v)) throw Error(ErrorKind::Domain, "pinned vertex off the grid");
    if (!pin(v, value)) return std::nullopt;
  }

  struct Literal {
    int root;
    int parity;
  };
  struct Gate {
    Literal out, mid, left;
  };
  std::vector<Gate> gates;
  std::vector<int> free_roots;
  std::vector<char> seen(n, 0);
  auto lit = [&](Vertex v) {
    auto [r, p] = uf.find(id(v));
    if (root_value[r] == -1 && !seen[r]) {
      seen[r] = 1;
      free_roots.push_back(r);
    }
    return Literal{r, p};
  };
  for (Vertex g : inst.and_gates) {
    gates.push_back({lit(g), lit({g.x - 1, g.y}), lit({g.x - 2, g.y})});
  }

  auto value_of = [&](const Literal& l) {
    int rv = root_value[l.root];
    return rv < 0 ? -1 : rv ^ l.parity;
  };
  auto gates_consistent = [&] {
    for (const Gate& g : gates) {
      int o = value_of(g.out), m = value_of(g.mid), l = value_of(g.left);
      if (o < 0 || m < 0 || l < 0) {
        // Partial checks: a known-true output needs true inputs; a false input
        // forces a false output.
        if (o == 1 && (m == 0 || l == 0)) return false;
        if (o == 0 && m == 1 && l == 1) return false;
        continue;
      }
      if (o != (m & l)) return false;
    }
    return true;
  };

  if (!gates_consistent()) return std::nullopt;
  // Depth-first search over the free roots that feed AND gates.
  std::size_t depth = 0;
  std::vector<int> trial(free_roots.size(), -1);
  while (true) {
    if (depth == free_roots.size()) break;
    int& t = trial[depth];
    ++t;
    if (t > 1) {
      t = -1;
      root_value[free_roots[depth]] = -1;
      if (depth == 0) return std::nullopt;
      --depth;
      continue;
    }
    root_value[free_roots[depth]] = t;
    if (gates_consistent()) ++depth;
  }

  Assignment a = Assignment::all(inst.width, inst.height, false);
  for (int y = 0; y < inst.height; ++y) {
    for (int x = 0; x < w; ++x) {
      auto [r, p] = uf.find(id({x, y}));
      if (root_value[r] == -1) root_value[r] = p;  // free component: vertex gets False
      a.set(x, y, (root_value[r] ^ p) != 0);
    }
  }
  return a;
}

}  // namespace polypack
