#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace polypack {

/// Lattice vertex. Origin is the upper-left vertex, y grows downward.
struct Vertex {
  int x = 0;
  int y = 0;
  auto operator<=>(const Vertex&) const = default;
};

enum class EdgeClass : std::uint8_t { DontCare, Wire, Inverter, AndLeft, AndRight };

const char* to_string(EdgeClass c);

/// Planar-Grid-SAT instance over a width x height vertex lattice.
///
/// Horizontal edge (x,y) joins (x,y)-(x+1,y); vertical edge (x,y) joins
/// (x,y)-(x,y+1). Only Wire and Inverter are stored in the edge maps; the
/// AndLeft/AndRight markers are derived from `and_gates`.
struct GridSatInstance {
  int width = 1;
  int height = 1;
  std::map<Vertex, EdgeClass> h_edges;
  std::map<Vertex, EdgeClass> v_edges;
  /// Rightmost vertex of each AND gate; its inputs are (x-2,y) and (x-1,y).
  std::set<Vertex> and_gates;

  int vertex_count() const { return width * height; }
  bool on_grid(Vertex v) const {
    return v.x >= 0 && v.y >= 0 && v.x < width && v.y < height;
  }
  /// Effective class of horizontal edge (x,y), including AND markers.
  EdgeClass h_class(int x, int y) const;
  EdgeClass v_class(int x, int y) const;
};

struct Violation {
  std::string rule;
  Vertex at;
  std::string detail;
};

/// Truth values indexed [y][x].
struct Assignment {
  std::vector<std::vector<bool>> truth;

  static Assignment all(int width, int height, bool value);
  bool at(int x, int y) const { return truth[y][x]; }
  void set(int x, int y, bool v) { truth[y][x] = v; }
  int width() const { return truth.empty() ? 0 : static_cast<int>(truth[0].size()); }
  int height() const { return static_cast<int>(truth.size()); }
  bool operator==(const Assignment&) const = default;
};

std::vector<Violation> validate_instance(const GridSatInstance& inst);

/// Throws Error(Domain) when the assignment does not cover exactly the lattice.
std::vector<Violation> check_assignment(const GridSatInstance& inst, const Assignment& a);

inline constexpr int kBruteForceVertexLimit = 24;

/// Exhaustive search in lexicographic vertex order (row-major, False < True).
/// Throws Error(SizeLimitExceeded) above kBruteForceVertexLimit vertices.
std::optional<Assignment> solve_bruteforce(const GridSatInstance& inst);

/// Union-find over wire/inverter parity constraints, then backtracking over
/// the components touched by AND gates. Optional `fixed` pins vertices.
std::optional<Assignment> solve_propagated(const GridSatInstance& inst,
                                           const std::map<Vertex, bool>& fixed = {});

}  // namespace polypack
