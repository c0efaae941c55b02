#include "polypack/semantics.hpp"

#include <algorithm>
#include <sstream>

#include "polypack/errors.hpp"

namespace polypack {

const char* to_string(State s) {
  switch (s) {
    case State::OT: return "OT";
    case State::OF: return "OF";
    case State::ETT: return "ETT";
    case State::ETF: return "ETF";
    case State::EFT: return "EFT";
    case State::EFF: return "EFF";
  }
  return "?";
}

std::optional<State> parse_state(const std::string& name) {
  for (State s : kAllStates)
    if (name == to_string(s)) return s;
  return std::nullopt;
}

int shift_of(State s) {
  switch (s) {
    case State::OT: return 0;
    case State::OF: return 1;
    case State::ETT: return 3;
    case State::ETF: return 7;
    case State::EFT: return 15;
    case State::EFF: return 31;
  }
  return 0;
}

bool is_even(State s) { return s != State::OT && s != State::OF; }

bool own_truth(State s) {
  return s == State::OT || s == State::ETT || s == State::EFT;
}

std::optional<bool> left_truth(State s) {
  if (!is_even(s)) return std::nullopt;
  return s == State::ETT || s == State::ETF;
}

bool column_is_even(int x) { return x % 2 == 0; }

namespace {

State even_state(bool left, bool own) {
  if (left) return own ? State::ETT : State::ETF;
  return own ? State::EFT : State::EFF;
}

constexpr bool O = true;   // circled
constexpr bool _ = false;  // blank

// Horizontal micronotch programming, as printed. Columns: wire, inverter,
// and, don't care, under the group of the destination (right) column.
const std::vector<TableRow> kHorizontal = {
    {-31, State::EFF, State::OT, false, _, O, _, O},
    {-30, State::EFF, State::OF, false, O, _, O, O},
    {-15, State::EFT, State::OT, false, O, _, _, O},
    {-14, State::EFT, State::OF, false, _, O, O, O},
    {-7, State::ETF, State::OT, false, _, O, _, O},
    {-6, State::ETF, State::OF, false, O, _, O, O},
    {-3, State::ETT, State::OT, false, O, _, O, O},
    {-2, State::ETT, State::OF, false, _, O, _, O},
    {2, State::OF, State::ETT, true, _, O, _, O},
    {3, State::OT, State::ETT, true, O, _, _, O},
    {6, State::OF, State::ETF, true, O, _, _, O},
    {7, State::OT, State::ETF, true, _, O, _, O},
    {14, State::OF, State::EFT, true, _, O, _, O},
    {15, State::OT, State::EFT, true, O, _, _, O},
    {30, State::OF, State::EFF, true, O, _, _, O},
    {31, State::OT, State::EFF, true, _, O, _, O},
};

// Vertical micronotch programming, as printed, with the zero row expanded.
const std::vector<TableRow> kVertical = {
    {-28, State::EFF, State::ETT, true, _, O, _, O},
    {-24, State::EFF, State::ETF, true, O, _, _, O},
    {-16, State::EFF, State::EFT, true, _, O, _, O},
    {-12, State::EFT, State::ETT, true, O, _, _, O},
    {-8, State::EFT, State::ETF, true, _, O, _, O},
    {-4, State::ETF, State::ETT, true, _, O, _, O},
    {-1, State::OF, State::OT, false, _, O, _, O},
    {0, State::EFF, State::EFF, true, O, _, _, O},
    {0, State::EFT, State::EFT, true, O, _, _, O},
    {0, State::ETF, State::ETF, true, O, _, _, O},
    {0, State::ETT, State::ETT, true, O, _, _, O},
    {0, State::OF, State::OF, false, O, _, _, O},
    {0, State::OT, State::OT, false, O, _, _, O},
    {1, State::OT, State::OF, false, _, O, _, O},
    {4, State::ETT, State::ETF, true, _, O, _, O},
    {8, State::ETF, State::EFT, true, _, O, _, O},
    {12, State::ETT, State::EFT, true, O, _, _, O},
    {16, State::EFT, State::EFF, true, _, O, _, O},
    {24, State::ETF, State::EFF, true, O, _, _, O},
    {28, State::ETT, State::EFF, true, _, O, _, O},
};

const TableRow* find_row(const std::vector<TableRow>& rows, State from, State to) {
  for (const TableRow& r : rows)
    if (r.from == from && r.to == to) return &r;
  return nullptr;
}

bool circled(const TableRow& row, EdgeClass cls) {
  switch (cls) {
    case EdgeClass::Wire: return row.wire;
    case EdgeClass::Inverter: return row.inverter;
    case EdgeClass::AndRight: return row.and_gate;
    // The left half of an AND pair only relays the left input's value into
    // the middle state's encoding; it constrains nothing by itself.
    case EdgeClass::AndLeft:
    case EdgeClass::DontCare: return row.dont_care;
  }
  return false;
}

}  // namespace

State state_of(const Assignment& a, int x, int y) {
  bool own = a.at(x, y);
  if (!column_is_even(x)) return own ? State::OT : State::OF;
  bool left = x == 0 ? true : a.at(x - 1, y);
  return even_state(left, own);
}

const std::vector<TableRow>& horizontal_rows() { return kHorizontal; }
const std::vector<TableRow>& vertical_rows() { return kVertical; }

bool allowed_horizontal(State left, State right, EdgeClass cls, TableVariant variant) {
  if (is_even(left) == is_even(right)) return false;
  const TableRow* row = find_row(kHorizontal, left, right);
  if (row == nullptr || !circled(*row, cls)) return false;
  if (variant == TableVariant::Filtered && is_even(right)) {
    return *left_truth(right) == own_truth(left);
  }
  return true;
}

bool allowed_vertical(State upper, State lower, EdgeClass cls) {
  if (is_even(upper) != is_even(lower)) return false;
  if (cls == EdgeClass::AndLeft || cls == EdgeClass::AndRight) return false;
  const TableRow* row = find_row(kVertical, upper, lower);
  return row != nullptr && circled(*row, cls);
}

bool allowed_anchor(State s) { return own_truth(s); }

bool state_grid_accepted(const GridSatInstance& inst, const StateGrid& grid,
                         TableVariant variant) {
  for (int y = 0; y < inst.height; ++y) {
    for (int x = 0; x < inst.width; ++x) {
      State s = grid[y][x];
      if (is_even(s) != column_is_even(x)) return false;
      if (x > 0 && !allowed_horizontal(grid[y][x - 1], s, inst.h_class(x - 1, y), variant))
        return false;
      if (y > 0 && !allowed_vertical(grid[y - 1][x], s, inst.v_class(x, y - 1))) return false;
    }
  }
  return allowed_anchor(grid[0][0]);
}

std::optional<StateGrid> semantic_pack_exists(const GridSatInstance& inst, TableVariant variant) {
  const int w = inst.width;
  const int n = inst.vertex_count();
  if (n > kBruteForceVertexLimit) {
    throw Error(ErrorKind::SizeLimitExceeded, "semantic search limited to 24 vertices");
  }
  StateGrid grid(inst.height, std::vector<State>(w, State::OT));
  std::vector<int> choice(n, -1);
  auto options = [](int x) { return column_is_even(x) ? 4 : 2; };
  auto pick = [](int x, int k) {
    return column_is_even(x) ? kEvenStates[k] : kOddStates[k];
  };
  auto fits = [&](int i) {
    int x = i % w, y = i / w;
    State s = grid[y][x];
    if (i == 0 && !allowed_anchor(s)) return false;
    if (x > 0 && !allowed_horizontal(grid[y][x - 1], s, inst.h_class(x - 1, y), variant))
      return false;
    if (y > 0 && !allowed_vertical(grid[y - 1][x], s, inst.v_class(x, y - 1))) return false;
    return true;
  };
  int i = 0;
  while (i >= 0) {
    if (i == n) return grid;
    int x = i % w;
    if (++choice[i] >= options(x)) {
      choice[i] = -1;
      --i;
      continue;
    }
    grid[i / w][x] = pick(x, choice[i]);
    if (fits(i)) ++i;
  }
  return std::nullopt;
}

Assignment project(const StateGrid& grid) {
  Assignment a;
  for (const auto& row : grid) {
    std::vector<bool> r;
    for (State s : row) r.push_back(own_truth(s));
    a.truth.push_back(std::move(r));
  }
  return a;
}

std::string dump_tables_csv(TableVariant variant) {
  std::ostringstream os;
  os << "table,delta,from,to,context,wire,inverter,and,dontcare\n";
  for (State s : kAllStates) {
    os << "states," << shift_of(s) << "," << to_string(s) << ",,"
       << (is_even(s) ? "even" : "odd") << ",,,,\n";
  }
  auto group = [](bool on, bool even) -> std::string { return on ? (even ? "even" : "odd") : ""; };
  for (const TableRow& r : kHorizontal) {
    bool keep = variant == TableVariant::Printed || !is_even(r.to) ||
                *left_truth(r.to) == own_truth(r.from);
    auto g = [&](bool on) { return group(on && keep, r.even_group); };
    os << "horizontal," << r.delta << "," << to_string(r.from) << "," << to_string(r.to) << ","
       << (r.even_group ? "even" : "odd") << "," << g(r.wire) << "," << g(r.inverter) << ","
       << g(r.and_gate) << "," << g(r.dont_care) << "\n";
  }
  for (const TableRow& r : kVertical) {
    if (r.delta == 0) {
      // The printed zero row covers all six same-state transitions at once.
      if (r.from != State::EFF) continue;
      os << "vertical,0,same,same,even;odd,even;odd,,,even;odd\n";
      continue;
    }
    auto g = [&](bool on) { return group(on, r.even_group); };
    os << "vertical," << r.delta << "," << to_string(r.from) << "," << to_string(r.to) << ","
       << (r.even_group ? "even" : "odd") << "," << g(r.wire) << "," << g(r.inverter) << ","
       << g(r.and_gate) << "," << g(r.dont_care) << "\n";
  }
  return os.str();
}

}  // namespace polypack
