#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polypack/gridsat.hpp"

namespace polypack {

/// Shift state of one packed copy. Even-column names read E + left truth +
/// own truth, so ETF is "own False, left neighbour True".
enum class State : std::uint8_t { OT, OF, ETT, ETF, EFT, EFF };

inline constexpr std::array<State, 6> kAllStates{State::OT,  State::OF,  State::ETT,
                                                 State::ETF, State::EFT, State::EFF};
inline constexpr std::array<State, 2> kOddStates{State::OT, State::OF};
inline constexpr std::array<State, 4> kEvenStates{State::ETT, State::ETF, State::EFT, State::EFF};

/// Number of shifted copies of each inclusion: every signed difference in [-31, 31].
inline constexpr int kShiftCopies = 63;
inline constexpr int kMaxShift = 31;

const char* to_string(State s);
std::optional<State> parse_state(const std::string& name);

/// Multiple of the shift quantum: 0, 1, 3, 7, 15, 31.
int shift_of(State s);
bool is_even(State s);
bool own_truth(State s);
/// Encoded left-neighbour truth; nullopt for odd-column states.
std::optional<bool> left_truth(State s);
bool column_is_even(int x);

State state_of(const Assignment& a, int x, int y);

enum class TableVariant { Filtered, Printed };

/// One printed row of the horizontal or vertical micronotch table.
struct TableRow {
  int delta;
  State from;
  State to;
  bool even_group;  // parity of the column group the circles sit under
  bool wire, inverter, and_gate, dont_care;
};

/// Table rows in printed order. The vertical zero row is expanded into its
/// six same-state transitions, each flagged with its own parity group.
const std::vector<TableRow>& horizontal_rows();
const std::vector<TableRow>& vertical_rows();

bool allowed_horizontal(State left, State right, EdgeClass cls,
                        TableVariant variant = TableVariant::Filtered);
bool allowed_vertical(State upper, State lower, EdgeClass cls);
/// The enclosing container acts as a don't-care neighbour except at (0,0).
bool allowed_anchor(State s);

/// State grid indexed [y][x].
using StateGrid = std::vector<std::vector<State>>;

/// All pairwise transitions and the anchor pass for `grid`.
bool state_grid_accepted(const GridSatInstance& inst, const StateGrid& grid,
                         TableVariant variant = TableVariant::Filtered);

/// Backtracking search over parity-respecting state grids. Throws
/// Error(SizeLimitExceeded) above 24 vertices.
std::optional<StateGrid> semantic_pack_exists(const GridSatInstance& inst,
                                              TableVariant variant = TableVariant::Filtered);

/// Calls `fn` with every parity-respecting state grid (accepted or not).
/// Returns false if `fn` stopped the walk by returning false.
template <typename Fn>
bool for_each_state_grid(int width, int height, Fn&& fn);

Assignment project(const StateGrid& grid);

/// CSV transcription of the three tables, for audit.
std::string dump_tables_csv(TableVariant variant = TableVariant::Printed);

// ---------------------------------------------------------------------------

template <typename Fn>
bool for_each_state_grid(int width, int height, Fn&& fn) {
  StateGrid grid(height, std::vector<State>(width, State::OT));
  std::vector<int> digit(width * height, 0);
  auto radix = [width](int i) { return column_is_even(i % width) ? 4 : 2; };
  auto apply = [&](int i) {
    int x = i % width;
    grid[i / width][x] = column_is_even(x) ? kEvenStates[digit[i]] : kOddStates[digit[i]];
  };
  for (int i = 0; i < width * height; ++i) apply(i);
  while (true) {
    if (!fn(static_cast<const StateGrid&>(grid))) return false;
    int i = width * height - 1;
    while (i >= 0) {
      if (++digit[i] < radix(i)) {
        apply(i);
        break;
      }
      digit[i] = 0;
      apply(i);
      --i;
    }
    if (i < 0) return true;
  }
}

}  // namespace polypack
