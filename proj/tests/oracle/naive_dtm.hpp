// Brute-force distance-to-mate oracle on top of the naive board model.
// Full-width minimax, no transposition table, no pruning beyond exact
// minimax shortcuts (a found mate-in-0 child cannot be improved on, a
// single surviving defense refutes the node). Intended for DTM <= 3.
#pragma once

#include "naive_board.hpp"

#include <algorithm>
#include <optional>

namespace oracle {

constexpr int kNoMate = 1000; // sentinel: no forced mate within the cap

// White moves remaining for White to force mate from a Black-to-move node,
// searching at most `cap` further White moves. kNoMate if not forced.
inline int defender_value(const Board& b, int cap);

// Same from a White-to-move node; result counts the move White now makes.
inline int attacker_value(const Board& b, int cap) {
  if (cap <= 0) return kNoMate;
  auto moves = legal_moves(b);
  int best = kNoMate;
  for (const auto& m : moves) {
    Board n = apply(b, m);
    int v = defender_value(n, cap - 1);
    if (v != kNoMate) best = std::min(best, v + 1);
    if (best == 1) break; // mate in one is minimal
  }
  return best;
}

inline int defender_value(const Board& b, int cap) {
  auto moves = legal_moves(b);
  if (moves.empty()) return in_check(b, b.white_to_move) ? 0 : kNoMate;
  int worst = 0;
  for (const auto& m : moves) {
    Board n = apply(b, m);
    int v = attacker_value(n, cap);
    if (v == kNoMate) return kNoMate; // this defense escapes
    worst = std::max(worst, v);
  }
  return worst;
}

// Exact DTM in White moves from a White-to-move position, or nullopt when
// there is no forced mate within `cap` White moves.
inline std::optional<int> dtm(const Board& b, int cap) {
  int v = attacker_value(b, cap);
  if (v == kNoMate || v > cap) return std::nullopt;
  return v;
}

// All first moves that force mate within `bound` White moves in total.
inline std::vector<std::string> key_moves(const Board& b, int bound) {
  std::vector<std::string> keys;
  for (const auto& m : legal_moves(b)) {
    Board n = apply(b, m);
    int v = defender_value(n, bound - 1);
    if (v != kNoMate && v <= bound - 1) keys.push_back(move_key(m));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

} // namespace oracle
