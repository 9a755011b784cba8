#pragma once

#include "matesmith/position.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace matesmith {

// Leaf count of the legal-move tree at exactly `depth` plies.
inline std::uint64_t perft(const Position& p, int depth) {
  if (depth <= 0) return 1;
  std::uint64_t total = 0;
  p.for_each_legal([&](const Move&, const Position& child) {
    total += depth == 1 ? 1 : perft(child, depth - 1);
    return false;
  });
  return total;
}

// Per-root-move breakdown in canonical move order, for divide-style debugging.
inline std::vector<std::pair<Move, std::uint64_t>> perft_split(const Position& p, int depth) {
  std::vector<std::pair<Move, std::uint64_t>> out;
  for (const Move& m : p.legal_moves())
    out.emplace_back(m, depth <= 1 ? 1 : perft(p.apply_unchecked(m), depth - 1));
  return out;
}

} // namespace matesmith
