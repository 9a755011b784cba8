#pragma once

#include "matesmith/types.hpp"

#include <array>
#include <bit>
#include <cstdint>

namespace matesmith {

using Bitboard = std::uint64_t;

constexpr Bitboard bb(Square s) { return 1ULL << s.index; }
constexpr Bitboard bb(int sq) { return 1ULL << sq; }

constexpr int lsb(Bitboard b) { return std::countr_zero(b); }
constexpr int msb(Bitboard b) { return 63 - std::countl_zero(b); }
constexpr int popcount(Bitboard b) { return std::popcount(b); }

constexpr int pop_lsb(Bitboard& b) {
  int s = lsb(b);
  b &= b - 1;
  return s;
}

namespace detail {

// Directions indexed 0..7: N, NE, E, SE, S, SW, W, NW.
constexpr int dir_df[8] = {0, 1, 1, 1, 0, -1, -1, -1};
constexpr int dir_dr[8] = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr bool dir_positive[8] = {true, true, true, false, false, false, false, true};
// NW (df=-1, dr=+1) moves to a higher index (+7), so it scans "positive".

constexpr Bitboard ray_of(int sq, int d) {
  Bitboard r = 0;
  int f = sq & 7, k = sq >> 3;
  f += dir_df[d];
  k += dir_dr[d];
  while (f >= 0 && f < 8 && k >= 0 && k < 8) {
    r |= 1ULL << (k * 8 + f);
    f += dir_df[d];
    k += dir_dr[d];
  }
  return r;
}

struct RayTable {
  Bitboard ray[8][64] = {};
};

constexpr RayTable make_rays() {
  RayTable t;
  for (int d = 0; d < 8; ++d)
    for (int s = 0; s < 64; ++s) t.ray[d][s] = ray_of(s, d);
  return t;
}

inline constexpr RayTable rays = make_rays();

constexpr Bitboard leaper_mask(int sq, const int (*deltas)[2], int n) {
  Bitboard m = 0;
  int f = sq & 7, r = sq >> 3;
  for (int i = 0; i < n; ++i) {
    int ff = f + deltas[i][0], rr = r + deltas[i][1];
    if (ff >= 0 && ff < 8 && rr >= 0 && rr < 8) m |= 1ULL << (rr * 8 + ff);
  }
  return m;
}

constexpr std::array<Bitboard, 64> make_knight_table() {
  constexpr int d[8][2] = {{1, 2}, {2, 1}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}};
  std::array<Bitboard, 64> t{};
  for (int s = 0; s < 64; ++s) t[s] = leaper_mask(s, d, 8);
  return t;
}

constexpr std::array<Bitboard, 64> make_king_table() {
  constexpr int d[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  std::array<Bitboard, 64> t{};
  for (int s = 0; s < 64; ++s) t[s] = leaper_mask(s, d, 8);
  return t;
}

constexpr std::array<std::array<Bitboard, 64>, 2> make_pawn_attack_table() {
  std::array<std::array<Bitboard, 64>, 2> t{};
  for (int s = 0; s < 64; ++s) {
    constexpr int dw[2][2] = {{-1, 1}, {1, 1}};
    constexpr int db[2][2] = {{-1, -1}, {1, -1}};
    t[0][s] = leaper_mask(s, dw, 2); // White pawn on s attacks these squares
    t[1][s] = leaper_mask(s, db, 2);
  }
  return t;
}

} // namespace detail

inline constexpr std::array<Bitboard, 64> knight_attack_table = detail::make_knight_table();
inline constexpr std::array<Bitboard, 64> king_attack_table = detail::make_king_table();
inline constexpr std::array<std::array<Bitboard, 64>, 2> pawn_attack_table = detail::make_pawn_attack_table();

inline Bitboard knight_attacks(int sq) { return knight_attack_table[sq]; }
inline Bitboard king_attacks(int sq) { return king_attack_table[sq]; }
inline Bitboard pawn_attacks(Color c, int sq) { return pawn_attack_table[static_cast<int>(c)][sq]; }

inline Bitboard slider_attacks_dir(int sq, int d, Bitboard occ) {
  Bitboard ray = detail::rays.ray[d][sq];
  Bitboard blockers = ray & occ;
  if (blockers) {
    int first = detail::dir_positive[d] ? lsb(blockers) : msb(blockers);
    ray ^= detail::rays.ray[d][first];
  }
  return ray;
}

inline Bitboard rook_attacks(int sq, Bitboard occ) {
  return slider_attacks_dir(sq, 0, occ) | slider_attacks_dir(sq, 2, occ) |
         slider_attacks_dir(sq, 4, occ) | slider_attacks_dir(sq, 6, occ);
}

inline Bitboard bishop_attacks(int sq, Bitboard occ) {
  return slider_attacks_dir(sq, 1, occ) | slider_attacks_dir(sq, 3, occ) |
         slider_attacks_dir(sq, 5, occ) | slider_attacks_dir(sq, 7, occ);
}

inline Bitboard queen_attacks(int sq, Bitboard occ) { return rook_attacks(sq, occ) | bishop_attacks(sq, occ); }

// Attack set of a piece of `kind`/`color` standing on `sq` with the given occupancy.
inline Bitboard attacks_from(PieceKind kind, Color color, int sq, Bitboard occ) {
  switch (kind) {
    case PieceKind::Pawn: return pawn_attacks(color, sq);
    case PieceKind::Knight: return knight_attacks(sq);
    case PieceKind::Bishop: return bishop_attacks(sq, occ);
    case PieceKind::Rook: return rook_attacks(sq, occ);
    case PieceKind::Queen: return queen_attacks(sq, occ);
    case PieceKind::King: return king_attacks(sq);
  }
  return 0;
}

} // namespace matesmith
