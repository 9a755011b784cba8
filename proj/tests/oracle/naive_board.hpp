// Deliberately simple reference chess model used as an independent oracle.
// Plain 8x8 char array, offset move generation, legality by apply-and-scan.
// Shares nothing with the main library apart from the FEN text format.
#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

// Board cells hold FEN piece letters ('K','q',...) or '.' for empty.
// Index = rank * 8 + file, rank 0 = White's first rank.
struct Board {
  std::array<char, 64> cell{};
  bool white_to_move = true;
  std::string castling = "-";
  int ep = -1; // target square index or -1
  int halfmove = 0;
  int fullmove = 1;
};

struct OMove {
  int from = 0;
  int to = 0;
  char promo = 0; // 'q','r','b','n' uppercased for White, 0 if none
  bool operator==(const OMove&) const = default;
};

inline bool is_white_piece(char c) { return c != '.' && std::isupper(static_cast<unsigned char>(c)); }
inline bool is_black_piece(char c) { return c != '.' && std::islower(static_cast<unsigned char>(c)); }

inline Board parse_fen(const std::string& fen) {
  Board b;
  std::istringstream in(fen);
  std::string placement, stm, castling, ep, half, full;
  if (!(in >> placement >> stm >> castling >> ep >> half >> full))
    throw std::runtime_error("oracle: bad fen: " + fen);
  b.cell.fill('.');
  int rank = 7, file = 0;
  for (char c : placement) {
    if (c == '/') {
      --rank;
      file = 0;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      file += c - '0';
    } else {
      if (rank < 0 || file > 7) throw std::runtime_error("oracle: fen overflow");
      b.cell[rank * 8 + file] = c;
      ++file;
    }
  }
  b.white_to_move = (stm == "w");
  b.castling = castling;
  if (ep != "-") b.ep = (ep[0] - 'a') + (ep[1] - '1') * 8;
  b.halfmove = std::stoi(half);
  b.fullmove = std::stoi(full);
  return b;
}

inline int find_king(const Board& b, bool white) {
  char k = white ? 'K' : 'k';
  for (int i = 0; i < 64; ++i)
    if (b.cell[i] == k) return i;
  return -1;
}

// Is square `sq` attacked by the given side? Scans the whole board.
inline bool attacked(const Board& b, int sq, bool by_white) {
  int tf = sq % 8, tr = sq / 8;
  static const int knight_d[8][2] = {{1, 2}, {2, 1}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}};
  static const int king_d[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  for (int i = 0; i < 64; ++i) {
    char c = b.cell[i];
    if (c == '.' || is_white_piece(c) != by_white) continue;
    int f = i % 8, r = i / 8;
    char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (up == 'P') {
      int dir = by_white ? 1 : -1;
      if (r + dir == tr && (f - 1 == tf || f + 1 == tf)) return true;
    } else if (up == 'N') {
      for (auto& d : knight_d)
        if (f + d[0] == tf && r + d[1] == tr) return true;
    } else if (up == 'K') {
      for (auto& d : king_d)
        if (f + d[0] == tf && r + d[1] == tr) return true;
    } else {
      bool diag = (up == 'B' || up == 'Q');
      bool orth = (up == 'R' || up == 'Q');
      for (auto& d : king_d) {
        bool is_diag = d[0] != 0 && d[1] != 0;
        if (is_diag ? !diag : !orth) continue;
        int ff = f + d[0], rr = r + d[1];
        while (ff >= 0 && ff < 8 && rr >= 0 && rr < 8) {
          int j = rr * 8 + ff;
          if (j == sq) return true;
          if (b.cell[j] != '.') break;
          ff += d[0];
          rr += d[1];
        }
      }
    }
  }
  return false;
}

inline bool in_check(const Board& b, bool white) {
  int k = find_king(b, white);
  return k >= 0 && attacked(b, k, !white);
}

// Applies a pseudo-legal move. No legality verification here.
inline Board apply(const Board& b, const OMove& m) {
  Board n = b;
  char piece = n.cell[m.from];
  char up = static_cast<char>(std::toupper(static_cast<unsigned char>(piece)));
  bool capture = n.cell[m.to] != '.';
  n.cell[m.to] = piece;
  n.cell[m.from] = '.';
  // en passant capture removes the pawn behind the target square
  if (up == 'P' && m.to == b.ep) {
    int cap_sq = m.to + (b.white_to_move ? -8 : 8);
    n.cell[cap_sq] = '.';
    capture = true;
  }
  if (m.promo) n.cell[m.to] = b.white_to_move ? m.promo : static_cast<char>(std::tolower(static_cast<unsigned char>(m.promo)));
  // castling: move the rook too
  if (up == 'K' && m.to - m.from == 2) {
    n.cell[m.from + 1] = n.cell[m.from + 3];
    n.cell[m.from + 3] = '.';
  }
  if (up == 'K' && m.from - m.to == 2) {
    n.cell[m.from - 1] = n.cell[m.from - 4];
    n.cell[m.from - 4] = '.';
  }
  // castling rights
  auto drop = [&n](char c) {
    for (auto& ch : n.castling)
      if (ch == c) ch = '.';
  };
  if (piece == 'K') { drop('K'); drop('Q'); }
  if (piece == 'k') { drop('k'); drop('q'); }
  for (int sq : {m.from, m.to}) {
    if (sq == 0) drop('Q');
    if (sq == 7) drop('K');
    if (sq == 56) drop('q');
    if (sq == 63) drop('k');
  }
  std::string rights;
  for (char c : n.castling)
    if (c != '.' && c != '-') rights += c;
  n.castling = rights.empty() ? "-" : rights;
  // en passant target
  n.ep = -1;
  if (up == 'P' && std::abs(m.to - m.from) == 16) n.ep = (m.from + m.to) / 2;
  n.halfmove = (up == 'P' || capture) ? 0 : b.halfmove + 1;
  if (!b.white_to_move) ++n.fullmove;
  n.white_to_move = !b.white_to_move;
  return n;
}

inline void pseudo_moves(const Board& b, std::vector<OMove>& out) {
  bool w = b.white_to_move;
  static const int knight_d[8][2] = {{1, 2}, {2, 1}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}};
  static const int king_d[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  for (int i = 0; i < 64; ++i) {
    char c = b.cell[i];
    if (c == '.' || is_white_piece(c) != w) continue;
    int f = i % 8, r = i / 8;
    char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    auto push = [&](int to, char promo = 0) { out.push_back({i, to, promo}); };
    if (up == 'P') {
      int dir = w ? 1 : -1;
      int start = w ? 1 : 6;
      int last = w ? 7 : 0;
      auto pawn_to = [&](int to) {
        if (to / 8 == last)
          for (char p : {'Q', 'R', 'B', 'N'}) push(to, p);
        else
          push(to);
      };
      int fwd = i + 8 * dir;
      if (fwd >= 0 && fwd < 64 && b.cell[fwd] == '.') {
        pawn_to(fwd);
        int dbl = i + 16 * dir;
        if (r == start && b.cell[dbl] == '.') push(dbl);
      }
      for (int df : {-1, 1}) {
        int ff = f + df;
        if (ff < 0 || ff > 7) continue;
        int to = (r + dir) * 8 + ff;
        if (to < 0 || to >= 64) continue;
        bool enemy = b.cell[to] != '.' && is_white_piece(b.cell[to]) != w;
        if (enemy)
          pawn_to(to);
        else if (to == b.ep)
          push(to);
      }
    } else if (up == 'N' || up == 'K') {
      auto& tbl = up == 'N' ? knight_d : king_d;
      for (auto& d : tbl) {
        int ff = f + d[0], rr = r + d[1];
        if (ff < 0 || ff > 7 || rr < 0 || rr > 7) continue;
        int to = rr * 8 + ff;
        if (b.cell[to] == '.' || is_white_piece(b.cell[to]) != w) push(to);
      }
      if (up == 'K') {
        // castling
        char ks = w ? 'K' : 'k', qs = w ? 'Q' : 'q';
        int base = w ? 0 : 56;
        if (i == base + 4 && !in_check(b, w)) {
          if (b.castling.find(ks) != std::string::npos && b.cell[base + 5] == '.' && b.cell[base + 6] == '.' &&
              !attacked(b, base + 5, !w) && !attacked(b, base + 6, !w))
            push(base + 6);
          if (b.castling.find(qs) != std::string::npos && b.cell[base + 3] == '.' && b.cell[base + 2] == '.' &&
              b.cell[base + 1] == '.' && !attacked(b, base + 3, !w) && !attacked(b, base + 2, !w))
            push(base + 2);
        }
      }
    } else {
      bool diag = (up == 'B' || up == 'Q');
      bool orth = (up == 'R' || up == 'Q');
      for (auto& d : king_d) {
        bool is_diag = d[0] != 0 && d[1] != 0;
        if (is_diag ? !diag : !orth) continue;
        int ff = f + d[0], rr = r + d[1];
        while (ff >= 0 && ff < 8 && rr >= 0 && rr < 8) {
          int to = rr * 8 + ff;
          if (b.cell[to] == '.') {
            push(to);
          } else {
            if (is_white_piece(b.cell[to]) != w) push(to);
            break;
          }
          ff += d[0];
          rr += d[1];
        }
      }
    }
  }
}

inline std::vector<OMove> legal_moves(const Board& b) {
  std::vector<OMove> pseudo, out;
  pseudo_moves(b, pseudo);
  for (const auto& m : pseudo) {
    Board n = apply(b, m);
    if (!in_check(n, b.white_to_move)) out.push_back(m);
  }
  return out;
}

inline std::uint64_t perft(const Board& b, int depth) {
  if (depth == 0) return 1;
  auto moves = legal_moves(b);
  if (depth == 1) return moves.size();
  std::uint64_t total = 0;
  for (const auto& m : moves) total += perft(apply(b, m), depth - 1);
  return total;
}

inline std::string square_name(int sq) {
  std::string s;
  s += static_cast<char>('a' + sq % 8);
  s += static_cast<char>('1' + sq / 8);
  return s;
}

// "e3g2" / "e7e8q" style key, used for set comparisons between generators.
inline std::string move_key(const OMove& m) {
  std::string s = square_name(m.from) + square_name(m.to);
  if (m.promo) s += static_cast<char>(std::tolower(static_cast<unsigned char>(m.promo)));
  return s;
}

} // namespace oracle
