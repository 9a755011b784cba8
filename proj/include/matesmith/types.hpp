#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace matesmith {

enum class Color : std::uint8_t { White = 0, Black = 1 };

constexpr Color opponent(Color c) { return c == Color::White ? Color::Black : Color::White; }

enum class PieceKind : std::uint8_t { Pawn = 0, Knight, Bishop, Rook, Queen, King };

constexpr char kind_letter(PieceKind k) { return "PNBRQK"[static_cast<int>(k)]; }

constexpr int piece_value(PieceKind k) {
  switch (k) {
    case PieceKind::Pawn: return 1;
    case PieceKind::Knight: return 3;
    case PieceKind::Bishop: return 3;
    case PieceKind::Rook: return 5;
    case PieceKind::Queen: return 9;
    case PieceKind::King: return 0;
  }
  return 0;
}

struct Piece {
  Color color;
  PieceKind kind;
  bool operator==(const Piece&) const = default;
};

// Squares are ordered rank-major: index = rank * 8 + file, a1 = 0, h8 = 63.
struct Square {
  std::int8_t index = 0;

  constexpr Square() = default;
  constexpr explicit Square(int idx) : index(static_cast<std::int8_t>(idx)) {}
  static constexpr Square of(int file, int rank) { return Square(rank * 8 + file); }

  constexpr int file() const { return index & 7; }
  constexpr int rank() const { return index >> 3; }
  constexpr bool valid() const { return index >= 0 && index < 64; }

  std::string name() const {
    std::string s;
    s += static_cast<char>('a' + file());
    s += static_cast<char>('1' + rank());
    return s;
  }

  friend constexpr auto operator<=>(Square a, Square b) { return a.index <=> b.index; }
  friend constexpr bool operator==(Square a, Square b) { return a.index == b.index; }
};

inline std::optional<Square> square_from_name(const std::string& s) {
  if (s.size() != 2 || s[0] < 'a' || s[0] > 'h' || s[1] < '1' || s[1] > '8') return std::nullopt;
  return Square::of(s[0] - 'a', s[1] - '1');
}

// A single ply. Equality and ordering consider (from, to, promotion) only;
// capture/check/checkmate are annotations filled by the generator or on
// demand and never participate in identity.
struct Move {
  Square from;
  Square to;
  std::optional<PieceKind> promotion;
  bool capture = false;
  bool check = false;
  bool checkmate = false;

  friend bool operator==(const Move& a, const Move& b) {
    return a.from == b.from && a.to == b.to && a.promotion == b.promotion;
  }
};

inline int promotion_order(const std::optional<PieceKind>& p) {
  return p ? 1 + static_cast<int>(*p) : 0;
}

inline bool move_less(const Move& a, const Move& b) {
  if (a.from != b.from) return a.from < b.from;
  if (a.to != b.to) return a.to < b.to;
  return promotion_order(a.promotion) < promotion_order(b.promotion);
}

// Long algebraic form used for machine-facing output ("c1e2", "e7e8q").
inline std::string move_uci(const Move& m) {
  std::string s = m.from.name() + m.to.name();
  if (m.promotion) s += static_cast<char>(std::tolower(kind_letter(*m.promotion)));
  return s;
}

enum class GameState : std::uint8_t { Ongoing, Check, Checkmate, Stalemate };

inline const char* game_state_name(GameState s) {
  switch (s) {
    case GameState::Ongoing: return "ongoing";
    case GameState::Check: return "check";
    case GameState::Checkmate: return "checkmate";
    case GameState::Stalemate: return "stalemate";
  }
  return "?";
}

// Parse/validation failures carry a distinct code per violated rule.
enum class PositionError : std::uint8_t {
  MalformedFen,
  KingCountInvalid,
  KingsAdjacent,
  SideNotToMoveInCheck,
  PawnOnTerminalRank,
};

inline const char* position_error_name(PositionError e) {
  switch (e) {
    case PositionError::MalformedFen: return "malformed FEN field";
    case PositionError::KingCountInvalid: return "each side needs exactly one king";
    case PositionError::KingsAdjacent: return "kings on adjacent squares";
    case PositionError::SideNotToMoveInCheck: return "side not to move is in check";
    case PositionError::PawnOnTerminalRank: return "pawn on first or last rank";
  }
  return "?";
}

class FenParseError : public std::runtime_error {
 public:
  FenParseError(PositionError code, const std::string& detail)
      : std::runtime_error(std::string(position_error_name(code)) + ": " + detail), code_(code) {}
  PositionError code() const { return code_; }

 private:
  PositionError code_;
};

class IllegalMoveError : public std::runtime_error {
 public:
  explicit IllegalMoveError(const std::string& detail) : std::runtime_error("illegal move: " + detail) {}
};

enum class SanError : std::uint8_t { Unparseable, NoLegalMatch, Ambiguous };

class SanParseError : public std::runtime_error {
 public:
  SanParseError(SanError code, const std::string& detail)
      : std::runtime_error("SAN: " + detail), code_(code) {}
  SanError code() const { return code_; }

 private:
  SanError code_;
};

} // namespace matesmith
