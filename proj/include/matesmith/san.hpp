#pragma once

#include "matesmith/position.hpp"

#include <string>
#include <vector>

namespace matesmith {

// Standard algebraic notation with minimal disambiguation: file first, then
// rank, then both. "+"/"#" suffixes come from the post-move classification.
inline std::string move_to_san(const Position& p, const Move& move) {
  const auto legal = p.legal_moves();
  const Move* found = nullptr;
  for (const Move& m : legal)
    if (m == move) found = &m;
  if (!found) throw IllegalMoveError(move_uci(move) + " in " + p.fen());
  const Move m = annotate(p, *found);
  const Piece piece = *p.piece_at(m.from);

  std::string san;
  if (piece.kind == PieceKind::King && std::abs(m.to.index - m.from.index) == 2) {
    san = m.to.index > m.from.index ? "O-O" : "O-O-O";
  } else if (piece.kind == PieceKind::Pawn) {
    if (m.capture) {
      san += static_cast<char>('a' + m.from.file());
      san += 'x';
    }
    san += m.to.name();
    if (m.promotion) {
      san += '=';
      san += kind_letter(*m.promotion);
    }
  } else {
    san += kind_letter(piece.kind);
    bool file_clash = false, rank_clash = false, any_clash = false;
    for (const Move& other : legal) {
      if (other == m || other.to != m.to) continue;
      if (p.piece_at(other.from)->kind != piece.kind) continue;
      any_clash = true;
      if (other.from.file() == m.from.file()) file_clash = true;
      if (other.from.rank() == m.from.rank()) rank_clash = true;
    }
    if (any_clash) {
      if (!file_clash)
        san += static_cast<char>('a' + m.from.file());
      else if (!rank_clash)
        san += static_cast<char>('1' + m.from.rank());
      else
        san += m.from.name();
    }
    if (m.capture) san += 'x';
    san += m.to.name();
  }
  if (m.checkmate)
    san += '#';
  else if (m.check)
    san += '+';
  return san;
}

inline Move parse_san(const Position& p, const std::string& text) {
  // strip annotation glyphs the notation tolerates
  std::string s = text;
  while (!s.empty() && (s.back() == '!' || s.back() == '?')) s.pop_back();
  if (s.empty()) throw SanParseError(SanError::Unparseable, "empty move text");

  bool want_check = false, want_mate = false;
  if (s.back() == '#') {
    want_mate = true;
    s.pop_back();
  } else if (s.back() == '+') {
    want_check = true;
    s.pop_back();
  }

  const auto legal = p.legal_moves();
  auto finish = [&](const Move& m) {
    Move a = annotate(p, m);
    if (want_mate && !a.checkmate) throw SanParseError(SanError::NoLegalMatch, text + " is not checkmate");
    if (want_check && !(a.check && !a.checkmate)) throw SanParseError(SanError::NoLegalMatch, text + " is not check");
    return a;
  };

  if (s == "O-O" || s == "0-0" || s == "O-O-O" || s == "0-0-0") {
    bool kingside = s == "O-O" || s == "0-0";
    for (const Move& m : legal) {
      if (p.piece_at(m.from)->kind != PieceKind::King) continue;
      if (kingside && m.to.index - m.from.index == 2) return finish(m);
      if (!kingside && m.from.index - m.to.index == 2) return finish(m);
    }
    throw SanParseError(SanError::NoLegalMatch, text);
  }

  PieceKind kind = PieceKind::Pawn;
  std::size_t i = 0;
  if (i < s.size() && std::string("KQRBN").find(s[i]) != std::string::npos) {
    switch (s[i]) {
      case 'K': kind = PieceKind::King; break;
      case 'Q': kind = PieceKind::Queen; break;
      case 'R': kind = PieceKind::Rook; break;
      case 'B': kind = PieceKind::Bishop; break;
      case 'N': kind = PieceKind::Knight; break;
    }
    ++i;
  }

  int from_file = -1, from_rank = -1;
  std::optional<PieceKind> promo;
  bool saw_capture = false;

  // collect coordinate/`x` tokens; the last full square is the destination
  std::vector<char> tail(s.begin() + i, s.end());
  if (!tail.empty() && tail.size() >= 2 && tail[tail.size() - 2] == '=') {
    switch (tail.back()) {
      case 'Q': promo = PieceKind::Queen; break;
      case 'R': promo = PieceKind::Rook; break;
      case 'B': promo = PieceKind::Bishop; break;
      case 'N': promo = PieceKind::Knight; break;
      default: throw SanParseError(SanError::Unparseable, text);
    }
    tail.pop_back();
    tail.pop_back();
  }
  if (tail.size() < 2) throw SanParseError(SanError::Unparseable, text);
  char rank_c = tail.back();
  char file_c = tail[tail.size() - 2];
  if (file_c < 'a' || file_c > 'h' || rank_c < '1' || rank_c > '8') throw SanParseError(SanError::Unparseable, text);
  Square to = Square::of(file_c - 'a', rank_c - '1');
  for (std::size_t j = 0; j + 2 < tail.size(); ++j) {
    char c = tail[j];
    if (c == 'x')
      saw_capture = true;
    else if (c >= 'a' && c <= 'h')
      from_file = c - 'a';
    else if (c >= '1' && c <= '8')
      from_rank = c - '1';
    else
      throw SanParseError(SanError::Unparseable, text);
  }

  std::vector<Move> matches;
  for (const Move& m : legal) {
    if (m.to != to) continue;
    if (p.piece_at(m.from)->kind != kind) continue;
    if (from_file >= 0 && m.from.file() != from_file) continue;
    if (from_rank >= 0 && m.from.rank() != from_rank) continue;
    if (promo != m.promotion) continue;
    matches.push_back(m);
  }
  if (matches.empty()) throw SanParseError(SanError::NoLegalMatch, text + " in " + p.fen());
  if (matches.size() > 1) throw SanParseError(SanError::Ambiguous, text + " in " + p.fen());
  Move m = matches.front();
  if (saw_capture && !annotate(p, m).capture) throw SanParseError(SanError::NoLegalMatch, text + " is not a capture");
  return finish(m);
}

// Applies a whitespace-separated SAN sequence, skipping move numbers and
// result tokens. Throws SanParseError naming the failing ply.
inline Position apply_san_line(const Position& start, const std::string& movetext, std::vector<Move>* played = nullptr) {
  Position p = start;
  std::istringstream in(movetext);
  std::string token;
  int ply = 0;
  while (in >> token) {
    if (token.empty()) continue;
    if (token == "1-0" || token == "0-1" || token == "1/2-1/2" || token == "*") break;
    // "12." / "12..." prefixes, possibly glued to the move
    std::size_t k = 0;
    while (k < token.size() && std::isdigit(static_cast<unsigned char>(token[k]))) ++k;
    if (k > 0 && k < token.size() && token[k] == '.') {
      while (k < token.size() && token[k] == '.') ++k;
      token = token.substr(k);
      if (token.empty()) continue;
    } else if (k == token.size()) {
      continue;
    }
    ++ply;
    try {
      Move m = parse_san(p, token);
      if (played) played->push_back(m);
      p = p.apply_unchecked(m);
    } catch (const SanParseError& e) {
      throw SanParseError(e.code(), "ply " + std::to_string(ply) + " ('" + token + "'): " + e.what());
    }
  }
  return p;
}

} // namespace matesmith
