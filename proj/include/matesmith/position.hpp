#pragma once

#include "matesmith/bitboard.hpp"
#include "matesmith/types.hpp"
#include "matesmith/zobrist.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace matesmith {

namespace castle {
constexpr std::uint8_t wk = 1, wq = 2, bk = 4, bq = 8;
}

// Immutable full chess state. All mutators return a new value; instances are
// safe to share across threads.
class Position {
 public:
  static constexpr std::uint8_t kEmpty = 12;

  Position() { mailbox_.fill(kEmpty); }

  // --- construction ---------------------------------------------------------

  static Position from_fen(const std::string& text) {
    std::istringstream in(text);
    std::string placement, stm, castling, ep, half, full;
    if (!(in >> placement >> stm >> castling >> ep >> half >> full))
      throw FenParseError(PositionError::MalformedFen, "expected 6 fields in '" + text + "'");
    std::string extra;
    if (in >> extra) throw FenParseError(PositionError::MalformedFen, "trailing field '" + extra + "'");

    Position p;
    int rank = 7, file = 0;
    for (char c : placement) {
      if (c == '/') {
        if (file != 8 || rank == 0) throw FenParseError(PositionError::MalformedFen, "bad rank break");
        --rank;
        file = 0;
      } else if (c >= '1' && c <= '8') {
        file += c - '0';
        if (file > 8) throw FenParseError(PositionError::MalformedFen, "rank overflow");
      } else {
        auto piece = piece_from_letter(c);
        if (!piece || file > 7) throw FenParseError(PositionError::MalformedFen, std::string("bad piece '") + c + "'");
        p.put(Square::of(file, rank), *piece);
        ++file;
      }
    }
    if (file != 8 || rank != 0) throw FenParseError(PositionError::MalformedFen, "placement has wrong shape");

    if (stm == "w")
      p.stm_ = Color::White;
    else if (stm == "b")
      p.stm_ = Color::Black;
    else
      throw FenParseError(PositionError::MalformedFen, "side to move '" + stm + "'");

    if (castling != "-") {
      for (char c : castling) {
        switch (c) {
          case 'K': p.castling_ |= castle::wk; break;
          case 'Q': p.castling_ |= castle::wq; break;
          case 'k': p.castling_ |= castle::bk; break;
          case 'q': p.castling_ |= castle::bq; break;
          default: throw FenParseError(PositionError::MalformedFen, "castling '" + castling + "'");
        }
      }
    }

    if (ep != "-") {
      auto sq = square_from_name(ep);
      if (!sq || (sq->rank() != 2 && sq->rank() != 5))
        throw FenParseError(PositionError::MalformedFen, "en passant '" + ep + "'");
      p.ep_ = sq->index;
    }

    try {
      std::size_t pos = 0;
      int h = std::stoi(half, &pos);
      if (pos != half.size() || h < 0) throw std::invalid_argument(half);
      p.halfmove_ = static_cast<std::uint16_t>(h);
      int f = std::stoi(full, &pos);
      if (pos != full.size() || f < 1) throw std::invalid_argument(full);
      p.fullmove_ = static_cast<std::uint32_t>(f);
    } catch (const std::logic_error&) {
      throw FenParseError(PositionError::MalformedFen, "move counters '" + half + " " + full + "'");
    }

    if (auto err = p.validate()) throw FenParseError(*err, text);
    p.hash_ = p.compute_hash();
    return p;
  }

  std::string fen() const {
    std::ostringstream out;
    for (int rank = 7; rank >= 0; --rank) {
      int run = 0;
      for (int file = 0; file < 8; ++file) {
        std::uint8_t code = mailbox_[rank * 8 + file];
        if (code == kEmpty) {
          ++run;
        } else {
          if (run) out << run;
          run = 0;
          out << piece_letter(code);
        }
      }
      if (run) out << run;
      if (rank) out << '/';
    }
    out << ' ' << (stm_ == Color::White ? 'w' : 'b') << ' ';
    if (!castling_) {
      out << '-';
    } else {
      if (castling_ & castle::wk) out << 'K';
      if (castling_ & castle::wq) out << 'Q';
      if (castling_ & castle::bk) out << 'k';
      if (castling_ & castle::bq) out << 'q';
    }
    out << ' ' << (ep_ >= 0 ? Square(ep_).name() : "-");
    out << ' ' << halfmove_ << ' ' << fullmove_;
    return out.str();
  }

  // --- accessors -------------------------------------------------------------

  Color side_to_move() const { return stm_; }
  std::uint16_t halfmove_clock() const { return halfmove_; }
  std::uint32_t fullmove_number() const { return fullmove_; }
  std::uint64_t hash() const { return hash_; }
  std::uint8_t castling_rights() const { return castling_; }

  std::optional<Square> en_passant() const {
    if (ep_ < 0) return std::nullopt;
    return Square(ep_);
  }

  std::optional<Piece> piece_at(Square s) const {
    std::uint8_t code = mailbox_[s.index];
    if (code == kEmpty) return std::nullopt;
    return Piece{static_cast<Color>(code / 6), static_cast<PieceKind>(code % 6)};
  }

  Bitboard occupied() const { return by_color_[0] | by_color_[1]; }
  Bitboard pieces(Color c) const { return by_color_[static_cast<int>(c)]; }
  Bitboard pieces(Color c, PieceKind k) const {
    return by_color_[static_cast<int>(c)] & by_kind_[static_cast<int>(k)];
  }
  int piece_count() const { return popcount(occupied()); }

  Square king_square(Color c) const { return Square(lsb(pieces(c, PieceKind::King))); }

  // All pieces of `c` attacking square `sq` under current occupancy.
  Bitboard attackers_to(Square sq, Color c) const {
    Bitboard occ = occupied();
    int s = sq.index;
    Bitboard att = knight_attacks(s) & pieces(c, PieceKind::Knight);
    att |= king_attacks(s) & pieces(c, PieceKind::King);
    att |= pawn_attacks(opponent(c), s) & pieces(c, PieceKind::Pawn);
    att |= rook_attacks(s, occ) & (pieces(c, PieceKind::Rook) | pieces(c, PieceKind::Queen));
    att |= bishop_attacks(s, occ) & (pieces(c, PieceKind::Bishop) | pieces(c, PieceKind::Queen));
    return att;
  }

  bool attacked_by(Square sq, Color c) const { return attackers_to(sq, c) != 0; }

  bool in_check(Color c) const { return attacked_by(king_square(c), opponent(c)); }
  bool in_check() const { return in_check(stm_); }

  // --- validation ------------------------------------------------------------

  std::optional<PositionError> validate() const {
    if (popcount(pieces(Color::White, PieceKind::King)) != 1 ||
        popcount(pieces(Color::Black, PieceKind::King)) != 1)
      return PositionError::KingCountInvalid;
    if (king_attacks(king_square(Color::White).index) & pieces(Color::Black, PieceKind::King))
      return PositionError::KingsAdjacent;
    constexpr Bitboard terminal_ranks = 0xff000000000000ffULL;
    if (by_kind_[static_cast<int>(PieceKind::Pawn)] & terminal_ranks)
      return PositionError::PawnOnTerminalRank;
    if (in_check(opponent(stm_))) return PositionError::SideNotToMoveInCheck;
    return std::nullopt;
  }

  // --- move application ------------------------------------------------------

  // Fast path: `m` must come from this position's legal move set.
  Position apply_unchecked(const Move& m) const {
    Position n = apply_unchecked_raw(m);
    assert(n.hash_ == n.compute_hash());
    assert(!n.validate());
    return n;
  }

  // Strict contract: throws unless `m` is one of this position's legal moves.
  Position apply(const Move& m) const {
    for (const Move& legal : legal_moves())
      if (legal == m) return apply_unchecked(legal);
    throw IllegalMoveError(move_uci(m) + " in " + fen());
  }

  // --- move generation ---------------------------------------------------------

  // Calls f(move, child) for every legal move, in generation order (not the
  // canonical public order). Returning true from f stops the iteration.
  template <class F>
  void for_each_legal(F&& f) const {
    const Color us = stm_;
    Move buffer[kMaxMoves];
    int count = pseudo_moves(buffer);
    for (int i = 0; i < count; ++i) {
      Position child = apply_unchecked_raw(buffer[i]);
      if (child.in_check(us)) continue;
      if (f(buffer[i], child)) return;
    }
  }

  std::vector<Move> legal_moves() const {
    std::vector<Move> out;
    out.reserve(48);
    for_each_legal([&](const Move& m, const Position&) {
      out.push_back(m);
      return false;
    });
    std::sort(out.begin(), out.end(), move_less);
    return out;
  }

  bool has_legal_move() const {
    bool found = false;
    for_each_legal([&](const Move&, const Position&) {
      found = true;
      return true;
    });
    return found;
  }

  GameState classify() const {
    bool check = in_check();
    if (has_legal_move()) return check ? GameState::Check : GameState::Ongoing;
    return check ? GameState::Checkmate : GameState::Stalemate;
  }

  bool operator==(const Position& other) const {
    return mailbox_ == other.mailbox_ && stm_ == other.stm_ && castling_ == other.castling_ && ep_ == other.ep_ &&
           halfmove_ == other.halfmove_ && fullmove_ == other.fullmove_;
  }

 private:
  static constexpr int kMaxMoves = 256;

  std::array<Bitboard, 2> by_color_{};
  std::array<Bitboard, 6> by_kind_{};
  std::array<std::uint8_t, 64> mailbox_{};
  Color stm_ = Color::White;
  std::uint8_t castling_ = 0;
  std::int8_t ep_ = -1;
  std::uint16_t halfmove_ = 0;
  std::uint32_t fullmove_ = 1;
  std::uint64_t hash_ = 0;

  static std::optional<Piece> piece_from_letter(char c) {
    Color color = std::isupper(static_cast<unsigned char>(c)) ? Color::White : Color::Black;
    switch (std::tolower(static_cast<unsigned char>(c))) {
      case 'p': return Piece{color, PieceKind::Pawn};
      case 'n': return Piece{color, PieceKind::Knight};
      case 'b': return Piece{color, PieceKind::Bishop};
      case 'r': return Piece{color, PieceKind::Rook};
      case 'q': return Piece{color, PieceKind::Queen};
      case 'k': return Piece{color, PieceKind::King};
      default: return std::nullopt;
    }
  }

  static char piece_letter(std::uint8_t code) {
    char c = kind_letter(static_cast<PieceKind>(code % 6));
    return code / 6 == 0 ? c : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }

  void put(Square s, Piece p) {
    put_coded(s, static_cast<std::uint8_t>(static_cast<int>(p.color) * 6 + static_cast<int>(p.kind)));
  }

  void put_coded(Square s, std::uint8_t code) {
    mailbox_[s.index] = code;
    by_color_[code / 6] |= bb(s);
    by_kind_[code % 6] |= bb(s);
    hash_ ^= zobrist::keys.piece[code][s.index];
  }

  void remove(Square s, std::uint8_t code) {
    mailbox_[s.index] = kEmpty;
    by_color_[code / 6] &= ~bb(s);
    by_kind_[code % 6] &= ~bb(s);
    hash_ ^= zobrist::keys.piece[code][s.index];
  }

  std::uint64_t compute_hash() const {
    std::uint64_t h = 0;
    for (int s = 0; s < 64; ++s)
      if (mailbox_[s] != kEmpty) h ^= zobrist::keys.piece[mailbox_[s]][s];
    h ^= zobrist::keys.castling[castling_];
    if (ep_ >= 0) h ^= zobrist::keys.ep_file[ep_ & 7];
    if (stm_ == Color::Black) h ^= zobrist::keys.black_to_move;
    return h;
  }

  // Same as apply_unchecked but without the debug invariant asserts; used by
  // the generator while filtering, where intermediate states may be illegal.
  Position apply_unchecked_raw(const Move& m) const {
    Position n = *this;
    const std::uint8_t moving = mailbox_[m.from.index];
    const PieceKind kind = static_cast<PieceKind>(moving % 6);
    const Color us = stm_;
    bool capture = false;

    std::uint8_t target = mailbox_[m.to.index];
    if (target != kEmpty) {
      n.remove(m.to, target);
      capture = true;
    } else if (kind == PieceKind::Pawn && m.to.index == ep_) {
      Square victim(ep_ + (us == Color::White ? -8 : 8));
      n.remove(victim, n.mailbox_[victim.index]);
      capture = true;
    }

    n.remove(m.from, moving);
    std::uint8_t placed = moving;
    if (m.promotion) placed = static_cast<std::uint8_t>(static_cast<int>(us) * 6 + static_cast<int>(*m.promotion));
    n.put_coded(m.to, placed);

    if (kind == PieceKind::King && m.to.index - m.from.index == 2) {
      std::uint8_t rook = n.mailbox_[m.from.index + 3];
      n.remove(Square(m.from.index + 3), rook);
      n.put_coded(Square(m.from.index + 1), rook);
    } else if (kind == PieceKind::King && m.from.index - m.to.index == 2) {
      std::uint8_t rook = n.mailbox_[m.from.index - 4];
      n.remove(Square(m.from.index - 4), rook);
      n.put_coded(Square(m.from.index - 1), rook);
    }

    std::uint8_t new_castling = castling_;
    if (kind == PieceKind::King) new_castling &= us == Color::White ? ~(castle::wk | castle::wq) : ~(castle::bk | castle::bq);
    for (int sq : {m.from.index, m.to.index}) {
      if (sq == 0) new_castling &= ~castle::wq;
      if (sq == 7) new_castling &= ~castle::wk;
      if (sq == 56) new_castling &= ~castle::bq;
      if (sq == 63) new_castling &= ~castle::bk;
    }
    n.hash_ ^= zobrist::keys.castling[castling_] ^ zobrist::keys.castling[new_castling];
    n.castling_ = new_castling;

    if (ep_ >= 0) n.hash_ ^= zobrist::keys.ep_file[ep_ & 7];
    n.ep_ = -1;
    if (kind == PieceKind::Pawn && std::abs(m.to.index - m.from.index) == 16) {
      n.ep_ = static_cast<std::int8_t>((m.to.index + m.from.index) / 2);
      n.hash_ ^= zobrist::keys.ep_file[n.ep_ & 7];
    }

    n.halfmove_ = (kind == PieceKind::Pawn || capture) ? 0 : static_cast<std::uint16_t>(halfmove_ + 1);
    if (us == Color::Black) ++n.fullmove_;
    n.stm_ = opponent(us);
    n.hash_ ^= zobrist::keys.black_to_move;
    return n;
  }

  int pseudo_moves(Move* out) const {
    int count = 0;
    const Color us = stm_;
    const Color them = opponent(us);
    const Bitboard own = pieces(us);
    const Bitboard enemy = pieces(them);
    const Bitboard occ = occupied();
    auto emit = [&](Square from, Square to, bool capture, std::optional<PieceKind> promo = std::nullopt) {
      Move m;
      m.from = from;
      m.to = to;
      m.promotion = promo;
      m.capture = capture;
      out[count++] = m;
    };

    // pawns
    Bitboard pawns = pieces(us, PieceKind::Pawn);
    const int fwd = us == Color::White ? 8 : -8;
    const int start_rank = us == Color::White ? 1 : 6;
    const int last_rank = us == Color::White ? 7 : 0;
    while (pawns) {
      int from = pop_lsb(pawns);
      int to = from + fwd;
      auto emit_pawn = [&](int target, bool capture) {
        Square t(target);
        if (t.rank() == last_rank) {
          for (PieceKind k : {PieceKind::Knight, PieceKind::Bishop, PieceKind::Rook, PieceKind::Queen})
            emit(Square(from), t, capture, k);
        } else {
          emit(Square(from), t, capture);
        }
      };
      if (!(occ & bb(to))) {
        emit_pawn(to, false);
        int dbl = from + 2 * fwd;
        if (Square(from).rank() == start_rank && !(occ & bb(dbl))) emit(Square(from), Square(dbl), false);
      }
      Bitboard caps = pawn_attacks(us, from) & enemy;
      while (caps) emit_pawn(pop_lsb(caps), true);
      if (ep_ >= 0 && (pawn_attacks(us, from) & bb(ep_))) emit(Square(from), Square(ep_), true);
    }

    // leapers and sliders
    auto emit_set = [&](int from, Bitboard targets) {
      targets &= ~own;
      while (targets) {
        int to = pop_lsb(targets);
        emit(Square(from), Square(to), (enemy & bb(to)) != 0);
      }
    };
    for (PieceKind k : {PieceKind::Knight, PieceKind::Bishop, PieceKind::Rook, PieceKind::Queen, PieceKind::King}) {
      Bitboard set = pieces(us, k);
      while (set) {
        int from = pop_lsb(set);
        emit_set(from, attacks_from(k, us, from, occ));
      }
    }

    // castling: rights, path empty, rook present, king path not attacked
    const int base = us == Color::White ? 0 : 56;
    const std::uint8_t kside = us == Color::White ? castle::wk : castle::bk;
    const std::uint8_t qside = us == Color::White ? castle::wq : castle::bq;
    const Bitboard rooks = pieces(us, PieceKind::Rook);
    if ((castling_ & (kside | qside)) && mailbox_[base + 4] == static_cast<int>(us) * 6 + static_cast<int>(PieceKind::King) &&
        !attacked_by(Square(base + 4), them)) {
      if ((castling_ & kside) && (rooks & bb(base + 7)) && !(occ & (bb(base + 5) | bb(base + 6))) &&
          !attacked_by(Square(base + 5), them) && !attacked_by(Square(base + 6), them))
        emit(Square(base + 4), Square(base + 6), false);
      if ((castling_ & qside) && (rooks & bb(base)) && !(occ & (bb(base + 1) | bb(base + 2) | bb(base + 3))) &&
          !attacked_by(Square(base + 3), them) && !attacked_by(Square(base + 2), them))
        emit(Square(base + 4), Square(base + 2), false);
    }
    return count;
  }
};

// Fills the check/checkmate annotation flags from the post-move state.
inline Move annotate(const Position& p, Move m) {
  Position child = p.apply(m);
  GameState s = child.classify();
  m.check = s == GameState::Check || s == GameState::Checkmate;
  m.checkmate = s == GameState::Checkmate;
  auto target = p.piece_at(m.to);
  m.capture = target.has_value() ||
              (p.piece_at(m.from)->kind == PieceKind::Pawn && p.en_passant() && *p.en_passant() == m.to);
  return m;
}

} // namespace matesmith
