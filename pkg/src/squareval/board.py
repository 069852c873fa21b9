"""Chess board core: FEN I/O, legal move generation, SAN resolution.

Squares are indexed 0..63 rank-major from White's side: a1=0, b1=1, ...,
h8=63. The internal board array stores one piece code per square:
0 = empty, 1..6 = white K,Q,R,B,N,P, 7..12 = black K,Q,R,B,N,P.

Positions are immutable values; every operation returns a new Position.
Move generation is fully legal (castling rights and transit attacks,
en passant, promotion, own king never left in check), which SAN
disambiguation relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
import re
from typing import Iterable, Optional


class Color(IntEnum):
    WHITE = 0
    BLACK = 1

    def opponent(self) -> "Color":
        return Color(1 - self)


class PieceKind(IntEnum):
    KING = 0
    QUEEN = 1
    ROOK = 2
    BISHOP = 3
    KNIGHT = 4
    PAWN = 5


PIECE_LETTERS = "KQRBNP"
_LETTER_TO_KIND = {c: PieceKind(i) for i, c in enumerate(PIECE_LETTERS)}

FILES = "abcdefgh"

START_FEN = "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1"

# Castling-right bits, White/Black king- and queenside.
CASTLE_WK, CASTLE_WQ, CASTLE_BK, CASTLE_BQ = 1, 2, 4, 8


class FenError(ValueError):
    """Malformed FEN text. Carries the offending field name."""

    def __init__(self, field: str, message: str):
        super().__init__(f"FEN {field}: {message}")
        self.field = field


class MoveError(ValueError):
    """SAN resolution or move application failure."""

    def __init__(self, message: str, san: str | None = None, ply: int | None = None):
        super().__init__(message)
        self.san = san
        self.ply = ply


class IllegalMoveError(MoveError):
    pass


class AmbiguousMoveError(MoveError):
    pass


@dataclass(frozen=True, slots=True)
class Square:
    """A board square as (file, rank), both 0..7; a1 = (0, 0), f5 = (5, 4)."""

    file: int
    rank: int

    def __post_init__(self):
        if not (0 <= self.file <= 7 and 0 <= self.rank <= 7):
            raise ValueError(f"square out of range: file={self.file} rank={self.rank}")

    @property
    def index(self) -> int:
        """Rank-major index 0..63; this is the canonical square ordering."""
        return self.rank * 8 + self.file

    @property
    def name(self) -> str:
        return FILES[self.file] + str(self.rank + 1)

    @classmethod
    def from_index(cls, index: int) -> "Square":
        return cls(index & 7, index >> 3)

    @classmethod
    def from_name(cls, name: str) -> "Square":
        if len(name) != 2 or name[0] not in FILES or name[1] not in "12345678":
            raise ValueError(f"bad square name: {name!r}")
        return cls(FILES.index(name[0]), int(name[1]) - 1)

    def __lt__(self, other: "Square") -> bool:
        return self.index < other.index

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class PieceState:
    """The valuation unit: a (color, piece kind, square) triple."""

    color: Color
    piece: PieceKind
    square: Square

    def sort_key(self) -> tuple:
        return (int(self.color), int(self.piece), self.square.index)


@dataclass(frozen=True, slots=True)
class Move:
    from_sq: int
    to_sq: int
    promotion: Optional[PieceKind] = None
    is_capture: bool = False
    is_castle_kingside: bool = False
    is_castle_queenside: bool = False
    is_en_passant: bool = False

    def uci(self) -> str:
        s = _square_name(self.from_sq) + _square_name(self.to_sq)
        if self.promotion is not None:
            s += PIECE_LETTERS[self.promotion].lower()
        return s


def _square_name(sq: int) -> str:
    return FILES[sq & 7] + str((sq >> 3) + 1)


@dataclass(frozen=True, slots=True)
class Position:
    """Full board state. `squares` holds the 64 piece codes described above."""

    squares: tuple[int, ...]
    side_to_move: Color
    castling: int
    en_passant: Optional[int]
    halfmove_clock: int
    fullmove_number: int

    def piece_at(self, sq: int) -> Optional[tuple[Color, PieceKind]]:
        code = self.squares[sq]
        if code == 0:
            return None
        return Color((code - 1) // 6), PieceKind((code - 1) % 6)

    def occupancy(self) -> dict[Square, tuple[Color, PieceKind]]:
        out = {}
        for sq, code in enumerate(self.squares):
            if code:
                out[Square.from_index(sq)] = (Color((code - 1) // 6), PieceKind((code - 1) % 6))
        return out


def _code(color: Color, kind: PieceKind) -> int:
    return 1 + 6 * color + kind


def _color_of(code: int) -> int:
    return (code - 1) // 6


def _kind_of(code: int) -> int:
    return (code - 1) % 6


# ---------------------------------------------------------------------------
# Precomputed geometry

def _build_step_targets(deltas: Iterable[tuple[int, int]]) -> list[tuple[int, ...]]:
    table = []
    for sq in range(64):
        f, r = sq & 7, sq >> 3
        targets = []
        for df, dr in deltas:
            nf, nr = f + df, r + dr
            if 0 <= nf <= 7 and 0 <= nr <= 7:
                targets.append(nr * 8 + nf)
        table.append(tuple(targets))
    return table


_KNIGHT_DELTAS = [(1, 2), (2, 1), (2, -1), (1, -2), (-1, -2), (-2, -1), (-2, 1), (-1, 2)]
_KING_DELTAS = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)]
_ORTHO_DIRS = [(1, 0), (-1, 0), (0, 1), (0, -1)]
_DIAG_DIRS = [(1, 1), (1, -1), (-1, 1), (-1, -1)]

KNIGHT_TARGETS = _build_step_targets(_KNIGHT_DELTAS)
KING_TARGETS = _build_step_targets(_KING_DELTAS)


def _build_rays(dirs: list[tuple[int, int]]) -> list[tuple[tuple[int, ...], ...]]:
    table = []
    for sq in range(64):
        f, r = sq & 7, sq >> 3
        rays = []
        for df, dr in dirs:
            ray = []
            nf, nr = f + df, r + dr
            while 0 <= nf <= 7 and 0 <= nr <= 7:
                ray.append(nr * 8 + nf)
                nf += df
                nr += dr
            rays.append(tuple(ray))
        table.append(tuple(rays))
    return table


ORTHO_RAYS = _build_rays(_ORTHO_DIRS)
DIAG_RAYS = _build_rays(_DIAG_DIRS)

# Squares a pawn of the given color attacks from each square.
PAWN_CAPTURES = [
    _build_step_targets([(-1, 1), (1, 1)]),    # white pawns capture upward
    _build_step_targets([(-1, -1), (1, -1)]),  # black pawns capture downward
]

# Castling rights lost when a move touches these squares (king or rook home).
_CASTLE_CLEAR = [15] * 64
_CASTLE_CLEAR[4] = 15 ^ (CASTLE_WK | CASTLE_WQ)
_CASTLE_CLEAR[0] = 15 ^ CASTLE_WQ
_CASTLE_CLEAR[7] = 15 ^ CASTLE_WK
_CASTLE_CLEAR[60] = 15 ^ (CASTLE_BK | CASTLE_BQ)
_CASTLE_CLEAR[56] = 15 ^ CASTLE_BQ
_CASTLE_CLEAR[63] = 15 ^ CASTLE_BK

_WK_CODE = _code(Color.WHITE, PieceKind.KING)
_BK_CODE = _code(Color.BLACK, PieceKind.KING)


# ---------------------------------------------------------------------------
# FEN

def parse_fen(text: str) -> Position:
    """Parse a 6-field FEN record into a Position, validating invariants."""
    fields = text.split()
    if len(fields) != 6:
        raise FenError("record", f"expected 6 fields, got {len(fields)}")
    placement, side, castling, ep, halfmove, fullmove = fields

    ranks = placement.split("/")
    if len(ranks) != 8:
        raise FenError("placement", f"expected 8 ranks, got {len(ranks)}")
    board = [0] * 64
    kings = [0, 0]
    for rank_idx, rank_text in enumerate(ranks):
        rank = 7 - rank_idx  # FEN lists rank 8 first
        file = 0
        prev_digit = False
        for offset, ch in enumerate(rank_text):
            if ch.isdigit():
                if prev_digit:
                    raise FenError("placement", f"rank {rank + 1}: consecutive digits at offset {offset}")
                n = int(ch)
                if not 1 <= n <= 8:
                    raise FenError("placement", f"rank {rank + 1}: bad empty count {ch!r} at offset {offset}")
                file += n
                prev_digit = True
                continue
            prev_digit = False
            upper = ch.upper()
            if upper not in _LETTER_TO_KIND:
                raise FenError("placement", f"rank {rank + 1}: invalid piece {ch!r} at offset {offset}")
            if file > 7:
                raise FenError("placement", f"rank {rank + 1}: more than 8 squares")
            color = Color.WHITE if ch.isupper() else Color.BLACK
            kind = _LETTER_TO_KIND[upper]
            if kind == PieceKind.PAWN and rank in (0, 7):
                raise FenError("placement", f"pawn on rank {rank + 1}")
            if kind == PieceKind.KING:
                kings[color] += 1
                if kings[color] > 1:
                    raise FenError("placement", f"more than one {color.name.lower()} king")
            board[rank * 8 + file] = _code(color, kind)
            file += 1
        if file != 8:
            raise FenError("placement", f"rank {rank + 1}: covers {file} squares, expected 8")

    if side == "w":
        stm = Color.WHITE
    elif side == "b":
        stm = Color.BLACK
    else:
        raise FenError("side", f"expected 'w' or 'b', got {side!r}")

    rights = 0
    if castling != "-":
        seen = set()
        for offset, ch in enumerate(castling):
            bit = {"K": CASTLE_WK, "Q": CASTLE_WQ, "k": CASTLE_BK, "q": CASTLE_BQ}.get(ch)
            if bit is None or ch in seen:
                raise FenError("castling", f"invalid token {ch!r} at offset {offset}")
            seen.add(ch)
            rights |= bit

    ep_square: Optional[int] = None
    if ep != "-":
        try:
            ep_square = Square.from_name(ep).index
        except ValueError:
            raise FenError("en-passant", f"invalid square {ep!r}") from None
        rank = ep_square >> 3
        if stm == Color.WHITE and rank != 5:
            raise FenError("en-passant", f"{ep} with White to move (expected rank 6)")
        if stm == Color.BLACK and rank != 2:
            raise FenError("en-passant", f"{ep} with Black to move (expected rank 3)")

    try:
        half = int(halfmove)
        if half < 0:
            raise ValueError
    except ValueError:
        raise FenError("halfmove", f"expected integer >= 0, got {halfmove!r}") from None
    try:
        full = int(fullmove)
        if full < 1:
            raise ValueError
    except ValueError:
        raise FenError("fullmove", f"expected integer >= 1, got {fullmove!r}") from None

    return Position(tuple(board), stm, rights, ep_square, half, full)


def emit_fen(p: Position) -> str:
    """Canonical FEN serialization; parse_fen(emit_fen(p)) == p."""
    rows = []
    for rank in range(7, -1, -1):
        row = []
        empty = 0
        for file in range(8):
            code = p.squares[rank * 8 + file]
            if code == 0:
                empty += 1
                continue
            if empty:
                row.append(str(empty))
                empty = 0
            letter = PIECE_LETTERS[_kind_of(code)]
            row.append(letter if _color_of(code) == Color.WHITE else letter.lower())
        if empty:
            row.append(str(empty))
        rows.append("".join(row))
    castling = "".join(
        ch for ch, bit in (("K", CASTLE_WK), ("Q", CASTLE_WQ), ("k", CASTLE_BK), ("q", CASTLE_BQ))
        if p.castling & bit
    ) or "-"
    ep = _square_name(p.en_passant) if p.en_passant is not None else "-"
    return " ".join([
        "/".join(rows),
        "w" if p.side_to_move == Color.WHITE else "b",
        castling,
        ep,
        str(p.halfmove_clock),
        str(p.fullmove_number),
    ])


def startpos() -> Position:
    return parse_fen(START_FEN)


# ---------------------------------------------------------------------------
# Attack detection and move generation

def _is_attacked(board: list[int] | tuple[int, ...], sq: int, by: int) -> bool:
    base = 1 + 6 * by
    knight = base + PieceKind.KNIGHT
    for t in KNIGHT_TARGETS[sq]:
        if board[t] == knight:
            return True
    king = base + PieceKind.KING
    for t in KING_TARGETS[sq]:
        if board[t] == king:
            return True
    pawn = base + PieceKind.PAWN
    for t in PAWN_CAPTURES[1 - by][sq]:
        if board[t] == pawn:
            return True
    queen = base + PieceKind.QUEEN
    rook = base + PieceKind.ROOK
    for ray in ORTHO_RAYS[sq]:
        for t in ray:
            code = board[t]
            if code:
                if code == rook or code == queen:
                    return True
                break
    bishop = base + PieceKind.BISHOP
    for ray in DIAG_RAYS[sq]:
        for t in ray:
            code = board[t]
            if code:
                if code == bishop or code == queen:
                    return True
                break
    return False


# Internal move tuples: (from, to, promo_kind_or_None, flags)
_F_CAPTURE = 1
_F_EP = 2
_F_CASTLE_K = 4
_F_CASTLE_Q = 8

_PROMO_KINDS = (PieceKind.QUEEN, PieceKind.ROOK, PieceKind.BISHOP, PieceKind.KNIGHT)


def _pseudo_moves(board: list[int], stm: int, castling: int, ep: Optional[int]):
    moves = []
    own_base = 1 + 6 * stm
    own_lo, own_hi = own_base, own_base + 5
    forward = 8 if stm == 0 else -8
    start_rank = 1 if stm == 0 else 6
    promo_rank = 7 if stm == 0 else 0

    for sq in range(64):
        code = board[sq]
        if code < own_lo or code > own_hi:
            continue
        kind = code - own_base
        if kind == PieceKind.PAWN:
            to = sq + forward
            if board[to] == 0:
                if to >> 3 == promo_rank:
                    for pk in _PROMO_KINDS:
                        moves.append((sq, to, pk, 0))
                else:
                    moves.append((sq, to, None, 0))
                    if sq >> 3 == start_rank and board[to + forward] == 0:
                        moves.append((sq, to + forward, None, 0))
            for to in PAWN_CAPTURES[stm][sq]:
                target = board[to]
                if target and not own_lo <= target <= own_hi:
                    if to >> 3 == promo_rank:
                        for pk in _PROMO_KINDS:
                            moves.append((sq, to, pk, _F_CAPTURE))
                    else:
                        moves.append((sq, to, None, _F_CAPTURE))
                elif ep is not None and to == ep:
                    moves.append((sq, to, None, _F_CAPTURE | _F_EP))
        elif kind == PieceKind.KNIGHT:
            for to in KNIGHT_TARGETS[sq]:
                target = board[to]
                if target == 0:
                    moves.append((sq, to, None, 0))
                elif not own_lo <= target <= own_hi:
                    moves.append((sq, to, None, _F_CAPTURE))
        elif kind == PieceKind.KING:
            for to in KING_TARGETS[sq]:
                target = board[to]
                if target == 0:
                    moves.append((sq, to, None, 0))
                elif not own_lo <= target <= own_hi:
                    moves.append((sq, to, None, _F_CAPTURE))
        else:
            rays = ()
            if kind != PieceKind.BISHOP:
                rays += ORTHO_RAYS[sq]
            if kind != PieceKind.ROOK:
                rays += DIAG_RAYS[sq]
            for ray in rays:
                for to in ray:
                    target = board[to]
                    if target == 0:
                        moves.append((sq, to, None, 0))
                        continue
                    if not own_lo <= target <= own_hi:
                        moves.append((sq, to, None, _F_CAPTURE))
                    break

    # Castling: rights present, lane empty, king not in check, transit safe.
    # The destination square is verified by the per-move legality test.
    opp = 1 - stm
    if stm == 0:
        king_sq, k_bit, q_bit = 4, CASTLE_WK, CASTLE_WQ
    else:
        king_sq, k_bit, q_bit = 60, CASTLE_BK, CASTLE_BQ
    if castling & (k_bit | q_bit) and board[king_sq] == own_base + PieceKind.KING:
        if not _is_attacked(board, king_sq, opp):
            if (castling & k_bit
                    and board[king_sq + 1] == 0 and board[king_sq + 2] == 0
                    and board[king_sq + 3] == own_base + PieceKind.ROOK
                    and not _is_attacked(board, king_sq + 1, opp)):
                moves.append((king_sq, king_sq + 2, None, _F_CASTLE_K))
            if (castling & q_bit
                    and board[king_sq - 1] == 0 and board[king_sq - 2] == 0 and board[king_sq - 3] == 0
                    and board[king_sq - 4] == own_base + PieceKind.ROOK
                    and not _is_attacked(board, king_sq - 1, opp)):
                moves.append((king_sq, king_sq - 2, None, _F_CASTLE_Q))
    return moves


def _leaves_king_attacked(board: list[int], stm: int, move, king_sq: int) -> bool:
    frm, to, promo, flags = move
    own_base = 1 + 6 * stm
    moved = board[frm]
    captured = board[to]
    ep_taken = -1
    board[to] = moved if promo is None else own_base + promo
    board[frm] = 0
    rook_from = rook_to = -1
    if flags & _F_EP:
        ep_taken = to - 8 if stm == 0 else to + 8
        ep_code = board[ep_taken]
        board[ep_taken] = 0
    elif flags & _F_CASTLE_K:
        rook_from, rook_to = frm + 3, frm + 1
    elif flags & _F_CASTLE_Q:
        rook_from, rook_to = frm - 4, frm - 1
    if rook_from >= 0:
        board[rook_to] = board[rook_from]
        board[rook_from] = 0

    ksq = to if moved == own_base + PieceKind.KING else king_sq
    attacked = ksq >= 0 and _is_attacked(board, ksq, 1 - stm)

    if rook_from >= 0:
        board[rook_from] = board[rook_to]
        board[rook_to] = 0
    if ep_taken >= 0:
        board[ep_taken] = ep_code
    board[frm] = moved
    board[to] = captured
    return attacked


def _legal_move_tuples(board: list[int], stm: int, castling: int, ep: Optional[int]):
    king_code = 1 + 6 * stm + PieceKind.KING
    try:
        king_sq = board.index(king_code)
    except ValueError:
        king_sq = -1  # kingless test positions: every pseudo move is legal
    return [
        m for m in _pseudo_moves(board, stm, castling, ep)
        if not _leaves_king_attacked(board, stm, m, king_sq)
    ]


def legal_moves(p: Position) -> list[Move]:
    """All legal moves for the side to move; empty means mate or stalemate."""
    board = list(p.squares)
    out = []
    for frm, to, promo, flags in _legal_move_tuples(board, p.side_to_move, p.castling, p.en_passant):
        out.append(Move(
            from_sq=frm,
            to_sq=to,
            promotion=promo,
            is_capture=bool(flags & _F_CAPTURE),
            is_castle_kingside=bool(flags & _F_CASTLE_K),
            is_castle_queenside=bool(flags & _F_CASTLE_Q),
            is_en_passant=bool(flags & _F_EP),
        ))
    return out


def in_check(p: Position) -> bool:
    king_code = _code(p.side_to_move, PieceKind.KING)
    try:
        king_sq = p.squares.index(king_code)
    except ValueError:
        return False
    return _is_attacked(p.squares, king_sq, 1 - p.side_to_move)


def apply_move(p: Position, m: Move) -> Position:
    """Apply a legal move, returning the successor position."""
    if m not in legal_moves(p):
        raise IllegalMoveError(f"illegal move {m.uci()} in {emit_fen(p)}")
    return _apply_unchecked(p, m)


def _apply_unchecked(p: Position, m: Move) -> Position:
    board = list(p.squares)
    stm = p.side_to_move
    moved = board[m.from_sq]
    kind = _kind_of(moved)
    is_pawn = kind == PieceKind.PAWN
    capture = m.is_capture

    board[m.to_sq] = moved if m.promotion is None else _code(stm, m.promotion)
    board[m.from_sq] = 0
    if m.is_en_passant:
        board[m.to_sq - 8 if stm == Color.WHITE else m.to_sq + 8] = 0
    elif m.is_castle_kingside:
        board[m.from_sq + 1] = board[m.from_sq + 3]
        board[m.from_sq + 3] = 0
    elif m.is_castle_queenside:
        board[m.from_sq - 1] = board[m.from_sq - 4]
        board[m.from_sq - 4] = 0

    castling = p.castling & _CASTLE_CLEAR[m.from_sq] & _CASTLE_CLEAR[m.to_sq]
    ep = (m.from_sq + m.to_sq) // 2 if is_pawn and abs(m.to_sq - m.from_sq) == 16 else None
    halfmove = 0 if (is_pawn or capture) else p.halfmove_clock + 1
    fullmove = p.fullmove_number + (1 if stm == Color.BLACK else 0)
    return Position(tuple(board), stm.opponent(), castling, ep, halfmove, fullmove)


def perft(p: Position, depth: int) -> int:
    """Count leaf nodes of the legal move tree; the movegen correctness oracle."""
    if depth <= 0:
        return 1
    board = list(p.squares)
    return _perft(board, int(p.side_to_move), p.castling, p.en_passant, depth)


def _perft(board: list[int], stm: int, castling: int, ep: Optional[int], depth: int) -> int:
    moves = _legal_move_tuples(board, stm, castling, ep)
    if depth == 1:
        return len(moves)
    total = 0
    own_base = 1 + 6 * stm
    king_code = own_base + PieceKind.KING
    pawn_code = own_base + PieceKind.PAWN
    for frm, to, promo, flags in moves:
        child = list(board)
        moved = child[frm]
        child[to] = moved if promo is None else own_base + promo
        child[frm] = 0
        if flags & _F_EP:
            child[to - 8 if stm == 0 else to + 8] = 0
        elif flags & _F_CASTLE_K:
            child[frm + 1] = child[frm + 3]
            child[frm + 3] = 0
        elif flags & _F_CASTLE_Q:
            child[frm - 1] = child[frm - 4]
            child[frm - 4] = 0
        rights = castling & _CASTLE_CLEAR[frm] & _CASTLE_CLEAR[to]
        new_ep = (frm + to) // 2 if moved == pawn_code and abs(to - frm) == 16 else None
        total += _perft(child, 1 - stm, rights, new_ep, depth - 1)
    return total


# ---------------------------------------------------------------------------
# SAN

_SAN_PIECE_RE = re.compile(r"^([KQRBN])([a-h])?([1-8])?(x)?([a-h][1-8])$")
_SAN_PAWN_RE = re.compile(r"^([a-h])?(x)?([a-h][1-8])(?:=([QRBN]))?$")


def resolve_san(p: Position, san: str) -> Move:
    """Resolve a SAN token against the position's legal moves.

    Check/mate/annotation suffixes (+, #, !, ?) are ignored. Raises
    IllegalMoveError when nothing matches and AmbiguousMoveError when the
    token underspecifies between several legal moves.
    """
    token = san.rstrip("+#!?")
    if not token:
        raise IllegalMoveError(f"empty SAN token {san!r}", san=san)

    moves = legal_moves(p)

    if token in ("O-O", "0-0"):
        matches = [m for m in moves if m.is_castle_kingside]
    elif token in ("O-O-O", "0-0-0"):
        matches = [m for m in moves if m.is_castle_queenside]
    else:
        pm = _SAN_PIECE_RE.match(token)
        if pm:
            letter, dfile, drank, cap, dest = pm.groups()
            kind = _LETTER_TO_KIND[letter]
            promo = None
        else:
            wm = _SAN_PAWN_RE.match(token)
            if not wm:
                raise IllegalMoveError(f"unrecognized SAN token {san!r}", san=san)
            dfile, cap, dest, promo_letter = wm.groups()
            drank = None
            kind = PieceKind.PAWN
            promo = _LETTER_TO_KIND[promo_letter] if promo_letter else None
        to_sq = Square.from_name(dest).index
        want_capture = cap is not None
        matches = []
        for m in moves:
            if m.to_sq != to_sq or m.is_castle_kingside or m.is_castle_queenside:
                continue
            if _kind_of(p.squares[m.from_sq]) != kind:
                continue
            if m.is_capture != want_capture:
                continue
            if m.promotion != promo:
                continue
            if dfile is not None and (m.from_sq & 7) != FILES.index(dfile):
                continue
            if drank is not None and (m.from_sq >> 3) != int(drank) - 1:
                continue
            matches.append(m)

    if not matches:
        raise IllegalMoveError(f"no legal move matches SAN {san!r} in {emit_fen(p)}", san=san)
    if len(matches) > 1:
        raise AmbiguousMoveError(
            f"SAN {san!r} matches {len(matches)} moves: {', '.join(m.uci() for m in matches)}",
            san=san,
        )
    return matches[0]


def piece_states(p: Position) -> list[PieceState]:
    """One (color, piece, square) state per occupied square, canonically ordered."""
    states = []
    for sq, code in enumerate(p.squares):
        if code:
            states.append(PieceState(Color(_color_of(code)), PieceKind(_kind_of(code)), Square.from_index(sq)))
    states.sort(key=PieceState.sort_key)
    return states
