"""squareval: marginal value of chess (color, piece, square) states.

Pipeline: PGN corpus -> engine-labeled positions -> supervised dataset ->
tanh MLP regression of pawn-unit advantage -> per-piece heatmaps and
win-probability conversions.
"""

from squareval.board import (
    Color,
    PieceKind,
    Square,
    PieceState,
    Move,
    Position,
    parse_fen,
    emit_fen,
    legal_moves,
    resolve_san,
    apply_move,
    piece_states,
)

__version__ = "0.1.0"
