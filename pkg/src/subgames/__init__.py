"""Subtraction games, and reductions from NODE KAYLES, Boolean circuits,
cellular automata and Turing machines into them."""

from .game_core import (
    DifferenceSet,
    ModularGame,
    ValueTable,
    find_period_1d,
    legal_moves,
    position_value,
    solve_up_to_sum,
)

__version__ = "0.1.0"
