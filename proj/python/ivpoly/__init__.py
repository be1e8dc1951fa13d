"""Exact pullback-ring membership, divided differences, and integral closure.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from ivpoly._core import (
    ParseError,
    Poly,
    UnsupportedInputError,
    bhargava_failing_pullback,
    bhargava_member,
    closure_verdict,
    companion_oracle_member,
    discriminant,
    divided_difference,
    enumerate_split_monic,
    find_closure_witness,
    image_charpoly,
    in_intersection,
    in_pullback,
    is_integral_valued,
    newton_expand,
    newton_reconstruct,
    parse,
    pullback_contains,
    resultant,
    synthesize_integral_equation,
)

__all__ = [
    "ParseError",
    "Poly",
    "UnsupportedInputError",
    "bhargava_failing_pullback",
    "bhargava_member",
    "closure_verdict",
    "companion_oracle_member",
    "discriminant",
    "divided_difference",
    "enumerate_split_monic",
    "find_closure_witness",
    "image_charpoly",
    "in_intersection",
    "in_pullback",
    "is_integral_valued",
    "newton_expand",
    "newton_reconstruct",
    "parse",
    "pullback_contains",
    "resultant",
    "synthesize_integral_equation",
]

__version__ = "0.1.0"
