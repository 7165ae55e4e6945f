"""Clause subsumption and subsumption-resolution engine."""

from subsume._core import check_pair, simplify, verify_random

__all__ = ["check_pair", "simplify", "verify_random"]
