"""Higman-Thompson groups via unitary matrices over Leavitt algebras.

The package exposes five layers:

  words           rooted words and complete prefix codes (expansions)
  leavitt         exact arithmetic and normal forms in L_n
  matrices        matrices over L_n, star-transpose, unitaries
  thompson        G_{n,r} elements as symbols: compose, invert, reduce
  correspondence  the mutually inverse maps G_{n,r} <-> P_{n,r}
  iso             size shifts, generator search, and G_{n,r} = G_{n,s}

plus `verify` (seeded property suites) and `cli` (the command line).
"""

from . import correspondence, iso, leavitt, matrices, thompson, verify, words

__all__ = ["words", "leavitt", "matrices", "thompson", "correspondence",
           "iso", "verify", "cli"]

__version__ = "0.1.0"
