"""quadalg: exact arithmetic for quadratic forms over Q and R, the split
Cayley and Albert algebras, root-system foldings with Rost multipliers,
and Galois descent along quadratic extensions, plus a CLI that replays
the source computations and reports a pass/fail ledger."""

__version__ = "0.1.0"
