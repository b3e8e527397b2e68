"""Exact-arithmetic kernel for root-graded Lie algebras sl_n(A) over
finite-dimensional associative coefficient algebras, their level-bounded
enveloping-algebra quotients, and truncated highest-weight modules."""

__version__ = "0.1.0"
