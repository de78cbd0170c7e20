"""Dual equivalence graphs, LLT graphs and Schur expansions of LLT and
modified Macdonald polynomials."""

__version__ = "0.1.0"
