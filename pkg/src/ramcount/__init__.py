"""Exact counting of wildly ramified p-extensions of F_q((T)) and F_q(T)."""

__version__ = "0.1.0"
