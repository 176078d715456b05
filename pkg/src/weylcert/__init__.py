"""weylcert: exact-arithmetic certification of weight-orbit and
dimension-bound inequalities for the finite classical groups."""

__version__ = "0.1.0"
