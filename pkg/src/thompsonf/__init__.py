"""Desk-scale verification of the combinatorics behind Thompson's group F
being of type F_infinity."""

__version__ = "0.1.0"
