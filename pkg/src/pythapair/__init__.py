"""Pythagorean pairs, the elliptic curves attached to them, and witness certificates."""

__version__ = "0.1.0"
