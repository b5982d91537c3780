"""Supersingular genus-2 curves over finite fields: supersingularity tests,
Weil polynomials, twists, and cryptographic exponents."""

__version__ = "0.1.0"
