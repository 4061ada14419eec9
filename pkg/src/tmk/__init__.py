"""Exact toric and Groebner computations for a pair of mirror constructions.

Polytopes, fans and point configurations are handled with exact integer
and rational arithmetic; ideal membership questions go through a
Buchberger engine or explicit certificates.
"""

__version__ = "0.1.0"
