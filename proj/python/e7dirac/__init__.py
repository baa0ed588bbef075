"""Exact computations for the Dirac series of E7(-25).

K-types are 7-tuples in the (varpi_1..varpi_6, zeta/3) basis; infinitesimal
characters are 7-tuples of zeta coordinates (ints, Fractions or "p/q" strings).
Rationals come back as fractions.Fraction.
"""

from ._e7dirac import *  # noqa: F401,F403
from ._e7dirac import MissingFixture, ParseError  # noqa: F401

__version__ = "0.1.0"
