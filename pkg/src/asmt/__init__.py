"""Computational checks for modularity criteria of genus-2 Jacobians.

Modules: ``ffpoly`` (finite fields and polynomials), ``curve`` (models, point
counts, Frobenius data), ``mod2image`` (2-torsion and quintic Galois groups),
``gsp4f3`` (similitudes over F3), ``weyl`` (GSp4 weight combinatorics),
``checker`` (hypothesis checks and the density count), ``lmfdb`` (database
exports) and ``cli``.
"""

from .errors import AsmtError, DomainError, NotGenusTwo, NotSimilitude

__version__ = "0.1.0"

__all__ = ["AsmtError", "DomainError", "NotGenusTwo", "NotSimilitude", "__version__"]
