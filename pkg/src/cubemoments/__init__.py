"""Exact pseudomoment matrices on the hypercube.

Builds the subset-indexed pseudomoment matrices attached to the balanced
pseudoexpectation on {-1, 1}^n, certifies their full spectra in exact
rational arithmetic (closed forms, recursions, annihilation and trace
identities, Gram reconstructions, iterated Schur elimination), and exposes
the symmetric-group character and harmonic-polynomial machinery behind
those certificates.  A command-line interface (cubemoments) exports
matrices and spectra and runs the verification suites.
"""

__version__ = "0.1.0"

from .scalars import Q  # noqa: F401
