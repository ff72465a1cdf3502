"""Point counts, zeta fits and split-Jacobian detection for the loci L2, L3, L5
in the weighted projective space P(2,4,6,10)."""

__version__ = "0.1.0"
