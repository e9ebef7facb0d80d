"""Bracketed formulas over one binary connective and brute-force row censuses."""
