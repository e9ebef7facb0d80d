"""Limit constants, finite-n ratios and the parity law."""
