"""Truncated power series over the rationals and the closed-form generating functions."""
