"""Exact recurrence values of the row-count sequences."""
