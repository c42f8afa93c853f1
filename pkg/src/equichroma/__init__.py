"""Equitable coloring parameters of wheel-related graph families."""
