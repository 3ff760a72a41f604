"""Fake weighted projective spaces: fundamental groups, covers and P^2 quotients."""
