"""Unit test package for hadamard_star."""
