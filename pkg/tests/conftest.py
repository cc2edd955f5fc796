"""Ensures the tests directory is importable (for the bruteforce oracles)."""
