"""Neuralcanon - Canonical forms of polarized neural ideals."""

__version__ = "0.1.0"
