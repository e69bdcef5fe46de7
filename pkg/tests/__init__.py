"""Tests for neuralcanon."""
