"""Ground truth canonical forms from binary codes."""

from .codes import NeuralCode, code_of_ideal, evaluate, ideal_of_code, oracle_canonical

__all__ = ["NeuralCode", "code_of_ideal", "evaluate", "ideal_of_code", "oracle_canonical"]
