"""qheis: exact calculator and verifier for the q-deformed Heisenberg
algebra with generators A, B and relation AB - qBA = I."""

from .coeff import IntPoly, QValue, RationalFunction, SYMBOLIC_Q

__all__ = ["IntPoly", "QValue", "RationalFunction", "SYMBOLIC_Q"]
__version__ = "0.1.0"
