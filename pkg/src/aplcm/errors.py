"""Exception hierarchy.

Input problems (bad parameters, unmet hypotheses) derive from ``ValueError``;
``InternalContradiction`` is reserved for results the mathematics forbids and
therefore indicates an arithmetic bug.
"""


class AplcmError(Exception):
    pass


class InvalidInputError(AplcmError, ValueError):
    pass


class NotCoprimeError(InvalidInputError):
    def __init__(self, u0: int, r: int, g: int):
        super().__init__(f"not coprime: gcd(u0={u0}, r={r}) = {g}")
        self.u0 = u0
        self.r = r
        self.gcd = g


class HypothesisError(InvalidInputError):
    """A check was asked to run outside the hypotheses of its claim."""


class InternalContradiction(AplcmError):
    pass
