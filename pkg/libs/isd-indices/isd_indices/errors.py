"""Exception types raised by the isd_indices library.

Every error is a ``ValueError`` so callers that only care about bad input can
catch that, while the CLI catches ``IsdError`` to map failures to exit codes.
"""

from typing import Any

__all__ = [
    "IsdError",
    "SelfLoop",
    "DuplicateEdge",
    "IsolatedVertex",
    "VertexOutOfRange",
    "ParseError",
    "NonFiniteTerm",
    "ZeroExponent",
    "UnknownIndexFamily",
    "UnknownTheorem",
    "ExponentOutOfRange",
    "EmptyGrid",
    "InvalidGrid",
    "InvalidConfig",
    "DegenerateSample",
    "RegimeViolation",
    "InsufficientOverlap",
]


class IsdError(ValueError):
    """Base class for every error raised by the library."""


#########################
##### Graph construction
#########################
class SelfLoop(IsdError):
    def __init__(self, u: int):
        self.u = u
        super().__init__(f"self-loop at vertex {u}")


class DuplicateEdge(IsdError):
    def __init__(self, u: int, v: int):
        self.u, self.v = u, v
        super().__init__(f"duplicate edge ({u}, {v})")


class IsolatedVertex(IsdError):
    def __init__(self, u: int):
        self.u = u
        super().__init__(f"vertex {u} is isolated (degree 0)")


class VertexOutOfRange(IsdError):
    def __init__(self, u: Any, n: int):
        self.u, self.n = u, n
        super().__init__(f"vertex {u} is outside [0, {n})")


class ParseError(IsdError):
    """Malformed edge-list input; ``line`` is 1-based (0 when the whole file is at fault)."""

    def __init__(self, line: int, reason: str):
        self.line, self.reason = line, reason
        super().__init__(f"line {line}: {reason}" if line else reason)


#########################
##### Index evaluation
#########################
class NonFiniteTerm(IsdError):
    def __init__(self, u: int, v: int, value: float):
        self.u, self.v, self.value = u, v, value
        super().__init__(f"edge ({u}, {v}) produced a non-finite term ({value})")


class ZeroExponent(IsdError):
    def __init__(self, family: str):
        self.family = family
        super().__init__(f"{family} is undefined for exponent 0")


class UnknownIndexFamily(IsdError):
    def __init__(self, family: str):
        self.family = family
        super().__init__(f"unknown index family '{family}'")


class UnknownTheorem(IsdError):
    def __init__(self, theorem: str):
        self.theorem = theorem
        super().__init__(f"unknown theorem '{theorem}'")


class ExponentOutOfRange(IsdError):
    def __init__(self, theorem: str, a: float):
        self.theorem, self.a = theorem, a
        super().__init__(f"{theorem}: bound sides overflow double precision at a = {a}")


#########################
##### Grids and ensembles
#########################
class EmptyGrid(IsdError):
    def __init__(self, name: str = "a_grid"):
        self.name = name
        super().__init__(f"{name} must not be empty")


class InvalidGrid(IsdError):
    def __init__(self, text: str, reason: str):
        self.text, self.reason = text, reason
        super().__init__(f"invalid grid '{text}': {reason}")


class InvalidConfig(IsdError):
    pass


class DegenerateSample(IsdError):
    def __init__(self, n: int, p: float, attempts: int):
        self.n, self.p, self.attempts = n, p, attempts
        super().__init__(
            f"G({n}, {p}) produced an isolated vertex in all {attempts} attempts"
        )


class RegimeViolation(IsdError):
    def __init__(self, inequality: str, a: float, regime: str):
        self.inequality, self.a, self.regime = inequality, a, regime
        super().__init__(f"{inequality} requires {regime}, got a = {a}")


class InsufficientOverlap(IsdError):
    pass
