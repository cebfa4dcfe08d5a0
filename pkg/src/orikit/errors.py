"""Exception types shared across the package.

Every error that a caller might want to catch programmatically gets its own
class with structured attributes; the message is always rebuilt from those
attributes so the two never disagree.
"""
from __future__ import annotations


class OrikitError(Exception):
    """Base class for all package errors."""


# ---------------------------------------------------------------- parsing

class ParseError(OrikitError):
    """Input text violates the edge-list format or graph simplicity."""

    def __init__(self, message: str, line_no: int, line: str):
        self.line_no = line_no
        self.line = line
        super().__init__(f"{message} (line {line_no}: {line!r})")


class SelfLoop(ParseError):
    def __init__(self, line_no: int, line: str):
        super().__init__("self-loop", line_no, line)


class DuplicateArc(ParseError):
    def __init__(self, line_no: int, line: str):
        super().__init__("duplicate arc", line_no, line)


class AntiparallelPair(ParseError):
    def __init__(self, line_no: int, line: str):
        super().__init__("antiparallel arc pair", line_no, line)


class BadVertexId(ParseError):
    def __init__(self, line_no: int, line: str):
        super().__init__("bad vertex id", line_no, line)


# ---------------------------------------------------------------- graphs

class NotAdjacent(OrikitError):
    """orientation_vector was asked about a non-neighbor."""

    def __init__(self, index: int, vertex: int, anchor: int):
        self.index = index
        self.vertex = vertex
        self.anchor = anchor
        super().__init__(
            f"A[{index}] = {vertex} is not adjacent to vertex {anchor}")


# ---------------------------------------------------------------- checkers

class PartialColoring(OrikitError):
    def __init__(self, missing: int):
        self.missing = missing
        super().__init__(f"assignment missing a value for vertex {missing}")


class TargetIdOutOfRange(OrikitError):
    def __init__(self, vertex: int, image: int, target_n: int):
        self.vertex = vertex
        self.image = image
        self.target_n = target_n
        super().__init__(
            f"h({vertex}) = {image} outside target vertex range [0, {target_n})")


class NotATournament(OrikitError):
    def __init__(self, u: int, v: int):
        self.u = u
        self.v = v
        super().__init__(f"no arc between vertices {u} and {v}")


# ---------------------------------------------------------------- exact

class TooLarge(OrikitError):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"instance has {n} vertices, solver cap is {cap}")


class SearchSpaceTooLarge(OrikitError):
    def __init__(self, n_max: int, cap: int):
        self.n_max = n_max
        self.cap = cap
        super().__init__(
            f"enumeration up to n_max={n_max} exceeds cap {cap}")


# ---------------------------------------------------------------- builders

class BadModulus(OrikitError):
    def __init__(self, p: int, reason: str):
        self.p = p
        self.reason = reason
        super().__init__(f"p={p}: {reason}")


class NotFound(OrikitError):
    """Randomized target search exhausted its trial budget.

    Either the run was unlucky or the requested order sits below the
    probabilistic threshold; `attempts` and `last_witness` let the caller
    tell the difference.
    """

    def __init__(self, attempts: int, last_witness=None):
        self.attempts = attempts
        self.last_witness = last_witness
        super().__init__(
            f"no certified target in {attempts} trials"
            + (f"; last witness {last_witness}" if last_witness else ""))


# ---------------------------------------------------------------- greedy

class Stuck(OrikitError):
    """No eligible target vertex at some greedy step.

    Signals that the supplied target is not comprehensive/full enough for
    this input; a first-class outcome, not a bug.
    """

    def __init__(self, step: int, back_set: tuple, forbidden_count: int):
        self.step = step
        self.back_set = back_set
        self.forbidden_count = forbidden_count
        super().__init__(
            f"stuck at step {step}: back-set {back_set}, "
            f"{forbidden_count} forbidden image(s), no eligible target vertex")


class PhiNotTwoDipath(OrikitError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"guide coloring is not a 2-dipath coloring: {witness}")


class TargetUnavailable(OrikitError):
    def __init__(self, description: str):
        super().__init__(description)


# ---------------------------------------------------------------- bounds

class BadT(OrikitError):
    def __init__(self, k: int, t: int):
        self.k = k
        self.t = t
        super().__init__(f"t={t} is below log2(k) for k={k}")


class NoThreshold(OrikitError):
    def __init__(self, c):
        self.c = c
        super().__init__(
            f"coefficient {c} is at or below 1/log2(e); no t satisfies the inequality")


class DeltaOutOfRange(OrikitError):
    def __init__(self, k: int, delta):
        self.k = k
        self.delta = delta
        super().__init__(f"relative slack {delta} outside (0, 1] at k={k}")
