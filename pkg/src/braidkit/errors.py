"""Exception types shared across the library.

Every error carries a short machine-readable tag which the CLI prints on a
single line before exiting with status 2.
"""


class BraidKitError(Exception):
    """Base class for all library errors."""

    tag = "Error"

    def oneline(self) -> str:
        msg = str(self)
        return f"{self.tag}: {msg}" if msg else self.tag


class StrandMismatch(BraidKitError):
    """Two values living in braid groups with different strand counts."""

    tag = "StrandMismatch"


class UnsupportedParameters(BraidKitError):
    """Parameters outside the supported range (also used for parse rejects)."""

    tag = "UnsupportedParameters"


class BudgetExceeded(BraidKitError):
    """A complexity budget (free-word letters, diagram segments) ran out."""

    tag = "BudgetExceeded"


class NotDisjoint(BraidKitError):
    """Two arcs of a would-be vertex are not disjoint."""

    tag = "NotDisjoint"

    def __init__(self, i: int, j: int):
        super().__init__(f"arcs {i} and {j} are not disjoint")
        self.pair = (i, j)


class EndsCollide(BraidKitError):
    """Two arcs of a would-be vertex share an end."""

    tag = "EndsCollide"

    def __init__(self, i: int, j: int):
        super().__init__(f"arcs {i} and {j} share an end")
        self.pair = (i, j)


class PreconditionViolated(BraidKitError):
    """An operation was called on inputs outside its contract."""

    tag = "PreconditionViolated"


class BackendDisagreement(BraidKitError):
    """The two word-problem backends returned different verdicts (a bug)."""

    tag = "BackendDisagreement"
