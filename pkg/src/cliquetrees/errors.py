"""Exception types and the structured verdict shared by the validators."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class CliqueTreeError(Exception):
    """Base class for domain errors raised by this package."""


class GraphFormatError(CliqueTreeError, ValueError):
    """Malformed edge-list or vector input."""


class DisconnectedGraphError(CliqueTreeError, ValueError):
    """An analysis entry point received a disconnected (or empty) graph."""


class NotChordalError(CliqueTreeError, ValueError):
    """The input graph has a chordless cycle of length at least four."""

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"graph is not chordal; chordless cycle {list(self.witness)}")


class NotACliqueTreeError(CliqueTreeError, ValueError):
    """A spanning subgraph failed to be a clique tree."""

    def __init__(self, verdict: "Verdict"):
        self.verdict = verdict
        super().__init__(verdict.reason)


class NotInRegion(CliqueTreeError, ValueError):
    """No coupling vector corresponds to the marginal vector.

    ``vertex`` is the first vertex (in linear-extension order) whose coupling
    value leaves ``[0, 1]``; ``value`` is the offending value, or ``None`` when
    a positive marginal meets a vanishing denominator.
    """

    def __init__(self, vertex: int, value, message: str | None = None):
        self.vertex = vertex
        self.value = value
        if message is None:
            shown = "p/0" if value is None else value
            message = f"coupling value at vertex {vertex} is {shown}, outside [0, 1]"
        super().__init__(message)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""
    witness: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls, **witness: Any) -> "Verdict":
        return cls(True, "", witness)

    @classmethod
    def failed(cls, reason: str, **witness: Any) -> "Verdict":
        return cls(False, reason, witness)
