"""Checker verdicts and precondition errors.

A checker decides its witness predicate totally: every call on inputs that
satisfy the problem precondition returns Accept or Reject, never an
exception. Inputs that violate the precondition raise
:class:`PreconditionError` instead of producing an arbitrary verdict.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    """Outcome of a witness check.

    ``clause`` names the first violated conjunct on rejection (a short,
    stable identifier; the CLI prints it verbatim). ``detail`` is free-form
    diagnostic text such as the offending vertex or edge.
    """

    accepted: bool
    clause: str = ""
    detail: str = ""

    def __bool__(self) -> bool:
        return self.accepted


ACCEPT = Verdict(True)


def reject(clause: str, detail: str = "") -> Verdict:
    return Verdict(False, clause, detail)


class PreconditionError(Exception):
    """The instance violates the problem precondition; no verdict exists."""

    def __init__(self, clause: str, detail: str = ""):
        self.clause = clause
        self.detail = detail
        super().__init__(f"{clause}: {detail}" if detail else clause)
