"""Exhaustive checking of identities and inequalities over finite carriers.

A :class:`Law` is a universally quantified statement over ``arity`` element
variables.  Sweeping a law visits every tuple in lexicographic index order and
records the first violation, so reports are deterministic.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witness: Optional[tuple] = None
    lhs: object = None
    rhs: object = None
    note: str = ""

    def describe(self, names: Sequence[str] | None = None) -> str:
        if self.ok:
            return f"{self.name}: pass"
        tok = (lambda i: names[i]) if names is not None else str
        parts = [f"{self.name}: FAIL"]
        if self.witness is not None:
            parts.append("at (" + ", ".join(tok(i) for i in self.witness) + ")")
        if self.lhs is not None or self.rhs is not None:
            parts.append(f"lhs={_fmt(self.lhs, tok)} rhs={_fmt(self.rhs, tok)}")
        if self.note:
            parts.append(self.note)
        return " ".join(parts)

    def to_json(self, names: Sequence[str] | None = None) -> dict:
        tok = (lambda i: names[i]) if names is not None else (lambda i: i)
        out = {"name": self.name, "ok": self.ok}
        if not self.ok:
            out["witness"] = None if self.witness is None else [tok(i) for i in self.witness]
            out["lhs"] = _json_val(self.lhs, tok)
            out["rhs"] = _json_val(self.rhs, tok)
            if self.note:
                out["note"] = self.note
        return out


def _fmt(v, tok):
    if isinstance(v, bool) or v is None:
        return str(v).lower()
    if isinstance(v, int):
        return tok(v)
    return str(v)


def _json_val(v, tok):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return tok(v)
    return str(v)


@dataclass
class Report:
    """Ordered collection of checks; ``ok`` iff every check passed."""

    title: str
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list:
        return [c.name for c in self.checks]

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)


@dataclass(frozen=True)
class Law:
    """``kind`` is ``"eq"``, ``"le"`` or ``"iff"``.

    ``lhs``/``rhs`` map the variable tuple to element indices (or booleans for
    ``"iff"``).  ``guard`` restricts the quantifier.
    """

    name: str
    arity: int
    kind: str
    lhs: Callable
    rhs: Callable
    guard: Optional[Callable] = None

    def _holds(self, args, leq):
        left = self.lhs(*args)
        right = self.rhs(*args)
        if self.kind == "eq":
            good = left == right
        elif self.kind == "le":
            good = leq[left][right]
        else:
            good = bool(left) == bool(right)
        return good, left, right

    def _tuples(self, n):
        for args in itertools.product(range(n), repeat=self.arity):
            if self.guard is None or self.guard(*args):
                yield args

    def sweep(self, n: int, leq) -> Check:
        for args in self._tuples(n):
            good, left, right = self._holds(args, leq)
            if not good:
                return Check(self.name, False, args, left, right)
        return Check(self.name, True)

    def violations(self, n: int, leq) -> list:
        """Every violating tuple, as failed checks in lexicographic order."""
        out = []
        for args in self._tuples(n):
            good, left, right = self._holds(args, leq)
            if not good:
                out.append(Check(self.name, False, args, left, right))
        return out


def eq(name, arity, lhs, rhs, guard=None) -> Law:
    return Law(name, arity, "eq", lhs, rhs, guard)


def le(name, arity, lhs, rhs, guard=None) -> Law:
    return Law(name, arity, "le", lhs, rhs, guard)


def iff(name, arity, lhs, rhs, guard=None) -> Law:
    return Law(name, arity, "iff", lhs, rhs, guard)


def run_laws(title: str, laws, n: int, leq) -> Report:
    return Report(title, [law.sweep(n, leq) for law in laws])


def all_violations(laws, n: int, leq) -> list:
    return [c for law in laws for c in law.violations(n, leq)]
