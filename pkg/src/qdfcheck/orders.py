"""Monomial orders.

An order is turned into a *rank function* for a concrete ring: a map from
exponent tuples to plain tuples such that comparing ranks with ``<`` puts the
larger monomial first. Sorting by rank therefore lists terms in descending
order, and ``min`` by rank picks the leading term. Comparisons then run on
native tuples.
"""

from __future__ import annotations

from dataclasses import dataclass


def _grevlex_rank(e):
    return (-sum(e),) + e[::-1]


def _lex_rank(e):
    return tuple([-x for x in e])


@dataclass(frozen=True)
class TermOrder:
    """``lex``, ``grevlex`` or a block order.

    A block order compares the variables in ``first_block`` first (with
    ``inner[0]``), breaking ties on the remaining variables (with
    ``inner[1]``). Within a block ties are broken by variable index, as for
    the plain orders.
    """

    kind: str = "grevlex"
    first_block: tuple = ()
    inner: tuple = ("grevlex", "grevlex")

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown term order {self.kind!r}")
        for k in self.inner:
            if k not in ("lex", "grevlex"):
                raise ValueError(f"unknown inner order {k!r}")

    def rank_function(self, names):
        if self.kind == "grevlex":
            return _grevlex_rank
        if self.kind == "lex":
            return _lex_rank
        first = [names.index(v) for v in self.first_block]
        rest = [i for i in range(len(names)) if i not in first]
        r1 = _grevlex_rank if self.inner[0] == "grevlex" else _lex_rank
        r2 = _grevlex_rank if self.inner[1] == "grevlex" else _lex_rank

        def rank(e):
            return r1(tuple([e[i] for i in first])) + r2(tuple([e[i] for i in rest]))

        return rank

    def is_elimination_for(self, names) -> bool:
        return self.kind == "block" or (self.kind == "lex" and bool(names))

    def __str__(self):
        if self.kind == "block":
            return f"block({','.join(self.first_block)};{'/'.join(self.inner)})"
        return self.kind


GREVLEX = TermOrder("grevlex")
LEX = TermOrder("lex")


def block_order(first_block, inner=("grevlex", "grevlex")) -> TermOrder:
    return TermOrder("block", tuple(first_block), tuple(inner))


def order_from_label(label: str) -> TermOrder:
    if label == "grevlex":
        return GREVLEX
    if label == "lex":
        return LEX
    raise ValueError(f"unknown term order {label!r}")
