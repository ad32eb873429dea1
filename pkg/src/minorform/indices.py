"""Survivor-index calculus for telescoping minor chains.

When row/column `r` is deleted from a matrix, position `t` of the minor
reads source position kappa(t, r): positions before the cut keep their
index, later ones skip past it. A chain of nested deletions therefore maps
a final-level index back to the original matrix by composing kappa once
per level, innermost deletion first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .discrete import heav
from .errors import DomainError


def kappa(t: int, r0: int) -> int:
    """Source index read by minor position t after deleting index r0.

    kappa(t, r0) = t + 1 - heav(r0 - t - 1): t itself while t < r0, else t+1.
    """
    if not isinstance(t, int) or isinstance(t, bool) or t < 1:
        raise DomainError(f"minor position must be a positive integer, got {t!r}")
    if not isinstance(r0, int) or isinstance(r0, bool) or r0 < 1:
        raise DomainError(f"deleted index must be a positive integer, got {r0!r}")
    return t + 1 - heav(r0 - t - 1)


@dataclass(frozen=True)
class IndexHistory:
    """A base index at depth K plus the deletion chain above it.

    chain[0] is the outermost deleted index (in original coordinates),
    chain[-1] the innermost; base indexes the innermost minor.
    """

    base: int
    chain: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.base, int) or isinstance(self.base, bool) or self.base < 1:
            raise DomainError(f"base index must be a positive integer, got {self.base!r}")
        chain = tuple(self.chain)
        if not chain:
            raise DomainError("deletion chain must contain at least one index")
        for r in chain:
            if not isinstance(r, int) or isinstance(r, bool) or r < 1:
                raise DomainError(f"deleted indices must be positive integers, got {r!r}")
        object.__setattr__(self, "chain", chain)

    @property
    def depth(self) -> int:
        return len(self.chain)


def _check_depth(k: int, hist: IndexHistory) -> None:
    if k != hist.depth:
        raise DomainError(f"history carries {hist.depth} deletions, got depth {k}")


def primed_index(k: int, hist: IndexHistory) -> int:
    """Original-matrix index read by `hist.base` after k nested deletions.

    Folds kappa through the chain innermost-first: the base survives the
    deepest cut first, the outermost cut last.
    """
    _check_depth(k, hist)
    value = hist.base
    for deleted in reversed(hist.chain):
        value = kappa(value, deleted)
    return value


def reflected_primed_index(k: int, hist: IndexHistory) -> int:
    """As primed_index, but the 2x2-level base is reflected (1 <-> 2)."""
    if hist.base not in (1, 2):
        raise DomainError(
            f"reflection is defined for base 1 or 2 only, got {hist.base}"
        )
    return primed_index(k, IndexHistory(3 - hist.base, hist.chain))


def _expanded(base: int, chain: tuple[int, ...]) -> int:
    # Branch-sum evaluation: each inner deletion either did (u=1) or did not
    # (u=0) sit at-or-below the running index, contributing its step gate;
    # exactly one u-tuple has all gates open, and it reproduces the fold.
    k = len(chain)
    total = 0
    for bits in range(1 << (k - 1)):
        u = [(bits >> m) & 1 for m in range(k - 1)]
        gates = 1
        for m in range(1, k):
            deleted = chain[k - m]  # innermost deletion handled first
            prev = base + sum(u[:m - 1])
            if u[m - 1]:
                gates *= heav(prev - deleted)
            else:
                gates *= heav(deleted - prev - 1)
            if gates == 0:
                break
        if gates:
            total += gates * kappa(base + sum(u), chain[0])
    return total


def primed_index_expanded(k: int, hist: IndexHistory) -> int:
    """Alternate closed-sum evaluator for primed_index; no recursion."""
    _check_depth(k, hist)
    return _expanded(hist.base, hist.chain)


def reflected_primed_index_expanded(k: int, hist: IndexHistory) -> int:
    """Alternate closed-sum evaluator for reflected_primed_index."""
    if hist.base not in (1, 2):
        raise DomainError(
            f"reflection is defined for base 1 or 2 only, got {hist.base}"
        )
    _check_depth(k, hist)
    return _expanded(3 - hist.base, hist.chain)
