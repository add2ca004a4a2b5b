"""Integer partitions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterable, Iterator

from .errors import InputError


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise InputError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InputError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def of(cls, value: "Partition | Iterable[int]") -> "Partition":
        if isinstance(value, Partition):
            return value
        return cls(tuple(sorted(value, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,3,2"``, ``"(3,3,2)"``, ``"3 3 2"`` or exponent form ``"2^2,1^5"``."""
        parts: list[int] = []
        tokens = text.replace("(", " ").replace(")", " ").replace(",", " ").split()
        try:
            for tok in tokens:
                if "^" in tok:
                    value, times = tok.split("^")
                    parts += [int(value)] * int(times)
                else:
                    parts.append(int(tok))
        except ValueError as exc:
            raise InputError(f"cannot parse partition {text!r}") from exc
        return cls.of(parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def smallest(self) -> int:
        return self.parts[-1] if self.parts else 0

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def iter_partitions(n: int, min_part: int = 1, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` with parts in ``[min_part, max_part]``, reverse lexicographic."""
    if n < 0:
        raise InputError(f"cannot partition a negative number: {n}")
    if min_part < 1:
        raise InputError(f"min_part must be at least 1, got {min_part}")
    top = n if max_part is None else min(n, max_part)

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), min_part - 1, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, top):
        yield Partition(parts)


def partitions(n: int, min_part: int = 1) -> list[Partition]:
    """All partitions of ``n`` whose parts are at least ``min_part``."""
    return list(iter_partitions(n, min_part))


def arrangements(lam: Partition | Iterable[int]) -> int:
    """Distinct orderings of the parts: ``len! / prod(multiplicity!)``."""
    lam = Partition.of(lam)
    if len(lam) < 1:
        raise InputError("arrangements need at least one part")
    return factorial(len(lam)) // prod(factorial(c) for c in lam.multiplicities().values())
