"""The code family: words over [0, q-1] sliced by position-weighted checksums.

A length-n word x (positions counted from 1) has the checksums
t_j(x) = sum_i i**j * x_i.  A code is the set of words whose plain sum t_0
hits a prescribed residue modulo ``sum_modulus`` and whose weighted sums
t_1 .. t_{d-2} hit prescribed residues modulo the prime ``power_modulus``.
Any two distinct members then disagree in at least d positions.

Text formats used by the CLI and tests: a word is comma-separated symbols
with '?' marking an erased position ("1,?,0,1,1"); an offset is the
comma-separated residue vector ("b0,b1,...").
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .modarith import smallest_prime_geq, validate_prime_modulus

DEFAULT_ENUMERATION_BUDGET = 1 << 24
ERASURE_MARK = "?"

# Below this length the plain-int loops beat the cost of building arrays.
_VECTOR_MIN_LENGTH = 1024

Word = tuple
Offset = tuple


class BudgetExceededError(RuntimeError):
    """Raised instead of silently launching an over-budget enumeration."""


@dataclass(frozen=True)
class CodeSpec:
    """Parameters of one code family member.

    q: alphabet size (>= 2); n: length (>= d); d: designed minimum
    distance (>= 3).  ``power_modulus`` defaults to the smallest prime
    >= max(n, q) and may be overridden by any prime satisfying that bound.
    ``sum_modulus`` is (d-1)(q-1)+1, the number of values the plain sum of
    d-1 symbols can take.
    """

    q: int
    n: int
    d: int
    power_modulus: int | None = None
    sum_modulus: int = field(init=False)

    def __post_init__(self) -> None:
        for name in ("q", "n", "d"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"{name} must be an integer, got {v!r}")
        if self.q < 2:
            raise ValueError(f"alphabet size q={self.q} must be >= 2")
        if self.d < 3:
            raise ValueError(f"designed distance d={self.d} must be >= 3")
        if self.n < self.d:
            raise ValueError(f"length n={self.n} must be >= d={self.d}")
        floor = max(self.n, self.q)
        if self.power_modulus is None:
            object.__setattr__(self, "power_modulus", smallest_prime_geq(floor))
        else:
            validate_prime_modulus(self.power_modulus)
            if self.power_modulus < floor:
                raise ValueError(
                    f"power_modulus {self.power_modulus} < max(n, q) = {floor}"
                )
        object.__setattr__(self, "sum_modulus", (self.d - 1) * (self.q - 1) + 1)

    @property
    def correction_radius(self) -> int:
        """Largest substitution count the error decoder guarantees to fix."""
        return (self.d - 1) // 2

    @property
    def checksum_count(self) -> int:
        return self.d - 1

    @property
    def offset_space_size(self) -> int:
        return self.sum_modulus * self.power_modulus ** (self.d - 2)


def parse_word(text: str) -> Word:
    """Parse "1,?,0,1,1" into a tuple with None at erased positions."""
    parts = [p.strip() for p in text.split(",")]
    if parts == [""]:
        raise ValueError("empty word")
    out = []
    for p in parts:
        if p == ERASURE_MARK:
            out.append(None)
        else:
            try:
                v = int(p)
            except ValueError:
                raise ValueError(f"bad symbol {p!r} in word") from None
            if v < 0:
                raise ValueError(f"negative symbol {v} in word")
            out.append(v)
    return tuple(out)


def format_word(word: Word) -> str:
    return ",".join(ERASURE_MARK if s is None else str(s) for s in word)


def parse_offset(text: str) -> Offset:
    parts = [p.strip() for p in text.split(",")]
    if parts == [""]:
        raise ValueError("empty offset")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"bad offset {text!r}") from None


def format_offset(offset: Offset) -> str:
    return ",".join(str(v) for v in offset)


def validate_word(word: Word, spec: CodeSpec, *, allow_erasures: bool = False) -> None:
    if len(word) != spec.n:
        raise ValueError(f"word length {len(word)} != n={spec.n}")
    for i, s in enumerate(word, start=1):
        if s is None:
            if not allow_erasures:
                raise ValueError(f"erased symbol at position {i} not allowed here")
            continue
        if not 0 <= s < spec.q:
            raise ValueError(f"symbol {s} at position {i} outside [0, {spec.q - 1}]")


def validate_offset(offset: Offset, spec: CodeSpec) -> None:
    if len(offset) != spec.checksum_count:
        raise ValueError(
            f"offset length {len(offset)} != d-1 = {spec.checksum_count}"
        )
    if not 0 <= offset[0] < spec.sum_modulus:
        raise ValueError(
            f"offset[0] = {offset[0]} outside [0, {spec.sum_modulus - 1}]"
        )
    for j, v in enumerate(offset[1:], start=1):
        if not 0 <= v < spec.power_modulus:
            raise ValueError(
                f"offset[{j}] = {v} outside [0, {spec.power_modulus - 1}]"
            )


def checksum(word: Word, j: int) -> int:
    """The exact integer sum_i i**j * x_i over 1-indexed positions.

    No modular reduction is applied.  Erased positions are rejected.
    """
    if not isinstance(j, int) or isinstance(j, bool) or j < 0:
        raise ValueError(f"checksum order must be a nonnegative integer, got {j!r}")
    total = 0
    for i, s in enumerate(word, start=1):
        if s is None:
            raise ValueError(f"erased symbol at position {i}")
        total += i**j * s
    return total


@lru_cache(maxsize=128)
def _position_powers(spec: CodeSpec) -> tuple[tuple[int, ...], ...]:
    """Rows j = 1 .. d-2 of i**j mod power_modulus, for small-n loops."""
    p = spec.power_modulus
    rows = []
    prev = tuple(i % p for i in range(1, spec.n + 1))
    for _ in range(1, spec.d - 1):
        rows.append(prev)
        prev = tuple(v * i % p for v, i in zip(prev, range(1, spec.n + 1)))
    return tuple(rows)


def _masked_sums(word: Word, spec: CodeSpec) -> tuple[int, tuple[int, ...]]:
    """(exact plain sum, weighted sums mod power_modulus), None counting as 0.

    Feeding erased positions as zeros makes this directly usable both for
    full words and for the kept part of a partially erased word.
    """
    p = spec.power_modulus
    if spec.n >= _VECTOR_MIN_LENGTH:
        arr = np.fromiter(
            (0 if s is None else s for s in word), dtype=np.int64, count=spec.n
        )
        idx = np.arange(1, spec.n + 1, dtype=np.int64)
        plain = int(arr.sum())
        out = []
        pw = idx % p
        for _ in range(1, spec.d - 1):
            out.append(int(((pw * arr) % p).sum() % p))
            pw = (pw * idx) % p
        return plain, tuple(out)

    plain = 0
    acc = [0] * (spec.d - 2)
    powers = _position_powers(spec)
    for idx0, s in enumerate(word):
        if not s:
            continue
        plain += s
        for j, row in enumerate(powers):
            acc[j] += row[idx0] * s
    return plain, tuple(a % p for a in acc)


def _profile_of(word: Word, spec: CodeSpec) -> tuple[int, ...]:
    plain, weighted = _masked_sums(word, spec)
    return (plain % spec.sum_modulus, *weighted)


def syndrome_profile(word: Word, spec: CodeSpec) -> tuple[int, ...]:
    """Canonical residues (t_0 mod sum_modulus, t_1 .. t_{d-2} mod prime).

    The plain sum keeps its own modulus; it is reduced further only where a
    mod-prime shadow is explicitly needed (e.g. assembling moment systems).
    """
    validate_word(word, spec)
    return _profile_of(word, spec)


def is_codeword(word: Word, spec: CodeSpec, offset: Offset) -> bool:
    validate_offset(offset, spec)
    validate_word(word, spec)
    return _profile_of(word, spec) == tuple(offset)


def iter_offsets(spec: CodeSpec):
    """All offsets in lexicographic order."""
    ranges = [range(spec.sum_modulus)] + [range(spec.power_modulus)] * (spec.d - 2)
    return itertools.product(*ranges)


def _check_budget(spec: CodeSpec, budget: int) -> None:
    total = spec.q**spec.n
    if total > budget:
        raise BudgetExceededError(
            f"enumeration needs {total} words, budget is {budget}"
        )


def enumerate_codewords(
    spec: CodeSpec, offset: Offset, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> list[Word]:
    """All members of the coset, in lexicographic order.

    Scans the full cube of q**n words and therefore refuses to start when
    that count exceeds ``budget``.
    """
    validate_offset(offset, spec)
    _check_budget(spec, budget)
    target = tuple(offset)
    return [
        w
        for w in itertools.product(range(spec.q), repeat=spec.n)
        if _profile_of(w, spec) == target
    ]


def best_offset_search(
    spec: CodeSpec, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> tuple[Offset, int]:
    """The offset with the largest coset, ties broken lexicographically.

    Averaging over the offset space guarantees the winner has at least
    ceil(q**n / offset_space_size) members.
    """
    _check_budget(spec, budget)
    counts: dict[tuple[int, ...], int] = {}
    for w in itertools.product(range(spec.q), repeat=spec.n):
        p = _profile_of(w, spec)
        counts[p] = counts.get(p, 0) + 1
    best_size = max(counts.values())
    best = min(p for p, c in counts.items() if c == best_size)
    return best, best_size


def hamming_distance(a: Word, b: Word) -> int:
    if len(a) != len(b):
        raise ValueError("length mismatch")
    return sum(x != y for x, y in zip(a, b))
