"""Substitution-error decoding, up to floor((d-1)/2) wrong symbols.

The moment syndromes of the error vector form a generalized Reed-Solomon
syndrome over the prime field with evaluation points 1..n, so the classic
chain applies: Berlekamp-Massey for the error-locator polynomial, an
exhaustive root scan over the positions, and the evaluator identity for the
magnitudes.  Two wrinkles are specific to this family:

* The plain-sum syndrome lives modulo ``sum_modulus``; its centered lift is
  the exact integer sum of the error magnitudes and only its mod-prime
  shadow joins the moment sequence.  Acceptance of a candidate always
  re-checks the exact congruence, never just the shadow.

* When n equals the prime modulus, position n has locator 0 and cannot be
  seen by the locator polynomial.  A second decoding phase hypothesises an
  error there: the remaining errors are decoded from the moment sequence
  shifted by one (dropping the plain-sum term), and the magnitude at
  position n is recovered from the exact integer sum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import CodeSpec, Offset, Word, _masked_sums, is_codeword, validate_offset, validate_word
from .modarith import eval_poly_mod, inv_mod, validate_prime_modulus

# Same switch point as the checksum helpers in core.
_VECTOR_MIN_LENGTH = 1024


class UncorrectableError(Exception):
    """No coset member lies within the correction radius of the input."""


def centered_lift(residue: int, modulus: int) -> int:
    """The representative of ``residue`` in [-(modulus-1)//2, modulus//2].

    Any integer of absolute value at most (modulus-1)/2 is recovered exactly
    from its residue, which is what makes the plain-sum syndrome exact.
    """
    r = residue % modulus
    return r if r <= modulus // 2 else r - modulus


def _syndrome_parts(
    received: Word, spec: CodeSpec, offset: Offset
) -> tuple[int, list[int]]:
    """(exact integer sum of error magnitudes, weighted syndromes mod prime)."""
    validate_offset(offset, spec)
    validate_word(received, spec)
    plain, weighted = _masked_sums(received, spec)
    shift = centered_lift(plain - offset[0], spec.sum_modulus)
    p = spec.power_modulus
    tail = [(w - offset[j]) % p for j, w in enumerate(weighted, start=1)]
    return shift, tail


def compute_error_syndrome(
    received: Word, spec: CodeSpec, offset: Offset
) -> tuple[int, ...]:
    """Moment syndromes of the error vector, reduced modulo the prime.

    Entry 0 is the mod-prime shadow of the centered plain-sum shift; note
    that shadow can vanish while the shift itself does not, so codeword
    detection must use the exact shift (as the decoders here do).
    """
    shift, tail = _syndrome_parts(received, spec, offset)
    return (shift % spec.power_modulus, *tail)


def berlekamp_massey(
    syndromes: list[int] | tuple[int, ...], modulus: int
) -> tuple[list[int], int]:
    """Minimal LFSR for the syndrome sequence over the prime field.

    Returns (connection polynomial, register length).  The polynomial is in
    ascending order with constant term 1 and trailing zeros trimmed; its
    degree equals the register length exactly when the sequence is
    consistent with that many error locations, so callers treat a mismatch
    as a decoding failure.
    """
    lam = [1]
    prev = [1]
    length = 0
    gap = 1
    prev_disc = 1
    for i, s in enumerate(syndromes):
        disc = s % modulus
        for j in range(1, min(length, len(lam) - 1) + 1):
            disc = (disc + lam[j] * syndromes[i - j]) % modulus
        if disc == 0:
            gap += 1
            continue
        coef = disc * inv_mod(prev_disc, modulus) % modulus
        update = [0] * gap + [c * coef % modulus for c in prev]
        if 2 * length <= i:
            stash = lam[:]
            lam = _poly_sub(lam, update, modulus)
            prev = stash
            prev_disc = disc
            length = i + 1 - length
            gap = 1
        else:
            lam = _poly_sub(lam, update, modulus)
            gap += 1
    return lam, length


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_mul_trunc(a: list[int], b: list[int], p: int, count: int) -> list[int]:
    out = [0] * count
    for i, ai in enumerate(a):
        if ai == 0 or i >= count:
            continue
        for j, bj in enumerate(b):
            if i + j >= count:
                break
            out[i + j] = (out[i + j] + ai * bj) % p
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


@dataclass(frozen=True)
class ErrorVector:
    """Sparse difference received - sent: (position, magnitude) pairs.

    Positions are 1-indexed, strictly increasing; magnitudes are nonzero
    integers in [-(q-1), q-1].
    """

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        last = 0
        for pos, mag in self.entries:
            if pos <= last:
                raise ValueError("positions must be strictly increasing")
            if mag == 0:
                raise ValueError(f"zero magnitude at position {pos}")
            last = pos

    @property
    def support(self) -> frozenset[int]:
        return frozenset(pos for pos, _ in self.entries)

    @property
    def weight(self) -> int:
        return len(self.entries)

    def correct(self, received: Word) -> Word:
        out = list(received)
        for pos, mag in self.entries:
            out[pos - 1] -= mag
        return tuple(out)


@dataclass(frozen=True)
class KeyEquationState:
    """Syndromes with the locator/evaluator pair derived from them."""

    syndromes: tuple[int, ...]
    locator: tuple[int, ...]
    evaluator: tuple[int, ...]
    modulus: int

    def __post_init__(self) -> None:
        validate_prime_modulus(self.modulus)
        if not self.locator or self.locator[0] % self.modulus != 1:
            raise ValueError("locator must have constant term 1")
        expected = _poly_mul_trunc(
            list(self.locator), list(self.syndromes), self.modulus, len(self.syndromes)
        )
        given = list(self.evaluator) if self.evaluator else [0]
        while len(given) > 1 and given[-1] == 0:
            given.pop()
        if [c % self.modulus for c in given] != expected:
            raise ValueError("evaluator does not match syndromes * locator")
        if len(given) > 1 and len(given) >= len(self.locator):
            raise ValueError("evaluator degree must stay below the locator degree")


def _locator_roots(lam: list[int], spec: CodeSpec) -> list[int]:
    """Positions k whose locator (k mod prime) inverts to a root of lam.

    Scans the reversed polynomial at k directly, which avoids one modular
    inversion per position.  A position with locator 0 (only k = n when n
    equals the prime) can never appear here.
    """
    p = spec.power_modulus
    n = spec.n
    if n >= _VECTOR_MIN_LENGTH:
        ks = np.arange(1, n + 1, dtype=np.int64)
        acc = np.zeros(n, dtype=np.int64)
        for c in lam:
            acc = (acc * ks + c) % p
        roots = [int(k) for k in ks[acc == 0]]
    else:
        rev = list(reversed(lam))
        roots = [k for k in range(1, n + 1) if eval_poly_mod(rev, k, p) == 0]
    return [k for k in roots if k % p != 0]


def _magnitude_entries(
    lam: list[int],
    omega: list[int],
    spec: CodeSpec,
    received: Word,
    first_moment: int,
) -> list[tuple[int, int]] | None:
    """Root scan plus evaluator identity; None on any inconsistency.

    ``first_moment`` names the lowest moment present in the syndrome
    sequence the pair was built from (0 for the full sequence, 1 when the
    plain-sum term was dropped); it only changes the magnitude formula by
    one locator factor.
    """
    p = spec.power_modulus
    deg = len(lam) - 1
    roots = _locator_roots(lam, spec)
    if len(roots) != deg:
        return None
    deriv = [i * c % p for i, c in enumerate(lam)][1:]
    entries = []
    for k in roots:
        x = k % p
        xinv = inv_mod(x, p)
        denom = eval_poly_mod(deriv, xinv, p)
        if denom == 0:
            return None
        residue = (-eval_poly_mod(omega, xinv, p) * inv_mod(denom, p)) % p
        if first_moment == 0:
            residue = residue * x % p
        if residue == 0:
            return None
        sent = (received[k - 1] - residue) % p
        if sent >= spec.q:
            return None
        entries.append((k, received[k - 1] - sent))
    return entries


def locate_and_evaluate(
    state: KeyEquationState, spec: CodeSpec, received: Word
) -> ErrorVector:
    """Error positions and integer magnitudes from a key-equation state.

    Magnitude residues are lifted to the unique integers that pull the
    received symbols back into the alphabet.  Raises UncorrectableError when
    the root count disagrees with the locator degree or a lift fails.
    """
    entries = _magnitude_entries(
        list(state.locator), list(state.evaluator), spec, received, 0
    )
    if entries is None:
        raise UncorrectableError("locator roots or magnitudes are inconsistent")
    return ErrorVector(tuple(entries))


def _attempt(
    received: Word,
    spec: CodeSpec,
    offset: Offset,
    moments: list[int],
    first_moment: int,
    max_errors: int,
    zero_locator_shift: int | None,
) -> Word | None:
    p = spec.power_modulus
    lam, length = berlekamp_massey(moments, p)
    if length > max_errors or len(lam) - 1 != length:
        return None
    if length == 0:
        entries: list[tuple[int, int]] = []
    else:
        omega = _poly_mul_trunc(lam, moments, p, len(moments))
        entries = _magnitude_entries(lam, omega, spec, received, first_moment)
        if entries is None:
            return None
    if zero_locator_shift is not None:
        # Phase two: the exact integer sum pins the magnitude at position n.
        magnitude = zero_locator_shift - sum(e for _, e in entries)
        if magnitude == 0:
            return None
        sent = received[spec.n - 1] - magnitude
        if not 0 <= sent < spec.q:
            return None
        entries = entries + [(spec.n, magnitude)]
    candidate = list(received)
    for pos, mag in entries:
        candidate[pos - 1] -= mag
    result = tuple(candidate)
    if not is_codeword(result, spec, offset):
        return None
    return result


def decode_errors(received: Word, spec: CodeSpec, offset: Offset) -> Word:
    """Correct up to floor((d-1)/2) substitutions, or fail loudly.

    Sound under any input: every returned word is a verified coset member
    within the correction radius of the received word, and with at most
    that many substitutions the unique closest member is the sent one.
    """
    shift, tail = _syndrome_parts(received, spec, offset)
    if shift == 0 and not any(tail):
        return tuple(received)
    p = spec.power_modulus
    radius = spec.correction_radius
    result = _attempt(
        received, spec, offset, [shift % p, *tail], 0, radius, None
    )
    if result is None and spec.n == p:
        result = _attempt(received, spec, offset, tail, 1, radius - 1, shift)
    if result is None:
        raise UncorrectableError(
            f"no coset member within {radius} substitutions of the received word"
        )
    return result


def decode_single_error(received: Word, spec: CodeSpec, offset: Offset) -> Word:
    """Single-substitution decoder for d in {3, 4}, by direct syndrome solve.

    One substitution of magnitude e at position k moves the plain sum by
    exactly e (recovered via the centered lift) and the first weighted sum
    by k*e, so the position falls out of one modular division.
    """
    if spec.d not in (3, 4):
        raise ValueError(f"single-error decoding expects d in {{3, 4}}, got d={spec.d}")
    shift, tail = _syndrome_parts(received, spec, offset)
    if shift == 0 and not any(tail):
        return tuple(received)
    p = spec.power_modulus
    if shift % p == 0:
        # Covers shift == 0 with a nonzero weighted syndrome, and any shift
        # at least the prime in absolute value: impossible for one symbol.
        raise UncorrectableError("plain-sum shift inconsistent with one substitution")
    k_res = tail[0] * inv_mod(shift, p) % p
    if k_res == 0:
        if spec.n != p:
            raise UncorrectableError("implied position is outside the word")
        k = spec.n
    elif k_res <= spec.n:
        k = k_res
    else:
        raise UncorrectableError("implied position is outside the word")
    sent = received[k - 1] - shift
    if not 0 <= sent < spec.q:
        raise UncorrectableError("implied magnitude leaves the alphabet")
    out = list(received)
    out[k - 1] = sent
    result = tuple(out)
    if not is_codeword(result, spec, offset):
        raise UncorrectableError("corrected word fails the membership check")
    return result


def decode_single_error_scan(received: Word, spec: CodeSpec, offset: Offset) -> Word:
    """Reference single-error decoder: try every position and symbol.

    Linear-time congruence updates per candidate, O(n*q*d) overall.  Kept
    for differential testing against the direct solve.
    """
    if spec.d not in (3, 4):
        raise ValueError(f"single-error decoding expects d in {{3, 4}}, got d={spec.d}")
    validate_offset(offset, spec)
    validate_word(received, spec)
    plain, weighted = _masked_sums(received, spec)
    m0 = spec.sum_modulus
    p = spec.power_modulus
    r0 = (plain - offset[0]) % m0
    rest = [(w - offset[j]) % p for j, w in enumerate(weighted, start=1)]
    if r0 == 0 and not any(rest):
        return tuple(received)
    for k in range(1, spec.n + 1):
        kpow = [pow(k, j, p) for j in range(1, spec.d - 1)]
        for sym in range(spec.q):
            if sym == received[k - 1]:
                continue
            delta = sym - received[k - 1]
            if (r0 + delta) % m0 != 0:
                continue
            if all((r + kp * delta) % p == 0 for r, kp in zip(rest, kpow)):
                out = list(received)
                out[k - 1] = sym
                return tuple(out)
    raise UncorrectableError("no single substitution reaches the coset")
