"""Discrepancies along explicit sequences of point blow-ups.

Each step blows up a point where a stated set of earlier exceptional curves
and branch strict transforms meet, and applies

    a_new = 1 + sum(a_prev over exceptional curves through the point)
              - sum(coeff * multiplicity of the branch at the point).

Centres are located on the toric model of the germ, so a specification
that does not describe an actual point is rejected.  For Z_n(1,1) the
minimal resolution curve (index 0, discrepancy -1 + 2/n - ...) is present
before the first step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .branches import Valuation
from .pairs import GermPair, toric_discrepancy


class InvalidSequenceError(ValueError):
    pass


@dataclass(frozen=True)
class Center:
    exceptional: frozenset[int] = frozenset()
    branches: frozenset[int] = frozenset()

    @classmethod
    def of(cls, exceptional: Sequence[int] = (), branches: Sequence[int] = ()) -> "Center":
        return cls(frozenset(exceptional), frozenset(branches))

    @classmethod
    def from_json(cls, d: dict) -> "Center":
        return cls.of(d.get("exceptional", []), d.get("branches", []))


@dataclass
class _Ray:
    vec: tuple[Fraction, Fraction]
    exc: int | None  # index among exceptional curves, None for the axes
    a: Fraction


def _ord(branch, vec) -> Fraction:
    return min(a * vec[0] + b * vec[1] for a, b in branch.support)


def _det(u, w) -> Fraction:
    return u[0] * w[1] - u[1] * w[0]


@dataclass(frozen=True)
class BlowupStep:
    center: Center
    valuation: Valuation
    multiplicities: tuple[int, ...]
    discrepancy: Fraction


def blowup_trace(pair: GermPair, sequence: Sequence[Center]) -> list[BlowupStep]:
    sing = pair.sing
    if not (sing.smooth or sing.q == 1):
        raise InvalidSequenceError("blow-up sequences are supported over smooth points and Z_n(1,1)")
    one, zero = Fraction(1), Fraction(0)
    rays = [_Ray((one, zero), None, zero), _Ray((zero, one), None, zero)]
    n_exc = 0
    if not sing.smooth:
        e0 = (Fraction(1, sing.n), Fraction(1, sing.n))
        rays.insert(1, _Ray(e0, 0, toric_discrepancy(pair, Valuation(*e0))))
        n_exc = 1
    covol = Fraction(1, sing.n)
    steps = []
    for center in sequence:
        matches = []
        for i in range(len(rays) - 1):
            u, w = rays[i], rays[i + 1]
            new = (u.vec[0] + w.vec[0], u.vec[1] + w.vec[1])
            mults = []
            for b, _ in pair.entries:
                m = _ord(b, new)
                for r in (u, w):
                    if r.exc is not None:
                        m -= _ord(b, r.vec)
                mults.append(m)
            exc = frozenset(r.exc for r in (u, w) if r.exc is not None)
            through = frozenset(j for j, m in enumerate(mults) if m > 0)
            if exc == center.exceptional and through == center.branches:
                matches.append((i, new, mults))
        if not matches:
            raise InvalidSequenceError(f"no point matches centre {sorted(center.exceptional)}/"
                                       f"{sorted(center.branches)}")
        if len(matches) > 1:
            raise InvalidSequenceError("centre specification is ambiguous")
        i, new, mults = matches[0]
        u, w = rays[i], rays[i + 1]
        if abs(_det(u.vec, w.vec)) != covol:
            raise InvalidSequenceError("centre is a singular point of the current model")
        a = 1 + sum((r.a for r in (u, w) if r.exc is not None), Fraction(0))
        a -= sum((c * m for (_, c), m in zip(pair.entries, mults)), Fraction(0))
        v = Valuation(*new)
        if a != toric_discrepancy(pair, v):
            raise AssertionError("blow-up rule disagrees with the toric formula")
        rays.insert(i + 1, _Ray(new, n_exc, a))
        n_exc += 1
        steps.append(BlowupStep(center, v, tuple(int(m) for m in mults), a))
    return steps


def blowup_sequence_discrepancy(pair: GermPair, sequence: Sequence[Center]) -> Fraction:
    """Discrepancy of the last exceptional curve of the sequence."""
    if not sequence:
        raise InvalidSequenceError("empty blow-up sequence")
    return blowup_trace(pair, sequence)[-1].discrepancy
