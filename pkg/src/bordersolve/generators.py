"""Example systems and seeded random families.

Random entries come from SplitMix64 (Steele, Lea & Flood 2014) seeded with the
family seed, so the same ``(family, n, seed)`` gives the same system on every
platform. An integer in ``[-R, R]`` is drawn by rejection: take the next 64-bit
output ``x``, reject it if ``x >= 2**64 - 2**64 % (2R+1)``, else return
``x % (2R+1) - R``. Entries are drawn in the order a, b, c, p, q; a singular
draw is discarded and the stream continues with the next candidate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import BorderedSystem, dense_matrix, determinant, factor, multiply
from .errors import BadSpec
from .oracle import bareiss_determinant
from .scalar import ScalarMode

__all__ = ["FamilySpec", "SplitMix64", "generate", "FAMILIES", "known_solution"]

FAMILIES = ("example31", "example32", "example33", "random", "pertri")

_MASK = (1 << 64) - 1

# above this size the nonsingularity check uses the O(n) exact pivot product
_BAREISS_MAX_N = 64


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range ``[lo, hi]``."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError("empty range")
        limit = (1 << 64) - (1 << 64) % span
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % span


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int = 7
    seed: int = 0
    entry_range: int = 9

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise BadSpec(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.family not in ("example31", "example32") and self.n <= 3:
            raise BadSpec(f"family {self.family!r} needs n > 3, got {self.n}")
        if self.entry_range < 1:
            raise BadSpec("entry_range must be at least 1")


def _fr(values):
    return tuple(Fraction(v) for v in values)


def _example31() -> BorderedSystem:
    return BorderedSystem(
        7,
        a=_fr([32, 26, 63, 12, 61, 68, 33]),
        b=_fr([3, 52, 39, 24, 51, 42]),
        c=_fr([27, 55, 99, 74, 1, 59]),
        p=_fr([9, 62, 35, 71, 53]),
        q=_fr([29, 65, 9, 45, 72]),
        y=_fr([90, 24, 43, 97, 51, 52, 56]),
    )


def _example32() -> BorderedSystem:
    # b5 = 20: the printed 10 contradicts both the rhs and the all-ones solution
    return BorderedSystem(
        10,
        a=_fr([0, 2, 1, 15, 3, 1, 2, 1, 2, 5]),
        b=_fr([2, 12, 5, 1, 20, 2, 2, 1, 4]),
        c=_fr([13, 9, 3, 2, 7, -5, 2, 5, 1]),
        p=_fr([5, 3, 2, 1, 5, 2, 7, 12]),
        q=_fr([3, 2, 1, 7, 5, -2, 4, 2]),
        y=_fr([7, 30, 17, 20, 30, 12, 6, 16, 11, 28]),
    )


def _example33(n: int) -> BorderedSystem:
    two, three, one = Fraction(2), Fraction(3), Fraction(1)
    y = [Fraction(9)] + [Fraction(10)] * (n - 3) + [Fraction(6), Fraction(5 * n - 7)]
    return BorderedSystem(
        n,
        a=(two,) * n,
        b=(three,) * (n - 1),
        c=(one,) * (n - 1),
        p=(Fraction(4),) * (n - 2),
        q=(Fraction(5),) * (n - 2),
        y=tuple(y),
    )


def _nonsingular(S: BorderedSystem) -> bool:
    if S.n <= _BAREISS_MAX_N:
        return bool(bareiss_determinant(dense_matrix(S)))
    return bool(determinant(factor(S, ScalarMode.EXACT)))


def _random(n: int, seed: int, rng_range: int, pertri: bool) -> BorderedSystem:
    rng = SplitMix64(seed)
    ones = [Fraction(1)] * n
    while True:
        draw = lambda k: [Fraction(rng.randint(-rng_range, rng_range)) for _ in range(k)]
        a, b, c, p, q = draw(n), draw(n - 1), draw(n - 1), draw(n - 2), draw(n - 2)
        if pertri:
            p[1:] = [Fraction(0)] * (n - 3)
            q[1:] = [Fraction(0)] * (n - 3)
        S = BorderedSystem(n, a, b, c, p, q, [Fraction(0)] * n)
        if _nonsingular(S):
            return S.with_rhs(multiply(S, ones))


def generate(spec: FamilySpec) -> BorderedSystem:
    fam = spec.family
    if fam == "example31":
        return _example31()
    if fam == "example32":
        return _example32()
    if fam == "example33":
        return _example33(spec.n)
    return _random(spec.n, spec.seed, spec.entry_range, pertri=(fam == "pertri"))


def known_solution(spec: FamilySpec):
    """Exact solution of the generated system, or None when it has no closed form."""
    if spec.family == "example31":
        return None
    n = 10 if spec.family == "example32" else spec.n
    return [Fraction(1)] * n
