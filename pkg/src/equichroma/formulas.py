"""Published closed forms for the equitable coloring mean and variance.

The odd-wheel variance is kept exactly as printed, sign error included;
:func:`corrected_wheel_odd_variance` holds the repaired polynomial and
:func:`proof_body_wheel_odd_variance` the third expression that appears
at the end of the printed derivation.
"""

from __future__ import annotations

import enum
from fractions import Fraction as F

from .families import Family
from .stats import ChromaticStats

__all__ = [
    "TheoremId",
    "THEOREM_FAMILY",
    "closed_form",
    "printed_wheel_odd_variance",
    "corrected_wheel_odd_variance",
    "proof_body_wheel_odd_variance",
]


class TheoremId(str, enum.Enum):
    THM1_WHEEL = "thm1_wheel"
    THM1A_DOUBLE_WHEEL = "thm1a_double_wheel"
    THM2_HELM = "thm2_helm"
    THM3_CLOSED_HELM = "thm3_closed_helm"
    THM4_FLOWER = "thm4_flower"
    THM5_SUNFLOWER = "thm5_sunflower"
    THM6_CLOSED_SUNFLOWER = "thm6_closed_sunflower"
    THM7_BLOSSOM = "thm7_blossom"

    def __str__(self) -> str:
        return self.value

    @property
    def family(self) -> Family:
        return THEOREM_FAMILY[self]


THEOREM_FAMILY = {
    TheoremId.THM1_WHEEL: Family.WHEEL,
    TheoremId.THM1A_DOUBLE_WHEEL: Family.DOUBLE_WHEEL,
    TheoremId.THM2_HELM: Family.HELM,
    TheoremId.THM3_CLOSED_HELM: Family.CLOSED_HELM,
    TheoremId.THM4_FLOWER: Family.FLOWER,
    TheoremId.THM5_SUNFLOWER: Family.SUNFLOWER,
    TheoremId.THM6_CLOSED_SUNFLOWER: Family.CLOSED_SUNFLOWER,
    TheoremId.THM7_BLOSSOM: Family.BLOSSOM,
}

_HUB_PAIRED = {TheoremId.THM1A_DOUBLE_WHEEL, TheoremId.THM4_FLOWER, TheoremId.THM7_BLOSSOM}


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise ValueError(f"n must be an integer >= 3, got {n!r}")


def printed_wheel_odd_variance(n: int) -> F:
    _check_n(n)
    return F(n**4 + 4 * n**3 + 26 * n**2 - 44 * n - 27, 48 * (n + 1) ** 2)


def corrected_wheel_odd_variance(n: int) -> F:
    _check_n(n)
    if n % 2 == 0:
        raise ValueError(f"the odd-wheel variance needs odd n, got {n}")
    return F(n**4 + 4 * n**3 + 26 * n**2 + 44 * n - 27, 48 * (n + 1) ** 2)


def proof_body_wheel_odd_variance(n: int) -> F:
    _check_n(n)
    if n % 2 == 0:
        raise ValueError(f"the odd-wheel variance needs odd n, got {n}")
    return F(n**4 + 76 * n**3 + 386 * n**2 + 692 * n + 333, 48 * (n + 1) ** 2)


def _wheel(n: int, proof_body: bool) -> tuple[F, F]:
    if n % 2 == 0:
        return F((n + 2) ** 2, 4 * (n + 1)), F(n * (n + 2) * (n * n + 2 * n + 4), 48 * (n + 1) ** 2)
    mean = F(n * n + 4 * n + 7, 4 * (n + 1))
    var = proof_body_wheel_odd_variance(n) if proof_body else printed_wheel_odd_variance(n)
    return mean, var


def closed_form(t: TheoremId | str, n: int, *, proof_body: bool = False) -> ChromaticStats:
    """Mean and variance as printed in the theorem statement for ``n``.

    ``proof_body`` swaps in the derivation's final expression for the
    odd-wheel variance; it has no effect elsewhere.
    """
    t = TheoremId(t)
    _check_n(n)
    if t is TheoremId.THM1_WHEEL:
        mean, var = _wheel(n, proof_body)
    elif t in _HUB_PAIRED:
        mean = F((n + 1) ** 2, 2 * n + 1)
        var = F(n**4 + 2 * n**3 + 2 * n**2 + n, 3 * (2 * n + 1) ** 2)
    else:
        mean = F(5 * n + 1, 2 * n + 1)
        if n % 2 == 0:
            var = F(5 * n * n + 7 * n, (2 * n + 1) ** 2)
        else:
            var = F(5 * n * n + 3 * n - 2, (2 * n + 1) ** 2)
    return ChromaticStats(mean, var, source="closed_form")
