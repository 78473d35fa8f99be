"""Centralized numeric tolerances.

Every rank, membership and dedup decision in the package reads its threshold
from one ``Tolerances`` record so that downstream decisions share consistent
scales.  The named profiles back the CLI's ``--tolerance-profile`` flag.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    """Numeric thresholds shared across the package.

    gate    -- max unitarity/determinant/realness defect accepted at validation
    spec    -- spectral-angle comparisons and snapping of eigenvalues to 1
    exp     -- ``||exp(log g) - g||_F`` round-trip bound
    rank    -- relative singular-value threshold for kernel dimension
    center  -- distance to alpha*I below which an element counts as central
    ball    -- strictness margin at the ball boundary ``1/sqrt(2)``
    dedup   -- Frobenius radius identifying two words as the same element
    word    -- per-letter slack when re-multiplying a word label
    """

    gate: float = 1e-10
    spec: float = 1e-9
    exp: float = 1e-8
    rank: float = 1e-8
    center: float = 1e-8
    ball: float = 1e-10
    dedup: float = 1e-6
    word: float = 1e-7


DEFAULT = Tolerances()

#: CLI profiles.  "strict" tightens validation and membership decisions by 100x
#: (useful when gates are constructed symbolically); "loose" relaxes them by
#: 100x for heavily drifted inputs.  Rank and dedup scales move together with
#: the rest so that verdicts stay internally consistent.
PROFILES = {
    "default": DEFAULT,
    "strict": Tolerances(
        gate=1e-12, spec=1e-11, exp=1e-10, rank=1e-10,
        center=1e-10, ball=1e-12, dedup=1e-8, word=1e-9,
    ),
    "loose": Tolerances(
        gate=1e-8, spec=1e-7, exp=1e-6, rank=1e-6,
        center=1e-6, ball=1e-8, dedup=1e-4, word=1e-5,
    ),
}


def profile(name: str) -> Tolerances:
    try:
        return PROFILES[name]
    except KeyError:
        raise KeyError(f"unknown tolerance profile {name!r}; "
                       f"choose from {sorted(PROFILES)}") from None


def scaled(base: Tolerances, **overrides: float) -> Tolerances:
    """Return a copy of ``base`` with selected fields replaced."""
    return replace(base, **overrides)
