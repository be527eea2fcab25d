"""The two worked examples as ready-made configurations."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Preset:
    ring: str
    f: str
    prime_bound: int
    exp_bound: int
    box: int
    max_factors: int
    ideals: tuple
    class_count: int


EXAMPLES = {
    1: Preset(
        ring="Z",
        f="x^3+4*x-1",
        prime_bound=50,
        exp_bound=2,
        box=6,
        max_factors=2,
        ideals=("3, x-2", "1"),
        class_count=2,
    ),
    2: Preset(
        ring="GF(2)[t]",
        f="y^3+(t^3+t^2+t)",
        prime_bound=4,
        exp_bound=2,
        box=4,
        max_factors=2,
        ideals=("t, y", "t+1, y+1", "1"),
        class_count=3,
    ),
}


def get(example):
    try:
        return EXAMPLES[int(example)]
    except (KeyError, ValueError):
        raise ValueError(f"unknown example {example!r}; choose 1 or 2") from None
