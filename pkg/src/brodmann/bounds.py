"""Explicit stabilization thresholds for associated primes of powers.

Four exact quantities in the parameters r (variables), s (minimal
generators), d (largest generator degree): b1 bounds the generator degrees
of the maximal-ideal torsion module of the associated graded ring, b2
bounds the top nonvanishing torsion degree with respect to the Rees
irrelevant ideal, b3/b4 are the intermediate quantities behind b2, and the
stabilization threshold is B = max(b1, b2).  Everything is computed in
exact radical arithmetic; only ceilings are ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistencyError, InputError
from .monomials import MonomialIdeal
from .assprimes import AssProfile
from .radicals import ExactRadical, RadicalSum


def _validate(r: int, s: int, d: int) -> None:
    for name, v in (("r", r), ("s", s), ("d", d)):
        if not isinstance(v, int) or v < 1:
            raise InputError(f"parameter {name} must be a positive integer, got {v!r}")


def bound_b1(r: int, s: int, d: int) -> ExactRadical:
    """d(rs+s+d) * sqrt(r)^(r+1) * (sqrt(2)d)^((r+1)(s-1)), exact."""
    _validate(r, s, d)
    out = ExactRadical.of_fraction(d * (r * s + s + d))
    out = out * ExactRadical.sqrt_of(r) ** (r + 1)
    out = out * (ExactRadical.sqrt_of(2) * d) ** ((r + 1) * (s - 1))
    return out


def bound_b2(r: int, s: int, d: int) -> int:
    """s(s+r)^4 s^(r+2) d^2 (2d^2)^(s^2-s+1), an exact integer."""
    _validate(r, s, d)
    return s * (s + r) ** 4 * s ** (r + 2) * d * d * (2 * d * d) ** (s * s - s + 1)


def _b3_bracket(r: int, s: int, d: int) -> ExactRadical:
    out = ExactRadical.of_fraction((s + r) ** 2 * d)
    out = out * (ExactRadical.sqrt_of(2) * d) ** (s * s - s + 1)
    out = out * ExactRadical.sqrt_of(s) ** (r + 2)
    return out


def bound_b3(r: int, s: int, d: int) -> RadicalSum:
    """(s+r)^2 d (sqrt(2)d)^(s^2-s+1) sqrt(s)^(r+2) minus one, exact.

    The minus-one reading treats the whole product as a grouped factor; the
    alternative floor reading is exposed separately.
    """
    _validate(r, s, d)
    return RadicalSum.of(_b3_bracket(r, s, d), -1)


def bound_b3_floor_reading(r: int, s: int, d: int) -> int:
    """Integer alternative reading: floor of the grouped product, minus one."""
    _validate(r, s, d)
    return _b3_bracket(r, s, d).floor() - 1


def bound_b4(r: int, s: int, d: int) -> int:
    """ceiling(s * b3), the generator-count multiple of b3."""
    _validate(r, s, d)
    return RadicalSum.of(_b3_bracket(r, s, d) * s, -s).ceil()


def stabilization_bound(r: int, s: int, d: int) -> ExactRadical:
    """B = max(b1, b2) in exact form; Ass(I^n/I^(n+1)) is constant for n >= B."""
    b1 = bound_b1(r, s, d)
    b2 = bound_b2(r, s, d)
    return b1 if b1 > b2 else ExactRadical.of_fraction(b2)


@dataclass(frozen=True)
class BoundReport:
    """All thresholds for one (r, s, d), exact and with integer ceilings."""

    r: int
    s: int
    d: int
    b1: ExactRadical
    b1_ceil: int
    b2: int
    b3: RadicalSum
    b3_ceil: int
    b3_floor_reading: int
    b4: int
    b_exact: ExactRadical
    b_ceil: int
    digits_b1: int
    digits_b2: int
    digits_b: int


def bound_report(r: int, s: int, d: int) -> BoundReport:
    _validate(r, s, d)
    b1 = bound_b1(r, s, d)
    b2 = bound_b2(r, s, d)
    b3 = bound_b3(r, s, d)
    b4 = bound_b4(r, s, d)
    b = stabilization_bound(r, s, d)
    b1c = b1.ceil()
    bc = b.ceil()
    return BoundReport(
        r=r,
        s=s,
        d=d,
        b1=b1,
        b1_ceil=b1c,
        b2=b2,
        b3=b3,
        b3_ceil=b3.ceil(),
        b3_floor_reading=bound_b3_floor_reading(r, s, d),
        b4=b4,
        b_exact=b,
        b_ceil=bc,
        digits_b1=len(str(b1c)),
        digits_b2=len(str(b2)),
        digits_b=len(str(bc)),
    )


def ideal_parameters(I: MonomialIdeal) -> tuple[int, int, int]:
    """(r, s, d) of a proper nonzero ideal: ambient variables, minimal
    generator count, largest generator total degree."""
    if I.is_zero() or I.is_unit():
        raise InputError("a proper nonzero ideal is required")
    return I.r, len(I.generators), max(sum(g) for g in I.generators)


@dataclass(frozen=True)
class ComparisonReport:
    """Observed stabilization index next to the proved threshold."""

    observed_stable_at: int | None
    bound_ceiling: int
    note: str
    consistent: bool


def compare_with_observed(I: MonomialIdeal, profile: AssProfile) -> ComparisonReport:
    """Check an observed profile against the proved threshold B.

    Entries at scanned indices n >= B must all be equal; a difference there
    is a fatal inconsistency.  At desk scale n_max is far below B, so the
    report normally just states the observed index and the slack.
    """
    if profile.ideal != I:
        raise InputError("profile was computed for a different ideal")
    r, s, d = ideal_parameters(I)
    b_ceil = bound_report(r, s, d).b_ceil
    beyond = [
        (n, profile.entries[n]) for n in range(profile.n_max + 1) if n >= b_ceil
    ]
    if beyond and any(e != beyond[-1][1] for _, e in beyond):
        raise InconsistencyError(
            "profile entries differ beyond the proved stabilization threshold",
            payload={
                "bound_ceiling": b_ceil,
                "entries_beyond": [
                    {"n": n, "primes": sorted(map(list, e))} for n, e in beyond
                ],
            },
        )
    if profile.observed_stable_at is None:
        note = (
            f"no stabilization observed up to n_max={profile.n_max}; "
            f"the proved threshold is {b_ceil}"
        )
        consistent = True
    else:
        slack = b_ceil - profile.observed_stable_at
        note = (
            f"observed stabilization at n={profile.observed_stable_at}, "
            f"proved threshold {b_ceil} (slack {slack})"
        )
        consistent = profile.observed_stable_at <= b_ceil
        if not consistent:
            raise InconsistencyError(
                "observed stabilization exceeds the proved threshold",
                payload={
                    "observed_stable_at": profile.observed_stable_at,
                    "bound_ceiling": b_ceil,
                },
            )
    return ComparisonReport(profile.observed_stable_at, b_ceil, note, consistent)
