"""Associated primes of monomial ideal powers by two independent routes.

Every associated prime of a monomial ideal is generated by a subset of the
variables, so primes are plain tuples of 1-based variable indices.  The
quotient route finds each prime of R/J as an explicit colon witness inside
a finite exponent box.  The recursion route peels off one variable at a
time, testing separately whether the full-support prime occurs; the two
must agree, and the profile driver can cross-check them against each other.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import InconsistencyError, InputError
from .monomials import (
    BoxTable,
    MonomialIdeal,
    Monomial,
    _zero_coords,
    delete_variable,
    is_pure_power,
    iter_box,
    max_exponents,
    minimize,
    power,
    used_variables,
)

VariablePrime = tuple[int, ...]

METHODS = ("quotient", "recursion", "both")


def full_support_prime(r: int) -> VariablePrime:
    return tuple(range(1, r + 1))


def _require_proper_nonzero(I: MonomialIdeal) -> None:
    if I.is_zero() or I.is_unit():
        raise InputError("a proper nonzero ideal is required")


def ass_witnesses(
    J: MonomialIdeal, budget: int | None = None
) -> dict[VariablePrime, Monomial]:
    """One explicit witness monomial per associated prime of R/J.

    A monomial m witnesses the prime on support P exactly when m is outside
    J, multiplying m by any variable of P lands in J, and the restriction of
    m to P is outside the restriction of J to P (so no monomial supported
    off P can push m into J).  Witnesses are scanned over the box bounded
    componentwise by the maximum generator exponents; a clamping argument
    shows every prime has a witness there.
    """
    _require_proper_nonzero(J)
    r = J.r
    caps = max_exponents(J)
    table = BoxTable(J.generators, tuple(c + 1 for c in caps), budget)
    masked: dict[frozenset[int], MonomialIdeal] = {}
    masked_tables: dict[frozenset[int], BoxTable] = {}
    found: dict[VariablePrime, Monomial] = {}
    for m in iter_box(caps):
        if table[m]:
            continue
        prime = tuple(
            i + 1
            for i in range(r)
            if table[tuple(e + 1 if k == i else e for k, e in enumerate(m))]
        )
        if not prime or prime in found:
            continue
        off_support = frozenset(i for i in range(r) if (i + 1) not in prime)
        if off_support not in masked_tables:
            restricted = _zero_coords(J, off_support)
            masked[off_support] = restricted
            masked_tables[off_support] = BoxTable(
                restricted.generators, tuple(c + 1 for c in caps), budget
            )
        m_restricted = tuple(0 if i in off_support else e for i, e in enumerate(m))
        if masked_tables[off_support][m_restricted]:
            continue
        found[prime] = m
    return found


def ass_of_quotient(
    J: MonomialIdeal, budget: int | None = None
) -> frozenset[VariablePrime]:
    """Associated primes of R/J for a proper nonzero monomial ideal J."""
    return frozenset(ass_witnesses(J, budget))


def max_ideal_in_ass(I: MonomialIdeal, n: int, budget: int | None = None) -> bool:
    """Whether the full-support prime is associated to I^n/I^(n+1).

    Decided by the torsion criterion: I^n intersected with the (n+1)-st
    powers of all single-variable deletions must exceed I^(n+1).  Evaluated
    pointwise over a finite box instead of through ideal intersections.  In
    one variable the answer is False by convention, and any unused variable
    forces False (its deletion leaves I unchanged, collapsing the numerator).
    """
    _require_proper_nonzero(I)
    if n < 0:
        raise InputError(f"power index must be >= 0, got {n}")
    r = I.r
    if r == 1:
        return False
    if len(used_variables(I)) < r:
        return False
    i_n = power(I, n)
    i_n1 = power(I, n + 1)
    deletions = [power(delete_variable(I, i), n + 1) for i in range(1, r + 1)]
    bounds = list(max_exponents(i_n1))
    for other in [i_n, *deletions]:
        for j, e in enumerate(max_exponents(other)):
            if e > bounds[j]:
                bounds[j] = e
    box = tuple(bounds)
    upper = BoxTable(i_n.generators, box, budget)
    lower = BoxTable(i_n1.generators, box, budget)
    del_tables = [BoxTable(D.generators, box, budget) for D in deletions]
    for v in iter_box(box):
        if upper[v] and not lower[v] and all(t[v] for t in del_tables):
            return True
    return False


def _compress(I: MonomialIdeal, used: tuple[int, ...]) -> MonomialIdeal:
    """Rewrite I in the subring on its used variables (1-based index list)."""
    cols = [u - 1 for u in used]
    return minimize((tuple(g[c] for c in cols) for g in I.generators), len(cols))


def _ass_recursive(
    I: MonomialIdeal,
    n: int,
    budget: int | None,
    memo: dict[tuple[MonomialIdeal, int], frozenset[VariablePrime]],
) -> frozenset[VariablePrime]:
    if I.is_zero() or I.is_unit():
        return frozenset()
    key = (I, n)
    if key in memo:
        return memo[key]
    if is_pure_power(I):
        result = frozenset({tuple(sorted(set(used_variables(I))))})
        memo[key] = result
        return result
    used = used_variables(I)
    if len(used) < I.r:
        inner = _ass_recursive(_compress(I, used), n, budget, memo)
        result = frozenset(
            tuple(used[i - 1] for i in prime) for prime in inner
        )
        memo[key] = result
        return result
    # every variable occurs and I is not pure-power, so r >= 2 here
    primes: set[VariablePrime] = set()
    for i in range(1, I.r + 1):
        primes |= _ass_recursive(delete_variable(I, i), n, budget, memo)
    if max_ideal_in_ass(I, n, budget):
        primes.add(full_support_prime(I.r))
    result = frozenset(primes)
    memo[key] = result
    return result


def ass_power(
    I: MonomialIdeal,
    n: int,
    method: str = "quotient",
    budget: int | None = None,
) -> frozenset[VariablePrime]:
    """Associated primes of I^n/I^(n+1), n >= 0 (so n=0 covers R/I).

    The index convention: ass_power(I, n) is Ass(I^n/I^(n+1)), equal to the
    associated primes of R/I^(n+1).  method "both" runs the quotient and
    recursion routes and raises an inconsistency error if they disagree.
    """
    _require_proper_nonzero(I)
    if n < 0:
        raise InputError(f"power index must be >= 0, got {n}")
    if method not in METHODS:
        raise InputError(f"method must be one of {METHODS}, got {method!r}")
    if method == "quotient":
        return ass_of_quotient(power(I, n + 1), budget)
    if method == "recursion":
        return _ass_recursive(I, n, budget, {})
    via_quotient = ass_of_quotient(power(I, n + 1), budget)
    via_recursion = _ass_recursive(I, n, budget, {})
    if via_quotient != via_recursion:
        raise InconsistencyError(
            f"associated-prime methods disagree at n={n}",
            payload={
                "n": n,
                "quotient": sorted(via_quotient),
                "recursion": sorted(via_recursion),
            },
        )
    return via_quotient


@dataclass(frozen=True)
class AssProfile:
    """Ass(I^n/I^(n+1)) for n = 0..n_max with stabilization bookkeeping.

    observed_stable_at is the smallest n0 whose tail of entries is constant,
    requiring at least two equal entries as evidence; None when the last two
    entries already differ.  non_monotone_at lists every n where consecutive
    entries are incomparable as sets.
    """

    ideal: MonomialIdeal
    n_max: int
    entries: tuple[frozenset[VariablePrime], ...]
    observed_stable_at: int | None
    non_monotone_at: tuple[int, ...]
    method: str


def _profile_entry(args: tuple) -> tuple[int, frozenset[VariablePrime]]:
    I, n, method, budget = args
    return n, ass_power(I, n, method, budget)


def ass_profile(
    I: MonomialIdeal,
    n_max: int,
    method: str = "quotient",
    jobs: int = 1,
    budget: int | None = None,
) -> AssProfile:
    """Profile of Ass(I^n/I^(n+1)) over n = 0..n_max."""
    _require_proper_nonzero(I)
    if n_max < 1:
        raise InputError(f"scan bound must be >= 1, got {n_max}")
    if jobs < 1:
        raise InputError(f"parallelism degree must be >= 1, got {jobs}")
    tasks = [(I, n, method, budget) for n in range(n_max + 1)]
    if jobs == 1 or len(tasks) == 1:
        results = [_profile_entry(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_profile_entry, tasks))
    entries = tuple(e for _, e in sorted(results))
    stable_at: int | None = n_max
    while stable_at > 0 and entries[stable_at - 1] == entries[n_max]:
        stable_at -= 1
    if stable_at == n_max:
        stable_at = None
    non_monotone = tuple(
        n
        for n in range(n_max)
        if not entries[n] <= entries[n + 1] and not entries[n] >= entries[n + 1]
    )
    return AssProfile(I, n_max, entries, stable_at, non_monotone, method)
