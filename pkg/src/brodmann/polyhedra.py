"""Rational cones cut out by integer constraints, and their generators.

A ConstraintSystem is A*x >= b together with implicit x >= 0.  The module
computes extreme rays through signed cofactors of (e-1)-row subsystems,
certified star-norm bounds for semigroup and module generators (kept exact
as radicals, never floats), desk-scale Hilbert-basis and module-generator
enumeration with an explicit lattice-point budget, the specific constraint
systems used for power membership and closure membership of a monomial
ideal, and a bounded exhaustive feasibility search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .errors import BudgetError, InconsistencyError, InputError, charge_budget
from .monomials import MonomialIdeal, is_pure_power
from .radicals import ExactRadical, RadicalSum

IntVector = tuple[int, ...]

ED_MODES = ("ED1", "ED2", "ED3")


def norm_sq(v: IntVector) -> int:
    return sum(c * c for c in v)


def star_norm(v: IntVector) -> int:
    return max((abs(c) for c in v), default=0)


@dataclass(frozen=True)
class ConstraintSystem:
    """Integer constraints A*x >= b over e variables, all implicitly >= 0."""

    e: int
    rows: tuple[IntVector, ...]
    rhs: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.e < 1:
            raise InputError(f"variable count must be >= 1, got {self.e}")
        if len(self.rows) != len(self.rhs):
            raise InputError("row and right-hand-side counts differ")
        for row in self.rows:
            if len(row) != self.e:
                raise InputError(f"row {row} does not have {self.e} entries")
        if self.labels is not None and len(self.labels) != self.e:
            raise InputError(f"expected {self.e} labels, got {len(self.labels)}")

    def is_homogeneous(self) -> bool:
        return all(b == 0 for b in self.rhs)

    def homogenized(self) -> "ConstraintSystem":
        return ConstraintSystem(self.e, self.rows, (0,) * len(self.rows), self.labels)

    def satisfies(self, v: IntVector) -> bool:
        if len(v) != self.e or any(c < 0 for c in v):
            return False
        return all(
            sum(a * x for a, x in zip(row, v)) >= b
            for row, b in zip(self.rows, self.rhs)
        )

    def column(self, j: int) -> IntVector:
        return tuple(row[j] for row in self.rows)


def _det(mat: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free Gaussian elimination."""
    n = len(mat)
    if n == 0:
        return 1
    m = [list(row) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _primitive(v: IntVector) -> IntVector:
    g = 0
    for c in v:
        g = gcd(g, c)
    return tuple(c // g for c in v) if g else v


def extreme_rays(sys: ConstraintSystem, budget: int | None = None) -> list[IntVector]:
    """Extreme rays of the homogeneous cone, as primitive integer vectors.

    Each ray spans the null space of some e-1 rows chosen among the
    constraint rows and the coordinate hyperplanes; the null vector comes
    from signed cofactor determinants, is oriented into the nonnegative
    orthant, reduced to primitive form, and kept when it satisfies the whole
    system.
    """
    if not sys.is_homogeneous():
        raise InputError("extreme rays require a homogeneous system")
    e = sys.e
    candidates = list(sys.rows)
    for i in range(e):
        candidates.append(tuple(1 if j == i else 0 for j in range(e)))
    n = len(candidates)
    if e == 1:
        one = (1,)
        return [one] if sys.satisfies(one) else []
    charge_budget(comb(n, e - 1), budget, "ray subsystem enumeration")
    rays: set[IntVector] = set()
    for combo in itertools.combinations(range(n), e - 1):
        chosen = [candidates[i] for i in combo]
        u = []
        flip = 1
        for j in range(e):
            minor = [[row[c] for c in range(e) if c != j] for row in chosen]
            u.append(flip * _det(minor))
            flip = -flip
        if not any(u):
            continue
        if any(c > 0 for c in u) and any(c < 0 for c in u):
            continue
        if any(c < 0 for c in u):
            u = [-c for c in u]
        ray = _primitive(tuple(u))
        if sys.satisfies(ray):
            rays.add(ray)
    return sorted(rays)


def _column_norms(sys: ConstraintSystem) -> list[ExactRadical]:
    """Euclidean column norms, with all-zero columns counted as norm 1."""
    norms = []
    for j in range(sys.e):
        q = norm_sq(sys.column(j))
        norms.append(ExactRadical.sqrt_of(q) if q else ExactRadical.of_fraction(1))
    return norms


def bound_a1(sys: ConstraintSystem) -> ExactRadical:
    """Certified star-norm bound for semigroup generators of a homogeneous cone.

    e times the product of the e-1 largest column norms, exact.  The bound
    is valid in non-strict form; see the tests for where strictness holds.
    """
    if not sys.is_homogeneous():
        raise InputError("this bound applies to homogeneous systems")
    norms = sorted(_column_norms(sys), key=lambda x: x.square(), reverse=True)
    out = ExactRadical.of_fraction(sys.e)
    for x in norms[: sys.e - 1]:
        out = out * x
    return out


def bound_a2(sys: ConstraintSystem) -> RadicalSum:
    """Certified star-norm bound for module generators of an inhomogeneous system.

    (e + |b|) times the product of all e column norms, kept exact as a sum
    of at most two radical terms.
    """
    prod = ExactRadical.of_fraction(1)
    for x in _column_norms(sys):
        prod = prod * x
    b_norm = ExactRadical.sqrt_of(norm_sq(sys.rhs))
    return RadicalSum.of(prod * sys.e, prod * b_norm)


def _solutions_in_box(
    sys: ConstraintSystem, box: int, budget: int | None, what: str
) -> list[IntVector]:
    charge_budget((box + 1) ** sys.e, budget, what)
    sols = [
        v
        for v in itertools.product(range(box + 1), repeat=sys.e)
        if sys.satisfies(v)
    ]
    sols.sort(key=lambda v: (sum(v), v))
    return sols


def hilbert_generators(
    sys: ConstraintSystem, cap: int, budget: int | None = None
) -> list[IntVector]:
    """Irreducible nonzero solutions of a homogeneous system inside the box.

    The box is the smaller of cap and the certified bound ceiling.  A
    solution is irreducible when it is not the sum of two nonzero solutions
    in the box; the returned list generates every boxed solution.
    """
    if not sys.is_homogeneous():
        raise InputError("semigroup generators require a homogeneous system")
    if cap < 1:
        raise InputError(f"cap must be >= 1, got {cap}")
    box = min(cap, bound_a1(sys).ceil())
    sols = _solutions_in_box(sys, box, budget, "semigroup generator box")
    irreducible: list[IntVector] = []
    for v in sols:
        if not any(v):
            continue
        reducible = False
        for g in irreducible:
            if sum(g) >= sum(v):
                break
            if all(a <= b for a, b in zip(g, v)):
                rest = tuple(b - a for a, b in zip(g, v))
                if sys.satisfies(rest):
                    reducible = True
                    break
        if not reducible:
            irreducible.append(v)
    return irreducible


def module_generators(
    sys: ConstraintSystem, cap: int, budget: int | None = None
) -> list[IntVector]:
    """Boxed solutions not reachable as (solution) + (nonzero cone point).

    For b = 0 the zero vector alone generates.  Together with the
    homogenized system's semigroup generators, the result reaches every
    solution in the box.
    """
    if cap < 1:
        raise InputError(f"cap must be >= 1, got {cap}")
    if sys.is_homogeneous():
        return [(0,) * sys.e]
    box = min(cap, bound_a2(sys).ceil())
    esols = _solutions_in_box(sys, box, budget, "module generator box")
    cone = sys.homogenized()
    csols = [v for v in _solutions_in_box(cone, box, budget, "module generator cone box") if any(v)]
    gens: list[IntVector] = []
    for v in esols:
        reducible = False
        for w in csols:
            if all(a <= b for a, b in zip(w, v)):
                rest = tuple(b - a for a, b in zip(w, v))
                if sys.satisfies(rest):
                    reducible = True
                    break
        if not reducible:
            gens.append(v)
    return gens


def greedy_decompose(
    v: IntVector, gens: list[IntVector], sys: ConstraintSystem
) -> dict[IntVector, int]:
    """Write a cone point as a nonnegative combination of the given generators.

    Repeatedly subtracts any generator that keeps the remainder in the cone.
    Raises an inconsistency error if the point cannot be reduced to zero,
    which would disprove the generating property.
    """
    if not sys.is_homogeneous():
        raise InputError("greedy decomposition works in the homogeneous cone")
    if not sys.satisfies(v):
        raise InputError(f"{v} does not satisfy the system")
    remaining = v
    counts: dict[IntVector, int] = {}
    while any(remaining):
        for g in gens:
            if any(g) and all(a <= b for a, b in zip(g, remaining)):
                rest = tuple(b - a for a, b in zip(g, remaining))
                if sys.satisfies(rest):
                    counts[g] = counts.get(g, 0) + 1
                    remaining = rest
                    break
        else:
            raise InconsistencyError(
                "cone point resists greedy decomposition",
                payload={"point": list(v), "stuck_at": list(remaining)},
            )
    return counts


def decompose_module(
    v: IntVector,
    module_gens: list[IntVector],
    cone_gens: list[IntVector],
    sys: ConstraintSystem,
) -> tuple[IntVector, dict[IntVector, int]]:
    """Write a solution as one module generator plus a cone combination."""
    if not sys.satisfies(v):
        raise InputError(f"{v} does not satisfy the system")
    cone = sys.homogenized()
    for m in module_gens:
        if all(a <= b for a, b in zip(m, v)):
            rest = tuple(b - a for a, b in zip(m, v))
            if cone.satisfies(rest):
                try:
                    return m, greedy_decompose(rest, cone_gens, cone)
                except InconsistencyError:
                    continue
    raise InconsistencyError(
        "solution resists module decomposition", payload={"point": list(v)}
    )


@dataclass(frozen=True)
class ConeGenerators:
    """Extreme rays plus optional generator enumerations and the norm bound."""

    rays: tuple[IntVector, ...] | None
    hilbert: tuple[IntVector, ...] | None
    module_gens: tuple[IntVector, ...] | None
    bound_star: ExactRadical | RadicalSum


def analyze_cone(
    sys: ConstraintSystem,
    cap: int | None = None,
    with_rays: bool = True,
    with_hilbert: bool = False,
    with_module: bool = False,
    budget: int | None = None,
) -> ConeGenerators:
    homogeneous = sys.is_homogeneous()
    bound: ExactRadical | RadicalSum = bound_a1(sys) if homogeneous else bound_a2(sys)
    rays = None
    hilbert = None
    module = None
    if with_rays:
        if not homogeneous:
            raise InputError("extreme rays require a homogeneous system")
        rays = tuple(extreme_rays(sys, budget))
    if with_hilbert:
        if not homogeneous:
            raise InputError("semigroup generators require a homogeneous system")
        if cap is None:
            raise InputError("a cap is required to enumerate generators")
        hilbert = tuple(hilbert_generators(sys, cap, budget))
    if with_module:
        if homogeneous:
            module = ((0,) * sys.e,)
        else:
            if cap is None:
                raise InputError("a cap is required to enumerate generators")
            module = tuple(module_generators(sys, cap, budget))
    return ConeGenerators(rays, hilbert, module, bound)


def staircase_system(e: int, d: int) -> ConstraintSystem:
    """The chain of constraints d*x_k >= x_(k+1), whose cone has the ray
    (1, d, d^2, ..., d^(e-1))."""
    if e < 1 or d < 1:
        raise InputError("need e >= 1 and d >= 1")
    rows = []
    for k in range(e - 1):
        row = [0] * e
        row[k] = d
        row[k + 1] = -1
        rows.append(tuple(row))
    return ConstraintSystem(e, tuple(rows), (0,) * len(rows))


def designated_generator(I: MonomialIdeal) -> int:
    """Index (into I.generators) of the generator pinned as the last one.

    The chosen generator must have at least two nonzero exponents; among
    those, the one with the largest support wins, ties broken by canonical
    generator order.  Pure-power ideals have no qualifying generator.
    """
    if I.is_zero() or I.is_unit():
        raise InputError("a proper nonzero ideal is required")
    if is_pure_power(I):
        raise InputError(
            "every generator is a single-variable power; constraint systems "
            "are refused for these ideals because the associated-primes "
            "pure-power fast path answers directly"
        )
    best = None
    best_support = -1
    for idx, g in enumerate(I.generators):
        sup = sum(1 for e in g if e)
        if sup >= 2 and sup > best_support:
            best = idx
            best_support = sup
    assert best is not None
    return best


def _norm_assert(cond: bool, what: str, detail: dict) -> None:
    if not cond:
        raise InconsistencyError(f"column norm bookkeeping failed: {what}", payload=detail)


def build_system(I: MonomialIdeal, mode: str) -> ConstraintSystem:
    """Constraint system whose integer solutions encode membership questions.

    Mode ED1: solutions with z = n and y = b say that the monomial with
    exponent vector b lies in I^(n-1) and in the n-th power of every
    single-variable deletion of I.  Mode ED2 is its homogenization.  Mode
    ED3: solutions with z = n and y = b say that b's monomial lies in the
    closure union of colons of I^(n+m) by m-th generator powers.  The
    designated last generator and the variable layout are fixed and
    deterministic; squared column norms are asserted against their
    theoretical limits on every build.
    """
    mode = mode.upper()
    if mode not in ED_MODES:
        raise InputError(f"mode must be one of {ED_MODES}, got {mode!r}")
    last = designated_generator(I)
    gens = [g for i, g in enumerate(I.generators) if i != last]
    gens.append(I.generators[last])
    r = I.r
    s = len(gens)
    d = max(sum(g) for g in gens)
    a = gens  # a[k][j-1] = exponent of variable j in generator k+1
    a_s = gens[-1]

    rows: list[IntVector] = []
    rhs: list[int] = []

    if mode in ("ED1", "ED2"):
        e = r * s + s
        z = 0
        y = lambda j: 1 + (j - 1)
        x1 = lambda k: 1 + r + (k - 1)
        x2 = lambda i, k: 1 + r + (s - 1) + (i - 1) * (s - 1) + (k - 1)
        labels = (
            ["z"]
            + [f"y{j}" for j in range(1, r + 1)]
            + [f"x{k}" for k in range(1, s)]
            + [f"x{i}_{k}" for i in range(1, r + 1) for k in range(1, s)]
        )
        for j in range(1, r + 1):
            row = [0] * e
            row[z] = -a_s[j - 1]
            row[y(j)] = 1
            for k in range(1, s):
                row[x1(k)] = a_s[j - 1] - a[k - 1][j - 1]
            rows.append(tuple(row))
            rhs.append(-a_s[j - 1])
        row = [0] * e
        row[z] = 1
        for k in range(1, s):
            row[x1(k)] = -1
        rows.append(tuple(row))
        rhs.append(1)
        for i in range(1, r + 1):
            for j in range(1, r + 1):
                if j == i:
                    continue
                row = [0] * e
                row[z] = -a_s[j - 1]
                row[y(j)] = 1
                for k in range(1, s):
                    row[x2(i, k)] = a_s[j - 1] - a[k - 1][j - 1]
                rows.append(tuple(row))
                rhs.append(0)
        for i in range(1, r + 1):
            row = [0] * e
            row[z] = 1
            for k in range(1, s):
                row[x2(i, k)] = -1
            rows.append(tuple(row))
            rhs.append(0)
        if mode == "ED2":
            rhs = [0] * len(rhs)
        sys = ConstraintSystem(e, tuple(rows), tuple(rhs), tuple(labels))
        detail = {"mode": mode, "r": r, "s": s, "d": d}
        _norm_assert(norm_sq(sys.column(z)) < r * d * d, "z column", detail)
        for j in range(1, r + 1):
            _norm_assert(norm_sq(sys.column(y(j))) == r, f"y{j} column", detail)
        for k in range(1, s):
            _norm_assert(norm_sq(sys.column(x1(k))) < 2 * d * d, f"x{k} column", detail)
        for i in range(1, r + 1):
            for k in range(1, s):
                _norm_assert(
                    norm_sq(sys.column(x2(i, k))) < 2 * d * d, f"x{i}_{k} column", detail
                )
        if mode == "ED1":
            _norm_assert(norm_sq(tuple(rhs)) < d * d, "free coefficients", detail)
        return sys

    e = s * (s - 1) + r + 2
    z = 0
    w = 1
    y = lambda j: 2 + (j - 1)
    x2 = lambda i, k: 2 + r + (i - 1) * (s - 1) + (k - 1)
    labels = (
        ["z", "x"]
        + [f"y{j}" for j in range(1, r + 1)]
        + [f"x{i}_{k}" for i in range(1, s + 1) for k in range(1, s)]
    )
    for i in range(1, s + 1):
        for j in range(1, r + 1):
            row = [0] * e
            row[z] = -a_s[j - 1]
            row[w] = a[i - 1][j - 1] - a_s[j - 1]
            row[y(j)] = 1
            for k in range(1, s):
                row[x2(i, k)] = a_s[j - 1] - a[k - 1][j - 1]
            rows.append(tuple(row))
            rhs.append(0)
        row = [0] * e
        row[z] = 1
        row[w] = 1
        for k in range(1, s):
            row[x2(i, k)] = -1
        rows.append(tuple(row))
        rhs.append(0)
    sys = ConstraintSystem(e, tuple(rows), tuple(rhs), tuple(labels))
    detail = {"mode": mode, "r": r, "s": s, "d": d}
    _norm_assert(norm_sq(sys.column(z)) < s * d * d, "z column", detail)
    _norm_assert(norm_sq(sys.column(w)) < 2 * s * d * d, "x column", detail)
    for j in range(1, r + 1):
        _norm_assert(norm_sq(sys.column(y(j))) == s, f"y{j} column", detail)
    for i in range(1, s + 1):
        for k in range(1, s):
            _norm_assert(
                norm_sq(sys.column(x2(i, k))) < 2 * d * d, f"x{i}_{k} column", detail
            )
    return sys


def solve_feasible(
    sys: ConstraintSystem,
    fixed: dict[str | int, int],
    box: int,
    budget: int | None = None,
) -> IntVector | None:
    """First integer solution with the fixed coordinates, or None.

    Fixed keys are variable labels (when the system has labels) or 0-based
    indices.  The unfixed coordinates range over 0..box exhaustively; the
    search is refused upfront when the lattice box exceeds the budget.
    """
    if box < 0:
        raise InputError(f"box must be >= 0, got {box}")
    assignment: dict[int, int] = {}
    for key, value in fixed.items():
        if isinstance(key, str):
            if not sys.labels or key not in sys.labels:
                raise InputError(f"unknown variable label {key!r}")
            idx = sys.labels.index(key)
        else:
            idx = key
        if not 0 <= idx < sys.e:
            raise InputError(f"variable index {idx} out of range")
        if not isinstance(value, int) or value < 0:
            raise InputError(f"fixed value for index {idx} must be a nonnegative integer")
        if idx in assignment and assignment[idx] != value:
            raise InputError(f"conflicting assignments for variable index {idx}")
        assignment[idx] = value
    free = [i for i in range(sys.e) if i not in assignment]
    charge_budget((box + 1) ** len(free), budget, "feasibility search")
    template = [assignment.get(i, 0) for i in range(sys.e)]
    for combo in itertools.product(range(box + 1), repeat=len(free)):
        v = list(template)
        for idx, val in zip(free, combo):
            v[idx] = val
        tv = tuple(v)
        if sys.satisfies(tv):
            return tv
    return None
