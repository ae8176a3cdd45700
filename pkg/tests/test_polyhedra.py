import random
from fractions import Fraction

import pytest

from brodmann.errors import BudgetError, InconsistencyError, InputError
from brodmann.monomials import contains, intersect_all, minimize, power
from brodmann.polyhedra import (
    ConstraintSystem,
    _det,
    bound_a1,
    bound_a2,
    build_system,
    decompose_module,
    designated_generator,
    extreme_rays,
    greedy_decompose,
    hilbert_generators,
    module_generators,
    norm_sq,
    solve_feasible,
    staircase_system,
    star_norm,
)
from brodmann.radicals import ExactRadical, RadicalSum

from oracles import in_nonneg_span, solve_nonneg


def ideal(r, *gens):
    return minimize(gens, r)


def orthant(e):
    return ConstraintSystem(e, (), ())


def gauss_det(rows):
    n = len(rows)
    A = [[Fraction(x) for x in row] for row in rows]
    sign = 1
    for col in range(n):
        sel = next((i for i in range(col, n) if A[i][col]), None)
        if sel is None:
            return Fraction(0)
        if sel != col:
            A[col], A[sel] = A[sel], A[col]
            sign = -sign
        for i in range(col + 1, n):
            f = A[i][col] / A[col][col]
            A[i] = [x - f * y for x, y in zip(A[i], A[col])]
    out = Fraction(sign)
    for i in range(n):
        out *= A[i][i]
    return out


class TestConstraintSystem:
    def test_validation(self):
        with pytest.raises(InputError):
            ConstraintSystem(0, (), ())
        with pytest.raises(InputError):
            ConstraintSystem(2, ((1,),), (0,))
        with pytest.raises(InputError):
            ConstraintSystem(2, ((1, 0),), ())
        with pytest.raises(InputError):
            ConstraintSystem(2, ((1, 0),), (0,), ("only_one",))

    def test_homogeneous_and_homogenized(self):
        sys_ = ConstraintSystem(2, ((1, -1),), (1,))
        assert not sys_.is_homogeneous()
        h = sys_.homogenized()
        assert h.is_homogeneous()
        assert h.rows == sys_.rows

    def test_satisfies(self):
        sys_ = ConstraintSystem(2, ((2, -1),), (0,))
        assert sys_.satisfies((1, 2))
        assert not sys_.satisfies((1, 3))
        assert not sys_.satisfies((-1, 0))

    def test_norms(self):
        assert norm_sq((3, -4)) == 25
        assert star_norm((3, -4)) == 4
        assert star_norm((0, 0)) == 0


class TestDeterminant:
    def test_matches_gaussian_elimination(self):
        rng = random.Random(1001)
        for _ in range(40):
            n = rng.randint(1, 5)
            rows = tuple(
                tuple(rng.randint(-5, 5) for _ in range(n)) for _ in range(n)
            )
            assert _det(rows) == gauss_det(rows), rows

    def test_singular(self):
        assert _det(((1, 2), (2, 4))) == 0


class TestExtremeRays:
    def test_staircase_rays(self):
        assert extreme_rays(staircase_system(2, 2)) == [(1, 0), (1, 2)]
        assert extreme_rays(staircase_system(3, 2)) == [
            (1, 0, 0),
            (1, 2, 0),
            (1, 2, 4),
        ]
        assert (1, 3, 9) in extreme_rays(staircase_system(3, 3))

    def test_orthant_rays_are_units(self):
        assert extreme_rays(orthant(3)) == [
            (0, 0, 1),
            (0, 1, 0),
            (1, 0, 0),
        ]

    def test_single_variable(self):
        assert extreme_rays(ConstraintSystem(1, ((1,),), (0,))) == [(1,)]
        assert extreme_rays(ConstraintSystem(1, ((-1,),), (0,))) == []

    def test_requires_homogeneous(self):
        with pytest.raises(InputError):
            extreme_rays(ConstraintSystem(2, ((1, 0),), (1,)))

    def test_rays_are_primitive_and_feasible(self):
        rng = random.Random(1002)
        for _ in range(25):
            e = rng.randint(2, 4)
            k = rng.randint(1, 3)
            rows = tuple(
                tuple(rng.randint(-3, 3) for _ in range(e)) for _ in range(k)
            )
            sys_ = ConstraintSystem(e, rows, (0,) * k)
            rays = extreme_rays(sys_)
            from math import gcd
            for v in rays:
                assert sys_.satisfies(v)
                assert gcd(*v) == 1 if len(v) > 1 else v[0] == 1

    def test_rays_span_all_boxed_cone_points(self):
        rng = random.Random(1003)
        for _ in range(15):
            e = rng.randint(2, 3)
            k = rng.randint(1, 3)
            rows = tuple(
                tuple(rng.randint(-3, 3) for _ in range(e)) for _ in range(k)
            )
            sys_ = ConstraintSystem(e, rows, (0,) * k)
            rays = extreme_rays(sys_)
            from itertools import product as iproduct
            for v in iproduct(range(4), repeat=e):
                if sys_.satisfies(v):
                    assert in_nonneg_span(v, rays), (rows, v)

    def test_budget_refusal(self):
        rows = tuple(
            tuple((i * 7 + j * 3) % 5 - 2 for j in range(8)) for i in range(20)
        )
        sys_ = ConstraintSystem(8, rows, (0,) * 20)
        with pytest.raises(BudgetError):
            extreme_rays(sys_, budget=10)


class TestNormBounds:
    def test_a1_oracles(self):
        assert bound_a1(staircase_system(2, 2)) == 4
        assert bound_a1(orthant(2)) == 2
        assert bound_a1(ConstraintSystem(1, (), ())) == 1
        # e = 3 staircase d = 2: columns (2,0), (-1,2), (0,-1);
        # the two largest squared norms are 5 and 4, so the bound is 6*sqrt(5)
        v = bound_a1(staircase_system(3, 2))
        assert v == ExactRadical(Fraction(6), 5)
        assert v.ceil() == 14

    def test_a2_oracles(self):
        one = ConstraintSystem(1, ((1,),), (1,))
        assert bound_a2(one) == 2
        plane = ConstraintSystem(2, ((1, 0), (0, 1)), (1, 1))
        v = bound_a2(plane)
        assert v == RadicalSum.of(2, ExactRadical.sqrt_of(2))
        assert v.ceil() == 4

    def test_a2_homogeneous_collapses_to_e_times_product(self):
        # columns (1,1) and (-1,0) have norms sqrt(2) and 1, rhs is zero
        sys_ = ConstraintSystem(2, ((1, -1), (1, 0)), (0, 0))
        assert bound_a2(sys_) == RadicalSum.of(ExactRadical(Fraction(2), 2))


class TestHilbertGenerators:
    def test_staircase_oracles(self):
        assert hilbert_generators(staircase_system(2, 2), cap=4) == [
            (1, 0),
            (1, 1),
            (1, 2),
        ]
        gens = hilbert_generators(staircase_system(3, 2), cap=4)
        assert (1, 2, 4) in gens
        assert len(gens) == 9

    def test_orthant_units(self):
        assert hilbert_generators(orthant(2), cap=3) == [(0, 1), (1, 0)]

    def test_generators_obey_star_norm_bound(self):
        rng = random.Random(1004)
        for _ in range(15):
            e = rng.randint(2, 3)
            k = rng.randint(1, 2)
            rows = tuple(
                tuple(rng.randint(-3, 3) for _ in range(e)) for _ in range(k)
            )
            sys_ = ConstraintSystem(e, rows, (0,) * k)
            a1 = bound_a1(sys_)
            for v in hilbert_generators(sys_, cap=6):
                assert a1 >= star_norm(v), (rows, v)

    def test_every_boxed_solution_decomposes(self):
        sys_ = staircase_system(2, 3)
        gens = hilbert_generators(sys_, cap=9)
        from itertools import product as iproduct
        for v in iproduct(range(7), repeat=2):
            if not sys_.satisfies(v) or not any(v):
                continue
            counts = greedy_decompose(v, gens, sys_)
            total = (0, 0)
            for g, c in counts.items():
                total = tuple(a + c * b for a, b in zip(total, g))
            assert total == v

    def test_requires_homogeneous_and_cap(self):
        inhom = ConstraintSystem(2, ((1, 0),), (1,))
        with pytest.raises(InputError):
            hilbert_generators(inhom, cap=3)
        with pytest.raises(InputError):
            hilbert_generators(orthant(2), cap=0)


class TestModuleGenerators:
    def test_halfline(self):
        sys_ = ConstraintSystem(1, ((1,),), (1,))
        assert module_generators(sys_, cap=5) == [(1,)]

    def test_homogeneous_gives_origin(self):
        assert module_generators(staircase_system(2, 2), cap=3) == [(0, 0)]

    def test_slanted_halfplane(self):
        sys_ = ConstraintSystem(2, ((2, -1),), (1,))
        assert module_generators(sys_, cap=4) == [(1, 0), (1, 1)]

    def test_decompose_module(self):
        sys_ = ConstraintSystem(2, ((2, -1),), (1,))
        mgens = module_generators(sys_, cap=4)
        cone = hilbert_generators(sys_.homogenized(), cap=4)
        base, counts = decompose_module((3, 2), mgens, cone, sys_)
        total = base
        for g, c in counts.items():
            total = tuple(a + c * b for a, b in zip(total, g))
        assert total == (3, 2)
        assert base in mgens

    def test_greedy_dead_end_is_inconsistency(self):
        with pytest.raises(InconsistencyError) as info:
            greedy_decompose((2, 1), [(1, 1)], orthant(2))
        assert "stuck_at" in info.value.payload


class TestEDSystems:
    def test_ed1_layout_for_two_generator_ideal(self):
        I = ideal(2, (2, 0), (1, 1))
        sys_ = build_system(I, "ED1")
        assert sys_.e == 2 * 2 + 2
        assert sys_.labels[:3] == ("z", "y1", "y2")
        # designated generator is xy (largest support)
        assert designated_generator(I) == 1
        assert not sys_.is_homogeneous()

    def test_ed2_is_homogenized_ed1(self):
        I = ideal(2, (2, 0), (1, 1))
        ed1 = build_system(I, "ED1")
        ed2 = build_system(I, "ED2")
        assert ed2.rows == ed1.rows
        assert ed2.is_homogeneous()

    def test_ed3_variable_count(self):
        I = ideal(2, (2, 0), (1, 1))
        sys_ = build_system(I, "ED3")
        s = len(I.generators)
        assert sys_.e == s * (s - 1) + I.r + 2
        assert sys_.labels[:2] == ("z", "x")

    def test_variable_counts_on_family(self):
        I = minimize([(5, 0, 0), (4, 1, 0), (1, 4, 0), (0, 5, 0), (2, 3, 1)], 3)
        r, s = I.r, len(I.generators)
        assert build_system(I, "ED1").e == r * s + s
        assert build_system(I, "ED2").e == r * s + s
        assert build_system(I, "ED3").e == s * (s - 1) + r + 2

    def test_designated_generator_prefers_large_support(self):
        I = ideal(3, (2, 2, 0), (0, 0, 3), (1, 1, 1))
        assert I.generators[designated_generator(I)] == (1, 1, 1)

    def test_designated_generator_tie_takes_first(self):
        I = ideal(3, (2, 1, 0), (1, 0, 1), (0, 1, 1))
        assert designated_generator(I) == 0

    def test_pure_power_is_refused(self):
        with pytest.raises(InputError, match="fast path"):
            build_system(ideal(2, (3, 0)), "ED1")
        with pytest.raises(InputError):
            build_system(ideal(2, (2, 0), (0, 3)), "ED1")

    def test_unknown_mode(self):
        with pytest.raises(InputError):
            build_system(ideal(2, (1, 1), (2, 0)), "ED9")

    def test_ed1_feasibility_matches_membership(self):
        """Fixing z = n and y = b, ED1 is feasible exactly when t^b lies in
        I^(n-1) intersected with every single-variable localization power."""
        from brodmann.monomials import delete_variable

        I = ideal(2, (2, 0), (1, 1))
        sys_ = build_system(I, "ED1")
        for n in (1, 2):
            member = intersect_all(
                [power(delete_variable(I, j), n) for j in (1, 2)]
                + [power(I, n - 1)],
                2,
            )
            for b1 in range(5):
                for b2 in range(5):
                    fixed = {"z": n, "y1": b1, "y2": b2}
                    witness = solve_feasible(sys_, fixed, box=2 * n + 2)
                    assert (witness is not None) == contains(member, (b1, b2)), (
                        n,
                        (b1, b2),
                    )


class TestSolveFeasible:
    def test_membership_encoding_feasible(self):
        # multiplicities alpha with alpha1 + alpha2 = 2 and
        # 2 a1 + a2 <= 3, a2 <= 1 encode x^3 y in I^2 for I = (x^2, xy)
        sys_ = ConstraintSystem(
            2,
            ((1, 1), (-1, -1), (-2, -1), (0, -1)),
            (2, -2, -3, -1),
        )
        witness = solve_feasible(sys_, {}, box=2)
        assert witness is not None
        assert witness[0] == 1  # alpha_1 = 1 as in the hand computation

    def test_membership_encoding_infeasible(self):
        # same shape for x^2 y: no multiplicity split works
        sys_ = ConstraintSystem(
            2,
            ((1, 1), (-1, -1), (-2, -1), (0, -1)),
            (2, -2, -2, -1),
        )
        assert solve_feasible(sys_, {}, box=2) is None

    def test_trivial_monomial_in_homogeneous_system(self):
        I = ideal(2, (2, 0), (1, 1))
        ed2 = build_system(I, "ED2")
        fixed = {"z": 0, "y1": 0, "y2": 0}
        witness = solve_feasible(ed2, fixed, box=0)
        assert witness == (0,) * ed2.e

    def test_fix_validation(self):
        sys_ = ConstraintSystem(2, ((1, 0),), (0,), ("a", "b"))
        with pytest.raises(InputError):
            solve_feasible(sys_, {"c": 1}, box=2)
        with pytest.raises(InputError):
            solve_feasible(sys_, {5: 1}, box=2)
        with pytest.raises(InputError):
            solve_feasible(sys_, {"a": -1}, box=2)

    def test_index_keys_work_without_labels(self):
        sys_ = ConstraintSystem(2, ((1, -1),), (0,))
        witness = solve_feasible(sys_, {0: 3}, box=3)
        assert witness is not None and witness[0] == 3

    def test_budget_refusal(self):
        sys_ = orthant(8)
        with pytest.raises(BudgetError):
            solve_feasible(sys_, {}, box=30, budget=100)


class TestStaircase:
    def test_shape(self):
        sys_ = staircase_system(3, 2)
        assert sys_.e == 3
        assert sys_.rows == ((2, -1, 0), (0, 2, -1))
        assert sys_.is_homogeneous()
