import itertools
import random

import pytest
from hypothesis import assume, given, settings, strategies as st

import oracles
from weylflags import fforacle as ff
from weylflags.cosets import min_rep_perm


def perms(n):
    return map(tuple, itertools.permutations(range(1, n + 1)))


def rand_matrix(rng, n, p):
    return tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(n))


def rand_invertible(rng, n, p):
    while True:
        m = rand_matrix(rng, n, p)
        if ff.mat_rank(m, p) == n:
            return m


def rand_upper_invertible(rng, n, p):
    return tuple(
        tuple(
            rng.randrange(1, p) if i == j else (rng.randrange(p) if j > i else 0)
            for j in range(n)
        )
        for i in range(n)
    )


def test_fqmatrix_normalizes_mod_p():
    m = ff.FqMatrix(3, ((4, -1), (0, 5)))
    assert m.entries == ((1, 2), (0, 2))
    assert m.n == 2
    with pytest.raises(ValueError):
        ff.FqMatrix(4, ((1, 0), (0, 1)))
    with pytest.raises(ValueError):
        ff.FqMatrix(3, ((1, 0, 0), (0, 1, 0)))


def test_matrix_arithmetic_roundtrips():
    rng = random.Random(7)
    for p in (2, 3, 5):
        for n in (1, 2, 3, 4):
            for _ in range(20):
                m = rand_invertible(rng, n, p)
                inv = ff.mat_inv(m, p)
                assert ff.mat_mul(m, inv, p) == ff.mat_identity(n)
                assert ff.mat_mul(inv, m, p) == ff.mat_identity(n)
                assert ff.mat_rank(ff.rref(m, p), p) == n
    with pytest.raises(ValueError):
        ff.mat_inv(((1, 1), (1, 1)), 2)


def test_rref_is_canonical_under_row_operations():
    rng = random.Random(11)
    p, n = 3, 3
    for _ in range(25):
        m = rand_matrix(rng, n, p)
        g = rand_invertible(rng, n, p)
        assert ff.rref(ff.mat_mul(g, m, p), p) == ff.rref(m, p)


def test_perm_matrix_convention_and_homomorphism():
    # entry (i, j) of the matrix of w is 1 iff i = w(j)
    w = (2, 3, 1)
    rows = ff.perm_rows(w)
    for i in range(1, 4):
        for j in range(1, 4):
            assert rows[i - 1][j - 1] == (1 if i == w[j - 1] else 0)
    for u in perms(3):
        for v in perms(3):
            lhs = ff.perm_rows(oracles.compose(u, v))
            rhs = ff.mat_mul(ff.perm_rows(u), ff.perm_rows(v), 5)
            assert lhs == rhs


def test_cell_free_positions_count_is_length():
    for n in (2, 3, 4):
        for w in perms(n):
            free = ff.cell_free_positions(w)
            assert len(free) == oracles.inversion_count(w)
            assert len(set(free)) == len(free)


def test_bruhat_cell_of_permutation_matrices():
    for n in (2, 3, 4):
        for w in perms(n):
            assert ff.bruhat_cell_of(ff.perm_matrix(w, 2)) == w


def test_bruhat_cell_is_borel_biinvariant():
    rng = random.Random(13)
    p, n = 3, 3
    for w in perms(n):
        for _ in range(8):
            b1 = rand_upper_invertible(rng, n, p)
            b2 = rand_upper_invertible(rng, n, p)
            g = ff.mat_mul(b1, ff.mat_mul(ff.perm_rows(w), b2, p), p)
            assert ff.bruhat_cell_of(ff.FqMatrix(p, g)) == w


def test_bruhat_cell_rejects_singular():
    with pytest.raises(ValueError):
        ff.bruhat_cell_of(ff.FqMatrix(3, ((1, 1), (2, 2))))


def test_flag_enumeration_counts():
    for n, p in ((2, 2), (2, 5), (3, 2), (3, 3)):
        flags = ff.enumerate_flags(n, p)
        assert len(flags) == oracles.q_factorial(n, p)
        per_cell = {}
        for point in flags:
            per_cell[point.cell] = per_cell.get(point.cell, 0) + 1
        for w in perms(n):
            assert per_cell[w] == p ** oracles.inversion_count(w)
        keys = {ff.flag_key(point.canonical_matrix) for point in flags}
        assert len(keys) == len(flags)


def test_partial_flag_enumeration_counts():
    for blocks, p in (((2, 1), 2), ((2, 1), 3), ((1, 1, 2), 2), ((2, 2), 3)):
        n = sum(blocks)
        partial = ff.enumerate_partial_flags(n, p, blocks)
        expected = oracles.gl_order(n, p) // oracles.parabolic_order(blocks, p)
        assert len(partial) == expected
        keys = {ff.partial_flag_key(g, blocks) for g in partial}
        assert len(keys) == expected


def test_point_count_identity_pinned():
    assert ff.point_count_identity(3, 2)["enumerated"] == 21
    report = ff.point_count_identity(3, 3)
    assert report["enumerated"] == 52
    assert report["pass"] is True
    assert report["cell_sum"] == report["q_factorial"] == report["group_quotient"] == 52


def test_incidence_classics():
    p = 3
    zero = ff.FqMatrix(p, ((0, 0, 0), (0, 0, 0), (0, 0, 0)))
    assert ff.incidence_count(zero, "in_b", "full_flag").count == oracles.q_factorial(3, p)
    # regular semisimple: exactly |W| stable flags
    reg = ff.FqMatrix(p, ((0, 0, 0), (0, 1, 0), (0, 0, 2)))
    report = ff.incidence_count(reg, "in_b", "full_flag")
    assert report.count == 6
    assert [c for c, k in report.by_cell for _ in range(k)] == [
        w for w in sorted(perms(3), key=lambda w: (oracles.inversion_count(w), w))
    ]
    # regular nilpotent: a single stable flag
    shift = ff.FqMatrix(p, ((0, 1, 0), (0, 0, 1), (0, 0, 0)))
    assert ff.incidence_count(shift, "in_b", "full_flag").count == 1
    # nonzero semisimple is never nilpotent
    reg2 = ff.FqMatrix(3, ((0, 0), (0, 1)))
    assert ff.incidence_count(reg2, "in_u", "full_flag").count == 0


def test_incidence_partial_flag_matches_covering_degree():
    nu = ff.FqMatrix(5, ((0, 0, 0), (0, 1, 0), (0, 0, 2)))
    report = ff.incidence_count(nu, "in_p", "partial_flag", blocks=(2, 1))
    assert report.count == 3
    report_b = ff.incidence_count(nu, "in_p", "partial_flag", blocks=(1, 1, 1))
    assert report_b.count == 6


def test_incidence_validates_inputs():
    nu = ff.FqMatrix(3, ((0, 0), (0, 1)))
    with pytest.raises(ValueError):
        ff.incidence_count(nu, "in_q", "full_flag")
    with pytest.raises(ValueError):
        ff.incidence_count(nu, "in_b", "orbit_space")
    with pytest.raises(ValueError):
        ff.incidence_count(nu, "in_p", "partial_flag")


def test_relative_position_pair_pinned_and_invariant():
    rng = random.Random(17)
    p, n, blocks = 3, 3, (2, 1)
    ident = ff.FqMatrix(p, ff.mat_identity(n))
    for w in perms(n):
        pos = ff.relative_position_pair(ident, ff.perm_matrix(w, p), blocks)
        assert pos == min_rep_perm(w, blocks)
    for _ in range(10):
        g1 = ff.FqMatrix(p, rand_invertible(rng, n, p))
        g2 = ff.FqMatrix(p, rand_invertible(rng, n, p))
        base = ff.relative_position_pair(g1, g2, blocks)
        b = rand_upper_invertible(rng, n, p)
        moved = ff.FqMatrix(p, ff.mat_mul(g1.entries, b, p))
        assert ff.relative_position_pair(moved, g2, blocks) == base


def test_charpoly_against_closed_forms():
    # 2x2: X^2 - tr X + det
    p = 3
    for flat in itertools.product(range(p), repeat=4):
        m = ((flat[0], flat[1]), (flat[2], flat[3]))
        tr = (flat[0] + flat[3]) % p
        det = (flat[0] * flat[3] - flat[1] * flat[2]) % p
        assert ff.charpoly(m, p) == (det, (-tr) % p, 1)
    # triangular: product of (X - d_i)
    m3 = ((1, 4, 0), (0, 2, 2), (0, 0, 1))
    expected = (1,)
    for d in (1, 2, 1):
        expected = ff._poly_mul(expected, ((-d) % 5, 1), 5)
    assert ff.charpoly(m3, 5) == expected


def test_fiber_dimension_small_cases():
    for blocks in ((1, 1), (2,)):
        for w in perms(2):
            if w != min_rep_perm(w, blocks):
                with pytest.raises(ValueError):
                    ff.fiber_dimension_check(w, blocks, 3)
                continue
            report = ff.fiber_dimension_check(w, blocks, 3)
            assert report.passed, (blocks, w, report)
            assert report.expected == 3 ** (3 - oracles.inversion_count(w))
            assert report.pairs > 0


def test_weight_map_small_case():
    assert ff.weight_map_check((1, 1), (1, 2), 3)
    assert ff.weight_map_check((2,), (1, 2), 2)
    with pytest.raises(ValueError):
        ff.weight_map_check((2,), (2, 1), 3)


def test_blowup_equation():
    assert ff.blowup_equation_check(3)
    assert ff.blowup_equation_check(5)
    with pytest.raises(ValueError):
        ff.blowup_equation_check(2)


def test_good_form_worked_example():
    b, v = ff.good_form_conjugate([[1, 5], [0, 2]])
    assert v == ((1, 0), (0, 2))
    assert b == ((1, 5), (0, 1))


def test_good_form_random_rational_and_modular():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(1, 4)
        diag = [rng.randint(0, 2) for _ in range(n)]
        rows = [
            [diag[i] if i == j else (rng.randint(-5, 5) if j > i else 0) for j in range(n)]
            for i in range(n)
        ]
        _, v = ff.good_form_conjugate(rows)
        for i in range(n):
            for j in range(n):
                if diag[i] != diag[j]:
                    assert v[i][j] == 0
        m = ff.FqMatrix(5, tuple(tuple(x % 5 for x in row) for row in rows))
        _, vp = ff.good_form_conjugate(m)
        for i in range(n):
            for j in range(n):
                if m.entries[i][i] != m.entries[j][j]:
                    assert vp.entries[i][j] == 0


def test_good_form_rejects_bad_input():
    with pytest.raises(ValueError):
        ff.good_form_conjugate([[1, 0], [1, 2]])
    with pytest.raises(ValueError):
        ff.good_form_conjugate([[1, 0], [0, 2]], p=5)
    with pytest.raises(ValueError):
        ff.good_form_conjugate(ff.FqMatrix(5, ((1, 0), (0, 2))), p=3)


def test_shortest_element_fq_sweep_n2():
    for p in (2, 3, 5):
        for blocks in ((1, 1), (2,)):
            for w in perms(2):
                assert ff.shortest_element_fq_check(w, blocks, p), (w, blocks, p)


def test_shortest_element_fq_spot_n3():
    assert ff.shortest_element_fq_check((2, 3, 1), (2, 1), 2)
    assert ff.shortest_element_fq_check((2, 1, 3), (2, 1), 2)
    assert ff.shortest_element_fq_check((3, 1, 2), (1, 2), 2)


def test_covering_degree_pinned():
    assert ff.covering_degree_check((2, 1), 3) == {
        "expected": 3,
        "observed": 3,
        "pass": True,
    }
    assert ff.covering_degree_check((1, 1, 1), 5)["observed"] == 6
    with pytest.raises(ValueError):
        ff.covering_degree_check((2, 1), 2)


def test_check_bounds_caps():
    ff.check_bounds(3, 7)
    ff.check_bounds(4, 3)
    with pytest.raises(ValueError):
        ff.check_bounds(5, 2)
    with pytest.raises(ValueError):
        ff.check_bounds(3, 11)
    with pytest.raises(ValueError):
        ff.check_bounds(3, 4)
    with pytest.raises(ValueError):
        ff.check_bounds(4, 5)


def test_check_bounds_env_override(monkeypatch):
    monkeypatch.setenv(ff.ENV_MAX_N, "5")
    with pytest.warns(UserWarning):
        ff.check_bounds(5, 2)
    monkeypatch.setenv(ff.ENV_MAX_P, "11")
    with pytest.warns(UserWarning):
        ff.check_bounds(2, 11)


def test_run_suite_all_green_small():
    rows = ff.run_suite(2, 3)
    assert rows
    assert all(row["pass"] for row in rows)
    assert not any(row.get("skipped") for row in rows)
    names = {row["check"] for row in rows}
    assert names == set(ff.SUITE_CHECKS)


def test_run_suite_skips_when_preconditions_fail():
    rows = ff.run_suite(2, 2)
    blowup_rows = [r for r in rows if r["check"] == "blowup"]
    assert len(blowup_rows) == 1
    assert blowup_rows[0].get("skipped") is True
    assert blowup_rows[0]["pass"] is True
    with pytest.raises(ValueError):
        ff.run_suite(2, 2, checks=["blowup"])
    with pytest.raises(ValueError):
        ff.run_suite(2, 3, checks=["point_counting"])
