import itertools

import pytest

import oracles
from weylflags import cosets, weyl
from weylflags.cosets import CosetRep


def perms(n):
    return map(tuple, itertools.permutations(range(1, n + 1)))


def test_min_rep_matches_brute_force():
    for n in (2, 3, 4):
        for blocks in oracles.compositions(n):
            for w in perms(n):
                assert cosets.min_rep_perm(w, blocks) == oracles.min_coset_rep_brute(
                    w, blocks
                ), (w, blocks)


def test_min_rep_is_idempotent_and_in_coset():
    spec = {"t": (2, 2)}
    for w in perms(4):
        mw = {"t": w}
        rep = cosets.min_rep(mw, spec)
        assert cosets.min_rep(rep, spec) == rep
        inside = weyl.multi_compose(weyl.multi_inverse(rep), mw)
        assert inside["t"] in oracles.wp_elements((2, 2))


def test_min_rep_validates_shape():
    with pytest.raises(ValueError):
        cosets.min_rep_perm((2, 1, 3), (2, 2))
    with pytest.raises(ValueError):
        cosets.min_rep({"t": (2, 1)}, {"s": (1, 1)})


def test_decompose_is_length_additive():
    spec = {"t": (1, 2, 1)}
    for w in perms(4):
        mw = {"t": w}
        rep, inside = cosets.decompose(mw, spec)
        assert weyl.multi_compose(rep, inside) == mw
        assert cosets.is_min_rep(rep, spec)
        assert weyl.multi_length(mw) == weyl.multi_length(rep) + weyl.multi_length(inside)


def test_lg_P_extremes():
    spec = {"t": (2, 1)}
    assert cosets.lg_P(weyl.multi_identity({"t": 3}), spec) == 0
    # longest coset: l(w_0) - l(w_{P,0})
    assert cosets.lg_P({"t": (3, 2, 1)}, spec) == 3 - 1


def test_coset_rep_normalizes_and_hashes():
    spec = {"t": (2, 1)}
    a = CosetRep({"t": (2, 1, 3)}, spec)
    b = CosetRep({"t": (1, 2, 3)}, spec)
    assert a == b
    assert hash(a) == hash(b)
    assert a.rep == {"t": (1, 2, 3)}
    assert a.lg == 0
    c = CosetRep({"t": (1, 2, 3)}, {"t": (1, 2)})
    with pytest.raises(ValueError):
        cosets.quotient_leq(a, c)


def test_enumerate_quotient_size_and_order():
    for n in (2, 3, 4):
        for blocks in oracles.compositions(n):
            spec = {"t": blocks}
            quo = cosets.enumerate_quotient(spec)
            expected = len(oracles.all_perms(n)) // len(oracles.wp_elements(blocks))
            assert len(quo) == expected
            assert len({q for q in quo}) == expected
            lgs = [q.lg for q in quo]
            assert lgs == sorted(lgs)


def test_quotient_leq_agrees_with_set_comparison_oracle():
    # u·W_P <= v·W_P iff some member of u·W_P is below v in full Bruhat
    # order; on minimal representatives that is plain Bruhat comparison.
    for blocks in oracles.compositions(3):
        spec = {"t": blocks}
        for u in perms(3):
            for v in perms(3):
                cu = CosetRep({"t": u}, spec)
                cv = CosetRep({"t": v}, spec)
                brute = any(
                    oracles.bruhat_leq_subword(oracles.compose(u, z), v)
                    for z in oracles.wp_elements(blocks)
                )
                assert cosets.quotient_leq(cu, cv) == brute, (u, v, blocks)


def test_left_min_rep_mirrors_right():
    spec = {"t": (2, 1)}
    for w in perms(3):
        mw = {"t": w}
        left = cosets.left_min_rep(mw, spec)
        mirrored = weyl.multi_inverse(
            cosets.min_rep(weyl.multi_inverse(mw), spec)
        )
        assert left == mirrored
        assert cosets.is_left_min_rep(left, spec)


def test_longest_in_levi():
    assert cosets.longest_in_levi({"t": (2, 2)}) == {"t": (2, 1, 4, 3)}
    w = cosets.longest_in_levi({"t": (3, 1)})
    assert weyl.multi_length(w) == 3


def test_shortest_double_coset_rep_brute_force():
    for n in (2, 3, 4):
        for qblocks in oracles.compositions(n):
            for pblocks in oracles.compositions(n):
                for w in perms(n):
                    got = cosets.shortest_double_coset_rep(
                        {"t": w}, {"t": qblocks}, {"t": pblocks}
                    )
                    dc = oracles.double_coset(qblocks, w, pblocks)
                    best = min(dc, key=oracles.inversion_count)
                    assert got == {"t": best}, (w, qblocks, pblocks)


def test_shortest_double_coset_methods_agree():
    for w in perms(4):
        mw = {"t": w}
        a = cosets.shortest_double_coset_rep(mw, {"t": (2, 2)}, {"t": (1, 2, 1)}, "exhaustive")
        b = cosets.shortest_double_coset_rep(mw, {"t": (2, 2)}, {"t": (1, 2, 1)}, "normalize")
        assert a == b, w
    with pytest.raises(ValueError):
        cosets.shortest_double_coset_rep({"t": (1, 2)}, {"t": (2,)}, {"t": (2,)}, "magic")


def test_length_split_stats_pinned_and_total():
    assert cosets.length_split_stats((3, 2, 1), (2, 1)) == (1, 2)
    for sigma in perms(4):
        for blocks in oracles.compositions(4):
            within, across = cosets.length_split_stats(sigma, blocks)
            assert within + across == oracles.inversion_count(sigma)
            rep, inside = cosets.decompose({"t": sigma}, {"t": blocks})
            assert within == weyl.multi_length(inside)
            assert across == weyl.multi_length(rep)
