"""Cosets of parabolic Weyl subgroups: W/W_P, W_Q\\W and W_Q\\W/W_P.

W_P is the block-diagonal subgroup cut out by a per-embedding composition.
Every coset w·W_P contains a unique length-minimal representative w^P,
obtained by sorting the values of w over each block of positions; the
decomposition w = w^P · w_P is length-additive.  The Bruhat order on the
quotient is the order on minimal representatives.

>>> min_rep_perm((3, 2, 1), (2, 1))
(2, 3, 1)
>>> lg_P({"t": (3, 2, 1)}, {"t": (2, 1)})
2
>>> length_split_stats((3, 2, 1), (2, 1))
(1, 2)
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Optional, Tuple

from . import weyl
from .roots import ParabolicSpec, check_spec
from .weyl import MultiPerm, Perm


def min_rep_perm(w: Perm, blocks: Tuple[int, ...]) -> Perm:
    """Minimal representative of w·W_P for one symmetric group factor."""
    if sum(blocks) != len(w):
        raise ValueError(f"blocks {blocks} do not sum to rank {len(w)}")
    out = []
    start = 0
    for size in blocks:
        out.extend(sorted(w[start : start + size]))
        start += size
    return tuple(out)


def min_rep(w: MultiPerm, spec: ParabolicSpec) -> MultiPerm:
    spec = _match(w, spec)
    return {tau: min_rep_perm(w[tau], spec[tau]) for tau in w}


def _match(w, spec: ParabolicSpec) -> ParabolicSpec:
    spec = check_spec(spec)
    if set(w) != set(spec):
        raise ValueError(f"embedding sets differ: {sorted(w)} vs {sorted(spec)}")
    return spec


def is_min_rep(w: MultiPerm, spec: ParabolicSpec) -> bool:
    return w == min_rep(w, spec)


def decompose(w: MultiPerm, spec: ParabolicSpec) -> Tuple[MultiPerm, MultiPerm]:
    """The unique length-additive factorization w = w^P · w_P.

    >>> wp, w_in = decompose({"t": (3, 2, 1)}, {"t": (2, 1)})
    >>> wp, w_in
    ({'t': (2, 3, 1)}, {'t': (2, 1, 3)})
    """
    rep = min_rep(w, spec)
    inside = weyl.multi_compose(weyl.multi_inverse(rep), w)
    assert weyl.multi_length(w) == weyl.multi_length(rep) + weyl.multi_length(inside)
    return rep, inside


def lg_P(w: MultiPerm, spec: ParabolicSpec) -> int:
    """Length of the minimal representative of w·W_P."""
    return weyl.multi_length(min_rep(w, spec))


class CosetRep:
    """A coset w·W_P, held as its minimal representative plus its block spec.

    Construction normalizes any representative.  Cosets carry their spec
    and refuse comparison across different specs.
    """

    __slots__ = ("rep", "spec", "_frozen")

    def __init__(self, w: MultiPerm, spec: ParabolicSpec):
        w = weyl.check_multi(w)
        self.spec = _match(w, spec)
        self.rep = min_rep(w, self.spec)
        self._frozen = (weyl.freeze(self.rep), tuple(sorted(self.spec.items())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CosetRep):
            return NotImplemented
        return self._frozen == other._frozen

    def __hash__(self) -> int:
        return hash(self._frozen)

    def __repr__(self) -> str:
        return f"CosetRep({self.rep!r}, {self.spec!r})"

    @property
    def lg(self) -> int:
        return weyl.multi_length(self.rep)

    def sort_key(self):
        return weyl.sort_key(self.rep)

    def _check_comparable(self, other: "CosetRep") -> None:
        if self._frozen[1] != other._frozen[1]:
            raise ValueError(
                f"cosets live in different quotients: {self.spec} vs {other.spec}"
            )


def quotient_leq(u: CosetRep, v: CosetRep) -> bool:
    """Bruhat order on W/W_P via minimal representatives.

    >>> spec = {"t": (2, 1)}
    >>> quotient_leq(CosetRep({"t": (1, 2, 3)}, spec), CosetRep({"t": (3, 2, 1)}, spec))
    True
    """
    u._check_comparable(v)
    return weyl.multi_bruhat_leq(u.rep, v.rep)


def _min_reps_perm(blocks: Tuple[int, ...]) -> List[Perm]:
    n = sum(blocks)
    return [
        w for w in map(tuple, itertools.permutations(range(1, n + 1)))
        if w == min_rep_perm(w, blocks)
    ]


def enumerate_quotient(spec: ParabolicSpec) -> List[CosetRep]:
    """All cosets of W/W_P, sorted by (length, one-line notation, label)."""
    spec = check_spec(spec)
    labels = sorted(spec)
    per_tau = [_min_reps_perm(spec[tau]) for tau in labels]
    out = [
        CosetRep({tau: part for tau, part in zip(labels, combo)}, spec)
        for combo in itertools.product(*per_tau)
    ]
    out.sort(key=CosetRep.sort_key)
    return out


def wp_elements(spec: ParabolicSpec) -> List[MultiPerm]:
    """All elements of the block subgroup W_P."""
    spec = check_spec(spec)
    labels = sorted(spec)
    per_tau = []
    for tau in labels:
        blocks = spec[tau]
        per_block = []
        start = 1
        for size in blocks:
            per_block.append(list(itertools.permutations(range(start, start + size))))
            start += size
        per_tau.append(
            [tuple(x for blk in combo for x in blk) for combo in itertools.product(*per_block)]
        )
    return [
        {tau: part for tau, part in zip(labels, combo)}
        for combo in itertools.product(*per_tau)
    ]


def longest_in_levi(spec: ParabolicSpec) -> MultiPerm:
    """w_{P,0}: the longest element of W_P, reversing each block."""
    spec = check_spec(spec)
    out = {}
    for tau, blocks in spec.items():
        vec = []
        start = 1
        for size in blocks:
            vec.extend(range(start + size - 1, start - 1, -1))
            start += size
        out[tau] = tuple(vec)
    return out


def left_min_rep(w: MultiPerm, spec: ParabolicSpec) -> MultiPerm:
    """Minimal representative of W_Q·w; w is in ^QW iff w^{-1} is in W^Q."""
    return weyl.multi_inverse(min_rep(weyl.multi_inverse(w), spec))


def is_left_min_rep(w: MultiPerm, spec: ParabolicSpec) -> bool:
    return w == left_min_rep(w, spec)


def enumerate_left_quotient(spec: ParabolicSpec) -> List[MultiPerm]:
    """^QW, sorted by (length, one-line notation, label)."""
    out = [weyl.multi_inverse(c.rep) for c in enumerate_quotient(spec)]
    out.sort(key=weyl.sort_key)
    return out


def shortest_double_coset_rep(
    w: MultiPerm,
    qspec: ParabolicSpec,
    pspec: ParabolicSpec,
    method: str = "auto",
) -> MultiPerm:
    """The unique minimal-length element of W_Q · w · W_P.

    method "exhaustive" materializes the double coset (small ranks);
    "normalize" alternates left and right minimal-representative passes
    until stable.  "auto" picks exhaustive up to rank 6.  The result lies
    in W^P intersected with ^QW.
    """
    qspec = _match(w, qspec)
    pspec = _match(w, pspec)
    if method == "auto":
        method = "exhaustive" if max(len(p) for p in w.values()) <= 6 else "normalize"
    if method == "exhaustive":
        coset = {
            weyl.freeze(weyl.multi_compose(a, weyl.multi_compose(w, b)))
            for a in wp_elements(qspec)
            for b in wp_elements(pspec)
        }
        elems = [dict(f) for f in coset]
        elems.sort(key=weyl.sort_key)
        best = elems[0]
        if len(elems) > 1 and weyl.multi_length(elems[1]) == weyl.multi_length(best):
            raise AssertionError(f"double coset minimum not unique at {w}")
        return best
    if method == "normalize":
        cur = w
        while True:
            nxt = left_min_rep(min_rep(cur, pspec), qspec)
            if nxt == cur:
                return cur
            cur = nxt
    raise ValueError(f"unknown method {method!r}")


def length_split_stats(sigma: Perm, blocks: Tuple[int, ...]) -> Tuple[int, int]:
    """Inversions of sigma split into within-block and cross-block counts.

    Returns (n_I, n^I) for the composition I: pairs m < n with
    sigma(m) > sigma(n), counted inside one block of I and across two
    blocks respectively.  These equal the lengths of the two factors of
    the parabolic decomposition, and n_I + n^I is the inversion count of
    sigma.

    >>> length_split_stats((3, 2, 1), (2, 1))
    (1, 2)
    """
    sigma = weyl.check_perm(sigma)
    if sum(blocks) != len(sigma):
        raise ValueError(f"composition {blocks} does not sum to rank {len(sigma)}")
    bl = []
    for b, size in enumerate(blocks):
        bl.extend([b] * size)
    within = across = 0
    n = len(sigma)
    for m in range(n):
        for k in range(m + 1, n):
            if sigma[m] > sigma[k]:
                if bl[m] == bl[k]:
                    within += 1
                else:
                    across += 1
    return within, across


if __name__ == "__main__":
    import doctest

    doctest.testmod()
