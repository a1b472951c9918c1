"""Component-inclusion criteria for generalized Steinberg loci.

All decisions reduce to finite root-set computations: whether the
w-translate of a Levi's roots meets the positive roots of another Levi,
and whether a translated coweight is strictly dominant for it.  The
walk driver find_induction_step raises a coset one covering step at a
time, certifying each step with a simple root and the minimal parabolic
attached to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Union

from . import weyl
from .cosets import (
    CosetRep,
    enumerate_left_quotient,
    longest_in_levi,
    quotient_leq,
    shortest_double_coset_rep,
)
from .roots import (
    IntegralWeight,
    ParabolicSpec,
    Root,
    act,
    act_root,
    check_spec,
    dominance,
    levi_roots,
    p_regular_antidominant,
    pairing,
    positive_roots,
    shape_of,
    simple_roots,
)


@dataclass(frozen=True)
class RootSpaceSet:
    """A sum of root spaces inside the Lie algebra, tracked as a root set.

    includes_torus records whether the Cartan is part of the space; the
    subsets this module manipulates (u, n_Q, Ad(w)m_P n u) never include
    it, so the flag only matters to finite-field consumers reusing the
    type for b, p and m_P.
    """

    roots: frozenset
    includes_torus: bool = False

    def intersect(self, other: "RootSpaceSet") -> "RootSpaceSet":
        return RootSpaceSet(self.roots & other.roots, self.includes_torus and other.includes_torus)

    def issubset(self, other: "RootSpaceSet") -> bool:
        if self.includes_torus and not other.includes_torus:
            return False
        return self.roots <= other.roots

    def apply(self, w: weyl.MultiPerm) -> "RootSpaceSet":
        return RootSpaceSet(frozenset(act_root(w, a) for a in self.roots), self.includes_torus)


def nilradical_roots(spec: ParabolicSpec) -> RootSpaceSet:
    """n_Q: positive roots crossing from an earlier block to a later one."""
    spec = check_spec(spec)
    pos = positive_roots({tau: sum(b) for tau, b in spec.items()})
    levi = levi_roots(spec)
    return RootSpaceSet(frozenset(a for a in pos if a not in levi))


def levi_root_space(spec: ParabolicSpec) -> RootSpaceSet:
    """m_P: all roots inside blocks; the Cartan rides along."""
    return RootSpaceSet(levi_roots(spec), includes_torus=True)


def unipotent_roots(shape: Dict[str, int]) -> RootSpaceSet:
    return RootSpaceSet(frozenset(positive_roots(shape)))


def levi_cap_u_in_nQ(w: weyl.MultiPerm, pspec: ParabolicSpec, qspec: ParabolicSpec) -> bool:
    """Whether Ad(w)m_P meets the unipotent radical only inside n_Q,
    i.e. w(R_P) n R^+ avoids the positive roots of the Q-Levi.

    This is a condition on the double coset W_Q w W_P (same answer for
    every representative); it decides whether the locus indexed by that
    double coset is a whole component of the Q-locus.  The inclusion
    test for a single coset wW_P is component_in_ZQP_roots.
    """
    shape = shape_of(w)
    translated = levi_root_space(pspec).apply(w)
    in_u = translated.intersect(unipotent_roots(shape))
    return in_u.issubset(nilradical_roots(qspec))


def z_dimension_defect(w: weyl.MultiPerm, pspec: ParabolicSpec, qspec: ParabolicSpec) -> int:
    """dim(u n Ad(w)m_P) - dim(n_Q n Ad(w)m_P); zero iff the inclusion holds."""
    shape = shape_of(w)
    translated = levi_root_space(pspec).apply(w)
    in_u = len(translated.intersect(unipotent_roots(shape)).roots)
    in_nq = len(translated.intersect(nilradical_roots(qspec)).roots)
    assert in_u >= in_nq
    return in_u - in_nq


def component_in_ZQP(
    w: CosetRep, pspec: ParabolicSpec, qspec: ParabolicSpec, h: IntegralWeight
) -> bool:
    """Whether the component indexed by w·W_P lies in the Q-locus.

    Decided by strict Q-dominance of w(h) for a P-regular antidominant h;
    the answer does not depend on which such h is supplied.
    """
    if not p_regular_antidominant(h, pspec):
        raise ValueError(f"h is not P-regular antidominant for blocks {pspec}: {h}")
    return dominance(act(w.rep, h), qspec, "strict")


def component_in_ZQP_roots(w: CosetRep, pspec: ParabolicSpec, qspec: ParabolicSpec) -> bool:
    """Pure root-set route to the same inclusion component_in_ZQP decides.

    The component of wW_P lies in the Q-locus iff, for the shortest
    representative r of the double coset W_Q w W_P, Ad(r)m_P n u sits
    inside n_Q and wW_P = w_{Q,0}·r·W_P.  Needs no coweight h.
    """
    r = shortest_double_coset_rep(w.rep, qspec, pspec)
    if not levi_cap_u_in_nQ(r, pspec, qspec):
        return False
    lifted = weyl.multi_compose(longest_in_levi(qspec), r)
    return CosetRep(lifted, pspec) == w


def steinberg_components_full_flag(qspec: ParabolicSpec) -> List[weyl.MultiPerm]:
    """Indices w of the full-flag components lying in the Q-locus.

    These are exactly w_{Q,0}·w' for w' ranging over ^QW.
    """
    wq0 = longest_in_levi(qspec)
    out = [weyl.multi_compose(wq0, wprime) for wprime in enumerate_left_quotient(qspec)]
    out.sort(key=weyl.sort_key)
    return out


def components_through_point(w_x: CosetRep, w: CosetRep) -> bool:
    """Whether the component indexed by w passes through a point in
    relative position w_x: true iff w >= w_x in W/W_P."""
    return quotient_leq(w_x, w)


@dataclass(frozen=True, eq=False)
class InductionStep:
    """One certified covering step of the walk: s_alpha · w_from = w_to
    with lg_P going up by one, and Q the minimal parabolic of alpha."""

    alpha: Root
    Q: ParabolicSpec
    w_from: CosetRep
    w_to: CosetRep

    def __eq__(self, other):
        if not isinstance(other, InductionStep):
            return NotImplemented
        return (
            self.alpha == other.alpha
            and self.Q == other.Q
            and self.w_from == other.w_from
            and self.w_to == other.w_to
        )


def minimal_parabolic(shape: Dict[str, int], alpha: Root) -> ParabolicSpec:
    """B(alpha): the parabolic whose only Levi block merges alpha's pair."""
    assert alpha.simple
    spec = {}
    for tau, n in shape.items():
        if tau == alpha.tau:
            spec[tau] = tuple([1] * (alpha.i - 1) + [2] + [1] * (n - alpha.i - 1))
        else:
            spec[tau] = (1,) * n
    return spec


def find_induction_step(
    w: CosetRep,
    pspec: ParabolicSpec,
    h: IntegralWeight,
    exhaustive: bool = False,
) -> Union[InductionStep, List[InductionStep]]:
    """A simple root raising w one covering step in W/W_P.

    Candidates are the simple alpha with <alpha, w(h)> < 0; the smallest
    (index, label) is chosen.  Returns the step together with Q = B(alpha),
    for which s_alpha·w(h) is strictly Q-dominant while w(h) is not.  With
    exhaustive=True, returns every valid candidate step for diagnostics.
    Raises when w is already the maximal coset.
    """
    if not p_regular_antidominant(h, pspec):
        raise ValueError(f"h is not P-regular antidominant for blocks {pspec}: {h}")
    shape = shape_of(h)
    wh = act(w.rep, h)
    cands = sorted(
        (a for a in simple_roots(shape) if pairing(a, wh) < 0),
        key=lambda a: (a.i, a.tau),
    )
    if not cands:
        raise ValueError(f"coset {w.rep} is maximal in W/W_P; no step exists")
    steps = []
    for alpha in cands:
        qspec = minimal_parabolic(shape, alpha)
        s_alpha = weyl.multi_simple_reflection(shape, alpha.tau, alpha.i)
        target = CosetRep(weyl.multi_compose(s_alpha, w.rep), pspec)
        assert target.lg == w.lg + 1
        assert dominance(act(target.rep, h), qspec, "strict")
        assert not dominance(wh, qspec, "strict")
        steps.append(InductionStep(alpha, qspec, w, target))
        if not exhaustive:
            return steps[0]
    return steps
