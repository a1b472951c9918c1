"""Companion-character bookkeeping over a fixed refinement.

From an antidominant integral coweight h the module derives the dominant
algebraic weight lambda and the block structure P of its stabilizer;
from a character's weight it recovers the coset position w relative to h;
and from a starting position w_R it enumerates the companion characters
delta_{R,w} = twisted z^{w(h)} times the unramified part, for w running
over the upper order ideal of w_R in W/W_P.  A certified walk upgrades
the enumeration with an explicit saturated chain from w_R to the top.

Characters are symbolic: the smooth part is an ordered tuple of opaque
eigenvalue labels, and only weights are computed on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import weyl
from .cosets import CosetRep, enumerate_quotient, quotient_leq
from .roots import IntegralWeight, ParabolicSpec, act, shape_of
from .steinberg import InductionStep, find_induction_step


@dataclass(frozen=True)
class PlaceRefinement:
    """Ordered eigenvalue data at one place.

    labels come in refinement order; values, when present, are exact
    rationals aligned with labels; q is the residue-field cardinality
    used by the genericity test; embeddings lists the labels of the
    archimedean-side embeddings attached to this place.
    """

    place: str
    q: int
    embeddings: Tuple[str, ...]
    labels: Tuple[str, ...]
    values: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"eigenvalue labels at place {self.place!r} are not distinct")
        if self.values is not None and len(self.values) != len(self.labels):
            raise ValueError(f"eigenvalue values at place {self.place!r} do not match labels")
        if self.q < 2:
            raise ValueError(f"residue cardinality at place {self.place!r} must be >= 2")


@dataclass(frozen=True)
class RefinementSpec:
    places: Tuple[PlaceRefinement, ...]

    def __post_init__(self):
        names = [p.place for p in self.places]
        if len(set(names)) != len(names):
            raise ValueError("place labels are not distinct")
        embs = [e for p in self.places for e in p.embeddings]
        if len(set(embs)) != len(embs):
            raise ValueError("embedding labels are not distinct across places")


@dataclass(frozen=True, eq=False)
class CharacterSymbol:
    """delta_{R,w} reduced to its computable shadow.

    algebraic_weight holds the twisted weight when twisted is set: per
    embedding, entry i is (w(h))_i + (i-1).  smooth_labels fixes the
    unramified part as the eigenvalue labels per place, independent of w.
    """

    algebraic_weight: IntegralWeight
    smooth_labels: Tuple[Tuple[str, Tuple[str, ...]], ...]
    twisted: bool = True

    def __eq__(self, other):
        if not isinstance(other, CharacterSymbol):
            return NotImplemented
        return (
            self.algebraic_weight == other.algebraic_weight
            and self.smooth_labels == other.smooth_labels
            and self.twisted == other.twisted
        )


@dataclass(frozen=True, eq=False)
class CompanionCertificate:
    """A saturated certified chain w_R = u_0 < u_1 < ... < u_k = top."""

    start: CosetRep
    end: CosetRep
    chain: Tuple[InductionStep, ...]

    def __eq__(self, other):
        if not isinstance(other, CompanionCertificate):
            return NotImplemented
        return (self.start, self.end, self.chain) == (other.start, other.end, other.chain)


def runs_composition(vec: Tuple[int, ...]) -> Tuple[int, ...]:
    """Block sizes of maximal equal runs of a weakly increasing vector."""
    blocks = []
    run = 1
    for a, b in zip(vec, vec[1:]):
        if b < a:
            raise ValueError(f"vector is not weakly increasing: {vec}")
        if b == a:
            run += 1
        else:
            blocks.append(run)
            run = 1
    blocks.append(run)
    return tuple(blocks)


def hodge_spec(h: IntegralWeight) -> ParabolicSpec:
    """The stabilizer block structure of an antidominant h."""
    return {tau: runs_composition(tuple(v)) for tau, v in h.items()}


def weights_from_hodge(h: IntegralWeight) -> Tuple[IntegralWeight, ParabolicSpec]:
    """(lambda, P) from antidominant h: lambda_i = h_{n+1-i} + i - 1.

    lambda + staircase is dominant, and the longest element's dot action
    sends lambda back to (h_1, h_2+1, ..., h_n+n-1).

    >>> weights_from_hodge({"t": (1, 1, 2)})
    ({'t': (2, 2, 3)}, {'t': (2, 1)})
    """
    spec = hodge_spec(h)
    lam = {
        tau: tuple(v[len(v) - i] + i - 1 for i in range(1, len(v) + 1))
        for tau, v in h.items()
    }
    return lam, spec


def relative_position(char_weight: IntegralWeight, h: IntegralWeight) -> CosetRep:
    """The unique coset w in W/W_P with w(h) = char_weight.

    Ties among equal h-entries are matched stably (increasing positions
    to increasing positions), which lands exactly on the minimal coset
    representative.

    >>> relative_position({"t": (2, 1, 1)}, {"t": (1, 1, 2)}).rep
    {'t': (2, 3, 1)}
    """
    if set(char_weight) != set(h):
        raise ValueError(
            f"embedding sets differ: {sorted(char_weight)} vs {sorted(h)}"
        )
    spec = hodge_spec(h)
    rep = {}
    for tau, hvec in h.items():
        cw = char_weight[tau]
        if sorted(cw) != list(hvec):
            raise ValueError(
                f"weight at embedding {tau!r} is not a rearrangement of h: {cw} vs {hvec}"
            )
        slots: Dict[int, List[int]] = {}
        for pos, value in enumerate(hvec, start=1):
            slots.setdefault(value, []).append(pos)
        used: Dict[int, int] = {}
        winv = []
        for value in cw:
            k = used.get(value, 0)
            used[value] = k + 1
            winv.append(slots[value][k])
        rep[tau] = weyl.inverse(tuple(winv))
    return CosetRep(rep, spec)


def twist(weight: IntegralWeight) -> IntegralWeight:
    """Add the per-embedding staircase (0, 1, ..., n-1) to a weight."""
    return {
        tau: tuple(x + i for i, x in enumerate(v))
        for tau, v in weight.items()
    }


def untwist(weight: IntegralWeight) -> IntegralWeight:
    return {
        tau: tuple(x - i for i, x in enumerate(v))
        for tau, v in weight.items()
    }


def character_for(w: CosetRep, h: IntegralWeight, refinement: RefinementSpec) -> CharacterSymbol:
    smooth = tuple((p.place, p.labels) for p in refinement.places)
    return CharacterSymbol(
        algebraic_weight=twist(act(w.rep, h)),
        smooth_labels=smooth,
        twisted=True,
    )


def companion_set(
    refinement: RefinementSpec, h: IntegralWeight, w_R: CosetRep
) -> List[Tuple[CosetRep, CharacterSymbol]]:
    """All (w, delta_{R,w}) with w >= w_R in W/W_P.

    Sorted by (lg_P, one-line notation, embedding label).

    >>> r = RefinementSpec((PlaceRefinement("v", 3, ("t",), ("a", "b")),))
    >>> h = {"t": (0, 1)}
    >>> w_R = relative_position({"t": (0, 1)}, h)
    >>> [c.algebraic_weight for _, c in companion_set(r, h, w_R)]
    [{'t': (0, 2)}, {'t': (1, 1)}]
    """
    spec = hodge_spec(h)
    if w_R != CosetRep(w_R.rep, spec):
        raise ValueError("w_R does not live in the quotient derived from h")
    out = []
    for w in enumerate_quotient(spec):
        if quotient_leq(w_R, w):
            out.append((w, character_for(w, h, refinement)))
    out.sort(key=lambda pair: pair[0].sort_key())
    return out


def jordan_holder_cosets(
    w: CosetRep, at_least: Optional[CosetRep] = None
) -> List[CosetRep]:
    """The lower order ideal {w' <= w} in W/W_P, optionally cut below by
    at_least (giving the Bruhat interval [at_least, w]).

    The unique maximal element of the returned list is w itself.
    """
    out = []
    for cand in enumerate_quotient(w.spec):
        if not quotient_leq(cand, w):
            continue
        if at_least is not None and not quotient_leq(at_least, cand):
            continue
        out.append(cand)
    out.sort(key=CosetRep.sort_key)
    return out


def certify_walk(w_R: CosetRep, h: IntegralWeight) -> CompanionCertificate:
    """Climb from w_R to the top coset one certified covering step at a
    time; the chain length is lg_P(top) - lg_P(w_R)."""
    spec = hodge_spec(h)
    if w_R != CosetRep(w_R.rep, spec):
        raise ValueError("w_R does not live in the quotient derived from h")
    steps: List[InductionStep] = []
    cur = w_R
    top = CosetRep(weyl.multi_longest(shape_of(h)), spec)
    while cur != top:
        step = find_induction_step(cur, spec, h)
        steps.append(step)
        cur = step.w_to
    assert len(steps) == top.lg - w_R.lg
    return CompanionCertificate(start=w_R, end=top, chain=tuple(steps))


def genericity_check(refinement: RefinementSpec) -> bool:
    """Exact test that all eigenvalue ratios avoid {1, q} at each place.

    >>> genericity_check(RefinementSpec((PlaceRefinement(
    ...     "v", 3, ("t",), ("a", "b"), (Fraction(1), Fraction(2))),)))
    True
    """
    for place in refinement.places:
        if place.values is None:
            raise ValueError(f"place {place.place!r} has no numeric eigenvalues")
        if any(v == 0 for v in place.values):
            raise ValueError(f"place {place.place!r} has a zero eigenvalue")
        for i, a in enumerate(place.values):
            for j, b in enumerate(place.values):
                if i == j:
                    continue
                ratio = Fraction(a, b)
                if ratio == 1 or ratio == place.q:
                    return False
    return True


if __name__ == "__main__":
    import doctest

    doctest.testmod()
