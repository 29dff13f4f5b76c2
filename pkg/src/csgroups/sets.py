"""Structured finite sets: the large category equivalent to a planar
crossed simplicial group.

A structured set is stored as a base structured frame: a tuple listing the
carrier in one chosen reference order.  The frame torsor is never
materialised; two frames over the same carrier describe the same order
exactly when they differ by the underlying permutation of a group element,
and all morphism computations reduce to the normal-form calculus of
csgroups.core through the base frames.

Interstice duality labels the gap after position c of the base frame by
the ordered pair (frame[c], frame[c+1]); the dual base frame places the
gap after position -j at dual position j, which makes object duality
strictly compatible with morphism duality and the double dual literally
position preserving.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import kernel
from .core import (
    CsgMorphism,
    DeltaMap,
    GroupElement,
    dualize,
    group_elements,
    hom_set,
)
from .errors import FamilyMismatch, IndexMismatch, InfiniteFamily
from .families import CsgFamily

_image_cache = {}


def image_permutations(family, n):
    """The image of lambda_n in S_{n+1}, as a set of value tuples."""
    key = (family, n)
    if key not in _image_cache:
        if family.finite:
            perms = {g.perm() for g in group_elements(family, n)}
        else:
            h = n + 1
            perms = {tuple((i - a) % h for i in range(h)) for a in range(h)}
            if family.reflective:
                perms |= {tuple((a - i) % h for i in range(h)) for a in range(h)}
        _image_cache[key] = perms
    return _image_cache[key]


@dataclass(frozen=True)
class StructuredSet:
    """A finite set with a structure of the given family, presented by a
    base structured frame."""

    family: CsgFamily
    frame: tuple

    def __post_init__(self):
        if len(self.frame) == 0:
            raise ValueError("structured sets are nonempty")
        if len(set(self.frame)) != len(self.frame):
            raise ValueError("duplicate labels in frame")

    @property
    def n(self):
        return len(self.frame) - 1

    @property
    def elements(self):
        return frozenset(self.frame)

    def position(self, x):
        return self.frame.index(x)

    def reframed(self, g: GroupElement):
        """The same order presented by the frame acted on by g."""
        if g.n != self.n or g.family != self.family:
            raise IndexMismatch("group element does not match the frame")
        p = g.perm()
        return StructuredSet(self.family, tuple(self.frame[p[i]] for i in range(self.n + 1)))

    def order_equal(self, other):
        """Same carrier and same structure class."""
        if self.family != other.family or self.elements != other.elements:
            return False
        p = tuple(self.frame.index(x) for x in other.frame)
        return p in image_permutations(self.family, self.n)

    def automorphism_order(self):
        """|ker lambda_n|: the automorphism group of the order."""
        return self.family.kernel_order(self.n)

    def successor(self, x):
        """Cyclic successor with respect to the base frame."""
        i = self.frame.index(x)
        return self.frame[(i + 1) % (self.n + 1)]

    def ternary_relation(self):
        """The induced ternary relation on the carrier: all (a, b, c) in
        weakly clockwise base-frame position order, closed under the axioms
        of a total cyclic order."""
        idx = {x: i for i, x in enumerate(self.frame)}
        rel = set()
        for a, b, c in itertools.product(self.frame, repeat=3):
            i, j, k = idx[a], idx[b], idx[c]
            if i == j or j == k or i == k:
                rel.add((a, b, c))
            elif (j - i) % (self.n + 1) < (k - i) % (self.n + 1):
                rel.add((a, b, c))
        return rel


def closure_of_linear_order(family, ordered_elements):
    """The structure canonically refining a linear order."""
    frame = tuple(ordered_elements)
    if not frame:
        raise ValueError("empty carrier")
    return StructuredSet(family, frame)


def standard_set(family, n):
    """The structured set on {0..n} with the monotone frame."""
    return StructuredSet(family, tuple(range(n + 1)))


def enumerate_orders(family, elements):
    """All structure classes on the carrier, with automorphism group sizes.

    Returns a list of (StructuredSet, |Aut|) pairs, one per class; the
    number of classes is (n+1)! / |G_n| * |G_n^0|.
    """
    if not family.finite:
        raise InfiniteFamily(f"{family} admits infinitely many orders")
    elements = tuple(elements)
    n = len(elements) - 1
    image = image_permutations(family, n)
    seen = set()
    out = []
    for perm in itertools.permutations(range(n + 1)):
        if perm in seen:
            continue
        coset = {tuple(perm[p[i]] for i in range(n + 1)) for p in image}
        seen |= coset
        frame = tuple(elements[i] for i in perm)
        out.append((StructuredSet(family, frame), family.kernel_order(n)))
    return out


# ---------------------------------------------------------------------------
# morphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructuredMorphism:
    """A morphism of structured sets, stored as the normal-form morphism
    between the base frames."""

    source: StructuredSet
    target: StructuredSet
    rep: CsgMorphism

    def __post_init__(self):
        if self.rep.family != self.source.family or self.source.family != self.target.family:
            raise FamilyMismatch("family mismatch in structured morphism")
        if self.rep.m != self.source.n or self.rep.n != self.target.n:
            raise IndexMismatch("representative indices do not match the frames")

    def underlying(self):
        """The set map psi_*: source carrier -> target carrier."""
        lam = self.rep.underlying_map()
        return {self.source.frame[i]: self.target.frame[lam[i]]
                for i in range(self.source.n + 1)}

    def psi_upper(self, g: GroupElement) -> GroupElement:
        """Frame transport O(target) -> O(source): the group element g'
        with psi*(base_target . g) = base_source . g'."""
        moved = CsgMorphism.from_group(g.inverse()) @ self.rep
        return moved.g

    def __matmul__(self, other):
        if not isinstance(other, StructuredMorphism):
            return NotImplemented
        if other.target != self.source:
            raise IndexMismatch("structured morphisms not composable")
        return StructuredMorphism(other.source, self.target, self.rep @ other.rep)

    @property
    def is_isomorphism(self):
        return self.rep.m == self.rep.n and self.rep.delta.is_identity

    def validate(self):
        """Check the defining square: underlying map factors through a
        monotone map between the base frames."""
        lam = self.rep.underlying_map()
        d = self.rep.delta.values
        p = self.rep.g.perm()
        for i in range(self.rep.m + 1):
            if lam[i] != d[p[i]] % (self.rep.n + 1):
                return False
        return True


def identity_morphism(S: StructuredSet):
    return StructuredMorphism(S, S, CsgMorphism.identity(S.family, S.n))


def hom_structured(A: StructuredSet, B: StructuredSet):
    """All structured morphisms A -> B; bijective with Hom([m],[n])."""
    return [StructuredMorphism(A, B, rep) for rep in hom_set(A.family, A.n, B.n)]


def isomorphisms_structured(A: StructuredSet, B: StructuredSet):
    if A.family != B.family or A.n != B.n:
        return []
    return [StructuredMorphism(A, B, CsgMorphism.from_group(g))
            for g in group_elements(A.family, A.n)]


def restrict(S: StructuredSet, subset):
    """Restriction of the structure to a nonempty subset.

    Returns the restricted structured set and the canonical morphism into
    S whose underlying map is the inclusion.
    """
    subset = set(subset)
    if not subset:
        raise ValueError("empty subset")
    if not subset <= S.elements:
        raise ValueError("not a subset of the carrier")
    positions = tuple(i for i, x in enumerate(S.frame) if x in subset)
    frame = tuple(S.frame[i] for i in positions)
    sub = StructuredSet(S.family, frame)
    incl = CsgMorphism(S.family, sub.n, S.n,
                       DeltaMap(sub.n, S.n, positions),
                       GroupElement.identity(S.family, sub.n))
    return sub, StructuredMorphism(sub, S, incl)


# ---------------------------------------------------------------------------
# interstice duality
# ---------------------------------------------------------------------------

def gap_label(S: StructuredSet, c):
    """The interstice after base-frame position c."""
    h = S.n + 1
    return (S.frame[c % h], S.frame[(c + 1) % h])


def interstice_dual(S: StructuredSet) -> StructuredSet:
    """The set of interstices with its canonical dual structure."""
    h = S.n + 1
    frame = tuple(gap_label(S, -j) for j in range(h))
    return StructuredSet(S.family, frame)


def interstice_dual_morphism(psi: StructuredMorphism) -> StructuredMorphism:
    """Duality on morphisms: contravariant, compatible with gap labels."""
    return StructuredMorphism(interstice_dual(psi.target), interstice_dual(psi.source),
                              dualize(psi.rep))


def double_dual_identification(S: StructuredSet):
    """The canonical relabeling of (S dual) dual back onto S: a gap of
    gaps is the element the two interstices share."""
    dd = interstice_dual(interstice_dual(S))
    ident = {}
    for pair in dd.frame:
        (a, b), (c, d) = pair
        shared = {a, b} & {c, d}
        if len(shared) != 1:
            # size <= 2 carriers: adjacent gaps share both endpoints; take
            # the geometric middle, which is the head of the first gap
            shared = {a}
        ident[pair] = next(iter(shared))
    return ident


# ---------------------------------------------------------------------------
# fiber orders and the lexicographic calculus (cyclic and dihedral cases)
# ---------------------------------------------------------------------------

def fiber_orders(psi: StructuredMorphism):
    """For each target element, the fiber with its linear order.

    The order is read off the integer-line lift: a source position p lies
    over target position q when the lift value at some representative of p
    equals q exactly; fibers are ordered by those representatives.
    """
    rep = psi.rep
    m, n = rep.m, rep.n
    w = rep.window()
    reversing = rep.g.payload[0] == 1
    out = {y: () for y in psi.target.frame}
    for q in range(n + 1):
        reps = []
        for p in range(m + 1):
            diff = q - w[p]
            if diff % (n + 1) == 0:
                k = diff // (n + 1)
                lift = p - (m + 1) * k if reversing else p + (m + 1) * k
                reps.append((lift, psi.source.frame[p]))
        reps.sort()
        out[psi.target.frame[q]] = tuple(x for _, x in reps)
    return out


def lexicographic_cyclic(target: StructuredSet, mapping, orders):
    """Rebuild the source cyclic order from a map and fiber linear orders.

    mapping: source element -> target element; orders: target element ->
    tuple of its fiber in linear order.  Returns the successor walk as a
    frame tuple (empty fibers skipped)."""
    walk = []
    for y in target.frame:
        walk.extend(orders.get(y, ()))
    if len(walk) != len(set(walk)):
        raise ValueError("fiber orders overlap")
    return tuple(walk)


def validate_cyclic_axioms(carrier, rel):
    """Total cyclic order axioms for a ternary relation.

    Checks reflexivity, antisymmetry, transitivity, cyclic symmetry, the
    two-element degeneration and comparability; returns the first violated
    axiom name or None.
    """
    carrier = tuple(carrier)
    for a in carrier:
        if (a, a, a) not in rel:
            return "reflexivity"
    for a, b, c in itertools.product(carrier, repeat=3):
        if (a, b, c) in rel:
            if (b, c, a) not in rel:
                return "cyclic symmetry"
            if (a, a, c) not in rel:
                return "two-cycle"
        if (a, b, c) in rel and (b, a, c) in rel and len({a, b, c}) == 3:
            return "antisymmetry"
        if (a, b, c) not in rel and (b, a, c) not in rel:
            return "comparability"
    for a, b, c, d in itertools.permutations(carrier, 4):
        if (a, b, c) in rel and (a, c, d) in rel:
            if (a, b, d) not in rel or (b, c, d) not in rel:
                return "transitivity"
    return None


# ---------------------------------------------------------------------------
# dihedral four-point relation and the pentagon property
# ---------------------------------------------------------------------------

def linearly_compatible(S: StructuredSet, quadruple):
    """Whether the induced structure on the 4 points is the closure of the
    linear order given by the quadruple."""
    sub, _ = restrict(S, set(quadruple))
    return sub.order_equal(closure_of_linear_order(S.family, quadruple))


def pentagon_witness(S: StructuredSet, quintuple):
    """Evaluate the three pentagon conditions on a 5-tuple of distinct
    elements; returns the triple of booleans (i), (ii), (iii)."""
    x = tuple(quintuple)
    faces = [x[:i] + x[i + 1:] for i in range(5)]
    gamma = [linearly_compatible(S, f) for f in faces]
    cond_i = all(gamma)
    cond_ii = gamma[1] and gamma[3]
    cond_iii = gamma[0] and gamma[2] and gamma[4]
    return cond_i, cond_ii, cond_iii
