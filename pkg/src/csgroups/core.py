"""Morphism calculus of the planar crossed simplicial groups and of the
signed-permutation (Weyl) family.

Every morphism [m] -> [n] is kept in canonical factorization normal form:
a monotone map (DeltaMap) postcomposed onto an automorphism of the source
(GroupElement).  Composition, star actions, duality and the classifying
functor into the Weyl family are all computed through the integer-line
model of the families (see _kernel_py for conventions).

Conventions fixed here, used throughout the package:
  * tau_n shifts the line by l |-> l - 1; its underlying permutation of
    {0..n} is i |-> i - 1 mod (n+1).
  * omega_n reflects by l |-> -l; its underlying permutation fixes 0.
    In the quaternionic family the same payload letter is the generator w
    with w^2 = tau^{M(n+1)}.
  * star_actions(g, phi) is the unique pair with g o phi = (g*phi) o (phi*g).
  * dualize is the interstice duality D(f) = rho o f_gap o rho; it fixes
    objects and rotations and satisfies D(D(u)) = u exactly.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from . import kernel
from .errors import FamilyMismatch, IndexMismatch, InfiniteFamily, UnsupportedFamily
from .families import (
    CYCLIC,
    DELTA,
    DIHEDRAL,
    PARACYCLIC,
    PARADIHEDRAL,
    QUATERNIONIC,
    WEYL,
    CsgFamily,
    parse_family,
)


# ---------------------------------------------------------------------------
# monotone maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DeltaMap:
    """A monotone map [m] -> [n], stored by its value tuple."""

    m: int
    n: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.m + 1:
            raise ValueError("value tuple has wrong length")
        if any(v < 0 or v > self.n for v in self.values):
            raise ValueError("values outside [0, n]")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ValueError("values not monotone")

    @staticmethod
    def identity(n):
        return DeltaMap(n, n, tuple(range(n + 1)))

    @staticmethod
    def face(i, n):
        """delta_i: [n-1] -> [n], skipping the value i."""
        return DeltaMap(n - 1, n, tuple(j if j < i else j + 1 for j in range(n)))

    @staticmethod
    def degeneracy(i, n):
        """s_i: [n+1] -> [n], repeating the value i."""
        return DeltaMap(n + 1, n, tuple(j if j <= i else j - 1 for j in range(n + 2)))

    @staticmethod
    def constant(m, value, n):
        return DeltaMap(m, n, (value,) * (m + 1))

    def __call__(self, i):
        return self.values[i]

    def __matmul__(self, other):
        if not isinstance(other, DeltaMap):
            return NotImplemented
        if other.n != self.m:
            raise IndexMismatch(f"cannot compose [{other.m}]->[{other.n}] into [{self.m}]->[{self.n}]")
        return DeltaMap(other.m, self.n, tuple(self.values[v] for v in other.values))

    @property
    def is_identity(self):
        return self.m == self.n and self.values == tuple(range(self.n + 1))


def delta_maps(m, n):
    """All monotone maps [m] -> [n]."""
    return [DeltaMap(m, n, vals)
            for vals in itertools.combinations_with_replacement(range(n + 1), m + 1)]


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupElement:
    """An automorphism of [n] in the given family.

    payload: () for delta; (s, a) for the integer-line families;
    (signs, perm) for weyl.
    """

    family: CsgFamily
    n: int
    payload: tuple

    def __post_init__(self):
        kind = self.family.kind
        if kind == DELTA:
            if self.payload != ():
                raise ValueError("delta has trivial automorphisms")
        elif kind == WEYL:
            signs, perm = self.payload
            if sorted(perm) != list(range(self.n + 1)) or len(signs) != self.n + 1:
                raise ValueError("bad signed permutation")
            if any(e not in (0, 1) for e in signs):
                raise ValueError("signs must be bits")
        else:
            s, a = self.payload
            if s not in (0, 1):
                raise ValueError("reflection bit must be 0 or 1")
            if s == 1 and not self.family.reflective:
                raise ValueError(f"{self.family} has no order-reversing automorphisms")
            rot = self.family.rot_order(self.n)
            if rot and not 0 <= a < rot:
                raise ValueError(f"shift {a} not reduced mod {rot}")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(family, n):
        if family.kind == DELTA:
            return GroupElement(family, n, ())
        if family.kind == WEYL:
            return GroupElement(family, n, ((0,) * (n + 1), tuple(range(n + 1))))
        return GroupElement(family, n, (0, 0))

    @staticmethod
    def tau(family, n):
        """The rotation generator."""
        if not family.is_zlift:
            raise UnsupportedFamily(f"{family} has no canonical rotation")
        rot = family.rot_order(n)
        return GroupElement(family, n, (0, 1 % rot if rot else 1))

    @staticmethod
    def omega(family, n):
        """The reflection generator (the generator w for the quaternionic family)."""
        if not (family.is_zlift and family.reflective):
            raise UnsupportedFamily(f"{family} has no reflection generator")
        return GroupElement(family, n, (1, 0))

    @staticmethod
    def rotation(family, n, a):
        rot = family.rot_order(n)
        return GroupElement(family, n, (0, a % rot if rot else a))

    # -- protocol ----------------------------------------------------------

    def _quat_shift(self):
        return self.family.modulus * (self.n + 1) if self.family.kind == QUATERNIONIC else 0

    def __matmul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        if self.family != other.family:
            raise FamilyMismatch(f"{self.family} vs {other.family}")
        if self.n != other.n:
            raise IndexMismatch(f"levels {self.n} and {other.n} differ")
        kind = self.family.kind
        if kind == DELTA:
            return self
        if kind == WEYL:
            s1, p1 = self.payload
            s2, p2 = other.payload
            perm = tuple(p1[p2[i]] for i in range(self.n + 1))
            signs = tuple(s2[i] ^ s1[p2[i]] for i in range(self.n + 1))
            return GroupElement(self.family, self.n, (signs, perm))
        s, a = kernel.group_compose(*self.payload, *other.payload,
                                    self.family.rot_order(self.n), self._quat_shift())
        return GroupElement(self.family, self.n, (s, a))

    def inverse(self):
        kind = self.family.kind
        if kind == DELTA:
            return self
        if kind == WEYL:
            signs, perm = self.payload
            inv = [0] * (self.n + 1)
            for i, j in enumerate(perm):
                inv[j] = i
            return GroupElement(self.family, self.n,
                                (tuple(signs[inv[i]] for i in range(self.n + 1)), tuple(inv)))
        s, a = kernel.group_inverse(*self.payload, self.family.rot_order(self.n),
                                    self._quat_shift())
        return GroupElement(self.family, self.n, (s, a))

    @property
    def is_identity(self):
        return self == GroupElement.identity(self.family, self.n)

    def order(self):
        k, g = 1, self
        while not g.is_identity:
            g = g @ self
            k += 1
            if k > 10 ** 6:
                raise InfiniteFamily("element of infinite order")
        return k

    def zmap(self, l):
        """Action on the integer line (z-lift families only)."""
        s, a = self.payload
        return a - l if s else l - a

    def perm(self):
        """Underlying permutation of {0..n} (the functor lambda_n)."""
        kind = self.family.kind
        if kind == DELTA:
            return tuple(range(self.n + 1))
        if kind == WEYL:
            return self.payload[1]
        h = self.n + 1
        return tuple(self.zmap(i) % h for i in range(h))


def group_elements(family, n):
    """All automorphisms of [n]; duplicate free, identity first."""
    if not family.finite:
        raise InfiniteFamily(f"{family} has infinite automorphism groups")
    kind = family.kind
    if kind == DELTA:
        return [GroupElement(family, n, ())]
    if kind == WEYL:
        return [GroupElement(family, n, (signs, perm))
                for perm in itertools.permutations(range(n + 1))
                for signs in itertools.product((0, 1), repeat=n + 1)]
    rot = family.rot_order(n)
    out = [GroupElement(family, n, (0, a)) for a in range(rot)]
    if family.reflective:
        out += [GroupElement(family, n, (1, a)) for a in range(rot)]
    return out


def underlying_permutation(g: GroupElement):
    return g.perm()


# ---------------------------------------------------------------------------
# morphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CsgMorphism:
    """A morphism [m] -> [n] in canonical factorization normal form
    i(delta) o g."""

    family: CsgFamily
    m: int
    n: int
    delta: DeltaMap
    g: GroupElement

    def __post_init__(self):
        if (self.delta.m, self.delta.n) != (self.m, self.n):
            raise IndexMismatch("delta part has wrong indices")
        if self.g.n != self.m or self.g.family != self.family:
            raise IndexMismatch("group part must be an automorphism of the source")

    @staticmethod
    def identity(family, n):
        return CsgMorphism(family, n, n, DeltaMap.identity(n), GroupElement.identity(family, n))

    @staticmethod
    def from_delta(family, d: DeltaMap):
        return CsgMorphism(family, d.m, d.n, d, GroupElement.identity(family, d.m))

    @staticmethod
    def from_group(g: GroupElement):
        return CsgMorphism(g.family, g.n, g.n, DeltaMap.identity(g.n), g)

    @property
    def is_identity(self):
        return self.m == self.n and self.delta.is_identity and self.g.is_identity

    def __matmul__(self, other):
        if not isinstance(other, CsgMorphism):
            return NotImplemented
        if self.family != other.family:
            raise FamilyMismatch(f"{self.family} vs {other.family}")
        if self.m != other.n:
            raise IndexMismatch(
                f"cannot compose [{other.m}]->[{other.n}] into [{self.m}]->[{self.n}]")
        fam = self.family
        if fam.kind == DELTA:
            return CsgMorphism.from_delta(fam, self.delta @ other.delta)
        if fam.kind == WEYL:
            res = SignedFiberMap.from_normal(self) @ SignedFiberMap.from_normal(other)
            d, g = res.factor(fam)
            return CsgMorphism(fam, other.m, self.n, d, g)
        quat = fam.modulus * (self.n + 1) if fam.kind == QUATERNIONIC else 0
        d, a, s = kernel.compose_nf(
            self.delta.values, *self.g.payload, self.m, self.n,
            other.delta.values, *other.g.payload, other.m,
            fam.rot_order(other.m), quat)
        return CsgMorphism(fam, other.m, self.n, DeltaMap(other.m, self.n, d),
                           GroupElement(fam, other.m, (s, a)))

    def window(self):
        """Values at 0..m of the integer-line lift (z-lift families)."""
        return kernel.window_of(self.delta.values, *self.g.payload, self.m, self.n)

    def underlying_map(self):
        """The set map {0..m} -> {0..n} (the functor lambda)."""
        if self.family.kind == DELTA:
            return self.delta.values
        if self.family.kind == WEYL:
            perm = self.g.payload[1]
            return tuple(self.delta.values[perm[i]] for i in range(self.m + 1))
        return kernel.perm_of(self.delta.values, *self.g.payload, self.m, self.n)


def star_actions(g: GroupElement, phi: DeltaMap):
    """The unique (g*phi, phi*g) with g o phi = (g*phi) o (phi*g)."""
    if g.n != phi.n:
        raise IndexMismatch(f"group element lives at [{g.n}], map targets [{phi.n}]")
    fam = g.family
    if fam.kind == DELTA:
        return phi, GroupElement.identity(fam, phi.m)
    if fam.kind == WEYL:
        u = SignedFiberMap.from_normal(CsgMorphism.from_group(g)) \
            @ SignedFiberMap.from_delta(phi)
        d, h = u.factor(fam)
        return d, h
    d, a, s = kernel.star_nf(*g.payload, phi.values, phi.m, phi.n, fam.rot_order(phi.m))
    return DeltaMap(phi.m, phi.n, d), GroupElement(fam, phi.m, (s, a))


def compose(u: CsgMorphism, v: CsgMorphism):
    return u @ v


def hom_set(family, m, n):
    """All morphisms [m] -> [n]; |Hom| = C(m+n+1, m+1) * |G_m|."""
    gs = group_elements(family, m)
    return [CsgMorphism(family, m, n, d, g) for d in delta_maps(m, n) for g in gs]


def dualize(u: CsgMorphism):
    """Interstice duality: contravariant, identity on objects, D o D = Id."""
    fam = u.family
    if not fam.is_zlift:
        raise FamilyMismatch(f"duality is defined for the planar families, not {fam}")
    d, a, s = kernel.dual_nf(u.delta.values, *u.g.payload, u.m, u.n, fam.rot_order(u.n))
    return CsgMorphism(fam, u.n, u.m, DeltaMap(u.n, u.m, d), GroupElement(fam, u.n, (s, a)))


def parity(family):
    """The canonical parity map on G_0, as a dict GroupElement -> bit."""
    if not family.is_planar:
        raise UnsupportedFamily(f"no canonical parity for {family}")
    if not family.finite:
        raise InfiniteFamily("enumerate parity only for finite families; "
                             "use element.payload[0] pointwise")
    return {g: g.payload[0] for g in group_elements(family, 0)}


# ---------------------------------------------------------------------------
# the Weyl family: general signed fiber maps and the classifying functor
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SignedFiberMap:
    """A morphism [m] -> [n] of the Weyl family in full generality: a set
    map with a signed linear order on every fiber."""

    m: int
    n: int
    mapping: tuple            # mapping[i] = image of i
    orders: tuple             # orders[j] = fiber over j, listed in its linear order
    signs: tuple              # signs[i] in {0, 1}

    def __post_init__(self):
        seen = sorted(x for fib in self.orders for x in fib)
        if seen != list(range(self.m + 1)):
            raise ValueError("fiber orders do not partition the source")
        for j, fib in enumerate(self.orders):
            if any(self.mapping[x] != j for x in fib):
                raise ValueError("fiber orders inconsistent with mapping")

    @staticmethod
    def identity(n):
        return SignedFiberMap(n, n, tuple(range(n + 1)),
                              tuple((i,) for i in range(n + 1)), (0,) * (n + 1))

    @staticmethod
    def from_delta(d: DeltaMap):
        fibers = tuple(tuple(i for i in range(d.m + 1) if d.values[i] == j)
                       for j in range(d.n + 1))
        return SignedFiberMap(d.m, d.n, d.values, fibers, (0,) * (d.m + 1))

    @staticmethod
    def from_normal(u: CsgMorphism):
        """Expand i(delta) o (signs, perm) into map + fiber orders."""
        signs, perm = u.g.payload
        mapping = tuple(u.delta.values[perm[i]] for i in range(u.m + 1))
        fibers = []
        for j in range(u.n + 1):
            fib = [i for i in range(u.m + 1) if mapping[i] == j]
            fib.sort(key=lambda i: perm[i])
            fibers.append(tuple(fib))
        return SignedFiberMap(u.m, u.n, mapping, tuple(fibers), signs)

    def __matmul__(self, other):
        """Lexicographic signed composition self o other."""
        if not isinstance(other, SignedFiberMap):
            return NotImplemented
        if other.n != self.m:
            raise IndexMismatch("fiber maps not composable")
        mapping = tuple(self.mapping[other.mapping[i]] for i in range(other.m + 1))
        fibers = []
        for k in range(self.n + 1):
            fib = []
            for j in self.orders[k]:
                fib.extend(other.orders[j])
            fibers.append(tuple(fib))
        signs = tuple(other.signs[i] ^ self.signs[other.mapping[i]]
                      for i in range(other.m + 1))
        return SignedFiberMap(other.m, self.n, mapping, tuple(fibers), signs)

    def factor(self, family):
        """Canonical factorization into (DeltaMap, weyl GroupElement)."""
        dvals = tuple(sorted(self.mapping))
        # positions of the delta fiber over j form a consecutive block
        start = [0] * (self.n + 2)
        for v in dvals:
            start[v + 1] += 1
        for j in range(self.n + 1):
            start[j + 1] += start[j]
        perm = [0] * (self.m + 1)
        for j in range(self.n + 1):
            for offset, i in enumerate(self.orders[j]):
                perm[i] = start[j] + offset
        d = DeltaMap(self.m, self.n, dvals)
        g = GroupElement(family, self.m, (self.signs, tuple(perm)))
        return d, g


def weyl_lift(g: GroupElement):
    """The classifying functor into the Weyl family, on automorphisms.

    Rotations carry sign 0, reflections sign 1; the permutation part is
    lambda(g).  (The equivalent degeneracy-fiber construction is used as
    an independent oracle in the tests.)
    """
    fam = g.family
    wfam = CsgFamily(WEYL)
    if fam.kind == WEYL:
        return GroupElement(wfam, g.n, g.payload)
    if fam.kind == DELTA:
        return GroupElement.identity(wfam, g.n)
    s = g.payload[0]
    return GroupElement(wfam, g.n, ((s,) * (g.n + 1), g.perm()))


def weyl_functor(u: CsgMorphism):
    """The classifying functor on arbitrary morphisms of a z-lift family."""
    fam = CsgFamily(WEYL)
    if u.family.kind == WEYL:
        return u
    return CsgMorphism(fam, u.m, u.n, u.delta, weyl_lift(u.g))


# ---------------------------------------------------------------------------
# text serialization
# ---------------------------------------------------------------------------

def format_morphism(u: CsgMorphism):
    d = ",".join(str(v) for v in u.delta.values)
    fam = u.family
    if fam.kind == DELTA:
        gtxt = "id"
    elif fam.kind == WEYL:
        signs, perm = u.g.payload
        gtxt = "e%sp%s" % ("".join(map(str, signs)), ",".join(map(str, perm)))
    else:
        s, a = u.g.payload
        if fam.kind in (CYCLIC, PARACYCLIC):
            gtxt = f"a{a}"
        elif fam.kind == QUATERNIONIC:
            gtxt = f"s{s}a{a}"
        else:
            gtxt = f"r{s}a{a}"
    return f"{fam.token()}:{u.n}<-{u.m} | delta=[{d}] | g={gtxt}"


_MOR_RE = re.compile(
    r"^\s*(?P<fam>[a-z_0-9]+):(?P<n>\d+)<-(?P<m>\d+)\s*\|\s*delta=\[(?P<delta>[-0-9,\s]*)\]"
    r"\s*\|\s*g=(?P<g>\S+)\s*$")


def parse_morphism(text):
    mo = _MOR_RE.match(text)
    if not mo:
        raise ValueError(f"cannot parse morphism {text!r}")
    fam = parse_family(mo.group("fam"))
    m, n = int(mo.group("m")), int(mo.group("n"))
    dvals = tuple(int(x) for x in mo.group("delta").split(",")) if mo.group("delta").strip() else ()
    gtxt = mo.group("g")
    if fam.kind == DELTA:
        g = GroupElement.identity(fam, m)
    elif fam.kind == WEYL:
        em = re.match(r"^e([01]+)p([-0-9,]+)$", gtxt)
        if not em:
            raise ValueError(f"bad weyl payload {gtxt!r}")
        signs = tuple(int(c) for c in em.group(1))
        perm = tuple(int(x) for x in em.group(2).split(","))
        g = GroupElement(fam, m, (signs, perm))
    else:
        gm = re.match(r"^(?:[rs](?P<s>[01]))?a(?P<a>-?\d+)$", gtxt)
        if not gm:
            raise ValueError(f"bad payload {gtxt!r}")
        s = int(gm.group("s") or 0)
        g = GroupElement(fam, m, (s, int(gm.group("a"))))
    return CsgMorphism(fam, m, n, DeltaMap(m, n, dvals), g)
