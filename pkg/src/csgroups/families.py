"""The planar crossed simplicial groups, the Weyl group family, and Delta.

A family is identified by a kind tag plus an integer modulus: the N-cyclic
and N-dihedral families carry the subdivision order N (N=1 recovering the
cyclic and dihedral categories) and the quaternionic family carries M.

Automorphisms of [n] are parametrised uniformly: the six "rotation type"
families store (reflection bit s, shift a), acting on the integer line by

    s = 0:  l |-> l - a          (a power of the rotation tau)
    s = 1:  l |-> a - l          (omega * tau^a, with omega: l |-> -l)

with a reduced modulo the rotation order rot_order(n).  For the
quaternionic family the reflection w squares to the central half-turn
tau^{M(n+1)}, which the composition law accounts for; the payload grammar
is unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import InfiniteFamily, UnsupportedFamily

DELTA = "delta"
CYCLIC = "cyclic"
DIHEDRAL = "dihedral"
PARACYCLIC = "paracyclic"
PARADIHEDRAL = "paradihedral"
QUATERNIONIC = "quaternionic"
WEYL = "weyl"

_KINDS = (DELTA, CYCLIC, DIHEDRAL, PARACYCLIC, PARADIHEDRAL, QUATERNIONIC, WEYL)

# families whose morphisms are modelled by monotone equivariant maps Z -> Z
ZLIFT_KINDS = (CYCLIC, DIHEDRAL, PARACYCLIC, PARADIHEDRAL, QUATERNIONIC)


@dataclass(frozen=True)
class CsgFamily:
    kind: str
    modulus: int = 1

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if self.kind not in (CYCLIC, DIHEDRAL, QUATERNIONIC) and self.modulus != 1:
            raise ValueError(f"family {self.kind} carries no modulus")

    # -- structural predicates -------------------------------------------

    @property
    def is_planar(self) -> bool:
        return self.kind in ZLIFT_KINDS

    @property
    def is_zlift(self) -> bool:
        return self.kind in ZLIFT_KINDS

    @property
    def finite(self) -> bool:
        return self.kind not in (PARACYCLIC, PARADIHEDRAL)

    @property
    def reflective(self) -> bool:
        """Whether automorphism groups contain order-reversing elements."""
        return self.kind in (DIHEDRAL, PARADIHEDRAL, QUATERNIONIC, WEYL)

    # -- sizes --------------------------------------------------------------

    def rot_order(self, n: int) -> int:
        """Order of the rotation tau_n; 0 encodes infinite order."""
        if self.kind in (CYCLIC, DIHEDRAL):
            return self.modulus * (n + 1)
        if self.kind == QUATERNIONIC:
            return 2 * self.modulus * (n + 1)
        if self.kind in (PARACYCLIC, PARADIHEDRAL):
            return 0
        raise UnsupportedFamily(f"{self} has no rotation")

    def group_order(self, n: int) -> int:
        """|Aut([n])|."""
        if self.kind == DELTA:
            return 1
        if self.kind == CYCLIC:
            return self.modulus * (n + 1)
        if self.kind == DIHEDRAL:
            return 2 * self.modulus * (n + 1)
        if self.kind == QUATERNIONIC:
            return 4 * self.modulus * (n + 1)
        if self.kind == WEYL:
            return 2 ** (n + 1) * factorial(n + 1)
        raise InfiniteFamily(f"{self} has infinite automorphism groups")

    def image_order(self, n: int) -> int:
        """Size of the image of lambda_n: Aut([n]) -> S_{n+1}."""
        if self.kind == DELTA:
            return 1
        if self.kind == CYCLIC:
            return n + 1
        if self.kind in (DIHEDRAL, QUATERNIONIC):
            if n == 0:
                return 1
            if n == 1:
                return 2
            return 2 * (n + 1)
        if self.kind == WEYL:
            return factorial(n + 1)
        raise InfiniteFamily(f"{self} has infinite automorphism groups")

    def kernel_order(self, n: int) -> int:
        """|ker lambda_n|, the automorphism group of a single order."""
        return self.group_order(n) // self.image_order(n)

    # -- serialization ---------------------------------------------------

    def token(self) -> str:
        if self.kind == CYCLIC:
            return "lambda" if self.modulus == 1 else f"lambda_{self.modulus}"
        if self.kind == DIHEDRAL:
            return "xi" if self.modulus == 1 else f"xi_{self.modulus}"
        if self.kind == QUATERNIONIC:
            return f"nabla_{self.modulus}"
        if self.kind == PARACYCLIC:
            return "lambda_inf"
        if self.kind == PARADIHEDRAL:
            return "xi_inf"
        return self.kind

    def __str__(self):
        return self.token()


def delta() -> CsgFamily:
    return CsgFamily(DELTA)


def cyclic(n_fold: int = 1) -> CsgFamily:
    return CsgFamily(CYCLIC, n_fold)


def dihedral(n_fold: int = 1) -> CsgFamily:
    return CsgFamily(DIHEDRAL, n_fold)


def paracyclic() -> CsgFamily:
    return CsgFamily(PARACYCLIC)


def paradihedral() -> CsgFamily:
    return CsgFamily(PARADIHEDRAL)


def quaternionic(m_fold: int = 1) -> CsgFamily:
    return CsgFamily(QUATERNIONIC, m_fold)


def weyl() -> CsgFamily:
    return CsgFamily(WEYL)


def parse_family(token: str) -> CsgFamily:
    token = token.strip().lower()
    if token in ("delta", "weyl"):
        return CsgFamily(token)
    if token in ("lambda", "cyclic"):
        return cyclic(1)
    if token in ("xi", "dihedral"):
        return dihedral(1)
    if token in ("lambda_inf", "paracyclic"):
        return paracyclic()
    if token in ("xi_inf", "paradihedral"):
        return paradihedral()
    for prefix, maker in (("lambda_", cyclic), ("xi_", dihedral), ("nabla_", quaternionic)):
        if token.startswith(prefix):
            return maker(int(token[len(prefix):]))
    if token == "nabla":
        return quaternionic(1)
    raise ValueError(f"cannot parse family token {token!r}")


#: planar families with modulus bounds used by the exhaustive suites
def finite_planar_families(max_modulus: int = 3):
    fams = []
    for n_fold in range(1, max_modulus + 1):
        fams.append(cyclic(n_fold))
    for n_fold in range(1, max_modulus + 1):
        fams.append(dihedral(n_fold))
    for m_fold in range(1, max_modulus + 1):
        fams.append(quaternionic(m_fold))
    return fams
