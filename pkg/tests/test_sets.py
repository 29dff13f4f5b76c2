"""Structured sets: closures, order counting, restriction, interstice
duality, the lexicographic calculus and the pentagon property."""

import itertools
from math import factorial

import pytest

from csgroups import families as F
from csgroups.core import CsgMorphism, group_elements, star_actions
from csgroups.errors import InfiniteFamily
from csgroups.sets import (
    StructuredSet,
    closure_of_linear_order,
    double_dual_identification,
    enumerate_orders,
    fiber_orders,
    hom_structured,
    identity_morphism,
    interstice_dual,
    interstice_dual_morphism,
    lexicographic_cyclic,
    linearly_compatible,
    pentagon_witness,
    restrict,
    validate_cyclic_axioms,
)

XI = F.dihedral()
LAM = F.cyclic()


# ---------------------------------------------------------------------------
# closures
# ---------------------------------------------------------------------------

def test_closure_examples():
    S = closure_of_linear_order(LAM, "abc")
    assert S.successor("a") == "b" and S.successor("c") == "a"

    T = closure_of_linear_order(XI, "abcd")
    assert T.order_equal(closure_of_linear_order(XI, "dcba"))
    assert not T.order_equal(closure_of_linear_order(XI, "acbd"))

    # 2-cyclic structure on two elements projects onto the unique cyclic order
    S2 = closure_of_linear_order(F.cyclic(2), "ab")
    assert S2.automorphism_order() == 2
    assert len(enumerate_orders(F.cyclic(2), "ab")) == 1


def test_closure_input_validation():
    with pytest.raises(ValueError):
        closure_of_linear_order(LAM, "")
    with pytest.raises(ValueError):
        closure_of_linear_order(LAM, "aa")


def test_closure_functorial_in_monotone_injections():
    S = closure_of_linear_order(LAM, "abcde")
    sub, incl = restrict(S, set("bde"))
    assert sub == closure_of_linear_order(LAM, "bde")
    assert incl.underlying() == {"b": "b", "d": "d", "e": "e"}


# ---------------------------------------------------------------------------
# order counting
# ---------------------------------------------------------------------------

def test_dihedral_order_counts_from_text():
    assert len(enumerate_orders(XI, "abcd")) == 3
    for size in (3, 4, 5, 6):
        n = size - 1
        classes = enumerate_orders(XI, range(size))
        assert len(classes) == factorial(n) // 2
        assert all(a == 1 for _, a in classes)
    singleton = enumerate_orders(XI, "a")
    assert len(singleton) == 1 and singleton[0][1] == 2


@pytest.mark.parametrize("fam", [F.cyclic(1), F.cyclic(2), F.cyclic(3),
                                 F.dihedral(1), F.dihedral(2), F.dihedral(3),
                                 F.quaternionic(1), F.quaternionic(2), F.quaternionic(3),
                                 F.weyl()])
def test_order_count_formula(fam):
    for size in range(1, 7):
        n = size - 1
        classes = enumerate_orders(fam, range(size))
        assert len(classes) == factorial(size) * fam.kernel_order(n) // fam.group_order(n)
        assert all(a == fam.kernel_order(n) for _, a in classes)
        reps = [s for s, _ in classes]
        for i, s in enumerate(reps):
            for t in reps[i + 1:]:
                assert not s.order_equal(t)


def test_enumerate_orders_infinite_family():
    with pytest.raises(InfiniteFamily):
        enumerate_orders(F.paracyclic(), "abc")


# ---------------------------------------------------------------------------
# restriction
# ---------------------------------------------------------------------------

def test_restrict_cyclic_subset():
    S = closure_of_linear_order(LAM, "abcd")
    sub, incl = restrict(S, {"a", "c"})
    assert sub.frame == ("a", "c")
    assert incl.validate()


def test_restrict_transitive():
    for fam in (LAM, XI, F.cyclic(2), F.quaternionic(1)):
        S = closure_of_linear_order(fam, "abcde")
        direct, _ = restrict(S, {"b", "d"})
        mid, _ = restrict(S, {"b", "c", "d"})
        via, _ = restrict(mid, {"b", "d"})
        assert direct == via


def test_restrict_dihedral_determined_by_diagonal_crossings():
    """A dihedral order on 5 points restricts to one of the 3 classes on
    any 4, and those restrictions pin the order down."""
    classes5 = [s for s, _ in enumerate_orders(XI, range(5))]
    four_subsets = list(itertools.combinations(range(5), 4))
    reference = {sub: [c for c, _ in enumerate_orders(XI, sub)] for sub in four_subsets}
    signatures = []
    for S in classes5:
        sig = []
        for sub in four_subsets:
            r, _ = restrict(S, sub)
            cls = next(i for i, c in enumerate(reference[sub]) if c.order_equal(r))
            sig.append(cls)
        signatures.append(tuple(sig))
    assert len(set(signatures)) == len(classes5)


def test_restrict_torsor_quotient_two_cyclic():
    """Frame transport of the canonical inclusion in the 2-cyclic family:
    restricting a 3-carrier structure to 2 elements is the torsor quotient,
    so exactly kernel-many frame classes collapse."""
    lam2 = F.cyclic(2)
    S = closure_of_linear_order(lam2, "abc")
    sub, incl = restrict(S, {"a", "b"})
    transports = {}
    for g in group_elements(lam2, S.n):
        transports.setdefault(incl.psi_upper(g), []).append(g)
    # the quotient O(I)/~ is a torsor for the smaller group: every class is
    # hit (fibers need not be uniform, ~ identifies by equal transports)
    assert len(transports) == lam2.group_order(sub.n)
    assert sum(len(v) for v in transports.values()) == lam2.group_order(S.n)


@pytest.mark.parametrize("fam", [F.cyclic(2), F.dihedral(1), F.quaternionic(1)])
def test_frame_transport_equivariance(fam):
    """psi*(f.g) = (f*psi)*(g^{-1}) o psi*(f), where f*psi and psi*(f) are
    the delta and group parts of the representative relative to the frame f.
    (This is the displayed torsor equivariance, written for right frame
    actions and classical composition order.)"""
    A = closure_of_linear_order(fam, "abc")
    B = closure_of_linear_order(fam, "xy")
    GB = group_elements(fam, B.n)
    for psi in hom_structured(A, B):
        for h in GB:
            rel = CsgMorphism.from_group(h.inverse()) @ psi.rep
            f_psi, psi_f = rel.delta, rel.g
            for g in GB:
                lhs = (CsgMorphism.from_group((h @ g).inverse()) @ psi.rep).g
                assert lhs == star_actions(g.inverse(), f_psi)[1] @ psi_f


def test_restrict_errors():
    S = closure_of_linear_order(LAM, "abc")
    with pytest.raises(ValueError):
        restrict(S, set())
    with pytest.raises(ValueError):
        restrict(S, {"z"})


# ---------------------------------------------------------------------------
# morphisms
# ---------------------------------------------------------------------------

def test_hom_structured_counts():
    one = closure_of_linear_order(LAM, "x")
    assert len(hom_structured(one, one)) == 1

    A = closure_of_linear_order(XI, "ab")
    B = closure_of_linear_order(XI, "z")
    assert len(hom_structured(A, B)) == 4  # |D_2|


def test_hom_structured_composition_matches_rep_composition():
    A = closure_of_linear_order(XI, "abc")
    B = closure_of_linear_order(XI, "xy")
    C = closure_of_linear_order(XI, "z")
    for psi in hom_structured(A, B)[::3]:
        for chi in hom_structured(B, C)[::2]:
            comp = chi @ psi
            assert comp.rep == chi.rep @ psi.rep
            assert comp.validate()
            got = comp.underlying()
            want = {x: chi.underlying()[psi.underlying()[x]] for x in A.frame}
            assert got == want


def test_identity_and_associativity():
    A = closure_of_linear_order(LAM, "abc")
    B = closure_of_linear_order(LAM, "de")
    C = closure_of_linear_order(LAM, "f")
    idA = identity_morphism(A)
    for psi in hom_structured(A, B):
        assert psi @ idA == psi
    for psi in hom_structured(A, B)[:5]:
        for chi in hom_structured(B, C)[:3]:
            for rho in hom_structured(C, C):
                assert (rho @ chi) @ psi == rho @ (chi @ psi)


# ---------------------------------------------------------------------------
# interstice duality
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("fam", [F.cyclic(1), F.cyclic(2), F.dihedral(1),
                                 F.dihedral(3), F.quaternionic(1), F.quaternionic(2),
                                 F.paracyclic(), F.paradihedral()])
def test_dual_cardinality_and_double_dual(fam):
    for size in range(1, 6):
        S = closure_of_linear_order(fam, [f"x{i}" for i in range(size)])
        D = interstice_dual(S)
        assert len(D.frame) == size
        ident = double_dual_identification(S)
        DD = interstice_dual(D)
        assert StructuredSet(fam, tuple(ident[x] for x in DD.frame)) == S


def test_dual_morphism_contravariant_functor():
    for fam in (LAM, XI, F.quaternionic(1)):
        A = closure_of_linear_order(fam, "pqr")
        B = closure_of_linear_order(fam, "uv")
        C = closure_of_linear_order(fam, "z")
        for psi in hom_structured(A, B):
            dpsi = interstice_dual_morphism(psi)
            assert dpsi.source == interstice_dual(B)
            assert dpsi.target == interstice_dual(A)
        for psi in hom_structured(A, B)[::2]:
            for chi in hom_structured(B, C)[::2]:
                assert (interstice_dual_morphism(chi @ psi)
                        == interstice_dual_morphism(psi) @ interstice_dual_morphism(chi))


def test_dual_is_bijective_on_homs():
    A = closure_of_linear_order(XI, "abc")
    B = closure_of_linear_order(XI, "uv")
    duals = {interstice_dual_morphism(psi).rep for psi in hom_structured(A, B)}
    assert len(duals) == len(hom_structured(A, B))


def test_cyclic_dual_is_linear_refinements():
    """For a cyclic order on n+1 points, interstices biject with the n+1
    linear refinements."""
    S = closure_of_linear_order(LAM, "abcd")
    D = interstice_dual(S)
    assert D.elements == {("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")}


# ---------------------------------------------------------------------------
# lexicographic calculus
# ---------------------------------------------------------------------------

def test_fiber_orders_recover_source_cyclic_order():
    sizes = [(j, k) for j in range(1, 6) for k in range(1, 4)]
    for szj, szk in sizes:
        J = closure_of_linear_order(LAM, [f"j{i}" for i in range(szj)])
        K = closure_of_linear_order(LAM, [f"k{i}" for i in range(szk)])
        for psi in hom_structured(J, K):
            fo = fiber_orders(psi)
            walk = lexicographic_cyclic(K, psi.underlying(), fo)
            assert StructuredSet(LAM, walk).order_equal(J)


def test_cyclic_axioms_hold_for_closures():
    for size in range(1, 6):
        S = closure_of_linear_order(LAM, range(size))
        assert validate_cyclic_axioms(S.frame, S.ternary_relation()) is None


def test_cyclic_axioms_negative_control():
    S = closure_of_linear_order(LAM, range(4))
    rel = S.ternary_relation()
    rel.discard((0, 1, 2))
    assert validate_cyclic_axioms(S.frame, rel) is not None


# ---------------------------------------------------------------------------
# pentagon property
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("size", [5, 6])
def test_pentagon_property_exhaustive(size):
    for S, _ in enumerate_orders(XI, range(size)):
        for x in itertools.permutations(range(size), 5):
            i, ii, iii = pentagon_witness(S, x)
            assert i == ii == iii


def test_linear_compatibility_matches_closure():
    S = closure_of_linear_order(XI, range(4))
    assert linearly_compatible(S, (0, 1, 2, 3))
    assert linearly_compatible(S, (3, 2, 1, 0))
    assert not linearly_compatible(S, (0, 2, 1, 3))
