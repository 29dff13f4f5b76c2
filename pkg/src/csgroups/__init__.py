"""Exact combinatorics of planar crossed simplicial groups.

Subpackage map:
  families     the seven planar families, Weyl, Delta
  core         morphism calculus (canonical factorization normal form)
  sets         structured finite sets and interstice duality
  graphs       structured graphs, contraction, thickening, gauge classes
  trees        augmented structured trees and the grafting operad
  frobenius    twisted algebras, traces, Nakayama, graph state sums
  segal        levelwise-finite functor objects, membranes, 2-Segal checks,
               graph realizations and categorified state sums
  tessellation polygon tessellation posets, Stasheff lattices, dual graphs
  cli          command line front end
"""

from .families import (  # noqa: F401
    CsgFamily,
    cyclic,
    delta,
    dihedral,
    paracyclic,
    paradihedral,
    parse_family,
    quaternionic,
    weyl,
)
from .kernel import BACKEND as KERNEL_BACKEND  # noqa: F401

__version__ = "0.1.0"
