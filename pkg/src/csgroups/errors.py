"""Exception types shared across the package."""


class CsgError(Exception):
    pass


class InfiniteFamily(CsgError):
    """Raised by enumeration APIs on the paracyclic/paradihedral families."""


class IndexMismatch(CsgError):
    """Object indices of composed morphisms do not line up."""


class FamilyMismatch(CsgError):
    """Operands live over different crossed simplicial groups."""


class UnsupportedFamily(CsgError):
    """The operation is not defined for this family."""


class LoopEdge(CsgError):
    """Contraction of a loop edge was requested."""


class ExternalEdge(CsgError):
    """Contraction of an external half-edge was requested."""


class CycleInSet(CsgError):
    """The given edge set is not a forest."""


class ShapeMismatch(CsgError):
    """An augmented tree does not have the required shape."""


class LabelClash(CsgError):
    """Half-edge or vertex labels collide during a graph operation."""


class ArityMismatch(CsgError):
    """Operadic composition with inconsistent arities."""


class LevelMismatch(CsgError):
    """Chain level and group element level differ."""


class DegenerateForm(CsgError):
    """The bilinear form beta_2 is degenerate."""


class RelationViolation(CsgError):
    """Supplied functors or tables violate the declared relations."""


class BoundExceeded(CsgError):
    """A requested computation exceeds the configured dimension bound."""
