"""Exception types shared across the package."""


class InvalidTreeError(ValueError):
    """Parent array does not describe a directed rooted tree."""


class MultipleRootsError(InvalidTreeError):
    """More than one entry claims to be the root."""


class CycleError(InvalidTreeError):
    """Parent pointers contain a cycle (which includes the no-root case)."""


class DegreeBoundError(InvalidTreeError):
    """A node exceeds the declared degree bound, or the bound is < 1."""


class SelfQueryError(ValueError):
    """Path queries and ancestor tests are undefined for i == j."""


class NotAnEdgeError(ValueError):
    """The given (parent, child) pair is not an edge of the tree."""


class EnumerationCapError(ValueError):
    """Exhaustive tree enumeration requested above the supported size."""


class InfeasibleDegreeError(ValueError):
    """No tree with the requested node count satisfies the degree bound."""


class TreeFormatError(ValueError):
    """Tree text file is malformed."""


class InconsistentOracleError(RuntimeError):
    """Oracle answers are consistent with no directed rooted tree.

    Only reachable when the oracle lies (noisy regime); an exact oracle
    never triggers this.
    """
