"""Error types shared across the package.

Everything derives from ValueError so callers can catch broadly, but each
condition gets its own class because the CLI maps them to distinct exit codes.
"""


class CycleDetected(ValueError):
    """The input digraph contains a directed cycle.

    The offending cycle is stored as a list of vertex labels in `cycle`,
    with the understanding that the last label has an edge back to the first.
    """

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("directed cycle: " + " -> ".join(self.cycle))


class DuplicateEdge(ValueError):
    pass


class UnknownLabel(ValueError):
    pass


class NotExtremal(ValueError):
    """The vertex is neither minimal nor maximal in G-order."""


class TooLarge(ValueError):
    """Input exceeds a brute-force size guard."""


class NotIndependent(ValueError):
    """A vertex set contains two adjacent vertices."""


class NotOrthogonal(ValueError):
    """A pair of sets fails disjointness or has an edge from the first to the second."""


class NoBounds(ValueError):
    """The poset lacks a unique minimum or a unique maximum."""


class NotLattice(ValueError):
    """The poset is not a lattice."""


class AmbiguousPairing(ValueError):
    """The join/meet irreducible pairing of an extremal lattice is not unique.

    This signals either a bug or a non-extremal input; instances should be
    recorded, not silently patched.
    """


class NotTrim(ValueError):
    """The lattice is not trim."""
