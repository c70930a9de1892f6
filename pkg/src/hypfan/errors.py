"""Exception hierarchy.

Every error carries a short ``code`` string so reports and the CLI can name
the failure without parsing messages.
"""


class HypfanError(Exception):
    code = "Error"

    def __init__(self, message="", **details):
        super().__init__(message or self.code)
        self.details = details


# complexes
class InvalidComplex(HypfanError):
    code = "InvalidComplex"


class EmptyComplex(InvalidComplex):
    code = "EmptyComplex"


class DanglingDart(InvalidComplex):
    code = "DanglingDart"


class NonQuadrivalentVertex(InvalidComplex):
    code = "NonQuadrivalentVertex"


class SelfPairedDart(InvalidComplex):
    code = "SelfPairedDart"


class NonDiskFace(InvalidComplex):
    code = "NonDiskFace"


class SurfaceMismatch(InvalidComplex):
    code = "SurfaceMismatch"


# involutions
class NotFree(HypfanError):
    code = "NotFree"


class NotInvolutive(HypfanError):
    code = "NotInvolutive"


class NotIncidencePreserving(HypfanError):
    code = "NotIncidencePreserving"


# fans
class UnknownLabel(HypfanError):
    code = "UnknownLabel"


class ZeroVector(HypfanError):
    code = "ZeroVector"


class DimensionMismatch(HypfanError):
    code = "DimensionMismatch"


class DegenerateCorner(HypfanError):
    code = "DegenerateCorner"


# flows
class NonGenericDirection(HypfanError):
    code = "NonGenericDirection"


class InconsistentEdgeSigns(HypfanError):
    code = "InconsistentEdgeSigns"


class CyclicFlowGraph(HypfanError):
    code = "CyclicFlowGraph"


# sphere
class NotBipartite(HypfanError):
    code = "NotBipartite"


class DisjointLoops(HypfanError):
    code = "DisjointLoops"


class NoPairingFound(HypfanError):
    code = "NoPairingFound"


# moves
class NotAVertex(HypfanError):
    code = "NotAVertex"


class VectorOutsideCorner(HypfanError):
    code = "VectorOutsideCorner"


class IncompatibleInput(HypfanError):
    code = "IncompatibleInput"


class NotASpherePair(HypfanError):
    code = "NotASpherePair"


class WouldCreateDegenerateDomain(HypfanError):
    code = "WouldCreateDegenerateDomain"


class FanSearchFailed(HypfanError):
    code = "FanSearchFailed"
