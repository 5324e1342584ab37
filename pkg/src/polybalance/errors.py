"""Exception hierarchy shared by every module."""


class GeometryError(ValueError):
    """Base class for domain errors raised by polybalance."""


class DegenerateInput(GeometryError):
    pass


class ParallelLine(GeometryError):
    pass


class DegenerateTetrahedron(GeometryError):
    pass


class SchemaError(GeometryError):
    pass


class ValidationFailed(GeometryError):
    def __init__(self, report):
        self.report = report
        super().__init__("invalid polyhedron: " + "; ".join(str(v) for v in report.violations))


class CenterNotInterior(GeometryError):
    pass


class NotIncident(GeometryError):
    pass


class NotATetrahedron(GeometryError):
    pass


class DegenerateDirections(GeometryError):
    pass


class DegenerateClassification(GeometryError):
    pass


class NoObtusePath(GeometryError):
    pass


class DegenerateCut(GeometryError):
    pass


class VerificationFailed(GeometryError):
    pass


class SearchExhausted(GeometryError):
    pass


class TheoremViolation(AssertionError):
    """A sampled instance contradicts a proven theorem; always a bug."""


class VertexExitEncountered(GeometryError):
    pass


class CycleDetected(GeometryError):
    pass


class DegenerateTip(GeometryError):
    pass


class AllFacesTriangular(GeometryError):
    pass


class BendFailed(GeometryError):
    pass


class GeneralPositionViolated(GeometryError):
    pass


class IllegalFaceVector(GeometryError):
    pass


class ExcludedTetrahedron(GeometryError):
    pass


class ConstructionFailed(GeometryError):
    pass
