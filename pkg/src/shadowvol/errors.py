"""Exception types raised by the pipeline.

Every error carries a short machine-readable ``code`` and an optional
``details`` dict so the CLI can serialize it without string parsing.
"""


class ShadowVolError(Exception):
    code = "error"
    exit_code = 1

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_json(self):
        return {"error": self.code, "message": self.message, "details": self.details}


class MalformedPd(ShadowVolError):
    code = "MalformedPd"


class NonPlanar(ShadowVolError):
    code = "NonPlanar"


class TrivialComponent(ShadowVolError):
    code = "TrivialComponent"


class RelationViolated(ShadowVolError):
    code = "RelationViolated"


class InconsistentPropagation(ShadowVolError):
    code = "InconsistentPropagation"


class SearchExhausted(ShadowVolError):
    code = "SearchExhausted"


class GenericityViolated(ShadowVolError):
    code = "GenericityViolated"


class ArgumentOnCut(ShadowVolError):
    code = "ArgumentOnCut"
    exit_code = 2


class NotAtSaddle(ShadowVolError):
    code = "NotAtSaddle"
    exit_code = 2


class DegenerateTetrahedron(ShadowVolError):
    code = "DegenerateTetrahedron"


class GluingMismatch(ShadowVolError):
    code = "GluingMismatch"
    exit_code = 2


class NotIntegral(ShadowVolError):
    code = "NotIntegral"
    exit_code = 2


class UnknownExample(ShadowVolError):
    code = "UnknownExample"


class InvalidJob(ShadowVolError):
    code = "InvalidJob"
