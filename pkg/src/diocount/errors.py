"""Exception hierarchy. Every domain failure derives from DiocountError so the CLI can map it to exit code 2."""


class DiocountError(Exception):
    """Base class for domain errors."""

    code = "domain-error"

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self)}


class InvalidRepresentation(DiocountError, ValueError):
    code = "invalid-representation"


class NoThresholdError(DiocountError):
    code = "no-threshold"


class DivisionByZero(DiocountError, ZeroDivisionError):
    code = "division-by-zero"


class PreconditionError(DiocountError, ValueError):
    code = "precondition"


class UndefinedGcd(DiocountError):
    code = "undefined-gcd"


class NoInverse(DiocountError):
    code = "no-inverse"


class HypothesisViolation(DiocountError):
    code = "hypothesis-violation"


class CoprimalityError(DiocountError, ValueError):
    code = "coprimality"


class ConsistencyError(DiocountError):
    """Raised when an exact identity that must hold does not; indicates an arithmetic bug."""

    code = "internal-consistency"


class ArityError(DiocountError, ValueError):
    code = "arity"


class RankError(DiocountError, ValueError):
    code = "rank"


class EnvelopeError(DiocountError):
    code = "unsupported-size"


class NonPolynomialEvidence(DiocountError):
    code = "non-polynomial-evidence"


class AmbiguousChamber(DiocountError):
    code = "ambiguous-chamber"

    def __init__(self, message: str, candidates=()):
        super().__init__(message)
        self.candidates = list(candidates)

    def to_json(self) -> dict:
        out = super().to_json()
        out["candidates"] = self.candidates
        return out


class NotOnePrime(DiocountError):
    code = "not-1-prime"


class DegenerateMatrix(DiocountError, ValueError):
    code = "degenerate-matrix"


class InfiniteCount(DiocountError):
    code = "infinite-count"


class ConjectureCandidate(DiocountError):
    """No validated quasi-polynomial fit was found; carries the evidence."""

    code = "conjecture-counterexample-candidate"

    def __init__(self, message: str, report: dict | None = None):
        super().__init__(message)
        self.report = report or {}

    def to_json(self) -> dict:
        out = super().to_json()
        out["report"] = self.report
        return out

    def to_json(self) -> dict:
        out = super().to_json()
        out["report"] = self.report
        return out
