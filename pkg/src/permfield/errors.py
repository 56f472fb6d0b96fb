"""Exception types raised across the package."""


class PermfieldError(Exception):
    """Base class for every error this package raises deliberately."""


# --- field construction and arithmetic ---

class NotPrime(PermfieldError):
    pass


class ReducibleModulus(PermfieldError):
    pass


class FieldTooLarge(PermfieldError):
    pass


class NonMonic(PermfieldError):
    pass


class DivisionByZero(PermfieldError):
    pass


class NotADivisor(PermfieldError):
    pass


class LogOfZero(PermfieldError):
    pass


class TableUnavailable(PermfieldError):
    """Discrete logs were requested on a field built without log tables."""


# --- cyclotomic integers ---

class MixedPrimes(PermfieldError):
    pass


class NonIntegralDivision(PermfieldError):
    """An exact coordinate-wise division left a remainder; this signals a bug,
    not bad input."""


# --- permutation-polynomial machinery ---

class ZeroCoefficient(PermfieldError):
    pass


class FieldTooLargeForCharsumCheck(PermfieldError):
    pass


class DiagramDoesNotCommute(PermfieldError):
    pass


class NotSurjective(PermfieldError):
    pass


class SizeMismatch(PermfieldError):
    pass


class CoefficientsNotInSubfield(PermfieldError):
    pass


# --- family constructors ---

class KDivisibleBy3(PermfieldError):
    pass


class EvenM(PermfieldError):
    pass


class ZeroU(PermfieldError):
    pass


# --- character sums ---

class NoValidS(PermfieldError):
    """No exponent s with d | p^s + 1 exists in range, or the closed form's
    parity bookkeeping does not apply to these parameters."""


class ParameterContractViolated(PermfieldError):
    pass


# --- differential analysis ---

class ZeroDerivativeDirection(PermfieldError):
    pass


class ZeroLeadingDirection(PermfieldError):
    pass


class CriterionMismatch(PermfieldError):
    """An algebraic root-counting criterion disagreed with the exhaustive
    scan; this signals a bug."""


class PreconditionViolated(PermfieldError):
    pass


class NoWitnessFound(PermfieldError):
    pass
