"""Exception types shared across the library."""


class SubfieldScanError(Exception):
    """Base class for all library errors."""


class BudgetExceeded(SubfieldScanError):
    """A bounded search (factoring, splitting) ran out of its iteration budget."""


class NonCoprimeModuli(SubfieldScanError):
    pass


class DegreeNotDivisible(SubfieldScanError):
    pass


class NotSquarefree(SubfieldScanError):
    pass


class InputIsPower(SubfieldScanError):
    """The defining polynomial is an exact e-th power, so it is reducible."""


class LeadingCoefficientVanishes(SubfieldScanError):
    pass


class NotCoprimeCofactor(SubfieldScanError):
    pass


class DependentBasis(SubfieldScanError):
    pass


class NotSplitPrime(SubfieldScanError):
    pass


class BadPrime(SubfieldScanError):
    pass


class PrimeInBasis(SubfieldScanError):
    pass


class NoPrimeFound(SubfieldScanError):
    """No working prime in the configured pool; retry with a larger bound."""


class ZeroExponentVector(SubfieldScanError):
    pass


class RetryLimitExceeded(SubfieldScanError):
    pass


class PolyParseError(SubfieldScanError):
    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


class MultipleVariables(PolyParseError):
    pass
