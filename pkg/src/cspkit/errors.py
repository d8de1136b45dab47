class CspkitError(Exception):
    pass


class OutOfDomain(CspkitError, ValueError):
    pass


class FamilyMismatch(CspkitError, TypeError):
    pass


class PreconditionViolated(CspkitError, ValueError):
    pass


class NegativeExponent(CspkitError, ValueError):
    pass
