"""
Exceptions raised by eisenzeta

Every error derives from `EisenZetaError` and from the builtin exception a
caller would naturally catch for that situation (`ValueError` for bad input,
`RuntimeError` for internal-consistency failures, and so on).
"""


class EisenZetaError(Exception):
    """Base class for all eisenzeta errors"""


class CycloDivisionByZero(EisenZetaError, ZeroDivisionError):
    """Inversion or division by the zero element of Q(zeta_24)"""


class NotRationalError(EisenZetaError, ValueError):
    """A cyclotomic value was narrowed to a rational but has irrational part"""


class NotPrimeError(EisenZetaError, ValueError):
    """A prime was required"""


class EvenPrimeError(EisenZetaError, ValueError):
    """An odd prime was required but 2 was given"""


class CapExceededError(EisenZetaError, RuntimeError):
    """Group closure grew beyond the configured element cap"""


class SingularGeneratorError(EisenZetaError, ValueError):
    """A generator matrix is not invertible"""


class LatticeMismatchError(EisenZetaError, ValueError):
    """Series operands live on incompatible exponent lattices"""


class OrderExceededError(EisenZetaError, IndexError):
    """A coefficient beyond the truncation order was requested"""


class NoMinimumDistanceError(EisenZetaError, ValueError):
    """The enumerator is x^n alone"""


class DegenerateEnumeratorError(EisenZetaError, ValueError):
    """The polynomial is not a usable formal weight enumerator"""


class NonNormalizableError(EisenZetaError, ValueError):
    """A nonzero average has a vanishing x^l coefficient"""


class SingularSystemError(EisenZetaError, RuntimeError):
    """The zeta linear system has no unique solution"""


class TruncationLeakError(EisenZetaError, RuntimeError):
    """A series result carries terms beyond the admissible degree"""


class InvalidWeightError(EisenZetaError, ValueError):
    """The Eisenstein polynomial vanishes at the requested weight"""


class RootFindingDivergedError(EisenZetaError, RuntimeError):
    """Simultaneous root iteration did not converge"""


class NotOnCircleError(EisenZetaError, ValueError):
    """Roots are not on the critical circle, so interlacing is undefined"""


class ZeroBernoulliError(EisenZetaError, ValueError):
    """The Bernoulli number in the Eisenstein series normalization is zero"""


class TableMismatchError(EisenZetaError, RuntimeError):
    """A reproduced table differs from its embedded expected strings"""


class ConfigError(EisenZetaError, ValueError):
    """Invalid run configuration"""
