"""Exception types raised across the package."""


class QlcuError(Exception):
    """Base class for all package errors."""


class NotInSpanError(QlcuError):
    """The target matrix is not a linear combination of the given images."""

    def __init__(self, residual, tol):
        self.residual = float(residual)
        self.tol = float(tol)
        super().__init__(
            f"NotInSpanError: residual {self.residual:.3e} exceeds tol {self.tol:.1e}"
        )


class NonAbelianError(QlcuError):
    """Operation is only implemented for abelian groups with known cyclic structure."""


class PhaseRecoveryError(QlcuError):
    """Two blocks are not related by a unit-modulus scalar."""


class NonUnitaryCirculantError(QlcuError):
    pass


class NonUnitaryTargetError(QlcuError):
    pass


class OrderError(QlcuError):
    """A matrix does not have the order required by the requested group."""


class SizeCapError(QlcuError):
    pass


class MissingCostError(QlcuError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ParseError(QlcuError):
    """Malformed serialized circuit or spec; ``position`` locates the problem."""

    def __init__(self, message, position=None):
        self.position = position
        where = f" at {position}" if position is not None else ""
        super().__init__(f"{message}{where}")
