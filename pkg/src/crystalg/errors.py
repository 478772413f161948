"""Exception hierarchy shared across the package."""


class CrystalError(Exception):
    """Base class for all crystalg errors."""


class RingMismatchError(CrystalError):
    """Operands belong to different rings or data."""


class DatumShapeError(CrystalError):
    """Malformed datum, group table, module or file content."""


class InvalidDatumError(CrystalError):
    """An operation required a datum whose consistency checks fail."""


class NotADomainError(CrystalError):
    """A fraction-field or divisibility operation needs a domain."""


class UndecidableError(CrystalError):
    """The requested check has no finite procedure for this ring."""


class SizeCapError(CrystalError):
    """An exhaustive search exceeds the configured desk-scale cap."""


class InternalCheckError(CrystalError):
    """A result failed its own self-verification before being returned."""
