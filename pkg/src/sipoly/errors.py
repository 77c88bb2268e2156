"""Exception hierarchy shared by every sipoly module."""


class SipolyError(Exception):
    """Base class for all library errors."""


# -- map construction -------------------------------------------------------

class MapError(SipolyError):
    pass


class AsymmetricIncidence(MapError):
    """Neighbor lists do not pair up: v listed under u without u under v."""


class EmptyRotation(MapError):
    """A vertex has no incident darts."""


class Disconnected(MapError):
    pass


class NonPlanar(MapError):
    pass


# -- polyhedron validation --------------------------------------------------

class ValidationError(SipolyError):
    """A map failed one of the polyhedron gates."""


class NotSimple(ValidationError):
    pass


class NotGenusZero(ValidationError):
    pass


class NotThreeConnected(ValidationError):
    pass


class TooSmall(ValidationError):
    pass


# -- operations -------------------------------------------------------------

class NotReducible(SipolyError):
    """The chosen edge violates one of the remove-contract preconditions."""


class InvalidMove(SipolyError):
    """An expansion move does not produce a strongly involutive polyhedron."""


class BoundMismatch(SipolyError):
    pass


# -- I/O --------------------------------------------------------------------

class ParseError(SipolyError):
    pass


class SchemaError(SipolyError):
    pass


class UnsupportedFormat(SipolyError):
    pass
