"""Exception hierarchy shared by every gpkit layer."""

# Error messages
ERR_UNKNOWN_VERTEX = "Vertex '{vertex}' not found."
ERR_MALFORMED_ELEMENT = "Element {element!r} is not a valid element of G_{vertex}."
ERR_IDENTITY_SYLLABLE = "Syllable of vertex '{vertex}' carries the identity."
ERR_NOT_ASSOCIATIVE = "Multiplication table of G_{vertex} is not associative."
ERR_NO_IDENTITY = "Index 0 of the table of G_{vertex} is not an identity."
ERR_NO_INVERSES = "Table of G_{vertex} has an element without inverse."
ERR_NOT_GENERATING = "Generators {generators} do not generate G_{vertex}."
ERR_REDUCIBLE = "Element {word} is reducible: {reason}."
ERR_DISCONNECTED_SUPPORT = "Support {support} has a disconnected opposite graph."
ERR_ROOT_NOT_FOUND = "No root of {word} found within syllable length {bound}."
ERR_NOT_GEODESIC = "Hyperplane sequence is not a geodesic: {reason}."
ERR_PRECONDITION = "{operation}: {reason}."
ERR_MISSING_METADATA = "Metadata field '{field}' is missing for vertex '{vertex}'."


class GraphProductError(ValueError):
    """Base class for all gpkit errors."""


class UnknownVertexError(GraphProductError):
    def __init__(self, vertex: str):
        super().__init__(ERR_UNKNOWN_VERTEX.format(vertex=vertex))
        self.vertex = vertex


class MalformedElementError(GraphProductError):
    def __init__(self, vertex: str, element):
        super().__init__(ERR_MALFORMED_ELEMENT.format(vertex=vertex, element=element))
        self.vertex = vertex
        self.element = element


class InvalidGroupSpecError(GraphProductError):
    pass


class ReducibleElementError(GraphProductError):
    def __init__(self, word: str, reason: str):
        super().__init__(ERR_REDUCIBLE.format(word=word or "1", reason=reason))


class DisconnectedSupportError(GraphProductError):
    def __init__(self, support):
        super().__init__(ERR_DISCONNECTED_SUPPORT.format(support=sorted(support)))
        self.support = frozenset(support)


class RootNotFoundError(GraphProductError):
    def __init__(self, word: str, bound: int):
        super().__init__(ERR_ROOT_NOT_FOUND.format(word=word or "1", bound=bound))
        self.bound = bound


class NotGeodesicError(GraphProductError):
    def __init__(self, reason: str):
        super().__init__(ERR_NOT_GEODESIC.format(reason=reason))


class PreconditionError(GraphProductError):
    def __init__(self, operation: str, reason: str):
        super().__init__(ERR_PRECONDITION.format(operation=operation, reason=reason))
        self.operation = operation


class MissingMetadataError(GraphProductError):
    def __init__(self, field: str, vertex: str):
        super().__init__(ERR_MISSING_METADATA.format(field=field, vertex=vertex))
        self.field = field
        self.vertex = vertex
