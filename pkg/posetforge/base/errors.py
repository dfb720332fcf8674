"""
Exceptions raised by the package.

Everything derives from ValueError so that callers written against plain
ValueError keep working.
"""


class PosetForgeError(ValueError):

    """Base class of all errors raised by posetforge."""
    pass


class GraphFormatError(PosetForgeError):

    """Malformed graph6 or edge-list text.

    Parameters
    ----------
    message : str
        Human readable description.

    offset : int
        Byte (or character) offset of the offending position in the input.
    """

    def __init__(self, message, offset):
        super(GraphFormatError, self).__init__(
            "%s (at offset %d)" % (message, offset))
        self.offset = offset


class CatalogBoundError(PosetForgeError):

    """An edge bound is outside the allowed range or beyond a catalog."""
    pass


class IsolatedVertexError(PosetForgeError):

    """A pattern graph carries an isolated vertex where none is allowed."""
    pass


class DisconnectedGraphError(PosetForgeError):

    """A connected graph was required."""
    pass


class EmptyGraphError(PosetForgeError):

    """A graph with at least one edge was required."""
    pass


class PosetValidationError(PosetForgeError):

    """The weight matrix does not describe a valid weighted poset."""
    pass


class PosetFileError(PosetForgeError):

    """Malformed poset file.

    Parameters
    ----------
    message : str

    line : int
        1-based line number of the offending line.
    """

    def __init__(self, message, line):
        super(PosetFileError, self).__init__("line %d: %s" % (line, message))
        self.line = line


class AnnotationError(PosetForgeError):

    """The (v, k) annotation is too ambiguous for the requested inversion.

    Parameters
    ----------
    message : str

    elements : list of int
        Poset elements whose annotation blocked the computation.
    """

    def __init__(self, message, elements):
        super(AnnotationError, self).__init__(
            "%s (elements %s)" % (message, sorted(elements)))
        self.elements = sorted(elements)


class ExceptionalTableError(PosetForgeError):

    """A graph of the exceptional table could not be resolved uniquely.

    Parameters
    ----------
    name : str
        Name of the graph being resolved (e.g. 'T4').

    candidates : list of Graph
        All graphs that satisfied the role, possibly empty.
    """

    def __init__(self, name, candidates, reason=None):
        msg = "cannot resolve %s: %d candidate(s)" % (name, len(candidates))
        if reason:
            msg += " (%s)" % reason
        super(ExceptionalTableError, self).__init__(msg)
        self.name = name
        self.candidates = list(candidates)


class ReconstructionError(PosetForgeError):

    """The inversion disagreed with a direct construction.

    This indicates either a defect or a counterexample; it is never patched
    over silently.

    Parameters
    ----------
    message : str

    witnesses : list of Graph
    """

    def __init__(self, message, witnesses=()):
        super(ReconstructionError, self).__init__(message)
        self.witnesses = list(witnesses)
