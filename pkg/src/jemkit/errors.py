class ResourceLimitError(RuntimeError):
    """A configured search or atom limit was exceeded."""


class SymbolicError(ValueError):
    """The question cannot be decided on an ALL-valued (infinite) formula set."""


class PreconditionError(ValueError):
    pass
