"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input to a public operation."""


class TripleConstantError(ValueError):
    """A pairwise sign function whose triple product is not constant."""

    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple


class GenericityError(ValueError):
    """A point configuration violates the genericity hypothesis.

    ``witness`` holds the indices of a degenerate subset.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class GenerationError(RuntimeError):
    """Random generation gave up after exhausting its retry budget."""


class InvariantError(AssertionError):
    """An internal postcondition failed. Always indicates a bug."""
