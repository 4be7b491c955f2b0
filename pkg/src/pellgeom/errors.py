"""Exception hierarchy shared by every module."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class FieldMismatch(DomainError):
    """Two scalars from different fields were combined."""


class BoundExceeded(RuntimeError):
    """A configured search or factorization bound was hit before a proof was found."""


class FactorizationIncomplete(BoundExceeded):
    """Trial division stopped with an unresolved composite cofactor."""

    def __init__(self, n: int, cofactor: int, bound: int):
        self.n = n
        self.cofactor = cofactor
        self.bound = bound
        super().__init__(
            f"factorization of {n} incomplete: cofactor {cofactor} has no prime "
            f"factor <= {bound}"
        )
