class MorphismError(ValueError):
    """Base class for domain errors raised by this package."""


class AlphabetMismatchError(MorphismError):
    pass


class ParseError(MorphismError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class CapacityError(MorphismError):
    pass


class IncompleteAlphabetError(MorphismError):
    pass


class NotProlongableError(MorphismError):
    pass


class NotRotatableError(MorphismError):
    pass


class NotSymbolicError(MorphismError):
    pass
