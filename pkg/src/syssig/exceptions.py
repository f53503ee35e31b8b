class SignatureError(ValueError):
    """Base class for the package's input errors."""


class CapacityError(SignatureError):
    """The requested computation exceeds the size the method supports."""


class DegenerateSystemError(SignatureError):
    """The family would describe a constant structure function."""


class NotAntichainError(SignatureError):
    pass


class NotProbabilityVector(SignatureError):
    pass


class NonIntegerFaceCount(SignatureError):
    def __init__(self, level: int, value):
        super().__init__(f"face count at level {level} is {value}, not an integer")
        self.level = level
        self.value = value
