class ValidationError(ValueError):
    """Input violates a structural constraint (bad type, bad curve, bad file)."""


class TranscriptionRequired(LookupError):
    """A computation needs surgery data that has not been transcribed yet."""
