"""Exceptions raised by the superspecial-survey engines."""


class SurveyError(Exception):
    """Base class for every error raised by this package."""


class InvalidModulusError(SurveyError, ValueError):
    """The characteristic is not an admissible odd prime."""


class ModulusMismatchError(SurveyError, ValueError):
    """Operands live over different prime fields."""


class SingularCharacteristicError(SurveyError):
    """The curve is singular in this characteristic (p = 3)."""


class GateExceededError(SurveyError):
    """A small-p oracle was asked for a prime above its configured gate."""

    def __init__(self, what: str, p: int, gate: int, setting: str):
        self.what = what
        self.p = p
        self.gate = gate
        self.setting = setting
        super().__init__(
            f"{what} too large: p={p} exceeds the gate p <= {gate} (raise {setting} to allow it)"
        )


class InconsistencyError(SurveyError):
    """A computed result contradicts a proven invariant; indicates a bug."""


class InvalidRangeError(SurveyError, ValueError):
    """A prime range or scan limit is malformed."""


class ConfigurationError(SurveyError, ValueError):
    """An environment setting could not be parsed."""
