"""Exception types shared across the package."""


class PlanningError(Exception):
    """Base class for all errors raised by plankit."""


class ContractViolation(PlanningError, ValueError):
    """An operation was called with arguments outside its contract."""


class NetpbmError(PlanningError, ValueError):
    """A Netpbm image could not be parsed.

    The byte offset at which parsing failed is kept in ``offset`` and is
    also part of the message.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


class MalformedHeaderError(NetpbmError):
    pass


class TruncatedDataError(NetpbmError):
    pass


class UnsupportedFormatError(NetpbmError):
    pass


class SamplerExhaustedError(PlanningError, RuntimeError):
    """A rejection sampler ran out of retries."""


class InvalidRequestError(PlanningError, ValueError):
    """A plan request is unusable, e.g. start or goal is in collision."""


class RegistryError(PlanningError):
    pass


class RegistrationConflictError(RegistryError, ValueError):
    pass


class InvalidNameError(RegistryError, ValueError):
    pass


class NotFoundError(RegistryError, LookupError):
    pass


class ConfigError(PlanningError, ValueError):
    """Invalid JSON run/benchmark configuration."""
