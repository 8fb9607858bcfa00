"""Error types with dedicated CLI exit codes."""


class AfvpError(Exception):
    exit_code = 1


class ConfigError(AfvpError):
    """Invalid configuration, domain, or scheme parameters."""

    exit_code = 2


class CFLError(AfvpError):
    """A realized Courant number exceeded the scheme's stability bound."""

    exit_code = 3
