"""Exception taxonomy shared across the package.

exit_code is what the CLI returns when the error escapes a subcommand:
2 config, 3 data, 4 numeric.
"""


class NiemapError(Exception):
    exit_code = 1


class ConfigError(NiemapError):
    exit_code = 2


class DataError(NiemapError):
    exit_code = 3


class NumericError(NiemapError):
    exit_code = 4
