"""Exception taxonomy shared across the package.

Two families, matching the CLI exit-code contract: configuration problems
(bad registry/config files, incoherent flag combinations) exit with 2,
data/validation problems (bad numbers, malformed series) exit with 3.
"""

from __future__ import annotations


class ConfigurationError(Exception):
    """A registry, config file, or run request is malformed or incoherent."""


class DataValidationError(ValueError):
    """A numeric input or data file violates a domain invariant."""
