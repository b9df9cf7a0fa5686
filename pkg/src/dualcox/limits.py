"""Default enumeration caps.

The command line resolves its effective cap from the ``--cap`` flag, the
``DUALCOX_CAP`` environment variable, and these defaults, in that order.
Library calls take explicit cap arguments with these as defaults.
"""

import os

DEFAULT_RED_CAP = 10**6
DEFAULT_ENUM_CAP = 10**5

ENV_VAR = "DUALCOX_CAP"


def env_cap():
    """Cap requested through the environment, or None."""
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be a positive integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{ENV_VAR} must be a positive integer, got {raw!r}")
    return value
