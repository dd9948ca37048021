"""Runtime limits."""

import os

DEFAULT_MAX_MAPS = 10**7

ENV_MAX_MAPS = "DIGITOP_MAX_MAPS"


def max_maps_cap(override=None):
    """Enumeration cap for function spaces.

    Resolution order: explicit argument, DIGITOP_MAX_MAPS, built-in default.
    """
    if override is not None:
        return int(override)
    env = os.environ.get(ENV_MAX_MAPS)
    if env is not None:
        return int(env)
    return DEFAULT_MAX_MAPS
