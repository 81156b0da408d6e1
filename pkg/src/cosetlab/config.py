"""Resource caps.

Every cap can be overridden through an environment variable of the same
name prefixed with ``COSETLAB_`` (e.g. ``COSETLAB_ENUMERATION_CAP``), or at
runtime by assigning to the attributes of :data:`limits`.
"""

import os
from dataclasses import dataclass


def _env_int(name, default):
    value = os.environ.get("COSETLAB_" + name)
    return int(value) if value else default


@dataclass
class Limits:
    enumeration_cap: int = _env_int("ENUMERATION_CAP", 10**6)
    isomorphism_cap: int = _env_int("ISOMORPHISM_CAP", 2000)
    index_cap: int = _env_int("INDEX_CAP", 10**5)
    low_index_cap: int = _env_int("LOW_INDEX_CAP", 12)
    default_max_cosets: int = _env_int("DEFAULT_MAX_COSETS", 10**5)
    tietze_length_cap: int = _env_int("TIETZE_LENGTH_CAP", 10**5)
    # relators longer than this are checked only on complete low-index tables
    deduction_length: int = _env_int("DEDUCTION_LENGTH", 16)


limits = Limits()
