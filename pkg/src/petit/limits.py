"""Size caps for exhaustive searches.

``PETIT_MAX_EXHAUST`` overrides the full-scan cap; the pair cap and the
finite-field size bound scale with it only when set explicitly.
"""

import os

FIELD_BOUND = 2 ** 20
TABLE_BOUND = 2 ** 16
DEFAULT_FULL_SCAN = 10 ** 4
DEFAULT_PAIR_SCAN = 10 ** 6


class BoundExceeded(ValueError):
    """An exhaustive search would exceed the configured cap."""


def _env_int(name):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(float(raw))
    except ValueError:
        return None
    return value if value > 0 else None


def max_exhaust():
    """Cap on the number of algebra elements scanned one by one."""
    return _env_int("PETIT_MAX_EXHAUST") or DEFAULT_FULL_SCAN


def max_pairs():
    """Cap on the number of element pairs scanned."""
    override = _env_int("PETIT_MAX_EXHAUST")
    if override is None:
        return DEFAULT_PAIR_SCAN
    return max(DEFAULT_PAIR_SCAN, override * 100)


def require(count, cap, what):
    if count > cap:
        raise BoundExceeded(f"{what}: {count} exceeds cap {cap}")
