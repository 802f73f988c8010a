"""Access to the ``RINGS_*`` settings with their documented defaults."""
from contextlib import contextmanager
from contextvars import ContextVar
from pathlib import Path
from typing import Dict

from django.conf import settings

DEFAULTS = {
    "RINGS_MATERIALIZE_CAP": 4096,
    "RINGS_BRUTEFORCE_CAP": 10**7,
    "RINGS_ISO_CAP": 16,
    "RINGS_CATALOG_MAX_ORDER": 64,
    "RINGS_CATALOG_MANIFEST": Path(__file__).resolve().parent / "data" / "catalog.txt",
}

_overrides: ContextVar[Dict[str, object]] = ContextVar("rings_overrides", default={})


def get_setting(name: str):
    active = _overrides.get()
    if name in active:
        return active[name]
    return getattr(settings, name, DEFAULTS[name])


@contextmanager
def overrides(**values):
    """Temporarily replace settings for one command run; ``None`` values are ignored."""
    merged = {**_overrides.get(), **{k: v for k, v in values.items() if v is not None}}
    token = _overrides.set(merged)
    try:
        yield
    finally:
        _overrides.reset(token)


def materialize_cap() -> int:
    return int(get_setting("RINGS_MATERIALIZE_CAP"))


def bruteforce_cap() -> int:
    return int(get_setting("RINGS_BRUTEFORCE_CAP"))


def iso_cap() -> int:
    return int(get_setting("RINGS_ISO_CAP"))


def catalog_max_order() -> int:
    return int(get_setting("RINGS_CATALOG_MAX_ORDER"))


def catalog_manifest() -> Path:
    return Path(get_setting("RINGS_CATALOG_MANIFEST"))
