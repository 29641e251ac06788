"""Named, pinned group parameter sets shipped with the package.

The registry file (data/params.txt) is a plain INI document mapping set
names to decimal strings for p, g, mode, and (hardened only) q. The
generator order d is never stored; it is recomputed from scratch on
load and every entry is revalidated, so a corrupted file cannot smuggle
in a wrong order.
"""

from __future__ import annotations

from configparser import ConfigParser
from functools import lru_cache
from importlib import resources

from .errors import InvalidGroupParams, UnknownParamSet
from .numtheory import GroupParams, Mode, multiplicative_order

_DATA_PACKAGE = "vsslab.data"
_REGISTRY_FILE = "params.txt"


def _parse_entry(name: str, section) -> GroupParams:
    try:
        p = int(section["p"])
        g = int(section["g"])
        mode = Mode(section["mode"])
        q = int(section["q"]) if "q" in section else None
    except (KeyError, ValueError) as exc:
        raise InvalidGroupParams(f"registry entry {name!r} is malformed: {exc}") from exc
    params = GroupParams(p=p, g=g, d=multiplicative_order(g, p), mode=mode, q=q)
    params.validate()
    return params


@lru_cache(maxsize=1)
def load_registry() -> dict[str, GroupParams]:
    """All registry entries, validated; cached after the first load."""
    text = resources.files(_DATA_PACKAGE).joinpath(_REGISTRY_FILE).read_text()
    parser = ConfigParser()
    parser.read_string(text)
    return {name: _parse_entry(name, parser[name]) for name in parser.sections()}


def registry_names() -> tuple[str, ...]:
    return tuple(load_registry())


def get_params(name: str) -> GroupParams:
    """Look a parameter set up by name; raises UnknownParamSet if absent."""
    registry = load_registry()
    if name not in registry:
        raise UnknownParamSet(
            f"no parameter set named {name!r}; available: {', '.join(sorted(registry))}"
        )
    return registry[name]
