"""
Suite configuration.

A flat ``key=value`` file (read with python-dotenv) named by ``--config`` or
the ``MESHFORGE_CONFIG`` environment variable; explicit overrides win over
the file, which wins over the defaults.
"""
from dataclasses import asdict, fields, replace
from typing import Optional, Tuple

from dotenv import dotenv_values

from meshforge.constants import Family
from meshforge.exceptions import ConfigError
from meshforge.path_algebra.words import DEFAULT_WORD_BUDGET
from meshforge.utils import dataclass, get_env_var

MAX_INDEX = 12


@dataclass(frozen=True)
class SuiteConfig:
    """
    Parameters of a verification run.

    Attributes
    ----------
    families : tuple of str
        Dynkin families to generate, from ``A``, ``D``, ``E``.
    max_index : int
        Largest Dynkin index (E is capped at 8).
    krull_dims : tuple of int
        Krull dimensions compared in the parity check.
    trunc : int
        Word-length bound ``L_max`` for quotients and dg cohomology.
    words : int
        Tensor word bound ``W`` for Koszul duals.
    window : int
        Consecutive equal bounds needed to call a quotient stabilized.
    dg_trunc : int
        Bound of the dg presentations in the ``d^2 = 0`` check.
    ncpu : int
        Worker processes.
    out_dir : str
    seed : int
        Seed of the randomized complexes.
    random_trials : int
    word_budget : int
    """

    families: Tuple[str, ...] = ("A", "D", "E")
    max_index: int = MAX_INDEX
    krull_dims: Tuple[int, ...] = (0, 1, 2, 3)
    trunc: int = 7
    words: int = 12
    window: int = 2
    dg_trunc: int = 20
    ncpu: int = 4
    out_dir: str = "results"
    seed: int = 0
    random_trials: int = 100
    word_budget: int = DEFAULT_WORD_BUDGET

    def __post_init__(self):
        _validate_config(self)

    def replace(self, **changes) -> "SuiteConfig":
        return replace(self, **changes)

    def to_dict(self) -> dict:
        data = asdict(self)
        data["families"] = list(self.families)
        data["krull_dims"] = list(self.krull_dims)
        return data


def _validate_config(cfg):
    for family in cfg.families:
        if family not in {f.value for f in Family}:
            raise ConfigError(f"Unknown family: '{family}'")
    if not 1 <= cfg.max_index <= MAX_INDEX:
        raise ConfigError(f"max_index must lie in [1, {MAX_INDEX}]")
    if any(d < 0 for d in cfg.krull_dims):
        raise ConfigError("Krull dimensions must be non-negative")
    for name in ("trunc", "words", "dg_trunc"):
        if getattr(cfg, name) < 2:
            raise ConfigError(f"{name} must be at least 2")
    for name in ("window", "ncpu", "word_budget"):
        if getattr(cfg, name) < 1:
            raise ConfigError(f"{name} must be positive")
    if cfg.random_trials < 0:
        raise ConfigError("random_trials must be non-negative")


def _parse_list(text, item):
    return tuple(item(t.strip()) for t in str(text).split(",") if t.strip())


_PARSERS = {
    "families": lambda text: _parse_list(text, lambda t: t.upper()),
    "krull_dims": lambda text: _parse_list(text, int),
    "out_dir": str,
}


def _parse_value(key, value):
    if isinstance(value, (tuple, list)):
        return tuple(value)
    if not isinstance(value, str):
        return value
    parser = _PARSERS.get(key, int)
    try:
        return parser(value)
    except ValueError as e:
        raise ConfigError(f"Bad value for '{key}': {value!r}") from e


def load_config(path: Optional[str] = None, **overrides) -> SuiteConfig:
    """
    Build a :class:`SuiteConfig` from a ``key=value`` file and overrides.

    Parameters
    ----------
    path : str, optional
        Config file; defaults to ``MESHFORGE_CONFIG`` when set.
    **overrides
        Field values; None entries are ignored.

    Raises
    ------
    ConfigError
        Unknown keys, unreadable values or a missing file.
    """
    path = path or get_env_var("MESHFORGE_CONFIG", None)
    known = {f.name for f in fields(SuiteConfig)}
    values = {}
    if path:
        try:
            with open(path, "r", encoding="utf-8") as f:
                raw = dotenv_values(stream=f)
        except OSError as e:
            raise ConfigError(f"Cannot read config file '{path}'") from e
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(f"Unknown config keys: {sorted(unknown)}")
        values.update({k: v for k, v in raw.items() if v is not None})
    values.update({k: v for k, v in overrides.items() if v is not None})
    unknown = set(values) - known
    if unknown:
        raise ConfigError(f"Unknown config keys: {sorted(unknown)}")
    return SuiteConfig(**{k: _parse_value(k, v) for k, v in values.items()})
