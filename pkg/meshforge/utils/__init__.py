"""Utility functions for general usage in meshforge."""
__all__ = [
    "get_env_var",
    "dataclass",
    "cache",
    "mpq",
    "parse_rational",
    "format_rational",
]

import os
import sys
from dataclasses import dataclass as _dataclass

from dotenv import load_dotenv
from gmpy2 import mpq

from meshforge.exceptions import MeshforgeValueError, MissingEnvVarError

from .decorators import cache

load_dotenv()

is_py310 = sys.version_info.minor >= 10 or sys.version_info.major > 3
"""
Some utils require knowing the python version.  Right now it's only important to
distinguish between 3.10 and earlier versions.
"""

_NOT_VALUE = object()
"""
Dummy value for optional default arg
so that any value, including `None`,
can be set as a default.
"""


def get_env_var(var_name, default=_NOT_VALUE):
    """
    Retrieve environment variable.

    Parameters
    ----------
    var_name: str
        Name of the environment variable.
    default: object
        Value to return if env var is missing.

    Returns
    -------
    str
        Value of the environment variable.

    Raise
    -----
    meshforge.exceptions.MissingEnvVarError
        Raised if default is not set and env var is missing.
    """
    var_value = os.getenv(var_name)
    if var_value is None:
        if default is _NOT_VALUE:
            raise MissingEnvVarError(f"Could not get env var: '{var_name}'")
        return default

    return var_value


def dataclass(*args, **kwargs):
    """
    Slightly modified version of the standard library's `dataclass`.

    The modification is to allow the setting of slots on versions of
    python before 3.10.
    """
    if "slots" in kwargs and not is_py310:
        del kwargs["slots"]

    return _dataclass(*args, **kwargs)


def parse_rational(value):
    """
    Convert ints, ``mpq`` values and ``"p/q"`` strings to an exact ``mpq``.

    Raises
    ------
    meshforge.exceptions.MeshforgeValueError
        If the value cannot be read as a rational number.
    """
    if isinstance(value, bool):
        raise MeshforgeValueError(f"Not a rational: {value!r}")
    if isinstance(value, str):
        text = value.strip()
        try:
            return mpq(text)
        except ValueError as e:
            raise MeshforgeValueError(f"Not a rational: {value!r}") from e
    try:
        return mpq(value)
    except (TypeError, ValueError) as e:
        raise MeshforgeValueError(f"Not a rational: {value!r}") from e


def format_rational(value):
    """Exact ``"p/q"`` text for a rational; integers are written without ``/1``."""
    value = mpq(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
