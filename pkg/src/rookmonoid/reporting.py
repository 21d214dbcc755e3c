"""Uniform result reports for the verification commands.

A report is a plain dict: {"check", "params", "pass", "assertions"} where
each assertion is {"name", "pass", "witness"}.  Witnesses carry observed
values on success and counterexample payloads on failure; everything is
JSON-serializable once passed through ``jsonable``.
"""

from __future__ import annotations

from fractions import Fraction


def assertion(name: str, passed: bool, witness=None) -> dict:
    return {"name": name, "pass": bool(passed), "witness": witness}


def report(check: str, params: dict, assertions: list[dict]) -> dict:
    return {
        "check": check,
        "params": params,
        "pass": all(a["pass"] for a in assertions),
        "assertions": assertions,
    }


def jsonable(obj):
    """Recursively convert to types the json module serializes exactly."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {_key(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    return str(obj)


def _key(k) -> str:
    if isinstance(k, str):
        return k
    if isinstance(k, (int, Fraction)):
        return str(k)
    if isinstance(k, tuple):
        return ",".join(str(v) for v in k)
    return str(k)
