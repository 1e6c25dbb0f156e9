"""Expand the declarative sweep manifest into checker calls."""
from __future__ import annotations

import json
import re
from importlib import resources
from pathlib import Path
from typing import Iterator

from .verify import THEOREMS, VerificationReport, verify_lemma8

_BOUND = re.compile(r"^([a-z_]+)\s*([+-]\s*\d+)?$")


def _resolve(bound, env: dict[str, int]) -> int:
    if isinstance(bound, int):
        return bound
    m = _BOUND.match(bound.strip())
    if not m or m.group(1) not in env:
        raise ValueError(f"bad range bound {bound!r}")
    offset = int(m.group(2).replace(" ", "")) if m.group(2) else 0
    return env[m.group(1)] + offset


def _points(ranges: list, env: dict[str, int]) -> Iterator[dict[str, int]]:
    if not ranges:
        yield dict(env)
        return
    name, low, high = ranges[0]
    for value in range(_resolve(low, env), _resolve(high, env) + 1):
        yield from _points(ranges[1:], {**env, name: value})


def load_manifest(path: str | Path | None = None) -> dict:
    if path is None:
        return json.loads(resources.files("cyclecliques").joinpath("sweeps.json").read_text())
    return json.loads(Path(path).read_text())


def expand(manifest: dict) -> Iterator[tuple[str, dict[str, int]]]:
    for sweep in manifest["sweeps"]:
        for params in _points(sweep["ranges"], {}):
            yield sweep["check"], params


def run_manifest(manifest: dict, jobs: int = 1) -> Iterator[VerificationReport]:
    for check, params in expand(manifest):
        if check == "lemma8":
            yield verify_lemma8(**params)
        else:
            yield THEOREMS[check](**params, jobs=jobs)
