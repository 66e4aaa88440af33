"""Machine-readable run reports: one JSON document per CLI invocation."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np


def jsonable(value):
    """Recursively convert numpy scalars/arrays so json can serialize them."""
    if isinstance(value, dict):
        return {k: jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, np.generic):
        return value.item()
    return value


@dataclass(frozen=True)
class RunReport:
    """Everything needed to reproduce and interpret one run.

    duration_seconds is None unless timing was explicitly requested, so that
    repeated runs with the same seed serialize byte-identically.
    """

    subcommand: str
    input: str
    params: dict
    results: dict
    seed: int | None = None
    duration_seconds: float | None = None

    def to_json(self) -> str:
        doc = {
            "subcommand": self.subcommand,
            "input": self.input,
            "params": jsonable(self.params),
            "results": jsonable(self.results),
            "seed": self.seed,
            "duration_seconds": self.duration_seconds,
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    @staticmethod
    def from_json(text: str) -> "RunReport":
        doc = json.loads(text)
        return RunReport(
            subcommand=doc["subcommand"],
            input=doc["input"],
            params=doc["params"],
            results=doc["results"],
            seed=doc["seed"],
            duration_seconds=doc["duration_seconds"],
        )
