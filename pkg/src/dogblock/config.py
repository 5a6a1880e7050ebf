"""Experiment configuration shared by the CLI commands."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


@dataclass
class ExperimentConfig:
    dim: int = 1
    n_points: tuple[int, ...] = (16,)
    radius: int = 3
    shape: str = "hypercube"
    sigma_p: float = 0.8
    sigma_q: float = 1.6
    field: str = "sin1d"
    out: str = "."
    tol: float = 1e-10
    max_dim_cap: int = 2**14

    def to_dict(self) -> dict:
        d = asdict(self)
        d["n_points"] = list(self.n_points)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(d) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        d = dict(d)
        if "n_points" in d:
            d["n_points"] = tuple(int(x) for x in d["n_points"])
        return cls(**d)

    def save(self, path) -> None:
        with open(path, "w") as f:
            json.dump(self.to_dict(), f, indent=2, sort_keys=True)
            f.write("\n")

    @classmethod
    def load(cls, path) -> "ExperimentConfig":
        with open(path) as f:
            return cls.from_dict(json.load(f))
