"""Shared run configuration for the audit and the CLI.

The config is a flat record; on disk it is stored as ``key=value`` lines
(blank lines and ``#`` comments ignored).  A SHA-256 digest of the canonical
serialization identifies a run, so two audits with equal digests must produce
identical report bodies.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, fields
from pathlib import Path

from .errors import DomainError

__all__ = ["AuditConfig", "load_config", "dump_config"]


@dataclass(frozen=True)
class AuditConfig:
    quad_tol: float = 1e-8
    zero_tol: float = 1e-4
    # random strip sweeps
    n_samples: int = 1000
    sample_re_lo: float = 0.5
    sample_re_hi: float = 1.0
    sample_im_lo: float = 0.0
    sample_im_hi: float = 50.0
    # deterministic grids
    grid_re_n: int = 7
    grid_im_n: int = 7
    eval_budget: int = 10**6
    tau_max: float = 50.0
    seed: int = 20201219
    output_format: str = "doc"  # "doc" (single JSON document) or "csv"
    # boundary-scan knobs
    boundary_density: int = 64
    pole_tol: float = 1e-3
    exclusion_tol: float = 1e-2
    boundary_min_modulus: float = 1e-12
    jensen_samples: int = 384
    rouche_tau: float = 16.0
    rouche_epsilon: float = 0.1
    rouche_nu: float = 0.01
    rouche_theta_abs: float = 1.0

    def __post_init__(self):
        for name in ("quad_tol", "zero_tol", "pole_tol", "exclusion_tol",
                     "boundary_min_modulus"):
            if getattr(self, name) <= 0.0:
                raise DomainError(f"{name} must be positive")
        if self.eval_budget < 10**3:
            raise DomainError("eval_budget must be >= 1000")
        if self.output_format not in ("doc", "csv"):
            raise DomainError("output_format must be 'doc' or 'csv'")

    def digest(self) -> str:
        return hashlib.sha256(dump_config(self).encode()).hexdigest()


def dump_config(config: AuditConfig) -> str:
    lines = [f"{f.name}={getattr(config, f.name)!r}" if isinstance(getattr(config, f.name), str)
             else f"{f.name}={getattr(config, f.name)}"
             for f in fields(config)]
    return "\n".join(lines) + "\n"


def load_config(path: str | Path) -> AuditConfig:
    """Parse a flat key=value file into an AuditConfig.

    Unknown keys raise DomainError; values are coerced to the field's type.
    """
    text = Path(path).read_text()
    by_name = {f.name: f for f in fields(AuditConfig)}
    overrides: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise DomainError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip().strip("'\"")
        if key not in by_name:
            raise DomainError(f"{path}:{lineno}: unknown config key {key!r}")
        ftype = by_name[key].type
        if ftype in ("int", int):
            overrides[key] = int(value)
        elif ftype in ("float", float):
            overrides[key] = float(value)
        else:
            overrides[key] = value
    return AuditConfig(**overrides)
