"""
Validated run configuration built from parsed command-line arguments
"""

import argparse
from dataclasses import dataclass, field
from typing import Optional, Tuple

from ..complex_core import MAX_EXHAUSTIVE_N
from ..errors import ConfigError

COMMANDS = ("analyze", "embed", "verify", "witness", "generate", "enumerate", "ekr")
GENERATE_KINDS = ("vkf", "cross", "star", "simplex", "boundary", "skeleton")
MODES = ("geodesic", "linear")
# Namespace prefix of the flags given before the subcommand.
GLOBAL_PREFIX = "global_"


def _flag(values: dict, name: str, default):
    for key in (name, GLOBAL_PREFIX + name):
        if values.get(key) is not None:
            return values[key]
    return default


@dataclass(frozen=True)
class RunConfig:
    command: str
    complex_path: Optional[str] = None
    placement_path: Optional[str] = None
    output: Optional[str] = None
    dim: Optional[int] = None
    n: Optional[int] = None
    k: Optional[int] = None
    seed: int = 0
    trials: int = 1
    sample: Optional[int] = None
    mode: str = "geodesic"
    linear: bool = False
    cross_check: bool = False
    stream: bool = False
    kind: Optional[str] = None
    params: Tuple[str, ...] = field(default_factory=tuple)
    leftover: int = 0

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        values = vars(args)
        return cls(
            command=values["command"],
            complex_path=values.get("complex"),
            placement_path=values.get("placement"),
            output=_flag(values, "output", None),
            dim=values.get("dim"),
            n=values.get("n"),
            k=values.get("k"),
            seed=_flag(values, "seed", 0),
            trials=_flag(values, "trials", 1),
            sample=values.get("sample"),
            mode=values.get("mode") or "geodesic",
            linear=bool(values.get("linear")),
            cross_check=bool(_flag(values, "cross_check", False)),
            stream=bool(values.get("stream")),
            kind=values.get("kind"),
            params=tuple(values.get("params") or ()),
            leftover=values.get("leftover") or 0,
        )

    def validate(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.seed < 0:
            raise ConfigError("--seed must be non-negative")
        if self.trials < 1:
            raise ConfigError("--trials must be at least 1")
        if self.mode not in MODES:
            raise ConfigError(f"--mode must be one of {', '.join(MODES)}")
        if self.command in ("analyze", "embed") and self.dim is None:
            raise ConfigError(f"{self.command} needs --dim")
        if self.dim is not None and self.dim < 1:
            raise ConfigError("--dim must be at least 1")
        reads_complex = self.command in ("analyze", "embed", "verify", "witness")
        if reads_complex and not self.complex_path:
            raise ConfigError(f"{self.command} needs a complex file")
        if self.command in ("verify", "witness") and not self.placement_path:
            raise ConfigError(f"{self.command} needs a placement file")
        if self.command == "generate":
            if self.kind not in GENERATE_KINDS:
                raise ConfigError(
                    f"generate kind must be one of {', '.join(GENERATE_KINDS)}"
                )
            if self.leftover < 0:
                raise ConfigError("--leftover must be non-negative")
        if self.command == "enumerate":
            self._validate_enumerate()
        if self.command == "ekr" and (self.n is None or self.k is None):
            raise ConfigError("ekr needs --n and --k")
        return self

    def _validate_enumerate(self):
        if self.n is None or self.n < 1:
            raise ConfigError("enumerate needs --n >= 1")
        if self.sample is not None and self.sample < 1:
            raise ConfigError("--sample must be positive")
        if self.sample is None and self.n > MAX_EXHAUSTIVE_N:
            raise ConfigError(
                f"exhaustive enumeration stops at n = {MAX_EXHAUSTIVE_N}; use --sample"
            )
        if self.sample is not None and self.n < 2:
            raise ConfigError("sampling needs --n >= 2")
        if self.enumerate_dim < 1:
            raise ConfigError(
                "enumerate needs a dimension of at least 1 (--dim or n >= 4)"
            )

    @property
    def enumerate_dim(self) -> int:
        if self.dim is not None:
            return self.dim
        return (self.n or 0) - 3
