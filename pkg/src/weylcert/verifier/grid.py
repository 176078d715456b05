"""Sweep grid configuration and the plain key=value config-file format.

Recognised keys::

    grid.q_set   = 2,3,4,5,7,8,9,11,13,16,25,27,32
    grid.r_max   = 30
    campaigns    = lem-b2,prop-final
    output.format = json
    output.path   = report.json

Unknown keys raise ConfigError.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

DEFAULT_Q_SET = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32)
DEFAULT_R_MAX = 30


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class GridConfig:
    q_set: tuple[int, ...] = DEFAULT_Q_SET
    r_max: int = DEFAULT_R_MAX
    campaigns: tuple[str, ...] | None = None  # None = all registered
    out_format: str = "json"
    out_path: str | None = None

    def even_q(self, minimum: int = 2) -> tuple[int, ...]:
        return tuple(q for q in self.q_set if q % 2 == 0 and q >= minimum)


def parse_config(text: str) -> GridConfig:
    cfg = GridConfig()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "grid.q_set":
            try:
                qs = tuple(sorted({int(tok) for tok in value.split(",") if tok.strip()}))
            except ValueError:
                raise ConfigError(f"line {lineno}: bad q_set {value!r}") from None
            if not qs or any(q < 2 for q in qs):
                raise ConfigError(f"line {lineno}: q_set must list integers >= 2")
            cfg = replace(cfg, q_set=qs)
        elif key == "grid.r_max":
            try:
                cfg = replace(cfg, r_max=int(value))
            except ValueError:
                raise ConfigError(f"line {lineno}: bad r_max {value!r}") from None
        elif key == "campaigns":
            names = tuple(tok.strip() for tok in value.split(",") if tok.strip())
            cfg = replace(cfg, campaigns=names or None)
        elif key == "output.format":
            if value not in ("json", "csv"):
                raise ConfigError(f"line {lineno}: format must be json or csv")
            cfg = replace(cfg, out_format=value)
        elif key == "output.path":
            cfg = replace(cfg, out_path=value)
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
    return cfg


def load_config(path: str) -> GridConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())
