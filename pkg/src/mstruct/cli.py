"""Command-line entry point: ``python -m mstruct {build,verify,examples} ...``.

Exit codes: 0 when every selected check passes, 1 on a verification failure,
2 on a configuration error (bad flags, unknown config keys, degenerate
parameters).  With ``--out DIR`` the JSON is written under DIR and one status
line per check goes to stdout; without it the JSON itself goes to stdout.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field, fields
from typing import List, Optional

from .algebra import check_operator_pencil, random_integer_matrices, verify_S_lambda
from .arith.ratfunc import parse
from .families import build_family
from .families.base import DegenerateParameter, FamilySpec
from .families.core import export_json
from .linalg import SandwichOperator
from .report import dumps, read_json, write_json
from .suites import MODES, SUITES, run_suites
from .yangbaxter import (Example1Data, Example2Data, laurent_check, left_multiplication_check,
                         r_left_multiplication, verify_assoc_ybe, verify_example1, verify_example2,
                         verify_lie_ybe)

FAMILIES = ("A", "D_even", "D_odd", "E6", "E7", "E8")
RANKED = {"A": 2, "D_even": 2, "D_odd": 3}
EXAMPLES = ("example1", "example2", "sect2_example")
THREADS_ENV = "MSTRUCT_THREADS"


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    family: Optional[str] = None
    k: Optional[int] = None
    lam: str = "sym"
    t: str = "sym"
    suites: List[str] = field(default_factory=list)
    example: Optional[str] = None
    mode: str = "sampled"
    points: int = 5
    seed: int = 0
    dim: int = 2
    p: int = 2
    out: Optional[str] = None

    @staticmethod
    def from_json(obj) -> "RunConfig":
        if not isinstance(obj, dict):
            raise ConfigError("config must be a JSON object")
        names = {f.name for f in fields(RunConfig)}
        extra = sorted(set(obj) - names)
        if extra:
            raise ConfigError(f"unknown config fields: {extra}")
        if "command" not in obj:
            raise ConfigError("config needs a command")
        return RunConfig(**obj)

    def family_spec(self) -> FamilySpec:
        def value(name, text):
            if text in (None, "sym"):
                return "sym"
            try:
                return parse(str(text))
            except Exception as exc:
                raise ConfigError(f"cannot parse {name} = {text!r}: {exc}") from None
        return FamilySpec(self.family, self.k if self.family in RANKED else None,
                          value("lambda", self.lam), value("t", self.t))

    def validate(self) -> None:
        if self.command not in ("build", "verify", "examples"):
            raise ConfigError(f"unknown command {self.command!r}")
        if self.command in ("build", "verify"):
            if self.family not in FAMILIES:
                raise ConfigError(f"family must be one of {', '.join(FAMILIES)}")
            if self.family in RANKED:
                if not isinstance(self.k, int) or self.k < RANKED[self.family]:
                    raise ConfigError(f"family {self.family} needs --k >= {RANKED[self.family]}")
            elif self.k is not None:
                raise ConfigError(f"family {self.family} takes no --k")
            self.family_spec()
        if self.command == "verify":
            if not self.suites:
                raise ConfigError("verify needs at least one --suite")
            bad = [s for s in self.suites if s not in SUITES + ("all",)]
            if bad:
                raise ConfigError(f"unknown suite(s): {bad}")
        if self.command == "examples" and self.example not in EXAMPLES:
            raise ConfigError(f"example must be one of {', '.join(EXAMPLES)}")
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {', '.join(MODES)}")
        for name in ("points", "dim", "p"):
            if not isinstance(getattr(self, name), int) or getattr(self, name) < 1:
                raise ConfigError(f"{name} must be a positive integer")
        if not isinstance(self.seed, int):
            raise ConfigError("seed must be an integer")


def thread_count() -> int:
    """Thread budget from the environment; the engine itself runs on one thread."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ConfigError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mstruct", description=__doc__.split("\n")[0])
    ap.add_argument("--config", help="JSON RunConfig; replaces the remaining flags")
    sub = ap.add_subparsers(dest="command")

    def family_args(p):
        p.add_argument("--family", choices=FAMILIES)
        p.add_argument("--k", type=int)
        p.add_argument("--lambda", dest="lam", default="sym", help="rational value or 'sym'")
        p.add_argument("--t", default="sym", help="rational value or 'sym'")

    def run_args(p):
        p.add_argument("--mode", choices=MODES, default="sampled")
        p.add_argument("--points", type=int, default=5)
        p.add_argument("--seed", type=int, default=0)

    b = sub.add_parser("build", help="build a family representation and export it")
    family_args(b)
    b.add_argument("--out")
    v = sub.add_parser("verify", help="run verification suites on a family")
    family_args(v)
    run_args(v)
    v.add_argument("--suite", action="append", dest="suites", choices=SUITES + ("all",))
    v.add_argument("--out")
    e = sub.add_parser("examples", help="run one of the worked examples")
    e.add_argument("example", choices=EXAMPLES)
    e.add_argument("--dim", type=int, default=2, help="matrix size for example1 and sect2_example")
    e.add_argument("--p", type=int, default=2, help="number of spectral coordinates for example2")
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--out")
    return ap


def config_from_args(argv) -> RunConfig:
    ap = _parser()
    ns = ap.parse_args(argv)
    if ns.config:
        try:
            obj = read_json(ns.config)
        except (OSError, ValueError) as exc:
            raise ConfigError(f"cannot read config {ns.config}: {exc}") from None
        cfg = RunConfig.from_json(obj)
    elif ns.command is None:
        ap.print_usage(sys.stderr)
        raise ConfigError("a command is required")
    else:
        kw = {k: v for k, v in vars(ns).items() if k != "config" and v is not None}
        cfg = RunConfig(**kw)
    cfg.validate()
    return cfg


def _file_stem(cfg: RunConfig) -> str:
    if cfg.command == "examples":
        extra = {"example1": f"_dim{cfg.dim}_seed{cfg.seed}", "example2": f"_p{cfg.p}",
                 "sect2_example": f"_dim{cfg.dim}_seed{cfg.seed}"}[cfg.example]
        return cfg.example + extra
    stem = cfg.family + (f"_k{cfg.k}" if cfg.family in RANKED else "")
    if cfg.command == "verify":
        stem = "verify_" + stem + "_" + "-".join(cfg.suites) + f"_{cfg.mode}"
    return stem


def sect2_example(n: int, seed: int) -> dict:
    """R = left multiplication by a random rational a on Mat_n: x∘y = x a y."""
    a = random_integer_matrices(n, 1, seed, bound=9)[0]
    R = SandwichOperator.left_multiplication(a)
    r = r_left_multiplication(a)
    checks = [check_operator_pencil(R), verify_S_lambda(R), left_multiplication_check(a),
              verify_assoc_ybe(r, mode="symbolic"), verify_lie_ybe(r, mode="symbolic"),
              laurent_check(r, mode="symbolic")]
    ok = all(c["status"] == "pass" for c in checks)
    return {"check": "sect2_example", "n": n, "a": a.to_json(), "checks": checks,
            "status": "pass" if ok else "fail"}


def execute(cfg: RunConfig) -> dict:
    if cfg.command == "build":
        return export_json(build_family(cfg.family_spec()))
    if cfg.command == "verify":
        return run_suites(cfg.family_spec(), cfg.suites, mode=cfg.mode, points=cfg.points, seed=cfg.seed)
    if cfg.example == "example1":
        return verify_example1(Example1Data.random(cfg.dim, cfg.seed))
    if cfg.example == "example2":
        return verify_example2(Example2Data.shifted(cfg.p))
    return sect2_example(cfg.dim, cfg.seed)


def _summary_lines(cfg: RunConfig, result: dict) -> List[str]:
    if cfg.command == "build":
        return [f"built {result['spec']['family']} dim {result['dim']}"]
    if cfg.command == "verify":
        return [f"{s['suite']}: {s['status']}" for s in result["suites"]] + [f"overall: {result['status']}"]
    return [f"{cfg.example}: {result['status']}"]


def main(argv=None) -> int:
    try:
        cfg = config_from_args(sys.argv[1:] if argv is None else argv)
        thread_count()
        result = execute(cfg)
    except SystemExit as exc:  # argparse
        return 2 if exc.code not in (0, None) else 0
    except (ConfigError, DegenerateParameter) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.out:
        path = write_json(os.path.join(cfg.out, _file_stem(cfg) + ".json"), result)
        for line in _summary_lines(cfg, result):
            print(line)
        print(f"wrote {path}")
    else:
        sys.stdout.write(dumps(result))
    if cfg.command == "build":
        return 0
    return 0 if result["status"] == "pass" else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
