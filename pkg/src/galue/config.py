"""Suite configuration: a versioned YAML file describing which cases to run.

Example::

    schema_version: 1
    tol: 1.0e-6
    quad_tol: 1.0e-8
    seed: 42
    output_format: json          # json | csv | markdown
    output_path: report.json
    fail_on: derived_discrepant  # derived_discrepant | any_discrepant | never
    jobs: 1
    cases:
      - case_id: BASE_OBER
        grid: {mu: [0.5, 1, 1.5], lam: [2, 3, 4.5], shift_a: [0.5, 1, 2]}
      - case_id: T1
        points:
          - {mu: 1, lam: 2, p: 0, b: 1, c: 0, xi: 1, nu: 1, delta: 1.5, ord_a: 1, y: 1, shift_a: 1}
      - case_id: T2
        sample: 20

A selector uses exactly one of ``points``, ``grid`` (cartesian product; a
scalar counts as a one-element list) or ``sample`` (random draws from the
built-in sampling region, seeded by ``seed`` or by the suite seed).
"""
from __future__ import annotations

import dataclasses
import itertools
import random
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import yaml

from .errors import ParseError, PreconditionError, ValidationError
from .gtsf import GtsfParams
from .identities import CaseId, IdentityCase, sample_case

SCHEMA_VERSION = 1
OUTPUT_FORMATS = ("json", "csv", "markdown")
FAIL_POLICIES = ("derived_discrepant", "any_discrepant", "never")
GTSF_FIELDS = ("ord_a", "p", "b", "c", "xi", "nu", "delta")
CASE_FIELDS = ("lam", "mu", "alpha", "beta", "shift_a", "y")
_ALIASES = {"lambda": "lam", "md": "markdown"}


@dataclass(frozen=True)
class CaseSelector:
    case_id: CaseId
    points: Optional[List[Dict[str, float]]] = None
    grid: Optional[Dict[str, List[float]]] = None
    sample: Optional[int] = None
    seed: Optional[int] = None


@dataclass(frozen=True)
class SuiteConfig:
    cases: List[CaseSelector] = field(default_factory=list)
    tol: float = 1e-6
    quad_tol: float = 1e-8
    seed: int = 0
    output_format: str = "json"
    output_path: Optional[str] = None
    fail_on: str = "derived_discrepant"
    jobs: int = 1

    def expand(self) -> List[IdentityCase]:
        """Concrete cases in selector order; sampling is seeded per selector."""
        out: List[IdentityCase] = []
        seen: Dict[CaseId, int] = {}
        for sel in self.cases:
            # keyed by position among same-case selectors so --only filtering
            # does not change the draws
            ordinal = seen.get(sel.case_id, 0)
            seen[sel.case_id] = ordinal + 1
            out.extend(_expand_selector(sel, ordinal, self.seed))
        return out


def build_case(case_id: CaseId, values: Dict[str, Any]) -> IdentityCase:
    """IdentityCase from a flat parameter mapping (gtsf fields at top level)."""
    values = {_ALIASES.get(k, k): v for k, v in values.items()}
    unknown = set(values) - set(GTSF_FIELDS) - set(CASE_FIELDS)
    if unknown:
        raise ValidationError(f"{case_id.value}: unknown parameter(s) {sorted(unknown)}")
    gtsf = None
    if case_id.value.startswith(("T", "C")):
        missing = [k for k in GTSF_FIELDS if k not in values]
        if missing:
            raise ValidationError(f"{case_id.value}: missing Struve parameter(s) {missing}")
        try:
            gtsf = GtsfParams(**{k: values[k] for k in GTSF_FIELDS})
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"{case_id.value}: {exc}") from None
    elif any(k in values for k in GTSF_FIELDS):
        raise ValidationError(f"{case_id.value}: base formulas take no Struve parameters")
    try:
        return IdentityCase(case_id, gtsf=gtsf, **{k: values[k] for k in CASE_FIELDS if k in values})
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{case_id.value}: {exc}") from None


def _expand_selector(sel: CaseSelector, ordinal: int, suite_seed: int) -> List[IdentityCase]:
    if sel.points is not None:
        return [build_case(sel.case_id, pt) for pt in sel.points]
    if sel.grid is not None:
        keys = list(sel.grid)
        return [build_case(sel.case_id, dict(zip(keys, combo)))
                for combo in itertools.product(*(sel.grid[k] for k in keys))]
    seed = sel.seed if sel.seed is not None else suite_seed
    rng = random.Random(f"{seed}:{sel.case_id.value}:{ordinal}")
    return [sample_case(sel.case_id, rng) for _ in range(sel.sample)]


def _number(raw: Dict[str, Any], key: str, where: str, default: Any = None) -> Any:
    value = raw.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{where}.{key} must be a number, got {value!r}")
    return value


def _as_list(value: Any) -> List[Any]:
    return list(value) if isinstance(value, (list, tuple)) else [value]


def _parse_selector(raw: Any, where: str) -> CaseSelector:
    if not isinstance(raw, dict):
        raise ValidationError(f"{where} must be a mapping")
    unknown = set(raw) - {"case_id", "points", "grid", "sample", "seed"}
    if unknown:
        raise ValidationError(f"{where}: unknown key(s) {sorted(unknown)}")
    try:
        case_id = CaseId(str(raw.get("case_id")))
    except ValueError:
        raise ValidationError(f"{where}.case_id: unknown case {raw.get('case_id')!r}") from None
    modes = [k for k in ("points", "grid", "sample") if k in raw]
    if len(modes) != 1:
        raise ValidationError(f"{where}: exactly one of points/grid/sample is required")
    points = grid = sample = None
    if "points" in raw:
        if not isinstance(raw["points"], list) or not all(isinstance(p, dict) for p in raw["points"]):
            raise ValidationError(f"{where}.points must be a list of mappings")
        points = [dict(p) for p in raw["points"]]
    elif "grid" in raw:
        if not isinstance(raw["grid"], dict):
            raise ValidationError(f"{where}.grid must be a mapping of lists")
        grid = {str(k): _as_list(v) for k, v in raw["grid"].items()}
    else:
        sample = raw["sample"]
        if isinstance(sample, bool) or not isinstance(sample, int) or sample < 0:
            raise ValidationError(f"{where}.sample must be a nonnegative integer")
    seed = raw.get("seed")
    if seed is not None and (isinstance(seed, bool) or not isinstance(seed, int)):
        raise ValidationError(f"{where}.seed must be an integer")
    return CaseSelector(case_id, points, grid, sample, seed)


def parse_config(raw: Any) -> SuiteConfig:
    """Validate an already-parsed mapping and return a SuiteConfig."""
    if not isinstance(raw, dict):
        raise ValidationError("configuration root must be a mapping")
    version = raw.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ValidationError(f"schema_version must be {SCHEMA_VERSION}, got {version!r}")
    known = {f.name for f in dataclasses.fields(SuiteConfig)} | {"schema_version"}
    unknown = set(raw) - known
    if unknown:
        raise ValidationError(f"unknown top-level key(s) {sorted(unknown)}")
    cases_raw = raw.get("cases") or []
    if not isinstance(cases_raw, list):
        raise ValidationError("cases must be a list")
    selectors = [_parse_selector(c, f"cases[{i}]") for i, c in enumerate(cases_raw)]
    seed = raw.get("seed", 0)
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise ValidationError("seed must be an integer")
    jobs = raw.get("jobs", 1)
    if isinstance(jobs, bool) or not isinstance(jobs, int) or jobs < 1:
        raise ValidationError("jobs must be a positive integer")
    fmt = _ALIASES.get(raw.get("output_format", "json"), raw.get("output_format", "json"))
    if fmt not in OUTPUT_FORMATS:
        raise ValidationError(f"output_format must be one of {OUTPUT_FORMATS}, got {fmt!r}")
    fail_on = raw.get("fail_on", "derived_discrepant")
    if fail_on not in FAIL_POLICIES:
        raise ValidationError(f"fail_on must be one of {FAIL_POLICIES}, got {fail_on!r}")
    out_path = raw.get("output_path")
    config = SuiteConfig(
        cases=selectors,
        tol=float(_number(raw, "tol", "config", 1e-6)),
        quad_tol=float(_number(raw, "quad_tol", "config", 1e-8)),
        seed=seed,
        output_format=fmt,
        output_path=None if out_path is None else str(out_path),
        fail_on=fail_on,
        jobs=jobs,
    )
    validate(config)
    return config


def validate(config: SuiteConfig) -> SuiteConfig:
    """Check the scalar invariants and every expanded case."""
    if not config.tol > 0:
        raise ValidationError(f"tol must be positive, got {config.tol!r}")
    if not 0 < config.quad_tol <= config.tol:
        raise ValidationError(f"quad_tol must satisfy 0 < quad_tol <= tol, got {config.quad_tol!r}")
    try:
        config.expand()
    except PreconditionError as exc:
        raise ValidationError(str(exc)) from None
    return config


def load_config(path) -> SuiteConfig:
    """Read, parse and validate a suite file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from None
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"{path}:{mark.line + 1}:{mark.column + 1}" if mark is not None else str(path)
        problem = getattr(exc, "problem", None) or str(exc)
        raise ParseError(f"{where}: {problem}") from None
    return parse_config(raw)


def default_config_path() -> Path:
    return Path(str(resources.files("galue") / "data" / "default_suite.yaml"))


def load_default_config() -> SuiteConfig:
    return load_config(default_config_path())


def with_overrides(config: SuiteConfig, *, only: Sequence[str] = (), **changes: Any) -> SuiteConfig:
    """Apply CLI-style overrides; ``None`` values are ignored."""
    changes = {k: v for k, v in changes.items() if v is not None}
    if "output_format" in changes:
        changes["output_format"] = _ALIASES.get(changes["output_format"], changes["output_format"])
    if "tol" in changes and "quad_tol" not in changes:
        changes["quad_tol"] = min(config.quad_tol, changes["tol"] * 0.01)
    if only:
        try:
            wanted = {CaseId(c) for c in only}
        except ValueError as exc:
            raise ValidationError(str(exc)) from None
        changes["cases"] = [s for s in config.cases if s.case_id in wanted]
    new = dataclasses.replace(config, **changes)
    if new.output_format not in OUTPUT_FORMATS:
        raise ValidationError(f"output_format must be one of {OUTPUT_FORMATS}")
    if new.fail_on not in FAIL_POLICIES:
        raise ValidationError(f"fail_on must be one of {FAIL_POLICIES}")
    return validate(new)
