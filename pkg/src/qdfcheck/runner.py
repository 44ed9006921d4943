"""Run selected claims under one configuration."""

from __future__ import annotations

import importlib
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .claims.base import Claim, ClaimResult
from .claims.charts import compute_chart, compute_suite
from .claims.registry import select
from .errors import FieldError, QdfError, ResourceLimitExceeded
from .fields import field_from_label
from .groebner import Budget, budget_scope, order_scope
from .orders import order_from_label

DEFAULT_FIELDS = {
    "exact": "qq",
    "any": "fp:10007",
    "prime": "fp:10007",
    "prime-i": "fp:10009",
    "i": "fp:10009",
}


class UsageError(QdfError):
    """Bad selection or configuration."""


@dataclass(frozen=True)
class RunConfig:
    field: str = None  # override; None means per-claim defaults
    order: str = "grevlex"
    budget_pairs: int = None
    seed: int = 0
    jobs: int = 1

    def budget(self) -> Budget:
        if self.budget_pairs is None:
            return Budget.from_env()
        return Budget(max_pairs=self.budget_pairs)

    def snapshot(self) -> dict:
        out = asdict(self)
        out.pop("jobs")
        out["budget_pairs"] = self.budget().max_pairs
        out["field"] = self.field or "default"
        return out


def _accepts(kind: str, label: str) -> bool:
    K = field_from_label(label)
    prime = hasattr(K, "p")
    has_i = K.sqrt_minus_one() is not None
    if kind == "exact":
        return not prime
    if kind == "prime":
        return prime
    if kind == "any":
        return True
    if kind == "prime-i":
        return prime and has_i
    if kind == "i":
        return has_i
    raise ValueError(f"unknown field kind {kind!r}")


def resolve_field(claim: Claim, override: str = None) -> str:
    """The field a claim runs over: the override when compatible, else its default."""
    if override is not None:
        label = override.strip().lower()
        if _accepts(claim.fields, label):
            return label
    return DEFAULT_FIELDS[claim.fields]


def validate(config: RunConfig):
    if config.field is not None:
        try:
            field_from_label(config.field)
        except FieldError as exc:
            raise UsageError(str(exc)) from None
    try:
        order_from_label(config.order)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"unknown order {config.order!r}") from exc
    if config.budget_pairs is not None and config.budget_pairs < 1:
        raise UsageError("--budget-pairs must be positive")
    if config.jobs < 1:
        raise UsageError("--jobs must be positive")


def _resolve(path: str):
    module, name = path.split(":")
    return getattr(importlib.import_module(module), name)


def run_claim(claim: Claim, config: RunConfig) -> ClaimResult:
    label = resolve_field(claim, config.field)
    start = time.perf_counter()
    try:
        fn = _resolve(claim.check)
        with order_scope(order_from_label(config.order)), budget_scope(config.budget()):
            out = fn(*claim.args, field_label=label, seed=config.seed)
    except ResourceLimitExceeded as exc:
        status, witness, detail = "resource-limited", [str(exc)], "budget exhausted"
    except Exception as exc:  # a crash is a failure with the error as witness
        status, witness, detail = "fail", [f"{type(exc).__name__}: {exc}"], "check raised"
    else:
        if out.passed is None:
            status = "resource-limited"
        else:
            status = "pass" if out.passed else "fail"
        witness, detail = list(out.witness), out.detail
        if status == "fail" and not witness:
            witness = [detail or "no witness"]
    ms = (time.perf_counter() - start) * 1000.0
    return ClaimResult(claim.id, claim.location, status, label, ms, witness, detail)


def _run_pair(args):
    return run_claim(*args)


@dataclass
class Report:
    config: dict
    results: list = field(default_factory=list)

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "limited": 0}
        for r in self.results:
            counts["limited" if r.status == "resource-limited" else r.status] += 1
        return counts

    @property
    def exit_code(self) -> int:
        s = self.summary
        if s["fail"]:
            return 1
        if s["limited"]:
            return 2
        return 0


def run_claims(patterns=(), config: RunConfig = None) -> Report:
    config = config or RunConfig()
    validate(config)
    claims = select(list(patterns))
    if not claims:
        raise UsageError(f"no claims match {', '.join(patterns)}")
    # memoized charts must not outlive the budget and order they were built under
    compute_chart.cache_clear()
    compute_suite.cache_clear()
    work = [(c, config) for c in claims]
    if config.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_run_pair, work))
    else:
        results = [run_claim(c, config) for c in claims]
    results.sort(key=lambda r: r.id)
    return Report(config.snapshot(), results)
