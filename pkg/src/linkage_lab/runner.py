"""Interpreter for parsed scripts.

Builds rings and modules from declarations, evaluates operator
expressions, runs assertions, theorem checks and corpus suites, and
collects everything into a RunResult whose JSON rendering is
deterministic: statement order is preserved, keys are sorted, no
timings or machine-local paths appear, and the only non-integer
numeric value is the string "infinity".
"""

from __future__ import annotations

import json
import operator
from dataclasses import dataclass, field

from . import theorems
from .corpus import generate_corpus
from .dsl import (
    AssertStmt,
    Call,
    CheckStmt,
    Cmp,
    LetBinding,
    ModuleDecl,
    Name,
    PolyList,
    PrintStmt,
    RingPolyDecl,
    RingQuotientDecl,
    Script,
    SuiteStmt,
    _fmt_value,
)
from .errors import BudgetError, InapplicableError
from .fields import field_from_name
from .homops import (
    dual,
    ext,
    hom_module,
    lambda_module,
    syzygy,
    tensor,
    tor,
    transpose,
    transpose_wrt,
    universal_pushforward,
)
from .invariants import (
    INFINITY,
    canonical_module,
    depth,
    in_auslander_class,
    is_cm,
    is_mcm,
    is_semidualizing,
    krull_dim,
    probe_primes,
    reduced_grade,
    serre_tilde,
)
from .isomorphism import is_isomorphic
from .linkage import is_horizontally_linked, is_stable
from .modules import from_matrix
from .resolutions import betti
from .rings import make_ring

VERSION = "0.1.0"

_CMP = {
    "==": operator.eq,
    "!=": operator.ne,
    "<=": operator.le,
    ">=": operator.ge,
    "<": operator.lt,
    ">": operator.gt,
}

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_INAPPLICABLE = 4


class ScriptError(Exception):
    """Static error found while preparing a parsed script to run."""


@dataclass
class RunConfig:
    bound: int | None = None
    probe_primes: tuple = ()  # extra probe primes, tuples of generators
    seed: int = 0
    fail_fast: bool = False
    strict: bool = False

    def harness(self) -> theorems.HarnessConfig:
        return theorems.HarnessConfig(bound=self.bound, seed=self.seed,
                                      extra_probes=self.probe_primes)

    def to_dict(self) -> dict:
        return {
            "bound": self.bound if self.bound is not None else "default",
            "probe_primes": [list(p) for p in self.probe_primes],
            "seed": self.seed,
            "fail_fast": self.fail_fast,
            "strict": self.strict,
        }


@dataclass
class RunResult:
    config: RunConfig
    declarations: list = field(default_factory=list)
    results: list = field(default_factory=list)
    budget_hit: bool = False
    failed: bool = False
    inapplicable_seen: bool = False

    def exit_code(self) -> int:
        if self.budget_hit:
            return EXIT_BUDGET
        if self.failed:
            return EXIT_FAILED
        if self.config.strict and self.inapplicable_seen:
            return EXIT_INAPPLICABLE
        return EXIT_OK


def _jsonable(v):
    if isinstance(v, bool) or isinstance(v, int):
        return v
    if isinstance(v, float):
        return "infinity" if v == INFINITY else v
    if isinstance(v, dict):
        return {str(k): _jsonable(x)
                for k, x in sorted(v.items(), key=lambda kv: str(kv[0]))}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


class _Runner:
    def __init__(self, config: RunConfig):
        self.config = config
        self.rings: dict = {}
        self.values: dict = {}
        self.result = RunResult(config)

    # ---- static validation

    def validate(self, script: Script):
        for s in script.statements:
            if isinstance(s, CheckStmt):
                tid = self._resolve(s.theorem_id)
                fn, required = theorems._CHECKS[tid]
                given = [k for k, _ in s.bindings]
                if len(set(given)) != len(given):
                    raise ScriptError(
                        f"check {s.theorem_id}: duplicate binding")
                missing = [r for r in required if r not in given]
                if missing:
                    raise ScriptError(
                        f"check {s.theorem_id}: missing bindings "
                        + ", ".join(missing))
            elif isinstance(s, SuiteStmt):
                for t in s.theorem_ids:
                    self._resolve(t)

    @staticmethod
    def _resolve(tid: str):
        try:
            return theorems.resolve_id(tid)
        except ValueError:
            known = ", ".join(t.value for t in theorems.TheoremId)
            raise ScriptError(
                f"unknown theorem id {tid!r} (known: {known})") from None

    # ---- evaluation

    def _module(self, expr):
        if isinstance(expr, Name):
            if expr.ident in self.values:
                return self.values[expr.ident]
            raise ScriptError(f"{expr.ident!r} is not a module")
        if not isinstance(expr, Call):
            raise ScriptError(f"expected a module expression, got {expr!r}")
        f, a = expr.fn, expr.args
        if f == "lambda":
            return lambda_module(self._module(a[0]))
        if f == "transpose":
            return transpose(self._module(a[0]))
        if f == "transpose_wrt":
            return transpose_wrt(self._module(a[0]), self._module(a[1]))
        if f == "syzygy":
            return syzygy(self._module(a[0]), a[1])
        if f == "ext":
            return ext(self._module(a[0]), self._module(a[1]), a[2])
        if f == "tor":
            return tor(self._module(a[0]), self._module(a[1]), a[2])
        if f == "tensor":
            return tensor(self._module(a[0]), self._module(a[1]))
        if f == "hom":
            return hom_module(self._module(a[0]), self._module(a[1]))
        if f == "canonical":
            return canonical_module(self.rings[a[0].ident])
        if f == "dual":
            return dual(self._module(a[0]))
        if f == "pushforward":
            return universal_pushforward(self._module(a[0]),
                                         self._module(a[1])).cokernel
        raise ScriptError(f"unknown operator {f!r}")

    def _predicate(self, call: Call):
        """(passed, detail) for a predicate call."""
        cfg = self.config
        f, a = call.fn, call.args
        if f == "is_horizontally_linked":
            rep = is_horizontally_linked(self._module(a[0]), seed=cfg.seed)
            return rep.linked, rep.describe()
        if f == "is_stable":
            stable, free_rank = is_stable(self._module(a[0]))
            return stable, f"free rank {free_rank}"
        if f == "serre_tilde":
            M = self._module(a[0])
            v = serre_tilde(M, a[1],
                            probes=probe_primes(M.ring,
                                                extra=cfg.probe_primes))
            return v.holds(), v.describe()
        if f == "is_cm":
            M = self._module(a[0])
            return is_cm(M), f"depth={_jsonable(depth(M))}, dim={krull_dim(M)}"
        if f == "is_mcm":
            M = self._module(a[0])
            return is_mcm(M), f"depth={_jsonable(depth(M))}, dim={krull_dim(M)}"
        if f == "in_auslander_class":
            v = in_auslander_class(self._module(a[0]), self._module(a[1]),
                                   bound=cfg.bound)
            return v.holds(), v.describe()
        if f == "is_semidualizing":
            cert = is_semidualizing(self._module(a[0]), bound=cfg.bound)
            detail = cert.status_label()
            if cert.failure:
                detail += f": {cert.failure}"
            return cert.valid, detail
        if f == "iso":
            v = is_isomorphic(self._module(a[0]), self._module(a[1]),
                              seed=cfg.seed)
            detail = v.kind
            if v.certificate:
                detail += f": {v.certificate}"
            return v.is_isomorphic(), detail
        raise ScriptError(f"unknown predicate {f!r}")

    def _scalar(self, call: Call):
        """(numeric value, display value) for a scalar call."""
        f, a = call.fn, call.args
        if f == "depth":
            d = depth(self._module(a[0]))
            return d, _jsonable(d)
        if f == "dim":
            d = krull_dim(self._module(a[0]))
            return d, d
        if f == "rgr":
            rg = reduced_grade(self._module(a[0]), self._module(a[1]),
                               bound=self.config.bound)
            num = rg.value if rg.value is not None else INFINITY
            return num, str(rg)
        raise ScriptError(f"unknown scalar {f!r}")

    def _print_value(self, item):
        from .dsl import PREDICATE_FNS, SCALAR_FNS
        if isinstance(item, Call):
            if item.fn in SCALAR_FNS:
                _, display = self._scalar(item)
                return display, ""
            if item.fn in PREDICATE_FNS:
                passed, detail = self._predicate(item)
                return passed, detail
            if item.fn == "hilbert":
                return str(self._module(item.args[0]).hilbert_series()), ""
            if item.fn == "betti":
                row = betti(self._module(item.args[0]), item.args[1])
                return _jsonable(row), ""
        M = self._module(item)
        return M.serialize(), ""

    def _binding(self, value):
        if isinstance(value, int):
            return value
        if isinstance(value, PolyList):
            return list(value.polys)
        if isinstance(value, Name) and value.ident in self.rings:
            return self.rings[value.ident]
        return self._module(value)

    # ---- statements

    def run(self, script: Script) -> RunResult:
        self.validate(script)
        for s in script.statements:
            stop = self._statement(s)
            if stop and self.config.fail_fast:
                break
        return self.result

    def _statement(self, s) -> bool:
        """Execute one statement; True if it failed or hit a budget."""
        try:
            return self._dispatch(s)
        except BudgetError as e:
            self.result.budget_hit = True
            self.result.results.append({
                "kind": "error",
                "name": type(s).__name__,
                "value": f"budget exhausted: {e}",
            })
            return True
        except InapplicableError as e:
            self.result.failed = True
            self.result.results.append({
                "kind": "error",
                "name": type(s).__name__,
                "value": f"operation not applicable: {e}",
            })
            return True

    def _dispatch(self, s) -> bool:
        cfg = self.config
        if isinstance(s, RingPolyDecl):
            ring = make_ring(field_from_name(s.field_name), s.variables)
            self.rings[s.name] = ring
            self.result.declarations.append(
                {"kind": "ring", "name": s.name, "key": ring.key()})
            return False
        if isinstance(s, RingQuotientDecl):
            base = self.rings[s.base]
            ring = make_ring(base.field, base.names,
                             list(base.relations) + list(s.polys))
            self.rings[s.name] = ring
            self.result.declarations.append(
                {"kind": "ring", "name": s.name, "key": ring.key()})
            return False
        if isinstance(s, ModuleDecl):
            ring = self.rings[s.ring]
            rows = ([list(row) for row in s.matrix]
                    or [[] for _ in s.twists])  # no relations: free module
            M = from_matrix(ring, s.twists, rows)
            self.values[s.name] = M
            self.result.declarations.append(
                {"kind": "module", "name": s.name,
                 "presentation": M.serialize()})
            return False
        if isinstance(s, LetBinding):
            M = self._module(s.expr)
            self.values[s.name] = M
            self.result.declarations.append(
                {"kind": "let", "name": s.name,
                 "expr": _fmt_value(s.expr),
                 "presentation": M.serialize()})
            return False
        if isinstance(s, AssertStmt):
            if isinstance(s.predicate, Cmp):
                num, display = self._scalar(s.predicate.call)
                want = s.predicate.value
                passed = _CMP[s.predicate.op](num, want)
                detail = f"{_fmt_value(s.predicate.call)} = {display}"
            else:
                passed, detail = self._predicate(s.predicate)
            self.result.results.append({
                "kind": "assert",
                "name": _fmt_value(s.predicate),
                "value": {"passed": bool(passed), "detail": str(detail)},
            })
            if not passed:
                self.result.failed = True
            return not passed
        if isinstance(s, PrintStmt):
            value, detail = self._print_value(s.item)
            entry = {"kind": "print", "name": _fmt_value(s.item),
                     "value": _jsonable(value)}
            if detail:
                entry["detail"] = detail
            self.result.results.append(entry)
            return False
        if isinstance(s, CheckStmt):
            tid = theorems.resolve_id(s.theorem_id)
            bindings = {k: self._binding(v) for k, v in s.bindings}
            report = theorems.check(tid, bindings, cfg.harness())
            shown = ", ".join(f"{k} = {_fmt_value(v)}"
                              for k, v in s.bindings)
            self.result.results.append({
                "kind": "check",
                "name": f"{s.theorem_id}({shown})",
                "report": _jsonable(report.to_dict()),
            })
            return self._note_report(report)
        if isinstance(s, SuiteStmt):
            ring = self.rings[s.ring]
            modules = generate_corpus(ring, s.size)
            ids = ([theorems.resolve_id(t) for t in s.theorem_ids]
                   or list(theorems.SUITE_DEFAULT_IDS))
            instances = theorems.default_instances(ring, modules, ids)
            reports, summary = theorems.run_suite(instances, cfg.harness())
            failed = False
            for r in reports:
                failed = self._note_report(r) or failed
            if not summary["suite_passed"]:
                self.result.failed = True
                failed = True
            self.result.results.append({
                "kind": "suite",
                "name": f"corpus({s.ring}, {s.size})",
                "report": {
                    "summary": _jsonable(summary),
                    "reports": [_jsonable(r.to_dict()) for r in reports],
                },
            })
            return failed
        raise ScriptError(f"unknown statement {type(s).__name__}")

    def _note_report(self, report) -> bool:
        if "Inapplicable-by-budget" in report.notes:
            self.result.budget_hit = True
            return True
        if report.verdict == "Refuted":
            self.result.failed = True
            return True
        if report.verdict == "Inapplicable":
            self.result.inapplicable_seen = True
            return self.config.strict
        return False


def execute(script: Script, config: RunConfig | None = None) -> RunResult:
    return _Runner(config or RunConfig()).run(script)


def report_json(result: RunResult) -> str:
    payload = {
        "version": VERSION,
        "config": result.config.to_dict(),
        "declarations": result.declarations,
        "results": result.results,
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _text_lines(result: RunResult):
    for d in result.declarations:
        if d["kind"] == "ring":
            yield f"ring    {d['name']} = {d['key']}"
        else:
            gens = d["presentation"].splitlines()[1]
            yield f"{d['kind']:<7} {d['name']}: generators {gens}"
    for r in result.results:
        if r["kind"] == "assert":
            mark = "ok  " if r["value"]["passed"] else "FAIL"
            yield f"assert  {mark} {r['name']}  [{r['value']['detail']}]"
        elif r["kind"] == "print":
            extra = f"  [{r['detail']}]" if "detail" in r else ""
            yield f"print   {r['name']} = {r['value']}{extra}"
        elif r["kind"] == "check":
            rep = r["report"]
            yield (f"check   {rep['theorem_id']} on {rep['instance']}: "
                   f"{rep['verdict']}")
            for note in rep.get("notes", []):
                yield f"        note: {note}"
            if rep.get("witness"):
                yield f"        witness: {rep['witness']}"
        elif r["kind"] == "suite":
            summary = r["report"]["summary"]
            counts = ", ".join(f"{k}={v}"
                               for k, v in sorted(summary["counts"].items()))
            status = "PASS" if summary["suite_passed"] else "FAIL"
            yield f"suite   {r['name']}: {status} ({counts})"
            for rep in r["report"]["reports"]:
                yield (f"        {rep['theorem_id']} on {rep['instance']}: "
                       f"{rep['verdict']}")
        elif r["kind"] == "error":
            yield f"error   {r['name']}: {r['value']}"


def report_text(result: RunResult) -> str:
    lines = list(_text_lines(result))
    lines.append(f"exit {result.exit_code()}")
    return "\n".join(lines) + "\n"
