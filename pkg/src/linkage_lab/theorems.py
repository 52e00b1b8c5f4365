"""Machine-checkable renditions of linkage-theory statements.

Each named check instantiates the hypotheses of one statement on a
concrete module instance, evaluates both sides of the claimed
equivalence or equality, and returns a report with verdict Verified,
Refuted, Inapplicable, or PartiallyVerified.  Hypotheses are evaluated
before conclusions: a failed hypothesis yields Inapplicable, never a
vacuous confirmation.  Quantified claims over all primes are sampled on
the probe-prime set unless they reduce to an exact global criterion;
such claims verify at best partially, while a violation found at a
probe prime is a genuine refutation.  A Refuted verdict reached while
some hypothesis is only bounded or probe-verified carries the
suspected-counterexample flag: the bound must be escalated before the
refutation is trusted.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

from .config import DEFAULT_BUDGETS, default_bound
from .errors import BudgetError, InapplicableError
from .homops import (
    ext,
    ext_to_ambient,
    is_nth_cosyzygy_witness,
    lambda_module,
    tensor,
    transpose,
    transpose_wrt,
)
from .invariants import (
    INFINITY,
    _finite_pd,
    canonical_module,
    cohomological_deficiency,
    depth,
    depth_at_prime,
    dim_at_prime,
    gc_dim,
    in_auslander_class,
    induced_semidualizing,
    is_canonical_module,
    is_cm,
    is_eilenberg_maclane,
    is_finite_length,
    is_gc_gorenstein_ideal,
    is_gc_perfect_ideal,
    is_generalized_cm,
    is_mcm,
    is_reduced_gc_perfect,
    is_semidualizing,
    krull_dim,
    local_cohomology_degrees,
    m_in_ass,
    n_torsionfree_degree,
    probe_primes,
    reduced_grade,
    ring_depth,
    ring_depth_at_prime,
    ring_dim,
    ring_is_cm,
    ring_is_gorenstein,
    serre_tilde,
)
from .isomorphism import is_isomorphic
from .linkage import (
    is_horizontally_linked,
    is_self_linked,
    is_stable,
    is_syzygy_module,
)
from .modules import (
    ModulePresentation,
    annihilator,
    change_ring,
    cyclic_module,
    free_module,
    ideal_contains,
    minimalize,
    subquotient,
    twist_module,
    _intersect_ideals,
)


class TheoremId(str, enum.Enum):
    THM_MS = "THM_MS"
    PROP_T1 = "PROP_T1"
    PROP_P3 = "PROP_P3"
    PROP_T13 = "PROP_T13"
    COR_C2 = "COR_C2"
    LEM_LEM2 = "LEM_LEM2"
    THM_TH5 = "THM_TH5"
    COR_COR7 = "COR_COR7"
    THM_THEOREM1 = "THM_THEOREM1"
    THM_THE1 = "THM_THE1"
    COR_THEOREM3 = "COR_THEOREM3"
    THM_PROP_EVEN = "THM_PROP_EVEN"
    THM_TH1 = "THM_TH1"
    COR_COR5 = "COR_COR5"
    COR_COR6 = "COR_COR6"
    THM_COR3 = "THM_COR3"
    THM_TH2 = "THM_TH2"
    COR_SELF = "COR_SELF"
    THM_TH3 = "THM_TH3"
    THM_TH6 = "THM_TH6"
    PROP_XTM = "PROP_XTM"
    THM_TH4 = "THM_TH4"
    THM_TH7 = "THM_TH7"
    COR_COR1 = "COR_COR1"
    COR_COR4 = "COR_COR4"
    REMARK3_I = "REMARK3_I"
    G3_AB_FORMULA = "G3_AB_FORMULA"


@dataclass
class HarnessConfig:
    bound: int | None = None
    budgets: object = None
    seed: int = 0
    extra_probes: tuple = ()  # extra probe primes, each a tuple of gens

    def resolve_bound(self, ring) -> int:
        return self.bound if self.bound is not None else default_bound(ring)

    def resolve_budgets(self):
        return self.budgets or DEFAULT_BUDGETS

    def probes_for(self, ring):
        return probe_primes(ring, extra=self.extra_probes)


@dataclass
class HypothesisStatus:
    name: str
    label: str  # Exact | Failed | BoundedTrue(B) | ProbeVerified(..) | Unknown
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "label": self.label, "detail": self.detail}


@dataclass
class Side:
    """One side of an equivalence: a truth value and how it was obtained."""

    name: str
    value: bool | None
    exact: bool
    detail: str = ""


@dataclass
class Claim:
    """An atomic sub-conclusion: exact-true/partial-true/exact-false/open."""

    name: str
    status: str  # "exact-true" | "partial-true" | "exact-false" | "open"
    detail: str = ""


@dataclass
class TheoremReport:
    theorem_id: str
    instance: str
    hypothesis_status: list
    verdict: str  # Verified | Refuted | Inapplicable | PartiallyVerified
    witness: str = ""
    notes: list = field(default_factory=list)
    suspected_counterexample: bool = False
    wall_ms: float = 0.0  # in-memory only, never serialized

    def to_dict(self):
        return {
            "theorem_id": self.theorem_id,
            "instance": self.instance,
            "hypothesis_status": [h.to_dict() for h in self.hypothesis_status],
            "verdict": self.verdict,
            "witness": self.witness,
            "notes": list(self.notes),
            "suspected_counterexample": self.suspected_counterexample,
        }

    def summary_line(self) -> str:
        flag = " [suspected counterexample: escalate bounds]" \
            if self.suspected_counterexample else ""
        tail = f" -- {self.witness}" if self.witness else ""
        return f"{self.theorem_id}: {self.verdict}{flag} ({self.instance}){tail}"


# -- hypothesis and claim plumbing -------------------------------------------


def _hyp(name: str, ok: bool, detail: str = "") -> HypothesisStatus:
    return HypothesisStatus(name, "Exact" if ok else "Failed", detail)


def _describe(verdict) -> str:
    fn = getattr(verdict, "describe", None)
    return fn() if fn is not None else str(verdict)


def _hyp_verdict(name: str, verdict) -> HypothesisStatus:
    return HypothesisStatus(name, verdict.status_label(), _describe(verdict))


def _hyp_unknown(name: str, detail: str = "") -> HypothesisStatus:
    return HypothesisStatus(name, "Unknown", detail)


def _side_bool(name: str, value: bool, detail: str = "") -> Side:
    return Side(name, value, True, detail)


def _side_verdict(name: str, verdict) -> Side:
    if verdict.kind == "unknown":
        return Side(name, None, False, verdict.describe())
    return Side(name, verdict.holds(), verdict.exact(), verdict.describe())


def _equivalence_claims(sides) -> list:
    """Pairwise comparison claims for an n-way equivalence."""
    claims = []
    for i in range(len(sides)):
        for j in range(i + 1, len(sides)):
            a, b = sides[i], sides[j]
            name = f"{a.name} <=> {b.name}"
            if a.value is None or b.value is None:
                claims.append(Claim(name, "open", "a side is undetermined"))
            elif a.value == b.value:
                status = "exact-true" if a.exact and b.exact else "partial-true"
                claims.append(Claim(
                    name, status, f"both {a.value}"))
            elif a.exact and b.exact:
                claims.append(Claim(
                    name, "exact-false",
                    f"{a.name}={a.value} ({a.detail}) but "
                    f"{b.name}={b.value} ({b.detail})"))
            else:
                claims.append(Claim(
                    name, "open",
                    "sides disagree but one is only probe/bounded: "
                    f"{a.name}={a.value}, {b.name}={b.value}"))
    return claims


def _implication_claim(a: Side, b: Side) -> Claim:
    name = f"{a.name} => {b.name}"
    if a.value is False and a.exact:
        return Claim(name, "exact-true", "antecedent fails")
    if b.value is True and b.exact:
        return Claim(name, "exact-true", "consequent holds")
    if a.value is None or b.value is None:
        return Claim(name, "open", "a side is undetermined")
    if a.value and b.value:
        return Claim(name, "partial-true", "holds up to probes/bounds")
    if a.value and not b.value and a.exact and b.exact:
        return Claim(name, "exact-false",
                     f"{a.name} holds ({a.detail}) but {b.name} fails "
                     f"({b.detail})")
    return Claim(name, "open", "inexact sides disagree")


def _equality_claim(name: str, lhs, rhs, detail: str = "") -> Claim:
    if lhs == rhs:
        return Claim(name, "exact-true", f"{lhs} = {rhs}; {detail}")
    return Claim(name, "exact-false", f"{lhs} != {rhs}; {detail}")


def _finish(tid, instance, hyps, claims, *, notes=()) -> TheoremReport:
    notes = list(notes)
    for h in hyps:
        if h.label == "Failed":
            return TheoremReport(
                tid.value, instance, hyps, "Inapplicable",
                witness=f"hypothesis failed: {h.name}"
                + (f" ({h.detail})" if h.detail else ""),
                notes=notes)
        if h.label == "Unknown":
            return TheoremReport(
                tid.value, instance, hyps, "Inapplicable",
                witness=f"hypothesis undetermined: {h.name}"
                + (f" ({h.detail})" if h.detail else ""),
                notes=notes)
    all_exact_hyps = all(h.label == "Exact" for h in hyps)
    for c in claims:
        if c.status == "exact-false":
            return TheoremReport(
                tid.value, instance, hyps, "Refuted",
                witness=f"{c.name}: {c.detail}",
                notes=notes,
                suspected_counterexample=not all_exact_hyps)
    if all(c.status == "exact-true" for c in claims):
        return TheoremReport(tid.value, instance, hyps, "Verified",
                             notes=notes)
    open_notes = [f"{c.name}: {c.detail}" for c in claims
                  if c.status in ("open", "partial-true")]
    return TheoremReport(tid.value, instance, hyps, "PartiallyVerified",
                         notes=notes + open_notes)


# -- shared sub-evaluations ---------------------------------------------------


def _unit(ring) -> ModulePresentation:
    return free_module(ring, [0])


def _label(bindings, M: ModulePresentation) -> str:
    lab = bindings.get("label")
    if lab:
        return lab
    return f"module({M.n_gens()} gens, twists {list(M.gen_twists)})"


def _instance(tid, bindings, M) -> str:
    return f"{_label(bindings, M)} over {M.ring.key()}"


def _parse_ideal(ring, gens):
    out = []
    for g in gens:
        p = ring.poly_ring.parse(g) if isinstance(g, str) else g
        out.append(p)
    return out


def _semidualizing_hyp(C, cfg) -> HypothesisStatus:
    cert = is_semidualizing(C, bound=cfg.resolve_bound(C.ring),
                            budgets=cfg.resolve_budgets())
    if not cert.valid:
        return _hyp("C is semidualizing", False, cert.failure)
    if cert.ext_bound is None:
        return _hyp("C is semidualizing", True, "exact certificate")
    return HypothesisStatus("C is semidualizing",
                            f"BoundedTrue({cert.ext_bound})",
                            "homothety exact; self-Ext vanishing scanned")


def _linked_hyp(M, cfg):
    report = is_horizontally_linked(M, budgets=cfg.resolve_budgets(),
                                    seed=cfg.seed)
    h = _hyp("M is horizontally linked", report.linked, report.describe())
    return h, report


def _auslander_hyp(name, M, C, cfg) -> HypothesisStatus:
    v = in_auslander_class(M, C, bound=cfg.resolve_bound(M.ring),
                           budgets=cfg.resolve_budgets())
    if v.kind == "unknown":
        return _hyp_unknown(name, v.describe())
    if not v.holds():
        return HypothesisStatus(name, "Failed", v.describe())
    return _hyp_verdict(name, v)


def _gcdim_hyp(name, M, C, cfg, *, positive=False):
    v = gc_dim(M, C, bound=cfg.resolve_bound(M.ring),
               budgets=cfg.resolve_budgets())
    if v.kind == "unknown":
        return _hyp_unknown(name, str(v)), v
    if not v.is_finite():
        return HypothesisStatus(name, "Failed", str(v)), v
    if positive and v.kind == "zero":
        return HypothesisStatus(name, "Failed",
                                "G-dimension is zero, not positive"), v
    return _hyp_verdict(name, v), v


def _finite_gdim_lambda_hyp(lam, cfg):
    """G-dimension (coefficient R) of the linked module is finite."""
    R = lam.ring
    if ring_is_gorenstein(R):
        return _hyp("G-dim of the linked module is finite", True,
                    "Gorenstein ring")
    v = gc_dim(lam, _unit(R), bound=cfg.resolve_bound(R),
               budgets=cfg.resolve_budgets())
    if v.is_finite():
        return _hyp_verdict("G-dim of the linked module is finite", v)
    if v.kind == "infinite":
        return HypothesisStatus("G-dim of the linked module is finite",
                                "Failed", str(v))
    return _hyp_unknown("G-dim of the linked module is finite", str(v))


def _ext_window_vanishes(M, C, lo, hi, cfg):
    """(all Ext^i(M, C) = 0 for lo <= i <= hi, witness index or None)."""
    for i in range(lo, hi + 1):
        if not ext(M, C, i, budgets=cfg.resolve_budgets()).is_zero():
            return False, i
    return True, None


def _serre_side(name, M, k, probes) -> Side:
    v = serre_tilde(M, k, probes=probes)
    return _side_verdict(f"{name} satisfies S~_{k}", v)


def _lcd_window_empty(M, lo_excl, hi_excl) -> tuple:
    """No nonvanishing local cohomology strictly between the bounds."""
    degs = [i for i in local_cohomology_degrees(M)
            if lo_excl < i < hi_excl]
    return (not degs), degs


def _cm_ring_hyp(R) -> HypothesisStatus:
    return _hyp("the ring is Cohen-Macaulay", ring_is_cm(R),
                f"depth {ring_depth(R)}, dim {ring_dim(R)}")


def _tensor_canonical(M):
    return tensor(M, canonical_module(M.ring))


def _ideal_as_module(ring, gens) -> ModulePresentation:
    cols = [{0: g} for g in gens]
    pres, _ = subquotient(ring, [0], cols, [],
                          max_degree=DEFAULT_BUDGETS.max_degree)
    return pres


def _matches_canonical_ideal(ring, gens, cfg):
    """The ideal, as a submodule of R, is the canonical module up to shift."""
    omega = canonical_module(ring)
    O = minimalize(_ideal_as_module(ring, gens))
    if O.is_zero():
        return False, "the ideal is zero"
    a = min(omega.gen_twists) - min(O.gen_twists)
    v = is_isomorphic(O, twist_module(omega, a),
                      budgets=cfg.resolve_budgets(), seed=cfg.seed)
    if v.is_isomorphic():
        return True, f"ideal = canonical module twisted by {a}"
    return False, f"not isomorphic to the canonical module: {v.certificate}"


def _ncm_probes(M, probes):
    """Probe primes where M is supported and not locally Cohen-Macaulay."""
    out = []
    for p in probes:
        dep = depth_at_prime(M, p)
        if dep == INFINITY:
            continue
        if dep != dim_at_prime(M, p):
            out.append(p)
    return out


def _ng_probes(M, probes):
    """Probe primes with nonzero local G-dimension.

    Valid under a finite global G_C-dimension hypothesis, where the
    local dimension is the local depth gap: nonzero exactly when
    depth M_p < depth R_p (support misses count as zero).
    """
    out = []
    for p in probes:
        dep = depth_at_prime(M, p)
        if dep == INFINITY:
            continue
        if dep < ring_depth_at_prime(M.ring, p):
            out.append(p)
    return out


# -- the checks ---------------------------------------------------------------


def _check_thm_ms(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    tid = TheoremId.THM_MS
    instance = _instance(tid, bindings, M)
    hyps = []
    budgets = cfg.resolve_budgets()
    ring = M.ring
    stable, free_rank = is_stable(M, budgets=budgets)
    ext1 = ext(transpose(M), _unit(ring), 1, budgets=budgets).is_zero()
    syz = is_syzygy_module(M, budgets=budgets)
    lam2 = lambda_module(lambda_module(M, budgets=budgets), budgets=budgets)
    iso = is_isomorphic(M, lam2, budgets=budgets, seed=cfg.seed)
    sides = [
        Side("M = lambda^2 M (horizontally linked)",
             iso.is_isomorphic() if iso.resolved() else None,
             iso.resolved(), iso.certificate),
        _side_bool("stable and Ext^1(Tr M, R) = 0", stable and ext1,
                   f"stable={stable} (free rank {free_rank}), "
                   f"Ext^1 vanishes={ext1}"),
        _side_bool("stable and a syzygy module", stable and syz,
                   f"stable={stable}, embeds in a free module={syz}"),
    ]
    return _finish(tid, instance, hyps, _equivalence_claims(sides))


def _check_prop_t1(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    n = int(bindings["n"])
    tid = TheoremId.PROP_T1
    instance = _instance(tid, bindings, M) + f", n={n}"
    hyps = [_semidualizing_hyp(C, cfg), _hyp("n >= 1", n >= 1)]
    budgets = cfg.resolve_budgets()
    probes = cfg.probes_for(M.ring)

    TC = transpose_wrt(M, C, budgets=budgets)
    i_ok, i_wit = _ext_window_vanishes(TC, C, 1, n, cfg)
    side_i = _side_bool(f"Ext^i(Tr_C M, C) = 0 for 1..{n}", i_ok,
                        "" if i_ok else f"Ext^{i_wit} != 0")
    ok, step = is_nth_cosyzygy_witness(M, C, n, budgets=budgets)
    side_ii = _side_bool(
        f"M is an {n}th C-syzygy", ok,
        "iterated universal pushforward succeeds" if ok
        else f"pushforward obstructed at step {step}")
    side_iii = _serre_side("M", M, n, probes)

    claims = [
        _implication_claim(side_i, side_ii),
        _implication_claim(side_ii, side_iii),
    ]
    notes = []
    # converse under finite G_C-dimension on the small-depth locus
    locus = _finite_gcdim_on_locus_hyp(M, C, n - 1)
    if locus.label == "Exact":
        hyps.append(locus)
        claims.append(_implication_claim(side_iii, side_i))
    else:
        notes.append(
            "converse (S~_n => Ext vanishing) skipped: finite G_C-dimension "
            f"on the depth <= {n - 1} locus not certified")
    return _finish(tid, instance, hyps, claims, notes=notes)


def _finite_gcdim_on_locus_hyp(M, C, t) -> HypothesisStatus:
    """Finite G_C-dimension of M at all primes of depth <= t.

    Exact certificates only: a Gorenstein ring with free rank-one C, or
    C the canonical module over a Cohen-Macaulay ring (where every
    module has finite G_C-dimension).
    """
    R = M.ring
    name = f"finite G_C-dimension on the depth <= {t} locus"
    Cmin = minimalize(C)
    if Cmin.n_rels() == 0 and Cmin.n_gens() == 1 and ring_is_gorenstein(R):
        return _hyp(name, True, "Gorenstein ring, free coefficient module")
    if ring_is_cm(R) and is_canonical_module(Cmin):
        return _hyp(name, True, "canonical coefficient module")
    return _hyp_unknown(name, "no exact certificate for the locus hypothesis")


def _finite_injdim_on_locus_hyp(C, t) -> HypothesisStatus:
    """Finite injective dimension of C at all primes of depth <= t."""
    R = C.ring
    name = f"C has finite injective dimension on the depth <= {t} locus"
    Cmin = minimalize(C)
    if Cmin.n_rels() == 0 and Cmin.n_gens() == 1 and ring_is_gorenstein(R):
        return _hyp(name, True, "Gorenstein ring, free coefficient module")
    if ring_is_cm(R) and is_canonical_module(Cmin):
        return _hyp(name, True, "canonical module has finite injective "
                                "dimension")
    return _hyp_unknown(name, "no exact certificate for the locus hypothesis")


def _locus_finite_gdim_hyp(M, C, t) -> HypothesisStatus:
    """gd(M_p) finite on the depth <= t locus, via either exact route.

    Certified either directly (finite G-dimension of M against R) or
    through finite injective dimension of C on the locus.
    """
    locus = _finite_gcdim_on_locus_hyp(M, _unit(M.ring), t)
    if locus.label == "Exact":
        return locus
    alt = _finite_injdim_on_locus_hyp(C, t)
    if alt.label == "Exact":
        return alt
    return locus


def _check_prop_p3(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    n = int(bindings["n"])
    tid = TheoremId.PROP_P3
    instance = _instance(tid, bindings, M) + f", n={n}"
    R = M.ring
    hyps = [_cm_ring_hyp(R), _hyp("n >= 1", n >= 1)]
    if hyps[0].label == "Failed":
        return _finish(tid, instance, hyps, [])
    d = ring_dim(R)
    probes = cfg.probes_for(R)
    linked_h, _ = _linked_hyp(M, cfg)
    hyps.append(linked_h)
    MW = _tensor_canonical(M)
    s1 = serre_tilde(MW, 1, probes=probes)
    hyps.append(_hyp_verdict("M (x) omega satisfies S~_1", s1)
                if s1.holds() or s1.kind == "unknown"
                else HypothesisStatus("M (x) omega satisfies S~_1",
                                      "Failed", s1.describe()))
    lam = lambda_module(M, budgets=cfg.resolve_budgets())
    side_i = _serre_side("lambda M", lam, n, probes)
    empty, degs = _lcd_window_empty(MW, d - n, d)
    side_ii = _side_bool(
        f"H^i_m(M (x) omega) = 0 for {d - n} < i < {d}", empty,
        "" if empty else f"nonvanishing local cohomology at {degs}")
    return _finish(tid, instance, hyps,
                   _equivalence_claims([side_i, side_ii]))


def _check_prop_t13(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    n = int(bindings["n"])
    tid = TheoremId.PROP_T13
    instance = _instance(tid, bindings, M) + f", n={n}"
    hyps = [_semidualizing_hyp(C, cfg), _hyp("n >= 1", n >= 1)]
    budgets = cfg.resolve_budgets()
    probes = cfg.probes_for(M.ring)
    T = transpose(M)
    i_ok, i_wit = _ext_window_vanishes(T, C, 1, n, cfg)
    side_i = _side_bool(f"Ext^i(Tr M, C) = 0 for 1..{n}", i_ok,
                        "" if i_ok else f"Ext^{i_wit} != 0")
    MC = tensor(M, C, budgets=budgets)
    ok, step = is_nth_cosyzygy_witness(MC, C, n, budgets=budgets)
    side_ii = _side_bool(
        f"M (x) C is an {n}th C-syzygy", ok,
        "iterated universal pushforward succeeds" if ok
        else f"pushforward obstructed at step {step}")
    side_iii = _serre_side("M (x) C", MC, n, probes)
    claims = [
        _implication_claim(side_i, side_ii),
        _implication_claim(side_ii, side_iii),
    ]
    notes = []
    locus = _finite_injdim_on_locus_hyp(C, n - 1)
    if locus.label == "Exact":
        hyps.append(locus)
        claims.append(_implication_claim(side_iii, side_i))
    else:
        notes.append("converse skipped: finite injective dimension of C on "
                     f"the depth <= {n - 1} locus not certified")
    return _finish(tid, instance, hyps, claims, notes=notes)


def _check_cor_c2(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    n = int(bindings["n"])
    tid = TheoremId.COR_C2
    instance = _instance(tid, bindings, M) + f", n={n}"
    R = M.ring
    hyps = [_cm_ring_hyp(R), _hyp("n >= 1", n >= 1)]
    if hyps[0].label == "Failed":
        return _finish(tid, instance, hyps, [])
    d = ring_dim(R)
    probes = cfg.probes_for(R)
    linked_h, _ = _linked_hyp(M, cfg)
    hyps.append(linked_h)
    MW = _tensor_canonical(M)
    s1 = serre_tilde(MW, 1, probes=probes)
    hyps.append(_hyp_verdict("M (x) omega satisfies S~_1", s1)
                if s1.holds() or s1.kind == "unknown"
                else HypothesisStatus("M (x) omega satisfies S~_1",
                                      "Failed", s1.describe()))
    side_i = _serre_side("M (x) omega", MW, n, probes)
    lam = lambda_module(M, budgets=cfg.resolve_budgets())
    empty, degs = _lcd_window_empty(lam, d - n, d)
    side_ii = _side_bool(
        f"H^i_m(lambda M) = 0 for {d - n} < i < {d}", empty,
        "" if empty else f"nonvanishing local cohomology at {degs}")
    return _finish(tid, instance, hyps,
                   _equivalence_claims([side_i, side_ii]))


def _check_lem_lem2(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    n = int(bindings.get("n", 1))
    tid = TheoremId.LEM_LEM2
    instance = _instance(tid, bindings, M) + f", n={n}"
    hyps = [_semidualizing_hyp(C, cfg)]
    hyps.append(_auslander_hyp("M is in the Auslander class of C", M, C, cfg))
    budgets = cfg.resolve_budgets()
    probes = cfg.probes_for(M.ring)
    MC = tensor(M, C, budgets=budgets)
    claims = [
        _equality_claim("depth M = depth(M (x) C)", depth(M), depth(MC)),
        _equality_claim("dim M = dim(M (x) C)", krull_dim(M), krull_dim(MC)),
    ]
    claims.extend(_equivalence_claims([
        _serre_side("M", M, n, probes),
        _serre_side("M (x) C", MC, n, probes),
    ]))
    claims.extend(_equivalence_claims([
        _side_bool("M is Cohen-Macaulay", is_cm(M)),
        _side_bool("M (x) C is Cohen-Macaulay", is_cm(MC)),
    ]))
    return _finish(tid, instance, hyps, claims)


def _check_thm_th5(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    n = int(bindings["n"])
    tid = TheoremId.THM_TH5
    instance = _instance(tid, bindings, M) + f", n={n}"
    hyps = [_semidualizing_hyp(C, cfg), _hyp("n >= 1", n >= 1)]
    hyps.append(_auslander_hyp("M is in the Auslander class of C", M, C, cfg))
    budgets = cfg.resolve_budgets()
    ring = M.ring
    probes = cfg.probes_for(ring)
    T = transpose(M)
    i_ok, i_wit = _ext_window_vanishes(T, _unit(ring), 1, n, cfg)
    side_i = _side_bool(f"Ext^i(Tr M, R) = 0 for 1..{n}", i_ok,
                        "" if i_ok else f"Ext^{i_wit} != 0")
    ii_ok, ii_wit = _ext_window_vanishes(T, C, 1, n, cfg)
    side_ii = _side_bool(f"Ext^i(Tr M, C) = 0 for 1..{n}", ii_ok,
                         "" if ii_ok else f"Ext^{ii_wit} != 0")
    MC = tensor(M, C, budgets=budgets)
    side_iii = _serre_side("M (x) C", MC, n, probes)
    side_iv = _serre_side("M", M, n, probes)
    claims = [
        _implication_claim(side_i, side_ii),
        _implication_claim(side_ii, side_iii),
    ]
    claims.extend(_equivalence_claims([side_iii, side_iv]))
    notes = []
    locus = _locus_finite_gdim_hyp(M, C, n - 1)
    if locus.label == "Exact":
        hyps.append(locus)
        claims.extend(_equivalence_claims([side_i, side_iv]))
    else:
        notes.append("full four-way equivalence skipped: finite G-dimension "
                     f"on the depth <= {n - 1} locus not certified")
    return _finish(tid, instance, hyps, claims, notes=notes)


def _check_cor_cor7(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    n = int(bindings["n"])
    tid = TheoremId.COR_COR7
    instance = _instance(tid, bindings, M) + f", n={n}"
    budgets = cfg.resolve_budgets()
    ring = M.ring
    stable, free_rank = is_stable(M, budgets=budgets)
    hyps = [
        _semidualizing_hyp(C, cfg),
        _hyp("M is stable", stable, f"free rank {free_rank}"),
        _auslander_hyp("M is in the Auslander class of C", M, C, cfg),
        _locus_finite_gdim_hyp(M, C, n - 1),
        _hyp("n >= 1", n >= 1),
    ]
    probes = cfg.probes_for(ring)
    side_i = _serre_side("M", M, n, probes)
    report = is_horizontally_linked(M, budgets=budgets, seed=cfg.seed)
    lam = lambda_module(M, budgets=budgets)
    if n >= 2:
        e_ok, e_wit = _ext_window_vanishes(lam, C, 1, n - 1, cfg)
    else:
        e_ok, e_wit = True, None
    side_ii = _side_bool(
        f"linked and Ext^i(lambda M, C) = 0 for 0 < i < {n}",
        report.linked and e_ok,
        f"linked={report.linked}"
        + ("" if e_ok else f", Ext^{e_wit}(lambda M, C) != 0"))
    return _finish(tid, instance, hyps,
                   _equivalence_claims([side_i, side_ii]))


def _check_thm_theorem1(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    tid = TheoremId.THM_THEOREM1
    instance = _instance(tid, bindings, M)
    R = M.ring
    hyps = [_cm_ring_hyp(R)]
    if hyps[0].label == "Failed":
        return _finish(tid, instance, hyps, [])
    budgets = cfg.resolve_budgets()
    probes = cfg.probes_for(R)
    d = ring_dim(R)
    linked_h, _ = _linked_hyp(M, cfg)
    hyps.append(linked_h)
    MW = _tensor_canonical(M)
    s1 = serre_tilde(MW, 1, probes=probes)
    hyps.append(_hyp_verdict("M (x) omega satisfies S~_1", s1)
                if s1.holds() or s1.kind == "unknown"
                else HypothesisStatus("M (x) omega satisfies S~_1",
                                      "Failed", s1.describe()))
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    lam = lambda_module(M, budgets=budgets)
    dep_lam = depth(lam)
    dep_mw = depth(MW)
    if dep_lam == INFINITY or dep_mw == INFINITY:
        hyps.append(_hyp("the linked module and M (x) omega are nonzero",
                         False, "a side is the zero module"))
        return _finish(tid, instance, hyps, [])
    side_i = _side_bool("M (x) omega is maximal Cohen-Macaulay", is_mcm(MW),
                        f"depth {dep_mw} vs dim {d}")
    side_ii = _side_bool("lambda M is maximal Cohen-Macaulay", is_mcm(lam),
                         f"depth {dep_lam} vs dim {d}")
    t3 = d - dep_lam
    t4 = d - dep_mw
    side_iii = _serre_side(f"M (x) omega (at threshold {t3 + 1})",
                           MW, t3 + 1, probes)
    side_iii.name = f"M (x) omega satisfies S_n for some n > {t3}"
    side_iv = _serre_side(f"lambda M (at threshold {t4 + 1})",
                          lam, t4 + 1, probes)
    side_iv.name = f"lambda M satisfies S_n for some n > {t4}"
    return _finish(tid, instance, hyps,
                   _equivalence_claims([side_i, side_ii, side_iii, side_iv]))


def _check_thm_the1(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    tid = TheoremId.THM_THE1
    instance = _instance(tid, bindings, M)
    R = M.ring
    gens = _parse_ideal(R, bindings["omega_ideal"])
    hyps = [_cm_ring_hyp(R),
            _hyp("the ring is not Gorenstein", not ring_is_gorenstein(R))]
    ok, why = _matches_canonical_ideal(R, gens, cfg)
    hyps.append(_hyp("the canonical module embeds as the given ideal",
                     ok, why))
    budgets = cfg.resolve_budgets()
    probes = cfg.probes_for(R)
    hyps.append(_hyp("M is maximal Cohen-Macaulay", is_mcm(M)))
    linked_h, _ = _linked_hyp(M, cfg)
    hyps.append(linked_h)
    MW = _tensor_canonical(M)
    s1 = serre_tilde(MW, 1, probes=probes)
    hyps.append(_hyp_verdict("M (x) omega satisfies S~_1", s1)
                if s1.holds() or s1.kind == "unknown"
                else HypothesisStatus("M (x) omega satisfies S~_1",
                                      "Failed", s1.describe()))
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    d = ring_dim(R)
    lam = lambda_module(M, budgets=budgets)
    side_i = _side_bool("lambda M is maximal Cohen-Macaulay", is_mcm(lam),
                        f"depth {depth(lam)} vs dim {d}")
    Q = tensor(M, cyclic_module(R, gens), budgets=budgets)
    cm = is_cm(Q)
    dimq = krull_dim(Q)
    side_ii = _side_bool(
        f"M/(omega M) is Cohen-Macaulay of dimension {d - 1}",
        cm and dimq == d - 1,
        f"CM={cm}, dim={dimq}")
    return _finish(tid, instance, hyps,
                   _equivalence_claims([side_i, side_ii]))


def _check_cor_theorem3(bindings, cfg) -> TheoremReport:
    tid = TheoremId.COR_THEOREM3
    ring = bindings["ring"]
    I_gens = _parse_ideal(ring, bindings["I"])
    omega_gens = _parse_ideal(ring, bindings["omega_ideal"])
    budgets = cfg.resolve_budgets()
    RI = minimalize(cyclic_module(ring, I_gens))
    instance = (f"ideal ({', '.join(str(g) for g in I_gens)}) "
                f"over {ring.key()}")
    hyps = [_cm_ring_hyp(ring),
            _hyp("the ring is not Gorenstein", not ring_is_gorenstein(ring))]
    ok, why = _matches_canonical_ideal(ring, omega_gens, cfg)
    hyps.append(_hyp("the canonical module embeds as the given ideal",
                     ok, why))
    # the linked ideal: lambda(R/I) must again be cyclic
    lam = minimalize(lambda_module(RI, budgets=budgets))
    if "J" in bindings:
        J_gens = _parse_ideal(ring, bindings["J"])
    else:
        J_gens = [g for g in annihilator(lam)
                  if not ring.nf(g).is_zero()]
    RJ = minimalize(cyclic_module(ring, J_gens))
    if lam.is_zero() or RJ.is_zero():
        hyps.append(_hyp("R/I is linked to a cyclic module", False,
                         "the linkage image or the candidate R/J is zero"))
        return _finish(tid, instance, hyps, [])
    shift = min(RJ.gen_twists) - min(lam.gen_twists)
    link_iso = is_isomorphic(lam, twist_module(RJ, shift),
                             budgets=budgets, seed=cfg.seed)
    linked_h, _ = _linked_hyp(RI, cfg)
    hyps.append(linked_h)
    hyps.append(_hyp("the linkage image of R/I is R/J",
                     link_iso.is_isomorphic()
                     if link_iso.resolved() else False,
                     f"J = ({', '.join(str(g) for g in J_gens)}); "
                     + link_iso.certificate))
    # I * omega = I intersect omega
    S = ring.poly_ring
    rels = list(ring.relations)
    inter = _intersect_ideals(S, list(I_gens) + rels,
                              list(omega_gens) + rels)
    # the product always sits inside the intersection; equality of the
    # R-ideals is membership of every intersection generator in the
    # product modulo the defining relations
    product = [a * b for a in I_gens for b in omega_gens] + rels
    inter_ok = all(ideal_contains(ring, product, f) for f in inter)
    hyps.append(_hyp("I * omega = I intersect omega", inter_ok,
                     "" if inter_ok
                     else "an intersection generator escapes the product"))
    hyps.append(_hyp("R/I is Cohen-Macaulay", is_cm(RI)))
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    d = ring_dim(ring)
    side_i = _side_bool("R/J is Cohen-Macaulay", is_cm(RJ))
    Q = minimalize(cyclic_module(ring, list(I_gens) + list(omega_gens)))
    cm = is_cm(Q)
    dimq = krull_dim(Q)
    side_ii = _side_bool(
        f"R/(I + omega) is Cohen-Macaulay of dimension {d - 1}",
        cm and dimq == d - 1, f"CM={cm}, dim={dimq}")
    return _finish(tid, instance, hyps,
                   _equivalence_claims([side_i, side_ii]))


def _check_thm_prop_even(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    n = int(bindings["n"])
    tid = TheoremId.THM_PROP_EVEN
    instance = _instance(tid, bindings, M) + f", n={n}"
    R = M.ring
    budgets = cfg.resolve_budgets()
    bound = cfg.resolve_bound(R)
    hyps = [_semidualizing_hyp(C, cfg), _hyp("n >= 1", n >= 1)]
    gh, _ = _gcdim_hyp("M has finite G_C-dimension", M, C, cfg)
    hyps.append(gh)
    links = []
    for key, label in (("ideal", "first"), ("ideal2", "second")):
        gens = _parse_ideal(R, bindings[key])
        gor, g = is_gc_gorenstein_ideal(R, gens, C, bound=bound,
                                        budgets=budgets)
        hyps.append(
            _hyp_verdict(f"the {label} ideal is G_C-Gorenstein", gor)
            if gor.holds() else
            HypothesisStatus(f"the {label} ideal is G_C-Gorenstein",
                             "Failed", gor.describe()))
        ann = annihilator(M)
        inside = all(ideal_contains(R, ann, f) for f in gens)
        hyps.append(_hyp(f"the {label} ideal annihilates M", inside))
        if not inside or not gor.holds():
            continue
        Rq = R.quotient_by(gens)
        Mq = minimalize(change_ring(M, Rq))
        rep = is_horizontally_linked(Mq, budgets=budgets, seed=cfg.seed)
        hyps.append(_hyp(f"M is linked by the {label} ideal", rep.linked,
                         rep.describe()))
        links.append(lambda_module(Mq, budgets=budgets))
    if any(h.label in ("Failed", "Unknown") for h in hyps) or len(links) != 2:
        return _finish(tid, instance, hyps, [])
    M1, M2 = links
    sides = [
        _serre_side("M1 (link through the first ideal)", M1, n,
                    cfg.probes_for(M1.ring)),
        _serre_side("M2 (link through the second ideal)", M2, n,
                    cfg.probes_for(M2.ring)),
    ]
    claims = _equivalence_claims(sides)
    if ring_is_cm(R):
        claims.extend(_equivalence_claims([
            _side_bool("M1 is Cohen-Macaulay", is_cm(M1)),
            _side_bool("M2 is Cohen-Macaulay", is_cm(M2)),
        ]))
    return _finish(tid, instance, hyps, claims)


def _check_thm_th1(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    n = int(bindings["n"])
    tid = TheoremId.THM_TH1
    instance = _instance(tid, bindings, M) + f", n={n}"
    budgets = cfg.resolve_budgets()
    ring = M.ring
    stable, free_rank = is_stable(M, budgets=budgets)
    hyps = [_hyp("M is stable", stable, f"free rank {free_rank}"),
            _hyp("n >= 1", n >= 1)]
    gh, _ = _gcdim_hyp("M has finite G_C-dimension", M, C, cfg)
    hyps.append(gh)
    lam = lambda_module(M, budgets=budgets)
    hyps.append(_auslander_hyp("lambda M is in the Auslander class of C",
                               lam, C, cfg))
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    probes = cfg.probes_for(ring)
    report = is_horizontally_linked(M, budgets=budgets, seed=cfg.seed)

    side_a = _serre_side("M", M, n, probes)
    rgr_ok, rgr_wit = _ext_window_vanishes(lam, _unit(ring), 1, n - 1, cfg)
    side_b = _side_bool(
        f"linked and rgr(lambda M) >= {n}", report.linked and rgr_ok,
        f"linked={report.linked}"
        + ("" if rgr_ok else f", Ext^{rgr_wit}(lambda M, R) != 0"))
    claims = _equivalence_claims([side_a, side_b])
    notes = []
    if report.linked:
        c_ok, c_wit = _ext_window_vanishes(M, C, 1, n - 1, cfg)
        side_c = _side_bool(f"rgr(M, C) >= {n}", c_ok,
                            "" if c_ok else f"Ext^{c_wit}(M, C) != 0")
        side_d = _serre_side("lambda M", lam, n, probes)
        claims.extend(_equivalence_claims([side_c, side_d]))
    else:
        notes.append("part (ii) skipped: M is not horizontally linked")
    return _finish(tid, instance, hyps, claims, notes=notes)


def _check_cor_cor5(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    tid = TheoremId.COR_COR5
    instance = _instance(tid, bindings, M)
    budgets = cfg.resolve_budgets()
    ring = M.ring
    hyps = [_cm_ring_hyp(ring)]
    stable, free_rank = is_stable(M, budgets=budgets)
    hyps.append(_hyp("M is stable", stable, f"free rank {free_rank}"))
    gh, _ = _gcdim_hyp("M has finite G_C-dimension", M, C, cfg)
    hyps.append(gh)
    lam = lambda_module(M, budgets=budgets)
    hyps.append(_auslander_hyp("lambda M is in the Auslander class of C",
                               lam, C, cfg))
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    d = ring_dim(ring)
    probes = cfg.probes_for(ring)
    report = is_horizontally_linked(M, budgets=budgets, seed=cfg.seed)
    dep_m = depth(M)
    side_i = _side_bool("M is maximal Cohen-Macaulay", is_mcm(M),
                        f"depth {dep_m} vs dim {d}")
    side_ii = _side_bool(
        "lambda M is maximal Cohen-Macaulay and M is linked",
        is_mcm(lam) and report.linked,
        f"mCM(lambda M)={is_mcm(lam)}, linked={report.linked}")
    t = d - dep_m if dep_m != INFINITY else 0
    s = serre_tilde(lam, t + 1, probes=probes)
    side_iii = Side(
        f"lambda M satisfies S_n for some n > {t}, and M is linked",
        (s.holds() and report.linked) if s.kind != "unknown" else None,
        s.exact(), s.describe())
    if not report.linked:
        side_iii = _side_bool(side_iii.name, False, "M is not linked")
    return _finish(tid, instance, hyps,
                   _equivalence_claims([side_i, side_ii, side_iii]))


def _check_cor_cor6(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    tid = TheoremId.COR_COR6
    instance = _instance(tid, bindings, M)
    R = M.ring
    budgets = cfg.resolve_budgets()
    bound = cfg.resolve_bound(R)
    gens = _parse_ideal(R, bindings["ideal"])
    hyps = [_cm_ring_hyp(R), _semidualizing_hyp(C, cfg)]
    gh, _ = _gcdim_hyp("M has finite G_C-dimension", M, C, cfg)
    hyps.append(gh)
    perf, g, _v = is_gc_perfect_ideal(R, gens, C, bound=bound,
                                      budgets=budgets)
    hyps.append(_hyp_verdict("the ideal is G_C-perfect", perf)
                if perf.holds()
                else HypothesisStatus("the ideal is G_C-perfect", "Failed",
                                      perf.describe()))
    ann = annihilator(M)
    inside = all(ideal_contains(R, ann, f) for f in gens)
    hyps.append(_hyp("the ideal annihilates M", inside))
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    Rq = R.quotient_by(gens)
    Mq = minimalize(change_ring(M, Rq))
    rep = is_horizontally_linked(Mq, budgets=budgets, seed=cfg.seed)
    hyps.append(_hyp("M is linked by the ideal", rep.linked, rep.describe()))
    K, cert = induced_semidualizing(R, gens, C, bound=bound, budgets=budgets)
    lamq = lambda_module(Mq, budgets=budgets)
    hyps.append(_auslander_hyp(
        "the quotient link is in the Auslander class of the induced "
        "semidualizing module", lamq, K, cfg))
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    sides = [
        _side_bool("M is Cohen-Macaulay", is_cm(M)),
        _side_bool("the quotient link of M is Cohen-Macaulay", is_cm(lamq)),
    ]
    return _finish(tid, instance, hyps, _equivalence_claims(sides))


def _check_thm_cor3(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    tid = TheoremId.THM_COR3
    instance = _instance(tid, bindings, M)
    R = M.ring
    budgets = cfg.resolve_budgets()
    hyps = [_cm_ring_hyp(R)]
    if hyps[0].label == "Failed":
        return _finish(tid, instance, hyps, [])
    linked_h, _ = _linked_hyp(M, cfg)
    hyps.append(linked_h)
    hyps.append(_hyp("M is not Cohen-Macaulay", not is_cm(M)))
    lam = lambda_module(M, budgets=budgets)
    hyps.append(_finite_gdim_lambda_hyp(lam, cfg))
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    d = ring_dim(R)
    cc = cohomological_deficiency(M)
    E = ext_to_ambient(M, R.nvars - cc, budgets=budgets)
    side_i = _side_bool(
        f"H^{cc}_m(M) is finitely generated", is_finite_length(E),
        "tested as dim of the ambient Ext module <= 0")
    dep_lam = depth(lam)
    eq = (dep_lam + cc == d) if dep_lam != INFINITY else False
    probes = cfg.probes_for(R)
    bad = []
    for p in _ncm_probes(M, probes):
        if p.height == R.nvars:
            continue
        dp = depth_at_prime(lam, p)
        if dp != INFINITY and dp + cc <= d:
            bad.append(p.label)
    value = eq and not bad
    # a True value rests on probe sampling; a False value is an exact
    # witness (either the depth equality fails or a probe violates)
    side_ii = Side(
        f"depth(lambda M) + cc(M) = {d} and strict inequality off the "
        "maximal ideal",
        value, exact=not value,
        detail=f"depth(lambda M)={dep_lam}, cc={cc}"
        + (f", violated at probes {bad}" if bad else ""))
    return _finish(tid, instance, hyps,
                   _equivalence_claims([side_i, side_ii]))


def _check_thm_th2(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    tid = TheoremId.THM_TH2
    instance = _instance(tid, bindings, M)
    budgets = cfg.resolve_budgets()
    ring = M.ring
    linked_h, _ = _linked_hyp(M, cfg)
    hyps = [linked_h]
    gh, gv = _gcdim_hyp("M has finite G_C-dimension", M, C, cfg)
    hyps.append(gh)
    lam = lambda_module(M, budgets=budgets)
    hyps.append(_auslander_hyp("lambda M is in the Auslander class of C",
                               lam, C, cfg))
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    side_zero = Side("G_C-dimension of M is zero", gv.kind == "zero",
                     gv.exact(), str(gv))
    probes = [p for p in cfg.probes_for(ring)
              if ring_depth_at_prime(ring, p) >= 1]
    bad = []
    for p in probes:
        dm = depth_at_prime(M, p)
        dl = depth_at_prime(lam, p)
        if dm == INFINITY or dl == INFINITY:
            continue
        if dm + dl <= ring_depth_at_prime(ring, p):
            bad.append(p.label)
    side_probe = Side(
        "depth M_p + depth (lambda M)_p > depth R_p off the depth-zero locus",
        not bad, exact=bool(bad),
        detail=f"violations at {bad}" if bad
        else f"holds at all {len(probes)} probe primes")
    return _finish(tid, instance, hyps,
                   _equivalence_claims([side_zero, side_probe]))


def _check_cor_self(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    tid = TheoremId.COR_SELF
    instance = _instance(tid, bindings, M)
    budgets = cfg.resolve_budgets()
    ring = M.ring
    twist = int(bindings.get("self_twist", 0))
    self_iso = is_self_linked(M, twist=twist, budgets=budgets, seed=cfg.seed)
    hyps = [_hyp("M is horizontally self-linked",
                 self_iso.is_isomorphic() if self_iso.resolved() else False,
                 self_iso.certificate)]
    gh, gv = _gcdim_hyp("M has finite G_C-dimension", M, C, cfg)
    hyps.append(gh)
    hyps.append(_auslander_hyp("M is in the Auslander class of C", M, C, cfg))
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    side_zero = Side("G_C-dimension of M is zero", gv.kind == "zero",
                     gv.exact(), str(gv))
    probes = [p for p in cfg.probes_for(ring)
              if ring_depth_at_prime(ring, p) >= 1]
    bad = []
    for p in probes:
        dm = depth_at_prime(M, p)
        if dm == INFINITY:
            continue
        if 2 * dm <= ring_depth_at_prime(ring, p):
            bad.append(p.label)
    side_probe = Side(
        "depth M_p > (depth R_p)/2 off the depth-zero locus",
        not bad, exact=bool(bad),
        detail=f"violations at {bad}" if bad
        else f"holds at all {len(probes)} probe primes")
    return _finish(tid, instance, hyps,
                   _equivalence_claims([side_zero, side_probe]))


_TH3_RATIONALE = (
    "the largest syzygy order syz(M) is computed as the n-torsionfree "
    "degree max{n : Ext^i(Tr M, R) = 0 for 1 <= i <= n}; under the finite "
    "G-dimension hypothesis the two agree, and the chain rgr(lambda M) <= "
    "syz(M) <= depth(M) is asserted on the computed values")


def _check_thm_th3(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    tid = TheoremId.THM_TH3
    instance = _instance(tid, bindings, M)
    budgets = cfg.resolve_budgets()
    ring = M.ring
    gh, gv = _gcdim_hyp("M has finite positive G_C-dimension", M, C, cfg,
                        positive=True)
    hyps = [gh]
    lam = lambda_module(M, budgets=budgets)
    hyps.append(_auslander_hyp("lambda M is in the Auslander class of C",
                               lam, C, cfg))
    linked_h, _ = _linked_hyp(M, cfg)
    hyps.append(linked_h)
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [], notes=[_TH3_RATIONALE])
    rg = reduced_grade(lam, _unit(ring), bound=cfg.resolve_bound(ring),
                       budgets=budgets)
    if rg.value is None:
        hyps.append(_hyp_unknown("rgr(lambda M) is finite", str(rg)))
        return _finish(tid, instance, hyps, [], notes=[_TH3_RATIONALE])
    t = rg.value
    dep = depth(M)
    cap = dep if dep != INFINITY else 0
    ntf, saturated = n_torsionfree_degree(M, cap, budgets=budgets)
    notes = [_TH3_RATIONALE,
             f"computed chain: rgr(lambda M)={t} <= syz(M)={ntf} <= "
             f"depth(M)={dep}"]
    side_i = _side_bool(
        "depth(M) = syz(M) = rgr(lambda M)",
        dep == ntf == t, f"depth={dep}, syz={ntf}, rgr(lambda M)={t}")
    Et = ext(lam, _unit(ring), t, budgets=budgets)
    side_ii = _side_bool(
        f"the maximal ideal is associated to Ext^{t}(lambda M, R)",
        m_in_ass(Et))
    probes = cfg.probes_for(ring)
    bad = []
    for p in _ng_probes(M, probes):
        dp = depth_at_prime(M, p)
        if dp < dep:
            bad.append(p.label)
    side_iii = Side(
        "depth(M) <= depth M_p on the nonzero-G-dimension locus",
        not bad, exact=bool(bad),
        detail=f"violations at {bad}" if bad else "holds at all probes")
    return _finish(tid, instance, hyps,
                   _equivalence_claims([side_i, side_ii, side_iii]),
                   notes=notes)


def _check_thm_th6(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    tid = TheoremId.THM_TH6
    instance = _instance(tid, bindings, M)
    budgets = cfg.resolve_budgets()
    ring = M.ring
    linked_h, _ = _linked_hyp(M, cfg)
    hyps = [linked_h]
    gh, gv = _gcdim_hyp("M has finite G_C-dimension", M, C, cfg)
    hyps.append(gh)
    lam = lambda_module(M, budgets=budgets)
    hyps.append(_auslander_hyp("lambda M is in the Auslander class of C",
                               lam, C, cfg))
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    notes = []
    claims = []
    probes = cfg.probes_for(ring)
    ng = _ng_probes(M, probes)
    rg = reduced_grade(M, C, bound=cfg.resolve_bound(ring), budgets=budgets)
    if gv.kind == "zero":
        claims.append(Claim(
            "rgr(M, C) = inf over the empty nonzero-G-dimension locus",
            "exact-true" if (rg.value is None and not ng) else "exact-false",
            f"G_C-dim 0: rgr={rg}, nonzero-locus probes={len(ng)}"))
    elif rg.value is None:
        claims.append(Claim("rgr(M, C) is finite", "open", str(rg)))
    else:
        r = rg.value
        below = [p.label for p in ng if depth_at_prime(lam, p) < r]
        attained = [p.label for p in ng if depth_at_prime(lam, p) == r]
        if below:
            claims.append(Claim(
                "rgr(M, C) <= depth (lambda M)_p on the nonzero locus",
                "exact-false", f"probes {below} fall below rgr={r}"))
        elif attained:
            claims.append(Claim(
                f"rgr(M, C) = {r} = min over probe primes of the nonzero "
                "locus", "exact-true", f"attained at {attained}"))
        else:
            claims.append(Claim(
                f"rgr(M, C) = {r} <= all probe values, infimum not attained "
                "on probes", "partial-true",
                "equality witnessed only up to the probe set"))
    # rgr(M) <= rgr(M, C), equality under finite projective dimension
    if rg.value is not None:
        r = rg.value
        ok, wit = _ext_window_vanishes(M, _unit(ring), 1, r - 1, cfg)
        first = wit if not ok else (
            r if not ext(M, _unit(ring), r, budgets=budgets).is_zero()
            else None)
        if first is not None:
            claims.append(Claim(
                "rgr(M) <= rgr(M, C)",
                "exact-true" if first <= r else "exact-false",
                f"rgr(M)={first}, rgr(M, C)={r}"))
        else:
            claims.append(Claim("rgr(M) <= rgr(M, C)", "exact-false",
                                f"Ext^i(M, R) = 0 through {r} so "
                                f"rgr(M) > rgr(M, C) = {r}"))
        pd = _finite_pd(lam, budgets=budgets)
        if pd is not None and first is not None:
            claims.append(_equality_claim(
                "rgr(M) = rgr(M, C) when pd(lambda M) is finite",
                first, r, f"pd(lambda M) = {pd}"))
    return _finish(tid, instance, hyps, claims, notes=notes)


def _check_prop_xtm(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    tid = TheoremId.PROP_XTM
    instance = _instance(tid, bindings, M)
    budgets = cfg.resolve_budgets()
    ring = M.ring
    linked_h, _ = _linked_hyp(M, cfg)
    hyps = [linked_h]
    gh, _gv = _gcdim_hyp("M has finite positive G_C-dimension", M, C, cfg,
                         positive=True)
    hyps.append(gh)
    lam = lambda_module(M, budgets=budgets)
    hyps.append(_auslander_hyp("lambda M is in the Auslander class of C",
                               lam, C, cfg))
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    bound = cfg.resolve_bound(ring)
    rg_c = reduced_grade(M, C, bound=bound, budgets=budgets)
    rg_l = reduced_grade(lam, _unit(ring), bound=bound, budgets=budgets)
    if rg_c.value is None or rg_l.value is None:
        hyps.append(_hyp_unknown(
            "both reduced grades are finite",
            f"rgr(M, C)={rg_c}, rgr(lambda M)={rg_l}"))
        return _finish(tid, instance, hyps, [])
    t_m = rg_c.value + rg_l.value
    probes = [p for p in cfg.probes_for(ring)
              if ring_depth_at_prime(ring, p) <= t_m - 1]
    bad = []
    for p in probes:
        dp = depth_at_prime(M, p)
        if dp == INFINITY:
            continue
        if dp < ring_depth_at_prime(ring, p):
            bad.append(p.label)
    claims = [Claim(
        f"G_C-dimension of M vanishes at probe primes of depth <= {t_m - 1}",
        "exact-false" if bad else "partial-true",
        f"violations at {bad}" if bad
        else f"holds at all {len(probes)} probe primes in the locus")]
    return _finish(tid, instance, hyps, claims,
                   notes=[f"t_M = rgr(M, C) + rgr(lambda M) = {t_m}"])


def _check_thm_th4(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    tid = TheoremId.THM_TH4
    instance = _instance(tid, bindings, M)
    budgets = cfg.resolve_budgets()
    ring = M.ring
    hyps = [_cm_ring_hyp(ring)]
    red, gv, rg = is_reduced_gc_perfect(M, C, bound=cfg.resolve_bound(ring),
                                        budgets=budgets)
    hyps.append(_hyp_verdict("M is reduced G_C-perfect", red)
                if red.holds()
                else HypothesisStatus("M is reduced G_C-perfect", "Failed",
                                      red.describe()))
    lam = lambda_module(M, budgets=budgets)
    hyps.append(_auslander_hyp("lambda M is in the Auslander class of C",
                               lam, C, cfg))
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    n = gv.value
    En = ext(M, C, n, budgets=budgets)
    dep_m, dep_l, dep_e = depth(M), depth(lam), depth(En)
    if INFINITY in (dep_m, dep_l, dep_e):
        hyps.append(_hyp("all depth terms are finite", False,
                         "a zero module appeared"))
        return _finish(tid, instance, hyps, [])
    claims = [_equality_claim(
        "depth M + depth lambda M = depth R + depth Ext^n(M, C)",
        dep_m + dep_l, ring_depth(ring) + dep_e,
        f"depth M={dep_m}, depth lambda M={dep_l}, depth R="
        f"{ring_depth(ring)}, depth Ext^{n}={dep_e}")]
    return _finish(tid, instance, hyps, claims)


def _check_thm_th7(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    tid = TheoremId.THM_TH7
    instance = _instance(tid, bindings, M)
    budgets = cfg.resolve_budgets()
    ring = M.ring
    linked_h, _ = _linked_hyp(M, cfg)
    hyps = [linked_h]
    gh, gv = _gcdim_hyp("M has finite positive G_C-dimension", M, C, cfg,
                        positive=True)
    hyps.append(gh)
    lam = lambda_module(M, budgets=budgets)
    hyps.append(_auslander_hyp("lambda M is in the Auslander class of C",
                               lam, C, cfg))
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    n = gv.value
    ok, wit = _ext_window_vanishes(M, C, 1, n - 1, cfg)
    top = not ext(M, C, n, budgets=budgets).is_zero()
    side_red = _side_bool(
        f"M is reduced G_C-perfect (rgr(M, C) = {n})", ok and top,
        f"Ext vanishing below {n}: {ok}"
        + ("" if ok else f" (Ext^{wit} != 0)")
        + f", Ext^{n}(M, C) != 0: {top}")
    side_serre = _serre_side("lambda M", lam, n, cfg.probes_for(ring))
    return _finish(tid, instance, hyps,
                   _equivalence_claims([side_red, side_serre]))


def _check_cor_cor1(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    tid = TheoremId.COR_COR1
    instance = _instance(tid, bindings, M)
    R = M.ring
    budgets = cfg.resolve_budgets()
    hyps = [_cm_ring_hyp(R)]
    linked_h, _ = _linked_hyp(M, cfg)
    hyps.append(linked_h)
    d = ring_dim(R)
    n = depth(M)
    hyps.append(_hyp(f"depth M = {n} < dim R = {d}",
                     n != INFINITY and n < d))
    lam = lambda_module(M, budgets=budgets)
    hyps.append(_finite_gdim_lambda_hyp(lam, cfg))
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    side_em = _side_bool(
        "M is an Eilenberg-MacLane module", is_eilenberg_maclane(M),
        f"local cohomology degrees {local_cohomology_degrees(M)}")
    side_serre = _serre_side("lambda M", lam, d - int(n), cfg.probes_for(R))
    return _finish(tid, instance, hyps,
                   _equivalence_claims([side_em, side_serre]))


def _check_cor_cor4(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    tid = TheoremId.COR_COR4
    instance = _instance(tid, bindings, M)
    R = M.ring
    budgets = cfg.resolve_budgets()
    hyps = [_cm_ring_hyp(R)]
    linked_h, _ = _linked_hyp(M, cfg)
    hyps.append(linked_h)
    hyps.append(_hyp("M is not Cohen-Macaulay", not is_cm(M)))
    hyps.append(_hyp("M is an Eilenberg-MacLane module",
                     is_eilenberg_maclane(M),
                     f"local cohomology degrees "
                     f"{local_cohomology_degrees(M)}"))
    lam = lambda_module(M, budgets=budgets)
    hyps.append(_finite_gdim_lambda_hyp(lam, cfg))
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    d = ring_dim(R)
    dep_m, dep_l = depth(M), depth(lam)
    side_gcm = _side_bool("M is generalized Cohen-Macaulay",
                          is_generalized_cm(M))
    eq = dep_l + dep_m == d if INFINITY not in (dep_l, dep_m) else False
    probes = cfg.probes_for(R)
    bad = []
    for p in _ncm_probes(M, probes):
        if p.height == R.nvars:
            continue
        dp = depth_at_prime(lam, p)
        if dp != INFINITY and dp + dep_m <= d:
            bad.append(p.label)
    value = eq and not bad
    side_rhs = Side(
        f"depth(lambda M) + depth(M) = {d} with strict local inequalities "
        "off the maximal ideal", value,
        exact=(not eq) or bool(bad),
        detail=f"depth lambda M={dep_l}, depth M={dep_m}"
        + (f", violations at {bad}" if bad else ""))
    return _finish(tid, instance, hyps,
                   _equivalence_claims([side_gcm, side_rhs]))


def _check_remark3_i(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    tid = TheoremId.REMARK3_I
    instance = _instance(tid, bindings, M)
    budgets = cfg.resolve_budgets()
    hyps = []
    lhs = tensor(transpose(M), C, budgets=budgets)
    rhs = transpose_wrt(M, C, budgets=budgets)
    v = is_isomorphic(lhs, rhs, budgets=budgets, seed=cfg.seed)
    if not v.resolved():
        return _finish(tid, instance, hyps,
                       [Claim("Tr M (x) C = Tr_C M", "open", v.certificate)])
    claims = [Claim("Tr M (x) C = Tr_C M",
                    "exact-true" if v.is_isomorphic() else "exact-false",
                    v.certificate)]
    return _finish(tid, instance, hyps, claims)


def _check_g3_ab_formula(bindings, cfg) -> TheoremReport:
    M = minimalize(bindings["M"])
    C = minimalize(bindings["C"])
    tid = TheoremId.G3_AB_FORMULA
    instance = _instance(tid, bindings, M)
    budgets = cfg.resolve_budgets()
    ring = M.ring
    hyps = [_semidualizing_hyp(C, cfg)]
    if M.is_zero():
        hyps.append(_hyp("M is nonzero", False))
        return _finish(tid, instance, hyps, [])
    gh, gv = _gcdim_hyp("M has finite G_C-dimension", M, C, cfg)
    hyps.append(gh)
    if any(h.label in ("Failed", "Unknown") for h in hyps):
        return _finish(tid, instance, hyps, [])
    r = gv.value
    claims = [_equality_claim(
        "G_C-dim(M) = depth R - depth M",
        r, ring_depth(ring) - depth(M),
        f"depth R={ring_depth(ring)}, depth M={depth(M)}")]
    top = not ext(M, C, r, budgets=budgets).is_zero()
    claims.append(Claim(
        f"Ext^{r}(M, C) != 0 (the supremum is attained)",
        "exact-true" if top else "exact-false",
        ""))
    bound = cfg.resolve_bound(ring)
    pd = _finite_pd(M, budgets=budgets)
    ok, wit = _ext_window_vanishes(M, C, r + 1, max(r + 1, bound), cfg)
    if not ok:
        claims.append(Claim(
            f"Ext^i(M, C) = 0 for i > {r}", "exact-false",
            f"Ext^{wit}(M, C) != 0 above the G-dimension"))
    elif pd is not None:
        claims.append(Claim(
            f"Ext^i(M, C) = 0 for i > {r}", "exact-true",
            f"finite projective dimension {pd} truncates the resolution"))
    else:
        claims.append(Claim(
            f"Ext^i(M, C) = 0 for i > {r}", "partial-true",
            f"scanned through {max(r + 1, bound)}"))
    return _finish(tid, instance, hyps, claims)


_CHECKS = {
    TheoremId.THM_MS: (_check_thm_ms, ("M",)),
    TheoremId.PROP_T1: (_check_prop_t1, ("M", "C", "n")),
    TheoremId.PROP_P3: (_check_prop_p3, ("M", "n")),
    TheoremId.PROP_T13: (_check_prop_t13, ("M", "C", "n")),
    TheoremId.COR_C2: (_check_cor_c2, ("M", "n")),
    TheoremId.LEM_LEM2: (_check_lem_lem2, ("M", "C")),
    TheoremId.THM_TH5: (_check_thm_th5, ("M", "C", "n")),
    TheoremId.COR_COR7: (_check_cor_cor7, ("M", "C", "n")),
    TheoremId.THM_THEOREM1: (_check_thm_theorem1, ("M",)),
    TheoremId.THM_THE1: (_check_thm_the1, ("M", "omega_ideal")),
    TheoremId.COR_THEOREM3: (_check_cor_theorem3,
                             ("ring", "I", "omega_ideal")),
    TheoremId.THM_PROP_EVEN: (_check_thm_prop_even,
                              ("M", "C", "n", "ideal", "ideal2")),
    TheoremId.THM_TH1: (_check_thm_th1, ("M", "C", "n")),
    TheoremId.COR_COR5: (_check_cor_cor5, ("M", "C")),
    TheoremId.COR_COR6: (_check_cor_cor6, ("M", "C", "ideal")),
    TheoremId.THM_COR3: (_check_thm_cor3, ("M",)),
    TheoremId.THM_TH2: (_check_thm_th2, ("M", "C")),
    TheoremId.COR_SELF: (_check_cor_self, ("M", "C")),
    TheoremId.THM_TH3: (_check_thm_th3, ("M", "C")),
    TheoremId.THM_TH6: (_check_thm_th6, ("M", "C")),
    TheoremId.PROP_XTM: (_check_prop_xtm, ("M", "C")),
    TheoremId.THM_TH4: (_check_thm_th4, ("M", "C")),
    TheoremId.THM_TH7: (_check_thm_th7, ("M", "C")),
    TheoremId.COR_COR1: (_check_cor_cor1, ("M",)),
    TheoremId.COR_COR4: (_check_cor_cor4, ("M",)),
    TheoremId.REMARK3_I: (_check_remark3_i, ("M", "C")),
    TheoremId.G3_AB_FORMULA: (_check_g3_ab_formula, ("M", "C")),
}


def resolve_id(tid) -> TheoremId:
    if isinstance(tid, TheoremId):
        return tid
    return TheoremId(str(tid))


def check(tid, bindings, config: HarnessConfig | None = None) -> TheoremReport:
    """Run one named check; missing bindings raise, budgets degrade."""
    tid = resolve_id(tid)
    cfg = config or HarnessConfig()
    fn, required = _CHECKS[tid]
    missing = [k for k in required if k not in bindings]
    if missing:
        raise KeyError(
            f"{tid.value} needs bindings {missing}; got "
            f"{sorted(bindings.keys())}")
    start = time.perf_counter()
    try:
        report = fn(bindings, cfg)
    except BudgetError as e:
        M = bindings.get("M")
        instance = (_instance(tid, bindings, minimalize(M))
                    if M is not None else str(bindings.get("label", "")))
        report = TheoremReport(
            tid.value, instance, [], "Inapplicable",
            witness=f"budget exhausted: {e}",
            notes=["Inapplicable-by-budget"])
    except InapplicableError as e:
        M = bindings.get("M")
        instance = (_instance(tid, bindings, minimalize(M))
                    if M is not None else str(bindings.get("label", "")))
        report = TheoremReport(tid.value, instance, [], "Inapplicable",
                               witness=str(e))
    report.wall_ms = (time.perf_counter() - start) * 1000.0
    return report


def run_suite(instances, config: HarnessConfig | None = None):
    """Run (theorem id, bindings) pairs in order; aggregate a summary.

    The summary counts verdicts; the suite fails if any report is
    Refuted with every hypothesis exact.
    """
    cfg = config or HarnessConfig()
    reports = []
    for tid, bindings in instances:
        reports.append(check(tid, bindings, cfg))
    counts = {"Verified": 0, "Refuted": 0, "Inapplicable": 0,
              "PartiallyVerified": 0}
    hard_failures = []
    for r in reports:
        counts[r.verdict] += 1
        if r.verdict == "Refuted" and not r.suspected_counterexample:
            hard_failures.append(r)
    summary = {
        "counts": counts,
        "total": len(reports),
        "suite_passed": not hard_failures,
        "hard_refutations": [r.summary_line() for r in hard_failures],
    }
    return reports, summary


def default_coefficient(ring) -> ModulePresentation:
    """R itself over a Gorenstein ring, else the canonical module."""
    if ring_is_gorenstein(ring):
        return free_module(ring, [0])
    return canonical_module(ring)


SUITE_DEFAULT_IDS = (
    TheoremId.THM_MS,
    TheoremId.PROP_T1,
    TheoremId.PROP_P3,
    TheoremId.PROP_T13,
    TheoremId.COR_C2,
    TheoremId.LEM_LEM2,
    TheoremId.THM_TH5,
    TheoremId.COR_COR7,
    TheoremId.THM_THEOREM1,
    TheoremId.THM_TH1,
    TheoremId.COR_COR5,
    TheoremId.THM_COR3,
    TheoremId.THM_TH2,
    TheoremId.COR_SELF,
    TheoremId.THM_TH3,
    TheoremId.THM_TH6,
    TheoremId.PROP_XTM,
    TheoremId.THM_TH4,
    TheoremId.THM_TH7,
    TheoremId.COR_COR1,
    TheoremId.COR_COR4,
    TheoremId.REMARK3_I,
    TheoremId.G3_AB_FORMULA,
)


def special_instances(ring):
    """Curated bindings for checks that need explicit ideal data."""
    key = ring.key()
    C = default_coefficient(ring)
    out = []
    if key == "QQ[x,y]/()":
        M = cyclic_module(ring, ["x"])
        out.append((TheoremId.COR_COR6,
                    {"M": M, "C": C, "ideal": ["x*y"], "label": "S/(x)"}))
        out.append((TheoremId.THM_PROP_EVEN,
                    {"M": M, "C": C, "n": 1, "ideal": ["x*y"],
                     "ideal2": ["x^2 + x*y"], "label": "S/(x)"}))
    if key == "QQ[x,y,z]/(y*z, x*z, x*y)":
        omega_ideal = ["x - y", "y - z"]
        out.append((TheoremId.THM_THE1,
                    {"M": cyclic_module(ring, ["x"]),
                     "omega_ideal": omega_ideal, "label": "R/(x)"}))
        out.append((TheoremId.COR_THEOREM3,
                    {"ring": ring, "I": ["x"], "omega_ideal": omega_ideal}))
    return out


def default_instances(ring, modules, ids=None, *, n: int = 1):
    """Suite bindings for corpus modules: C and n filled with defaults."""
    ids = list(ids) if ids is not None else list(SUITE_DEFAULT_IDS)
    C = default_coefficient(ring)
    out = []
    for name, M in modules:
        for tid in ids:
            tid = resolve_id(tid)
            _, required = _CHECKS[tid]
            if any(k in required for k in
                   ("ideal", "ideal2", "omega_ideal", "I", "ring")):
                continue
            b = {"M": M, "label": name}
            if "C" in required:
                b["C"] = C
            if "n" in required:
                b["n"] = n
            out.append((tid, b))
    return out
