"""Finitely generated graded modules, presented by matrices over R = S/I.

A ModulePresentation is coker(F_1 -> F_0) with twisted free modules
F_0 = sum R(-gen_twists[i]) and F_1 = sum R(-rel_twists[j]); columns map
relations to combinations of generators, and every nonzero entry (i, j)
must be homogeneous of degree rel_twists[j] - gen_twists[i].

All heavy lifting happens in the ambient polynomial ring: membership,
syzygies and normal forms augment the column list with f*e_i for f in
the reduced basis of I.  Syzygies over R are projections of ambient
syzygies of the augmented list.
"""

from __future__ import annotations

from . import memo
from .config import DEFAULT_BUDGETS
from .errors import ConsistencyError, HomogeneityError, InapplicableError
from .groebner import (
    ModuleGB,
    column_degree,
    flat_from_column,
    syzygy_columns,
    term_key,
)
from .hilbert import HilbertSeries, monomial_quotient_numerator
from .polynomials import Poly
from .rings import GradedRing


class ModulePresentation:
    __slots__ = ("ring", "gen_twists", "rel_twists", "columns", "_key")

    def __init__(self, ring: GradedRing, gen_twists, rel_twists, columns):
        self.ring = ring
        self.gen_twists = tuple(gen_twists)
        self.rel_twists = tuple(rel_twists)
        cols = []
        if len(columns) != len(self.rel_twists):
            raise ValueError("column count disagrees with rel_twists")
        for j, col in enumerate(columns):
            clean = {}
            for i, p in col.items():
                if p.is_zero():
                    continue
                if not (0 <= i < len(self.gen_twists)):
                    raise ValueError(f"row {i} out of range in column {j}")
                if not p.is_homogeneous():
                    raise HomogeneityError(
                        f"entry ({i},{j}) = {p} is not homogeneous"
                    )
                want = self.rel_twists[j] - self.gen_twists[i]
                if p.degree() != want:
                    raise HomogeneityError(
                        f"entry ({i},{j}) = {p} has degree {p.degree()}, expected {want}"
                    )
                clean[i] = p
            cols.append(clean)
        self.columns = tuple(cols)
        self._key = None

    # identity ---------------------------------------------------------

    def serialize(self) -> str:
        parts = [self.ring.key(), repr(list(self.gen_twists)), repr(list(self.rel_twists))]
        for col in self.columns:
            parts.append(";".join(f"{i}:{col[i]}" for i in sorted(col)))
        return "\n".join(parts)

    def content_key(self) -> str:
        if self._key is None:
            self._key = memo.content_hash(self.serialize())
        return self._key

    def __eq__(self, other):
        return (
            isinstance(other, ModulePresentation)
            and other.serialize() == self.serialize()
        )

    def __hash__(self):
        return hash(self.content_key())

    def __repr__(self):
        return (
            f"ModulePresentation({self.ring}, gens={list(self.gen_twists)}, "
            f"rels={list(self.rel_twists)})"
        )

    # basic data ---------------------------------------------------------

    def n_gens(self) -> int:
        return len(self.gen_twists)

    def n_rels(self) -> int:
        return len(self.rel_twists)

    def reduce_entries(self) -> "ModulePresentation":
        """Entries normal-formed mod I; zero columns kept (degrees known)."""
        cols = [
            {i: self.ring.nf(p) for i, p in col.items()}
            for col in self.columns
        ]
        return ModulePresentation(self.ring, self.gen_twists, self.rel_twists, cols)

    def hilbert_series(self) -> HilbertSeries:
        key = self.content_key()
        hit = memo.get("hs", key)
        if hit is not None:
            return hit
        hs = quotient_series(self.ring, list(self.columns), self.gen_twists)
        return memo.put("hs", key, hs)

    def is_zero(self) -> bool:
        if not self.gen_twists:
            return True
        return self.hilbert_series().is_zero()

    def over_ambient(self) -> "ModulePresentation":
        """The same module viewed over the ambient polynomial ring."""
        amb = self.ring.ambient()
        if amb is self.ring:
            return self
        cols = list(self.columns)
        rel_twists = list(self.rel_twists)
        for c in self.ring.aug_columns(self.gen_twists):
            (i, f), = c.items()
            cols.append(c)
            rel_twists.append(self.gen_twists[i] + f.degree())
        return ModulePresentation(amb, self.gen_twists, rel_twists, cols)


# -- constructors ---------------------------------------------------------


def free_module(ring: GradedRing, twists) -> ModulePresentation:
    return ModulePresentation(ring, twists, [], [])


def zero_module(ring: GradedRing) -> ModulePresentation:
    return ModulePresentation(ring, [], [], [])


def cyclic_module(ring: GradedRing, ideal_gens) -> ModulePresentation:
    """R/(ideal_gens), generators parsed if given as strings."""
    polys = []
    for p in ideal_gens:
        if isinstance(p, str):
            p = ring.poly_ring.parse(p)
        if p.is_zero():
            continue
        polys.append(p)
    for p in polys:
        if not p.is_homogeneous():
            raise HomogeneityError(f"ideal generator {p} is not homogeneous")
    return ModulePresentation(
        ring, [0], [p.degree() for p in polys], [{0: p} for p in polys]
    )


def from_matrix(ring: GradedRing, gen_twists, rows) -> ModulePresentation:
    """Presentation from a dense row-major matrix; relation degrees inferred."""
    parsed = [
        [ring.poly_ring.parse(e) if isinstance(e, str) else e for e in row]
        for row in rows
    ]
    if len(parsed) != len(gen_twists):
        raise ValueError("row count disagrees with gen_twists")
    ncols = max((len(r) for r in parsed), default=0)
    rel_twists = []
    columns = []
    for j in range(ncols):
        deg = None
        col = {}
        for i, row in enumerate(parsed):
            if j < len(row) and not row[j].is_zero():
                p = row[j]
                if not p.is_homogeneous():
                    raise HomogeneityError(f"entry ({i},{j}) = {p} is not homogeneous")
                d = p.degree() + gen_twists[i]
                if deg is None:
                    deg = d
                elif deg != d:
                    raise HomogeneityError(
                        f"column {j} mixes relation degrees {deg} and {d}"
                    )
                col[i] = p
        if deg is None:
            raise ValueError(f"column {j} is zero; relation degree cannot be inferred")
        rel_twists.append(deg)
        columns.append(col)
    return ModulePresentation(ring, gen_twists, rel_twists, columns)


def twist_module(M: ModulePresentation, a: int) -> ModulePresentation:
    """M(a): generator degrees drop by a, series scales by t^(-a)."""
    return ModulePresentation(
        M.ring,
        [g - a for g in M.gen_twists],
        [r - a for r in M.rel_twists],
        list(M.columns),
    )


def direct_sum(M: ModulePresentation, N: ModulePresentation) -> ModulePresentation:
    if M.ring != N.ring:
        raise ValueError("direct sum over different rings")
    p = M.n_gens()
    cols = [dict(c) for c in M.columns]
    cols += [{i + p: q for i, q in c.items()} for c in N.columns]
    return ModulePresentation(
        M.ring,
        list(M.gen_twists) + list(N.gen_twists),
        list(M.rel_twists) + list(N.rel_twists),
        cols,
    )


# -- span machinery ---------------------------------------------------------


def serialize_columns(columns, twists) -> str:
    parts = [repr(list(twists))]
    for col in columns:
        parts.append(";".join(f"{i}:{col[i]}" for i in sorted(col)))
    return "\n".join(parts)


def span_gb(ring: GradedRing, columns, ambient_twists, *, track=False,
            max_degree=None) -> ModuleGB:
    """Groebner basis of span(columns) + I*F, memoized."""
    if max_degree is None:
        max_degree = DEFAULT_BUDGETS.max_degree
    key = memo.content_hash(
        ring.key(), serialize_columns(columns, ambient_twists),
        f"track={track}", f"maxdeg={max_degree}"
    )
    hit = memo.get("span-gb", key)
    if hit is not None:
        return hit
    aug = ring.aug_columns(ambient_twists)
    gb = ModuleGB(
        ring.poly_ring, list(columns) + aug, ambient_twists,
        track=track, max_degree=max_degree,
    )
    return memo.put("span-gb", key, gb)


def quotient_series(ring: GradedRing, columns, ambient_twists) -> HilbertSeries:
    """Hilbert series of F / (span(columns) + I*F)."""
    gb = span_gb(ring, columns, ambient_twists)
    per_pos: dict = {}
    for pos, mono in gb.leading_terms():
        per_pos.setdefault(pos, []).append(mono)
    n = ring.nvars
    out = HilbertSeries.zero(n)
    for pos, a in enumerate(ambient_twists):
        num = monomial_quotient_numerator(n, per_pos.get(pos, []))
        out = out + HilbertSeries(n, num).shift(a)
    return out


def span_series(ring: GradedRing, columns, ambient_twists) -> HilbertSeries:
    """Hilbert series of (span(columns) + I*F) / I*F inside F over R."""
    free = quotient_series(ring, [], ambient_twists)
    return free - quotient_series(ring, columns, ambient_twists)


def member_of_span(ring: GradedRing, col, columns, ambient_twists) -> bool:
    return span_gb(ring, columns, ambient_twists).contains(col)


def lift_over_columns(ring: GradedRing, col, columns, ambient_twists):
    """Coefficients over columns (mod I) with col = sum coeffs*columns, or None."""
    gb = span_gb(ring, columns, ambient_twists, track=True)
    lifted = gb.lift(col)
    if lifted is None:
        return None
    out = {}
    for t, q in lifted.items():
        if t < len(columns):
            q = ring.nf(q)
            if not q.is_zero():
                out[t] = q
    return out


def column_syzygies(ring: GradedRing, columns, ambient_twists, *,
                    max_degree=None) -> list:
    """Generators of the syzygy module over R of the given columns.

    Projections of ambient syzygies of the I-augmented list; entries are
    reduced mod I.  Column degrees [column_degree(c)] are the twists of
    the ambient free module the result lives in.
    """
    if max_degree is None:
        max_degree = DEFAULT_BUDGETS.max_degree
    aug = ring.aug_columns(ambient_twists)
    syz = syzygy_columns(
        ring.poly_ring, list(columns) + aug, ambient_twists, max_degree=max_degree
    )
    out = []
    k = len(columns)
    for s in syz:
        proj = {}
        for t, q in s.items():
            if t < k:
                q = ring.nf(q)
                if not q.is_zero():
                    proj[t] = q
        if proj:
            out.append(proj)
    return out


def mingens_columns(ring: GradedRing, columns, ambient_twists, *,
                    extra_lower=(), max_degree=None) -> list:
    """Indices of a minimal generating subset of the column classes.

    Minimal generation of (span(columns) + U) / U with U = span(extra_lower)
    plus I*F, computed degree by degree: a column is redundant iff it lies
    in U + (columns of strictly lower degree) + (kept columns of the same
    degree), the last reduced to k-linear elimination of normal forms.
    """
    field = ring.field
    degs = []
    for c in columns:
        degs.append(column_degree(c, ambient_twists))
    order = sorted(
        [i for i in range(len(columns)) if degs[i] is not None],
        key=lambda i: (degs[i], i),
    )
    lower = list(extra_lower)
    kept: list = []
    i = 0
    while i < len(order):
        d = degs[order[i]]
        group = []
        while i < len(order) and degs[order[i]] == d:
            group.append(order[i])
            i += 1
        gb = span_gb(ring, lower, ambient_twists, max_degree=max_degree)
        pivots: dict = {}
        for idx in group:
            nf = gb.normal_form_flat(flat_from_column(columns[idx]))
            # k-linear elimination within the degree
            while nf:
                t = max(nf, key=term_key)
                piv = pivots.get(t)
                if piv is None:
                    break
                c = nf[t]
                for pt, pc in piv.items():
                    acc = field.sub(nf.get(pt, field.zero()), field.mul(c, pc))
                    if acc == field.zero():
                        nf.pop(pt, None)
                    else:
                        nf[pt] = acc
            if nf:
                t = max(nf, key=term_key)
                inv = field.inv(nf[t])
                pivots[t] = {k2: field.mul(v, inv) for k2, v in nf.items()}
                kept.append(idx)
        for idx in group:
            if idx in kept:
                lower.append(columns[idx])
    return kept


def minimalize(M: ModulePresentation) -> ModulePresentation:
    """Minimal presentation: no degree-zero units, minimal relations.

    Unit entries are pruned by the Schur complement step, then surviving
    columns are cut to a minimal generating set of the relation module.
    """
    key = M.content_key()
    hit = memo.get("minimalize", key)
    if hit is not None:
        return hit
    ring = M.ring
    field = ring.field
    cols = [{i: ring.nf(p) for i, p in c.items() if not ring.nf(p).is_zero()}
            for c in M.columns]
    live_rows = list(range(M.n_gens()))
    live_cols = list(range(M.n_rels()))
    while True:
        pivot = None
        for j in live_cols:
            for i in sorted(cols[j]):
                if i in live_rows and cols[j][i].degree() == 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        c = cols[j][i].terms[(0,) * ring.nvars]
        inv = field.inv(c)
        for j2 in live_cols:
            if j2 == j:
                continue
            entry = cols[j2].get(i)
            if entry is None or entry.is_zero():
                continue
            factor = entry.scale(inv)
            newcol = dict(cols[j2])
            for r, q in cols[j].items():
                acc = newcol.get(r, ring.poly_ring.zero()) - factor * q
                acc = ring.nf(acc)
                if acc.is_zero():
                    newcol.pop(r, None)
                else:
                    newcol[r] = acc
            newcol.pop(i, None)
            cols[j2] = newcol
        live_rows.remove(i)
        live_cols.remove(j)
    row_map = {old: new for new, old in enumerate(live_rows)}
    gen_twists = [M.gen_twists[i] for i in live_rows]
    out_cols = []
    rel_twists = []
    for j in live_cols:
        col = {row_map[i]: p for i, p in cols[j].items() if i in row_map and not p.is_zero()}
        if col:
            out_cols.append(col)
            rel_twists.append(M.rel_twists[j])
    kept = mingens_columns(ring, out_cols, gen_twists)
    pres = ModulePresentation(
        ring, gen_twists, [rel_twists[j] for j in kept], [out_cols[j] for j in kept]
    )
    return memo.put("minimalize", key, pres)


def subquotient(ring: GradedRing, ambient_twists, gens, rels, *,
                max_degree=None):
    """(span(gens) + span(rels)) / span(rels) as a minimal presentation.

    Returns (presentation, kept_gens) where kept_gens are the columns of
    the ambient free module realizing the presentation's generators;
    realizations survive because generators are minimalized before the
    relation search rather than after.
    """
    kept_idx = mingens_columns(
        ring, list(gens), ambient_twists, extra_lower=list(rels),
        max_degree=max_degree,
    )
    gens_kept = [gens[i] for i in kept_idx]
    if not gens_kept:
        return zero_module(ring), []
    gen_twists = [column_degree(c, ambient_twists) for c in gens_kept]
    combined = gens_kept + list(rels)
    syz = column_syzygies(ring, combined, ambient_twists, max_degree=max_degree)
    rel_cols = []
    for s in syz:
        proj = {t: q for t, q in s.items() if t < len(gens_kept)}
        if proj:
            rel_cols.append(proj)
    kept_rels = mingens_columns(ring, rel_cols, gen_twists, max_degree=max_degree)
    rel_cols = [rel_cols[j] for j in kept_rels]
    rel_twists = [column_degree(c, gen_twists) for c in rel_cols]
    for j, col in enumerate(rel_cols):
        for i, p in col.items():
            if p.degree() == 0:
                raise ConsistencyError(
                    "unit relation entry on a minimal generator set"
                )
    pres = ModulePresentation(ring, gen_twists, rel_twists, rel_cols)
    return pres, gens_kept


def annihilator(M: ModulePresentation) -> list:
    """Generators (over the ambient S, containing I) of ann_R(M)."""
    key = M.content_key()
    hit = memo.get("ann", key)
    if hit is not None:
        return hit
    ring = M.ring
    S = ring.poly_ring
    if M.n_gens() == 0:
        return memo.put("ann", key, [S.one()])
    current = None
    aug = ring.aug_columns(M.gen_twists)
    base_cols = list(M.columns) + aug
    for i in range(M.n_gens()):
        unit = {i: S.one()}
        syz = syzygy_columns(
            S, [unit] + base_cols, list(M.gen_twists),
            max_degree=DEFAULT_BUDGETS.max_degree,
        )
        q_i = []
        for s in syz:
            p = s.get(0)
            if p is not None and not p.is_zero():
                q_i.append(p)
        current = q_i if current is None else _intersect_ideals(S, current, q_i)
        if not current:
            break
    if current is None:
        current = [S.one()]
    gb = ModuleGB(S, [{0: p} for p in current], [0]) if current else None
    result = [c[0] for c in gb.basis_columns()] if gb else []
    return memo.put("ann", key, result)


def _intersect_ideals(S, gens_a, gens_b) -> list:
    if not gens_a or not gens_b:
        return []
    cols = [{0: S.one(), 1: S.one()}]
    cols += [{0: g} for g in gens_a]
    cols += [{1: h} for h in gens_b]
    syz = syzygy_columns(S, cols, [0, 0], max_degree=DEFAULT_BUDGETS.max_degree)
    out = []
    for s in syz:
        p = s.get(0)
        if p is not None and not p.is_zero():
            out.append(p)
    return out


def ideal_in_prime(ring: GradedRing, ideal_gens, prime_gens) -> bool:
    """Containment of (ideal_gens) in the prime (prime_gens), both over S."""
    gb = ModuleGB(ring.poly_ring, [{0: p} for p in prime_gens], [0])
    return all(gb.contains({0: g}) for g in ideal_gens)


def ideal_contains(ring: GradedRing, ideal_gens, f) -> bool:
    """Membership of f in the S-ideal spanned by ideal_gens."""
    if f.is_zero():
        return True
    if not ideal_gens:
        return False
    gb = ModuleGB(ring.poly_ring, [{0: p} for p in ideal_gens], [0])
    return gb.contains({0: f})


def change_ring(M: ModulePresentation, new_ring: GradedRing) -> ModulePresentation:
    """Reinterpret M over a further quotient of its ring.

    Valid only when the extra relations of new_ring annihilate M, in
    which case the same presentation matrix presents the same module.
    """
    ring = M.ring
    if new_ring.poly_ring.key() != ring.poly_ring.key():
        raise ValueError("change_ring needs the same ambient polynomial ring")
    for r in ring.reduced_relations:
        if not new_ring.contains_in_ideal(r):
            raise ValueError("target ring is not a quotient of the source ring")
    ann = annihilator(M)
    for r in new_ring.reduced_relations:
        if ring.contains_in_ideal(r):
            continue
        if not ideal_contains(ring, ann, r):
            raise InapplicableError(
                f"relation {r} of the target ring does not annihilate the module"
            )
    cols = []
    rel_twists = []
    for j, col in enumerate(M.columns):
        nfcol = {}
        for i, p in col.items():
            q = new_ring.nf(p)
            if not q.is_zero():
                nfcol[i] = q
        if nfcol:
            cols.append(nfcol)
            rel_twists.append(M.rel_twists[j])
    return ModulePresentation(new_ring, list(M.gen_twists), rel_twists, cols)
