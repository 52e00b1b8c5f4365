"""Deterministic families of test modules over a graded quotient ring.

The corpus mixes shapes that exercise every code path of the linkage
criteria: free modules, the residue field, cyclic quotients by
variables, pairs, squares and linear forms, first syzygies, transposes,
linkage images, twists, and direct sums with free summands (the last
are the modules on which a broken stability test is detectable).
Entries are (name, presentation) pairs; names record how each module
was built.  Zero modules and exact duplicates are dropped, so the same
call always yields the same list in the same order.
"""

from __future__ import annotations

import itertools

from .fields import QQ
from .homops import lambda_module, syzygy, transpose
from .modules import (
    ModulePresentation,
    cyclic_module,
    direct_sum,
    free_module,
    minimalize,
    twist_module,
)
from .rings import GradedRing, make_ring


def classical_rings(field=QQ):
    """The three standing example rings, smallest first."""
    return [
        ("QQ[x,y]", make_ring(field, ["x", "y"])),
        ("QQ[x,y]/(xy)", make_ring(field, ["x", "y"], ["x*y"])),
        (
            "QQ[x,y,z]/(xy,xz,yz)",
            make_ring(field, ["x", "y", "z"], ["x*y", "x*z", "y*z"]),
        ),
    ]


def maximal_ideal(ring: GradedRing) -> ModulePresentation:
    """The irrelevant maximal ideal as a module: first syzygy of k."""
    k = cyclic_module(ring, list(ring.names))
    return minimalize(syzygy(k, 1))


def _base_layer(ring: GradedRing):
    names = list(ring.names)
    out = [
        ("free[0]", free_module(ring, [0])),
        ("residue-field", cyclic_module(ring, names)),
        ("max-ideal", maximal_ideal(ring)),
    ]
    for v in names:
        out.append((f"quot({v})", cyclic_module(ring, [v])))
    for v, w in itertools.combinations(names, 2):
        out.append((f"quot({v},{w})", cyclic_module(ring, [v, w])))
    for v in names:
        out.append((f"quot({v}^2)", cyclic_module(ring, [f"{v}*{v}"])))
    for v, w in itertools.combinations(names, 2):
        out.append((f"quot({v}+{w})", cyclic_module(ring, [f"{v}+{w}"])))
    if len(names) > 2:
        out.append(("quot(" + "+".join(names) + ")",
                    cyclic_module(ring, ["+".join(names)])))
    return out


def _derived_layer(ring: GradedRing, base):
    by_name = dict(base)
    m = by_name["max-ideal"]
    k = by_name["residue-field"]
    free = by_name["free[0]"]
    first_var = ring.names[0]
    quot_v = by_name[f"quot({first_var})"]

    out = []
    for name in ("residue-field", f"quot({first_var})", "max-ideal"):
        out.append((f"syz1({name})", syzygy(by_name[name], 1)))
    for name in (f"quot({first_var})", "max-ideal"):
        out.append((f"transpose({name})", transpose(by_name[name])))
    for name in ("residue-field", f"quot({first_var})"):
        out.append((f"lambda({name})", lambda_module(by_name[name])))
    out.append(("twist(max-ideal,1)", twist_module(m, 1)))
    out.append(("twist(residue-field,-1)", twist_module(k, -1)))
    out.append(("sum(free[0],max-ideal)", direct_sum(free, m)))
    out.append(("sum(free[0],residue-field)", direct_sum(free, k)))
    out.append((f"sum(quot({first_var}),free[0])", direct_sum(quot_v, free)))
    out.append(("sum(max-ideal,max-ideal)", direct_sum(m, m)))
    if len(ring.names) >= 2:
        second = ring.names[1]
        out.append((
            f"sum(quot({first_var}),quot({second}))",
            direct_sum(quot_v, by_name[f"quot({second})"]),
        ))
    return out


def corpus_pool(ring: GradedRing):
    """All distinct corpus entries for a ring, in generation order."""
    entries = _base_layer(ring)
    entries += _derived_layer(ring, entries)
    seen = set()
    out = []
    for name, M in entries:
        Mmin = minimalize(M)
        if Mmin.is_zero():
            continue
        key = Mmin.content_key()
        if key in seen:
            continue
        seen.add(key)
        out.append((name, Mmin))
    return out


def generate_corpus(ring: GradedRing, size: int):
    """First `size` corpus entries; the pool is extended by twisting."""
    pool = corpus_pool(ring)
    if size <= len(pool):
        return pool[:size]
    out = list(pool)
    shift = 1
    while len(out) < size:
        for name, M in pool:
            if len(out) >= size:
                break
            out.append((f"twist({name},{shift})", twist_module(M, shift)))
        shift += 1
    return out
