"""Standard graded quotient rings R = k[x_1..x_n]/I.

The kernel only ever divides in the ambient polynomial ring S; a quotient
ring contributes the columns f*e_i (f running over the reduced Groebner
basis of I, e_i over the free generators) to every module computation.
That augmentation is what aug_columns provides, and it is the single
convention the whole module layer is built on.
"""

from __future__ import annotations

from . import memo
from .errors import HomogeneityError
from .fields import Field
from .groebner import ModuleGB
from .hilbert import HilbertSeries, monomial_quotient_numerator
from .monomials import mono_divides, monomials_of_degree
from .polynomials import Poly, PolyRing


class GradedRing:
    """S/I with S standard graded and I a homogeneous ideal."""

    def __init__(self, poly_ring: PolyRing, relations):
        self.poly_ring = poly_ring
        self.field = poly_ring.field
        self.names = poly_ring.names
        self.nvars = poly_ring.nvars
        rels = []
        for p in relations:
            if isinstance(p, str):
                p = poly_ring.parse(p)
            if p.is_zero():
                continue
            if not p.is_homogeneous():
                raise HomogeneityError(f"ring relation {p} is not homogeneous")
            if p.degree() == 0:
                raise ValueError("ring relations generate the unit ideal")
            rels.append(p)
        self.relations = tuple(rels)
        self._gb = ModuleGB(poly_ring, [{0: p} for p in rels], [0])
        basis = self._gb.basis_columns()
        if any(c[0].degree() == 0 for c in basis):
            raise ValueError("ring relations generate the unit ideal")
        self.reduced_relations = tuple(c[0] for c in basis)
        self.is_polynomial = not self.reduced_relations
        self._key = (
            self.poly_ring.key()
            + "/("
            + ", ".join(str(p) for p in self.reduced_relations)
            + ")"
        )
        self._ambient = None

    # identity ---------------------------------------------------------

    def key(self) -> str:
        return self._key

    def __eq__(self, other):
        return isinstance(other, GradedRing) and other._key == self._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return self._key

    # structure ----------------------------------------------------------

    def ambient(self) -> "GradedRing":
        """The polynomial ring S as a GradedRing (identity if already free)."""
        if self.is_polynomial:
            return self
        if self._ambient is None:
            self._ambient = GradedRing(self.poly_ring, [])
        return self._ambient

    def nf(self, p: Poly) -> Poly:
        if self.is_polynomial or p.is_zero():
            return p
        out = self._gb.normal_form({0: p})
        return out.get(0, self.poly_ring.zero())

    def contains_in_ideal(self, p: Poly) -> bool:
        """Membership in I."""
        return self.nf(p).is_zero()

    def aug_columns(self, gen_twists) -> list:
        """Columns f*e_i for f in the reduced basis of I."""
        out = []
        for i in range(len(gen_twists)):
            for f in self.reduced_relations:
                out.append({i: f})
        return out

    def lead_monomials(self):
        return [lead for (_pos, lead) in [e for e in self._gb.leading_terms()]]

    def standard_monomials(self, degree: int):
        """k-basis of R in one degree, grevlex-descending."""
        leads = [mono for (_p, mono) in self._gb.leading_terms()]
        return [
            m
            for m in monomials_of_degree(self.nvars, degree)
            if not any(mono_divides(l, m) for l in leads)
        ]

    def hilbert_series(self) -> HilbertSeries:
        key = self._key
        hit = memo.get("ring-hs", key)
        if hit is not None:
            return hit
        leads = [mono for (_p, mono) in self._gb.leading_terms()]
        hs = HilbertSeries(self.nvars, monomial_quotient_numerator(self.nvars, leads))
        return memo.put("ring-hs", key, hs)

    def parse(self, text: str) -> Poly:
        """Parse and reduce mod I."""
        return self.nf(self.poly_ring.parse(text))

    def quotient_by(self, extra) -> "GradedRing":
        """R/(extra) as a quotient of the same ambient ring."""
        polys = []
        for p in extra:
            if isinstance(p, str):
                p = self.poly_ring.parse(p)
            polys.append(p)
        return GradedRing(self.poly_ring, list(self.relations) + polys)


def make_ring(field: Field, names, relations=()) -> GradedRing:
    """Public constructor: k[names]/(relations)."""
    return GradedRing(PolyRing(field, names), list(relations))
