"""Shapovalov matrices and their exact determinants.

Row i descends from the highest-weight vector along the i-th PBW monomial;
column j ascends back along the dual of the j-th monomial (each lowering
factor replaced, in reverse order, by its pairing-dual raising vector at
the same t-degree).  Entry (i, j) is the resulting multiple of the
highest-weight vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .lie_core import Root
from .current import CurrentElement
from .rationals import format_rational
from .verma import VermaModule, VermaVector
from .weights import Monomial, enumerate_monomials, format_monomial


@dataclass
class ShapovalovMatrix:
    chi: Root
    monomials: list[Monomial]
    entries: list[list[Fraction]]

    @property
    def size(self) -> int:
        return len(self.monomials)


def ascend(module: VermaModule, path: Monomial, v: VermaVector) -> VermaVector:
    """Apply the upward path dual to ``path``.

    The ascent retraces the descent step by step: the descent applies the
    monomial's rightmost factor first, so the ascent starts from the dual
    of the leftmost factor and works right, each lowering factor replaced
    by its pairing-dual raising vector at the same t-degree.  The composed
    operator is the image of the monomial under the transpose
    anti-involution, which is what makes the matrices of the sl(n) and
    Virasoro built-ins symmetric.
    """
    base = module.alg.base
    for f in path:
        assert f.elem.root is not None
        dual = base.dual_raising(-f.elem.root, f.elem.index)
        acc = VermaVector()
        for be, coeff in dual.items():
            acc = acc + coeff * module.act(CurrentElement(be, f.degree), v)
        v = acc
        if v.is_zero:
            break
    return v


def shapovalov_matrix(
    module: VermaModule,
    chi: Root,
    monomials: Sequence[Monomial] | None = None,
) -> ShapovalovMatrix:
    """The matrix of descent/ascent scalars at weight drop chi, indexed by
    the canonical monomial list (or an explicit override)."""
    monos = list(monomials) if monomials is not None else enumerate_monomials(chi, module.alg)
    descents = [module.descend(m) for m in monos]
    entries = [
        [ascend(module, col, vec).coefficient(()) for col in monos]
        for vec in descents
    ]
    return ShapovalovMatrix(chi=chi, monomials=monos, entries=entries)


def shapovalov_determinant(module: VermaModule, chi: Root) -> Fraction:
    return linalg.determinant(shapovalov_matrix(module, chi).entries)


def matrix_to_json(matrix: ShapovalovMatrix, det: Fraction | None = None) -> dict:
    """JSON-ready form: rationals as "p/q" strings, monomials as text."""
    if det is None:
        det = linalg.determinant(matrix.entries)
    return {
        "chi": list(matrix.chi.coords),
        "monomials": [format_monomial(m) for m in matrix.monomials],
        "entries": [[format_rational(x) for x in row] for row in matrix.entries],
        "det": format_rational(det),
    }
