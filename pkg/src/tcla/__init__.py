"""Exact Verma-module computations over truncated current Lie algebras.

Builds the algebras g (x) k[t]/t^(N+1) over exact rationals, acts on their
Verma modules in the PBW basis, computes Shapovalov matrices and
determinants, and checks the coroot reducibility criterion against
brute-force determinant vanishing.
"""

from .criterion import (
    ScanReport,
    ValidationReport,
    Verdict,
    criterion_reducible,
    cross_validate,
    default_scan_height,
    scan_reducible,
)
from .current import CurrentElement, TruncatedAlgebra
from .errors import (
    DegreeError,
    InvalidAlgebraError,
    NotARootError,
    TclaError,
    UnknownAlgebraError,
    UnknownElementError,
)
from .figures import LineSet, render, render_csv, render_svg, sl3_hyperplanes, virasoro_lines
from .lie_core import (
    BUILTIN_ALGEBRAS,
    Algebra,
    BaseElement,
    LinComb,
    OscillatorAlgebra,
    RescaledLowering,
    Root,
    SpecialLinear,
    VirasoroAlgebra,
    algebra,
    enumerate_positive_roots,
)
from .shapovalov import ShapovalovMatrix, ascend, matrix_to_json, shapovalov_determinant, shapovalov_matrix
from .verma import VermaModule, VermaVector
from .weights import (
    Monomial,
    WeightFunctional,
    canonical_monomial,
    enumerate_monomials,
    format_monomial,
    monomial_weight,
    positive_lattice_points,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "BaseElement",
    "BUILTIN_ALGEBRAS",
    "CurrentElement",
    "DegreeError",
    "InvalidAlgebraError",
    "LinComb",
    "LineSet",
    "Monomial",
    "NotARootError",
    "OscillatorAlgebra",
    "RescaledLowering",
    "Root",
    "ScanReport",
    "ShapovalovMatrix",
    "SpecialLinear",
    "TclaError",
    "TruncatedAlgebra",
    "UnknownAlgebraError",
    "UnknownElementError",
    "ValidationReport",
    "Verdict",
    "VermaModule",
    "VermaVector",
    "VirasoroAlgebra",
    "WeightFunctional",
    "algebra",
    "ascend",
    "canonical_monomial",
    "criterion_reducible",
    "cross_validate",
    "default_scan_height",
    "enumerate_monomials",
    "enumerate_positive_roots",
    "format_monomial",
    "matrix_to_json",
    "monomial_weight",
    "positive_lattice_points",
    "render",
    "render_csv",
    "render_svg",
    "scan_reducible",
    "shapovalov_determinant",
    "shapovalov_matrix",
    "sl3_hyperplanes",
    "virasoro_lines",
]
