"""Reducibility of Verma modules: top-level criterion and determinant scan.

The criterion evaluates the top component of the weight functional on the
coroot of each positive root; the module is reducible exactly when some
coroot is annihilated.  For sl(n) the full finite root list is always
used.  For the Virasoro algebra the witness condition
2m x + (m^3 - m)/12 y = 0 is solved exactly over the nonzero integers, and
for the oscillator algebra it degenerates to the single central test
y = 0, so the boolean verdict is exact for every built-in; only the
*listing* of witnesses is height-truncated when all positive roots
qualify at once.

The scan side computes exact Shapovalov determinants for every weight
drop up to a height bound, and the cross-validation harness compares the
two verdicts on randomly drawn weights.
"""

from __future__ import annotations

import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .current import TruncatedAlgebra
from .lie_core import Algebra, OscillatorAlgebra, Root, VirasoroAlgebra, algebra
from .rationals import format_rational
from .shapovalov import shapovalov_matrix
from . import linalg
from .verma import VermaModule
from .weights import WeightFunctional, positive_lattice_points


@dataclass
class Verdict:
    """Outcome of the coroot criterion.

    ``witnesses`` lists positive roots whose coroot the top weight level
    annihilates.  ``scanned_height`` is None when that list is exhaustive;
    it carries the listing bound when every positive root of an infinite
    system qualifies (the verdict itself is still exact).
    """

    reducible: bool
    witnesses: list[Root]
    scanned_height: int | None


@dataclass
class ScanRecord:
    chi: Root
    dimension: int
    det: Fraction


@dataclass
class ScanReport:
    max_height: int
    records: list[ScanRecord]
    zero_chis: list[Root] = field(default_factory=list)

    @property
    def zero_found(self) -> bool:
        return bool(self.zero_chis)


def default_scan_height(base: Algebra) -> int:
    """Default scan/witness depth: full-height coverage for the finite
    built-ins, grade 4 for the infinite ones."""
    return 2 if base.finite_roots else 4


def _virasoro_witnesses(x: Fraction, y: Fraction, max_height: int) -> tuple[list[Root], int | None]:
    # Solve 2m x + (m^3 - m)/12 y = 0 over integers m >= 1 (the condition is
    # odd in m, so negative solutions mirror positive ones).
    if x == 0 and y == 0:
        return [Root((m,)) for m in range(1, max_height + 1)], max_height
    if y == 0:
        return [], None
    q = 1 - 24 * x / y  # m^2 for any nonzero root of the cubic
    if q.denominator == 1 and q >= 1:
        m = isqrt(q.numerator)
        if m * m == q.numerator:
            return [Root((m,))], None
    return [], None


def _coroot_zeros(base: Algebra, top: tuple[Fraction, ...], max_height: int) -> tuple[list[Root], int | None]:
    if isinstance(base, VirasoroAlgebra):
        return _virasoro_witnesses(top[0], top[1], max_height)
    if isinstance(base, OscillatorAlgebra):
        if top[1] == 0:
            return [Root((m,)) for m in range(1, max_height + 1)], max_height
        return [], None
    bound = None if base.finite_roots else max_height
    witnesses = [
        root
        for root, _dim in base.positive_roots(bound)
        if sum(c * v for c, v in zip(base.coroot(root), top)) == 0
    ]
    return witnesses, bound


def criterion_reducible(
    weight: WeightFunctional,
    alg: TruncatedAlgebra,
    max_root_height: int | None = None,
) -> Verdict:
    """Evaluate the coroot criterion on the top level of ``weight``."""
    if max_root_height is None:
        max_root_height = default_scan_height(alg.base)
    if max_root_height < 1:
        raise ValueError("max_root_height must be >= 1")
    if weight.nilp != alg.nilp or weight.cartan_rank != alg.base.cartan_rank:
        raise ValueError("weight shape does not match the algebra")
    top = weight.level(alg.nilp)
    witnesses, scanned = _coroot_zeros(alg.base, top, max_root_height)
    return Verdict(reducible=bool(witnesses), witnesses=witnesses, scanned_height=scanned)


def scan_reducible(weight: WeightFunctional, alg: TruncatedAlgebra, max_height: int) -> ScanReport:
    """Exact Shapovalov determinants for every weight drop of height <=
    max_height, in canonical order."""
    if max_height < 0:
        raise ValueError("max_height must be >= 0")
    module = VermaModule(alg, weight)
    records: list[ScanRecord] = []
    zero_chis: list[Root] = []
    for chi in positive_lattice_points(alg.base.simple_generator_count, max_height):
        matrix = shapovalov_matrix(module, chi)
        det = linalg.determinant(matrix.entries)
        records.append(ScanRecord(chi=chi, dimension=matrix.size, det=det))
        if det == 0:
            zero_chis.append(chi)
    return ScanReport(max_height=max_height, records=records, zero_chis=zero_chis)


# -- cross-validation harness --------------------------------------------------


@dataclass
class ValidationReport:
    algebra: str
    nilp: int
    samples: int
    seed: int
    max_height: int
    records: list[dict]
    agreements: int
    disagreements: list[int]

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "nilp": self.nilp,
            "seed": self.seed,
            "max_height": self.max_height,
            "samples": self.records,
            "agreements": self.agreements,
            "disagreements": self.disagreements,
        }

    def to_text(self) -> str:
        lines = [
            f"cross-validation: algebra={self.algebra} nilp={self.nilp} "
            f"samples={self.samples} seed={self.seed} max_height={self.max_height}"
        ]
        for rec in self.records:
            where = ""
            if rec["witnesses"]:
                where += " witnesses=" + ",".join(rec["witnesses"])
            if rec["zero_chis"]:
                where += " zero_at=" + ",".join(rec["zero_chis"])
            lines.append(
                f"  sample {rec['index']:>3} {rec['kind']:<11} "
                f"criterion={'reducible' if rec['criterion_reducible'] else 'irreducible'} "
                f"scan={'zero' if rec['scan_zero_found'] else 'no-zero'} "
                f"agree={'yes' if rec['agree'] else 'NO'}{where}"
            )
        lines.append(f"agreements: {self.agreements}/{self.samples}")
        if self.disagreements:
            lines.append("disagreements at samples: " + ", ".join(map(str, self.disagreements)))
        else:
            lines.append("disagreements: none")
        return "\n".join(lines)


def _sample_task(base: Algebra, nilp: int, seed: int, index: int, max_height: int) -> tuple:
    """Deterministically draw one sample: odd indices are constructed to
    satisfy the criterion for a random witness root within the scan height."""
    rng = random.Random(f"{seed}:{index}")
    levels = [
        [Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(base.cartan_rank)]
        for _ in range(nilp + 1)
    ]
    kind = "constructed" if index % 2 == 1 else "generic"
    witness: tuple[int, ...] | None = None
    if kind == "constructed":
        candidates = [root for root, _dim in base.positive_roots(max_height)]
        alpha = rng.choice(candidates)
        h = base.coroot(alpha)
        pivot = rng.choice([k for k, c in enumerate(h) if c])
        top = levels[nilp]
        top[pivot] = -sum(top[j] * h[j] for j in range(len(h)) if j != pivot) / h[pivot]
        witness = alpha.coords
    return (base.name, nilp, index, kind, levels, witness, max_height)


def _run_sample(task: tuple) -> dict:
    name, nilp, index, kind, levels, witness, max_height = task
    alg = TruncatedAlgebra(algebra(name), nilp)
    weight = WeightFunctional(levels)
    verdict = criterion_reducible(weight, alg, max_height)
    scan = scan_reducible(weight, alg, max_height)
    # Compare at matched scope: the scan can only see zeros whose witness
    # root lies within its height bound.
    expected_zero = any(w.height <= max_height for w in verdict.witnesses)
    agree = expected_zero == scan.zero_found
    return {
        "index": index,
        "kind": kind,
        "lambda": [[format_rational(v) for v in level] for level in levels],
        "constructed_witness": list(witness) if witness is not None else None,
        "criterion_reducible": verdict.reducible,
        "witnesses": [str(w) for w in verdict.witnesses],
        "witnesses_within_height": expected_zero,
        "scan_zero_found": scan.zero_found,
        "zero_chis": [str(c) for c in scan.zero_chis],
        "dets": [[str(r.chi), format_rational(r.det)] for r in scan.records],
        "agree": agree,
    }


def cross_validate(
    base: Algebra,
    nilp: int,
    samples: int,
    seed: int,
    max_height: int | None = None,
    workers: int | None = None,
) -> ValidationReport:
    """Draw ``samples`` random weights (half generic, half constructed
    reducible), run both verdicts on each, and report every comparison.

    Deterministic for a fixed seed regardless of worker count; TCLA_THREADS
    caps the worker pool when ``workers`` is not given.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if max_height is None:
        max_height = default_scan_height(base)
    if workers is None:
        workers = int(os.environ.get("TCLA_THREADS", "1"))
    tasks = [_sample_task(base, nilp, seed, i, max_height) for i in range(samples)]
    if workers > 1 and samples > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_sample, tasks))
    else:
        records = [_run_sample(t) for t in tasks]
    disagreements = [rec["index"] for rec in records if not rec["agree"]]
    return ValidationReport(
        algebra=base.name,
        nilp=nilp,
        samples=samples,
        seed=seed,
        max_height=max_height,
        records=records,
        agreements=samples - len(disagreements),
        disagreements=disagreements,
    )


def report_json_bytes(report: ValidationReport) -> bytes:
    """Canonical bytes of the machine-readable report (stable per seed)."""
    return json.dumps(report.to_json(), indent=2, sort_keys=False).encode("utf-8")
