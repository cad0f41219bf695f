"""
Monodromy group of an algebraic function and its representability verdicts
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .branch import BranchData, branch_points, normalize_monic
from .skeleton import LoopSkeleton, build_skeleton, infinity_loop
from .tracking import NumericRelation, sheets_at, track_loop
from .verdict import Verdict, VerdictClass, VerdictStatus
from ..numkernel import BiPoly
from ..permgrp import (
    FactorSignature, MonodromyPair, Permutation, PermutationGroup,
    composition_factor_signature, is_almost_solvable_finite, is_k_solvable,
    monodromy_pair, riemann_hurwitz_genus,
)
from ..utils.errors import MonodromyConsistencyError

logger = logging.getLogger(__name__)


@dataclass
class AlgebraicMonodromyReport:
    relation: BiPoly
    branch: BranchData
    skeleton: LoopSkeleton
    permutations: Tuple[Permutation, ...]
    infinity_permutation: Permutation
    group: PermutationGroup
    pair: MonodromyPair
    transitive: bool
    genus: Optional[int] = None
    verdicts: List[Verdict] = field(default_factory=list)

    @property
    def degree(self) -> int:
        return self.branch.n_sheets

    def loop_identity_holds(self) -> bool:
        product = Permutation.identity(self.degree)
        for p in self.permutations:
            product = product * p
        return (product * self.infinity_permutation).is_identity

    def to_dict(self) -> Dict[str, Any]:
        return {
            "sheets": self.degree,
            "branch_points": list(self.skeleton.punctures),
            "base_point": self.skeleton.base_point,
            "generators": [str(p) for p in self.permutations],
            "infinity_permutation": str(self.infinity_permutation),
            "group_order": self.group.order(),
            "transitive": self.transitive,
            "stabilizer_order": self.pair.stabilizer.order(),
            "genus": self.genus,
        }


def _track_all(f: BiPoly, branch: BranchData, skeleton: LoopSkeleton, tol: float,
               threads: int) -> Tuple[Tuple[Permutation, ...], Permutation]:
    """Permutations of the petal loops, then of the circle around all punctures"""
    relation = NumericRelation(f)
    sheets = sheets_at(f, branch.base_point, tol)
    if not skeleton.loops:
        return (), Permutation.identity(f.deg_y)

    def run(loop):
        return track_loop(f, branch, loop, tol, relation=relation, base_sheets=sheets)

    loops = skeleton.loops + (infinity_loop(skeleton),)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            tracked = tuple(pool.map(run, loops))
    else:
        tracked = tuple(run(loop) for loop in loops)
    return tracked[:-1], tracked[-1]


def monodromy(f: BiPoly, tol: float = 1e-10, threads: int = 1,
              refine_check: bool = False) -> AlgebraicMonodromyReport:
    """
    Monodromy of the algebraic function y(x) defined by f(x, y) = 0

    Args:
        f: relation, leading y-coefficient constant, squarefree in y
        tol: root and Newton tolerance
        threads: loops tracked concurrently when > 1
        refine_check: re-track at tol/10 and require identical permutations

    Returns:
        Report with one permutation per branch point in skeleton order
    """
    f = normalize_monic(f)
    branch = branch_points(f, tol)
    skeleton = build_skeleton(branch.branch_points, tol)
    n = f.deg_y
    logger.info(f"Tracking {n} sheets around {len(skeleton)} loop(s)")

    permutations, around = _track_all(f, branch, skeleton, tol, threads)
    if refine_check:
        refined, _ = _track_all(f, branch, skeleton, max(tol / 10, 1e-14), threads)
        if refined != permutations:
            raise MonodromyConsistencyError(
                "Loop permutations change under tolerance refinement",
                coarse=[str(p) for p in permutations], refined=[str(p) for p in refined])

    product = Permutation.identity(n)
    for p in permutations:
        product = product * p
    if product != around:
        raise MonodromyConsistencyError(
            f"Ordered loop product {product} differs from the circle around all branch points {around}",
            product=str(product), circle=str(around))
    infinity = around.inverse()

    group = PermutationGroup(n, permutations)
    transitive = group.is_transitive()
    if transitive:
        pair = monodromy_pair(group, 0)
        genus = riemann_hurwitz_genus(permutations + (infinity,), n)
    else:
        logger.warning("Monodromy group is intransitive: the relation is reducible over the rationals")
        pair = MonodromyPair(group, 0, group.pointwise_stabilizer([0]))
        genus = None

    logger.info(f"Monodromy group of order {group.order()} on {n} sheets")
    return AlgebraicMonodromyReport(f, branch, skeleton, permutations, infinity, group,
                                    pair, transitive, genus)


def group_verdicts(group: PermutationGroup, kmax: int,
                   signature: Optional[FactorSignature] = None) -> List[Verdict]:
    """Verdicts implied by a finite monodromy group"""
    signature = signature or composition_factor_signature(group)
    evidence = {
        "group_order": group.order(),
        "derived_series_orders": [g.order() for g in group.derived_series()],
        "factor_signature": signature.to_dict(),
    }
    verdicts = []
    if signature.all_cyclic:
        verdicts.append(Verdict(VerdictClass.RADICALS, VerdictStatus.REPRESENTABLE,
                                "monodromy group is solvable", evidence=evidence))
    else:
        verdicts.append(Verdict(VerdictClass.QUADRATURES, VerdictStatus.STRONGLY_NON_REPRESENTABLE,
                                "monodromy group is not solvable", evidence=evidence))

    for k in range(1, kmax + 1):
        if is_k_solvable(group, k, signature):
            verdicts.append(Verdict(VerdictClass.K_RADICALS, VerdictStatus.REPRESENTABLE,
                                    f"monodromy group is {k}-solvable", k=k, evidence=evidence))
        else:
            verdicts.append(Verdict(VerdictClass.K_QUADRATURES, VerdictStatus.STRONGLY_NON_REPRESENTABLE,
                                    f"monodromy group is not {k}-solvable", k=k, evidence=evidence))

    almost, chain = is_almost_solvable_finite(group)
    verdicts.append(Verdict(VerdictClass.GENERALIZED_QUADRATURES, VerdictStatus.REPRESENTABLE,
                            "finite monodromy group is almost solvable",
                            evidence={"almost_solvable": almost, "chain_orders": chain}))
    return verdicts


def classify_algebraic(f: BiPoly, kmax: int = 8, tol: float = 1e-10, threads: int = 1,
                       report: Optional[AlgebraicMonodromyReport] = None) -> List[Verdict]:
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    report = report or monodromy(f, tol, threads)
    report.verdicts = group_verdicts(report.group, kmax)
    return report.verdicts
