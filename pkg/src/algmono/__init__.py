# Monodromy of algebraic functions: branch points, loop skeletons, sheet tracking, verdicts
from .verdict import Verdict, VerdictClass, VerdictStatus, find_verdict
from .skeleton import LoopSkeleton, build_skeleton, infinity_loop, petal
from .branch import BranchData, branch_points, normalize_monic
from .tracking import NumericRelation, continue_sheets, sheets_at, track_loop
from .monodromy import AlgebraicMonodromyReport, classify_algebraic, group_verdicts, monodromy

__all__ = [
    "Verdict", "VerdictClass", "VerdictStatus", "find_verdict",
    "LoopSkeleton", "build_skeleton", "infinity_loop", "petal",
    "BranchData", "branch_points", "normalize_monic",
    "NumericRelation", "continue_sheets", "sheets_at", "track_loop",
    "AlgebraicMonodromyReport", "classify_algebraic", "group_verdicts", "monodromy",
]
