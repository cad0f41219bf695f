"""
Invertibility of polynomials by radicals and k-radicals, structurally and through the
monodromy of the inverse function
"""

import logging
from typing import Dict, List, Optional, Tuple

from .decompose import ComponentTag, Decomposition, TagKind, decompose
from ..algmono import AlgebraicMonodromyReport, Verdict, VerdictClass, VerdictStatus, monodromy
from ..numkernel import BiPoly, UniPoly
from ..permgrp import PermutationGroup, composition_factor_signature, is_k_solvable
from ..utils.errors import CrossCheckMismatch, MonodromyConsistencyError

logger = logging.getLogger(__name__)


def inverse_monodromy(p: UniPoly, tol: float = 1e-10, threads: int = 1) -> AlgebraicMonodromyReport:
    """Monodromy of the inverse of p, computed from p(y) - x = 0"""
    if p.degree < 2:
        raise ValueError("inverse_monodromy needs degree >= 2")
    report = monodromy(BiPoly.inverse_relation(p), tol, threads)
    if not report.infinity_permutation.is_full_cycle:
        raise MonodromyConsistencyError(
            f"Loop around infinity gives {report.infinity_permutation}, expected a {p.degree}-cycle")
    if report.genus != 0:
        raise MonodromyConsistencyError(f"Inverse of a polynomial must have genus 0, got {report.genus}")
    return report


def check_solvable_primitive_shape(group: PermutationGroup) -> Tuple[bool, Optional[str]]:
    """
    Consistency of a solvable primitive group containing a full cycle

    Returns:
        Tuple of (is_consistent, error_message)
    """
    n = group.degree
    if n == 4:
        return True, None
    is_prime = n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))
    if not is_prime:
        return False, f"solvable primitive group of degree {n}: degree must be 4 or prime"
    if (n * (n - 1)) % group.order():
        return False, f"order {group.order()} does not divide {n * (n - 1)}"
    return True, None


def certify_primitivity(decomposition: Decomposition, tol: float = 1e-10,
                        threads: int = 1) -> List[Optional[AlgebraicMonodromyReport]]:
    """
    Inverse monodromy of every component; each nonlinear one must act primitively

    Returns:
        One report per component, None for linear components
    """
    reports = []
    for component, tag in zip(decomposition.components, decomposition.tags):
        if tag.kind is TagKind.LINEAR:
            reports.append(None)
            continue
        report = inverse_monodromy(component, tol, threads)
        if not report.group.is_primitive():
            raise MonodromyConsistencyError(
                f"Component of degree {component.degree} has an imprimitive inverse monodromy group")
        if tag.solvable_by_shape:
            ok, message = check_solvable_primitive_shape(report.group)
            if not ok:
                raise MonodromyConsistencyError(message)
        reports.append(report)
    return reports


def _structural(decompositions: List[Decomposition]) -> Tuple[bool, Decomposition]:
    for d in decompositions:
        if all(t.solvable_by_shape for t in d.tags):
            return True, d
    return False, decompositions[0]


def _component_evidence(certificate: Decomposition,
                        reports: List[Optional[AlgebraicMonodromyReport]]) -> List[Dict]:
    evidence = []
    for component, tag, report in zip(certificate.components, certificate.tags, reports):
        if report is None:
            evidence.append({"degree": 1, "tag": str(tag)})
            continue
        evidence.append({"degree": component.degree, "tag": str(tag), "group_order": report.group.order(),
                         "primitive": True, "shape_checked": tag.solvable_by_shape})
    return evidence


def _radicals_verdict(p: UniPoly, certificate: Decomposition, structural: bool,
                      reports: List[Optional[AlgebraicMonodromyReport]], tol: float, threads: int) -> Verdict:
    evidence: Dict = {"decomposition": certificate.to_dict(),
                      "components": _component_evidence(certificate, reports)}
    if p.degree >= 2:
        report = inverse_monodromy(p, tol, threads)
        solvable = report.group.is_solvable()
        evidence.update({"group_order": report.group.order(), "group_solvable": solvable})
        if solvable != structural:
            raise CrossCheckMismatch(
                f"Components say {'solvable' if structural else 'unsolvable'}, "
                f"monodromy group of order {report.group.order()} says {'solvable' if solvable else 'unsolvable'}",
                decomposition=certificate.to_dict(), group_order=report.group.order())

    if structural:
        tags = ", ".join(str(t) for t in certificate.tags)
        return Verdict(VerdictClass.RADICALS, VerdictStatus.REPRESENTABLE,
                       f"every component is linear, power, Chebyshev or of degree <= 4 ({tags})",
                       evidence=evidence)
    return Verdict(VerdictClass.RADICALS, VerdictStatus.NOT_REPRESENTABLE,
                   "a primitive component is neither power, Chebyshev nor of degree <= 4",
                   evidence=evidence)


def _k_radicals_verdict(certificate: Decomposition, reports: List[Optional[AlgebraicMonodromyReport]],
                        k: int) -> Verdict:
    components = []
    notes = []
    passed = True
    for component, tag, report in zip(certificate.components, certificate.tags, reports):
        if report is None:
            components.append({"degree": 1, "k_solvable": True})
            continue
        group = report.group
        signature = composition_factor_signature(group)
        ok = is_k_solvable(group, k, signature)
        passed = passed and ok
        shape = ComponentTag(TagKind.DEGREE_AT_MOST_K, k) if component.degree <= k else tag
        components.append({"degree": component.degree, "tag": str(shape), "group_order": group.order(),
                           "factor_signature": signature.to_dict(), "k_solvable": ok})
        if ok and shape.kind not in (TagKind.POWER, TagKind.CHEBYSHEV, TagKind.DEGREE_AT_MOST_K):
            notes.append(f"degree-{component.degree} component is {k}-solvable without being "
                         f"a power, Chebyshev or degree <= {k} polynomial (exceptional case)")

    evidence = {"components": components, "notes": notes}
    if passed:
        return Verdict(VerdictClass.K_RADICALS, VerdictStatus.REPRESENTABLE,
                       f"inverse monodromy of every component is {k}-solvable", k=k, evidence=evidence)
    return Verdict(VerdictClass.K_RADICALS, VerdictStatus.NOT_REPRESENTABLE,
                   f"some component has an inverse monodromy group that is not {k}-solvable",
                   k=k, evidence=evidence)


def _classify_by_monodromy(p: UniPoly, k: Optional[int], tol: float, threads: int) -> List[Verdict]:
    """Non-rational coefficients: no decomposition, the group of the whole inverse decides"""
    group = inverse_monodromy(p, tol, threads).group
    signature = composition_factor_signature(group)
    evidence = {"route": "monodromy only (non-rational coefficients)", "group_order": group.order(),
                "group_solvable": signature.all_cyclic, "factor_signature": signature.to_dict()}
    if signature.all_cyclic:
        verdicts = [Verdict(VerdictClass.RADICALS, VerdictStatus.REPRESENTABLE,
                            "inverse monodromy group is solvable", evidence=evidence)]
    else:
        verdicts = [Verdict(VerdictClass.RADICALS, VerdictStatus.NOT_REPRESENTABLE,
                            "inverse monodromy group is not solvable", evidence=evidence)]
    if k is not None:
        if is_k_solvable(group, k, signature):
            verdicts.append(Verdict(VerdictClass.K_RADICALS, VerdictStatus.REPRESENTABLE,
                                    f"inverse monodromy group is {k}-solvable", k=k, evidence=evidence))
        else:
            verdicts.append(Verdict(VerdictClass.K_RADICALS, VerdictStatus.NOT_REPRESENTABLE,
                                    f"inverse monodromy group is not {k}-solvable", k=k, evidence=evidence))
    return verdicts


def classify_inverse(p: UniPoly, k: Optional[int] = None, tol: float = 1e-10,
                     threads: int = 1) -> Tuple[List[Verdict], Optional[Decomposition]]:
    """
    Invertibility of p by radicals, and by k-radicals when k is given

    Rational polynomials are decomposed, every component is certified primitive through the
    monodromy of its inverse, and the structural verdict is cross-checked against the group of
    the whole inverse. Other polynomials are classified by the monodromy group alone.

    Returns:
        Tuple of (verdicts, certificate); the certificate is None on the monodromy-only route

    Raises:
        CrossCheckMismatch: structural and monodromy certificates disagree
        MonodromyConsistencyError: a component fails its primitivity or shape check
    """
    if k is not None and k < 1:
        raise ValueError("k must be at least 1")
    if p.is_constant:
        raise ValueError("A constant polynomial has no inverse")
    if not p.is_exact:
        logger.info(f"Degree-{p.degree} polynomial with numeric coefficients: monodromy route only")
        return _classify_by_monodromy(p, k, tol, threads), None

    structural, certificate = _structural(decompose(p))
    reports = certify_primitivity(certificate, tol, threads)
    verdicts = [_radicals_verdict(p, certificate, structural, reports, tol, threads)]
    if k is not None:
        verdicts.append(_k_radicals_verdict(certificate, reports, k))
    return verdicts, certificate


def invertible_by_radicals(p: UniPoly, tol: float = 1e-10,
                           threads: int = 1) -> Tuple[Verdict, Optional[Decomposition]]:
    """Radical invertibility from the component shapes, cross-checked against the inverse monodromy"""
    verdicts, certificate = classify_inverse(p, None, tol, threads)
    return verdicts[0], certificate


def invertible_by_k_radicals(p: UniPoly, k: int, tol: float = 1e-10, threads: int = 1) -> Verdict:
    """Inverse is a k-radical expression iff the inverse of every component has a k-solvable monodromy group"""
    verdicts, _ = classify_inverse(p, k, tol, threads)
    return verdicts[-1]
