"""
Interlacing of root sets on the critical circle

Factors shared by both polynomials are divided out exactly before any root
is located. Type II zeta polynomials all share 2T^2+2T+1, so comparing the
raw root sets would report the shared roots as coincidences.
"""

import math
from bisect import bisect_right
from collections import Counter

from eisenzeta.errors import NotOnCircleError
from eisenzeta.poly.univariate import UniPoly, common_factor
from eisenzeta.utils.report import CheckReport, Status
from eisenzeta.zeta.roots import rha_check

INTERLACE_DEFINITION = (
    "interlace: the polynomials are not proportional; after dividing out their exact "
    "common factor, on the common circle |T| = 1/sqrt(q) no remaining root of the smaller-weight polynomial "
    "coincides with a remaining root of the larger-weight one, every such root lies "
    "strictly inside an open arc between angularly adjacent remaining roots of the "
    "larger-weight polynomial, and each arc holds at most one of them"
)

TWO_PI = 2 * math.pi


def interlace_check(
    P_small: UniPoly,
    P_large: UniPoly,
    q,
    tol: float,
    subject: str = "interlace",
) -> CheckReport:
    """
    Check that the roots of P_small interlace those of P_large.

    The monic gcd of the two polynomials is divided out first and the test
    runs on the cofactors. Both remaining root sets are sorted by principal
    argument in [0, 2*pi). The arcs are the open arcs between consecutive
    roots of the larger-weight cofactor, the last one wrapping through angle 0.

    Args:
        P_small: Zeta polynomial of the smaller weight
        P_large: Zeta polynomial of the larger weight
        q: Parameter fixing the circle
        tol: Tolerance for the circle test and for coincidences
        subject: Subject line of the report item

    Returns:
        CheckReport: One item, PASS or FAIL, with the arc counts and the
            shared factor as witness

    Raises:
        NotOnCircleError: If either polynomial fails the RHA check at tol
    """

    for name, poly in (("smaller", P_small), ("larger", P_large)):
        roots = rha_check(poly, q, tol)
        if not roots.passed:
            raise NotOnCircleError(
                f"Roots of the {name}-weight polynomial are off the circle "
                f"(max radius error {roots.max_radius_error:.3e})"
            )

    shared = common_factor(P_small, P_large)
    small_rest = P_small.exact_quotient(shared)
    large_rest = P_large.exact_quotient(shared)
    witness = {"shared_factor": str(shared), "shared_roots": max(shared.degree, 0)}

    report = CheckReport("interlace", notes=[INTERLACE_DEFINITION])

    # proportional polynomials have the same root set
    if shared.degree > 0 and small_rest.degree == 0 and large_rest.degree == 0:
        report.add(
            subject,
            INTERLACE_DEFINITION,
            Status.FAIL,
            reason="coincident roots",
            count=shared.degree,
            **witness,
        )
        return report

    small = rha_check(small_rest, q, tol)
    large = rha_check(large_rest, q, tol)
    large_angles = sorted(large.angles)
    small_angles = sorted(small.angles)

    coincidences = sum(1 for a in small.roots for b in large.roots if abs(a - b) < tol)
    if coincidences:
        report.add(
            subject,
            INTERLACE_DEFINITION,
            Status.FAIL,
            reason="coincident roots",
            count=coincidences,
            **witness,
        )
        return report

    if not large_angles:
        status = Status.PASS if not small_angles else Status.FAIL
        report.add(
            subject, INTERLACE_DEFINITION, status, reason="no arcs", small_roots=len(small_angles), **witness
        )
        return report

    # arc k runs from large_angles[k] to large_angles[k + 1], the last one wraps
    arcs = Counter()
    on_boundary = 0
    for angle in small_angles:
        if any(
            min(abs(angle - b), TWO_PI - abs(angle - b)) < tol for b in large_angles
        ):
            on_boundary += 1
            continue
        arcs[(bisect_right(large_angles, angle) - 1) % len(large_angles)] += 1

    crowded = sorted(k for k, count in arcs.items() if count > 1)
    passed = not crowded and on_boundary == 0
    report.add(
        subject,
        INTERLACE_DEFINITION,
        Status.PASS if passed else Status.FAIL,
        small_roots=len(small_angles),
        large_roots=len(large_angles),
        occupied_arcs=len(arcs),
        crowded_arcs=crowded,
        boundary_roots=on_boundary,
        **witness,
    )
    return report
