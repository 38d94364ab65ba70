from eisenzeta.arith.linalg import solve_unique
from eisenzeta.errors import SingularSystemError
from eisenzeta.poly.homog import HomogPoly
from eisenzeta.poly.univariate import UniPoly
from eisenzeta.zeta.solvers.base import (
    BaseZetaSolver,
    ZetaResult,
    lemma_identity_check,
    lemma_rhs,
    lemma_system,
    logger,
    prepare_enumerator,
)


class LinearZetaSolver(BaseZetaSolver):
    """
    Zeta polynomial from the exact linear system of the defining identity.

    The unknowns are p_0..p_(n-d). Matching all n+1 coefficients of
    (f - x^n)/(q - 1) gives an overdetermined system that must have exactly
    one solution.
    """

    method = "LINEAR"

    def solve(self, f: HomogPoly, q) -> ZetaResult:
        n, d, coeffs, q = prepare_enumerator(f, q)
        rows = lemma_system(n, d, q)
        rhs = lemma_rhs(coeffs, q)

        try:
            solution = solve_unique(rows, rhs)
        except SingularSystemError as error:
            raise SingularSystemError(
                f"Zeta system for {f} with q={q} has no unique solution: {error}"
            ) from None

        result = ZetaResult(UniPoly(solution), q, n, d, self.method)
        if not lemma_identity_check(result, f):
            raise SingularSystemError(f"Linear solution for {f} fails re-expansion")
        logger.debug(f"Linear route: P = {result.P} for n={n}, d={d}, q={q}")
        return result
