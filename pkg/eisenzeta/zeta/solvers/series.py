from math import comb

from eisenzeta.errors import TruncationLeakError
from eisenzeta.poly.homog import HomogPoly
from eisenzeta.poly.series import TruncSeries, series_compose_T_over_1mT
from eisenzeta.zeta.solvers.base import (
    BaseZetaSolver,
    ZetaResult,
    lemma_identity_check,
    logger,
    prepare_enumerator,
)


def normalized_weight_enumerator(f: HomogPoly, q) -> TruncSeries:
    """
    N_f(t) = 1/(q-1) sum_{i=d}^{n} A_i / C(n, i) t^(i-d).

    Args:
        f: Formal weight enumerator
        q: Parameter, any rational except 1

    Returns:
        TruncSeries: Polynomial of degree n-d in t, truncation order n-d+1

    Raises:
        DegenerateEnumeratorError: If f = x^n
    """

    n, d, coeffs, q = prepare_enumerator(f, q)
    values = {i - d: coeffs[i] / comb(n, i) / (q - 1) for i in range(d, n + 1)}
    return TruncSeries(values, n - d + 1)


class SeriesZetaSolver(BaseZetaSolver):
    """
    Zeta polynomial from the normalized weight enumerator.

    P(T) is congruent to N_f(T/(1-T)) (1-qT) / (1-T)^d modulo T^(n-d+1), and
    has degree at most n-d, so the truncated series is P itself.
    """

    method = "SERIES"

    def solve(self, f: HomogPoly, q) -> ZetaResult:
        n, d, _, q = prepare_enumerator(f, q)
        order = n - d + 1

        composed = series_compose_T_over_1mT(normalized_weight_enumerator(f, q))
        factor = TruncSeries.from_list([1, -q], order)
        denominator = TruncSeries.from_list([1, -1], order) ** d
        product = composed * factor * denominator.inv()

        result = ZetaResult(product.to_unipoly(), q, n, d, self.method)
        if result.P.degree > n - d or not lemma_identity_check(result, f):
            raise TruncationLeakError(
                f"Series route for {f} with q={q} leaves terms beyond T^{n - d}"
            )
        logger.debug(f"Series route: P = {result.P} for n={n}, d={d}, q={q}")
        return result
