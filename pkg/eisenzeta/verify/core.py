"""
Acceptance suites: table reproduction and every verification sweep

`SuiteRunner` turns a `RunConfig` into a flat list of independent tasks, runs
them inline or on a process pool, and assembles one `CheckReport` in task
order regardless of completion order.
"""

import concurrent.futures
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from tqdm import tqdm

from eisenzeta.arith.cyclotomic import cyclo_symbol
from eisenzeta.eisenstein.core import (
    CLOSED_FORM_TYPES,
    closed_form,
    closed_form_vanishes,
    eisenstein_poly,
    valid_weights,
)
from eisenzeta.errors import EisenZetaError, TableMismatchError
from eisenzeta.groups.core import averaging_group, builtin_group
from eisenzeta.groups.matrix import Mat2
from eisenzeta.modular.core import eisenstein_series, series_integrality, theta_map
from eisenzeta.padic.core import LEMMA_TYPES, integrality_sweep, lemma_mod_check, report_status
from eisenzeta.poly.homog import HomogPoly, format_homog
from eisenzeta.poly.univariate import format_unipoly
from eisenzeta.utils.config import RunConfig
from eisenzeta.utils.render import render_json, render_table2, render_table3, table2_json, table3_json
from eisenzeta.utils.report import CheckReport, Status
from eisenzeta.zeta.core import (
    INTERLACE_STEPS,
    Q_VALUES,
    lemma_identity_check,
    zeta_for,
    zeta_linear,
    zeta_series,
)
from eisenzeta.zeta.interlace import INTERLACE_DEFINITION, interlace_check
from eisenzeta.zeta.roots import rha_check

logger = logging.getLogger("SuiteRunner")

EXPECTED_ORDERS = {"I": 16, "II": 192, "III": 48, "IV": 12}
AVERAGING_ORDER_II = 96

# Type II rows of the reference tables, q = 2
TABLE2_EXPECTED = {
    8: "x^8+14x^4y^4+y^8",
    12: "x^12-33x^8y^4-33x^4y^8+y^12",
}
TABLE3_EXPECTED = {
    8: "1/5+2T/5+2T^2/5",
    12: "-1/15-2T/15-2T^2/15+4T^4/15+8T^5/15+8T^6/15",
}

RANDOM_SEED = 20240607
RANDOM_SAMPLES = 50
RANDOM_MAX_DEGREE = 12
RANDOM_Q = (Fraction(2), Fraction(3), Fraction(4), Fraction(5, 3), Fraction(-2))

SUITES = (
    "groups",
    "tables",
    "closed-form",
    "zeta",
    "zeta-random",
    "rha",
    "interlace",
    "integrality",
    "lemma-mod",
    "eisenstein-series",
    "theta",
)


def table_rows() -> List[dict]:
    """
    Type II rows at l = 8 and 12: averaged phi_l and its zeta polynomial at q = 2.

    Returns:
        list[dict]: Plain and LaTeX strings plus JSON documents per row
    """

    rows = []
    for ell in sorted(TABLE2_EXPECTED):
        tilde = eisenstein_poly("II", ell).tilde
        result = zeta_linear(tilde, Q_VALUES["II"])
        rows.append(
            {
                "ell": ell,
                "eisenstein": format_homog(tilde),
                "eisenstein_latex": format_homog(tilde, latex=True),
                "eisenstein_json": tilde.to_json(),
                "zeta": format_unipoly(result.P),
                "zeta_latex": format_unipoly(result.P, latex=True),
                "zeta_json": result.P.to_json(),
            }
        )
    return rows


def table_mismatches(rows: List[dict]) -> List[str]:
    """Human-readable diff lines, empty when every row matches"""

    diffs = []
    for row in rows:
        for key, expected in (("eisenstein", TABLE2_EXPECTED), ("zeta", TABLE3_EXPECTED)):
            want = expected[row["ell"]]
            if row[key] != want:
                diffs.append(f"l={row['ell']} {key}: expected {want!r}, got {row[key]!r}")
    return diffs


def cmd_tables(fmt: str = "table") -> str:
    """
    Reproduce both Type II tables and render them.

    Args:
        fmt: Output format

    Returns:
        str: Both tables; for JSON a single document with keys table2 and table3

    Raises:
        TableMismatchError: If any computed string differs from the expected one
    """

    rows = table_rows()
    diffs = table_mismatches(rows)
    if diffs:
        raise TableMismatchError("Table reproduction failed:\n" + "\n".join(diffs))
    logger.info("Tables reproduced exactly")

    if fmt == "json":
        # one document, not two concatenated ones
        return render_json({"table2": table2_json(rows), "table3": table3_json(rows)})
    separator = "\n" if fmt == "table" else ""
    return render_table2(rows, fmt) + separator + render_table3(rows, fmt)


# Task bodies. Each returns a CheckReport and runs in a worker process, so
# they are module-level functions of picklable arguments.


def check_group(label: str) -> CheckReport:
    report = CheckReport("groups")
    group = builtin_group(label)
    expected = EXPECTED_ORDERS[label]
    report.add(
        f"order G_{label}",
        "closure of the printed generators is finite of the recorded order",
        Status.PASS if group.order == expected else Status.FAIL,
        order=group.order,
        expected=expected,
    )
    report.add(
        f"axioms G_{label}",
        "identity, closure under products and inverses, checked on every element",
        Status.PASS if group.verify(exhaustive=True) else Status.FAIL,
        order=group.order,
    )

    if label == "II":
        sub = averaging_group("II")
        scalar = Mat2.scalar(cyclo_symbol("ZETA8"))
        passed = (
            sub.order == AVERAGING_ORDER_II
            and sub.verify(exhaustive=True)
            and sub.is_subgroup_of(group)
            and scalar in group
            and scalar not in sub
        )
        report.add(
            f"averaging {sub.name}",
            "index-2 subgroup of G_II without the scalar zeta_8",
            Status.PASS if passed else Status.FAIL,
            order=sub.order,
            expected=AVERAGING_ORDER_II,
        )
    return report


def check_tables() -> CheckReport:
    report = CheckReport("tables")
    rows = table_rows()
    for row in rows:
        for key, expected in (("eisenstein", TABLE2_EXPECTED), ("zeta", TABLE3_EXPECTED)):
            want = expected[row["ell"]]
            report.add(
                f"table {key} II l={row['ell']}",
                "exact match with the reference Type II table",
                Status.PASS if row[key] == want else Status.FAIL,
                expected=want,
                got=row[key],
            )
    return report


def check_closed_form(label: str, ell: int) -> CheckReport:
    report = CheckReport("closed-form")
    poly = eisenstein_poly(label, ell)
    predicted = closed_form(label, ell)
    vanishes = closed_form_vanishes(label, ell)

    if vanishes or poly.is_zero():
        status = Status.PASS if vanishes and poly.is_zero() else Status.FAIL
        claim = "closed-form case split predicts exactly the vanishing weights"
    else:
        status = Status.PASS if predicted == poly.tilde else Status.FAIL
        claim = "closed form equals the normalized group average"
    report.add(
        f"closed-form {label} l={ell}",
        claim,
        status,
        predicted_zero=vanishes,
        average_zero=poly.is_zero(),
    )
    return report


def check_zeta(label: str, ell: int, method: str) -> CheckReport:
    report = CheckReport("zeta")
    methods = ["LINEAR", "SERIES", "CLOSED"] if method == "ALL" else [method]
    if label not in CLOSED_FORM_TYPES and "CLOSED" in methods:
        methods.remove("CLOSED")
    if not methods:
        return report

    results = {m: zeta_for(label, ell, m) for m in methods}
    polys = {str(r.P) for r in results.values()}
    reference = results[methods[0]]
    identity = lemma_identity_check(reference, eisenstein_poly(label, ell).tilde)
    report.add(
        f"zeta {label} l={ell}",
        "every zeta route gives the same polynomial and it satisfies the defining identity",
        Status.PASS if len(polys) == 1 and identity else Status.FAIL,
        methods=methods,
        P={m: str(r.P) for m, r in results.items()},
        identity=identity,
    )
    return report


def _random_enumerator(rng: random.Random) -> Tuple[HomogPoly, Fraction]:
    n = rng.randint(2, RANDOM_MAX_DEGREE)
    d = rng.randint(1, n)
    coeffs = {0: Fraction(1), d: Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))}
    for i in range(d + 1, n + 1):
        coeffs[i] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return HomogPoly(n, coeffs), rng.choice(RANDOM_Q)


def check_zeta_random(seed: int, samples: int) -> CheckReport:
    report = CheckReport("zeta-random")
    rng = random.Random(seed)
    for index in range(samples):
        f, q = _random_enumerator(rng)
        linear, series = zeta_linear(f, q), zeta_series(f, q)
        report.add(
            f"zeta random #{index}",
            "linear and series routes agree on a random formal weight enumerator",
            Status.PASS if linear.P == series.P else Status.FAIL,
            f=str(f),
            q=str(q),
            linear=str(linear.P),
            series=str(series.P),
        )
    return report


def check_rha(label: str, ell: int, tol: float) -> CheckReport:
    report = CheckReport("rha")
    result = zeta_for(label, ell, "LINEAR")
    roots = rha_check(result.P, result.q, tol)
    report.add(
        f"RHA {label} l={ell}",
        "every root of the zeta polynomial lies on |T| = 1/sqrt(q)",
        Status.PASS if roots.passed else Status.FAIL,
        degree=result.P.degree,
        max_radius_error=float(f"{roots.max_radius_error:.3e}"),
        tol=tol,
    )
    return report


def check_interlace(label: str, ell: int, step: int, tol: float) -> CheckReport:
    subject = f"interlace {label} l={ell}->{ell + step}"
    if eisenstein_poly(label, ell + step).is_zero():
        report = CheckReport("interlace", notes=[INTERLACE_DEFINITION])
        report.add(
            subject,
            INTERLACE_DEFINITION,
            Status.FLAGGED,
            reason=f"vacuous: the Type {label} Eisenstein polynomial of weight {ell + step} is zero",
        )
        return report

    q = Q_VALUES[label]
    small = zeta_for(label, ell, "LINEAR").P
    large = zeta_for(label, ell + step, "LINEAR").P
    report = interlace_check(small, large, q, tol, subject)
    report.suite = "interlace"
    return report


def check_integrality(label: str, p: int, what: str, order: int) -> CheckReport:
    report = CheckReport("integrality")
    (scan,) = integrality_sweep([label], [p], what, order)
    report.add(
        f"integrality {scan.target} p={p}",
        "coefficients are p-integral at l = 2(p-1)",
        report_status(scan),
        **scan.to_json(),
    )
    return report


def check_lemma(label: str, p: int) -> CheckReport:
    return lemma_mod_check(label, p)


def check_eisenstein_series(p: int, terms: int) -> CheckReport:
    report = CheckReport("eisenstein-series")
    scan = series_integrality(eisenstein_series(p - 1, terms), p)
    report.add(
        f"psi_{p - 1} p={p}",
        "the Eisenstein series of weight p-1 is p-integral",
        report_status(scan),
        min_valuation=scan.to_json()["min_valuation"],
        offending_terms=[list(t) for t in scan.offending_terms],
        terms=terms,
    )
    return report


def check_psi4_prefix() -> CheckReport:
    report = CheckReport("eisenstein-series")
    series = eisenstein_series(4, 3).series
    prefix = [int(series.coefficient(e)) for e in range(3)]
    report.add(
        "psi_4 prefix",
        "psi_4 begins 1 + 240q + 2160q^2",
        Status.PASS if prefix == [1, 240, 2160] else Status.FAIL,
        prefix=prefix,
    )
    return report


def check_theta_psi4(order: int) -> CheckReport:
    report = CheckReport("theta")
    image = theta_map(eisenstein_poly("II", 8).tilde, order).series.to_lattice(1)
    psi4 = eisenstein_series(4, image.order).series
    report.add(
        "Th(II l=8) = psi_4",
        "the theta image of the Type II weight-8 polynomial is psi_4",
        Status.PASS if image == psi4 else Status.FAIL,
        q_terms=image.order,
    )
    return report


@dataclass(frozen=True)
class SuiteTask:
    """
    One unit of work

    Attributes:
        suite: Suite the task belongs to
        subject: Subject used if the task raises
        func: Module-level task body returning a CheckReport
        args: Positional arguments of func
    """

    suite: str
    subject: str
    func: Callable[..., CheckReport]
    args: tuple = ()


def run_task(task: SuiteTask) -> CheckReport:
    """Run a task, turning an EisenZetaError into a FAIL item of its suite"""

    try:
        return task.func(*task.args)
    except EisenZetaError as error:
        report = CheckReport(task.suite)
        report.add(task.subject, "task completed", Status.FAIL, error=f"{type(error).__name__}: {error}")
        return report


class SuiteRunner:
    """
    Build and run the acceptance suites of a configuration.

    Args:
        config: Validated run configuration
        suites: Suites to run, default all
        progress: Show a tqdm progress bar
        evidence_primes: Primes added to the integrality and residue sweeps
            to record the documented exceptions
    """

    def __init__(
        self,
        config: RunConfig,
        suites: Optional[Tuple[str, ...]] = None,
        progress: bool = False,
        evidence_primes: Tuple[int, ...] = (3,),
    ):
        unknown = [s for s in (suites or ()) if s not in SUITES]
        if unknown:
            raise ValueError(f"Invalid suite: {unknown[0]}. Choose from {', '.join(SUITES)}")
        self.config = config
        self.suites = tuple(suites or SUITES)
        self.progress = progress
        self.evidence_primes = evidence_primes

    def _weights(self, label: str) -> List[int]:
        return valid_weights(label, self.config.ell_max, self.config.ell_min)

    def tasks(self) -> List[SuiteTask]:
        """Every task of the selected suites, in report order"""

        config = self.config
        closed_types = [t for t in config.types if t in CLOSED_FORM_TYPES]
        lemma_types = [t for t in config.types if t in LEMMA_TYPES]
        primes = sorted(set(config.primes) | set(self.evidence_primes))
        tasks: List[SuiteTask] = []

        def add(suite: str, subject: str, func, *args) -> None:
            if suite in self.suites:
                tasks.append(SuiteTask(suite, subject, func, args))

        for label in config.types:
            add("groups", f"group {label}", check_group, label)
        add("tables", "tables II", check_tables)

        for label in closed_types:
            # one past the range so the last vanishing case is covered
            for ell in range(config.ell_min, config.ell_max + 2):
                add("closed-form", f"closed-form {label} l={ell}", check_closed_form, label, ell)

        weighted = {"zeta", "rha", "interlace"} & set(self.suites)
        weights = {label: self._weights(label) for label in config.types} if weighted else {}

        for label in weights:
            for ell in weights[label]:
                add("zeta", f"zeta {label} l={ell}", check_zeta, label, ell, config.method)
        add("zeta-random", "zeta random", check_zeta_random, RANDOM_SEED, RANDOM_SAMPLES)

        for label in weights:
            for ell in weights[label]:
                add("rha", f"RHA {label} l={ell}", check_rha, label, ell, config.tol)

        for label in weights:
            step = config.step or INTERLACE_STEPS[label]
            for ell in weights[label]:
                if ell + step <= config.ell_max:
                    subject = f"interlace {label} l={ell}->{ell + step}"
                    add("interlace", subject, check_interlace, label, ell, step, config.tol)

        for what in config.what:
            for label in config.types:
                for p in primes:
                    subject = f"integrality {what} {label} p={p}"
                    add("integrality", subject, check_integrality, label, p, what, config.order)

        for label in lemma_types:
            for p in primes:
                add("lemma-mod", f"lemma-mod {label} p={p}", check_lemma, label, p)

        for p in config.primes:
            add("eisenstein-series", f"psi_{p - 1} p={p}", check_eisenstein_series, p, config.order)
        add("eisenstein-series", "psi_4 prefix", check_psi4_prefix)

        if "II" in config.types:
            add("theta", "Th(II l=8) = psi_4", check_theta_psi4, config.order)
        return tasks

    def run(self) -> CheckReport:
        """
        Run every task and merge the results in task order.

        Returns:
            CheckReport: Suite "verify" with all items and notes
        """

        tasks = self.tasks()
        num_workers = self.config.num_workers()
        logger.info(f"Running {len(tasks)} tasks from {len(self.suites)} suites on {num_workers} CPU cores")

        results: List[Optional[CheckReport]] = [None] * len(tasks)
        with tqdm(total=len(tasks), desc="Verifying", unit="task", disable=not self.progress) as pbar:
            if num_workers == 1:
                for index, task in enumerate(tasks):
                    results[index] = run_task(task)
                    pbar.update(1)
            else:
                with concurrent.futures.ProcessPoolExecutor(max_workers=num_workers) as executor:
                    futures = {executor.submit(run_task, task): index for index, task in enumerate(tasks)}
                    for future in concurrent.futures.as_completed(futures):
                        results[futures[future]] = future.result()
                        pbar.update(1)

        report = CheckReport("verify")
        for result in results:
            report.extend(result)
        logger.info(report.summary())
        return report


def cmd_verify_all(
    config: RunConfig, suites: Optional[Tuple[str, ...]] = None, progress: bool = False
) -> CheckReport:
    """
    Run the full acceptance suite.

    A run fails only on FAIL items; FLAGGED items record documented
    exceptions and vacuous claims.

    Args:
        config: Validated run configuration
        suites: Restrict to these suites
        progress: Show a progress bar

    Returns:
        CheckReport: Merged report of every suite
    """

    return SuiteRunner(config, suites, progress).run()
