"""
Command dispatch
Every command maps a session and an options dict to an AnalysisReport whose
status is one of success, negative, undecided or error.
"""
import time
from dataclasses import replace
from itertools import product
from typing import Any, Callable, Dict, List, Optional

from exactalg.errors import NotSquarefreeError, SearchExhaustedError, SessionError
from exactalg.monomials import is_finite
from modules.filtration import Filtration, dimension_filtration, embeds_in_dimension_filtration
from modules.quotient import QuotientModule
from parameters.fit import multilinear_fit
from parameters.multiplicity import ifm_grid, is_standard_witness, length_grid, multiplicity_table
from parameters.search import find_good_sop
from parameters.sequences import check_intersection_equality, dd_sequence_failure
from parameters.system import ParameterSystem, good_sop_violations, is_good_sop, is_sop
from hilbsam.samuel import I_n_invariance, hs_coefficients, verify_hs_identities
from seqcm.cohomology import cohomological_filtration_verdict, invariant_I_F_cohomological
from seqcm.detect import (
    UNAVAILABLE,
    SearchOptions,
    check_gcm_filtration,
    check_seq_cm,
    invariant_witness,
    is_seq_gcm,
)
from seqcm.invariants import (
    check_additivity,
    compare_filtrations,
    divergence_profile,
    two_step_check,
)
from simplicial.complexes import stanley_reisner_complex
from simplicial.homology import reduced_homology_ranks
from simplicial.hochster import module_local_cohomology_lengths

from .config import COMMANDS, ToolkitConfig, get_config
from .corpus import example_id, generate_monomial_corpus, load_example, write_corpus
from .report import AnalysisReport, error_report
from .session import Session


class Context:
    """Resolved names and settings for one command run"""

    def __init__(self, session: Optional[Session], options: Dict[str, Any], config: ToolkitConfig):
        self.session = session
        self.options = options
        self.config = config

    def get(self, key: str, default: Any = None) -> Any:
        value = self.options.get(key)
        return default if value is None else value

    @property
    def search(self) -> SearchOptions:
        return self.config.search_options()

    def require_session(self) -> Session:
        if self.session is None:
            raise SessionError("this command needs a session file")
        return self.session

    @property
    def module_name(self) -> str:
        return self.require_session().module_name(self.get("module"))

    @property
    def module(self) -> QuotientModule:
        return self.require_session().module(self.module_name)

    def decompositions(self):
        return self.require_session().decompositions_for(self.module_name)

    def dimension_filtration(self) -> Filtration:
        return dimension_filtration(self.module, self.decompositions())

    def filtration(self) -> Filtration:
        """The named filtration, or the dimension filtration"""
        name = self.get("filtration")
        if name is None:
            return self.dimension_filtration()
        return self.require_session().filtration(name, self.module_name)

    def sop(self) -> Optional[ParameterSystem]:
        name = self.get("sop")
        if name is None:
            return None
        return self.require_session().sop(name, self.module_name)


def _status(verdict: Optional[bool]) -> str:
    if verdict is None:
        return "undecided"
    return "success" if verdict else "negative"


def _length(value) -> Any:
    return value if is_finite(value) else "infinite"


# ------------------------------------------------------------ commands


def cmd_dimfilt(ctx: Context, report: AnalysisReport) -> None:
    M = ctx.module
    D = ctx.dimension_filtration()
    report.verdicts["dims"] = list(D.dims)
    report.verdicts["filtration"] = D.format()
    report.tables["dimension_filtration"] = [
        {"step": i, "dim": d, "submodule": D.steps[i].format()} for i, d in enumerate(D.dims)
    ]
    for name in ctx.require_session().filtrations_on(ctx.module_name):
        F = ctx.session.filtrations[name]
        report.verifications.append(
            {"check": f"{name} embeds in D", "rows": embeds_in_dimension_filtration(F, D)}
        )
    report.message = f"dimension filtration of {ctx.module_name}: dims {list(D.dims)} (dim M = {M.dimension})"


def cmd_good_sop(ctx: Context, report: AnalysisReport) -> None:
    M = ctx.module
    F = ctx.filtration()
    x = ctx.sop()
    if x is not None:
        sop = is_sop(M, x)
        violations = good_sop_violations(M, F, x) if sop else []
        report.verdicts.update({"sop": x.format(), "is_sop": sop, "is_good_sop": sop and not violations})
        report.tables["violations"] = violations
        report.status = _status(sop and not violations)
        report.message = "good system of parameters" if report.status == "success" else "not a good system of parameters"
        return
    seed = ctx.config.seed
    report.seeds = [seed]
    try:
        found = find_good_sop(M, F, seed, ctx.config.max_tries, max_degree=2, progress=ctx.config.progress)
    except SearchExhaustedError as exc:
        report.status = "undecided"
        report.message = str(exc)
        report.verdicts["search"] = exc.progress
        return
    report.verdicts.update({"sop": found.format(), "is_sop": True, "is_good_sop": True})
    report.message = f"found good system of parameters (seed {seed})"


def _good_sop(ctx: Context, F: Filtration) -> ParameterSystem:
    x = ctx.sop()
    if x is not None:
        return x
    return find_good_sop(ctx.module, F, ctx.config.seed, ctx.config.max_tries, max_degree=2)


def _sop_or_witness(ctx: Context, F: Filtration) -> ParameterSystem:
    x = ctx.sop()
    if x is not None:
        return x
    witness = invariant_witness(ctx.module, F, ctx.search)
    return witness.sop


def cmd_dd_check(ctx: Context, report: AnalysisReport) -> None:
    M = ctx.module
    D = ctx.dimension_filtration()
    x = _good_sop(ctx, D)
    bound = int(ctx.get("bound", ctx.config.dd_bound))
    failure = dd_sequence_failure(M, x, bound, ctx.config.progress)
    report.verdicts.update({"sop": x.format(), "bound": bound, "is_dd_sequence": failure is None, "failure": failure})
    if failure is None:
        rows = check_intersection_equality(M, D, x)
        report.verifications.append({"check": "xM ∩ D_i = (x_1..x_{d_i})M ∩ D_i", "rows": rows})
    report.status = _status(failure is None)
    report.message = f"dd-sequence up to exponent {bound}" if failure is None else f"dd-property fails at {failure}"


def cmd_ifm(ctx: Context, report: AnalysisReport) -> None:
    M = ctx.module
    F = ctx.filtration()
    x = _good_sop(ctx, F)
    size = int(ctx.get("grid", ctx.config.grid))
    threads = ctx.config.threads
    table = multiplicity_table(M, F, x, base=ctx.config.base_point, threads=threads)
    lengths = length_grid(M, x, size, threads, ctx.config.progress)
    grid = {n: value - table.correction(n) for n, value in lengths.items()}
    fit = multilinear_fit(lengths)
    ok, low, high = is_standard_witness(M, F, x, table)
    report.add_grid("length", lengths)
    report.add_grid("ifm", grid)
    report.multiplicities = table.as_rows()
    report.verdicts.update(
        {
            "sop": x.format(),
            "filtration_dims": list(F.dims),
            "constant": len(set(grid.values())) == 1,
            "min": min(grid.values()),
            "max": max(grid.values()),
            "finite_criterion": {"holds": ok, "at_ones": low, "at_twos": high},
            "fit_exact": fit.exact,
            "fit_coefficients": [str(a) for a in fit.coefficients],
        }
    )
    report.message = f"I_F,M over {{1..{size}}}^{len(x)}: min {min(grid.values())}, max {max(grid.values())}"


def cmd_invariant(ctx: Context, report: AnalysisReport) -> None:
    M = ctx.module
    F = ctx.filtration()
    search = ctx.search
    report.seeds = list(range(search.seed, search.seed + search.budget))
    parametric: Optional[int] = None
    try:
        witness = invariant_witness(M, F, search, ctx.sop())
        parametric = witness.value_low
        report.verdicts["witness_sop"] = witness.sop.format()
        report.multiplicities = witness.table.as_rows()
    except SearchExhaustedError as exc:
        report.verdicts["search"] = str(exc)

    cohomological: Any = UNAVAILABLE
    try:
        verdict = cohomological_filtration_verdict(M, F)
        report.verdicts["filtration_gcm"] = verdict.is_gcm
        if verdict.is_gcm:
            cohomological = int(invariant_I_F_cohomological(M, F))
        else:
            cohomological = f"not generalized Cohen-Macaulay: {verdict.reason}"
    except NotSquarefreeError:
        pass

    report.invariants = {
        "parametric": parametric,
        "cohomological": cohomological,
        "agreement": parametric == cohomological if isinstance(cohomological, int) and parametric is not None else None,
    }
    if F.dims[0] < 0:
        report.invariants["lower_range_convention"] = "M_0 = 0, d_0 read as 0"
    _invariant_extras(ctx, M, F, report)
    computed = parametric is not None or isinstance(cohomological, int)
    report.status = "success" if computed else "undecided"
    value = parametric if parametric is not None else cohomological
    report.message = f"I_F(M) = {value}" if computed else "no route produced I_F(M)"


def _invariant_extras(ctx: Context, M: QuotientModule, F: Filtration, report: AnalysisReport) -> None:
    checks: List[Callable[[], Dict[str, Any]]] = [
        lambda: {"check": "additivity over successive quotients", **check_additivity(M, F, ctx.search).as_dict()},
    ]
    if F.t == 1:
        checks.append(lambda: {"check": "two-step comparison", **two_step_check(M, F, ctx.search).as_dict()})
    D = ctx.dimension_filtration()
    if F == D:
        checks.append(lambda: {"check": "trivial filtration divergence", **divergence_profile(M, D, options=ctx.search).as_dict()})
    else:
        checks.append(lambda: {"check": "comparison with D", **compare_filtrations(M, F, D, ctx.search).as_dict()})
    for check in checks:
        try:
            report.verifications.append(check())
        except (SearchExhaustedError, NotSquarefreeError, ValueError) as exc:
            report.verifications.append({"check": "skipped", "reason": str(exc)})


def cmd_seq_gcm(ctx: Context, report: AnalysisReport) -> None:
    M = ctx.module
    verdict = is_seq_gcm(M, ctx.decompositions(), ctx.search, ctx.sop())
    report.verdicts = verdict.as_dict()
    report.seeds = verdict.search.seeds_tried if verdict.search else []
    report.invariants = {
        "parametric": verdict.invariant_parametric,
        "cohomological": verdict.invariant_cohomological,
        "agreement": verdict.agreement,
    }
    for name in ctx.require_session().filtrations_on(ctx.module_name):
        check = check_gcm_filtration(
            M, ctx.session.filtrations[name], ctx.decompositions(), ctx.search, verdict.witness_filtration
        )
        report.verifications.append({"check": f"{name} is a generalized Cohen-Macaulay filtration", **check.as_dict()})
    report.status = _status(verdict.is_seq_gcm)
    report.message = verdict.message


def cmd_seq_cm(ctx: Context, report: AnalysisReport) -> None:
    verdict = check_seq_cm(ctx.module, ctx.decompositions(), ctx.search, ctx.sop())
    report.verdicts = verdict.as_dict()
    report.invariants = {"I_D": verdict.invariant}
    report.status = _status(verdict.is_seq_cm)
    report.message = {
        "success": "sequentially Cohen-Macaulay",
        "negative": "not sequentially Cohen-Macaulay",
        "undecided": "undecided",
    }[report.status]


def cmd_hilbert_samuel(ctx: Context, report: AnalysisReport) -> None:
    M = ctx.module
    F = ctx.filtration()
    D = ctx.dimension_filtration()
    x = _sop_or_witness(ctx, F)
    bound = int(ctx.get("bound", ctx.config.dd_bound))
    record = hs_coefficients(M, x, dd_bound=bound, threads=ctx.config.threads, progress=ctx.config.progress)
    report.verdicts["hilbert_samuel"] = record.as_dict()
    verification = verify_hs_identities(M, F, x, record, base=ctx.config.base_point, threads=ctx.config.threads)
    report.verifications.extend(c.as_dict() for c in verification.checks)
    try:
        G = D if is_good_sop(M, D, x) else F
        invariance = I_n_invariance(M, F, x, G, x, upto=3, D=D)
        report.tables["I_n"] = invariance.rows
        report.verdicts["I_n_independent"] = invariance.all_equal
    except ValueError as exc:
        report.verifications.append({"check": "I_n closed form", "reason": str(exc)})
    failed = [c for c in verification.checks if c.passed is False]
    report.status = "success" if record.fit_exact and not failed else "negative"
    report.message = "coefficients e_0..e_d = " + str(report.verdicts["hilbert_samuel"]["coefficients"])


def _expect(report: AnalysisReport, check: str, expected: Any, actual: Any) -> None:
    report.verifications.append({"check": check, "expected": expected, "actual": actual, "passed": expected == actual})


def _grid_matches(M: QuotientModule, x: ParameterSystem, size: int, formula: Callable, threads: int) -> bool:
    values = length_grid(M, x, size, threads)
    return all(values[n] == formula(*n) for n in product(range(1, size + 1), repeat=len(x)))


def _verify_crossed_planes(ctx: Context, report: AnalysisReport, size: int) -> None:
    session = ctx.require_session()
    M, N = session.modules["M"], session.modules["N"]
    x, y = session.sops["x"], session.sops["y"]
    D = session.filtrations["D"]
    threads = ctx.config.threads
    _expect(report, "l(M/x(n)M) = 2n1n2n3 + n1n2 + 1", True,
            _grid_matches(M, x, size, lambda a, b, c: 2 * a * b * c + a * b + 1, threads))
    _expect(report, "l(N/x(n)N) = 2n1n2n3 + 2", True,
            _grid_matches(N, y, size, lambda a, b, c: 2 * a * b * c + 2, threads))
    witness = invariant_witness(M, D, ctx.search, x)
    _expect(report, "I_D(M), parametric", 1, witness.value_low)
    _expect(report, "I_D(M), cohomological", 1, int(invariant_I_F_cohomological(M, D)))
    additivity = check_additivity(M, D, ctx.search)
    _expect(report, "I_D(M) < I(D_1) + I(M/D_1)", [1, 2, False], [additivity.left, additivity.right, additivity.equal])
    record = hs_coefficients(M, x, dd_bound=None, threads=threads)
    _expect(report, "(e_0, e_1, e_2, e_3)", [2, 2, 0, 0], [int(c) for c in record.coefficients])
    report.invariants = {"parametric": witness.value_low, "cohomological": 1, "agreement": witness.value_low == 1}


def _verify_direct_sum(ctx: Context, report: AnalysisReport, size: int) -> None:
    session = ctx.require_session()
    M, s, D = session.modules["M"], session.sops["s"], session.filtrations["D"]
    _expect(report, "dims of D", [-1, 1, 3], list(D.dims))
    _expect(report, "s is a good sop", [], good_sop_violations(M, D, s))
    _expect(report, "s is a dd-sequence (bound 2)", None, dd_sequence_failure(M, s, 2))
    _expect(report, "D is generalized Cohen-Macaulay", False, check_gcm_filtration(M, D, D=D).verdict)


def _verify_flat_ifm(ctx: Context, report: AnalysisReport, size: int) -> None:
    session = ctx.require_session()
    M, s = session.modules["M"], session.sops["s"]
    F, D = session.filtrations["F"], session.filtrations["D"]
    threads = ctx.config.threads
    _expect(report, "l(M/(w^l,(x+y)^m,z^n)M) = lmn + lm", True,
            _grid_matches(M, s, size, lambda l, m, n: l * m * n + l * m, threads))
    grid = ifm_grid(M, F, s, size, threads=threads)
    _expect(report, "I_F,M vanishes on the grid", {0}, set(grid.values()))
    _expect(report, "F is generalized Cohen-Macaulay", False, check_gcm_filtration(M, F, D=D).verdict)
    verdict = is_seq_gcm(M, options=ctx.search, sop=s, D=D)
    _expect(report, "M is sequentially generalized Cohen-Macaulay", True, verdict.is_seq_gcm)
    _expect(report, "I_D(M)", 0, verdict.invariant_parametric)


EXAMPLE_CHECKS = {"4.7": _verify_crossed_planes, "5.5": _verify_direct_sum, "5.6": _verify_flat_ifm}


def cmd_verify_example(ctx: Context, report: AnalysisReport) -> None:
    example = example_id(ctx.get("example", "4.7"))
    ctx.session = load_example(example)
    report.session = ctx.session.source
    EXAMPLE_CHECKS[example](ctx, report, int(ctx.get("grid", 3)))
    passed = all(v["passed"] for v in report.verifications)
    report.status = "success" if passed else "negative"
    report.message = f"example {example}: " + ("all checks passed" if passed else "some checks failed")


def cmd_corpus(ctx: Context, report: AnalysisReport) -> None:
    count = int(ctx.get("count", 10))
    entries = generate_monomial_corpus(count, ctx.config.seed, progress=ctx.config.progress)
    out_dir = ctx.get("out_dir")
    paths = write_corpus(entries, out_dir) if out_dir else {}
    report.seeds = [ctx.config.seed]
    report.tables["corpus"] = [
        {
            "name": e.name,
            "ring": e.session.ring.label(),
            "module": e.session.module().format(),
            "dimension": e.session.module().dimension,
            "path": str(paths[e.name]) if e.name in paths else None,
        }
        for e in entries
    ]
    report.message = f"generated {count} instances" + (f" in {out_dir}" if out_dir else "")


def cmd_describe(ctx: Context, report: AnalysisReport) -> None:
    session = ctx.require_session()
    report.verdicts["session"] = session.describe()
    rows = []
    for name, M in session.modules.items():
        D = dimension_filtration(M, session.decompositions_for(name))
        row: Dict[str, Any] = {"module": name, "dimension": M.dimension, "dimension_filtration": list(D.dims)}
        if M.is_squarefree:
            complexes = []
            for I in M.components:
                if I.is_unit:
                    continue
                delta = stanley_reisner_complex(I)
                complexes.append(
                    {
                        "ideal": I.format(),
                        "facets": delta.format_facets(),
                        "reduced_homology": reduced_homology_ranks(delta, session.ring.field),
                    }
                )
            row["complexes"] = complexes
            row["local_cohomology"] = [_length(v) for v in module_local_cohomology_lengths(M, max(M.dimension, 0))]
        rows.append(row)
    report.tables["modules"] = rows
    report.message = f"{len(session.modules)} module(s), {len(session.filtrations)} filtration(s), {len(session.sops)} sop(s)"


HANDLERS: Dict[str, Callable[[Context, AnalysisReport], None]] = {
    "dimfilt": cmd_dimfilt,
    "good-sop": cmd_good_sop,
    "dd-check": cmd_dd_check,
    "ifm": cmd_ifm,
    "invariant": cmd_invariant,
    "seq-gcm": cmd_seq_gcm,
    "seq-cm": cmd_seq_cm,
    "hilbert-samuel": cmd_hilbert_samuel,
    "verify-paper-example": cmd_verify_example,
    "corpus": cmd_corpus,
    "describe": cmd_describe,
}

SESSIONLESS = ("verify-paper-example", "corpus")


def _apply_overrides(config: ToolkitConfig, options: Dict[str, Any]) -> ToolkitConfig:
    overrides = {key: int(options[key]) for key in ("seed", "budget", "threads") if options.get(key) is not None}
    return replace(config, **overrides)


def run_command(
    session: Optional[Session],
    command: str,
    options: Optional[Dict[str, Any]] = None,
    config: Optional[ToolkitConfig] = None,
) -> AnalysisReport:
    """Run one command; errors are reported, never raised"""
    options = dict(options or {})
    source = session.source if session is not None else None
    if command not in COMMANDS:
        return error_report(command, f"unknown command '{command}'; available: {', '.join(COMMANDS)}", source)
    config = _apply_overrides(config or get_config(), options)
    report = AnalysisReport(
        command=command,
        session=source,
        module=options.get("module"),
        options={k: v for k, v in sorted(options.items()) if v is not None},
    )
    ctx = Context(session, options, config)
    started = time.perf_counter()
    try:
        if session is None and command not in SESSIONLESS:
            raise SessionError(f"'{command}' needs a session file")
        HANDLERS[command](ctx, report)
    except Exception as e:
        report.status = "error"
        report.message = f"{type(e).__name__}: {str(e)}"
    if config.record_timing:
        report.timing = round(time.perf_counter() - started, 3)
    return report
