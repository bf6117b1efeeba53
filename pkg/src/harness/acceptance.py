"""Executable acceptance suites.

Each suite runs its configurations, compares measured values with closed
forms or exact oracles, and records one CriterionResult per claim.
Oracle comparisons use the 99% interval of the estimate; analytic bounds
allow three standard errors of slack.
"""

import logging
import math
import time
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from src.analysis.bounds import (
    chernoff_reference,
    median_total_risk_bound,
    psi_bound_check,
    qs_total_risk_bound,
)
from src.analysis.estimators import estimate_many_rate, pooled_arrests
from src.analysis.gaussian import (
    kl_gauss,
    kl_gauss_numerical,
    pinsker_bound,
    tv_gauss,
    tv_gauss_numerical,
)
from src.analysis.intervals import wilson_interval
from src.analysis.oracles import (
    high_signal_probability,
    median_many_probability,
    qs_many_probability,
    qs_output_risk_oracle,
    si_many_probability,
)
from src.attacks.undercover import qs_break_demo
from src.consts import (
    DEFAULT_DEGREE,
    DEFAULT_N,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    HUGE_MESSAGE,
    QS_TOTAL_RISK_FACTOR,
    STANDARD_ERROR_SLACK,
)
from src.errors import InvalidParameterError
from src.graph.degree_stats import lower_median
from src.harness.network import build_network
from src.harness.runner import ExperimentRunner
from src.harness.sweep import render_csv, run_sweep, sweep_rows
from src.models.model_acceptance import AcceptanceReport, CriterionResult
from src.models.model_analysis import ChernoffBound, Estimate, RiskReport
from src.models.model_attack import AttackKind, AttackStrategy
from src.models.model_channel import CommMode
from src.models.model_config import (
    ExperimentConfig,
    PoliceSpec,
    PopulationSpec,
    ProtocolSpec,
    SweepSpec,
    TopologyKind,
    TopologySpec,
)
from src.models.model_police import PoliceKind
from src.models.model_population import Regime
from src.models.model_protocol import ProtocolKind, SelfImmolationParams
from src.protocols.base import mean_gaussian_advantage

logger = logging.getLogger(__name__)

SLACK = STANDARD_ERROR_SLACK
MIN_SUCCESS = 0.99
LARGE_DEGREE_N = 1001  # Complete graph, degree 1000
LARGE_DEGREE_TRIALS = 100
MEDIAN_ORACLE_DEGREE = 10**6
VANISHING_UNDERCOVER = 1e-4
EDGE_LIST_MIN_NODES = 10_000


@dataclass
class SuiteContext:
    """Shared settings of one acceptance run."""

    seed: int
    runner: ExperimentRunner
    trials: int | None = None
    topology: TopologySpec | None = None

    def trials_or(self, default: int) -> int:
        return self.trials if self.trials is not None else default


def _add(report: AcceptanceReport, name: str, passed: bool, expected: str, **measured: float) -> None:
    result = report.add(
        CriterionResult(
            name=name,
            passed=bool(passed),
            measured={k: float(v) for k, v in measured.items()},
            expected=expected,
        )
    )
    status = "PASS" if result.passed else "FAIL"
    logger.info(f"[{report.suite}] {status} {name}: {result.measured}")


def _covers(estimate: Estimate, value: float) -> bool:
    return estimate.lo <= value <= estimate.hi


def _agrees(measured: float, expected: float, std_error: float) -> bool:
    return abs(measured - expected) <= SLACK * std_error


def _desk_config(name: str, seed: int, trials: int, **overrides) -> ExperimentConfig:
    data = {
        "name": name,
        "topology": TopologySpec(kind=TopologyKind.RANDOM_REGULAR, n=DEFAULT_N, degree=DEFAULT_DEGREE),
        "mode": CommMode.PUBLIC,
        "protocol": ProtocolSpec(kind=ProtocolKind.QUORUM_SENSING, epsilon=0.2),
        "police": [PoliceSpec(kind=PoliceKind.NP_THRESHOLD)],
        "trials": trials,
        "seed": seed,
    }
    data.update(overrides)
    return ExperimentConfig(**data)


# === CLOSED-FORM SUITES ===


def _pinsker(ctx: SuiteContext, report: AcceptanceReport) -> None:
    grid = np.round(np.arange(1, 101) * 0.01, 2)
    tv = np.array([tv_gauss(e) for e in grid])
    pinsker = np.array([pinsker_bound(e) for e in grid])
    sqrt_kl = np.sqrt([kl_gauss(e) for e in grid])
    quadrature_error = max(abs(tv_gauss_numerical(e) - t) for e, t in zip(grid, tv, strict=True))
    _add(
        report,
        "tv_below_pinsker",
        bool(np.all(tv <= pinsker)) and bool(np.all(tv <= sqrt_kl)),
        "2 Phi(eps/2) - 1 <= eps/sqrt(2) = sqrt(KL) for eps in 0.01..1.00",
        min_margin=float(np.min(pinsker - tv)),
    )
    _add(
        report,
        "tv_closed_form_matches_quadrature",
        quadrature_error <= 1e-8,
        "|closed form - quadrature| <= 1e-8",
        max_error=quadrature_error,
    )


def _kl(ctx: SuiteContext, report: AcceptanceReport) -> None:
    errors = {e: abs(kl_gauss_numerical(e) - kl_gauss(e)) for e in (0.05, 0.1, 0.5, 1.0)}
    _add(
        report,
        "kl_matches_quadrature",
        max(errors.values()) <= 1e-6,
        "|quadrature - eps^2/2| <= 1e-6 for eps in {0.05, 0.1, 0.5, 1}",
        max_error=max(errors.values()),
    )


def _psi_bounds(ctx: SuiteContext, report: AcceptanceReport) -> None:
    checks = [psi_bound_check(round(0.04 + 0.002 * k, 3)) for k in range(81)]
    failing = [c.epsilon for c in checks if not (c.lower_ok and c.upper_ok)]
    _add(
        report,
        "psi_sandwich",
        not failing,
        "(1-2eps)/2 < polya-1/500 <= psi <= polya+1/500 < (1-2eps/3)/2 on [0.04, 0.2]",
        points=len(checks),
        failing=len(failing),
        min_upper_margin=min(c.linear_upper - c.approx_upper for c in checks),
    )


# === QUORUM-SENSING AND MEDIAN ===


def _qs_total_risk(ctx: SuiteContext, report: AcceptanceReport) -> None:
    eps, rho_many, rho_few = 0.2, 0.8, 0.2
    config = _desk_config("qs-desk", ctx.seed, ctx.trials_or(DEFAULT_TRIALS))
    result = ctx.runner.run_experiment(config)
    r = result.report

    _add(
        report,
        "success",
        r.success.value >= MIN_SUCCESS,
        f"success >= {MIN_SUCCESS}",
        success=r.success.value,
    )

    many_rate = estimate_many_rate(result.many)
    oracle_many = qs_many_probability(eps, rho_many, DEFAULT_DEGREE)
    _add(
        report,
        "many_rate_matches_oracle",
        _covers(many_rate, oracle_many),
        "exact binomial-Gaussian oracle inside the 99% interval",
        measured=many_rate.value,
        lo=many_rate.lo,
        hi=many_rate.hi,
        oracle=oracle_many,
    )

    oracle_few = qs_many_probability(eps, rho_few, DEFAULT_DEGREE)
    _add(
        report,
        "output_risk_matches_oracle",
        _covers(r.output_risk, oracle_few),
        "exact binomial-Gaussian oracle inside the 99% interval",
        measured=r.output_risk.value,
        lo=r.output_risk.lo,
        hi=r.output_risk.hi,
        oracle=oracle_few,
    )

    measured_total = r.output_risk.value + tv_gauss(eps)
    oracle_total = oracle_few + r.message_risk_analytic
    _add(
        report,
        "total_risk_matches_oracle",
        _agrees(measured_total, oracle_total, r.output_risk.std_error),
        "output risk + 2 Phi(eps/2) - 1 within 3 SE of oracle output risk + analytic message risk",
        total_risk=measured_total,
        oracle_total=oracle_total,
        std_error=r.output_risk.std_error,
        proven_bound=qs_total_risk_bound(eps, DEFAULT_DEGREE),
    )

    empirical = r.message_risk_empirical[Regime.FEW][PoliceKind.NP_THRESHOLD.value]
    _add(
        report,
        "threshold_police_attains_tv",
        abs(empirical.value - r.message_risk_analytic) <= SLACK * empirical.std_error,
        "empirical threshold-police risk within 3 SE of 2 Phi(eps/2) - 1",
        empirical=empirical.value,
        analytic=r.message_risk_analytic,
    )

    large = config.model_copy(
        update={
            "name": "qs-large-degree",
            "topology": TopologySpec(kind=TopologyKind.COMPLETE, n=LARGE_DEGREE_N, degree=None),
            "trials": ctx.trials_or(300),
        }
    )
    large_report = ctx.runner.run_experiment(large, regimes=(Regime.FEW,)).report
    target = QS_TOTAL_RISK_FACTOR * eps
    _add(
        report,
        "total_risk_below_0715_eps_at_large_degree",
        large_report.total_risk <= target + SLACK * large_report.output_risk.std_error,
        f"degree {LARGE_DEGREE_N - 1}: total risk <= 0.715 eps + 3 SE",
        total_risk=large_report.total_risk,
        target=target,
        desk_total_risk=r.total_risk,
    )


def _median_robustness(ctx: SuiteContext, report: AcceptanceReport) -> None:
    trials = ctx.trials_or(DEFAULT_TRIALS)
    attack = AttackStrategy(kind=AttackKind.HUGE_POSITIVE)
    for eps in (0.04, 0.12, 0.2):
        for u in (0.0, 0.01):
            label = f"eps={eps:g},u={u:g}"
            config = _desk_config(
                f"median-{label}",
                ctx.seed,
                trials,
                protocol=ProtocolSpec(kind=ProtocolKind.MEDIAN, epsilon=eps),
                population=PopulationSpec(undercover_prob=u, attack=attack),
            )
            result = ctx.runner.run_experiment(config)
            r = result.report
            _add(
                report,
                f"{label}: success",
                r.success.value >= MIN_SUCCESS,
                f"success >= {MIN_SUCCESS}",
                success=r.success.value,
            )

            for regime, rho, rate in (
                (Regime.MANY, 0.8, estimate_many_rate(result.many)),
                (Regime.FEW, 0.2, r.output_risk),
            ):
                oracle = _median_oracle(eps, DEFAULT_DEGREE, rho, u)
                _add(
                    report,
                    f"{label}: {regime.value} rate matches oracle",
                    _covers(rate, oracle),
                    "exact binomial oracle inside the 99% interval",
                    measured=rate.value,
                    lo=rate.lo,
                    hi=rate.hi,
                    oracle=oracle,
                )

            _median_total_check(report, label, eps, u, DEFAULT_DEGREE, r)

            large = config.model_copy(
                update={
                    "name": f"median-large-{label}",
                    "topology": TopologySpec(kind=TopologyKind.COMPLETE, n=LARGE_DEGREE_N, degree=None),
                    "trials": ctx.trials_or(LARGE_DEGREE_TRIALS),
                }
            )
            large_report = ctx.runner.run_experiment(large, regimes=(Regime.FEW,)).report
            large_label = f"{label},degree={LARGE_DEGREE_N - 1}"
            _median_total_check(report, large_label, eps, u, LARGE_DEGREE_N - 1, large_report)

        target = QS_TOTAL_RISK_FACTOR * eps
        for u in (0.0, VANISHING_UNDERCOVER):
            oracle_total = _median_oracle(eps, MEDIAN_ORACLE_DEGREE, 0.2, u) + tv_gauss(eps)
            _add(
                report,
                f"eps={eps:g},u={u:g}: oracle total risk below 0.715 eps at large degree",
                oracle_total <= target,
                f"exact binomial oracle at degree {MEDIAN_ORACLE_DEGREE}, huge undercover messages: "
                "total risk <= 0.715 eps",
                total_risk=oracle_total,
                target=target,
            )


def _median_oracle(epsilon: float, degree: int, rho: float, undercover_prob: float) -> float:
    p_high = high_signal_probability(epsilon, rho, undercover_prob, HUGE_MESSAGE)
    return median_many_probability(epsilon, degree, p_high)


def _median_total_check(
    report: AcceptanceReport, label: str, eps: float, u: float, degree: int, r: RiskReport
) -> None:
    measured_total = r.output_risk.value + tv_gauss(eps)
    oracle_total = _median_oracle(eps, degree, 0.2, u) + r.message_risk_analytic
    _add(
        report,
        f"{label}: total risk matches oracle",
        _agrees(measured_total, oracle_total, r.output_risk.std_error),
        "output risk + 2 Phi(eps/2) - 1 within 3 SE of oracle output risk + analytic message risk",
        total_risk=measured_total,
        oracle_total=oracle_total,
        std_error=r.output_risk.std_error,
        proven_bound=median_total_risk_bound(eps, degree),
    )


def _fragility(ctx: SuiteContext, report: AcceptanceReport) -> None:
    demo = qs_break_demo(n=1000, epsilon=0.2, rho=0.2, trials=ctx.trials_or(DEFAULT_TRIALS), seed=ctx.seed)
    _add(
        report,
        "qs_broken_by_one_undercover",
        demo.qs_output_risk.value >= MIN_SUCCESS,
        f"QS output risk >= {MIN_SUCCESS}",
        qs_output_risk=demo.qs_output_risk.value,
    )
    lo = min(demo.median_oracle_clean, demo.median_oracle_attacked)
    hi = max(demo.median_oracle_clean, demo.median_oracle_attacked)
    risk = demo.median_output_risk
    _add(
        report,
        "median_within_one_count_of_oracle",
        risk.lo <= hi and risk.hi >= lo,
        "Median interval meets [clean oracle, oracle with one forced high count]",
        median_output_risk=risk.value,
        lo=risk.lo,
        hi=risk.hi,
        oracle_clean=demo.median_oracle_clean,
        oracle_attacked=demo.median_oracle_attacked,
    )
    clean = qs_break_demo(n=200, epsilon=0.2, rho=0.2, trials=20, seed=ctx.seed, undercover_count=0)
    _add(
        report,
        "no_undercover_no_corruption",
        not clean.corrupted,
        "zero undercover agents report no corruption",
        undercover=clean.undercover_count,
    )


# === PRIVATE COMMUNICATION ===


def _impossibility(ctx: SuiteContext, report: AcceptanceReport) -> None:
    trials = ctx.trials_or(DEFAULT_TRIALS)
    reverse = PoliceKind.REVERSE.value
    base = _desk_config(
        "impossibility", ctx.seed, trials, mode=CommMode.PRIVATE, police=[PoliceSpec(kind=PoliceKind.REVERSE)]
    )
    network = build_network(base.topology, base.seed)
    p = ctx.runner.run_experiment(base, network, regimes=(Regime.MANY,)).report.success.value

    all_rebels = base.model_copy(update={"population": PopulationSpec(many_rho=1.0)})
    saturated = ctx.runner.run_experiment(all_rebels, network, regimes=(Regime.MANY,))
    pooled = pooled_arrests(saturated.many, reverse)
    rebel_rate = pooled.rebel_arrests / pooled.rebels
    _add(
        report,
        "rebel_arrest_rate_at_least_quarter_success",
        rebel_rate >= p / 4,
        "rho = 1: reverse-police rebel arrest rate >= p/4",
        rebel_arrest_rate=rebel_rate,
        success=p,
    )

    planted = base.model_copy(update={"population": PopulationSpec(few_rho=0.0, planted_rebels=1)})
    few = ctx.runner.run_experiment(planted, network, regimes=(Regime.FEW,)).report
    output = few.output_risk
    message = few.message_risk_empirical[Regime.FEW][reverse]
    inv_n = 1 / network.n
    obedient_rate = message.obedient_rate.value
    _add(
        report,
        "obedient_arrest_rate_below_output_risk",
        obedient_rate <= output.value + inv_n + SLACK * output.std_error,
        "one planted rebel: obedient arrest rate <= output risk + 1/n + 3 SE",
        obedient_arrest_rate=obedient_rate,
        output_risk=output.value,
    )
    total = output.value + message.value
    se = math.hypot(output.std_error, message.std_error)
    _add(
        report,
        "total_risk_at_least_quarter_success",
        total + SLACK * se >= p / 4 - inv_n,
        "one planted rebel: output risk + message risk >= p/4 - 1/n (3 SE slack)",
        total_risk=total,
        target=p / 4 - inv_n,
    )


def _risk_gap_topology(ctx: SuiteContext) -> TopologySpec:
    if ctx.topology is not None:
        return ctx.topology
    return TopologySpec(kind=TopologyKind.RANDOM_REGULAR, n=DEFAULT_N, degree=DEFAULT_DEGREE)


def _risk_gap(ctx: SuiteContext, report: AcceptanceReport) -> None:
    """Private against public total risk of Quorum-Sensing over an epsilon grid.

    Runs on the configured edge-list sample, else on the desk regular graph.
    The doubling claim is asserted where the exact closed forms predict it; on
    a regular graph they do not at the low end of the grid, where every agent
    passes the degree gate and the public output risk dominates.
    """
    trials = ctx.trials_or(100)
    topology = _risk_gap_topology(ctx)
    public = _desk_config("risk-gap-public", ctx.seed, trials, topology=topology)
    private = public.model_copy(update={"name": "risk-gap-private", "mode": CommMode.PRIVATE})
    network = build_network(topology, ctx.seed)
    if topology.kind == TopologyKind.EDGE_LIST and network.n < EDGE_LIST_MIN_NODES:
        logger.warning(
            f"[{report.suite}] edge-list sample has {network.n} < {EDGE_LIST_MIN_NODES} nodes"
        )
    degrees = network.degrees
    median = lower_median(degrees)
    threshold = PoliceKind.NP_THRESHOLD.value

    checked = 0
    outside_claim = 0
    for k in range(24):
        eps = round(0.07 + 0.01 * k, 2)
        pub = ctx.runner.run_experiment(public.with_parameter("epsilon", eps), network).report
        if pub.success.value < 0.9:
            logger.info(f"[{report.suite}] eps={eps}: public success {pub.success.value:.3f} < 0.9, skipped")
            continue
        checked += 1
        private_config = private.with_parameter("epsilon", eps)
        priv = ctx.runner.run_experiment(private_config, network, regimes=(Regime.FEW,)).report
        message = priv.message_risk_empirical[Regime.FEW][threshold]
        private_total = priv.output_risk.value + message.value
        se = math.hypot(priv.output_risk.std_error, message.std_error)

        predicted_output = qs_output_risk_oracle(eps, 0.2, degrees, median)
        predicted_private = predicted_output + mean_gaussian_advantage(eps, degrees)
        predicted_public = predicted_output + tv_gauss(eps)
        _add(
            report,
            f"eps={eps:g}: private total risk matches closed form",
            _agrees(private_total, predicted_private, se),
            "private total (threshold police) within 3 SE of oracle output risk + mean TV over degrees",
            private_total=private_total,
            predicted=predicted_private,
            std_error=se,
        )
        if predicted_private <= 2 * predicted_public:
            outside_claim += 1
            logger.info(
                f"[{report.suite}] eps={eps}: closed forms give private {predicted_private:.3f} "
                f"<= 2 x public {predicted_public:.3f}, doubling not asserted"
            )
            continue
        _add(
            report,
            f"eps={eps:g}: private total risk exceeds twice public",
            private_total + SLACK * se > 2 * pub.total_risk,
            "private total risk (threshold police) + 3 SE > 2 x public analytic total risk",
            private_total=private_total,
            public_total=pub.total_risk,
            public_success=pub.success.value,
        )
    _add(
        report,
        "doubling_checked_somewhere",
        checked > outside_claim,
        "public success >= 0.9 and a predicted doubling on some grid point",
        checked=checked,
        outside_claim=outside_claim,
        nodes=network.n,
    )


def _self_immolation(ctx: SuiteContext, report: AcceptanceReport) -> None:
    n, degree, c = 10_000, 500, 8.0
    config = _desk_config(
        "self-immolation",
        ctx.seed,
        ctx.trials_or(200),
        topology=TopologySpec(kind=TopologyKind.RANDOM_REGULAR, n=n, degree=degree),
        mode=CommMode.PRIVATE,
        protocol=ProtocolSpec(kind=ProtocolKind.SELF_IMMOLATION, epsilon=None, c=c),
        police=[],
    )
    result = ctx.runner.run_experiment(config)
    r = result.report
    params = SelfImmolationParams.from_network(n, degree, c)

    _add(
        report,
        "success",
        r.success.value >= MIN_SUCCESS,
        f"success >= {MIN_SUCCESS}",
        success=r.success.value,
    )
    rates = ((Regime.MANY, 0.8, estimate_many_rate(result.many)), (Regime.FEW, 0.2, r.output_risk))
    for regime, rho, rate in rates:
        oracle = si_many_probability(params.q, params.tau, degree, degree, rho)
        _add(
            report,
            f"{regime.value}_rate_matches_oracle",
            _covers(rate, oracle),
            "exact binomial-tail oracle inside the 99% interval",
            measured=rate.value,
            lo=rate.lo,
            hi=rate.hi,
            oracle=oracle,
        )

    bound = chernoff_reference(ChernoffBound.SI_OUTPUT_RISK, q=params.q, degree=degree)
    _add(
        report,
        "output_risk_below_chernoff",
        r.output_risk.value <= bound + SLACK * r.output_risk.std_error,
        "output risk <= exp(-3 q Delta / 20) + 3 SE",
        output_risk=r.output_risk.value,
        bound=bound,
    )

    records = result.many + result.few
    emitters = sum(t.huge_emitters for t in records)
    rebels = sum(t.rebel_count for t in records)
    lo, hi = wilson_interval(emitters, rebels)
    _add(
        report,
        "huge_emitter_fraction_matches_q",
        lo <= params.q <= hi,
        "q = c ln n / Delta inside the 99% interval of the emitter fraction",
        fraction=emitters / rebels,
        q=params.q,
        tau=params.tau,
    )


# === HARNESS ===


def _determinism(ctx: SuiteContext, report: AcceptanceReport) -> None:
    config = _desk_config(
        "determinism",
        ctx.seed,
        ctx.trials_or(60),
        topology=TopologySpec(kind=TopologyKind.RANDOM_REGULAR, n=300, degree=20),
        police=[PoliceSpec(kind=PoliceKind.NP_THRESHOLD), PoliceSpec(kind=PoliceKind.REVERSE)],
        sweep=SweepSpec(parameter="epsilon", grid=[0.1, 0.2, 0.3]),
    )
    first = render_csv(sweep_rows(run_sweep(config, ExperimentRunner(1))))
    again = render_csv(sweep_rows(run_sweep(config, ExperimentRunner(1))))
    threaded = render_csv(sweep_rows(run_sweep(config, ExperimentRunner(4))))
    _add(report, "rerun_byte_identical", first == again, "same seed, same CSV bytes", bytes=len(first))
    _add(
        report,
        "threads_byte_identical",
        first == threaded,
        "4 threads give the CSV of 1 thread",
        bytes=len(threaded),
    )


SUITES: dict[str, Callable[[SuiteContext, AcceptanceReport], None]] = {
    "pinsker": _pinsker,
    "kl": _kl,
    "theorem1": _qs_total_risk,
    "theorem2": _median_robustness,
    "fragility": _fragility,
    "impossibility": _impossibility,
    "risk_gap": _risk_gap,
    "theorem4": _self_immolation,
    "determinism": _determinism,
    "psi_bounds": _psi_bounds,
}


def run_acceptance(
    suite: str,
    seed: int = DEFAULT_SEED,
    threads: int = 1,
    trials: int | None = None,
    topology: TopologySpec | None = None,
) -> AcceptanceReport:
    """Run one suite (or "all") and return its pass/fail report.

    Args:
        suite: Suite name, or "all" for every suite in order
        seed: Master seed
        threads: Worker threads for trial execution
        trials: Override of every suite's trial count
        topology: Network for the risk-gap suite, typically an edge-list sample

    Raises:
        InvalidParameterError: If the suite is unknown
    """
    if suite != "all" and suite not in SUITES:
        raise InvalidParameterError(f"Unknown suite {suite!r}; choose from {', '.join([*SUITES, 'all'])}")

    ctx = SuiteContext(seed=seed, runner=ExperimentRunner(threads), trials=trials, topology=topology)
    report = AcceptanceReport(suite=suite, seed=seed)
    start = time.time()
    names = list(SUITES) if suite == "all" else [suite]
    for name in names:
        if suite == "all":
            part = AcceptanceReport(suite=name, seed=seed)
            SUITES[name](ctx, part)
            for criterion in part.criteria:
                report.add(criterion.model_copy(update={"name": f"{name}.{criterion.name}"}))
        else:
            SUITES[name](ctx, report)
    report.duration_seconds = time.time() - start
    logger.info(f"Suite {suite} {'passed' if report.passed else 'failed'} in {report.duration_seconds:.1f}s")
    return report
