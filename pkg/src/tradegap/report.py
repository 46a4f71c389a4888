"""Table builders and renderers: replication, effect/share grids, gap audit.

Builders return a :class:`ResultTable` holding full-precision floats;
display rounding happens in the renderers only and never feeds back into
any computation.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import statistics
from dataclasses import dataclass

from .decomposition import (
    DecompositionScheme,
    GapDenominator,
    additive_log_share,
    backout_gap,
    geometric_share_of_gap,
)
from .effects import GrowthEffect, evaluate, finite_horizon_effect
from .elasticities import (
    ElasticityModel,
    ElasticityRegistry,
    Horizon,
    HorizonKind,
    seed_registry,
)
from .errors import ConfigurationError
from .scenarios import (
    ScenarioConfig,
    TradeShockScenario,
    build_scenarios,
    custom_scenario,
    default_scenario_config,
)

#: Openness change used for scenario C1 in the effect/share tables.  The
#: published grid is only consistent with a C1 change of ~0.174 unit shares
#: (0.554 baseline minus a 0.380 counterfactual 1972 share) rather than the
#: 0.1707 dollar ratio used by the replication table; back-solving every C1
#: column cell bounds the value to [0.1727, 0.1761].  The replication table
#: keeps the dollar-based ratio.
TABLE_C1_DELTA_LAMBDA = 0.174

#: Published share cells for the nine log-linear (model x scenario) grid
#: cells, as fractions.  These are calibration data for the gap back-out
#: audit: each cell implies gap = effect_log_points / share.
PUBLISHED_LOG_LINEAR_SHARES: dict[tuple[str, str], float] = {
    ("yanikkaya", "C1"): 0.066,
    ("yanikkaya", "C2"): 0.136,
    ("yanikkaya", "C3"): 0.165,
    ("sala_i_martin", "C1"): 0.166,
    ("sala_i_martin", "C2"): 0.344,
    ("sala_i_martin", "C3"): 0.417,
    ("frankel_romer", "C1"): 0.315,
    ("frankel_romer", "C2"): 0.653,
    ("frankel_romer", "C3"): 0.792,
}

_DISPLAY_NAMES = {
    "yanikkaya": "Yanikkaya (2003)",
    "raghutla": "Raghutla (2020)",
    "sala_i_martin": "Sala-i-Martin et al. (2004)",
    "frankel_romer": "Frankel and Romer (1999)",
    "alcala_ciccone": "Alcala and Ciccone (2004)",
    "feyrer": "Feyrer (2019)",
}


@dataclass(frozen=True)
class ResultTable:
    caption: str
    columns: tuple[str, ...]
    rows: tuple[tuple[object, ...], ...]
    footnotes: tuple[str, ...] = ()


@dataclass(frozen=True)
class RunConfig:
    """Everything a grid run needs; at least one model/scenario/scheme."""

    registry: ElasticityRegistry
    scenario_config: ScenarioConfig
    denominator: GapDenominator
    schemes: tuple[DecompositionScheme, ...] = (
        DecompositionScheme.ADDITIVE_LOG,
        DecompositionScheme.GEOMETRIC,
    )
    fmt: str = "md"
    rounding: int = 1
    years: int | None = None

    def __post_init__(self) -> None:
        if not self.registry.entries:
            raise ConfigurationError("empty selection: no models in registry")
        if not self.schemes:
            raise ConfigurationError("empty selection: no decomposition schemes")
        if self.fmt not in ("csv", "md"):
            raise ConfigurationError(f"unknown output format {self.fmt!r}")


# --------------------------------------------------------------------------
# row expansion
# --------------------------------------------------------------------------

def expand_rows(
    registry: ElasticityRegistry, years: int | None = None
) -> list[tuple[ElasticityModel, str, str]]:
    """One table row per (model, horizon), as (model, display, row label).

    A model whose default horizon is finite gets two rows — the compounded
    finite-horizon effect and the steady-state effect of its level form —
    with the horizon folded into the row label.  Steady-state models get
    one row labelled by the study alone.
    """
    rows: list[tuple[ElasticityModel, str, str]] = []
    for model in registry:
        display = _DISPLAY_NAMES.get(model.name, model.name)
        if model.horizon.kind is HorizonKind.FINITE:
            horizon = Horizon.finite(years or model.horizon.years or 1)
            rows.append(
                (
                    dataclasses.replace(model, horizon=horizon),
                    display,
                    f"{display}, {horizon.describe()}",
                )
            )
            rows.append(
                (
                    dataclasses.replace(model, horizon=Horizon.steady_state()),
                    display,
                    f"{display}, long-run",
                )
            )
        else:
            rows.append((model, display, display))
    return rows


def _coefficient_label(model: ElasticityModel) -> str:
    if model.horizon.kind is HorizonKind.FINITE:
        return f"{model.short_run_epsilon:.3f}/pp"
    return f"{model.form.level_coefficient():.2f}"


def _table_scenarios(
    config: ScenarioConfig,
    lambda_baseline: float | None,
    c1_delta_lambda: float | None,
) -> tuple[TradeShockScenario, ...]:
    lam0 = lambda_baseline if lambda_baseline is not None else config.lambda_baseline
    c1, c2, c3 = build_scenarios(config.inputs, lam0)
    if c1_delta_lambda is not None:
        c1 = custom_scenario(
            "C1", c1_delta_lambda, lam0, "calibrated 1972 openness-share change"
        )
    return (c1, c2, c3)


def _share_for_row(
    effect: GrowthEffect,
    scheme: DecompositionScheme,
    gap: GapDenominator,
    gap_1972: GapDenominator,
) -> float:
    """Share of the gap for one table row, honouring the first-row quirk.

    Finite-horizon rows end at the original comparison window, so they are
    measured geometrically against the 1972 gap (the convention of the
    study being replicated); steady-state rows run against the 2024 gap
    under the requested scheme.
    """
    if effect.horizon_used.kind is HorizonKind.FINITE:
        return geometric_share_of_gap(effect, gap_1972).theta
    if scheme is DecompositionScheme.ADDITIVE_LOG:
        return additive_log_share(effect, gap).theta
    return geometric_share_of_gap(effect, gap).theta


# --------------------------------------------------------------------------
# table builders
# --------------------------------------------------------------------------

def build_replication_table(
    config: ScenarioConfig | None = None,
    lambda_baseline: float | None = None,
    years: int = 12,
) -> ResultTable:
    """Re-derive the original study's growth effects from dollar magnitudes.

    Trade-ratio changes are reported at one decimal (percentage points) and
    the growth effects compound those one-decimal ratios, reproducing the
    original computation, which worked from the printed ratios.
    """
    config = config or default_scenario_config()
    scenarios = _table_scenarios(config, lambda_baseline, c1_delta_lambda=None)
    rows = []
    for scenario in scenarios:
        ratio_pp = round(scenario.delta_lambda_pp, 1)
        effect = finite_horizon_effect(
            1.0, 0.018, ratio_pp, years, model_name="yanikkaya", scenario_id=scenario.id
        )
        rows.append((scenario.id, ratio_pp, 100.0 * effect.relative_level))
    return ResultTable(
        caption=f"Replication: trade-ratio changes and {years}-year growth effects",
        columns=("scenario", "trade_ratio_change_pp", "growth_effect_pct"),
        rows=tuple(rows),
        footnotes=(
            "growth effects compound 0.018 growth points per percentage point "
            f"of openness for {years} year" + ("s" if years != 1 else ""),
            "ratios are percentage points of 1958 GDP; effects compound the "
            "one-decimal ratios as originally published",
            _inputs_footnote(config),
        ),
    )


def build_table2(
    registry: ElasticityRegistry | None = None,
    config: ScenarioConfig | None = None,
    gap: GapDenominator | None = None,
    lambda_baseline: float | None = None,
    years: int | None = None,
    c1_delta_lambda: float | None = TABLE_C1_DELTA_LAMBDA,
) -> ResultTable:
    """Effects and additive-log shares for every model x scenario."""
    return _build_effect_share_table(
        DecompositionScheme.ADDITIVE_LOG,
        "Embargo effects and share of underperformance (additive-log shares)",
        registry,
        config,
        gap,
        lambda_baseline,
        years,
        c1_delta_lambda,
    )


def build_table_a3(
    registry: ElasticityRegistry | None = None,
    config: ScenarioConfig | None = None,
    gap: GapDenominator | None = None,
    lambda_baseline: float | None = None,
    years: int | None = None,
    c1_delta_lambda: float | None = TABLE_C1_DELTA_LAMBDA,
) -> ResultTable:
    """Same grid with geometric shares throughout."""
    return _build_effect_share_table(
        DecompositionScheme.GEOMETRIC,
        "Embargo share of underperformance (geometric shares)",
        registry,
        config,
        gap,
        lambda_baseline,
        years,
        c1_delta_lambda,
        include_effects=False,
    )


def _build_effect_share_table(
    scheme: DecompositionScheme,
    caption: str,
    registry: ElasticityRegistry | None,
    config: ScenarioConfig | None,
    gap: GapDenominator | None,
    lambda_baseline: float | None,
    years: int | None,
    c1_delta_lambda: float | None,
    include_effects: bool = True,
) -> ResultTable:
    registry = registry or seed_registry()
    config = config or default_scenario_config()
    if gap is None:
        gap = GapDenominator.calibrated_2024()
    if gap.log_points <= 0:
        raise ConfigurationError(
            f"gap denominator must be positive, got {gap.log_points}"
        )
    gap_1972 = GapDenominator.gap_1972()
    scenarios = _table_scenarios(config, lambda_baseline, c1_delta_lambda)
    rows = []
    for model, _display, label in expand_rows(registry, years):
        effects = [evaluate(model, s) for s in scenarios]
        cells: list[object] = [label, _coefficient_label(model)]
        if include_effects:
            cells += [100.0 * e.relative_level for e in effects]
        cells += [100.0 * _share_for_row(e, scheme, gap, gap_1972) for e in effects]
        rows.append(tuple(cells))
    columns = ["model", "elasticity"]
    if include_effects:
        columns += [f"effect_{s.id}_pct" for s in scenarios]
    columns += [f"share_{s.id}_pct" for s in scenarios]
    lam0 = lambda_baseline if lambda_baseline is not None else config.lambda_baseline
    scheme_name = scheme.value.replace("_", "-")
    return ResultTable(
        caption=caption,
        columns=tuple(columns),
        rows=tuple(rows),
        footnotes=(
            f"shares: {scheme_name} decomposition against the {gap.describe()} "
            f"(synthetic = {1.0 + gap.relative_level:.2f}x historical)",
            "finite-horizon rows: geometric share of the 1972 gap "
            f"({gap_1972.relative_level:.4f} relative), the original study's convention",
            f"baseline openness {lam0:g}; scenario openness changes "
            + ", ".join(f"{s.id} = {s.delta_lambda:.4f}" for s in scenarios)
            + ("; C1 calibrated (see TABLE_C1_DELTA_LAMBDA)" if c1_delta_lambda else ""),
            _inputs_footnote(config),
        ),
    )


def build_grid(run: RunConfig) -> ResultTable:
    """Cartesian sensitivity grid: every model row x every scenario.

    Scheme shares appear side by side as columns; all rows are measured
    against the single denominator in the config.  Row order is registry
    order, then scenario id.
    """
    scenarios = _table_scenarios(run.scenario_config, None, TABLE_C1_DELTA_LAMBDA)
    scenarios += run.scenario_config.custom_scenarios
    if not scenarios:
        raise ConfigurationError("empty selection: no scenarios")
    rows = []
    for model, display, _label in expand_rows(run.registry, run.years):
        for scenario in scenarios:
            effect = evaluate(model, scenario)
            cells: list[object] = [
                display,
                effect.horizon_used.describe(),
                scenario.id,
                f"{scenario.delta_lambda:.6f}",
                100.0 * effect.relative_level,
            ]
            for scheme in run.schemes:
                if scheme is DecompositionScheme.ADDITIVE_LOG:
                    theta = additive_log_share(effect, run.denominator).theta
                else:
                    theta = geometric_share_of_gap(effect, run.denominator).theta
                cells.append(100.0 * theta)
            rows.append(tuple(cells))
    columns = ["model", "horizon", "scenario", "delta_lambda", "effect_pct"] + [
        f"theta_{s.value}_pct" for s in run.schemes
    ]
    return ResultTable(
        caption="Sensitivity grid: embargo effect and gap share per model and scenario",
        columns=tuple(columns),
        rows=tuple(rows),
        footnotes=(
            f"all shares measured against the {run.denominator.describe()}",
            f"baseline openness {run.scenario_config.lambda_baseline:g}",
            _inputs_footnote(run.scenario_config),
        ),
    )


def build_gap_audit(
    registry: ElasticityRegistry | None = None,
    config: ScenarioConfig | None = None,
    lambda_baseline: float | None = None,
) -> ResultTable:
    """Back out the gap each published log-linear share cell implies.

    The calibrated 2024 denominator is not printed anywhere; this table is
    the evidence for it.  Every published share of a log-linear model
    implies gap = effect_log_points / share; the audit lists all nine,
    their median, and the adopted default.
    """
    registry = registry or seed_registry()
    config = config or default_scenario_config()
    scenarios = _table_scenarios(config, lambda_baseline, TABLE_C1_DELTA_LAMBDA)
    by_id = {s.id: s for s in scenarios}
    rows = []
    implied: list[float] = []
    for (name, sid), share in PUBLISHED_LOG_LINEAR_SHARES.items():
        model = registry.get(name)
        # log-linear steady-state effect regardless of the model's default horizon
        model = dataclasses.replace(model, horizon=Horizon.steady_state())
        effect = evaluate(model, by_id[sid])
        gap = backout_gap(effect, share)
        implied.append(gap)
        rows.append(
            (
                _DISPLAY_NAMES.get(name, name),
                sid,
                effect.log_points,
                100.0 * share,
                gap,
            )
        )
    med = statistics.median(implied)
    return ResultTable(
        caption="Gap back-out audit: denominator implied by each published share cell",
        columns=("model", "scenario", "effect_log_points", "published_share_pct", "implied_gap"),
        rows=tuple(rows),
        footnotes=(
            f"implied gaps span [{min(implied):.6f}, {max(implied):.6f}] "
            f"log points; median {med:.6f}",
            f"adopted default: {GapDenominator.calibrated_2024().log_points} log points "
            f"(synthetic = {1.0 + GapDenominator.calibrated_2024().relative_level:.2f}x historical)",
        ),
    )


def _inputs_footnote(config: ScenarioConfig) -> str:
    i = config.inputs
    return (
        "inputs (1957 USD millions): trade gap vs synthetic "
        f"{i.trade_gap_vs_synthetic_1972:g}, US trade {i.trade_with_us_1958:g}, "
        f"synthetic export excess {i.synthetic_export_excess_1972:g}, "
        f"GDP {i.gdp_1958:g}"
    )


# --------------------------------------------------------------------------
# renderers — the only place display rounding happens
# --------------------------------------------------------------------------

def _format_cell(cell: object, decimals: int) -> str:
    if isinstance(cell, float):
        return f"{cell:.{decimals}f}"
    return str(cell)


def render_csv(table: ResultTable, decimals: int = 1) -> str:
    buf = io.StringIO()
    buf.write(f"# {table.caption}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_format_cell(c, decimals) for c in row])
    for note in table.footnotes:
        buf.write(f"# {note}\n")
    return buf.getvalue()


def render_markdown(table: ResultTable, decimals: int = 1) -> str:
    cells = [[_format_cell(c, decimals) for c in row] for row in table.rows]
    widths = [
        max(len(col), *(len(r[i]) for r in cells)) if cells else len(col)
        for i, col in enumerate(table.columns)
    ]
    def fmt_row(values: list[str]) -> str:
        return "| " + " | ".join(v.ljust(w) for v, w in zip(values, widths)) + " |"

    lines = [f"**{table.caption}**", ""]
    lines.append(fmt_row(list(table.columns)))
    lines.append("|" + "|".join("-" * (w + 2) for w in widths) + "|")
    lines.extend(fmt_row(r) for r in cells)
    lines.append("")
    lines.extend(f"- {note}" for note in table.footnotes)
    return "\n".join(lines) + "\n"


def render(table: ResultTable, fmt: str, decimals: int = 1) -> str:
    if fmt == "csv":
        return render_csv(table, decimals)
    if fmt == "md":
        return render_markdown(table, decimals)
    raise ConfigurationError(f"unknown output format {fmt!r}")
