"""Income effects of a trade shock under a chosen elasticity and horizon.

Every effect is carried in two equivalent encodings at once — a log-point
change and a relative level change, tied together by
``relative_level = exp(log_points) - 1`` — because the decomposition
schemes downstream consume different encodings (additive-log wants
log-points, the geometric scheme wants relative levels).

Three evaluation paths:

* finite horizon: a growth-rate boost of ``epsilon * delta_lambda_pp``
  (epsilon in growth points per percentage point) compounded for ``years``,
  so ``relative_level = (1 + epsilon*dl_pp/100)**years - 1``;
* steady-state log-linear: ``log_points = s * delta_lambda`` (unit share);
* steady-state log-log: ``log_points = e * ln(lambda0 / lambda_cf)`` — the
  income gain from restoring openness from the post-shock share back to
  baseline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .elasticities import ElasticityModel, FormKind, Horizon, HorizonKind
from .errors import ConfigurationError, DataValidationError
from .scenarios import TradeShockScenario


@dataclass(frozen=True)
class GrowthEffect:
    """A shock's income effect in log points and as a relative level change."""

    log_points: float
    relative_level: float
    model_name: str
    scenario_id: str
    horizon_used: Horizon

    def __post_init__(self) -> None:
        # the two encodings must agree to within 1e-12 at all times
        if not math.isclose(
            self.relative_level, math.expm1(self.log_points), rel_tol=1e-12, abs_tol=1e-15
        ):
            raise DataValidationError(
                f"inconsistent effect encodings: log_points={self.log_points!r} "
                f"but relative_level={self.relative_level!r}"
            )

    @classmethod
    def from_log_points(
        cls, log_points: float, model_name: str, scenario_id: str, horizon: Horizon
    ) -> "GrowthEffect":
        return cls(log_points, math.expm1(log_points), model_name, scenario_id, horizon)

    def absolute_change(self, y0: float) -> float:
        """Income change in the units of ``y0`` (the baseline level)."""
        return y0 * self.relative_level


def finite_horizon_effect(
    y0: float,
    epsilon: float,
    delta_lambda_pp: float,
    years: int,
    model_name: str = "custom",
    scenario_id: str = "custom",
) -> GrowthEffect:
    """Compound an ``epsilon * delta_lambda_pp`` growth boost for ``years``.

    Parameters
    ----------
    y0:
        Baseline income level.  Carried so that absolute changes can be
        reported (``effect.absolute_change(y0)``); the relative and
        log-point outputs do not depend on it.
    epsilon:
        Growth points per *percentage point* of openness.
    delta_lambda_pp:
        Openness change in percentage points.
    years:
        Number of compounding periods, >= 1.

    With ``years=1`` the relative level change equals
    ``epsilon * delta_lambda_pp / 100`` exactly (no compounding noise).
    """
    if years < 1:
        raise DataValidationError(f"years must be >= 1, got {years}")
    annual = epsilon * delta_lambda_pp / 100.0
    if annual <= -1.0:
        raise DataValidationError(
            f"degenerate compounding: growth factor {1.0 + annual} is non-positive"
        )
    horizon = Horizon.finite(years)
    if years == 1:
        return GrowthEffect(math.log1p(annual), annual, model_name, scenario_id, horizon)
    log_points = years * math.log1p(annual)
    return GrowthEffect.from_log_points(log_points, model_name, scenario_id, horizon)


def steady_state_effect_loglinear(
    semi_elasticity: float,
    scenario: TradeShockScenario,
    model_name: str = "custom",
) -> GrowthEffect:
    """Steady-state effect of a log-linear level form: ``s * delta_lambda``."""
    log_points = semi_elasticity * scenario.delta_lambda
    return GrowthEffect.from_log_points(
        log_points, model_name, scenario.id, Horizon.steady_state()
    )


def steady_state_effect_loglog(
    elasticity: float,
    scenario: TradeShockScenario,
    model_name: str = "custom",
) -> GrowthEffect:
    """Steady-state effect of a log-log form: ``e * ln(lambda0/lambda_cf)``."""
    if scenario.lambda_counterfactual <= 0:
        raise DataValidationError(
            f"{scenario.id}: log-log form undefined at non-positive counterfactual openness"
        )
    log_points = elasticity * math.log(
        scenario.lambda_baseline / scenario.lambda_counterfactual
    )
    return GrowthEffect.from_log_points(
        log_points, model_name, scenario.id, Horizon.steady_state()
    )


def evaluate(
    model: ElasticityModel, scenario: TradeShockScenario, y0: float = 1.0
) -> GrowthEffect:
    """Dispatch a (model, scenario) pair to the right evaluation path.

    This is the single place where the percentage-point convention of
    ``short_run_epsilon`` meets the unit-share convention of the level
    forms: finite horizons receive ``scenario.delta_lambda_pp``, level
    forms receive ``scenario.delta_lambda``.
    """
    if model.horizon.kind is HorizonKind.FINITE:
        if model.short_run_epsilon is None:
            raise ConfigurationError(
                f"model {model.name!r}: finite horizon requested but no short_run_epsilon"
            )
        return finite_horizon_effect(
            y0,
            model.short_run_epsilon,
            scenario.delta_lambda_pp,
            model.horizon.years or 1,
            model_name=model.name,
            scenario_id=scenario.id,
        )
    if model.form.kind is FormKind.LOG_LOG_LEVEL:
        return steady_state_effect_loglog(
            model.form.level_coefficient(), scenario, model_name=model.name
        )
    # log-linear directly, or the steady-state limit of a growth form
    return steady_state_effect_loglinear(
        model.form.level_coefficient(), scenario, model_name=model.name
    )
