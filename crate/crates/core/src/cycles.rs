//! Carnot and Otto-like cycle construction, evaluation, and bound checks.
//!
//! A Carnot cycle runs isotherm (1-2 at `t_high`), isoentrope (2-3),
//! isotherm (3-4 at `t_low`), isoentrope (4-1). Its free inputs are the two
//! temperatures and the extreme gaps `gap_high = gap_1`, `gap_low = gap_3`;
//! the interior corner gaps are always derived (`gap_2 = gap_low *
//! t_high/t_low`, `gap_4 = gap_high * t_low/t_high`), which makes infeasible
//! corner combinations unrepresentable.
//!
//! An Otto-like cycle replaces the isotherms by constant-gap legs at
//! `gap_p_high` and `gap_p_low`, traded against baths; its interior corner
//! temperatures `t_1' = t_low * gap_p_high/gap_p_low` and `t_3' = t_high *
//! gap_p_low/gap_p_high` are likewise derived.
//!
//! Both net-work to high-temperature-heat ratios come with strict lower and
//! upper bounds, checked here; the inscribed Otto cycle of a Carnot cycle
//! shares its corners 2 and 4.

use crate::equilibrium::{Constants, EnergyGap, EquilibriumState, Temperature};
use crate::error::{Error, Result};
use crate::processes::{isoentrope_leg, isogap_leg, isotherm_leg, Bath, LegResult};

/// Relative tolerance below which two derived corner gaps count as equal
/// (degenerate inscription).
const GAP_COINCIDENCE_RTOL: f64 = 1e-12;

/// How an evaluated cycle was run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleMode {
    /// Forward heat engine; `coefficient` is `w_net / q_in_high`.
    Engine,
    /// Reversed, extracting heat from the cold side; `coefficient` is the
    /// COP `q_low / w_in`.
    Refrigeration,
    /// Reversed, delivering heat to the hot side; `coefficient` is the COP
    /// `q_high / w_in`.
    HeatPump,
}

/// Per-cycle ledger: the four leg results plus derived totals.
#[derive(Debug, Clone)]
pub struct CycleReport {
    pub mode: CycleMode,
    /// Legs in traversal order, matching `leg_names`.
    pub legs: [LegResult; 4],
    pub leg_names: [&'static str; 4],
    /// Heat exchanged with the high-temperature side, positive into the
    /// system (negative when the cycle is reversed).
    pub q_in_high: f64,
    /// Heat exchanged with the low-temperature side, positive out of the
    /// system (negative when the cycle is reversed).
    pub q_out_low: f64,
    /// Net work out, `sum of w_out` (negative when reversed).
    pub w_net: f64,
    /// Ledger-derived figure of merit for `mode`.
    pub coefficient: f64,
    /// The same figure of merit as an exact rational expression of the
    /// inputs, when one is defined.
    pub coefficient_exact: Option<f64>,
    /// Total entropy generated over the cycle, J/K.
    pub s_gen_total: f64,
    /// Sum of the four energy changes; zero for a closed cycle.
    pub closure_energy: f64,
    /// Sum of the four entropy changes; zero for a closed cycle.
    pub closure_entropy: f64,
}

impl CycleReport {
    fn totals(mode: CycleMode, legs: [LegResult; 4], names: [&'static str; 4]) -> Self {
        let w_net = legs.iter().map(|l| l.w_out).sum();
        let s_gen_total = legs.iter().map(|l| l.s_gen).sum();
        let closure_energy = legs.iter().map(|l| l.d_energy).sum();
        let closure_entropy = legs.iter().map(|l| l.d_entropy).sum();
        CycleReport {
            mode,
            legs,
            leg_names: names,
            q_in_high: 0.0,
            q_out_low: 0.0,
            w_net,
            coefficient: 0.0,
            coefficient_exact: None,
            s_gen_total,
            closure_energy,
            closure_entropy,
        }
    }

    /// Largest leg energy magnitude, the scale for closure residuals.
    pub fn energy_scale(&self) -> f64 {
        self.legs
            .iter()
            .map(|l| l.d_energy.abs())
            .fold(0.0, f64::max)
    }

    /// Largest leg entropy magnitude.
    pub fn entropy_scale(&self) -> f64 {
        self.legs
            .iter()
            .map(|l| l.d_entropy.abs())
            .fold(0.0, f64::max)
    }
}

/// Strict lower/upper bounds around a net-work to high-temperature-heat
/// ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsReport {
    pub lower: f64,
    pub value: f64,
    pub upper: f64,
}

impl BoundsReport {
    pub fn is_strictly_ordered(&self) -> bool {
        self.lower < self.value && self.value < self.upper
    }
}

// --- Carnot ----------------------------------------------------------------

/// Free inputs of a Carnot cycle: both bath temperatures (positive,
/// `t_low < t_high`) and the extreme gaps. Feasibility requires
/// `gap_low < gap_high * (t_low / t_high)` strictly, so that the hot
/// isotherm raises the entropy.
#[derive(Debug, Clone, Copy)]
pub struct CarnotSpec {
    t_high: Temperature,
    t_low: Temperature,
    gap_high: EnergyGap,
    gap_low: EnergyGap,
}

impl CarnotSpec {
    pub fn new(
        t_high: Temperature,
        t_low: Temperature,
        gap_high: EnergyGap,
        gap_low: EnergyGap,
    ) -> Result<Self> {
        if !t_low.is_positive() {
            return Err(Error::NonPositiveTemperature(t_low.kelvin()));
        }
        if !(t_high.is_positive() && t_low.kelvin() < t_high.kelvin()) {
            return Err(Error::NonPositiveTemperature(t_high.kelvin()));
        }
        let limit = gap_high.joules() * (t_low.kelvin() / t_high.kelvin());
        if !(gap_low.joules() < limit) {
            return Err(Error::InfeasibleCarnot {
                gap_low: gap_low.joules(),
                limit,
            });
        }
        Ok(Self {
            t_high,
            t_low,
            gap_high,
            gap_low,
        })
    }

    pub fn t_high(&self) -> Temperature {
        self.t_high
    }

    pub fn t_low(&self) -> Temperature {
        self.t_low
    }

    pub fn gap_high(&self) -> EnergyGap {
        self.gap_high
    }

    pub fn gap_low(&self) -> EnergyGap {
        self.gap_low
    }

    pub fn temperature_ratio(&self) -> f64 {
        self.t_low.kelvin() / self.t_high.kelvin()
    }

    pub fn gap_ratio(&self) -> f64 {
        self.gap_low.joules() / self.gap_high.joules()
    }

    /// Builds the four corner states.
    pub fn build(&self, constants: &Constants) -> Result<CarnotCycle> {
        let t_ratio = self.temperature_ratio();
        let gap_2 = self.gap_low.scaled(1.0 / t_ratio)?;
        let gap_4 = self.gap_high.scaled(t_ratio)?;
        let corners = [
            EquilibriumState::new(self.t_high, self.gap_high, constants)?,
            EquilibriumState::new(self.t_high, gap_2, constants)?,
            EquilibriumState::new(self.t_low, self.gap_low, constants)?,
            EquilibriumState::new(self.t_low, gap_4, constants)?,
        ];
        Ok(CarnotCycle {
            spec: *self,
            corners,
        })
    }
}

/// The special Carnot spec with `gap_low = gap_high * (t_low/t_high)^2`,
/// which makes the two derived corner gaps coincide so the cycle visits only
/// three distinct gap values.
pub fn three_gap_carnot(
    t_high: Temperature,
    t_low: Temperature,
    gap_high: EnergyGap,
) -> Result<CarnotSpec> {
    let r = t_low.kelvin() / t_high.kelvin();
    let gap_low = gap_high.scaled(r * r)?;
    CarnotSpec::new(t_high, t_low, gap_high, gap_low)
}

/// A built Carnot cycle: corner 1 `(t_high, gap_high)`, 2 `(t_high,
/// gap_2)`, 3 `(t_low, gap_low)`, 4 `(t_low, gap_4)`.
#[derive(Debug, Clone)]
pub struct CarnotCycle {
    spec: CarnotSpec,
    corners: [EquilibriumState; 4],
}

impl CarnotCycle {
    pub fn spec(&self) -> &CarnotSpec {
        &self.spec
    }

    /// Corner states in traversal order 1, 2, 3, 4.
    pub fn corners(&self) -> &[EquilibriumState; 4] {
        &self.corners
    }

    pub fn gap_2(&self) -> EnergyGap {
        self.corners[1].gap()
    }

    pub fn gap_4(&self) -> EnergyGap {
        self.corners[3].gap()
    }

    /// Evaluates the forward engine: reversible isotherms and isoentropes,
    /// no entropy generation, coefficient `1 - t_low/t_high`.
    pub fn evaluate(&self) -> CycleReport {
        let [c1, c2, c3, c4] = &self.corners;
        let legs = [
            isotherm_leg(c1, c2),
            isoentrope_leg(c2, c3),
            isotherm_leg(c3, c4),
            isoentrope_leg(c4, c1),
        ];
        let names = ["1-2", "2-3", "3-4", "4-1"];
        let mut report = CycleReport::totals(CycleMode::Engine, legs, names);
        report.q_in_high = report.legs[0].q_in;
        report.q_out_low = -report.legs[2].q_in;
        report.coefficient = report.w_net / report.q_in_high;
        report.coefficient_exact = Some(1.0 - self.spec.temperature_ratio());
        report
    }

    /// Evaluates the reversed cycle. Reversible legs negate exactly, so the
    /// ledgers are the negated forward ledgers; the coefficient becomes the
    /// requested COP (`t_low/(t_high - t_low)` for refrigeration,
    /// `t_high/(t_high - t_low)` for heat pumping).
    pub fn reverse(&self, mode: CycleMode) -> CycleReport {
        let forward = self.evaluate();
        let legs = [
            forward.legs[3].negated(),
            forward.legs[2].negated(),
            forward.legs[1].negated(),
            forward.legs[0].negated(),
        ];
        let names = ["1-4", "4-3", "3-2", "2-1"];
        let mut report = CycleReport::totals(mode, legs, names);
        report.q_in_high = -forward.q_in_high;
        report.q_out_low = -forward.q_out_low;
        let t_high = self.spec.t_high.kelvin();
        let t_low = self.spec.t_low.kelvin();
        match mode {
            CycleMode::Refrigeration => {
                report.coefficient = report.q_out_low / report.w_net;
                report.coefficient_exact = Some(t_low / (t_high - t_low));
            }
            CycleMode::HeatPump | CycleMode::Engine => {
                report.coefficient = report.q_in_high / report.w_net;
                report.coefficient_exact = Some(t_high / (t_high - t_low));
            }
        }
        report
    }
}

/// Strict bounds on the Carnot net-work to high-temperature-heat ratio:
/// `1 - (gap_high/gap_low)(t_low/t_high)^2 < 1 - t_low/t_high <
/// 1 - gap_low/gap_high`.
pub fn carnot_bounds(spec: &CarnotSpec) -> BoundsReport {
    let t_ratio = spec.temperature_ratio();
    let gap_ratio = spec.gap_ratio();
    BoundsReport {
        lower: 1.0 - t_ratio * t_ratio / gap_ratio,
        value: 1.0 - t_ratio,
        upper: 1.0 - gap_ratio,
    }
}

// --- Otto -------------------------------------------------------------------

/// Free inputs of an Otto-like cycle: the two reference temperatures and
/// the two gaps of the constant-gap legs. Feasibility requires
/// `gap_p_low / gap_p_high > t_low / t_high` strictly.
#[derive(Debug, Clone, Copy)]
pub struct OttoSpec {
    t_high: Temperature,
    t_low: Temperature,
    gap_p_high: EnergyGap,
    gap_p_low: EnergyGap,
}

impl OttoSpec {
    pub fn new(
        t_high: Temperature,
        t_low: Temperature,
        gap_p_high: EnergyGap,
        gap_p_low: EnergyGap,
    ) -> Result<Self> {
        if !t_low.is_positive() {
            return Err(Error::NonPositiveTemperature(t_low.kelvin()));
        }
        if !(t_high.is_positive() && t_low.kelvin() < t_high.kelvin()) {
            return Err(Error::NonPositiveTemperature(t_high.kelvin()));
        }
        let ratio = gap_p_low.joules() / gap_p_high.joules();
        let limit = t_low.kelvin() / t_high.kelvin();
        if !(ratio > limit && ratio < 1.0) {
            return Err(Error::InfeasibleOtto { ratio, limit });
        }
        Ok(Self {
            t_high,
            t_low,
            gap_p_high,
            gap_p_low,
        })
    }

    pub fn t_high(&self) -> Temperature {
        self.t_high
    }

    pub fn t_low(&self) -> Temperature {
        self.t_low
    }

    pub fn gap_p_high(&self) -> EnergyGap {
        self.gap_p_high
    }

    pub fn gap_p_low(&self) -> EnergyGap {
        self.gap_p_low
    }

    pub fn gap_ratio(&self) -> f64 {
        self.gap_p_low.joules() / self.gap_p_high.joules()
    }

    pub fn temperature_ratio(&self) -> f64 {
        self.t_low.kelvin() / self.t_high.kelvin()
    }

    /// Builds the four corner states: 1' `(t_1', gap_p_high)`, 2'
    /// `(t_high, gap_p_high)`, 3' `(t_3', gap_p_low)`, 4' `(t_low,
    /// gap_p_low)`, with `t_1' = t_low * gap_p_high/gap_p_low` and
    /// `t_3' = t_high * gap_p_low/gap_p_high`.
    pub fn build(&self, constants: &Constants) -> Result<OttoCycle> {
        let ratio = self.gap_ratio();
        let t_1p = self.t_low.scaled(1.0 / ratio)?;
        let t_3p = self.t_high.scaled(ratio)?;
        let corners = [
            EquilibriumState::new(t_1p, self.gap_p_high, constants)?,
            EquilibriumState::new(self.t_high, self.gap_p_high, constants)?,
            EquilibriumState::new(t_3p, self.gap_p_low, constants)?,
            EquilibriumState::new(self.t_low, self.gap_p_low, constants)?,
        ];
        Ok(OttoCycle {
            spec: *self,
            corners,
        })
    }
}

/// The special Otto spec with `(gap_p_low/gap_p_high)^2 = t_low/t_high`,
/// which makes the two interior corner temperatures coincide and gives
/// coefficient `1 - sqrt(t_low/t_high)`.
pub fn special_otto(
    t_high: Temperature,
    t_low: Temperature,
    gap_p_high: EnergyGap,
) -> Result<OttoSpec> {
    let ratio = (t_low.kelvin() / t_high.kelvin()).sqrt();
    let gap_p_low = gap_p_high.scaled(ratio)?;
    OttoSpec::new(t_high, t_low, gap_p_high, gap_p_low)
}

/// A built Otto-like cycle with corners 1', 2', 3', 4'.
#[derive(Debug, Clone)]
pub struct OttoCycle {
    spec: OttoSpec,
    corners: [EquilibriumState; 4],
}

impl OttoCycle {
    pub fn spec(&self) -> &OttoSpec {
        &self.spec
    }

    /// Corner states in traversal order 1', 2', 3', 4'.
    pub fn corners(&self) -> &[EquilibriumState; 4] {
        &self.corners
    }

    /// Temperature at corner 1', the cold end of the high-gap leg.
    pub fn t_1p(&self) -> Temperature {
        self.corners[0].temperature()
    }

    /// Temperature at corner 3', the hot end of the low-gap leg.
    pub fn t_3p(&self) -> Temperature {
        self.corners[2].temperature()
    }

    /// Baths at the spec's `t_high` and `t_low`: the single-bath contact in
    /// which each constant-gap leg trades heat across a finite temperature
    /// difference and generates entropy.
    pub fn default_baths(&self) -> (Bath, Bath) {
        (
            Bath::from_kelvin(self.spec.t_high.kelvin()).expect("t_high positive"),
            Bath::from_kelvin(self.spec.t_low.kelvin()).expect("t_low positive"),
        )
    }

    /// Evaluates the forward engine against the given baths (high bath for
    /// the 1'-2' heating leg, low bath for 3'-4' cooling). Infeasible bath
    /// placements surface as leg errors. Coefficient:
    /// `1 - gap_p_low/gap_p_high`.
    pub fn evaluate(&self, bath_high: Bath, bath_low: Bath) -> Result<CycleReport> {
        let [c1, c2, c3, c4] = &self.corners;
        let legs = [
            isogap_leg(c1, c2, bath_high)?,
            isoentrope_leg(c2, c3),
            isogap_leg(c3, c4, bath_low)?,
            isoentrope_leg(c4, c1),
        ];
        let names = ["1'-2'", "2'-3'", "3'-4'", "4'-1'"];
        let mut report = CycleReport::totals(CycleMode::Engine, legs, names);
        report.q_in_high = report.legs[0].q_in;
        report.q_out_low = -report.legs[2].q_in;
        report.coefficient = report.w_net / report.q_in_high;
        report.coefficient_exact = Some(1.0 - self.spec.gap_ratio());
        Ok(report)
    }

    /// Forward evaluation with the default baths.
    pub fn evaluate_default(&self) -> Result<CycleReport> {
        let (hot, cold) = self.default_baths();
        self.evaluate(hot, cold)
    }

    /// Reversed-mode baths at the interior corner temperatures: the hot
    /// bath must sit at or below `t_1'` and the cold bath at or above
    /// `t_3'`, and these are the extreme feasible choices.
    pub fn reverse_contact_baths(&self) -> Result<(Bath, Bath)> {
        Ok((
            Bath::from_kelvin(self.t_1p().kelvin())?,
            Bath::from_kelvin(self.t_3p().kelvin())?,
        ))
    }

    /// Evaluates the reversed cycle (refrigeration or heat pump) against
    /// the reverse-contact baths. Requires `t_3' < t_1'`; inside the window
    /// where `t_3' >= t_1'` no feasible bath pair exists and the call
    /// fails.
    pub fn reverse(&self, mode: CycleMode) -> Result<CycleReport> {
        let (hot, cold) = self.reverse_contact_baths()?;
        self.reverse_with_baths(mode, hot, cold)
    }

    /// Reversed evaluation against explicit baths (hot side receives the
    /// rejected heat of the 2'-1' leg, cold side feeds the 4'-3' leg).
    pub fn reverse_with_baths(
        &self,
        mode: CycleMode,
        bath_hot: Bath,
        bath_cold: Bath,
    ) -> Result<CycleReport> {
        let t_1p = self.t_1p().kelvin();
        let t_3p = self.t_3p().kelvin();
        if !(t_3p < t_1p) {
            return Err(Error::ReverseInfeasible { t1p: t_1p, t3p: t_3p });
        }
        let [c1, c2, c3, c4] = &self.corners;
        let legs = [
            isoentrope_leg(c1, c4),
            isogap_leg(c4, c3, bath_cold)?,
            isoentrope_leg(c3, c2),
            isogap_leg(c2, c1, bath_hot)?,
        ];
        let names = ["1'-4'", "4'-3'", "3'-2'", "2'-1'"];
        let mut report = CycleReport::totals(mode, legs, names);
        report.q_in_high = report.legs[3].q_in;
        report.q_out_low = -report.legs[1].q_in;
        report.coefficient = match mode {
            CycleMode::Refrigeration => report.q_out_low / report.w_net,
            CycleMode::HeatPump | CycleMode::Engine => report.q_in_high / report.w_net,
        };
        // No closed-form COP is defined for the reversed Otto cycle; only
        // the ledger-derived value is reported.
        report.coefficient_exact = None;
        Ok(report)
    }
}

/// Strict bounds on the Otto net-work to high-temperature-heat ratio:
/// `1 - (t_high/t_low)(gap_p_low/gap_p_high)^2 < 1 - gap_p_low/gap_p_high <
/// 1 - t_low/t_high`.
pub fn otto_bounds(spec: &OttoSpec) -> BoundsReport {
    let t_ratio = spec.temperature_ratio();
    let gap_ratio = spec.gap_ratio();
    BoundsReport {
        lower: 1.0 - gap_ratio * gap_ratio / t_ratio,
        value: 1.0 - gap_ratio,
        upper: 1.0 - t_ratio,
    }
}

/// The Otto spec inscribed in a Carnot cycle: same temperatures, gaps at
/// `max` and `min` of the Carnot's derived corner gaps 2 and 4. Fails when
/// those gaps coincide (three-gap Carnot) and propagates infeasibility when
/// the Carnot gap ratio is at or below `(t_low/t_high)^3`.
pub fn inscribe_otto(cycle: &CarnotCycle) -> Result<OttoSpec> {
    let g2 = cycle.gap_2().joules();
    let g4 = cycle.gap_4().joules();
    if (g2 - g4).abs() <= GAP_COINCIDENCE_RTOL * g2.max(g4) {
        return Err(Error::DegenerateInscription(g2));
    }
    OttoSpec::new(
        cycle.spec().t_high(),
        cycle.spec().t_low(),
        EnergyGap::from_joules(g2.max(g4))?,
        EnergyGap::from_joules(g2.min(g4))?,
    )
}

/// Whether the Otto cycle inscribed in a Carnot cycle with the given gap
/// and temperature ratios can run in reverse between two baths. It cannot
/// exactly when `t_ratio^(5/2) < gap_ratio < t_ratio^(3/2)`, the window in
/// which the inscribed cycle has `t_3' >= t_1'`.
pub fn otto_reverse_feasible(gap_ratio: f64, t_ratio: f64) -> bool {
    debug_assert!(gap_ratio > 0.0 && gap_ratio < 1.0);
    debug_assert!(t_ratio > 0.0 && t_ratio < 1.0);
    let lo = t_ratio.powf(2.5);
    let hi = t_ratio.powf(1.5);
    !(gap_ratio > lo && gap_ratio < hi)
}
