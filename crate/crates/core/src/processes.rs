//! Finite quasi-static process legs between equilibrium states, with exact
//! heat, work, and entropy-generation ledgers.
//!
//! Sign convention, fixed once: heat is positive into the system
//! (`q_in`), work is positive out of the system (`w_out`). Every ledger
//! satisfies the energy balance `d_energy = q_in - w_out` by construction;
//! when a bath is present the entropy balance
//! `d_entropy = q_in / t_bath + s_gen` defines the entropy generated inside
//! the system, and a leg whose `s_gen` would be negative beyond roundoff is
//! rejected as infeasible.

use crate::equilibrium::{EnergyGap, EquilibriumState, Constants, Temperature};
use crate::error::{Error, Result};
use crate::sweep;

/// Relative roundoff guard: `s_gen` within `-S_GEN_ROUNDOFF * scale` of zero
/// is clamped to zero; anything below is a genuine second-law violation.
pub const S_GEN_ROUNDOFF: f64 = 1e-15;

/// A heat bath (thermal reservoir) at a fixed positive temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bath {
    t_q: f64,
}

impl Bath {
    pub fn from_kelvin(t_q: f64) -> Result<Self> {
        if !(t_q.is_finite() && t_q > 0.0) {
            return Err(Error::NonPositiveTemperature(t_q));
        }
        Ok(Self { t_q })
    }

    pub fn kelvin(&self) -> f64 {
        self.t_q
    }
}

/// Ledger of one finite quasi-static leg.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LegResult {
    /// Heat received by the system, J.
    pub q_in: f64,
    /// Work extracted from the system, J.
    pub w_out: f64,
    /// Energy change `E_final - E_initial`, J.
    pub d_energy: f64,
    /// Entropy change `S_final - S_initial`, J/K.
    pub d_entropy: f64,
    /// Entropy generated within the system, J/K; nonnegative.
    pub s_gen: f64,
}

impl LegResult {
    pub const ZERO: LegResult = LegResult {
        q_in: 0.0,
        w_out: 0.0,
        d_energy: 0.0,
        d_entropy: 0.0,
        s_gen: 0.0,
    };

    /// Ledger of the same leg traversed in the opposite direction. Only
    /// meaningful for reversible legs, where `s_gen` is zero and stays zero.
    pub(crate) fn negated(&self) -> LegResult {
        LegResult {
            q_in: -self.q_in,
            w_out: -self.w_out,
            d_energy: -self.d_energy,
            d_entropy: -self.d_entropy,
            s_gen: self.s_gen,
        }
    }
}

/// Clamps a roundoff-negative entropy generation to zero; `None` marks a
/// genuine (beyond-guard) violation.
fn clamp_s_gen(s_gen: f64, scale: f64) -> Option<f64> {
    if s_gen >= 0.0 {
        Some(s_gen)
    } else if s_gen >= -S_GEN_ROUNDOFF * scale.abs().max(f64::MIN_POSITIVE) {
        Some(0.0)
    } else {
        None
    }
}

// Corner-state ledger kernels. The cycle evaluators call these directly so
// both endpoints of every leg are the already-built corner states and the
// per-cycle sums telescope.

pub(crate) fn isotherm_leg(a: &EquilibriumState, b: &EquilibriumState) -> LegResult {
    debug_assert_eq!(a.temperature().kelvin(), b.temperature().kelvin());
    let t = a.temperature().kelvin();
    let d_entropy = b.entropy() - a.entropy();
    let d_energy = b.mean_energy() - a.mean_energy();
    let q_in = t * d_entropy;
    LegResult {
        q_in,
        w_out: q_in - d_energy,
        d_energy,
        d_entropy,
        s_gen: 0.0,
    }
}

pub(crate) fn isoentrope_leg(a: &EquilibriumState, b: &EquilibriumState) -> LegResult {
    let d_energy = b.mean_energy() - a.mean_energy();
    LegResult {
        q_in: 0.0,
        w_out: -d_energy,
        d_energy,
        d_entropy: 0.0,
        s_gen: 0.0,
    }
}

pub(crate) fn isogap_leg(
    a: &EquilibriumState,
    b: &EquilibriumState,
    bath: Bath,
) -> Result<LegResult> {
    debug_assert_eq!(a.gap().joules(), b.gap().joules());
    let q_in = b.mean_energy() - a.mean_energy();
    let d_entropy = b.entropy() - a.entropy();
    let exchanged = q_in / bath.kelvin();
    let raw = d_entropy - exchanged;
    let scale = d_entropy.abs().max(exchanged.abs());
    let s_gen = clamp_s_gen(raw, scale).ok_or(Error::NegativeEntropyGeneration {
        s_gen: raw,
        bath_temperature: bath.kelvin(),
    })?;
    Ok(LegResult {
        q_in,
        w_out: 0.0,
        d_energy: q_in,
        d_entropy,
        s_gen,
    })
}

/// Reversible isothermal leg at `t > 0` from `gap_a` to `gap_b`:
/// `q_in = T (S_b - S_a)`, no entropy generation.
pub fn isotherm_reversible(
    t: Temperature,
    gap_a: EnergyGap,
    gap_b: EnergyGap,
    constants: &Constants,
) -> Result<LegResult> {
    if !t.is_positive() {
        return Err(Error::NonPositiveTemperature(t.kelvin()));
    }
    let a = EquilibriumState::new(t, gap_a, constants)?;
    let b = EquilibriumState::new(t, gap_b, constants)?;
    Ok(isotherm_leg(&a, &b))
}

/// Reversible adiabat from `start` to `gap_b`. The final temperature is
/// `T_a * (gap_b / gap_a)`, which keeps `gap/T` (hence the entropy) fixed;
/// all the energy change is work.
pub fn isoentrope(start: &EquilibriumState, gap_b: EnergyGap) -> Result<LegResult> {
    let ratio = gap_b.joules() / start.gap().joules();
    let t_b = start.temperature().scaled(ratio)?;
    let end = EquilibriumState::new(t_b, gap_b, start.constants())?;
    Ok(isoentrope_leg(start, &end))
}

/// Final state of the adiabat from `start` to `gap_b`, for callers that need
/// the endpoint rather than the ledger.
pub fn isoentrope_end(start: &EquilibriumState, gap_b: EnergyGap) -> Result<EquilibriumState> {
    let ratio = gap_b.joules() / start.gap().joules();
    let t_b = start.temperature().scaled(ratio)?;
    EquilibriumState::new(t_b, gap_b, start.constants())
}

/// Constant-gap leg from `t_a` to `t_b` in contact with a single bath. All
/// the energy change is heat; the part of the entropy change not supplied by
/// the bath is generated by irreversibility and must be nonnegative.
pub fn isogap_with_bath(
    gap: EnergyGap,
    t_a: Temperature,
    t_b: Temperature,
    bath: Bath,
    constants: &Constants,
) -> Result<LegResult> {
    if !t_a.is_positive() {
        return Err(Error::NonPositiveTemperature(t_a.kelvin()));
    }
    if !t_b.is_positive() {
        return Err(Error::NonPositiveTemperature(t_b.kelvin()));
    }
    let a = EquilibriumState::new(t_a, gap, constants)?;
    let b = EquilibriumState::new(t_b, gap, constants)?;
    isogap_leg(&a, &b, bath)
}

/// Work interaction with no heat: the entropy change is generated entirely
/// within the system, so the process needs `S_end >= S_start`.
pub fn work_only_relaxation(
    start: &EquilibriumState,
    end: &EquilibriumState,
) -> Result<LegResult> {
    let s_start = start.entropy();
    let s_end = end.entropy();
    let raw = s_end - s_start;
    let scale = s_start.abs().max(s_end.abs());
    let s_gen = clamp_s_gen(raw, scale).ok_or(Error::EntropyDecrease(-raw))?;
    let d_energy = end.mean_energy() - start.mean_energy();
    Ok(LegResult {
        q_in: 0.0,
        w_out: -d_energy,
        d_energy,
        d_entropy: raw,
        s_gen,
    })
}

/// Differential feasibility of a heat-only interaction at `T > 0`:
/// `(E/gap) d_gap <= (1 - T/T_Q) d_energy`.
pub fn heat_only_feasible(
    state: &EquilibriumState,
    d_gap: f64,
    d_energy: f64,
    bath: Bath,
) -> bool {
    debug_assert!(state.temperature().is_positive());
    let e_per_gap = state.mean_energy() / state.gap().joules();
    let t = state.temperature().kelvin();
    e_per_gap * d_gap <= (1.0 - t / bath.kelvin()) * d_energy
}

/// Differential work extracted when the system exchanges `q_in` with a bath
/// while the gap changes by `d_gap` and `s_gen` is generated inside:
/// `w = -(E/gap) d_gap + (1 - T/T_Q) q_in - T s_gen`.
pub fn general_leg_work(
    state: &EquilibriumState,
    d_gap: f64,
    q_in: f64,
    s_gen: f64,
    bath: Bath,
) -> Result<f64> {
    if !(s_gen.is_finite() && s_gen >= 0.0) {
        return Err(Error::NegativeSgenInput(s_gen));
    }
    let e_per_gap = state.mean_energy() / state.gap().joules();
    let t = state.temperature().kelvin();
    Ok(-e_per_gap * d_gap + (1.0 - t / bath.kelvin()) * q_in - t * s_gen)
}

/// Entropy generated when `q_in` crosses the finite temperature difference
/// between the system at `T` and a bath at `T_Q`: `q_in/T - q_in/T_Q`.
/// With this generation rate [`general_leg_work`] collapses to the
/// reversible work `-(E/gap) d_gap`.
pub fn heat_exchange_s_gen(state: &EquilibriumState, q_in: f64, bath: Bath) -> f64 {
    q_in / state.temperature().kelvin() - q_in / bath.kelvin()
}

/// Composite-trapezoid cross-check of [`isotherm_reversible`]: accumulates
/// `T dS` over the gap using the analytic `dS/d(gap)` along the isotherm.
/// Converges to the closed form at second order in the step count.
pub fn integrate_isotherm_numerical(
    t: Temperature,
    gap_a: EnergyGap,
    gap_b: EnergyGap,
    n_steps: usize,
    constants: &Constants,
) -> Result<LegResult> {
    if !t.is_positive() {
        return Err(Error::NonPositiveTemperature(t.kelvin()));
    }
    if n_steps == 0 {
        return Err(Error::ZeroSteps);
    }
    let a = EquilibriumState::new(t, gap_a, constants)?;
    let b = EquilibriumState::new(t, gap_b, constants)?;
    let (da, db) = (gap_a.joules(), gap_b.joules());
    let h = (db - da) / n_steps as f64;
    let kbt = constants.k_b() * t.kelvin();
    // Integrand T * dS/d(gap) = -x p(x) (1-p(x)) with x = gap/(k_B T);
    // dimensionless, so the sum over the gap carries joules.
    let integrand = |gap: f64| {
        let x = gap / kbt;
        crate::equilibrium::dentropy_dx_over_kb(x)
    };
    // Evaluate nodes (possibly in parallel), then reduce sequentially so the
    // result does not depend on the reduction order.
    let nodes = sweep::map_indices(n_steps + 1, |i| integrand(da + i as f64 * h));
    let mut acc = 0.5 * (nodes[0] + nodes[n_steps]);
    for node in &nodes[1..n_steps] {
        acc += node;
    }
    let q_in = acc * h;
    let d_energy = b.mean_energy() - a.mean_energy();
    let d_entropy = b.entropy() - a.entropy();
    Ok(LegResult {
        q_in,
        w_out: q_in - d_energy,
        d_energy,
        d_entropy,
        s_gen: 0.0,
    })
}
