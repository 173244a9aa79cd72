//! Closed-form canonical-equilibrium properties of the two-level system and
//! numerically robust inversions of the fundamental relation.
//!
//! Every property depends on temperature and gap only through the
//! dimensionless coordinate `x = gap / (k_B * T)` plus a gap scale:
//!
//! * excited-level population `p = 1 / (1 + exp(x))`
//! * mean energy `E = (gap/2) * tanh(-x/2)`, equivalently `E/gap = p - 1/2`
//! * entropy `S = -k_B [p ln p + (1 - p) ln(1 - p)]`
//! * Massieu function `M = S - E/T`
//!
//! Temperatures may be negative (population inversion, `p > 1/2`) but never
//! zero or infinite. The hotness coordinate `-1/T` orders states from
//! coldest to hottest across both temperature signs.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Coordinate magnitude beyond which `exp(-|x|)` underflows to zero and the
/// entropy saturates to exactly `0.0`. Inversions bracket `|x|` in
/// `(0, X_MAX]`.
pub const X_MAX: f64 = 745.0;

/// Absolute tolerance on the coordinate for bisection inversions.
pub const X_TOL: f64 = 1e-14;

/// Iteration cap for bisection inversions.
pub const MAX_BISECT_ITERATIONS: usize = 200;

/// Physical constants used to map between field, gap, and temperature.
///
/// Defaults are the CODATA Boltzmann constant and the Bohr magneton; both
/// can be overridden (for reduced-unit work or testing) but must stay
/// positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    k_b: f64,
    mu_b: f64,
}

impl Constants {
    /// CODATA (exact SI) Boltzmann constant, J/K.
    pub const CODATA_K_B: f64 = 1.380_649e-23;
    /// Bohr magneton, J/T.
    pub const BOHR_MAGNETON: f64 = 9.274e-24;

    pub fn new(k_b: f64, mu_b: f64) -> Result<Self> {
        if !(k_b.is_finite() && k_b > 0.0 && mu_b.is_finite() && mu_b > 0.0) {
            return Err(Error::InvalidConstants { k_b, mu_b });
        }
        Ok(Self { k_b, mu_b })
    }

    pub fn k_b(&self) -> f64 {
        self.k_b
    }

    pub fn mu_b(&self) -> f64 {
        self.mu_b
    }

    /// `k_B ln 2`, the entropy of the maximally mixed state.
    pub fn max_entropy(&self) -> f64 {
        self.k_b * std::f64::consts::LN_2
    }
}

impl Default for Constants {
    fn default() -> Self {
        Self {
            k_b: Self::CODATA_K_B,
            mu_b: Self::BOHR_MAGNETON,
        }
    }
}

/// Energy-level gap `delta > 0` in joules; levels sit at `-delta/2` and
/// `+delta/2`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EnergyGap(f64);

impl EnergyGap {
    pub fn from_joules(delta: f64) -> Result<Self> {
        if !(delta.is_finite() && delta > 0.0) {
            return Err(Error::InvalidGap(delta));
        }
        Ok(Self(delta))
    }

    /// Gap of a spin-1/2 system in a magnetic field: `delta = 2 mu_B B`.
    pub fn from_field(b_tesla: f64, constants: &Constants) -> Result<Self> {
        if !(b_tesla.is_finite() && b_tesla > 0.0) {
            return Err(Error::NonPositiveField(b_tesla));
        }
        Self::from_joules(2.0 * constants.mu_b() * b_tesla)
    }

    pub fn joules(&self) -> f64 {
        self.0
    }

    /// Lower energy level, `-delta/2`.
    pub fn level_low(&self) -> f64 {
        -0.5 * self.0
    }

    /// Upper energy level, `+delta/2`.
    pub fn level_high(&self) -> f64 {
        0.5 * self.0
    }

    /// Magnetic field in tesla that would produce this gap.
    pub fn field_equivalent(&self, constants: &Constants) -> f64 {
        self.0 / (2.0 * constants.mu_b())
    }

    /// Gap scaled by a dimensionless factor (> 0).
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::from_joules(self.0 * factor)
    }
}

/// Temperature in kelvin; may be negative (population inversion) but never
/// zero, infinite, or NaN.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Temperature(f64);

impl Temperature {
    pub fn from_kelvin(t: f64) -> Result<Self> {
        if !t.is_finite() || t == 0.0 {
            return Err(Error::UnrepresentableTemperature(t));
        }
        Ok(Self(t))
    }

    pub fn kelvin(&self) -> f64 {
        self.0
    }

    /// Hotness coordinate `-1/T` in 1/K; finite and nonzero by construction.
    pub fn hotness(&self) -> f64 {
        -1.0 / self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0 > 0.0
    }

    /// Temperature scaled by a dimensionless factor (nonzero, finite).
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::from_kelvin(self.0 * factor)
    }
}

/// Orders temperatures coldest to hottest by the hotness coordinate `-1/T`.
///
/// Any negative temperature is hotter than every positive temperature.
pub fn is_hotter(a: Temperature, b: Temperature) -> Ordering {
    // Hotness values are finite and nonzero, so the comparison is total.
    a.hotness().partial_cmp(&b.hotness()).unwrap()
}

/// A canonical equilibrium state: a `(temperature, gap)` pair with the
/// derived coordinate `x = gap / (k_B T)`.
///
/// The single source of truth for the population, mean energy, entropy, and
/// Massieu function of the two-level system.
#[derive(Debug, Clone, Copy)]
pub struct EquilibriumState {
    temperature: Temperature,
    gap: EnergyGap,
    x: f64,
    constants: Constants,
}

impl EquilibriumState {
    pub fn new(temperature: Temperature, gap: EnergyGap, constants: &Constants) -> Result<Self> {
        let x = gap.joules() / (constants.k_b() * temperature.kelvin());
        if !x.is_finite() || x == 0.0 {
            return Err(Error::InvalidCoordinate(x));
        }
        Ok(Self {
            temperature,
            gap,
            x,
            constants: *constants,
        })
    }

    /// State at a given coordinate and gap; the temperature is derived as
    /// `T = gap / (k_B x)`.
    pub fn from_coordinate(x: f64, gap: EnergyGap, constants: &Constants) -> Result<Self> {
        if !x.is_finite() || x == 0.0 {
            return Err(Error::InvalidCoordinate(x));
        }
        let temperature = Temperature::from_kelvin(gap.joules() / (constants.k_b() * x))?;
        Self::new(temperature, gap, constants)
    }

    pub fn temperature(&self) -> Temperature {
        self.temperature
    }

    pub fn gap(&self) -> EnergyGap {
        self.gap
    }

    pub fn constants(&self) -> &Constants {
        &self.constants
    }

    /// Dimensionless coordinate `x = gap / (k_B T)`.
    pub fn coordinate(&self) -> f64 {
        self.x
    }

    /// Hotness in 1/J, `-1/(k_B T)`; the figure-style diagram abscissa.
    pub fn hotness_per_joule(&self) -> f64 {
        -1.0 / (self.constants.k_b() * self.temperature.kelvin())
    }

    /// Excited-level population `p = 1 / (1 + exp(x))`, in (0, 1) until
    /// `exp(-|x|)` underflows.
    pub fn excited_population(&self) -> f64 {
        population(self.x)
    }

    /// Mean energy `E = (gap/2) tanh(-x/2)` in joules.
    pub fn mean_energy(&self) -> f64 {
        self.gap.joules() * energy_per_gap(self.x)
    }

    /// Entropy `S = -k_B [p ln p + (1-p) ln(1-p)]` in J/K, evaluated in a
    /// form that stays accurate at large `|x|`.
    pub fn entropy(&self) -> f64 {
        self.constants.k_b() * entropy_over_kb(self.x)
    }

    /// Massieu function `M = S - E/T` in J/K; constant along isoentropes.
    pub fn massieu(&self) -> f64 {
        self.constants.k_b() * massieu_over_kb(self.x)
    }

    pub fn properties(&self) -> PropertySet {
        PropertySet {
            p: self.excited_population(),
            energy: self.mean_energy(),
            entropy: self.entropy(),
            massieu: self.massieu(),
        }
    }

    /// True when `|x| > X_MAX`, where the entropy has saturated to zero.
    pub fn is_saturated(&self) -> bool {
        self.x.abs() > X_MAX
    }
}

/// The four derived equilibrium properties of a state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropertySet {
    /// Excited-level population, dimensionless.
    pub p: f64,
    /// Mean energy, J.
    pub energy: f64,
    /// Entropy, J/K.
    pub entropy: f64,
    /// Massieu function `S - E/T`, J/K.
    pub massieu: f64,
}

// --- kernels in the dimensionless coordinate ------------------------------

/// `p(x) = 1 / (1 + e^x)`, computed without overflow for any finite `x`.
pub fn population(x: f64) -> f64 {
    if x >= 0.0 {
        let t = (-x).exp();
        t / (1.0 + t)
    } else {
        1.0 / (1.0 + x.exp())
    }
}

/// `E / gap = (1/2) tanh(-x/2) = p - 1/2`.
pub fn energy_per_gap(x: f64) -> f64 {
    0.5 * (-0.5 * x).tanh()
}

/// `S / k_B` via `ln(1 + e^{-|x|}) + |x| e^{-|x|} / (1 + e^{-|x|})`, which
/// avoids the catastrophic cancellation of the Shannon form at large `|x|`.
pub fn entropy_over_kb(x: f64) -> f64 {
    let y = x.abs();
    let t = (-y).exp();
    t.ln_1p() + y * t / (1.0 + t)
}

/// `M / k_B = S / k_B + (x/2) tanh(x/2)`.
pub fn massieu_over_kb(x: f64) -> f64 {
    entropy_over_kb(x) + 0.5 * x * (0.5 * x).tanh()
}

/// `d(S/k_B)/dx = -x p (1 - p)`; used by the isotherm quadrature oracle.
pub fn dentropy_dx_over_kb(x: f64) -> f64 {
    let p = population(x);
    -x * p * (1.0 - p)
}

// --- inversions of the fundamental relation -------------------------------

/// Entropy as a pure function of the ratio `E / gap`; defined for
/// `|energy| < gap/2`.
pub fn entropy_from_energy(energy: f64, gap: EnergyGap, constants: &Constants) -> Result<f64> {
    let half_gap = 0.5 * gap.joules();
    if !energy.is_finite() || energy.abs() >= half_gap {
        return Err(Error::EnergyOutOfRange { energy, half_gap });
    }
    let p = 0.5 + energy / gap.joules();
    Ok(-constants.k_b() * (p * p.ln() + (1.0 - p) * (1.0 - p).ln()))
}

/// Inverts the mean-energy relation: `x = -2 artanh(2 E / gap)`,
/// `T = gap / (k_B x)`.
pub fn temperature_from_energy(
    energy: f64,
    gap: EnergyGap,
    constants: &Constants,
) -> Result<Temperature> {
    let half_gap = 0.5 * gap.joules();
    if !energy.is_finite() || energy.abs() >= half_gap {
        return Err(Error::EnergyOutOfRange { energy, half_gap });
    }
    if energy == 0.0 {
        return Err(Error::ZeroEnergy);
    }
    let x = -2.0 * (2.0 * energy / gap.joules()).atanh();
    Temperature::from_kelvin(gap.joules() / (constants.k_b() * x))
}

/// Which sign of temperature an entropy inversion should return; the
/// entropy itself is blind to the sign of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TemperatureBranch {
    Positive,
    Negative,
}

/// Bisects the strictly decreasing `S(|x|)` on `(0, X_MAX]` for the `|x|`
/// matching `s_target`, then applies the branch sign.
pub fn temperature_from_entropy(
    s_target: f64,
    gap: EnergyGap,
    branch: TemperatureBranch,
    constants: &Constants,
) -> Result<Temperature> {
    let x_abs = invert_entropy_coordinate(s_target, constants)?;
    let x = match branch {
        TemperatureBranch::Positive => x_abs,
        TemperatureBranch::Negative => -x_abs,
    };
    Temperature::from_kelvin(gap.joules() / (constants.k_b() * x))
}

/// Solves `S(gap / (k_B T)) = s_target` for the gap at a fixed positive
/// temperature: `gap = x(s_target) k_B T`.
pub fn gap_from_entropy(s_target: f64, t: Temperature, constants: &Constants) -> Result<EnergyGap> {
    if !t.is_positive() {
        return Err(Error::NonPositiveTemperature(t.kelvin()));
    }
    let x_abs = invert_entropy_coordinate(s_target, constants)?;
    EnergyGap::from_joules(x_abs * constants.k_b() * t.kelvin())
}

/// Monotone inversion of `S(|x|)` by bisection on `(0, X_MAX]`.
fn invert_entropy_coordinate(s_target: f64, constants: &Constants) -> Result<f64> {
    let max = constants.max_entropy();
    if !s_target.is_finite() || s_target <= 0.0 || s_target >= max {
        return Err(Error::EntropyOutOfRange {
            entropy: s_target,
            max,
        });
    }
    let target = s_target / constants.k_b();
    let mut lo = f64::MIN_POSITIVE;
    let mut hi = X_MAX;
    // S(|x|) decreases from k_B ln 2 toward 0; the bracket must straddle.
    if entropy_over_kb(hi) >= target {
        return Err(Error::NoConvergence {
            iterations: 0,
            lo,
            hi,
        });
    }
    for _ in 0..MAX_BISECT_ITERATIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // Interval at machine resolution.
            return Ok(mid.clamp(lo, hi));
        }
        if entropy_over_kb(mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= X_TOL {
            return Ok(0.5 * (lo + hi));
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_BISECT_ITERATIONS,
        lo,
        hi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    // Independent oracle routes: population via the raw exponential,
    // entropy via the Shannon form, energy via p - 1/2. These deliberately
    // avoid the tanh/log1p forms the implementation uses.
    fn oracle_population(x: f64) -> f64 {
        1.0 / (1.0 + x.exp())
    }

    fn oracle_entropy_over_kb(x: f64) -> f64 {
        let p = oracle_population(x);
        -(p * p.ln() + (1.0 - p) * (1.0 - p).ln())
    }

    fn oracle_energy(gap: f64, x: f64) -> f64 {
        gap * (oracle_population(x) - 0.5)
    }

    fn consts() -> Constants {
        Constants::default()
    }

    fn state(t_kelvin: f64, b_tesla: f64) -> EquilibriumState {
        let c = consts();
        EquilibriumState::new(
            Temperature::from_kelvin(t_kelvin).unwrap(),
            EnergyGap::from_field(b_tesla, &c).unwrap(),
            &c,
        )
        .unwrap()
    }

    #[test]
    fn gap_from_field_matches_hand_values() {
        let c = consts();
        let g = EnergyGap::from_field(1600.0, &c).unwrap();
        assert_relative_eq!(g.joules(), 2.96768e-20, max_relative = 1e-12);
        let g = EnergyGap::from_field(250.0, &c).unwrap();
        assert_relative_eq!(g.joules(), 4.637e-21, max_relative = 1e-12);
    }

    #[test]
    fn gap_from_field_is_linear() {
        let c = consts();
        let g1 = EnergyGap::from_field(431.7, &c).unwrap();
        let g2 = EnergyGap::from_field(863.4, &c).unwrap();
        assert_relative_eq!(g2.joules(), 2.0 * g1.joules(), max_relative = 1e-15);
    }

    #[test]
    fn gap_rejects_non_positive_field() {
        let c = consts();
        assert!(EnergyGap::from_field(0.0, &c).is_err());
        assert!(EnergyGap::from_field(-5.0, &c).is_err());
        assert!(EnergyGap::from_field(f64::NAN, &c).is_err());
    }

    #[test]
    fn field_equivalent_round_trips() {
        let c = consts();
        let g = EnergyGap::from_field(773.25, &c).unwrap();
        assert_relative_eq!(g.field_equivalent(&c), 773.25, max_relative = 1e-15);
    }

    #[test]
    fn temperature_rejects_zero_and_non_finite() {
        assert!(Temperature::from_kelvin(0.0).is_err());
        assert!(Temperature::from_kelvin(f64::INFINITY).is_err());
        assert!(Temperature::from_kelvin(f64::NAN).is_err());
        assert!(Temperature::from_kelvin(-300.0).is_ok());
    }

    #[test]
    fn population_limits_and_exact_point() {
        // x = ln 3 gives p = 1/(1+3) = 1/4 exactly.
        assert_relative_eq!(population(3.0f64.ln()), 0.25, max_relative = 1e-15);
        // Small |x| approaches the maximally mixed value from below.
        assert_abs_diff_eq!(population(1e-12), 0.5, epsilon = 1e-12);
        // Negative temperature inverts the population.
        assert!(population(-2.0) > 0.5);
        assert_relative_eq!(population(-2.0), 1.0 - population(2.0), max_relative = 1e-15);
    }

    #[test]
    fn population_agrees_with_oracle() {
        for &x in &[1e-6, 0.1, 1.0, 3.5824697901735587, 20.0, -0.7, -15.0] {
            assert_relative_eq!(population(x), oracle_population(x), max_relative = 1e-14);
        }
    }

    #[test]
    fn mean_energy_caption_point() {
        // B = 1600 T at 600 K sits at x ~ 3.58248.
        let s = state(600.0, 1600.0);
        assert_relative_eq!(s.coordinate(), 3.5824697901735587, max_relative = 1e-13);
        assert_relative_eq!(s.mean_energy(), -1.40355051647432e-20, max_relative = 1e-12);
        // Two closed forms of the same property.
        assert_relative_eq!(
            s.mean_energy(),
            oracle_energy(s.gap().joules(), s.coordinate()),
            max_relative = 1e-13
        );
    }

    #[test]
    fn mean_energy_is_odd_in_temperature() {
        let c = consts();
        let gap = EnergyGap::from_field(500.0, &c).unwrap();
        let plus = EquilibriumState::new(Temperature::from_kelvin(417.0).unwrap(), gap, &c)
            .unwrap()
            .mean_energy();
        let minus = EquilibriumState::new(Temperature::from_kelvin(-417.0).unwrap(), gap, &c)
            .unwrap()
            .mean_energy();
        assert_relative_eq!(minus, -plus, max_relative = 1e-15);
    }

    #[test]
    fn entropy_exact_point_and_symmetry() {
        // p = 1/4: S/k_B = (1/4) ln 4 + (3/4) ln(4/3).
        let expected = 0.25 * 4.0f64.ln() + 0.75 * (4.0f64 / 3.0).ln();
        assert_relative_eq!(expected, 0.5623351446188083, max_relative = 1e-15);
        assert_relative_eq!(entropy_over_kb(3.0f64.ln()), expected, max_relative = 1e-13);
        assert_relative_eq!(
            entropy_over_kb(-1.3),
            entropy_over_kb(1.3),
            max_relative = 1e-15
        );
    }

    #[test]
    fn entropy_pure_state_limit() {
        assert!(entropy_over_kb(60.0) < 1e-24);
        assert_eq!(entropy_over_kb(800.0), 0.0);
        let c = consts();
        let gap = EnergyGap::from_field(1600.0, &c).unwrap();
        let s = EquilibriumState::from_coordinate(800.0, gap, &c).unwrap();
        assert!(s.is_saturated());
        assert_eq!(s.entropy(), 0.0);
    }

    #[test]
    fn entropy_matches_shannon_oracle() {
        for &x in &[1e-6, 0.03, 0.5, 1.1195, 3.58, 7.0, 30.0] {
            assert_abs_diff_eq!(
                entropy_over_kb(x),
                oracle_entropy_over_kb(x),
                epsilon = 1e-13
            );
        }
    }

    #[test]
    fn entropy_from_energy_cases() {
        let c = consts();
        let gap = EnergyGap::from_field(1600.0, &c).unwrap();
        // Zero energy: maximal mixing.
        assert_relative_eq!(
            entropy_from_energy(0.0, gap, &c).unwrap(),
            c.max_entropy(),
            max_relative = 1e-15
        );
        // E/gap = -1/4 matches the p = 1/4 entropy.
        let s = entropy_from_energy(-0.25 * gap.joules(), gap, &c).unwrap();
        assert_relative_eq!(s / c.k_b(), 0.5623351446188083, max_relative = 1e-13);
        // Symmetric under E -> -E.
        let s_pos = entropy_from_energy(0.25 * gap.joules(), gap, &c).unwrap();
        assert_relative_eq!(s_pos, s, max_relative = 1e-14);
        // Out of range.
        assert!(entropy_from_energy(0.5 * gap.joules(), gap, &c).is_err());
        assert!(entropy_from_energy(-0.6 * gap.joules(), gap, &c).is_err());
    }

    #[test]
    fn massieu_caption_point_and_limit() {
        let s = state(600.0, 1600.0);
        assert_relative_eq!(
            s.massieu() / consts().k_b(),
            1.8186622391111453,
            max_relative = 1e-12
        );
        // x -> 0: M -> k_B ln 2.
        assert_abs_diff_eq!(
            massieu_over_kb(1e-9),
            std::f64::consts::LN_2,
            epsilon = 1e-12
        );
    }

    #[test]
    fn massieu_constant_along_isoentrope() {
        let c = consts();
        // Same gap/T ratio at two different scales.
        let a = state(600.0, 1600.0);
        let b = state(150.0, 400.0);
        assert_relative_eq!(a.massieu(), b.massieu(), max_relative = 1e-12);
    }

    #[test]
    fn temperature_from_energy_round_trip() {
        let c = consts();
        let gap = EnergyGap::from_field(1600.0, &c).unwrap();
        // Energy corresponding to x = 1.
        let e = gap.joules() * (oracle_population(1.0) - 0.5);
        assert_relative_eq!(e / gap.joules(), -0.2310585786300049, max_relative = 1e-15);
        let t = temperature_from_energy(e, gap, &c).unwrap();
        let x = gap.joules() / (c.k_b() * t.kelvin());
        assert_relative_eq!(x, 1.0, max_relative = 1e-12);
        // Positive energy means negative temperature.
        let t_neg = temperature_from_energy(-e, gap, &c).unwrap();
        assert!(t_neg.kelvin() < 0.0);
        // Boundaries are excluded.
        assert!(temperature_from_energy(0.5 * gap.joules(), gap, &c).is_err());
        assert!(matches!(
            temperature_from_energy(0.0, gap, &c),
            Err(Error::ZeroEnergy)
        ));
    }

    #[test]
    fn temperature_from_entropy_round_trip() {
        let c = consts();
        let gap = EnergyGap::from_field(500.0, &c).unwrap();
        let x_ref = 3.0f64.ln();
        let s_target = c.k_b() * entropy_over_kb(x_ref);
        let t = temperature_from_entropy(s_target, gap, TemperatureBranch::Positive, &c).unwrap();
        let x = gap.joules() / (c.k_b() * t.kelvin());
        assert_abs_diff_eq!(x, x_ref, epsilon = 1e-12);
        // Negative branch is exactly the mirror temperature.
        let t_neg = temperature_from_entropy(s_target, gap, TemperatureBranch::Negative, &c)
            .unwrap();
        assert_eq!(t_neg.kelvin(), -t.kelvin());
    }

    #[test]
    fn temperature_from_entropy_near_maximal_mixing() {
        let c = consts();
        let gap = EnergyGap::from_field(500.0, &c).unwrap();
        // One representable step below k_B ln 2 still solves to a finite T.
        let s_target = c.max_entropy() * (1.0 - 1e-14);
        let t = temperature_from_entropy(s_target, gap, TemperatureBranch::Positive, &c).unwrap();
        assert!(t.kelvin().is_finite());
        let x = gap.joules() / (c.k_b() * t.kelvin());
        assert_abs_diff_eq!(entropy_over_kb(x), s_target / c.k_b(), epsilon = 1e-12);
        // The boundary itself is out of range.
        assert!(matches!(
            temperature_from_entropy(c.max_entropy(), gap, TemperatureBranch::Positive, &c),
            Err(Error::EntropyOutOfRange { .. })
        ));
        assert!(
            temperature_from_entropy(0.0, gap, TemperatureBranch::Positive, &c).is_err()
        );
    }

    #[test]
    fn gap_from_entropy_closed_form_check() {
        let c = consts();
        let t = Temperature::from_kelvin(600.0).unwrap();
        let s_target = c.k_b() * entropy_over_kb(3.0f64.ln());
        let gap = gap_from_entropy(s_target, t, &c).unwrap();
        assert_relative_eq!(
            gap.joules(),
            3.0f64.ln() * c.k_b() * 600.0,
            max_relative = 1e-12
        );
        // Halving T halves the gap.
        let gap_half =
            gap_from_entropy(s_target, Temperature::from_kelvin(300.0).unwrap(), &c).unwrap();
        assert_relative_eq!(gap_half.joules(), 0.5 * gap.joules(), max_relative = 1e-12);
        // Maximal mixing would need a zero gap.
        assert!(gap_from_entropy(c.max_entropy(), t, &c).is_err());
        // Negative temperature branch not served by this inversion.
        assert!(gap_from_entropy(s_target, Temperature::from_kelvin(-600.0).unwrap(), &c).is_err());
    }

    #[test]
    fn hotness_ordering() {
        let t = |k: f64| Temperature::from_kelvin(k).unwrap();
        assert_eq!(is_hotter(t(600.0), t(300.0)), Ordering::Greater);
        assert_eq!(is_hotter(t(300.0), t(600.0)), Ordering::Less);
        // Negative temperatures are hotter than all positive ones.
        assert_eq!(is_hotter(t(-300.0), t(600.0)), Ordering::Greater);
        // Among negatives, -300 K is hotter than -600 K.
        assert_eq!(is_hotter(t(-300.0), t(-600.0)), Ordering::Greater);
        assert_eq!(is_hotter(t(450.0), t(450.0)), Ordering::Equal);
    }

    #[test]
    fn energy_population_consistency() {
        // |E/gap - (p - 1/2)| stays at machine precision across regimes.
        for &x in &[1e-6, 1e-3, 0.3, 1.0, 3.58, 10.0, 35.0, -0.2, -4.0] {
            let lhs = energy_per_gap(x);
            let rhs = population(x) - 0.5;
            assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-14);
        }
    }

    #[test]
    fn zero_coordinate_is_rejected() {
        let c = consts();
        let gap = EnergyGap::from_field(100.0, &c).unwrap();
        assert!(EquilibriumState::from_coordinate(0.0, gap, &c).is_err());
    }
}
