//! Equilibrium thermodynamics of a two-level system with a variable
//! energy-level gap.
//!
//! The library models the canonical Gibbs states of a two-level system
//! (energy levels at `-gap/2` and `+gap/2`), evaluates quasi-static process
//! legs with exact heat, work, and entropy-generation bookkeeping, and
//! builds Carnot and Otto-like cycles together with the bounds on their
//! net-work to high-temperature-heat ratios.
//!
//! All state properties depend on the single dimensionless coordinate
//! `x = gap / (k_B * T)`; [`equilibrium`] holds the property kernels and
//! their inversions, [`processes`] the finite-leg ledgers, [`cycles`] the
//! cycle builders and bound checks, and [`diagrams`] plot-ready curve
//! sampling with CSV/JSON export.
//!
//! Batch evaluation helpers in [`sweep`] run on rayon when the `parallel`
//! feature (default) is enabled and fall back to sequential iteration
//! otherwise.

pub mod cycles;
pub mod diagrams;
pub mod equilibrium;
mod error;
pub mod processes;
pub mod sweep;

pub use error::{Error, Result};

pub use equilibrium::{
    Constants, EnergyGap, EquilibriumState, PropertySet, Temperature, TemperatureBranch,
};
pub use processes::{Bath, LegResult};
pub use cycles::{
    BoundsReport, CarnotCycle, CarnotSpec, CycleMode, CycleReport, OttoCycle, OttoSpec,
};
pub use diagrams::{CurveSeries, ExportFormat};
