//! Integrated transmission-distribution (T-D) analysis engine for inverter-based
//! DER reactive-power support.
//!
//! The crate is organized around the pipeline used by the studies:
//!
//! * [`netmodel`] / [`netio`] — feeder, transmission-case, DER-fleet and daily-profile
//!   models plus file ingestion and validation.
//! * [`distpf`] — exact unbalanced three-phase radial power flow (backward/forward
//!   sweep); the ground truth for everything else.
//! * [`lindist`] — linearized squared-voltage feeder model with per-line sensitivity
//!   matrices and calibrated constant loss terms.
//! * [`qp`] — dense convex quadratic-program solver (primal active set).
//! * [`dopf`] — the distribution OPF that dispatches inverter var set-points and the
//!   substation secondary voltage to maximize var support to the grid.
//! * [`transpf`] — positive-sequence Newton-Raphson transmission power flow.
//! * [`cosim`] — master-slave boundary iteration between the two solvers, OLTC
//!   control, and time-series simulation.
//! * [`scenarios`] — canned studies: support-curve sweeps, line-outage timelines,
//!   and lambda-V load-margin traces.

pub mod cosim;
pub mod distpf;
pub mod dopf;
pub mod error;
pub mod lindist;
pub mod netio;
pub mod netmodel;
pub mod phase;
pub mod qp;
pub mod scenarios;
pub mod transpf;

pub use error::{Error, Result};
