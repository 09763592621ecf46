//! Exact and certified high-precision evaluation of the circle
//! approximations found in Indian mathematical texts: Śulvasūtra
//! constructions, Jaina chord and segment rules, Siddhānta sine tables and
//! polygon doubling, and the Kerala end-corrected series for π.
//!
//! Every method is measured against an independent reference in [`oracle`],
//! and [`harness`] assembles the comparisons into reports.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod harness;
pub mod jaina;
pub mod kerala;
pub mod oracle;
pub mod siddhanta;
pub mod sulva;

pub use error::{Error, Result};
pub use exactnum::{ExactRational, HpDecimal, QuadSurd, RootMode, SurdRoot};
