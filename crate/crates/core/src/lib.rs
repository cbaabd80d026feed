//! Two-player trading game in which players may be cursed (ignore the link
//! between the opponent's offer and type) and face Knightian uncertainty
//! about the type distribution, modelled as a band of CDFs.
//!
//! The crate covers the band model, interim value functionals, best
//! responses, equilibrium solvers, welfare of partially cursed players,
//! independent oracles and a command-line front end.

pub mod band;
pub mod best_response;
pub mod cli;
pub mod equilibria;
pub mod error;
pub mod oracle;
pub mod roots;
pub mod valuation;
pub mod welfare;

pub use band::{BandSpec, CdfCurve, Construction, DistributionBand, Envelope, Family};
pub use best_response::{best_response, BestResponse};
pub use equilibria::{EquilibriumResult, Method, SolutionConcept};
pub use error::{Error, Result};
pub use valuation::{Action, Concept, CutoffStrategy, ValueQuery};
pub use welfare::{ScanReport, WelfareReport};
