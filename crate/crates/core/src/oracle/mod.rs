//! Independent checks: exact values against arbitrary strategies, brute-force
//! minimisation over sampled CDFs, grid best responses, equilibrium
//! certificates, quadrature and Monte Carlo play.

mod general;
mod grid;
mod quadrature;
mod sample;
mod sim;
mod strategy;

pub use general::general_values;
pub use grid::{
    as_threshold, grid_best_response, grid_weak_best_response, verify_equilibrium, Certificate, CERTIFY_TOL, MIN_GRID,
    TIE_TOL,
};
pub use quadrature::{actual_by_quadrature, ex_ante_value, perceived_by_quadrature};
pub use sample::{bruteforce_min_value, BandSample};
pub use sim::{simulate_game, SimulationResult, BATCH};
pub use strategy::{GeneralStrategy, Segment};
