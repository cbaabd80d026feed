//! All cut-off equilibria of a band with several asymmetric solutions.

use cursed_knight::equilibria::solve_all_ckne;
use cursed_knight::DistributionBand;

fn main() -> cursed_knight::Result<()> {
    let band = DistributionBand::sine_wave();
    let result = solve_all_ckne(&band, 512)?;
    println!("band {}, F_l^-1(1/2) = {:.4}", band.label(), band.lower_median());
    for (p, r) in result.profiles.iter().zip(&result.residuals) {
        println!("({:.6}, {:.6})  residual {r:.1e}", p.0, p.1);
    }
    for w in &result.warnings {
        println!("warning: {w}");
    }
    Ok(())
}
