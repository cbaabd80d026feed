//! Builds the built-in bands, a custom band from JSON, and normalizes a band
//! whose reference CDF is not uniform.

use cursed_knight::band::{BandSpec, CdfCurve, DistributionBand, PiecewiseLinear};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bands = [
        DistributionBand::contamination(0.75)?,
        DistributionBand::triangle(2.0)?,
        DistributionBand::epsilon(0.2)?,
        DistributionBand::sine_wave(),
        DistributionBand::kinked_linear(),
    ];
    println!("{:<22} {:>8} {:>8} {:>8} {:>8}", "band", "F_l(.3)", "F_h(.3)", "F_h^-1", "F_l^-1");
    for b in &bands {
        println!(
            "{:<22} {:>8.4} {:>8.4} {:>8.4} {:>8.4}",
            b.label(),
            b.lower().eval(0.3),
            b.upper().eval(0.3),
            b.upper_median(),
            b.lower_median()
        );
    }

    let spec: BandSpec = serde_json::from_str(
        r#"{"custom": {"lower": [[0, 0], [0.5, 0.3], [1, 1]],
                       "center": [[0, 0], [1, 1]],
                       "upper": [[0, 0], [0.5, 0.7], [1, 1]]}}"#,
    )?;
    let custom = spec.build()?;
    println!("custom band: medians [{:.3}, {:.3}]", custom.upper_median(), custom.lower_median());

    // A band around a non-uniform reference CDF is expressed in quantile
    // space before solving.
    let center = CdfCurve::PiecewiseLinear(PiecewiseLinear::tabulate(|t| t * t, 17));
    let lower = PiecewiseLinear::tabulate(|t| 0.8 * center.eval(t), 257);
    let upper = PiecewiseLinear::tabulate(|t| (1.2 * center.eval(t)).min(0.2 + 0.8 * center.eval(t)), 257);
    let raw = DistributionBand::new(CdfCurve::PiecewiseLinear(lower), center, CdfCurve::PiecewiseLinear(upper))?;
    let normalized = raw.normalize()?;
    println!(
        "normalized: F_l(0.5) = {:.4}, F_h(0.5) = {:.4}",
        normalized.lower().eval(0.5),
        normalized.upper().eval(0.5)
    );
    Ok(())
}
