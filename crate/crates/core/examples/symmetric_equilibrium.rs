//! Symmetric thresholds of the parametric families, and a pair of nested
//! bands where more ambiguity lowers the threshold.

use cursed_knight::band::Family;
use cursed_knight::equilibria::{ambiguous_ckne_threshold, comparative_statics_check, symmetric_ckne_threshold};
use cursed_knight::DistributionBand;

fn main() -> cursed_knight::Result<()> {
    let families = [
        (Family::Contamination, [0.0, 0.25, 0.5, 0.75, 0.95]),
        (Family::Triangle, [1.0, 1.5, 2.0, 5.0, 20.0]),
        (Family::Epsilon, [0.0, 0.1, 0.2, 0.3, 0.45]),
    ];
    println!("{:<12} {:>6} {:>10} {:>10}", "family", "param", "cursed", "ambiguous");
    for (family, params) in families {
        for p in params {
            let band = DistributionBand::parametrized(family, p)?;
            let (t, _) = symmetric_ckne_threshold(&band)?;
            let (v, _) = ambiguous_ckne_threshold(&band)?;
            println!("{:<12} {p:>6} {t:>10.6} {v:>10.6}", family.name());
        }
    }

    let report = comparative_statics_check(&DistributionBand::kinked_linear(), &DistributionBand::steep_root())?;
    let e = report.ckne;
    println!("inner band threshold {:.5}, enclosing band threshold {:.5}", e.threshold_inner, e.threshold_outer);
    Ok(())
}
