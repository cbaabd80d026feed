//! Writes a CSV of the symmetric threshold as the contamination level varies,
//! the same table `cursed-knight sweep` prints.

use cursed_knight::cli::sig12;
use cursed_knight::equilibria::symmetric_ckne_threshold;
use cursed_knight::DistributionBand;

fn main() -> cursed_knight::Result<()> {
    println!("param,threshold");
    for i in 0..=20 {
        let kappa = 0.95 * i as f64 / 20.0;
        let (t, _) = symmetric_ckne_threshold(&DistributionBand::contamination(kappa)?)?;
        println!("{},{}", sig12(kappa), sig12(t));
    }
    Ok(())
}
