//! Certifies an equilibrium in which player 1 offers only on an interval of
//! middle types, then cross-checks a worst-case value by sampling the band.

use cursed_knight::oracle::{bruteforce_min_value, verify_equilibrium, GeneralStrategy};
use cursed_knight::valuation::{value, Action, Concept, CutoffStrategy, ValueQuery};
use cursed_knight::DistributionBand;

fn main() -> cursed_knight::Result<()> {
    let band = DistributionBand::contamination(0.75)?;
    let hi = 0.9;
    let lo = band.upper().inv(band.lower().eval(hi));
    let s1 = GeneralStrategy::intervals(vec![(lo, hi)])?;
    let s2 = GeneralStrategy::intervals(vec![(lo, lo)])?;
    let concepts = (Concept::MaxminRational, Concept::MaxminRational);
    let cert = verify_equilibrium((&s1, &s2), concepts, &band, 10_001)?;
    println!("player 1 offers on [{lo:.4}, {hi}], player 2 only at {lo:.4}");
    println!("max improvement {:?}, certified {}", cert.max_improvement, cert.certified);

    let q = ValueQuery::new(&band, 0.4, Action::Trade, CutoffStrategy::new(0.7)?)?;
    for concept in [Concept::MaxminRational, Concept::AmbiguousCursed] {
        let exact = value(concept, &q)?;
        let sampled = bruteforce_min_value(concept, &q, 2000, 8, 1)?;
        println!("{concept}: exact {exact:.6}, sampled minimum {sampled:.6}");
    }
    Ok(())
}
