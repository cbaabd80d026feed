//! Interim values of offering and keeping under each way of forming beliefs.

use cursed_knight::valuation::{value, Action, Concept, CutoffStrategy, ValueQuery};
use cursed_knight::DistributionBand;

fn main() -> cursed_knight::Result<()> {
    let band = DistributionBand::contamination(0.5)?;
    let opponent = CutoffStrategy::new(0.7)?;
    let concepts = [
        Concept::Rational,
        Concept::Cursed,
        Concept::Partial(0.6),
        Concept::MaxminRational,
        Concept::MaxminCursedUnderFstar,
        Concept::AmbiguousCursed,
    ];
    println!("opponent offers below 0.7, band {}", band.label());
    println!("{:<28} {:>6} {:>8} {:>8}", "concept", "type", "offer", "keep");
    for t in [0.2, 0.5, 0.8] {
        for c in concepts {
            let q = ValueQuery::new(&band, t, Action::Trade, opponent)?;
            let offer = value(c, &q)?;
            let keep = value(c, &q.with_action(Action::NoTrade))?;
            println!("{:<28} {t:>6} {offer:>8.4} {keep:>8.4}", c.to_string());
        }
    }
    Ok(())
}
