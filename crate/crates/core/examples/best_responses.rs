//! Best-response thresholds against a cut-off opponent, per concept.

use cursed_knight::valuation::Concept;
use cursed_knight::{best_response, DistributionBand};

fn main() -> cursed_knight::Result<()> {
    let band = DistributionBand::triangle(2.0)?;
    let concepts = [
        Concept::Rational,
        Concept::Cursed,
        Concept::Partial(0.7),
        Concept::MaxminRational,
        Concept::MaxminCursedUnderFstar,
        Concept::AmbiguousCursed,
    ];
    print!("{:>6}", "hat");
    for c in concepts {
        print!(" {:>12}", c.to_string().chars().take(12).collect::<String>());
    }
    println!();
    for i in 1..=10 {
        let hat = i as f64 / 10.0;
        print!("{hat:>6.1}");
        for c in concepts {
            print!(" {:>12.5}", best_response(c, hat, &band)?.threshold);
        }
        println!();
    }
    Ok(())
}
