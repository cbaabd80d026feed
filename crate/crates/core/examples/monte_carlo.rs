//! Plays the partially cursed equilibrium many times and compares player
//! 1's winning rate with the exact ex-ante utility.

use cursed_knight::equilibria::partial_quantiles;
use cursed_knight::oracle::{simulate_game, GeneralStrategy};
use cursed_knight::welfare::actual_utility;
use cursed_knight::CdfCurve;

fn main() -> cursed_knight::Result<()> {
    let (c1, c2) = (0.6, 0.9);
    let (t1, t2) = partial_quantiles(c1, c2)?.expect("trade happens");
    let s1 = GeneralStrategy::cutoff(t1)?;
    let s2 = GeneralStrategy::cutoff(t2)?;
    let exact = actual_utility(c1, c2)?.0;
    for games in [10_000, 100_000, 1_000_000] {
        let sim = simulate_game(&s1, &s2, &CdfCurve::Identity, games, 7)?;
        println!(
            "{games:>8} games: {:.5} ± {:.5} (exact {exact:.5}, {:.2} SE)",
            sim.mean,
            sim.std_error,
            (sim.mean - exact) / sim.std_error
        );
    }
    Ok(())
}
