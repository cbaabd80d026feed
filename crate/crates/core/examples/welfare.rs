//! Actual and perceived utilities across cursedness profiles, plus the
//! lattice scan of their qualitative properties.

use cursed_knight::welfare::{welfare_property_scan, welfare_report, WelfareProperty};

fn main() -> cursed_knight::Result<()> {
    println!("{:>5} {:>5} {:>9} {:>9} {:>9} {:>9}", "chi1", "chi2", "U1", "U2", "V1", "V2");
    for (c1, c2) in [(0.6, 0.9), (0.9, 0.6), (0.8, 0.8), (1.0, 0.3), (0.4, 0.5)] {
        let r = welfare_report(c1, c2)?;
        println!("{c1:>5} {c2:>5} {:>9.5} {:>9.5} {:>9.5} {:>9.5}", r.u1, r.u2, r.v1, r.v2);
    }
    let scan = welfare_property_scan(101);
    println!("{} non-trivial cells on a {}x{} lattice", scan.non_trivial_cells, scan.lattice, scan.lattice);
    let properties = [
        WelfareProperty::ConstantSum,
        WelfareProperty::ActualDecreasingOwn,
        WelfareProperty::ActualIncreasingOpponent,
        WelfareProperty::LessCursedGains,
        WelfareProperty::PerceivedAboveActual,
        WelfareProperty::PerceivedAboveHalf,
        WelfareProperty::PerceivedIncreasingOwn,
        WelfareProperty::H0Positive,
        WelfareProperty::MoreCursedPerceivesLess,
    ];
    for p in properties {
        println!("  {p:?}: {} flagged", scan.count(p));
    }
    Ok(())
}
