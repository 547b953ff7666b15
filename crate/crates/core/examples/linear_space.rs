//! Linear space from the 21-member spread of F_64: design check, a corrupted
//! copy, and the flag orbit.

use flagspace::linear_space::{andre_bruck_bose, flag_transitivity_witness, verify_design, DesignMode};
use flagspace::spread::spread_from_polynomial;
use flagspace::{FieldTower, Level, PolyRing, Result};

fn main() -> Result<()> {
    let base = FieldTower::base(2, 1)?;
    let h = PolyRing::new(&base, Level::Middle).from_ints(&[1, 1, 0, 1]);
    let s = spread_from_polynomial(&base, &h)?.1.spread().expect("spread");
    let ls = andre_bruck_bose(&s)?;
    let full = verify_design(&ls, DesignMode::Full)?;
    println!("v={} k={} lines={} r={:?} design={}", full.v, full.k, full.line_count, full.replication, full.is_design);
    let broken = verify_design(&ls.without_line(0)?, DesignMode::Full)?;
    println!("one line removed: design={} witness={:?}", broken.is_design, broken.witness);
    let orbit = flag_transitivity_witness(&ls, &s)?;
    println!("flag orbit {} of {}", orbit.orbit, orbit.flag_count);
    Ok(())
}
