//! x^p + ... + x - 1 over F_{p^2}: irreducible, ratio condition with m = p,
//! and for p = 3 the spread of F_{3^6}.

use flagspace::perm::{condition_one_check, ConditionOneInstance};
use flagspace::poly::construct_pb_polynomial;
use flagspace::spread::spread_from_polynomial;
use flagspace::{FieldTower, Level, PolyRing, Result};

fn main() -> Result<()> {
    for p in [3u64, 5, 7] {
        let t = FieldTower::base(p, 1)?;
        let h = construct_pb_polynomial(&t)?;
        let ring = PolyRing::new(&t, Level::Middle);
        let cond = condition_one_check(&t, &ConditionOneInstance::new(h.clone(), p as u32)?)?;
        println!("p={p}: {} irreducible={} condition={}", ring.format(&h), ring.is_irreducible(&h)?, cond.holds);
        if p == 3 {
            let (_, outcome) = spread_from_polynomial(&t, &h)?;
            match outcome.spread() {
                Some(s) => println!("  spread of F_729: {} members", s.len()),
                None => println!("  orbit of F_729 is not a spread"),
            }
        }
    }
    Ok(())
}
