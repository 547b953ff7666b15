//! The ratio condition on x^m h(x^(q-1))^(m/d), with a failing control.

use flagspace::perm::{condition_one_check, ConditionOneInstance, ConditionOneWitness};
use flagspace::{FieldTower, Level, PolyRing, Result};

fn main() -> Result<()> {
    let t = FieldTower::base(2, 1)?;
    let r = PolyRing::new(&t, Level::Middle);
    for (coeffs, m) in [(vec![1, 1, 0, 1], 3), (vec![1, 1, 1], 2)] {
        let h = r.from_ints(&coeffs);
        let rep = condition_one_check(&t, &ConditionOneInstance::new(h.clone(), m)?)?;
        print!("h = {}, m = {m}: {}", r.format(&h), rep.holds);
        match rep.witness {
            Some(ConditionOneWitness::ZeroValue { x }) => println!(" (phi({}) = 0)", t.format(&x)),
            Some(ConditionOneWitness::Collision { x, y }) => println!(" (x={}, y={})", t.format(&x), t.format(&y)),
            None => println!(),
        }
    }
    Ok(())
}
