//! The orbit of ℓ_b under C as a spread of F_{q^6}, q = 3.

use flagspace::spread::{is_desarguesian, spread_from_polynomial, stabilizer_order_in_c, SpreadOutcome};
use flagspace::{FieldTower, Level, PolyRing, Result};

fn main() -> Result<()> {
    let base = FieldTower::base(3, 1)?;
    let h = PolyRing::new(&base, Level::Middle).from_ints(&[1, 2, 1, 1]);
    let (tower, outcome) = spread_from_polynomial(&base, &h)?;
    let SpreadOutcome::Spread(s) = outcome else {
        panic!("not a spread: {:?}", outcome.failure());
    };
    let c = s.subgroup();
    println!("|C| = {}, members = {}, stabilizer of ℓ_b in C = {}", c.order, s.len(), stabilizer_order_in_c(&s));
    println!("Desarguesian: {}", is_desarguesian(&s)?);
    let first: Vec<String> = s.base_line().elements(&tower)?.iter().take(4).map(|x| tower.format(x)).collect();
    println!("ℓ_b starts {}", first.join(" "));
    Ok(())
}
