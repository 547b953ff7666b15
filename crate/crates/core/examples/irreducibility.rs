//! Deterministic irreducibility over F_{q^2}, and the odd-degree descent to F_q.

use flagspace::poly::odd_degree_descent;
use flagspace::{FieldTower, Level, PolyRing, Result};

fn main() -> Result<()> {
    let t = FieldTower::base(3, 1)?;
    let r = PolyRing::new(&t, Level::Middle);
    for coeffs in [[1, 2, 0, 1], [2, 2, 0, 1], [1, 1, 0, 1], [2, 1, 1, 1]] {
        let f = r.from_ints(&coeffs);
        println!(
            "{:<20} irreducible over F_9: {:<5}  (descent test: {})",
            r.format(&f),
            r.is_irreducible(&f)?,
            odd_degree_descent(&t, &f)?
        );
    }
    let f = r.from_ints(&[1, 0, 1]);
    println!("{} factors over F_9 with roots {:?}", r.format(&f), r.roots(&f)?.iter().map(|x| t.format(x)).collect::<Vec<_>>());
    Ok(())
}
