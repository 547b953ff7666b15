//! The polynomials g_n, n = d^t u, for several q.

use flagspace::poly::{construct_gn, GnParams};
use flagspace::{FieldTower, Level, PolyRing, Result};

fn main() -> Result<()> {
    for (q, d, u, t) in [(2, 3, 1, 1), (2, 3, 1, 2), (4, 5, 1, 1), (5, 3, 1, 1), (8, 3, 1, 1), (8, 9, 3, 1)] {
        let tower = FieldTower::for_q(q, 1)?;
        let delta = tower.find_element_of_order(Level::Middle, q + 1)?;
        let params = GnParams::new(q, d, u, t)?;
        let g = construct_gn(&tower, params, &delta)?;
        let ring = PolyRing::new(&tower, Level::Middle);
        println!("q={q} n={}: {}", params.n().unwrap_or(0), ring.format(&g));
    }
    Ok(())
}
