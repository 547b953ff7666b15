//! gcd(d^t (q+1), q^(i d^(t-1)) - 1) and ord_N(q) on a few parameters.

use flagspace::num_theory::{multiplicative_order, odd_divisors_above_one, GcdIdentityInstance};
use flagspace::Result;

fn main() -> Result<()> {
    for q in [2u64, 5, 8, 17] {
        for d in odd_divisors_above_one(q + 1) {
            for t in 1..=2 {
                let inst = GcdIdentityInstance::new(q, d, t, 2)?;
                let n = inst.modulus()?;
                let (lhs, rhs) = inst.sides()?;
                println!("q={q:<2} d={d} t={t}: N={n:<5} ord_N(q)={:<4} gcd={lhs} expected={rhs}", multiplicative_order(q, n)?);
            }
        }
    }
    Ok(())
}
