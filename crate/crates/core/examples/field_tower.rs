//! Arithmetic in the tower F_p ⊂ F_{q^2} ⊂ F_{q^{2m}}.

use flagspace::{FieldTower, Level, Result};

fn main() -> Result<()> {
    // q = 4, m = 3: F_2 ⊂ F_16 ⊂ F_4096
    let t = FieldTower::for_q(4, 3)?;
    let top: Vec<String> = t.top_modulus().iter().map(|c| t.format(c)).collect();
    println!("base modulus {:?}, top modulus {}", t.base_modulus(), top.join(" "));

    let z = t.adjoined_root(Level::Middle);
    let y = t.adjoined_root(Level::Top);
    let prod = t.mul(&t.embed(&z, Level::Top)?, &y)?;
    println!("z * y = {}", t.format(&prod));
    println!("(z*y)^-1 = {}", t.format(&t.inv(&prod)?));

    let g = t.primitive_element(Level::Top);
    println!("primitive element {} of order {}", t.format(&g), t.element_order(&g)?);
    println!("Frobenius x -> x^q of z: {}", t.format(&t.frobenius_q(&z)?));
    println!("Tr(z) = {}, N(z) = {}", t.format(&t.trace_to_prime(&z)?), t.format(&t.norm_to_prime(&z)?));

    let delta = t.find_element_of_order(Level::Middle, 5)?;
    println!("element of order q+1 = 5 in F_16: {}", t.format(&delta));
    Ok(())
}
