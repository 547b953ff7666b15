//! Closed-form permutation criteria next to exhaustive scans.

use flagspace::perm::{is_permutation_brute, lemma22_build_f, lemma22_predicate, lemma23_predicate, lemma23_quadrinomial, PolynomialMap};
use flagspace::{FieldTower, Level, PolyRing, Result};

fn main() -> Result<()> {
    let t = FieldTower::for_q(4, 1)?;
    let delta = t.find_element_of_order(Level::Middle, 5)?;
    for d in 1..=5 {
        let predicted = lemma22_predicate(&t, d, 0, &delta, &delta)?;
        let f = lemma22_build_f(&t, d, 0, &delta, &delta)?;
        println!("q=4 d={d}: criterion {predicted:<5} scan {}", is_permutation_brute(&t, Level::Middle, &f)?);
    }

    let t = FieldTower::for_q(9, 1)?;
    let ring = PolyRing::new(&t, Level::Middle);
    let fq = t.subfield_elements(Level::Middle, t.k())?;
    let (mut hits, mut total) = (0, 0);
    for a in fq.iter().skip(1) {
        for c in fq.iter().skip(1) {
            total += 1;
            if lemma23_predicate(&t, a, c)? {
                let f = PolynomialMap::new(ring, lemma23_quadrinomial(&t, a, c)?);
                assert!(is_permutation_brute(&t, Level::Middle, &f)?);
                hits += 1;
            }
        }
    }
    println!("q=9: {hits} of {total} quadrinomials certified and confirmed by scan");
    Ok(())
}
