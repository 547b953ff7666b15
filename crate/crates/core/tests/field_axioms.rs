//! Field axioms checked exhaustively on every level of at most 256 elements,
//! and by random sampling on larger towers.

use flagspace::{FieldElement, FieldTower, Level};
use proptest::prelude::*;

const LEVELS: [Level; 3] = [Level::Prime, Level::Middle, Level::Top];

fn small_towers() -> Vec<FieldTower> {
    [(2, 1, 1), (2, 1, 2), (2, 1, 3), (2, 2, 1), (2, 2, 2), (3, 1, 1), (3, 1, 2), (5, 1, 1), (7, 1, 1), (13, 1, 1)]
        .into_iter()
        .map(|(p, k, m)| FieldTower::new(p, k, m).unwrap())
        .collect()
}

#[test]
fn pairwise_axioms_exhaustive() {
    for t in small_towers() {
        for level in LEVELS {
            if t.size(level) > 256 {
                continue;
            }
            let els: Vec<FieldElement> = t.elements(level).collect();
            let zero = t.zero(level);
            let one = t.one(level);
            for a in &els {
                assert_eq!(t.add(a, &zero).unwrap(), *a);
                assert_eq!(t.mul(a, &one).unwrap(), *a);
                assert!(t.add(a, &t.neg(a).unwrap()).unwrap().is_zero());
                if !a.is_zero() {
                    assert!(t.mul(a, &t.inv(a).unwrap()).unwrap().is_one());
                    assert!(t.pow(a, t.group_order(level) as u128).unwrap().is_one());
                }
                for b in &els {
                    assert_eq!(t.add(a, b).unwrap(), t.add(b, a).unwrap());
                    assert_eq!(t.mul(a, b).unwrap(), t.mul(b, a).unwrap());
                    let ab = t.mul(a, b).unwrap();
                    assert_eq!(ab.is_zero(), a.is_zero() || b.is_zero());
                    if !b.is_zero() {
                        assert_eq!(t.mul(&t.div(a, b).unwrap(), b).unwrap(), *a);
                    }
                    // Frobenius is a ring homomorphism
                    let fa = t.frobenius_p(a).unwrap();
                    let fb = t.frobenius_p(b).unwrap();
                    assert_eq!(t.frobenius_p(&t.add(a, b).unwrap()).unwrap(), t.add(&fa, &fb).unwrap());
                    assert_eq!(t.frobenius_p(&ab).unwrap(), t.mul(&fa, &fb).unwrap());
                }
            }
        }
    }
}

#[test]
fn triple_axioms_exhaustive_up_to_64() {
    for t in small_towers() {
        for level in LEVELS {
            if t.size(level) > 64 {
                continue;
            }
            let els: Vec<FieldElement> = t.elements(level).collect();
            for a in &els {
                for b in &els {
                    let ab = t.mul(a, b).unwrap();
                    let a_plus_b = t.add(a, b).unwrap();
                    for c in &els {
                        assert_eq!(t.mul(&ab, c).unwrap(), t.mul(a, &t.mul(b, c).unwrap()).unwrap());
                        assert_eq!(t.add(&a_plus_b, c).unwrap(), t.add(a, &t.add(b, c).unwrap()).unwrap());
                        assert_eq!(
                            t.mul(a, &t.add(b, c).unwrap()).unwrap(),
                            t.add(&ab, &t.mul(a, c).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn multiplicative_groups_are_cyclic() {
    for t in small_towers() {
        for level in LEVELS {
            if t.size(level) > 256 {
                continue;
            }
            let g = t.primitive_element(level);
            let mut seen = std::collections::HashSet::new();
            let mut x = t.one(level);
            for _ in 0..t.group_order(level) {
                seen.insert(x.rank());
                x = t.mul(&x, &g).unwrap();
            }
            assert_eq!(seen.len() as u64, t.group_order(level));
            assert!(x.is_one());
        }
    }
}

#[test]
fn embeddings_are_homomorphisms() {
    for t in small_towers() {
        if t.size(Level::Top) > 4096 {
            continue;
        }
        for (lo, hi) in [(Level::Prime, Level::Middle), (Level::Middle, Level::Top)] {
            let els: Vec<FieldElement> = t.elements(lo).collect();
            for a in &els {
                let ea = t.embed(a, hi).unwrap();
                assert_eq!(t.restrict(&ea, lo).unwrap(), *a);
                for b in &els {
                    let eb = t.embed(b, hi).unwrap();
                    assert_eq!(t.embed(&t.add(a, b).unwrap(), hi).unwrap(), t.add(&ea, &eb).unwrap());
                    assert_eq!(t.embed(&t.mul(a, b).unwrap(), hi).unwrap(), t.mul(&ea, &eb).unwrap());
                }
            }
        }
    }
}

#[test]
fn subfield_membership_matches_fixed_points() {
    let t = FieldTower::new(2, 2, 2).unwrap(); // F_2 ⊂ F_16 ⊂ F_256
    let fq: Vec<_> = t.subfield_elements(Level::Middle, 2).unwrap();
    assert_eq!(fq.len(), 4);
    let fixed = t.elements(Level::Middle).filter(|x| t.pow(x, 4).unwrap() == *x).count();
    assert_eq!(fixed, 4);
    for x in t.elements(Level::Top) {
        let in_middle = t.pow(&x, 16).unwrap() == x;
        assert_eq!(t.restrict(&x, Level::Middle).is_ok(), in_middle);
    }
}

fn big_towers() -> Vec<FieldTower> {
    [(2, 3, 3), (3, 2, 2), (13, 1, 3), (5, 1, 3), (2, 1, 9)]
        .into_iter()
        .map(|(p, k, m)| FieldTower::new(p, k, m).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws_on_large_towers(idx in 0usize..5, ra in any::<u64>(), rb in any::<u64>(), rc in any::<u64>()) {
        let t = &big_towers()[idx];
        let n = t.size(Level::Top);
        let (a, b, c) = (
            t.element(Level::Top, ra % n).unwrap(),
            t.element(Level::Top, rb % n).unwrap(),
            t.element(Level::Top, rc % n).unwrap(),
        );
        prop_assert_eq!(t.mul(&t.mul(&a, &b).unwrap(), &c).unwrap(), t.mul(&a, &t.mul(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(
            t.mul(&a, &t.add(&b, &c).unwrap()).unwrap(),
            t.add(&t.mul(&a, &b).unwrap(), &t.mul(&a, &c).unwrap()).unwrap()
        );
        if !a.is_zero() {
            prop_assert!(t.mul(&a, &t.inv(&a).unwrap()).unwrap().is_one());
        }
        // x -> x^q has order 2m on the top level
        let mut x = a;
        for _ in 0..2 * t.m() {
            x = t.frobenius_q(&x).unwrap();
        }
        prop_assert_eq!(x, a);
    }

    #[test]
    fn exponent_laws(idx in 0usize..5, ra in any::<u64>(), e1 in 0u128..5000, e2 in 0u128..5000) {
        let t = &big_towers()[idx];
        let a = t.element(Level::Top, ra % t.size(Level::Top)).unwrap();
        let lhs = t.pow(&a, e1 + e2).unwrap();
        let rhs = t.mul(&t.pow(&a, e1).unwrap(), &t.pow(&a, e2).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
