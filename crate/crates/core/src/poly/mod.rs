//! Dense univariate polynomials over one level of a [`FieldTower`].

mod families;

pub use families::{
    construct_gn, construct_pb_polynomial, construct_theorem2_h, cubic_has_no_roots,
    odd_degree_descent, GnParams,
};

use std::fmt;

use crate::arith;
use crate::error::{domain, structural, Error, Result};
use crate::field::{ElementRepr, FieldElement, FieldTower, Level};

/// Ascending coefficients, trailing zeros stripped; the zero polynomial has
/// no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: u64,
    level: Level,
    coeffs: Vec<u64>,
}

impl Polynomial {
    pub fn level(&self) -> Level {
        self.level
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Coefficient ranks, ascending.
    pub fn coeff_ranks(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeffs(&self) -> Vec<FieldElement> {
        self.coeffs
            .iter()
            .map(|&r| FieldElement::from_parts(self.field, self.level, r))
            .collect()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        FieldElement::from_parts(self.field, self.level, self.coeffs.get(i).copied().unwrap_or(0))
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.degree().map(|d| self.coeff(d))
    }
}

impl fmt::Display for Polynomial {
    /// Coefficient ranks in ascending order, e.g. `[1, 1, 0, 1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

/// Polynomial ring over a chosen level of a tower.
#[derive(Clone, Copy)]
pub struct PolyRing<'t> {
    tower: &'t FieldTower,
    level: Level,
}

impl<'t> PolyRing<'t> {
    pub fn new(tower: &'t FieldTower, level: Level) -> Self {
        Self { tower, level }
    }

    pub fn tower(&self) -> &'t FieldTower {
        self.tower
    }

    pub fn level(&self) -> Level {
        self.level
    }

    fn ar(&self) -> &'t dyn arith::Arith {
        self.tower.arith(self.level)
    }

    fn wrap(&self, mut coeffs: Vec<u64>) -> Polynomial {
        arith::trim(&mut coeffs);
        Polynomial {
            field: self.tower.field_id(self.level),
            level: self.level,
            coeffs,
        }
    }

    fn check(&self, f: &Polynomial) -> Result<()> {
        if f.level != self.level || f.field != self.tower.field_id(self.level) {
            return structural(format!(
                "polynomial over a {}-level field used in a ring over the {} level",
                f.level, self.level
            ));
        }
        Ok(())
    }

    pub fn from_coeffs(&self, coeffs: &[FieldElement]) -> Result<Polynomial> {
        let mut ranks = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            self.tower.check_level(c, self.level)?;
            ranks.push(c.rank());
        }
        Ok(self.wrap(ranks))
    }

    pub fn from_ranks(&self, ranks: &[u64]) -> Result<Polynomial> {
        let size = self.tower.size(self.level);
        if let Some(bad) = ranks.iter().find(|&&r| r >= size) {
            return domain(format!("coefficient rank {bad} out of range"));
        }
        Ok(self.wrap(ranks.to_vec()))
    }

    /// Integer coefficients reduced into `F_p`, ascending.
    pub fn from_ints(&self, coeffs: &[i64]) -> Polynomial {
        let p = self.tower.p() as i64;
        self.wrap(coeffs.iter().map(|c| c.rem_euclid(p) as u64).collect())
    }

    pub fn zero(&self) -> Polynomial {
        self.wrap(Vec::new())
    }

    pub fn one(&self) -> Polynomial {
        self.wrap(vec![1])
    }

    pub fn x(&self) -> Polynomial {
        self.wrap(vec![0, 1])
    }

    pub fn constant(&self, c: &FieldElement) -> Result<Polynomial> {
        self.from_coeffs(std::slice::from_ref(c))
    }

    /// `c · x^degree`.
    pub fn monomial(&self, c: &FieldElement, degree: usize) -> Result<Polynomial> {
        self.tower.check_level(c, self.level)?;
        let mut v = vec![0; degree + 1];
        v[degree] = c.rank();
        Ok(self.wrap(v))
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.wrap(arith::poly_add(self.ar(), &f.coeffs, &g.coeffs)))
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.wrap(arith::poly_sub(self.ar(), &f.coeffs, &g.coeffs)))
    }

    pub fn neg(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check(f)?;
        Ok(self.wrap(arith::poly_neg(self.ar(), &f.coeffs)))
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.wrap(arith::poly_mul(self.ar(), &f.coeffs, &g.coeffs)))
    }

    pub fn scale(&self, f: &Polynomial, c: &FieldElement) -> Result<Polynomial> {
        self.check(f)?;
        self.tower.check_level(c, self.level)?;
        Ok(self.wrap(arith::poly_scale(self.ar(), &f.coeffs, c.rank())))
    }

    pub fn pow(&self, f: &Polynomial, e: u32) -> Result<Polynomial> {
        self.check(f)?;
        let mut acc = vec![1];
        for _ in 0..e {
            acc = arith::poly_mul(self.ar(), &acc, &f.coeffs);
        }
        Ok(self.wrap(acc))
    }

    /// `(quotient, remainder)` with `deg remainder < deg g`.
    pub fn divmod(&self, f: &Polynomial, g: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check(f)?;
        self.check(g)?;
        if g.is_zero() {
            return domain("division by the zero polynomial");
        }
        let (q, r) = arith::poly_divmod(self.ar(), &f.coeffs, &g.coeffs);
        Ok((self.wrap(q), self.wrap(r)))
    }

    pub fn rem(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        Ok(self.divmod(f, g)?.1)
    }

    pub fn monic(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check(f)?;
        Ok(self.wrap(arith::poly_monic(self.ar(), &f.coeffs)))
    }

    /// Monic gcd; `gcd(f, 0) = monic(f)` and `gcd(0, 0) = 0`.
    pub fn gcd(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.wrap(arith::poly_gcd(self.ar(), &f.coeffs, &g.coeffs)))
    }

    /// Horner evaluation at `a`, whose level may lie above the ring's level
    /// (coefficients are embedded first).
    pub fn eval(&self, f: &Polynomial, a: &FieldElement) -> Result<FieldElement> {
        self.check(f)?;
        self.tower.check(a)?;
        if a.level() < self.level {
            return structural(format!(
                "cannot evaluate a {}-level polynomial at a {}-level point",
                self.level,
                a.level()
            ));
        }
        let ar = self.tower.arith(a.level());
        let v = arith::poly_eval(ar, &f.coeffs, a.rank());
        Ok(self.tower.raw(a.level(), v))
    }

    /// Same polynomial with coefficients embedded into `target`.
    pub fn embed(&self, f: &Polynomial, target: Level) -> Result<Polynomial> {
        self.check(f)?;
        if target < self.level {
            return structural("embedding must go up the tower");
        }
        Ok(PolyRing::new(self.tower, target).wrap(f.coeffs.clone()))
    }

    /// Same polynomial over a lower level, if every coefficient lies there.
    pub fn restrict(&self, f: &Polynomial, target: Level) -> Result<Polynomial> {
        self.check(f)?;
        if target > self.level {
            return structural("restriction must go down the tower");
        }
        let size = self.tower.size(target);
        if f.coeffs.iter().any(|&c| c >= size) {
            return domain(format!("coefficients do not lie in the {target} level"));
        }
        Ok(PolyRing::new(self.tower, target).wrap(f.coeffs.clone()))
    }

    /// Deterministic irreducibility test over the ring's coefficient field.
    pub fn is_irreducible(&self, f: &Polynomial) -> Result<bool> {
        self.check(f)?;
        if f.degree().unwrap_or(0) == 0 {
            return domain("irreducibility is defined for degree >= 1");
        }
        let size = self.tower.size(self.level);
        Ok(arith::is_irreducible(self.ar(), &f.coeffs, size))
    }

    /// Irreducibility over the subfield `F_{p^sub_degree}`, which must
    /// contain every coefficient.
    pub fn is_irreducible_over_subfield(&self, f: &Polynomial, sub_degree: u32) -> Result<bool> {
        self.check(f)?;
        if f.degree().unwrap_or(0) == 0 {
            return domain("irreducibility is defined for degree >= 1");
        }
        for c in f.coeffs() {
            if !self.tower.is_in_subfield(&c, sub_degree)? {
                return domain(format!("coefficient outside F_p^{sub_degree}"));
            }
        }
        let sub_size = self.tower.p().pow(sub_degree);
        Ok(arith::is_irreducible(self.ar(), &f.coeffs, sub_size))
    }

    /// Roots of `f` in the ring's coefficient field, by exhaustive scan.
    pub fn roots(&self, f: &Polynomial) -> Result<Vec<FieldElement>> {
        self.check(f)?;
        crate::error::check_bound("root scan", self.tower.size(self.level) as u128, 1 << 24)?;
        let ar = self.ar();
        Ok((0..self.tower.size(self.level))
            .filter(|&x| arith::poly_eval(ar, &f.coeffs, x) == 0)
            .map(|x| self.tower.raw(self.level, x))
            .collect())
    }

    /// Human-readable form such as `x^3 + 2x^2 + (z+1)x + 1`, where `z` is the
    /// generator of the coefficient level over the level below.
    pub fn format(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let t = self.tower;
        let coeff_text = |c: &FieldElement| -> String {
            if self.level == Level::Prime {
                return c.rank().to_string();
            }
            let parts: Vec<String> = t
                .coeffs(c)
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, d)| !d.is_zero())
                .map(|(i, d)| {
                    let d = if d.rank() < t.p() { d.rank().to_string() } else { format!("({})", t.format(d)) };
                    match (i, d.as_str()) {
                        (0, _) => d,
                        (1, "1") => "z".into(),
                        (1, _) => format!("{d}z"),
                        (_, "1") => format!("z^{i}"),
                        _ => format!("{d}z^{i}"),
                    }
                })
                .collect();
            if parts.len() > 1 {
                format!("({})", parts.join("+"))
            } else {
                parts.join("")
            }
        };
        let mut terms = Vec::new();
        for (i, c) in f.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let c = coeff_text(c);
            terms.push(match (i, c.as_str()) {
                (0, _) => c,
                (1, "1") => "x".into(),
                (1, _) => format!("{c}x"),
                (_, "1") => format!("x^{i}"),
                _ => format!("{c}x^{i}"),
            });
        }
        terms.join(" + ")
    }

    pub fn to_repr(&self, f: &Polynomial) -> Result<Vec<ElementRepr>> {
        self.check(f)?;
        Ok(f.coeffs().iter().map(|c| self.tower.to_repr(c)).collect())
    }

    pub fn from_repr(&self, coeffs: &[ElementRepr]) -> Result<Polynomial> {
        let elems = coeffs
            .iter()
            .map(|r| self.tower.from_repr(self.level, r))
            .collect::<Result<Vec<_>>>()?;
        self.from_coeffs(&elems)
    }
}

/// Minimal polynomial of a top-level element over the middle level, as the
/// product of `x - b^(Q^i)` over the distinct conjugates (`Q = q^2`).
pub fn minimal_polynomial(tower: &FieldTower, b: &FieldElement) -> Result<Polynomial> {
    tower.check_level(b, Level::Top)?;
    let qq = tower.size(Level::Middle) as u128;
    let top = PolyRing::new(tower, Level::Top);
    let mut conj = *b;
    let mut product = top.one();
    loop {
        let factor = top.from_coeffs(&[tower.neg(&conj)?, tower.one(Level::Top)])?;
        product = top.mul(&product, &factor)?;
        conj = tower.pow(&conj, qq)?;
        if conj == *b {
            break;
        }
        if product.degree() > Some(tower.m() as usize) {
            return Err(Error::Internal("conjugate orbit longer than the extension degree".into()));
        }
    }
    top.restrict(&product, Level::Middle)
        .map_err(|_| Error::Internal("minimal polynomial left the middle level".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn readable_format() {
        let t = FieldTower::base(3, 1).unwrap();
        let r = PolyRing::new(&t, Level::Middle);
        assert_eq!(r.format(&r.from_ints(&[1, 2, 1, 1])), "x^3 + x^2 + 2x + 1");
        let z = t.adjoined_root(Level::Middle);
        let f = r.from_coeffs(&[t.add(&z, &t.one(Level::Middle)).unwrap(), z, t.zero(Level::Middle), t.one(Level::Middle)]).unwrap();
        assert_eq!(r.format(&f), "x^3 + zx + (z+1)");
        assert_eq!(r.format(&r.zero()), "0");
    }

    #[test]
    fn divmod_and_gcd_over_f2() {
        let t = FieldTower::base(2, 1).unwrap();
        let r = PolyRing::new(&t, Level::Prime);
        let (q, rem) = r.divmod(&r.from_ints(&[1, 0, 1]), &r.from_ints(&[1, 1])).unwrap();
        assert_eq!(q, r.from_ints(&[1, 1]));
        assert!(rem.is_zero());
        let g = r.gcd(&r.from_ints(&[1, 1, 0, 1]), &r.from_ints(&[0, 1, 1])).unwrap();
        assert_eq!(g, r.one());
        assert!(r.divmod(&r.one(), &r.zero()).is_err());
    }

    #[test]
    fn gcd_with_zero_is_monic() {
        let t = FieldTower::base(5, 1).unwrap();
        let r = PolyRing::new(&t, Level::Prime);
        let f = r.from_ints(&[1, 2, 3]);
        assert_eq!(r.gcd(&f, &r.zero()).unwrap(), r.monic(&f).unwrap());
        assert!(r.gcd(&r.zero(), &r.zero()).unwrap().is_zero());
    }

    #[test]
    fn evaluation() {
        let t = FieldTower::base(2, 1).unwrap();
        let r = PolyRing::new(&t, Level::Prime);
        let f = r.from_ints(&[1, 1, 0, 1]);
        assert!(r.eval(&f, &t.zero(Level::Prime)).unwrap().is_one());
        let delta = t.adjoined_root(Level::Middle);
        assert_eq!(r.eval(&f, &delta).unwrap(), delta);
        assert!(r.eval(&r.zero(), &delta).unwrap().is_zero());
    }

    #[test]
    fn irreducibility_examples() {
        let t = FieldTower::base(2, 1).unwrap();
        let fp = PolyRing::new(&t, Level::Prime);
        assert!(fp.is_irreducible(&fp.from_ints(&[1, 1, 0, 1])).unwrap());
        let fm = PolyRing::new(&t, Level::Middle);
        assert!(!fm.is_irreducible(&fm.from_ints(&[1, 1, 1])).unwrap());
        for c in t.elements(Level::Middle) {
            let lin = fm.from_coeffs(&[t.neg(&c).unwrap(), t.one(Level::Middle)]).unwrap();
            assert!(fm.is_irreducible(&lin).unwrap());
        }
        assert!(fm.is_irreducible(&fm.one()).is_err());
    }

    #[test]
    fn minimal_polynomials() {
        let t = FieldTower::new(2, 1, 3).unwrap();
        let y = t.adjoined_root(Level::Top);
        let h = minimal_polynomial(&t, &y).unwrap();
        let modulus = PolyRing::new(&t, Level::Middle).from_coeffs(&t.top_modulus()).unwrap();
        assert_eq!(h, modulus);
        let c = t.embed(&t.adjoined_root(Level::Middle), Level::Top).unwrap();
        let lin = minimal_polynomial(&t, &c).unwrap();
        assert_eq!(lin.degree(), Some(1));
        assert_eq!(lin.coeff(0), t.neg(&t.adjoined_root(Level::Middle)).unwrap());
    }
}
