//! Arithmetic in GF(p^t) with a fixed, reproducible element ordering.
//!
//! Elements are polynomials over GF(p) of degree below `t`, reduced modulo the
//! lexicographically smallest monic irreducible of degree `t`. The element with
//! coefficient vector `(c_0, .., c_{t-1})` has index `c_0 + c_1 p + .. + c_{t-1} p^{t-1}`,
//! so index 0 is the zero element and, for prime fields, index `i` is the residue `i`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Error, Result};

/// Largest field order accepted by [`FieldSpec::new`].
pub const MAX_FIELD_ORDER: u64 = 1 << 32;

/// A constructed finite field GF(p^t).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
    t: u32,
    q: u64,
    // Monic, low degree first, length t + 1.
    irreducible: Vec<u64>,
}

/// An element of a [`FieldSpec`], stored as its `t` coefficients (constant term first).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^t` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut t = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        t += 1;
    }
    (rest == 1).then_some((p, t))
}

// Polynomials over GF(p), low degree first, no trailing zeros (zero is empty).
fn trim(poly: &mut Vec<u64>) {
    while poly.last() == Some(&0) {
        poly.pop();
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Remainder of `a` modulo the nonzero polynomial `b`.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = r[r.len() - 1] * lead_inv % p;
        for (i, &bc) in b.iter().enumerate() {
            let idx = shift + i;
            r[idx] = (r[idx] + p - factor * bc % p) % p;
        }
        trim(&mut r);
    }
    r
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p digits of `index`.
fn monic_from_index(mut index: u64, deg: u32, p: u64) -> Vec<u64> {
    let mut poly = Vec::with_capacity(deg as usize + 1);
    for _ in 0..deg {
        poly.push(index % p);
        index /= p;
    }
    poly.push(1);
    poly
}

/// Irreducibility by trial division against every monic polynomial of degree `1..=deg/2`.
pub(crate) fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = (poly.len() - 1) as u32;
    for d in 1..=deg / 2 {
        for idx in 0..p.pow(d) {
            let divisor = monic_from_index(idx, d, p);
            if poly_rem(poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(p^t) using the lexicographically smallest monic irreducible of degree `t`.
    pub fn new(p: u64, t: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(invalid!("{p} is not prime"));
        }
        if t == 0 {
            return Err(invalid!("extension degree must be at least 1"));
        }
        let q = p
            .checked_pow(t)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| invalid!("field order {p}^{t} exceeds {MAX_FIELD_ORDER}"))?;
        let irreducible = (0..p.pow(t))
            .map(|idx| monic_from_index(idx, t, p))
            .find(|poly| is_irreducible(poly, p))
            .expect("every degree has a monic irreducible over GF(p)");
        Ok(Self { p, t, q, irreducible })
    }

    /// Builds GF(q) for a prime power `q`.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, t) = prime_power(q).ok_or_else(|| invalid!("{q} is not a prime power"))?;
        Self::new(p, t)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.t
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn irreducible(&self) -> &[u64] {
        &self.irreducible
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// The element `a_index` of the canonical enumeration.
    ///
    /// # Panics
    /// If `index >= q`.
    pub fn element(&self, index: u64) -> FieldElement {
        assert!(index < self.q, "element index {index} out of range for GF({})", self.q);
        let mut rest = index;
        let coeffs = (0..self.t)
            .map(|_| {
                let c = rest % self.p;
                rest /= self.p;
                c
            })
            .collect();
        FieldElement { coeffs }
    }

    /// Builds an element from coefficients, constant term first.
    pub fn from_coeffs(&self, coeffs: Vec<u64>) -> Result<FieldElement> {
        let e = FieldElement { coeffs };
        self.check(&e)?;
        Ok(e)
    }

    /// Position of `e` in the canonical enumeration.
    pub fn index_of(&self, e: &FieldElement) -> Result<u64> {
        self.check(e)?;
        Ok(e.coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c))
    }

    /// All `q` elements in canonical order, starting with zero.
    pub fn order_list(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|i| self.element(i))
    }

    fn check(&self, e: &FieldElement) -> Result<()> {
        if e.coeffs.len() != self.t as usize {
            return Err(invalid!(
                "element has {} coefficients, GF({}) needs {}",
                e.coeffs.len(),
                self.q,
                self.t
            ));
        }
        if let Some(&c) = e.coeffs.iter().find(|&&c| c >= self.p) {
            return Err(invalid!("coefficient {c} out of range for characteristic {}", self.p));
        }
        Ok(())
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.add_unchecked(x, y))
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        self.check(x)?;
        self.check(y)?;
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&a, &b)| (a + self.p - b) % self.p)
            .collect();
        Ok(FieldElement { coeffs })
    }

    pub fn neg(&self, x: &FieldElement) -> Result<FieldElement> {
        self.sub(&self.zero(), x)
    }

    /// Product reduced modulo the defining polynomial.
    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub fn pow(&self, x: &FieldElement, mut exp: u64) -> Result<FieldElement> {
        self.check(x)?;
        let mut acc = self.one();
        let mut base = x.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            base = self.mul_unchecked(&base, &base);
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative inverse via `x^(q-2)`.
    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement> {
        self.check(x)?;
        if x.coeffs.iter().all(|&c| c == 0) {
            return Err(invalid!("zero has no inverse"));
        }
        self.pow(x, self.q - 2)
    }

    /// Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
    pub fn quad_char(&self, b: &FieldElement) -> Result<i8> {
        if self.p == 2 {
            return Err(Error::UnsupportedField { p: self.p });
        }
        self.check(b)?;
        if b.coeffs.iter().all(|&c| c == 0) {
            return Ok(0);
        }
        let r = self.pow(b, (self.q - 1) / 2)?;
        if r == self.one() {
            Ok(1)
        } else if r == self.neg(&self.one())? {
            Ok(-1)
        } else {
            Err(Error::InternalAssertion(alloc::format!(
                "b^((q-1)/2) is neither 1 nor -1 in GF({})",
                self.q
            )))
        }
    }

    /// `quad_char` of every element, indexed by canonical position.
    pub fn quad_char_table(&self) -> Result<Vec<i8>> {
        self.order_list().map(|e| self.quad_char(&e)).collect()
    }

    /// Index of `a_i - a_j`, computed digit by digit.
    pub fn sub_index(&self, i: u64, j: u64) -> u64 {
        let (mut i, mut j) = (i, j);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.t {
            let d = (i % self.p + self.p - j % self.p) % self.p;
            out += d * place;
            place *= self.p;
            i /= self.p;
            j /= self.p;
        }
        out
    }

    fn add_unchecked(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&a, &b)| (a + b) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    fn mul_unchecked(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let t = self.t as usize;
        let p = self.p;
        let mut prod = vec![0u64; 2 * t];
        for (i, &a) in x.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        let mut coeffs = if t == 1 {
            vec![prod[0]]
        } else {
            poly_rem(&prod, &self.irreducible, p)
        };
        coeffs.resize(t, 0);
        FieldElement { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn squares_by_enumeration(f: &FieldSpec) -> Vec<bool> {
        let mut is_square = vec![false; f.order() as usize];
        for x in f.order_list().skip(1) {
            let sq = f.mul(&x, &x).unwrap();
            is_square[f.index_of(&sq).unwrap() as usize] = true;
        }
        is_square
    }

    #[test]
    fn prime_field_enumeration_is_identity() {
        let f = FieldSpec::new(3, 1).unwrap();
        let idx: Vec<u64> = f.order_list().map(|e| e.coeffs()[0]).collect();
        assert_eq!(idx, [0, 1, 2]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(FieldSpec::new(4, 1), Err(Error::InvalidInput(_))));
        assert!(matches!(FieldSpec::new(3, 0), Err(Error::InvalidInput(_))));
        assert!(matches!(FieldSpec::new(2, 40), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn gf9_uses_x2_plus_1() {
        // Monic quadratics over GF(3) with no root, checked by evaluation.
        let irreducible: Vec<(u64, u64)> = (0..9u64)
            .map(|i| (i / 3, i % 3))
            .filter(|&(b, c)| (0..3u64).all(|x| (x * x + b * x + c) % 3 != 0))
            .collect();
        assert_eq!(irreducible, [(0, 1), (1, 2), (2, 2)]);
        let f = FieldSpec::new(3, 2).unwrap();
        assert_eq!(f.irreducible(), &[1, 0, 1]);
        let elems: Vec<_> = f.order_list().collect();
        assert_eq!(elems.len(), 9);
        let x = f.from_coeffs(vec![0, 1]).unwrap();
        assert_eq!(f.mul(&x, &x).unwrap(), f.from_coeffs(vec![2, 0]).unwrap());
    }

    #[test]
    fn gf27_irreducible_has_no_roots() {
        let f = FieldSpec::new(3, 3).unwrap();
        assert_eq!(f.irreducible(), &[1, 2, 0, 1]);
    }

    #[test]
    fn mul_examples() {
        let f = FieldSpec::new(3, 1).unwrap();
        assert_eq!(f.mul(&f.element(2), &f.element(2)).unwrap(), f.element(1));
        for field in [FieldSpec::new(5, 1).unwrap(), FieldSpec::new(3, 2).unwrap()] {
            for y in field.order_list() {
                assert_eq!(field.mul(&field.zero(), &y).unwrap(), field.zero());
            }
        }
    }

    #[test]
    fn mul_rejects_out_of_range_coefficients() {
        let f = FieldSpec::new(3, 2).unwrap();
        let bad = FieldElement { coeffs: vec![3, 0] };
        assert!(matches!(f.mul(&bad, &f.one()), Err(Error::InvalidInput(_))));
        let short = FieldElement { coeffs: vec![1] };
        assert!(matches!(f.mul(&short, &f.one()), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn quad_char_examples() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f7.quad_char(&f7.zero()).unwrap(), 0);
        assert_eq!(f7.quad_char(&f7.element(2)).unwrap(), 1);
        assert_eq!(f7.quad_char(&f7.element(3)).unwrap(), -1);
        for q in [7, 11, 19, 23, 27] {
            let f = FieldSpec::with_order(q).unwrap();
            let minus_one = f.neg(&f.one()).unwrap();
            assert_eq!(f.quad_char(&minus_one).unwrap(), -1, "q = {q}");
        }
        let f2 = FieldSpec::new(2, 3).unwrap();
        assert_eq!(f2.quad_char(&f2.one()), Err(Error::UnsupportedField { p: 2 }));
    }

    #[test]
    fn character_matches_enumeration_and_is_multiplicative() {
        for q in [3u64, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49] {
            let f = FieldSpec::with_order(q).unwrap();
            let table = f.quad_char_table().unwrap();
            let squares = squares_by_enumeration(&f);
            for i in 1..q as usize {
                assert_eq!(table[i] == 1, squares[i], "q = {q}, index {i}");
            }
            let plus = table.iter().filter(|&&c| c == 1).count() as u64;
            let minus = table.iter().filter(|&&c| c == -1).count() as u64;
            assert_eq!((plus, minus), ((q - 1) / 2, (q - 1) / 2));
            for i in 1..q {
                for j in 1..q {
                    let prod = f.mul(&f.element(i), &f.element(j)).unwrap();
                    let k = f.index_of(&prod).unwrap() as usize;
                    assert_eq!(table[k], table[i as usize] * table[j as usize]);
                }
            }
        }
    }

    #[test]
    fn field_axioms_and_inverses() {
        for (p, t) in [(3, 2), (5, 2), (3, 3), (7, 1), (2, 4)] {
            let f = FieldSpec::new(p, t).unwrap();
            let elems: Vec<_> = f.order_list().collect();
            for x in elems.iter().skip(1) {
                let inv = f.inv(x).unwrap();
                assert_eq!(f.mul(x, &inv).unwrap(), f.one());
            }
            for (i, x) in elems.iter().enumerate().step_by(3) {
                for y in elems.iter().step_by(2) {
                    let z = &elems[(i * 7 + 1) % elems.len()];
                    let xy_z = f.mul(&f.mul(x, y).unwrap(), z).unwrap();
                    let x_yz = f.mul(x, &f.mul(y, z).unwrap()).unwrap();
                    assert_eq!(xy_z, x_yz);
                    let lhs = f.mul(x, &f.add(y, z).unwrap()).unwrap();
                    let rhs = f.add(&f.mul(x, y).unwrap(), &f.mul(x, z).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn sub_index_matches_element_subtraction() {
        let f = FieldSpec::new(5, 2).unwrap();
        for i in 0..25 {
            for j in 0..25 {
                let d = f.sub(&f.element(i), &f.element(j)).unwrap();
                assert_eq!(f.sub_index(i, j), f.index_of(&d).unwrap());
            }
        }
    }

    #[test]
    fn creation_is_deterministic() {
        assert_eq!(FieldSpec::new(5, 3).unwrap(), FieldSpec::new(5, 3).unwrap());
    }

    #[test]
    fn prime_power_splitting() {
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(1024), Some((2, 10)));
    }
}
