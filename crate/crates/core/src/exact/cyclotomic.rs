//! Exact elements of cyclotomic fields ℚ(ζ_m).
//!
//! A value is a polynomial in ζ_m of degree < φ(m), reduced modulo the m-th
//! cyclotomic polynomial.  The power basis 1, ζ, …, ζ^{φ(m)−1} makes the
//! representation canonical within a fixed conductor; arithmetic between
//! different conductors embeds both sides into ℚ(ζ_lcm) first.  Complex
//! conjugation is the Galois automorphism ζ ↦ ζ^{−1}.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::matrix::Matrix;
use super::rational::Rational;
use super::scalar::Field;

/// Euler totient by trial-division factoring; conductors are desk-scale.
pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut phi = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            phi -= phi / p;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

fn poly_trim(v: &mut Vec<Rational>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

/// Exact division of `num` by monic `den`; panics if the division is not exact
/// (never happens for products of cyclotomic polynomials).
fn poly_div_exact(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    assert!(den.last().map_or(false, |c| c.is_one()), "divisor must be monic");
    let mut rem: Vec<Rational> = num.to_vec();
    poly_trim(&mut rem);
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        assert!(rem.is_empty(), "inexact polynomial division");
        return vec![];
    }
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    while rem.len() >= den.len() {
        let k = rem.len() - 1 - dd;
        let c = rem.last().unwrap().clone();
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            let t = rem[k + i].clone() - c.clone() * d.clone();
            rem[k + i] = t;
        }
        poly_trim(&mut rem);
    }
    assert!(rem.is_empty(), "inexact polynomial division");
    quot
}

/// Monic coefficients of the m-th cyclotomic polynomial, low degree first.
/// Computed via Φ_m = (x^m − 1) / Π_{d|m, d<m} Φ_d and cached per conductor.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<Rational>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&m) {
        return hit.clone();
    }
    // x^m − 1
    let mut num = vec![Rational::zero(); m as usize + 1];
    num[0] = -Rational::one();
    num[m as usize] = Rational::one();
    let mut poly = num;
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            poly = poly_div_exact(&poly, &phi_d);
        }
    }
    let arc = Arc::new(poly);
    cache.lock().unwrap().insert(m, arc.clone());
    arc
}

/// Exact element of ℚ(ζ_m), canonically reduced.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    /// Length φ(conductor); coefficient of ζ^i at index i.
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Reduces an arbitrary polynomial in ζ_m to the canonical representative
    /// modulo the m-th cyclotomic polynomial.
    pub fn reduce(poly: &[Rational], m: u32) -> Self {
        assert!(m >= 1, "conductor must be positive");
        // Fold exponents mod m first (ζ^m = 1), then take the remainder.
        let mut folded = vec![Rational::zero(); m as usize];
        for (i, c) in poly.iter().enumerate() {
            if !c.is_zero() {
                let k = i % m as usize;
                folded[k] = folded[k].clone() + c.clone();
            }
        }
        let modulus = cyclotomic_polynomial(m);
        let dd = modulus.len() - 1;
        poly_trim(&mut folded);
        while folded.len() > dd {
            let k = folded.len() - 1 - dd;
            let c = folded.last().unwrap().clone();
            for (i, d) in modulus.iter().enumerate() {
                let t = folded[k + i].clone() - c.clone() * d.clone();
                folded[k + i] = t;
            }
            poly_trim(&mut folded);
        }
        folded.resize(dd.max(1), Rational::zero());
        if m == 1 {
            folded.truncate(1);
        }
        Cyclotomic { conductor: m, coeffs: folded }
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![q] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// ζ_m^k.
    pub fn root_of_unity(m: u32, k: i64) -> Self {
        let kk = k.rem_euclid(m as i64) as usize;
        let mut poly = vec![Rational::zero(); kk + 1];
        poly[kk] = Rational::one();
        Self::reduce(&poly, m)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Canonical representative in ℚ(ζ_target); `target` must be a multiple
    /// of the current conductor (ζ_m = ζ_target^{target/m}).
    pub fn embed(&self, target: u32) -> Self {
        assert_eq!(target % self.conductor, 0, "embedding needs conductor | target");
        if target == self.conductor {
            return self.clone();
        }
        let stride = (target / self.conductor) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * stride + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * stride] = c.clone();
        }
        Self::reduce(&poly, target)
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        let m = self.conductor.lcm(&other.conductor);
        (self.embed(m), other.embed(m))
    }

    /// Image under the Galois automorphism ζ_m ↦ ζ_m^{−1} (complex
    /// conjugation on every embedding).
    pub fn conjugate(&self) -> Self {
        let m = self.conductor;
        let mut poly = vec![Rational::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let k = (m as usize - i) % m as usize;
                poly[k] = poly[k].clone() + c.clone();
            }
        }
        Self::reduce(&poly, m)
    }

    /// The rational value, if the element lies in ℚ.
    pub fn try_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The integer value, if the element is a rational integer.
    pub fn try_integer(&self) -> Option<num_bigint::BigInt> {
        let q = self.try_rational()?;
        if q.is_integer() {
            Some(q.to_integer())
        } else {
            None
        }
    }

    /// Multiplicative inverse via the multiplication-by-self matrix in the
    /// power basis; panics on zero.
    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        if let Some(q) = self.try_rational() {
            return Cyclotomic {
                conductor: self.conductor,
                coeffs: {
                    let mut v = vec![Rational::zero(); self.coeffs.len()];
                    v[0] = Rational::one() / q;
                    v
                },
            };
        }
        let m = self.conductor;
        let n = self.coeffs.len();
        // Column j = coefficients of self · ζ^j.
        let mut mat = Matrix::<Rational>::zeros(n, n);
        for j in 0..n {
            let mut shifted = vec![Rational::zero(); j + n];
            for (i, c) in self.coeffs.iter().enumerate() {
                shifted[i + j] = c.clone();
            }
            let col = Self::reduce(&shifted, m);
            for i in 0..n {
                mat.set(i, j, col.coeffs[i].clone());
            }
        }
        let mut rhs = vec![Rational::zero(); n];
        rhs[0] = Rational::one();
        let sol = mat.solve(&rhs).expect("nonzero cyclotomic must be invertible");
        Cyclotomic { conductor: m, coeffs: sol.particular }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.unify(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Self) -> Self {
        let (mut a, b) = self.unify(&rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x = x.clone() + y;
        }
        a
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Self {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = self.unify(&rhs);
        let mut poly = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] = poly[i + j].clone() + x.clone() * y.clone();
                }
            }
        }
        Self::reduce(&poly, a.conductor)
    }
}

impl Div for Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse()
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
    fn is_one(&self) -> bool {
        self.try_rational().map_or(false, |q| q.is_one())
    }
}

impl Field for Cyclotomic {
    fn from_integer(n: i64) -> Self {
        Self::from_int(n)
    }

    fn entry_size(&self) -> usize {
        self.coeffs.iter().map(Field::entry_size).sum()
    }

    fn inv(&self) -> Self {
        self.inverse()
    }
}

impl fmt::Display for Cyclotomic {
    /// `z{m}` denotes ζ_m, e.g. `1/2-3*z12^5`; plain rationals print bare.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c < &Rational::zero() { "-" } else { "+" };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{sign}")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "z{}", self.conductor)?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn zeta(m: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(m, k)
    }

    #[test]
    fn defining_relations() {
        // ζ4² = −1
        assert_eq!(zeta(4, 2), Cyclotomic::from_int(-1));
        // ζ3² = −1 − ζ3
        let expect = Cyclotomic::from_int(-1) - zeta(3, 1);
        assert_eq!(zeta(3, 2), expect);
        // φ(6) = 2 coefficients; ζ6³ = −1
        assert_eq!(zeta(6, 1).coeffs().len(), 2);
        assert_eq!(zeta(6, 3), Cyclotomic::from_int(-1));
    }

    #[test]
    fn conjugation_examples() {
        // conjugate(ζ4) = −ζ4
        assert_eq!(zeta(4, 1).conjugate(), -zeta(4, 1));
        // rationals are fixed
        let r = Cyclotomic::from_rational(rat(-7, 3));
        assert_eq!(r.conjugate(), r);
    }

    #[test]
    fn cross_conductor_equality() {
        // ζ6 viewed inside ℚ(ζ12) equals ζ12²
        assert_eq!(zeta(6, 1), zeta(12, 2));
        assert_eq!(zeta(2, 1), Cyclotomic::from_int(-1));
    }

    #[test]
    fn inverse_is_exact() {
        let x = zeta(5, 1) + Cyclotomic::from_int(2);
        let y = x.clone().inverse();
        assert!( (x * y).is_one());
    }

    #[test]
    fn display_round_trip_shape() {
        let x = zeta(12, 5) * Cyclotomic::from_rational(rat(-3, 2)) + Cyclotomic::from_int(1);
        let s = x.to_string();
        assert!(s.contains("z12"), "unexpected display {s}");
    }
}
