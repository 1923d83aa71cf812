//! Exact scalars: roots of unity as rational exponents, and the cyclotomic
//! numbers they generate.
//!
//! Every verification in this crate is an exact equality test, so scalars are
//! never floats: a root of unity `e^{2πiq}` is stored as the reduced rational
//! `q` mod 1 ([`PhaseExp`]), and general coefficients live in a fixed
//! cyclotomic field `Q(ζ_M)` represented canonically modulo the M-th
//! cyclotomic polynomial ([`Cyclotomic`]).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

use num::{BigInt, BigRational, One, Signed, Zero};
use once_cell::sync::Lazy;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ScalarError;

/// A root of unity `e^{2πiq}`, stored as the reduced exponent `q` with
/// `0 <= q < 1`. The group law is exponent addition mod 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PhaseExp {
    value: BigRational,
}

impl PhaseExp {
    pub fn zero() -> Self {
        PhaseExp {
            value: BigRational::zero(),
        }
    }

    /// Exponent `num/den` reduced into `[0, 1)`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator in phase exponent");
        Self::from_ratio(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_ratio(q: BigRational) -> Self {
        let mut value = q.fract();
        if value.is_negative() {
            value += BigRational::one();
        }
        PhaseExp { value }
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Exponent addition mod 1; multiplies the represented roots of unity.
    pub fn mul(&self, other: &PhaseExp) -> PhaseExp {
        Self::from_ratio(&self.value + &other.value)
    }

    /// Exponent negation mod 1; inverts the represented root of unity.
    pub fn inv(&self) -> PhaseExp {
        Self::from_ratio(-&self.value)
    }

    pub fn div(&self, other: &PhaseExp) -> PhaseExp {
        self.mul(&other.inv())
    }

    pub fn pow(&self, k: i64) -> PhaseExp {
        Self::from_ratio(&self.value * BigRational::from(BigInt::from(k)))
    }

    /// Smallest M with ζ_M^k representing this phase, i.e. the exponent
    /// denominator.
    pub fn order(&self) -> u64 {
        let den = self.value.denom();
        u64::try_from(den).expect("phase denominator exceeds u64")
    }
}

impl fmt::Display for PhaseExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.value.numer(), self.value.denom())
    }
}

impl fmt::Debug for PhaseExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for PhaseExp {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PhaseExp {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_ratio(&s)
            .map(PhaseExp::from_ratio)
            .ok_or_else(|| D::Error::custom(format!("invalid phase exponent {s:?}")))
    }
}

pub(crate) fn parse_ratio(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

fn ratio_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(m: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
    out.sort_unstable();
    out
}

/// Exact division of polynomials over Q; panics on a non-exact division,
/// which cannot happen for cyclotomic factors of x^m - 1.
fn poly_div_exact(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dc) in den.iter().enumerate() {
            let t = &c * dc;
            rem[i - dd + j] -= t;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "non-exact polynomial division");
    quot
}

static CYCLO_POLY_CACHE: Lazy<Mutex<BTreeMap<u64, Vec<BigRational>>>> =
    Lazy::new(|| Mutex::new(BTreeMap::new()));

/// Coefficients of the M-th cyclotomic polynomial, low degree first, monic of
/// degree φ(M). Computed once per modulus by exact division of x^M - 1.
pub fn cyclotomic_polynomial(m: u64) -> Vec<BigRational> {
    assert!(m >= 1);
    if let Some(p) = CYCLO_POLY_CACHE.lock().unwrap().get(&m) {
        return p.clone();
    }
    let poly = if m == 1 {
        // x - 1
        vec![-BigRational::one(), BigRational::one()]
    } else {
        let mut num = vec![BigRational::zero(); m as usize + 1];
        num[0] = -BigRational::one();
        num[m as usize] = BigRational::one();
        let mut poly = num;
        for d in divisors(m) {
            if d < m {
                poly = poly_div_exact(&poly, &cyclotomic_polynomial(d));
            }
        }
        poly
    };
    assert_eq!(poly.len() as u64 - 1, euler_phi(m));
    CYCLO_POLY_CACHE
        .lock()
        .unwrap()
        .insert(m, poly.clone());
    poly
}

/// An element of `Q(ζ_M)` in canonical form: a polynomial in ζ_M of degree
/// `< φ(M)`, fully reduced modulo the M-th cyclotomic polynomial. Equality is
/// coefficientwise after promotion to a common modulus.
#[derive(Clone)]
pub struct Cyclotomic {
    modulus: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(modulus: u64) -> Self {
        Cyclotomic {
            modulus,
            coeffs: vec![BigRational::zero(); euler_phi(modulus) as usize],
        }
    }

    pub fn one(modulus: u64) -> Self {
        Self::from_rational(BigRational::one(), modulus)
    }

    pub fn from_rational(q: BigRational, modulus: u64) -> Self {
        let mut c = Self::zero(modulus);
        if !c.coeffs.is_empty() {
            c.coeffs[0] = q;
        } else {
            // modulus 1 or 2 still has φ >= 1, so this is unreachable
            unreachable!("cyclotomic field of dimension zero");
        }
        c
    }

    pub fn from_integer(n: i64, modulus: u64) -> Self {
        Self::from_rational(BigRational::from(BigInt::from(n)), modulus)
    }

    fn from_poly(mut poly: Vec<BigRational>, modulus: u64) -> Self {
        reduce_mod_cyclotomic(&mut poly, modulus);
        let dim = euler_phi(modulus) as usize;
        poly.resize(dim, BigRational::zero());
        Cyclotomic {
            modulus,
            coeffs: poly,
        }
    }

    /// The root of unity e^{2πiq} as an element of Q(ζ_M). The exponent
    /// denominator must divide M.
    pub fn from_phase(p: &PhaseExp, modulus: u64) -> Self {
        let den = p.order();
        assert!(
            modulus % den == 0,
            "phase denominator {den} does not divide modulus {modulus}"
        );
        let num = p.value().numer();
        let k = (num * BigInt::from(modulus / den)) % BigInt::from(modulus);
        let k = usize::try_from(&k).expect("reduced exponent fits usize");
        let mut poly = vec![BigRational::zero(); k + 1];
        poly[k] = BigRational::one();
        Self::from_poly(poly, modulus)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Rewrites the element in `Q(ζ_new)`; `new` must be a multiple of the
    /// current modulus.
    pub fn promote(&self, new: u64) -> Cyclotomic {
        if new == self.modulus {
            return self.clone();
        }
        assert!(
            new % self.modulus == 0,
            "cannot promote modulus {} into {}",
            self.modulus,
            new
        );
        let step = (new / self.modulus) as usize;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[i * step] = c.clone();
            }
        }
        Self::from_poly(poly, new)
    }

    fn common(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        if self.modulus == other.modulus {
            (self.clone(), other.clone())
        } else {
            let m = num::integer::lcm(self.modulus, other.modulus);
            (self.promote(m), other.promote(m))
        }
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.common(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.common(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a
    }

    pub fn negate(&self) -> Cyclotomic {
        let mut a = self.clone();
        for c in a.coeffs.iter_mut() {
            *c = -c.clone();
        }
        a
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(other);
        let mut poly = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                poly[i + j] += x * y;
            }
        }
        Self::from_poly(poly, a.modulus)
    }

    /// Multiplication by a root of unity: a monomial shift, cheaper than a
    /// full product.
    pub fn mul_phase(&self, p: &PhaseExp) -> Cyclotomic {
        if p.is_zero() {
            return self.clone();
        }
        let den = p.order();
        let m = if self.modulus % den == 0 {
            self.modulus
        } else {
            num::integer::lcm(self.modulus, den)
        };
        let a = self.promote(m);
        let num = p.value().numer();
        let k = (num * BigInt::from(m / den)) % BigInt::from(m);
        let k = usize::try_from(&k).expect("reduced exponent fits usize");
        let mut poly = vec![BigRational::zero(); a.coeffs.len() + k];
        for (i, c) in a.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[i + k] = c.clone();
            }
        }
        Self::from_poly(poly, m)
    }

    pub fn scale(&self, q: &BigRational) -> Cyclotomic {
        let mut a = self.clone();
        for c in a.coeffs.iter_mut() {
            *c = &*c * q;
        }
        a
    }

    pub fn scalar_divide(&self, n: i64) -> Result<Cyclotomic, ScalarError> {
        if n == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self.scale(&BigRational::new(BigInt::one(), BigInt::from(n))))
    }

    /// Image under ζ ↦ ζ⁻¹, i.e. complex conjugation.
    pub fn conjugate(&self) -> Cyclotomic {
        let m = self.modulus as usize;
        let mut poly = vec![BigRational::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(m - i) % m] += c;
            }
        }
        Self::from_poly(poly, self.modulus)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// Q[x]/(Φ_M).
    pub fn inverse(&self) -> Result<Cyclotomic, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let phi = cyclotomic_polynomial(self.modulus);
        let inv_poly = poly_mod_inverse(&self.coeffs, &phi)?;
        Ok(Self::from_poly(inv_poly, self.modulus))
    }

    pub fn div(&self, other: &Cyclotomic) -> Result<Cyclotomic, ScalarError> {
        let (a, b) = self.common(other);
        Ok(a.mul(&b.inverse()?))
    }

    /// If the element is a pure root of unity ζ_M^k, returns its exponent.
    pub fn as_phase(&self) -> Option<PhaseExp> {
        for k in 0..self.modulus {
            let p = PhaseExp::from_ratio(BigRational::new(
                BigInt::from(k),
                BigInt::from(self.modulus),
            ));
            if *self == Cyclotomic::from_phase(&p, self.modulus) {
                return Some(p);
            }
        }
        None
    }

    /// If the element is rational, returns it.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.modulus == other.modulus {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = self.common(other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*z{}^{i}", self.modulus)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            modulus: u64,
            coeffs: Vec<&'a str>,
        }
        let strings: Vec<String> = self.coeffs.iter().map(ratio_string).collect();
        let repr = Repr {
            modulus: self.modulus,
            coeffs: strings.iter().map(String::as_str).collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            modulus: u64,
            coeffs: Vec<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.modulus == 0 {
            return Err(D::Error::custom("cyclotomic modulus must be positive"));
        }
        let dim = euler_phi(repr.modulus) as usize;
        if repr.coeffs.len() != dim {
            return Err(D::Error::custom(format!(
                "expected {dim} coefficients for modulus {}, got {}",
                repr.modulus,
                repr.coeffs.len()
            )));
        }
        let mut coeffs = Vec::with_capacity(dim);
        for s in &repr.coeffs {
            coeffs.push(
                parse_ratio(s)
                    .ok_or_else(|| D::Error::custom(format!("invalid coefficient {s:?}")))?,
            );
        }
        Ok(Cyclotomic {
            modulus: repr.modulus,
            coeffs,
        })
    }
}

fn reduce_mod_cyclotomic(poly: &mut Vec<BigRational>, modulus: u64) {
    let phi = cyclotomic_polynomial(modulus);
    let dim = phi.len() - 1;
    if poly.len() <= dim {
        return;
    }
    for i in (dim..poly.len()).rev() {
        let c = poly[i].clone();
        if c.is_zero() {
            continue;
        }
        poly[i] = BigRational::zero();
        for (j, pc) in phi.iter().take(dim).enumerate() {
            let t = &c * pc;
            poly[i - dim + j] -= t;
        }
    }
    poly.truncate(dim.max(1));
}

/// Bezout inverse of `a` modulo the monic polynomial `m`, both over Q.
fn poly_mod_inverse(
    a: &[BigRational],
    m: &[BigRational],
) -> Result<Vec<BigRational>, ScalarError> {
    fn deg(p: &[BigRational]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
        while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }
    // invariant: r0 = t0 * a (mod m), r1 = t1 * a (mod m)
    let mut r0 = m.to_vec();
    let mut r1 = trim(a.to_vec());
    let mut t0 = vec![BigRational::zero()];
    let mut t1 = vec![BigRational::one()];
    while deg(&r1).is_some() {
        let d1 = deg(&r1).unwrap();
        let Some(d0) = deg(&r0) else { break };
        if d0 < d1 {
            std::mem::swap(&mut r0, &mut r1);
            std::mem::swap(&mut t0, &mut t1);
            continue;
        }
        // one long-division step: r0 -= (lead0/lead1) x^{d0-d1} * r1
        let factor = &r0[d0] / &r1[d1];
        let shift = d0 - d1;
        for i in 0..=d1 {
            let t = &factor * &r1[i];
            r0[i + shift] -= t;
        }
        if t0.len() < t1.len() + shift {
            t0.resize(t1.len() + shift, BigRational::zero());
        }
        for i in 0..t1.len() {
            let t = &factor * &t1[i];
            t0[i + shift] -= t;
        }
        r0 = trim(r0);
        t0 = trim(t0);
        if deg(&r0).map_or(true, |d| deg(&r1).is_some_and(|e| d < e)) {
            std::mem::swap(&mut r0, &mut r1);
            std::mem::swap(&mut t0, &mut t1);
        }
    }
    // gcd is now in r0 and must be a nonzero constant
    let d = deg(&r0).ok_or(ScalarError::DivisionByZero)?;
    if d != 0 {
        return Err(ScalarError::NotInvertible);
    }
    let lead = r0[0].clone();
    Ok(t0.into_iter().map(|c| c / &lead).collect())
}

/// lcm of a set of moduli with the guaranteed factors of a verification
/// context: every cocycle denominator, the group orders, and 8.
pub fn context_modulus<I: IntoIterator<Item = u64>>(parts: I) -> u64 {
    let mut m = 8;
    for p in parts {
        if p > 0 {
            m = num::integer::lcm(m, p);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phase_addition_wraps_mod_one() {
        assert!(PhaseExp::new(1, 2).mul(&PhaseExp::new(1, 2)).is_zero());
        assert!(PhaseExp::new(1, 8).mul(&PhaseExp::new(7, 8)).is_zero());
        assert_eq!(
            PhaseExp::new(1, 3).mul(&PhaseExp::new(1, 2)),
            PhaseExp::new(5, 6)
        );
    }

    #[test]
    fn phase_inverse_is_complement() {
        assert_eq!(PhaseExp::new(1, 8).inv(), PhaseExp::new(7, 8));
        assert_eq!(PhaseExp::zero().inv(), PhaseExp::zero());
    }

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        let q = |n: i64| BigRational::from(BigInt::from(n));
        assert_eq!(cyclotomic_polynomial(1), vec![q(-1), q(1)]);
        assert_eq!(cyclotomic_polynomial(2), vec![q(1), q(1)]);
        assert_eq!(cyclotomic_polynomial(3), vec![q(1), q(1), q(1)]);
        assert_eq!(cyclotomic_polynomial(4), vec![q(1), q(0), q(1)]);
        assert_eq!(cyclotomic_polynomial(6), vec![q(1), q(-1), q(1)]);
        assert_eq!(
            cyclotomic_polynomial(8),
            vec![q(1), q(0), q(0), q(0), q(1)]
        );
        assert_eq!(euler_phi(24), 8);
    }

    #[test]
    fn embed_phase_half_is_minus_one() {
        let c = Cyclotomic::from_phase(&PhaseExp::new(1, 2), 4);
        assert_eq!(c, Cyclotomic::from_integer(-1, 4));
    }

    #[test]
    fn zeta4_squares_to_minus_one() {
        let z = Cyclotomic::from_phase(&PhaseExp::new(1, 4), 4);
        assert_eq!(z.mul(&z), Cyclotomic::from_integer(-1, 4));
    }

    #[test]
    fn cube_root_sum_vanishes() {
        // 1 + ζ₃ + ζ₃² reduces to zero through Φ₃
        let one = Cyclotomic::one(3);
        let z = Cyclotomic::from_phase(&PhaseExp::new(1, 3), 3);
        let sum = one.add(&z).add(&z.mul(&z));
        assert!(sum.is_zero());
    }

    #[test]
    fn conjugate_inverts_roots_of_unity() {
        let z8 = Cyclotomic::from_phase(&PhaseExp::new(1, 8), 8);
        assert_eq!(
            z8.conjugate(),
            Cyclotomic::from_phase(&PhaseExp::new(7, 8), 8)
        );
        let r = Cyclotomic::from_rational(BigRational::new(3.into(), 7.into()), 8);
        assert_eq!(r.conjugate(), r);
    }

    #[test]
    fn embed_phase_is_multiplicative() {
        for m in [4u64, 8, 12, 24] {
            for a in 0..m {
                for b in 0..m {
                    let pa = PhaseExp::from_ratio(BigRational::new(
                        BigInt::from(a),
                        BigInt::from(m),
                    ));
                    let pb = PhaseExp::from_ratio(BigRational::new(
                        BigInt::from(b),
                        BigInt::from(m),
                    ));
                    let lhs = Cyclotomic::from_phase(&pa.mul(&pb), m);
                    let rhs =
                        Cyclotomic::from_phase(&pa, m).mul(&Cyclotomic::from_phase(&pb, m));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn inverse_of_unit_mixture() {
        // 1 + ζ₈ is invertible; check a * a⁻¹ = 1 exactly
        let a = Cyclotomic::one(8).add(&Cyclotomic::from_phase(&PhaseExp::new(1, 8), 8));
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_one());
        assert!(Cyclotomic::zero(8).inverse().is_err());
    }

    #[test]
    fn promotion_preserves_equality() {
        let half_in_4 = Cyclotomic::from_phase(&PhaseExp::new(1, 2), 4);
        let half_in_24 = Cyclotomic::from_phase(&PhaseExp::new(1, 2), 24);
        assert_eq!(half_in_4, half_in_24);
    }

    #[test]
    fn as_phase_detects_roots_of_unity() {
        let z = Cyclotomic::from_phase(&PhaseExp::new(5, 8), 8);
        assert_eq!(z.as_phase(), Some(PhaseExp::new(5, 8)));
        let not_root = Cyclotomic::from_integer(2, 8);
        assert_eq!(not_root.as_phase(), None);
        assert_eq!(not_root.as_rational(), Some(BigRational::from(BigInt::from(2))));
    }

    #[test]
    fn serde_round_trip() {
        let z = Cyclotomic::from_phase(&PhaseExp::new(3, 8), 8).scalar_divide(2).unwrap();
        let text = serde_json::to_string(&z).unwrap();
        let back: Cyclotomic = serde_json::from_str(&text).unwrap();
        assert_eq!(z, back);
        let p = PhaseExp::new(5, 6);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, "\"5/6\"");
        let back: PhaseExp = serde_json::from_str(&text).unwrap();
        assert_eq!(p, back);
    }
}
