//! Scalar fields: arbitrary-precision rationals, prime fields F_p, and
//! double-precision complex numbers.
//!
//! Fields are carrier objects: a [`Field`] value describes the field and owns
//! the arithmetic, while elements are plain data. This keeps runtime-sized
//! fields (F_p) and their elements in one coherent scheme, and every other
//! layer of the crate is generic over it.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A field of scalars, presented as a carrier object.
///
/// `characteristic` returns 0 for characteristic-zero fields and p for F_p.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; fails on 0.
    fn invert(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn characteristic(&self) -> u64;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Parse the standalone text encoding of an element.
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    /// Render the standalone text encoding of an element.
    fn render_elem(&self, a: &Self::Elem) -> String;
    /// Short field name for diagnostics (`Q`, `F_p`, `C`).
    fn name(&self) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.invert(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// An arbitrary-precision rational in canonical form: positive denominator,
/// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Canonicalize `num/den`. Fails when `den = 0`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// The field Q.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational(BigRational::zero())
    }

    fn one(&self) -> Rational {
        Rational(BigRational::one())
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.0.is_zero()
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        Rational(&a.0 + &b.0)
    }

    fn neg(&self, a: &Rational) -> Rational {
        Rational(-&a.0)
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        Rational(&a.0 * &b.0)
    }

    fn invert(&self, a: &Rational) -> Result<Rational> {
        if a.0.is_zero() {
            return Err(Error::NotInvertible("0 has no reciprocal in Q".into()));
        }
        Ok(Rational(self::BigRational::one() / &a.0))
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn from_i64(&self, n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn parse_elem(&self, s: &str) -> Result<Rational> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt =
            num.parse().map_err(|_| Error::parse(format!("bad rational numerator `{num}`")))?;
        let den: BigInt =
            den.parse().map_err(|_| Error::parse(format!("bad rational denominator `{den}`")))?;
        Rational::new(num, den)
    }

    fn render_elem(&self, a: &Rational) -> String {
        a.to_string()
    }

    fn name(&self) -> String {
        "Q".into()
    }
}

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

/// Deterministic trial-division primality test; adequate for the 64-bit
/// moduli this crate accepts.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while let Some(sq) = d.checked_mul(d) {
        if sq > n {
            break;
        }
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of F_p, stored as a reduced residue together with its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    value: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl fmt::Debug for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

/// The field F_p for a prime p; primality is validated at construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, n: i64) -> PrimeFieldElement {
        self.from_i64(n)
    }

    fn check(&self, a: &PrimeFieldElement) {
        assert_eq!(a.modulus, self.p, "element of F_{} used in F_{}", a.modulus, self.p);
    }
}

impl Field for PrimeField {
    type Elem = PrimeFieldElement;

    fn zero(&self) -> PrimeFieldElement {
        PrimeFieldElement { value: 0, modulus: self.p }
    }

    fn one(&self) -> PrimeFieldElement {
        PrimeFieldElement { value: 1 % self.p, modulus: self.p }
    }

    fn is_zero(&self, a: &PrimeFieldElement) -> bool {
        self.check(a);
        a.value == 0
    }

    fn add(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        self.check(a);
        self.check(b);
        let v = (u128::from(a.value) + u128::from(b.value)) % u128::from(self.p);
        PrimeFieldElement { value: v as u64, modulus: self.p }
    }

    fn neg(&self, a: &PrimeFieldElement) -> PrimeFieldElement {
        self.check(a);
        let v = if a.value == 0 { 0 } else { self.p - a.value };
        PrimeFieldElement { value: v, modulus: self.p }
    }

    fn mul(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        self.check(a);
        self.check(b);
        let v = (u128::from(a.value) * u128::from(b.value)) % u128::from(self.p);
        PrimeFieldElement { value: v as u64, modulus: self.p }
    }

    fn invert(&self, a: &PrimeFieldElement) -> Result<PrimeFieldElement> {
        self.check(a);
        if a.value == 0 {
            return Err(Error::NotInvertible(format!("0 has no reciprocal in F_{}", self.p)));
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (i128::from(a.value), i128::from(self.p));
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "gcd(a, p) must be 1 for prime p");
        let p = i128::from(self.p);
        let v = ((s0 % p) + p) % p;
        Ok(PrimeFieldElement { value: v as u64, modulus: self.p })
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn from_i64(&self, n: i64) -> PrimeFieldElement {
        let p = i128::from(self.p);
        let v = ((i128::from(n) % p) + p) % p;
        PrimeFieldElement { value: v as u64, modulus: self.p }
    }

    fn parse_elem(&self, s: &str) -> Result<PrimeFieldElement> {
        let s = s.trim();
        let body = match s.split_once(" mod ") {
            Some((v, m)) => {
                let m: u64 =
                    m.trim().parse().map_err(|_| Error::parse(format!("bad modulus `{m}`")))?;
                if m != self.p {
                    return Err(Error::parse(format!(
                        "element written mod {m} but field is F_{}",
                        self.p
                    )));
                }
                v.trim()
            }
            None => s,
        };
        let v: i64 = body.parse().map_err(|_| Error::parse(format!("bad residue `{body}`")))?;
        Ok(self.from_i64(v))
    }

    fn render_elem(&self, a: &PrimeFieldElement) -> String {
        self.check(a);
        format!("{} mod {}", a.value, self.p)
    }

    fn name(&self) -> String {
        format!("F_{}", self.p)
    }
}

// ---------------------------------------------------------------------------
// Complex floats
// ---------------------------------------------------------------------------

/// Canonical float rendering: 9 significant digits, lowercase `e` exponent,
/// and `-0` normalized to `0`.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    format!("{x:.8e}")
}

/// A double-precision complex number; constructors reject NaN and infinity.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct ComplexFloat {
    re: f64,
    im: f64,
}

impl ComplexFloat {
    pub const ZERO: ComplexFloat = ComplexFloat { re: 0.0, im: 0.0 };
    pub const ONE: ComplexFloat = ComplexFloat { re: 1.0, im: 0.0 };
    pub const I: ComplexFloat = ComplexFloat { re: 0.0, im: 1.0 };

    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() || !im.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(ComplexFloat { re, im })
    }

    pub fn from_re(re: f64) -> Result<Self> {
        Self::new(re, 0.0)
    }

    /// e^{i theta} on the unit circle.
    pub fn unit(theta: f64) -> Self {
        ComplexFloat { re: theta.cos(), im: theta.sin() }
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn conjugate(&self) -> Self {
        ComplexFloat { re: self.re, im: -self.im }
    }

    pub fn add(&self, other: &Self) -> Self {
        ComplexFloat { re: self.re + other.re, im: self.im + other.im }
    }

    pub fn sub(&self, other: &Self) -> Self {
        ComplexFloat { re: self.re - other.re, im: self.im - other.im }
    }

    pub fn mul(&self, other: &Self) -> Self {
        ComplexFloat {
            re: self.re * other.re - self.im * other.im,
            im: self.re * other.im + self.im * other.re,
        }
    }

    pub fn scale(&self, c: f64) -> Self {
        ComplexFloat { re: self.re * c, im: self.im * c }
    }

    pub fn recip(&self) -> Result<Self> {
        let m2 = self.re * self.re + self.im * self.im;
        if m2 == 0.0 {
            return Err(Error::NotInvertible("0 has no reciprocal in C".into()));
        }
        Ok(ComplexFloat { re: self.re / m2, im: -self.im / m2 })
    }

    /// Integer power by repeated squaring; `powi(0) = 1`, including at 0.
    pub fn powi(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.recip()?.powi(-n);
        }
        let mut e = n as u64;
        let mut base = *self;
        let mut acc = ComplexFloat::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for ComplexFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im = fmt_f64(self.im);
        if im.starts_with('-') {
            write!(f, "{}{}i", fmt_f64(self.re), im)
        } else {
            write!(f, "{}+{}i", fmt_f64(self.re), im)
        }
    }
}

/// The complex numbers with double-precision components.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ComplexField;

fn parse_f64(s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| Error::parse(format!("bad float `{s}`")))
}

impl Field for ComplexField {
    type Elem = ComplexFloat;

    fn zero(&self) -> ComplexFloat {
        ComplexFloat::ZERO
    }

    fn one(&self) -> ComplexFloat {
        ComplexFloat::ONE
    }

    fn is_zero(&self, a: &ComplexFloat) -> bool {
        a.re == 0.0 && a.im == 0.0
    }

    fn add(&self, a: &ComplexFloat, b: &ComplexFloat) -> ComplexFloat {
        a.add(b)
    }

    fn neg(&self, a: &ComplexFloat) -> ComplexFloat {
        ComplexFloat { re: -a.re, im: -a.im }
    }

    fn mul(&self, a: &ComplexFloat, b: &ComplexFloat) -> ComplexFloat {
        a.mul(b)
    }

    fn invert(&self, a: &ComplexFloat) -> Result<ComplexFloat> {
        a.recip()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn from_i64(&self, n: i64) -> ComplexFloat {
        ComplexFloat { re: n as f64, im: 0.0 }
    }

    fn parse_elem(&self, s: &str) -> Result<ComplexFloat> {
        let t = s.trim().replace(' ', "");
        if t.is_empty() {
            return Err(Error::parse("empty complex literal"));
        }
        // Split off an imaginary tail `...i` at the last top-level +/- sign
        // (signs directly after e/E belong to a float exponent).
        if let Some(body) = t.strip_suffix('i') {
            let bytes = body.as_bytes();
            let mut split = None;
            for k in (1..bytes.len()).rev() {
                let c = bytes[k] as char;
                if (c == '+' || c == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
                    split = Some(k);
                    break;
                }
            }
            let (re_part, im_part) = match split {
                Some(k) => (&body[..k], &body[k..]),
                None => ("0", body),
            };
            let im = match im_part {
                "" | "+" => 1.0,
                "-" => -1.0,
                other => parse_f64(other)?,
            };
            return ComplexFloat::new(parse_f64(re_part)?, im);
        }
        ComplexFloat::new(parse_f64(&t)?, 0.0)
    }

    fn render_elem(&self, a: &ComplexFloat) -> String {
        a.to_string()
    }

    fn name(&self) -> String {
        "C".into()
    }
}

/// Exact rational-to-float conversion for display layers; falls back on the
/// quotient of converted parts when the value exceeds f64 integer range.
pub fn rational_to_f64(r: &Rational) -> f64 {
    let num = r.numerator();
    let den = r.denominator();
    match (num.to_f64(), den.to_f64()) {
        (Some(n), Some(d)) => n / d,
        _ => {
            let sign = if num.is_negative() { -1.0 } else { 1.0 };
            sign * f64::INFINITY
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let q = RationalField;
        assert_eq!(Rational::new(2, 4).unwrap(), q.parse_elem("1/2").unwrap());
        assert_eq!(Rational::new(3, -6).unwrap(), q.parse_elem("-1/2").unwrap());
        let zero = Rational::new(0, 7).unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.denominator(), &BigInt::from(1));
        assert_eq!(Rational::new(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn rational_invert() {
        let q = RationalField;
        let x = Rational::new(2, 3).unwrap();
        assert_eq!(q.invert(&x).unwrap(), Rational::new(3, 2).unwrap());
        assert!(q.invert(&q.zero()).is_err());
    }

    #[test]
    fn prime_field_invert_matches_brute_force() {
        let f7 = PrimeField::new(7).unwrap();
        let three = f7.elem(3);
        let inv = f7.invert(&three).unwrap();
        // brute-force oracle over all of F_7
        let mut expected = None;
        for y in 0..7 {
            if (3 * y) % 7 == 1 {
                expected = Some(y);
            }
        }
        assert_eq!(inv.value(), expected.unwrap());
        assert_eq!(inv.value(), 5);
        assert!(f7.invert(&f7.zero()).is_err());
    }

    #[test]
    fn complex_invert_i() {
        let c = ComplexField;
        let inv = c.invert(&ComplexFloat::I).unwrap();
        assert_eq!(inv, ComplexFloat::new(0.0, -1.0).unwrap());
    }

    #[test]
    fn characteristic_values() {
        assert_eq!(RationalField.characteristic(), 0);
        assert_eq!(ComplexField.characteristic(), 0);
        assert_eq!(PrimeField::new(7).unwrap().characteristic(), 7);
        // smallest n with n * 1 = 0, by repeated addition
        let f2 = PrimeField::new(2).unwrap();
        let mut acc = f2.zero();
        let mut n = 0u64;
        loop {
            acc = f2.add(&acc, &f2.one());
            n += 1;
            if f2.is_zero(&acc) {
                break;
            }
        }
        assert_eq!(n, f2.characteristic());
        assert_eq!(n, 2);
    }

    #[test]
    fn modulus_examples() {
        let z = ComplexFloat::new(3.0, 4.0).unwrap();
        assert_eq!(z.modulus(), 5.0);
        assert_eq!(ComplexFloat::ZERO.modulus(), 0.0);
        let w = ComplexFloat::new(1.0, 1.0).unwrap();
        assert!((w.modulus() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn prime_modulus_validated() {
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(0).is_err());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(97).is_ok());
    }

    #[test]
    fn complex_rejects_nonfinite() {
        assert_eq!(ComplexFloat::new(f64::NAN, 0.0), Err(Error::NonFinite));
        assert_eq!(ComplexFloat::new(0.0, f64::INFINITY), Err(Error::NonFinite));
    }

    #[test]
    fn scalar_text_round_trip() {
        let q = RationalField;
        for s in ["-7/3", "5", "0"] {
            let v = q.parse_elem(s).unwrap();
            assert_eq!(q.render_elem(&v), s);
        }
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.render_elem(&f7.parse_elem("12").unwrap()), "5 mod 7");
        assert_eq!(f7.parse_elem("5 mod 7").unwrap(), f7.elem(5));
        assert!(f7.parse_elem("5 mod 11").is_err());
        let c = ComplexField;
        let z = c.parse_elem("1.5-2e-3i").unwrap();
        assert_eq!(z, ComplexFloat::new(1.5, -0.002).unwrap());
        let back = c.parse_elem(&c.render_elem(&z)).unwrap();
        assert_eq!(back, z);
        assert_eq!(c.parse_elem("i").unwrap(), ComplexFloat::I);
        assert_eq!(c.parse_elem("-i").unwrap(), c.neg(&ComplexFloat::I));
        assert_eq!(c.parse_elem("2").unwrap(), c.from_i64(2));
    }

    #[test]
    fn fmt_f64_canonical() {
        assert_eq!(fmt_f64(0.0), "0");
        assert_eq!(fmt_f64(-0.0), "0");
        assert_eq!(fmt_f64(1.0), "1.00000000e0");
        assert_eq!(fmt_f64(5f64.sqrt()), "2.23606798e0");
        assert_eq!(fmt_f64(-0.25), "-2.50000000e-1");
    }
}
