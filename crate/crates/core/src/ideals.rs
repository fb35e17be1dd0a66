//! Principal ideals and quotient rings in the two Euclidean ambients:
//! the integers and `k[t]` over an exact field, with the proper/prime/maximal
//! taxonomy, extended-Euclid inversion in quotients, and homomorphism
//! checking for small rings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalars::{is_prime_u64, Field, PrimeField, RationalField};

/// Classification of a principal ideal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdealClass {
    Zero,
    ProperPrimeMaximal,
    ProperPrimeNonmaximal,
    ProperNonprime,
    Improper,
}

impl std::fmt::Display for IdealClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let label = match self {
            IdealClass::Zero => "zero",
            IdealClass::ProperPrimeMaximal => "proper-prime-maximal",
            IdealClass::ProperPrimeNonmaximal => "proper-prime-nonmaximal",
            IdealClass::ProperNonprime => "proper-nonprime",
            IdealClass::Improper => "improper",
        };
        f.write_str(label)
    }
}

/// Extended Euclid on integers: returns (g, u, v) with g = gcd >= 0 and
/// u a + v b = g.
pub fn xgcd_int(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        (r0, r1) = (r1.clone(), r0 - &q * r1);
        (s0, s1) = (s1.clone(), s0 - &q * s1);
        (t0, t1) = (t1.clone(), t0 - &q * t1);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn is_prime_bigint(n: &BigInt) -> Result<bool> {
    match n.to_u64() {
        Some(v) => Ok(is_prime_u64(v)),
        None => Err(Error::ClassificationUnsupported(
            "generator too large for trial-division primality".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// Ideals of Z
// ---------------------------------------------------------------------------

/// The principal ideal (g) in the integers, with nonnegative canonical
/// generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntIdeal {
    generator: BigInt,
}

impl IntIdeal {
    pub fn new(g: impl Into<BigInt>) -> Self {
        IntIdeal { generator: g.into().abs() }
    }

    pub fn generator(&self) -> &BigInt {
        &self.generator
    }

    /// Membership by divisibility; the zero ideal contains only 0.
    pub fn contains(&self, x: &BigInt) -> bool {
        if self.generator.is_zero() {
            x.is_zero()
        } else {
            (x % &self.generator).is_zero()
        }
    }

    /// Canonical quotient map onto Z/(g): the reduced residue in [0, g),
    /// or x itself for the zero ideal.
    pub fn project(&self, x: &BigInt) -> IntResidue {
        IntResidue {
            value: if self.generator.is_zero() { x.clone() } else { x.mod_floor(&self.generator) },
            modulus: self.generator.clone(),
        }
    }

    pub fn quotient_ring(&self) -> IntQuotientRing {
        IntQuotientRing { modulus: self.generator.clone() }
    }

    /// Taxonomy: (0) is the zero ideal, (1) the whole ring, (p) maximal for
    /// prime p, and composite generators give proper non-prime ideals.
    pub fn classify(&self) -> Result<IdealClass> {
        if self.generator.is_zero() {
            return Ok(IdealClass::Zero);
        }
        if self.generator.is_one() {
            return Ok(IdealClass::Improper);
        }
        if is_prime_bigint(&self.generator)? {
            Ok(IdealClass::ProperPrimeMaximal)
        } else {
            Ok(IdealClass::ProperNonprime)
        }
    }
}

/// A reduced residue in Z/(m).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntResidue {
    value: BigInt,
    modulus: BigInt,
}

impl IntResidue {
    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }
}

impl std::fmt::Display for IntResidue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

/// The quotient ring Z/(m), operating on reduced residues.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntQuotientRing {
    modulus: BigInt,
}

impl IntQuotientRing {
    pub fn new(m: impl Into<BigInt>) -> Self {
        IntQuotientRing { modulus: m.into().abs() }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn elem(&self, x: impl Into<BigInt>) -> IntResidue {
        IntIdeal { generator: self.modulus.clone() }.project(&x.into())
    }

    pub fn zero(&self) -> IntResidue {
        self.elem(0)
    }

    pub fn one(&self) -> IntResidue {
        self.elem(1)
    }

    fn check(&self, a: &IntResidue) -> Result<()> {
        if a.modulus != self.modulus {
            return Err(Error::ContextMismatch(format!(
                "residue mod {} used in Z/({})",
                a.modulus, self.modulus
            )));
        }
        Ok(())
    }

    pub fn add(&self, a: &IntResidue, b: &IntResidue) -> Result<IntResidue> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.elem(&a.value + &b.value))
    }

    pub fn neg(&self, a: &IntResidue) -> Result<IntResidue> {
        self.check(a)?;
        Ok(self.elem(-&a.value))
    }

    pub fn mul(&self, a: &IntResidue, b: &IntResidue) -> Result<IntResidue> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.elem(&a.value * &b.value))
    }

    /// Inverse by extended Euclid against the modulus; zero divisors and
    /// zero are rejected.
    pub fn invert(&self, a: &IntResidue) -> Result<IntResidue> {
        self.check(a)?;
        let (g, u, _) = xgcd_int(&a.value, &self.modulus);
        if !g.is_one() {
            return Err(Error::NotInvertible(format!(
                "gcd({}, {}) = {} != 1",
                a.value, self.modulus, g
            )));
        }
        Ok(self.elem(u))
    }

    /// All residues, for exhaustive checks; requires a positive modulus.
    pub fn elements(&self) -> Result<Vec<IntResidue>> {
        let m = self.modulus.to_u64().filter(|m| *m > 0).ok_or_else(|| {
            Error::OutsideDomain("enumeration needs a positive machine-size modulus".into())
        })?;
        Ok((0..m).map(|v| self.elem(v)).collect())
    }
}

// ---------------------------------------------------------------------------
// Ideals of k[t]
// ---------------------------------------------------------------------------

/// The principal ideal (q) in `k[t]`, with monic (or zero) canonical
/// generator.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyIdeal<F: Field> {
    generator: Polynomial<F>,
}

impl<F: Field> PolyIdeal<F> {
    pub fn new(g: Polynomial<F>) -> Result<Self> {
        if g.nvars() != 1 {
            return Err(Error::ArityMismatch { expected: 1, got: g.nvars() });
        }
        let generator = if g.is_zero() { g } else { g.make_monic()? };
        Ok(PolyIdeal { generator })
    }

    pub fn generator(&self) -> &Polynomial<F> {
        &self.generator
    }

    pub fn contains(&self, x: &Polynomial<F>) -> Result<bool> {
        if self.generator.is_zero() {
            return Ok(x.is_zero());
        }
        let (_, r) = x.divrem(&self.generator)?;
        Ok(r.is_zero())
    }

    /// Canonical quotient map: the Euclidean remainder, of degree below the
    /// generator.
    pub fn project(&self, x: &Polynomial<F>) -> Result<PolyResidue<F>> {
        let value = if self.generator.is_zero() { x.clone() } else { x.divrem(&self.generator)?.1 };
        Ok(PolyResidue { value, modulus: self.generator.clone() })
    }

    pub fn quotient_ring(&self) -> PolyQuotientRing<F> {
        PolyQuotientRing { modulus: self.generator.clone() }
    }
}

impl PolyIdeal<PrimeField> {
    /// Taxonomy over F_p: exhaustive search for a monic factor of degree at
    /// most deg/2 decides irreducibility; refused above degree 6.
    pub fn classify(&self) -> Result<IdealClass> {
        let g = &self.generator;
        if g.is_zero() {
            return Ok(IdealClass::Zero);
        }
        let deg = g.degree().expect("nonzero");
        if deg == 0 {
            return Ok(IdealClass::Improper);
        }
        if deg > 6 {
            return Err(Error::ClassificationUnsupported(
                "irreducibility search over F_p is limited to degree <= 6".into(),
            ));
        }
        let field = *g.field();
        let p = field.modulus();
        for e in 1..=(deg / 2) {
            // all monic candidates of degree e
            let mut coeffs = vec![0u64; e as usize];
            loop {
                let mut cand = Polynomial::monomial(field, vec![e], field.one());
                for (i, &c) in coeffs.iter().enumerate() {
                    if c != 0 {
                        cand = cand
                            .add(&Polynomial::monomial(field, vec![i as u64], field.elem(c as i64)))
                            .expect("same context");
                    }
                }
                let (_, r) = g.divrem(&cand)?;
                if r.is_zero() {
                    return Ok(IdealClass::ProperNonprime);
                }
                // odometer over coefficient vectors
                let mut i = 0;
                loop {
                    if i == coeffs.len() {
                        break;
                    }
                    coeffs[i] += 1;
                    if coeffs[i] < p {
                        break;
                    }
                    coeffs[i] = 0;
                    i += 1;
                }
                if i == coeffs.len() {
                    break;
                }
            }
        }
        Ok(IdealClass::ProperPrimeMaximal)
    }
}

impl PolyIdeal<RationalField> {
    /// Taxonomy over Q, limited to degree <= 3 where a rational-root test
    /// decides irreducibility.
    pub fn classify(&self) -> Result<IdealClass> {
        let g = &self.generator;
        if g.is_zero() {
            return Ok(IdealClass::Zero);
        }
        let deg = g.degree().expect("nonzero");
        if deg == 0 {
            return Ok(IdealClass::Improper);
        }
        if deg == 1 {
            return Ok(IdealClass::ProperPrimeMaximal);
        }
        if deg > 3 {
            return Err(Error::ClassificationUnsupported(
                "irreducibility over Q is limited to degree <= 3 (rational-root test)".into(),
            ));
        }
        if has_rational_root(g)? {
            Ok(IdealClass::ProperNonprime)
        } else {
            Ok(IdealClass::ProperPrimeMaximal)
        }
    }
}

fn positive_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let v = n.abs().to_u64().ok_or_else(|| {
        Error::ClassificationUnsupported("coefficient too large for divisor enumeration".into())
    })?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d != v / d {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    Ok(out)
}

fn has_rational_root(g: &Polynomial<RationalField>) -> Result<bool> {
    use crate::scalars::Rational;
    let field = RationalField;
    let deg = g.degree().expect("nonzero");
    // clear denominators to an integer polynomial
    let mut lcm = BigInt::one();
    for (_, c) in g.iter() {
        lcm = lcm.lcm(c.denominator());
    }
    let int_coeff = |j: u64| -> BigInt {
        let c = g.coeff_exp(j);
        c.numerator() * (&lcm / c.denominator())
    };
    let a0 = int_coeff(0);
    if a0.is_zero() {
        return Ok(true); // t divides
    }
    let an = int_coeff(deg);
    for r in positive_divisors(&a0)? {
        for s in positive_divisors(&an)? {
            for sign in [1i64, -1] {
                let cand = Rational::new(&r * sign, s.clone())?;
                if field.is_zero(&g.eval_scalar(&cand)) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// A reduced residue in `k[t]/(q)`: a representative of degree below deg q.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyResidue<F: Field> {
    value: Polynomial<F>,
    modulus: Polynomial<F>,
}

impl<F: Field> PolyResidue<F> {
    pub fn value(&self) -> &Polynomial<F> {
        &self.value
    }

    pub fn modulus(&self) -> &Polynomial<F> {
        &self.modulus
    }
}

/// The quotient ring `k[t]/(q)`; also a k-algebra, so polynomials evaluate
/// into it.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyQuotientRing<F: Field> {
    modulus: Polynomial<F>,
}

impl<F: Field> PolyQuotientRing<F> {
    pub fn new(modulus: Polynomial<F>) -> Result<Self> {
        Ok(PolyIdeal::new(modulus)?.quotient_ring())
    }

    pub fn modulus(&self) -> &Polynomial<F> {
        &self.modulus
    }

    pub fn field(&self) -> &F {
        self.modulus.field()
    }

    /// Canonical representative of degree below the modulus.
    pub fn reduce(&self, x: &Polynomial<F>) -> Polynomial<F> {
        if self.modulus.is_zero() {
            x.clone()
        } else {
            x.divrem(&self.modulus).expect("nonzero modulus").1
        }
    }

    pub fn elem(&self, x: &Polynomial<F>) -> Result<PolyResidue<F>> {
        if x.nvars() != 1 || x.field() != self.modulus.field() {
            return Err(Error::ContextMismatch("polynomial outside k[t]".into()));
        }
        Ok(PolyResidue { value: self.reduce(x), modulus: self.modulus.clone() })
    }

    fn check(&self, a: &PolyResidue<F>) -> Result<()> {
        if a.modulus != self.modulus {
            return Err(Error::ContextMismatch("residue belongs to a different quotient".into()));
        }
        Ok(())
    }

    pub fn add_res(&self, a: &PolyResidue<F>, b: &PolyResidue<F>) -> Result<PolyResidue<F>> {
        self.check(a)?;
        self.check(b)?;
        self.elem(&a.value.add(&b.value)?)
    }

    pub fn neg_res(&self, a: &PolyResidue<F>) -> Result<PolyResidue<F>> {
        self.check(a)?;
        self.elem(&a.value.neg())
    }

    pub fn mul_res(&self, a: &PolyResidue<F>, b: &PolyResidue<F>) -> Result<PolyResidue<F>> {
        self.check(a)?;
        self.check(b)?;
        self.elem(&a.value.mul(&b.value)?)
    }

    /// Inverse by extended Euclid against the modulus.
    pub fn invert_res(&self, a: &PolyResidue<F>) -> Result<PolyResidue<F>> {
        self.check(a)?;
        let (g, u, _) = a.value.xgcd(&self.modulus)?;
        if g.degree() != Some(0) {
            return Err(Error::NotInvertible(
                "representative shares a factor with the modulus".into(),
            ));
        }
        // g is monic of degree 0, hence exactly 1
        self.elem(&u)
    }
}

impl<F: Field> Algebra<F> for PolyQuotientRing<F> {
    type Elem = Polynomial<F>;

    fn zero(&self) -> Polynomial<F> {
        Polynomial::zero(self.modulus.field().clone(), 1)
    }

    fn one(&self) -> Polynomial<F> {
        self.reduce(&Polynomial::one(self.modulus.field().clone(), 1))
    }

    fn add(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.reduce(&a.add(b).expect("algebra elements share a context"))
    }

    fn mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.reduce(&a.mul(b).expect("algebra elements share a context"))
    }

    fn scalar_mul(&self, c: &F::Elem, a: &Polynomial<F>) -> Polynomial<F> {
        a.scale(c)
    }
}

// ---------------------------------------------------------------------------
// Homomorphism checking
// ---------------------------------------------------------------------------

/// A violated homomorphism law together with the witnessing pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HomViolation {
    Additive(u64, u64),
    Multiplicative(u64, u64),
}

/// Result of exhaustively checking a map between residue rings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResidueHomReport {
    pub is_homomorphism: bool,
    pub witness: Option<HomViolation>,
    /// Preimage of zero; an ideal of the domain when the map is a
    /// homomorphism.
    pub kernel: Vec<u64>,
    /// Whether 1 maps to 1.
    pub unital: bool,
}

/// Exhaustively verify that `map` is a ring homomorphism Z/m1 -> Z/m2 by
/// checking every pair, and compute its kernel.
pub fn verify_residue_hom(m1: u64, m2: u64, map: impl Fn(u64) -> u64) -> ResidueHomReport {
    assert!(m1 >= 1 && m2 >= 1, "residue rings need positive moduli");
    let reduce = |x: u64| x % m2;
    let mut witness = None;
    'outer: for a in 0..m1 {
        for b in 0..m1 {
            if reduce(map((a + b) % m1)) != reduce(map(a) + map(b)) {
                witness = Some(HomViolation::Additive(a, b));
                break 'outer;
            }
            if reduce(map((a * b) % m1)) != reduce(map(a) * map(b)) {
                witness = Some(HomViolation::Multiplicative(a, b));
                break 'outer;
            }
        }
    }
    let kernel = (0..m1).filter(|&a| reduce(map(a)) == 0).collect();
    ResidueHomReport {
        is_homomorphism: witness.is_none(),
        unital: reduce(map(1 % m1)) == 1 % m2,
        witness,
        kernel,
    }
}

/// Result of a sampled homomorphism check between algebras.
#[derive(Clone, Debug)]
pub struct SampledHomReport<E> {
    pub holds: bool,
    pub witness: Option<(E, E)>,
    pub unital: bool,
}

/// Check the homomorphism laws on supplied sample pairs, for maps whose
/// domain is too large to enumerate.
pub fn verify_algebra_hom_on_samples<F, A, B>(
    dom: &A,
    cod: &B,
    map: impl Fn(&A::Elem) -> B::Elem,
    samples: &[(A::Elem, A::Elem)],
) -> SampledHomReport<A::Elem>
where
    F: Field,
    A: Algebra<F>,
    B: Algebra<F>,
    B::Elem: PartialEq,
{
    for (a, b) in samples {
        let add_ok = map(&dom.add(a, b)) == cod.add(&map(a), &map(b));
        let mul_ok = map(&dom.mul(a, b)) == cod.mul(&map(a), &map(b));
        if !add_ok || !mul_ok {
            return SampledHomReport {
                holds: false,
                witness: Some((a.clone(), b.clone())),
                unital: map(&dom.one()) == cod.one(),
            };
        }
    }
    SampledHomReport { holds: true, witness: None, unital: map(&dom.one()) == cod.one() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::scalars::Rational;

    fn q() -> RationalField {
        RationalField
    }

    fn qp(s: &str) -> Polynomial<RationalField> {
        parse_polynomial(&q(), s, None).unwrap()
    }

    #[test]
    fn project_examples() {
        let six = IntIdeal::new(6);
        assert_eq!(six.project(&BigInt::from(14)).value(), &BigInt::from(2));
        assert_eq!(six.project(&BigInt::from(0)).value(), &BigInt::from(0));
        assert_eq!(six.project(&BigInt::from(-1)).value(), &BigInt::from(5));

        // t^2 mod (t^2 + 1) = -1
        let i = PolyIdeal::new(qp("1*t^2 + 1")).unwrap();
        let r = i.project(&qp("1*t^2")).unwrap();
        assert_eq!(r.value(), &qp("-1"));
    }

    #[test]
    fn membership_examples() {
        let six = IntIdeal::new(6);
        assert!(six.contains(&BigInt::from(12)));
        assert!(!six.contains(&BigInt::from(1))); // hence (6) is proper
        let zero = IntIdeal::new(0);
        assert!(zero.contains(&BigInt::from(0)));
        assert!(!zero.contains(&BigInt::from(3)));

        let i = PolyIdeal::new(qp("1*t^1 - 1")).unwrap();
        assert!(i.contains(&qp("1*t^2 - 1")).unwrap());
        assert!(!i.contains(&qp("1*t^2 + 1")).unwrap());
    }

    #[test]
    fn quotient_op_examples() {
        let z6 = IntQuotientRing::new(6);
        let prod = z6.mul(&z6.elem(2), &z6.elem(3)).unwrap();
        assert_eq!(prod, z6.zero()); // a nontrivial zero divisor

        let z7 = IntQuotientRing::new(7);
        let prod = z7.mul(&z7.elem(3), &z7.elem(5)).unwrap();
        assert_eq!(prod, z7.elem(15 % 7));
        assert_eq!(prod, z7.one());

        let ring = PolyQuotientRing::new(qp("1*t^2 + 1")).unwrap();
        let t = ring.elem(&qp("1*t^1")).unwrap();
        let sq = ring.mul_res(&t, &t).unwrap();
        assert_eq!(sq.value(), &qp("-1"));
    }

    #[test]
    fn quotient_mismatch_rejected() {
        let z6 = IntQuotientRing::new(6);
        let z7 = IntQuotientRing::new(7);
        assert!(z6.add(&z6.elem(1), &z7.elem(1)).is_err());
    }

    #[test]
    fn quotient_invert_examples() {
        let z7 = IntQuotientRing::new(7);
        let inv = z7.invert(&z7.elem(3)).unwrap();
        assert_eq!(inv, z7.elem(5));

        let z6 = IntQuotientRing::new(6);
        assert!(matches!(z6.invert(&z6.elem(2)), Err(Error::NotInvertible(_))));

        // t in Q[t]/(t^2+1) inverts to -t
        let ring = PolyQuotientRing::new(qp("1*t^2 + 1")).unwrap();
        let t = ring.elem(&qp("1*t^1")).unwrap();
        let inv = ring.invert_res(&t).unwrap();
        assert_eq!(inv.value(), &qp("-1*t^1"));
        let check = ring.mul_res(&t, &inv).unwrap();
        assert_eq!(check.value(), &qp("1"));
    }

    #[test]
    fn classify_int_examples() {
        assert_eq!(IntIdeal::new(7).classify().unwrap(), IdealClass::ProperPrimeMaximal);
        assert_eq!(IntIdeal::new(6).classify().unwrap(), IdealClass::ProperNonprime);
        assert_eq!(IntIdeal::new(1).classify().unwrap(), IdealClass::Improper);
        assert_eq!(IntIdeal::new(0).classify().unwrap(), IdealClass::Zero);
        assert_eq!(IntIdeal::new(-5).classify().unwrap(), IdealClass::ProperPrimeMaximal);
    }

    #[test]
    fn classify_poly_over_f3() {
        let f3 = PrimeField::new(3).unwrap();
        let g = parse_polynomial(&f3, "1*t^2 + 1", None).unwrap();
        // brute-force oracle: no root in F_3 and no monic linear factor
        for r in 0..3i64 {
            assert!(!f3.is_zero(&g.eval_scalar(&f3.elem(r))));
        }
        let ideal = PolyIdeal::new(g).unwrap();
        assert_eq!(ideal.classify().unwrap(), IdealClass::ProperPrimeMaximal);

        // t^2 - 1 = (t-1)(t+1) is reducible
        let h = parse_polynomial(&f3, "1*t^2 + 2", None).unwrap();
        assert_eq!(PolyIdeal::new(h).unwrap().classify().unwrap(), IdealClass::ProperNonprime);
    }

    #[test]
    fn classify_poly_over_q() {
        assert_eq!(
            PolyIdeal::new(qp("1*t^2 + 1")).unwrap().classify().unwrap(),
            IdealClass::ProperPrimeMaximal
        );
        assert_eq!(
            PolyIdeal::new(qp("1*t^2 - 1")).unwrap().classify().unwrap(),
            IdealClass::ProperNonprime
        );
        // 2t + 2 normalizes to the monic t + 1
        assert_eq!(
            PolyIdeal::new(qp("2*t^1 + 2")).unwrap().classify().unwrap(),
            IdealClass::ProperPrimeMaximal
        );
        assert_eq!(PolyIdeal::new(qp("5")).unwrap().classify().unwrap(), IdealClass::Improper);
        // t^3 - 1/2 has no rational root: 2 t^3 - 1 needs r | 1, s | 2
        assert_eq!(
            PolyIdeal::new(qp("1*t^3 - 1/2")).unwrap().classify().unwrap(),
            IdealClass::ProperPrimeMaximal
        );
        assert!(PolyIdeal::new(qp("1*t^4 + 1")).unwrap().classify().is_err());
    }

    #[test]
    fn residue_hom_examples() {
        // reduction Z/12 -> Z/4
        let rep = verify_residue_hom(12, 4, |r| r % 4);
        assert!(rep.is_homomorphism);
        assert!(rep.unital);
        assert_eq!(rep.kernel, vec![0, 4, 8]);

        // squaring on Z/6 is not additive
        let rep = verify_residue_hom(6, 6, |r| (r * r) % 6);
        assert!(!rep.is_homomorphism);
        match rep.witness {
            Some(HomViolation::Additive(a, b)) => {
                assert_ne!((a + b) * (a + b) % 6, (a * a + b * b) % 6);
            }
            other => panic!("expected additive violation, got {other:?}"),
        }

        // identity
        let rep = verify_residue_hom(5, 5, |r| r);
        assert!(rep.is_homomorphism);
        assert_eq!(rep.kernel, vec![0]);
    }

    #[test]
    fn kernel_is_an_ideal() {
        let rep = verify_residue_hom(12, 4, |r| r % 4);
        let kernel = rep.kernel;
        for &a in &kernel {
            for &b in &kernel {
                assert!(kernel.contains(&((a + b) % 12)));
            }
            for y in 0..12 {
                assert!(kernel.contains(&((a * y) % 12)));
            }
        }
    }

    #[test]
    fn sampled_hom_project_into_quotient() {
        use crate::poly::PolynomialAlgebra;
        let ring = PolyQuotientRing::new(qp("1*t^2 + 1")).unwrap();
        let ambient = PolynomialAlgebra { field: q(), nvars: 1 };
        let samples: Vec<_> = (0..8i64)
            .map(|k| {
                (qp(&format!("{k} + {}*t^1 + 1*t^3", k + 1)), qp(&format!("{} - 2*t^2", 3 - k)))
            })
            .collect();
        let rep = verify_algebra_hom_on_samples(&ambient, &ring, |p| ring.reduce(p), &samples);
        assert!(rep.holds);
        assert!(rep.unital);

        // the squaring map is not additive over Q either
        let bad =
            verify_algebra_hom_on_samples(&ambient, &ambient, |p| p.mul(p).unwrap(), &samples);
        assert!(!bad.holds);
    }

    #[test]
    fn polynomials_evaluate_into_quotient_rings() {
        use crate::algebra::Algebra;
        // t^2 + 1 evaluated at the class of t in Q[t]/(t^2+1) is zero
        let ring = PolyQuotientRing::new(qp("1*t^2 + 1")).unwrap();
        let p = qp("1*t^2 + 1");
        let t_class = ring.reduce(&qp("1*t^1"));
        let v = p.evaluate(&ring, std::slice::from_ref(&t_class)).unwrap();
        assert!(v.is_zero());
        // and the constant 1 hits the unit
        let one = Polynomial::one(q(), 1);
        assert_eq!(one.evaluate(&ring, &[t_class]).unwrap(), Algebra::one(&ring));
    }

    #[test]
    fn xgcd_int_certificate() {
        let (g, u, v) = xgcd_int(&BigInt::from(240), &BigInt::from(46));
        assert_eq!(g, BigInt::from(2));
        assert_eq!(&u * 240 + &v * 46, g);
        let (g, _, _) = xgcd_int(&BigInt::from(-15), &BigInt::from(10));
        assert_eq!(g, BigInt::from(5));
    }

    #[test]
    fn zero_modulus_quotient_is_the_ring_itself() {
        let z0 = IntQuotientRing::new(0);
        let a = z0.elem(-42);
        assert_eq!(a.value(), &BigInt::from(-42));
        let sum = z0.add(&a, &z0.elem(50)).unwrap();
        assert_eq!(sum.value(), &BigInt::from(8));
        assert!(z0.invert(&z0.elem(2)).is_err());
        let minus_one = z0.invert(&z0.elem(-1)).unwrap();
        assert_eq!(minus_one.value(), &BigInt::from(-1));
    }

    #[test]
    fn rational_root_oracle() {
        // (t - 3/2)(t + 2) has roots 3/2 and -2
        let p = qp("1*t^2 + 1/2*t^1 - 3");
        assert!(has_rational_root(&p).unwrap());
        assert!(q().is_zero(&p.eval_scalar(&Rational::new(3, 2).unwrap())));
        assert!(!has_rational_root(&qp("1*t^2 + 1")).unwrap());
    }
}
