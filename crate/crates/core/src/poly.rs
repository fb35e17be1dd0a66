//! Multivariate polynomials as finitely supported coefficient functions on
//! multi-indices, with evaluation into any unital algebra, composition, the
//! homogeneous grading, and the univariate Euclidean toolbox (division, gcd,
//! extended gcd) that the rational-function and quotient-ring layers build
//! on.

use crate::algebra::{Algebra, FieldAlgebra};
use crate::conv::FinSupp;
use crate::error::{Error, Result};
use crate::monoid::{Monoid, MonoidElement};
use crate::scalars::Field;

/// A polynomial in `nvars` variables over `F`, stored sparsely by
/// multi-index.
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<F: Field> {
    nvars: usize,
    coeffs: FinSupp<F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        assert!(nvars >= 1, "polynomials need at least one variable");
        Polynomial { nvars, coeffs: FinSupp::zero(Monoid::MultiIndexWn(nvars), field) }
    }

    pub fn constant(field: F, nvars: usize, c: F::Elem) -> Self {
        let mut p = Polynomial::zero(field, nvars);
        p.coeffs.set(MonoidElement::Multi(vec![0; nvars]), c).expect("identity multi-index");
        p
    }

    pub fn one(field: F, nvars: usize) -> Self {
        let c = field.one();
        Polynomial::constant(field, nvars, c)
    }

    /// The coordinate polynomial t_i (1-based index).
    pub fn variable(field: F, nvars: usize, i: usize) -> Self {
        assert!((1..=nvars).contains(&i), "variable index out of range");
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        let c = field.one();
        Polynomial::monomial(field, exps, c)
    }

    pub fn monomial(field: F, exps: Vec<u64>, c: F::Elem) -> Self {
        let nvars = exps.len();
        let mut p = Polynomial::zero(field, nvars);
        p.coeffs.set(MonoidElement::Multi(exps), c).expect("canonical multi-index");
        p
    }

    /// Wrap an existing coefficient table over some W^n.
    pub fn from_finsupp(coeffs: FinSupp<F>) -> Result<Self> {
        match coeffs.monoid() {
            Monoid::MultiIndexWn(n) => Ok(Polynomial { nvars: *n, coeffs }),
            other => Err(Error::KindMismatch(format!(
                "polynomial coefficients must live on W^n, got {other:?}"
            ))),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> &F {
        self.coeffs.field()
    }

    pub fn coeffs(&self) -> &FinSupp<F> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn coeff(&self, exps: &[u64]) -> F::Elem {
        self.coeffs.coeff(&MonoidElement::Multi(exps.to_vec()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MonoidElement, &F::Elem)> {
        self.coeffs.iter()
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars || self.field() != other.field() {
            return Err(Error::ArityMismatch { expected: self.nvars, got: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(Polynomial { nvars: self.nvars, coeffs: self.coeffs.pointwise_add(&other.coeffs)? })
    }

    pub fn neg(&self) -> Self {
        Polynomial { nvars: self.nvars, coeffs: self.coeffs.neg() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Product following t^a * t^b = t^{a+b}: convolution of the
    /// coefficient tables.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(Polynomial { nvars: self.nvars, coeffs: self.coeffs.convolve(&other.coeffs)? })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Polynomial { nvars: self.nvars, coeffs: self.coeffs.scale(c) }
    }

    pub fn pow(&self, e: u64) -> Self {
        let alg = PolynomialAlgebra { field: self.field().clone(), nvars: self.nvars };
        Algebra::pow(&alg, self, e)
    }

    /// Largest total degree of a monomial; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.coeffs.iter().map(|(alpha, _)| alpha.degree().expect("multi-index key")).max()
    }

    /// The terms of total degree exactly `l`.
    pub fn homogeneous_component(&self, l: u64) -> Self {
        let field = self.field().clone();
        let entries = self
            .coeffs
            .iter()
            .filter(|(alpha, _)| alpha.degree().expect("multi-index key") == l)
            .map(|(alpha, c)| (alpha.clone(), c.clone()));
        let coeffs = FinSupp::from_entries(Monoid::MultiIndexWn(self.nvars), field, entries)
            .expect("keys already canonical");
        Polynomial { nvars: self.nvars, coeffs }
    }

    pub fn is_homogeneous(&self, l: u64) -> bool {
        self.coeffs.iter().all(|(alpha, _)| alpha.degree().expect("multi-index key") == l)
    }

    /// Substitute `args` for the variables inside any commutative unital
    /// algebra; the constant polynomial 1 maps to the unit of `A`.
    pub fn evaluate<A: Algebra<F>>(&self, alg: &A, args: &[A::Elem]) -> Result<A::Elem> {
        if args.len() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: args.len() });
        }
        let mut acc = alg.zero();
        for (alpha, c) in self.coeffs.iter() {
            let MonoidElement::Multi(exps) = alpha else { unreachable!() };
            let mut term = alg.one();
            for (arg, &e) in args.iter().zip(exps) {
                if e > 0 {
                    term = alg.mul(&term, &alg.pow(arg, e));
                }
            }
            acc = alg.add(&acc, &alg.scalar_mul(c, &term));
        }
        Ok(acc)
    }

    /// Replace the n variables with n polynomials in m variables.
    pub fn compose(&self, qs: &[Polynomial<F>]) -> Result<Polynomial<F>> {
        if qs.len() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: qs.len() });
        }
        let m = qs[0].nvars;
        for q in qs {
            qs[0].check_arity(q)?;
        }
        let alg = PolynomialAlgebra { field: self.field().clone(), nvars: m };
        self.evaluate(&alg, qs)
    }
}

/// The polynomial ring P_n(k) as an algebra over k.
#[derive(Clone, PartialEq, Debug)]
pub struct PolynomialAlgebra<F: Field> {
    pub field: F,
    pub nvars: usize,
}

impl<F: Field> Algebra<F> for PolynomialAlgebra<F> {
    type Elem = Polynomial<F>;

    fn zero(&self) -> Polynomial<F> {
        Polynomial::zero(self.field.clone(), self.nvars)
    }

    fn one(&self) -> Polynomial<F> {
        Polynomial::one(self.field.clone(), self.nvars)
    }

    fn add(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        a.add(b).expect("algebra elements share a context")
    }

    fn mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        a.mul(b).expect("algebra elements share a context")
    }

    fn scalar_mul(&self, c: &F::Elem, a: &Polynomial<F>) -> Polynomial<F> {
        a.scale(c)
    }
}

// ---------------------------------------------------------------------------
// Univariate toolbox
// ---------------------------------------------------------------------------

impl<F: Field> Polynomial<F> {
    fn expect_univariate(&self) {
        assert_eq!(self.nvars, 1, "operation requires a single-variable polynomial");
    }

    /// Degree of a univariate polynomial; `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.expect_univariate();
        self.total_degree()
    }

    /// Coefficient of t^j in a univariate polynomial.
    pub fn coeff_exp(&self, j: u64) -> F::Elem {
        self.expect_univariate();
        self.coeff(&[j])
    }

    pub fn leading_coeff(&self) -> Option<F::Elem> {
        Some(self.coeff_exp(self.degree()?))
    }

    /// Lowest exponent carrying a nonzero coefficient; `None` for zero.
    pub fn ord(&self) -> Option<u64> {
        self.expect_univariate();
        self.coeffs.iter().map(|(alpha, _)| alpha.degree().expect("multi-index key")).min()
    }

    /// Divide by t^u; requires every term to have exponent >= u.
    pub fn shift_down(&self, u: u64) -> Self {
        self.expect_univariate();
        let field = self.field().clone();
        let entries = self.coeffs.iter().map(|(alpha, c)| {
            let d = alpha.degree().expect("multi-index key");
            assert!(d >= u, "shift_down would create a negative exponent");
            (MonoidElement::Multi(vec![d - u]), c.clone())
        });
        let coeffs =
            FinSupp::from_entries(Monoid::MultiIndexWn(1), field, entries).expect("canonical keys");
        Polynomial { nvars: 1, coeffs }
    }

    pub fn mul_power(&self, u: u64) -> Self {
        self.expect_univariate();
        let field = self.field().clone();
        let t_u = Polynomial::monomial(field, vec![u], self.field().one());
        self.mul(&t_u).expect("same context")
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map(|c| c == self.field().one()).unwrap_or(false)
    }

    pub fn make_monic(&self) -> Result<Self> {
        let lc = self
            .leading_coeff()
            .ok_or_else(|| Error::NotInvertible("zero polynomial cannot be made monic".into()))?;
        let inv = self.field().invert(&lc)?;
        Ok(self.scale(&inv))
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        self.expect_univariate();
        self.check_arity(d)?;
        let field = self.field().clone();
        let d_deg = d.degree().ok_or(Error::ZeroDenominator)?;
        let d_lc_inv = field.invert(&d.leading_coeff().expect("nonzero divisor"))?;
        let mut quot = Polynomial::zero(field.clone(), 1);
        let mut rem = self.clone();
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let factor = field.mul(&rem.leading_coeff().expect("nonzero remainder"), &d_lc_inv);
            let shift = r_deg - d_deg;
            let term = Polynomial::monomial(field.clone(), vec![shift], factor);
            quot = quot.add(&term)?;
            rem = rem.sub(&term.mul(d)?)?;
        }
        Ok((quot, rem))
    }

    /// Monic greatest common divisor by the Euclidean algorithm; zero when
    /// both inputs are zero.
    pub fn gcd_monic(&self, other: &Self) -> Result<Self> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.make_monic()
        }
    }

    /// Extended Euclid: returns (g, u, v) with u * self + v * other = g and
    /// g the monic gcd.
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        self.expect_univariate();
        self.check_arity(other)?;
        let field = self.field().clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) =
            (Polynomial::one(field.clone(), 1), Polynomial::zero(field.clone(), 1));
        let (mut t0, mut t1) =
            (Polynomial::zero(field.clone(), 1), Polynomial::one(field.clone(), 1));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            (r0, r1) = (r1, r);
            let s = s0.sub(&q.mul(&s1)?)?;
            (s0, s1) = (s1, s);
            let t = t0.sub(&q.mul(&t1)?)?;
            (t0, t1) = (t1, t);
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let lc_inv = field.invert(&r0.leading_coeff().expect("nonzero"))?;
        let scale = |p: &Polynomial<F>| p.scale(&lc_inv);
        Ok((scale(&r0), scale(&s0), scale(&t0)))
    }

    /// Evaluate a univariate polynomial at a scalar.
    pub fn eval_scalar(&self, a: &F::Elem) -> F::Elem {
        self.expect_univariate();
        let field = self.field().clone();
        self.evaluate(&FieldAlgebra(field), std::slice::from_ref(a))
            .expect("arity checked by expect_univariate")
    }
}

// ---------------------------------------------------------------------------
// Text syntax
// ---------------------------------------------------------------------------

/// One parsed term of the polynomial grammar before materialization:
/// a coefficient and accumulated variable exponents (1-based indices).
/// Exponents may be negative, for callers that target Laurent data.
pub struct RawTerm<F: Field> {
    pub coeff: F::Elem,
    pub exponents: Vec<(usize, i64)>,
}

fn split_terms(s: &str) -> Result<Vec<(i8, String)>> {
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut sign = 1i8;
    let mut depth = 0usize;
    let mut prev_meaningful: Option<char> = None;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth =
                    depth.checked_sub(1).ok_or_else(|| Error::parse("unbalanced parentheses"))?
            }
            _ => {}
        }
        let is_sep = (c == '+' || c == '-')
            && depth == 0
            && matches!(prev_meaningful, Some(p) if !matches!(p, 'e' | 'E' | '^' | '*' | '/' | '+' | '-'));
        if is_sep {
            if cur.trim().is_empty() {
                return Err(Error::parse("empty term"));
            }
            terms.push((sign, cur.trim().to_string()));
            cur = String::new();
            sign = if c == '-' { -1 } else { 1 };
        } else {
            cur.push(c);
        }
        if !c.is_whitespace() {
            prev_meaningful = Some(c);
        }
    }
    if depth != 0 {
        return Err(Error::parse("unbalanced parentheses"));
    }
    if cur.trim().is_empty() {
        return Err(Error::parse("empty term"));
    }
    terms.push((sign, cur.trim().to_string()));
    Ok(terms)
}

fn split_factors(term: &str) -> Vec<String> {
    let mut factors = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for c in term.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '*' if depth == 0 => {
                factors.push(cur.trim().to_string());
                cur = String::new();
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    factors.push(cur.trim().to_string());
    factors
}

fn parse_var_factor(factor: &str) -> Option<Result<(usize, i64)>> {
    let body = factor.strip_prefix('t')?;
    let (idx_str, exp_str) = match body.split_once('^') {
        Some((i, e)) => (i, Some(e)),
        None => (body, None),
    };
    if !idx_str.is_empty() && !idx_str.chars().all(|c| c.is_ascii_digit()) {
        return None; // not a variable factor; let the scalar parser try
    }
    let idx = if idx_str.is_empty() {
        1
    } else {
        match idx_str.parse::<usize>() {
            Ok(0) | Err(_) => return Some(Err(Error::parse(format!("bad variable `{factor}`")))),
            Ok(i) => i,
        }
    };
    let exp = match exp_str {
        None => 1,
        Some(e) => match e.trim().parse::<i64>() {
            Ok(v) => v,
            Err(_) => return Some(Err(Error::parse(format!("bad exponent in `{factor}`")))),
        },
    };
    Some(Ok((idx, exp)))
}

/// Parse the term grammar `c*t1^a1*t2^a2 ...` joined by `+`/`-`. Coefficient
/// atoms may be parenthesized (required for complex literals containing a
/// sign); `t` is shorthand for `t1`.
pub fn parse_poly_terms<F: Field>(field: &F, s: &str) -> Result<Vec<RawTerm<F>>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::parse("empty polynomial"));
    }
    let mut out = Vec::new();
    for (sign, term) in split_terms(s)? {
        let mut coeff = field.one();
        let mut exponents: Vec<(usize, i64)> = Vec::new();
        for factor in split_factors(&term) {
            if factor.is_empty() {
                return Err(Error::parse(format!("empty factor in `{term}`")));
            }
            match parse_var_factor(&factor) {
                Some(res) => {
                    let (idx, exp) = res?;
                    exponents.push((idx, exp));
                }
                None => {
                    let inner = factor
                        .strip_prefix('(')
                        .and_then(|t| t.strip_suffix(')'))
                        .unwrap_or(&factor);
                    coeff = field.mul(&coeff, &field.parse_elem(inner)?);
                }
            }
        }
        if sign < 0 {
            coeff = field.neg(&coeff);
        }
        out.push(RawTerm { coeff, exponents });
    }
    Ok(out)
}

/// Materialize parsed terms as a polynomial. With `nvars = None` the arity
/// is the largest variable index mentioned (at least 1).
pub fn parse_polynomial<F: Field>(
    field: &F,
    s: &str,
    nvars: Option<usize>,
) -> Result<Polynomial<F>> {
    let terms = parse_poly_terms(field, s)?;
    let seen = terms.iter().flat_map(|t| t.exponents.iter().map(|(i, _)| *i)).max().unwrap_or(1);
    let n = match nvars {
        Some(n) if seen > n => {
            return Err(Error::parse(format!("variable t{seen} exceeds arity {n}")));
        }
        Some(n) => n,
        None => seen.max(1),
    };
    let mut p = Polynomial::zero(field.clone(), n);
    for term in terms {
        let mut exps = vec![0u64; n];
        for (idx, e) in term.exponents {
            if e < 0 {
                return Err(Error::parse("negative exponents are not allowed here"));
            }
            exps[idx - 1] += e as u64;
        }
        p = p.add(&Polynomial::monomial(field.clone(), exps, term.coeff))?;
    }
    Ok(p)
}

fn inline_coeff<F: Field>(field: &F, c: &F::Elem) -> String {
    let s = field.render_elem(c);
    // strip the `v mod p` context inside polynomial text
    let s = match s.split_once(" mod ") {
        Some((v, _)) => v.to_string(),
        None => s,
    };
    let needs_parens = s
        .char_indices()
        .any(|(i, ch)| (ch == '+' || ch == '-') && i > 0 && !matches!(&s[i - 1..i], "e" | "E"));
    if needs_parens {
        format!("({s})")
    } else {
        s
    }
}

/// Canonical rendering of the polynomial grammar; parses back to an equal
/// polynomial.
pub fn render_polynomial<F: Field>(p: &Polynomial<F>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let field = p.field();
    let mut out = String::new();
    for (alpha, c) in p.iter() {
        let MonoidElement::Multi(exps) = alpha else { unreachable!() };
        let mut piece = inline_coeff(field, c);
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                let var = if p.nvars() == 1 { "t".to_string() } else { format!("t{}", i + 1) };
                piece.push_str(&format!("*{var}^{e}"));
            }
        }
        if out.is_empty() {
            out = piece;
        } else if let Some(rest) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&piece);
        }
    }
    out
}
