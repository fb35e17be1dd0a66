//! Formal power series with lazy coefficients, the Laurent series field, and
//! rational functions with cross-multiplication equality.
//!
//! Equality of streams is only decidable up to a queried bound, so the
//! operations here either work coefficientwise (series arithmetic) or demand
//! an explicit probe depth wherever a lowest nonzero coefficient has to be
//! certified (Laurent reciprocals).

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::conv::{CoefStream, FinSupp};
use crate::error::{Error, Result};
use crate::monoid::{multi_indices_of_degree, Monoid, MonoidElement};
use crate::poly::Polynomial;
use crate::scalars::Field;

/// Result of probing the vanishing order of a power series up to a bound.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VanishingOrder {
    /// Least total degree carrying a nonzero coefficient.
    Exact(u64),
    /// All coefficients of total degree below the probe vanish.
    AtLeast(u64),
}

/// A formal power series in `nvars` variables: a total, memoized coefficient
/// function on multi-indices.
#[derive(Clone)]
pub struct PowerSeries<F: Field> {
    nvars: usize,
    coeffs: CoefStream<F>,
}

impl<F: Field> PowerSeries<F> {
    /// Build a series from a total coefficient rule on exponent vectors.
    pub fn from_fn(
        field: F,
        nvars: usize,
        rule: impl Fn(&[u64]) -> F::Elem + Send + Sync + 'static,
    ) -> Self {
        assert!(nvars >= 1, "series need at least one variable");
        let coeffs = CoefStream::new(Monoid::MultiIndexWn(nvars), field, move |x| {
            let MonoidElement::Multi(exps) = x else { unreachable!() };
            rule(exps)
        })
        .expect("W^n has finite decomposition");
        PowerSeries { nvars, coeffs }
    }

    pub fn from_polynomial(p: &Polynomial<F>) -> Self {
        let table = p.coeffs().clone();
        let nvars = p.nvars();
        PowerSeries { nvars, coeffs: table.to_stream().expect("W^n has finite decomposition") }
    }

    pub fn constant(field: F, nvars: usize, c: F::Elem) -> Self {
        let zero = field.zero();
        PowerSeries::from_fn(field, nvars, move |exps| {
            if exps.iter().all(|&e| e == 0) {
                c.clone()
            } else {
                zero.clone()
            }
        })
    }

    pub fn one(field: F, nvars: usize) -> Self {
        let c = field.one();
        PowerSeries::constant(field, nvars, c)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> &F {
        self.coeffs.field()
    }

    pub fn stream(&self) -> &CoefStream<F> {
        &self.coeffs
    }

    pub fn coeff(&self, exps: &[u64]) -> Result<F::Elem> {
        if exps.len() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: exps.len() });
        }
        self.coeffs.coeff(&MonoidElement::Multi(exps.to_vec()))
    }

    fn wrap(&self, coeffs: CoefStream<F>) -> Self {
        PowerSeries { nvars: self.nvars, coeffs }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(self.wrap(self.coeffs.add(&other.coeffs)?))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(self.wrap(self.coeffs.sub(&other.coeffs)?))
    }

    pub fn neg(&self) -> Self {
        self.wrap(self.coeffs.neg())
    }

    pub fn scale(&self, c: F::Elem) -> Self {
        self.wrap(self.coeffs.scale(c))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(self.wrap(self.coeffs.convolve(&other.coeffs)?))
    }

    /// All coefficients of total degree `< order`, as a polynomial.
    pub fn truncate(&self, order: u64) -> Result<Polynomial<F>> {
        let field = self.field().clone();
        let mut table = FinSupp::zero(Monoid::MultiIndexWn(self.nvars), field);
        for d in 0..order {
            for exps in multi_indices_of_degree(self.nvars, d) {
                let v = self.coeff(&exps)?;
                table.set(MonoidElement::Multi(exps), v)?;
            }
        }
        Polynomial::from_finsupp(table)
    }

    /// Least degree `l < probe` with a nonzero coefficient at degree `l`,
    /// or `AtLeast(probe)` when every scanned coefficient vanishes.
    pub fn vanishing_order(&self, probe: u64) -> Result<VanishingOrder> {
        for d in 0..probe {
            for exps in multi_indices_of_degree(self.nvars, d) {
                if !self.field().is_zero(&self.coeff(&exps)?) {
                    return Ok(VanishingOrder::Exact(d));
                }
            }
        }
        Ok(VanishingOrder::AtLeast(probe))
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    ///
    /// Writing s = c (1 - p) with p of positive order, the inverse is the
    /// geometric expansion c^{-1} sum p^l, accumulated degree by degree: the
    /// coefficient of the inverse at alpha satisfies
    /// b_alpha = -c^{-1} sum over beta + gamma = alpha, beta != 0 of
    /// s_beta b_gamma, which consumes only coefficients of s up to |alpha|.
    pub fn invert(&self) -> Result<Self> {
        let zero_exps = vec![0u64; self.nvars];
        let c0 = self.coeff(&zero_exps)?;
        if self.field().is_zero(&c0) {
            return Err(Error::ZeroConstantTerm);
        }
        let inv_c0 = self.field().invert(&c0)?;
        let field = self.field().clone();
        let monoid = Monoid::MultiIndexWn(self.nvars);
        let src = self.coeffs.clone();
        let cache: Arc<Mutex<BTreeMap<MonoidElement, F::Elem>>> =
            Arc::new(Mutex::new(BTreeMap::new()));
        let coeffs = CoefStream::new(monoid.clone(), field.clone(), move |alpha| {
            let mut cache = cache.lock().unwrap();
            if let Some(v) = cache.get(alpha) {
                return v.clone();
            }
            // fill the box below alpha in ascending degree-then-lex order;
            // every decomposition summand is then already available
            let mut box_elems: Vec<MonoidElement> = monoid
                .decompose(alpha)
                .expect("finite decomposition")
                .into_iter()
                .map(|(beta, _)| beta)
                .collect();
            box_elems.sort();
            let identity = monoid.identity();
            for gamma in box_elems {
                if cache.contains_key(&gamma) {
                    continue;
                }
                let value = if gamma == identity {
                    inv_c0.clone()
                } else {
                    let mut sum = field.zero();
                    for (beta, rest) in monoid.decompose(&gamma).expect("finite decomposition") {
                        if beta == identity {
                            continue;
                        }
                        let s_beta = src.coeff(&beta).expect("valid element");
                        if field.is_zero(&s_beta) {
                            continue;
                        }
                        let b_rest = cache
                            .get(&rest)
                            .expect("ascending order fills smaller degrees first")
                            .clone();
                        sum = field.add(&sum, &field.mul(&s_beta, &b_rest));
                    }
                    field.neg(&field.mul(&inv_c0, &sum))
                };
                cache.insert(gamma, value);
            }
            cache.get(alpha).expect("alpha is in its own box").clone()
        })?;
        Ok(self.wrap(coeffs))
    }
}

/// The power series ring PS_n(k) as an algebra over k, so polynomials can
/// be evaluated at series arguments.
#[derive(Clone, PartialEq, Debug)]
pub struct PowerSeriesAlgebra<F: Field> {
    pub field: F,
    pub nvars: usize,
}

impl<F: Field> crate::algebra::Algebra<F> for PowerSeriesAlgebra<F> {
    type Elem = PowerSeries<F>;

    fn zero(&self) -> PowerSeries<F> {
        let z = self.field.zero();
        PowerSeries::constant(self.field.clone(), self.nvars, z)
    }

    fn one(&self) -> PowerSeries<F> {
        PowerSeries::one(self.field.clone(), self.nvars)
    }

    fn add(&self, a: &PowerSeries<F>, b: &PowerSeries<F>) -> PowerSeries<F> {
        a.add(b).expect("algebra elements share a context")
    }

    fn mul(&self, a: &PowerSeries<F>, b: &PowerSeries<F>) -> PowerSeries<F> {
        a.mul(b).expect("algebra elements share a context")
    }

    fn scalar_mul(&self, c: &F::Elem, a: &PowerSeries<F>) -> PowerSeries<F> {
        a.scale(c.clone())
    }
}

// stream equality is only decidable up to a queried bound, so PowerSeries
// deliberately has no PartialEq; Debug shows a truncation, clearly labeled
impl<F: Field> std::fmt::Debug for PowerSeries<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.truncate(8) {
            Ok(p) => write!(f, "PowerSeries({p:?} + O(deg 8))"),
            Err(_) => write!(f, "PowerSeries(<unavailable>)"),
        }
    }
}

// ---------------------------------------------------------------------------
// Laurent series
// ---------------------------------------------------------------------------

/// A formal Laurent series: a starting index and a stream of coefficients
/// c_{start + j} on the whole numbers.
#[derive(Clone)]
pub struct LaurentSeries<F: Field> {
    start: i64,
    coeffs: CoefStream<F>,
}

impl<F: Field> LaurentSeries<F> {
    pub fn from_fn(
        field: F,
        start: i64,
        rule: impl Fn(u64) -> F::Elem + Send + Sync + 'static,
    ) -> Self {
        let coeffs = CoefStream::new(Monoid::WholesW, field, move |x| {
            let MonoidElement::Whole(j) = x else { unreachable!() };
            rule(*j)
        })
        .expect("W has finite decomposition");
        LaurentSeries { start, coeffs }
    }

    /// Finite Laurent polynomial from (index, coefficient) terms.
    pub fn from_terms(field: F, terms: &[(i64, F::Elem)]) -> Self {
        let live: Vec<&(i64, F::Elem)> = terms.iter().filter(|(_, c)| !field.is_zero(c)).collect();
        let start = live.iter().map(|(j, _)| *j).min().unwrap_or(0);
        let mut table: BTreeMap<u64, F::Elem> = BTreeMap::new();
        for (j, c) in live {
            let slot = table.entry((j - start) as u64).or_insert_with(|| field.zero());
            *slot = field.add(slot, c);
        }
        let zero = field.zero();
        LaurentSeries::from_fn(field, start, move |j| {
            table.get(&j).cloned().unwrap_or_else(|| zero.clone())
        })
    }

    pub fn zero(field: F) -> Self {
        let zero = field.zero();
        LaurentSeries::from_fn(field, 0, move |_| zero.clone())
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn field(&self) -> &F {
        self.coeffs.field()
    }

    /// Coefficient of t^j; zero below the starting index.
    pub fn coeff(&self, j: i64) -> F::Elem {
        if j < self.start {
            return self.field().zero();
        }
        self.coeffs.coeff(&MonoidElement::Whole((j - self.start) as u64)).expect("whole index")
    }

    /// Least index in [start, start + probe) with a nonzero coefficient.
    pub fn leading_index(&self, probe: u64) -> Option<i64> {
        (0..probe).find_map(|j| {
            let idx = self.start + j as i64;
            (!self.field().is_zero(&self.coeff(idx))).then_some(idx)
        })
    }

    /// Advance the starting index past coefficients certified zero within
    /// the probe window; unchanged if nothing nonzero is found.
    pub fn normalize(&self, probe: u64) -> Self {
        match self.leading_index(probe) {
            Some(v) if v != self.start => {
                let src = self.clone();
                LaurentSeries::from_fn(self.field().clone(), v, move |j| src.coeff(v + j as i64))
            }
            _ => self.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.field() != other.field() {
            return Err(Error::ContextMismatch(format!(
                "{} vs {}",
                self.field().name(),
                other.field().name()
            )));
        }
        let start = self.start.min(other.start);
        let (a, b, field) = (self.clone(), other.clone(), self.field().clone());
        Ok(LaurentSeries::from_fn(field, start, move |j| {
            let idx = start + j as i64;
            a.field().add(&a.coeff(idx), &b.coeff(idx))
        }))
    }

    pub fn neg(&self) -> Self {
        let src = self.clone();
        LaurentSeries::from_fn(self.field().clone(), self.start, move |j| {
            src.field().neg(&src.coeff(src.start + j as i64))
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: F::Elem) -> Self {
        LaurentSeries { start: self.start, coeffs: self.coeffs.scale(c) }
    }

    /// Product of Laurent series: the starting index adds and the
    /// coefficient streams convolve.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(LaurentSeries {
            start: self.start + other.start,
            coeffs: self.coeffs.convolve(&other.coeffs)?,
        })
    }

    /// Reciprocal of a series whose lowest nonzero coefficient can be found
    /// within `probe` indices from the start. Factoring r = c t^v (1 + h)
    /// with h of positive order, the reciprocal is c^{-1} t^{-v} times the
    /// geometric inverse of the unit part.
    pub fn reciprocal(&self, probe: u64) -> Result<Self> {
        let v = self.leading_index(probe).ok_or(Error::UncertifiedNonzero { probe })?;
        let field = self.field().clone();
        let c = self.coeff(v);
        let c_inv = field.invert(&c)?;
        let src = self.clone();
        let c_inv_unit = c_inv.clone();
        let unit = PowerSeries::from_fn(field.clone(), 1, move |exps| {
            src.field().mul(&c_inv_unit, &src.coeff(v + exps[0] as i64))
        });
        let inv_unit = unit.invert()?;
        Ok(LaurentSeries::from_fn(field.clone(), -v, move |j| {
            field.mul(&c_inv, &inv_unit.coeff(&[j]).expect("arity 1"))
        }))
    }

    /// Coefficients at indices `start .. start + count` with their indices.
    pub fn table(&self, count: u64) -> Vec<(i64, F::Elem)> {
        (0..count)
            .map(|j| {
                let idx = self.start + j as i64;
                (idx, self.coeff(idx))
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Rational functions
// ---------------------------------------------------------------------------

/// A rational function p(t)/q(t) in canonical form: gcd(p, q) = 1 and q
/// monic. Cross-multiplication is the defining equality.
#[derive(Clone, PartialEq, Debug)]
pub struct RationalFunction<F: Field> {
    num: Polynomial<F>,
    den: Polynomial<F>,
}

impl<F: Field> RationalFunction<F> {
    pub fn new(num: Polynomial<F>, den: Polynomial<F>) -> Result<Self> {
        if num.nvars() != 1 || den.nvars() != 1 {
            return Err(Error::ArityMismatch { expected: 1, got: num.nvars().max(den.nvars()) });
        }
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            let field = num.field().clone();
            return Ok(RationalFunction { num, den: Polynomial::one(field, 1) });
        }
        let g = num.gcd_monic(&den)?;
        let (num, _) = num.divrem(&g)?;
        let (den, _) = den.divrem(&g)?;
        let lc_inv = den.field().invert(&den.leading_coeff().expect("nonzero"))?;
        Ok(RationalFunction { num: num.scale(&lc_inv), den: den.scale(&lc_inv) })
    }

    pub fn from_polynomial(p: Polynomial<F>) -> Result<Self> {
        let one = Polynomial::one(p.field().clone(), 1);
        RationalFunction::new(p, one)
    }

    pub fn numerator(&self) -> &Polynomial<F> {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Equality through the cross product: p1 q2 - p2 q1 = 0 identically.
    pub fn rat_equal(&self, other: &Self) -> Result<bool> {
        let lhs = self.num.mul(&other.den)?;
        let rhs = other.num.mul(&self.den)?;
        Ok(lhs.sub(&rhs)?.is_zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let num = self.num.mul(&other.den)?.add(&other.num.mul(&self.den)?)?;
        RationalFunction::new(num, self.den.mul(&other.den)?)
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        RationalFunction::new(self.num.mul(&other.num)?, self.den.mul(&other.den)?)
    }

    pub fn invert(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::NotInvertible("zero rational function".into()));
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    /// Embed into the Laurent series field. The starting index is
    /// ord(p) - ord(q), and the leading coefficient is nonzero, so the
    /// embedding is exact rather than probe-certified.
    pub fn to_laurent(&self) -> Result<LaurentSeries<F>> {
        let field = self.num.field().clone();
        if self.num.is_zero() {
            return Ok(LaurentSeries::zero(field));
        }
        let u = self.num.ord().expect("nonzero numerator");
        let w = self.den.ord().expect("nonzero denominator");
        let p_hat = self.num.shift_down(u);
        let q_hat = self.den.shift_down(w);
        let unit = PowerSeries::from_polynomial(&q_hat).invert()?;
        let num_series = PowerSeries::from_polynomial(&p_hat);
        let expanded = num_series.mul(&unit)?;
        let start = u as i64 - w as i64;
        Ok(LaurentSeries::from_fn(field, start, move |j| expanded.coeff(&[j]).expect("arity 1")))
    }
}
