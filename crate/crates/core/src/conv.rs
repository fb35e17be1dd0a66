//! Convolution algebras of scalar-valued functions on a commutative monoid.
//!
//! Two representations share one kernel:
//!
//! * [`FinSupp`] — sparse, finitely supported functions. Closed under
//!   pointwise operations and under convolution, which iterates over the
//!   support product.
//! * [`CoefStream`] — total, lazily evaluated, memoized coefficient
//!   functions. Only available on monoids with the finite-decomposition
//!   property, where the convolution sum at each point is finite.
//!
//! [`TotalFn`] is the unmemoized total-rule escape hatch that also works on
//! Z, where a stream cannot exist; convolving a finite function against it
//! stays well-defined because the sum collapses to the finite support.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::monoid::{Monoid, MonoidElement};
use crate::scalars::Field;

/// Shared total coefficient rule.
type Rule<F> = Arc<dyn Fn(&MonoidElement) -> <F as Field>::Elem + Send + Sync>;

/// A finitely supported function from a monoid to a scalar field.
///
/// Invariants: stored values are nonzero and keys are canonical; writes purge
/// zeros immediately.
#[derive(Clone, PartialEq, Debug)]
pub struct FinSupp<F: Field> {
    monoid: Monoid,
    field: F,
    entries: BTreeMap<MonoidElement, F::Elem>,
}

impl<F: Field> FinSupp<F> {
    pub fn zero(monoid: Monoid, field: F) -> Self {
        FinSupp { monoid, field, entries: BTreeMap::new() }
    }

    /// The function with value 1 at `x` and 0 elsewhere.
    pub fn delta(monoid: Monoid, field: F, x: MonoidElement) -> Result<Self> {
        monoid.validate(&x)?;
        let mut entries = BTreeMap::new();
        entries.insert(x, field.one());
        Ok(FinSupp { monoid, field, entries })
    }

    pub fn from_entries(
        monoid: Monoid,
        field: F,
        entries: impl IntoIterator<Item = (MonoidElement, F::Elem)>,
    ) -> Result<Self> {
        let mut f = FinSupp::zero(monoid, field);
        for (x, v) in entries {
            f.add_at(x, v)?;
        }
        Ok(f)
    }

    pub fn monoid(&self) -> &Monoid {
        &self.monoid
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The set of elements where the function is nonzero, in canonical order.
    pub fn support(&self) -> Vec<MonoidElement> {
        self.entries.keys().cloned().collect()
    }

    /// Entries in canonical key order.
    pub fn iter(&self) -> impl Iterator<Item = (&MonoidElement, &F::Elem)> {
        self.entries.iter()
    }

    /// Value at `x`, zero off the support.
    pub fn coeff(&self, x: &MonoidElement) -> F::Elem {
        self.entries.get(x).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Overwrite the value at `x`; zero values erase the entry.
    pub fn set(&mut self, x: MonoidElement, v: F::Elem) -> Result<()> {
        self.monoid.validate(&x)?;
        if self.field.is_zero(&v) {
            self.entries.remove(&x);
        } else {
            self.entries.insert(x, v);
        }
        Ok(())
    }

    /// Accumulate `v` into the value at `x`, purging zeros.
    pub fn add_at(&mut self, x: MonoidElement, v: F::Elem) -> Result<()> {
        self.monoid.validate(&x)?;
        let cur = self.coeff(&x);
        let next = self.field.add(&cur, &v);
        self.set(x, next)
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if self.monoid != other.monoid || self.field != other.field {
            return Err(Error::ContextMismatch(format!(
                "({:?}, {}) vs ({:?}, {})",
                self.monoid,
                self.field.name(),
                other.monoid,
                other.field.name()
            )));
        }
        Ok(())
    }

    pub fn pointwise_add(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (x, v) in &other.entries {
            out.add_at(x.clone(), v.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let entries = self.entries.iter().map(|(x, v)| (x.clone(), self.field.neg(v))).collect();
        FinSupp { monoid: self.monoid.clone(), field: self.field.clone(), entries }
    }

    pub fn pointwise_sub(&self, other: &Self) -> Result<Self> {
        self.pointwise_add(&other.neg())
    }

    /// Pointwise product; the support shrinks to the intersection.
    pub fn pointwise_mul(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut out = FinSupp::zero(self.monoid.clone(), self.field.clone());
        for (x, v) in &self.entries {
            if let Some(w) = other.entries.get(x) {
                out.set(x.clone(), self.field.mul(v, w))?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let mut entries = BTreeMap::new();
        for (x, v) in &self.entries {
            let w = self.field.mul(c, v);
            if !self.field.is_zero(&w) {
                entries.insert(x.clone(), w);
            }
        }
        FinSupp { monoid: self.monoid.clone(), field: self.field.clone(), entries }
    }

    /// Convolution of two finitely supported functions:
    /// (f * g)(z) = sum over x + y = z of f(x) g(y).
    ///
    /// Iterates over the support product, which is the sparse dimension, and
    /// accumulates at x + y in canonical key order.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut out = FinSupp::zero(self.monoid.clone(), self.field.clone());
        for (x, v) in &self.entries {
            for (y, w) in &other.entries {
                let z = self.monoid.op(x, y)?;
                out.add_at(z, self.field.mul(v, w))?;
            }
        }
        Ok(out)
    }

    /// View as a total function (zero off the support); valid on any monoid.
    pub fn as_total(&self) -> TotalFn<F> {
        let me = self.clone();
        TotalFn {
            monoid: self.monoid.clone(),
            field: self.field.clone(),
            rule: Arc::new(move |x| me.coeff(x)),
        }
    }

    /// Embed into a memoized stream; requires finite decomposition.
    pub fn to_stream(&self) -> Result<CoefStream<F>> {
        let me = self.clone();
        CoefStream::new(self.monoid.clone(), self.field.clone(), move |x| me.coeff(x))
    }
}

// ---------------------------------------------------------------------------
// Total rules and streams
// ---------------------------------------------------------------------------

/// A total coefficient rule on a monoid, without memoization. Unlike
/// [`CoefStream`] this exists on Z as well.
#[derive(Clone)]
pub struct TotalFn<F: Field> {
    monoid: Monoid,
    field: F,
    rule: Rule<F>,
}

impl<F: Field> TotalFn<F> {
    pub fn new(
        monoid: Monoid,
        field: F,
        rule: impl Fn(&MonoidElement) -> F::Elem + Send + Sync + 'static,
    ) -> Self {
        TotalFn { monoid, field, rule: Arc::new(rule) }
    }

    pub fn monoid(&self) -> &Monoid {
        &self.monoid
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn eval(&self, x: &MonoidElement) -> Result<F::Elem> {
        self.monoid.validate(x)?;
        Ok((self.rule)(x))
    }
}

/// A total, lazily evaluated, memoized coefficient function on a monoid with
/// the finite-decomposition property.
///
/// Clones share the memo table; queries are serialized through a mutex so
/// concurrent access is linearizable and repeated queries return identical
/// scalars. Generators must only consult *other* streams, never the stream
/// they define.
#[derive(Clone)]
pub struct CoefStream<F: Field> {
    monoid: Monoid,
    field: F,
    generator: Rule<F>,
    memo: Arc<Mutex<BTreeMap<MonoidElement, F::Elem>>>,
}

impl<F: Field> CoefStream<F> {
    pub fn new(
        monoid: Monoid,
        field: F,
        generator: impl Fn(&MonoidElement) -> F::Elem + Send + Sync + 'static,
    ) -> Result<Self> {
        if !monoid.has_finite_decomposition() {
            return Err(Error::InfiniteDecomposition);
        }
        Ok(CoefStream {
            monoid,
            field,
            generator: Arc::new(generator),
            memo: Arc::new(Mutex::new(BTreeMap::new())),
        })
    }

    pub fn monoid(&self) -> &Monoid {
        &self.monoid
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeff(&self, x: &MonoidElement) -> Result<F::Elem> {
        self.monoid.validate(x)?;
        let mut memo = self.memo.lock().unwrap();
        if let Some(v) = memo.get(x) {
            return Ok(v.clone());
        }
        let v = (self.generator)(x);
        memo.insert(x.clone(), v.clone());
        Ok(v)
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if self.monoid != other.monoid || self.field != other.field {
            return Err(Error::ContextMismatch(format!(
                "({:?}, {}) vs ({:?}, {})",
                self.monoid,
                self.field.name(),
                other.monoid,
                other.field.name()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let (f, g, fld) = (self.clone(), other.clone(), self.field.clone());
        CoefStream::new(self.monoid.clone(), self.field.clone(), move |x| {
            fld.add(&f.coeff(x).expect("valid element"), &g.coeff(x).expect("valid element"))
        })
    }

    pub fn neg(&self) -> Self {
        let (f, fld) = (self.clone(), self.field.clone());
        CoefStream::new(self.monoid.clone(), self.field.clone(), move |x| {
            fld.neg(&f.coeff(x).expect("valid element"))
        })
        .expect("same monoid as an existing stream")
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: F::Elem) -> Self {
        let (f, fld) = (self.clone(), self.field.clone());
        CoefStream::new(self.monoid.clone(), self.field.clone(), move |x| {
            fld.mul(&c, &f.coeff(x).expect("valid element"))
        })
        .expect("same monoid as an existing stream")
    }

    /// Convolution of two streams: the coefficient at z is computed on
    /// demand as the finite sum over all decompositions of z, then memoized.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let (f, g, fld) = (self.clone(), other.clone(), self.field.clone());
        let monoid = self.monoid.clone();
        CoefStream::new(self.monoid.clone(), self.field.clone(), move |z| {
            let mut acc = fld.zero();
            for (x, y) in monoid.decompose(z).expect("finite decomposition") {
                let a = f.coeff(&x).expect("valid element");
                let b = g.coeff(&y).expect("valid element");
                acc = fld.add(&acc, &fld.mul(&a, &b));
            }
            acc
        })
    }

    pub fn as_total(&self) -> TotalFn<F> {
        let me = self.clone();
        TotalFn {
            monoid: self.monoid.clone(),
            field: self.field.clone(),
            rule: Arc::new(move |x| me.coeff(x).expect("valid element")),
        }
    }
}

/// Convolution of a finitely supported function against an arbitrary total
/// rule. On the group Z the partner index is the translation z - x; on
/// finite-decomposition monoids the sum runs over the decompositions of z
/// restricted to the support.
pub fn convolve_mixed<F: Field>(f: &FinSupp<F>, g: &TotalFn<F>) -> Result<TotalFn<F>> {
    if f.monoid() != g.monoid() || f.field() != g.field() {
        return Err(Error::ContextMismatch(format!(
            "({:?}, {}) vs ({:?}, {})",
            f.monoid(),
            f.field().name(),
            g.monoid(),
            g.field().name()
        )));
    }
    let monoid = f.monoid().clone();
    let result_monoid = monoid.clone();
    let field = f.field().clone();
    let f = f.clone();
    let g = g.clone();
    let rule = move |z: &MonoidElement| -> F::Elem {
        let fld = f.field();
        let mut acc = fld.zero();
        match (&monoid, z) {
            (Monoid::IntegersZ, MonoidElement::Int(n)) => {
                for (x, v) in f.iter() {
                    let MonoidElement::Int(a) = x else { unreachable!() };
                    let y = MonoidElement::Int(n - a);
                    acc = fld.add(&acc, &fld.mul(v, &g.eval(&y).expect("valid element")));
                }
            }
            _ => {
                for (x, y) in monoid.decompose(z).expect("finite decomposition") {
                    let v = f.coeff(&x);
                    if fld.is_zero(&v) {
                        continue;
                    }
                    acc = fld.add(&acc, &fld.mul(&v, &g.eval(&y).expect("valid element")));
                }
            }
        }
        acc
    };
    Ok(TotalFn::new(result_monoid, field, rule))
}

// ---------------------------------------------------------------------------
// Coefficient files
// ---------------------------------------------------------------------------

// Residue elements render as `r mod m`, so their element token spans three
// whitespace-separated words; everything else is a single word.
fn split_entry_line<'a>(monoid: &Monoid, line: &'a str) -> Option<(&'a str, &'a str)> {
    let mut words: Vec<(usize, usize)> = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                words.push((s, i));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        words.push((s, line.len()));
    }
    let take = |n: usize| -> Option<(&'a str, &'a str)> {
        (words.len() > n)
            .then(|| (&line[words[0].0..words[n - 1].1], line[words[n].0..].trim_end()))
    };
    if matches!(monoid, Monoid::ResidueZm(_))
        && words.len() >= 4
        && &line[words[1].0..words[1].1] == "mod"
    {
        return take(3);
    }
    take(1)
}

/// Parse the coefficient line format: one `<element> <scalar>` entry per
/// line, `#` comments, blank lines ignored, missing elements zero.
pub fn parse_coef_text<F: Field>(monoid: Monoid, field: F, text: &str) -> Result<FinSupp<F>> {
    let mut f = FinSupp::zero(monoid, field);
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (elem_tok, scalar_tok) = split_entry_line(f.monoid(), line).ok_or_else(|| {
            Error::parse_at(lineno, format!("expected `<element> <scalar>`, got `{line}`"))
        })?;
        let relocate = |e: Error| match e {
            Error::Parse { msg, .. } => Error::parse_at(lineno, msg),
            other => other,
        };
        let x = f.monoid().parse_element(elem_tok).map_err(relocate)?;
        let v = f.field().parse_elem(scalar_tok.trim()).map_err(relocate)?;
        if f.iter().any(|(k, _)| *k == x) {
            return Err(Error::parse_at(lineno, format!("duplicate element `{elem_tok}`")));
        }
        f.set(x, v)?;
    }
    Ok(f)
}

/// Render the coefficient table in canonical key order; round-trips through
/// [`parse_coef_text`] bit-exactly for exact scalar fields.
pub fn render_coef_table<F: Field>(f: &FinSupp<F>) -> String {
    let mut out = String::new();
    for (x, v) in f.iter() {
        out.push_str(&f.monoid().render_element(x));
        out.push(' ');
        out.push_str(&f.field().render_elem(v));
        out.push('\n');
    }
    out
}
