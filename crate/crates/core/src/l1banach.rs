//! Finite-support complex sequence algebras on Z and W under convolution,
//! with the l1 norm: Neumann-series inversion with certified tail bounds,
//! resolvent certificates, spectral-radius estimation against an
//! independent circle maximum, and evaluation of the associated function on
//! the unit circle (or closed disk, for W).
//!
//! Everything here is desk-scale numerics: elements are finite supports
//! (dense in the full sequence space), accumulation orders are fixed
//! ascending by index so results are identical run to run, and no operation
//! claims to locate a spectrum point — only certified non-membership and
//! norm-based estimates.

use std::collections::BTreeMap;

use crate::conv::FinSupp;
use crate::error::{Error, Result};
use crate::monoid::{Monoid, MonoidElement};
use crate::scalars::{ComplexField, ComplexFloat};

/// Index sets for sequence algebras: the integers or the whole numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeqMonoid {
    Integers,
    Wholes,
}

impl SeqMonoid {
    fn to_monoid(self) -> Monoid {
        match self {
            SeqMonoid::Integers => Monoid::IntegersZ,
            SeqMonoid::Wholes => Monoid::WholesW,
        }
    }

    fn element(self, j: i64) -> Result<MonoidElement> {
        match self {
            SeqMonoid::Integers => Ok(MonoidElement::Int(j)),
            SeqMonoid::Wholes => {
                let j = u64::try_from(j).map_err(|_| {
                    Error::OutsideDomain(format!("index {j} is negative but the monoid is W"))
                })?;
                Ok(MonoidElement::Whole(j))
            }
        }
    }

    fn index(element: &MonoidElement) -> i64 {
        match element {
            MonoidElement::Int(j) => *j,
            MonoidElement::Whole(j) => *j as i64,
            other => unreachable!("sequence element {other:?}"),
        }
    }
}

/// A finite-support complex sequence on Z or W; entries with modulus zero
/// are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct L1Seq {
    monoid: SeqMonoid,
    inner: FinSupp<ComplexField>,
}

/// Squaring the convolution power stops once the working support would
/// exceed this many entries.
pub const SUPPORT_CAP: usize = 1 << 16;

impl L1Seq {
    pub fn zero(monoid: SeqMonoid) -> Self {
        L1Seq { monoid, inner: FinSupp::zero(monoid.to_monoid(), ComplexField) }
    }

    pub fn delta(monoid: SeqMonoid, j: i64) -> Result<Self> {
        let x = monoid.element(j)?;
        Ok(L1Seq { monoid, inner: FinSupp::delta(monoid.to_monoid(), ComplexField, x)? })
    }

    pub fn from_entries(
        monoid: SeqMonoid,
        entries: impl IntoIterator<Item = (i64, ComplexFloat)>,
    ) -> Result<Self> {
        let mut seq = L1Seq::zero(monoid);
        for (j, v) in entries {
            seq.add_at(j, v)?;
        }
        Ok(seq)
    }

    pub fn monoid(&self) -> SeqMonoid {
        self.monoid
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn coeff(&self, j: i64) -> ComplexFloat {
        match self.monoid.element(j) {
            Ok(x) => self.inner.coeff(&x),
            Err(_) => ComplexFloat::ZERO,
        }
    }

    pub fn add_at(&mut self, j: i64, v: ComplexFloat) -> Result<()> {
        self.inner.add_at(self.monoid.element(j)?, v)
    }

    /// Entries ascending by index.
    pub fn entries(&self) -> Vec<(i64, ComplexFloat)> {
        self.inner.iter().map(|(x, v)| (SeqMonoid::index(x), *v)).collect()
    }

    /// Support indices, ascending.
    pub fn support(&self) -> Vec<i64> {
        self.inner.support().iter().map(SeqMonoid::index).collect()
    }

    /// The l1 norm: the sum of entry moduli, accumulated in ascending index
    /// order. Zero exactly when the sequence is zero.
    pub fn l1_norm(&self) -> f64 {
        self.inner.iter().map(|(_, v)| v.modulus()).sum()
    }

    fn check_monoid(&self, other: &Self) -> Result<()> {
        if self.monoid != other.monoid {
            return Err(Error::ContextMismatch(format!("{:?} vs {:?}", self.monoid, other.monoid)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_monoid(other)?;
        Ok(L1Seq { monoid: self.monoid, inner: self.inner.pointwise_add(&other.inner)? })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_monoid(other)?;
        Ok(L1Seq { monoid: self.monoid, inner: self.inner.pointwise_sub(&other.inner)? })
    }

    pub fn neg(&self) -> Self {
        L1Seq { monoid: self.monoid, inner: self.inner.neg() }
    }

    pub fn scale(&self, c: ComplexFloat) -> Self {
        L1Seq { monoid: self.monoid, inner: self.inner.scale(&c) }
    }

    /// Finite-support convolution; satisfies the norm inequality
    /// |f * g|_1 <= |f|_1 |g|_1 up to rounding.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check_monoid(other)?;
        Ok(L1Seq { monoid: self.monoid, inner: self.inner.convolve(&other.inner)? })
    }

    /// Reinterpret a W-sequence inside l1(Z), where W-supported sequences
    /// form a subalgebra.
    pub fn embedded_in_integers(&self) -> Self {
        let mut out = L1Seq::zero(SeqMonoid::Integers);
        for (j, v) in self.entries() {
            out.add_at(j, v).expect("integer indices are unrestricted");
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Neumann series and resolvents
// ---------------------------------------------------------------------------

/// Invert e - x for |x|_1 < 1 by accumulating the Neumann partial sums
/// until the geometric tail bound |x|^{n+1}/(1 - |x|) drops below `tol`.
///
/// The telescoping identity (e - x) * S_n = e - x^{n+1} makes the residual
/// directly measurable, and it is checked before returning.
pub fn neumann_inverse(x: &L1Seq, tol: f64, max_terms: usize) -> Result<L1Seq> {
    let norm = x.l1_norm();
    if norm >= 1.0 {
        return Err(Error::NormTooLarge { norm });
    }
    assert!(tol > 0.0, "tolerance must be positive");
    let e = L1Seq::delta(x.monoid(), 0).expect("identity index");
    let mut sum = e.clone();
    let mut term = e.clone();
    let mut n: u32 = 0;
    while norm > 0.0 && norm.powi(n as i32 + 1) / (1.0 - norm) > tol {
        if n as usize >= max_terms {
            let residual = neumann_residual(x, &sum)?;
            return Err(Error::IterationBudget { residual });
        }
        term = term.convolve(x)?;
        sum = sum.add(&term)?;
        n += 1;
    }
    let residual = neumann_residual(x, &sum)?;
    if residual > tol {
        return Err(Error::IterationBudget { residual });
    }
    Ok(sum)
}

/// |(e - x) * s - e|_1, the inversion defect of a candidate inverse.
pub fn neumann_residual(x: &L1Seq, s: &L1Seq) -> Result<f64> {
    let e = L1Seq::delta(x.monoid(), 0).expect("identity index");
    let defect = e.sub(x)?.convolve(s)?.sub(&e)?;
    Ok(defect.l1_norm())
}

/// Outcome of a resolvent query at a point lambda.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ResolventStatus {
    /// |lambda| > |x|_1, so x - lambda e = -lambda (e - x/lambda) is
    /// invertible.
    CertifiedInvertible,
    /// No certificate; nothing is claimed about spectrum membership.
    Unknown,
}

pub fn resolvent_certificate(x: &L1Seq, lambda: ComplexFloat) -> ResolventStatus {
    if lambda.modulus() > x.l1_norm() {
        ResolventStatus::CertifiedInvertible
    } else {
        ResolventStatus::Unknown
    }
}

// ---------------------------------------------------------------------------
// Spectral radius and the circle
// ---------------------------------------------------------------------------

/// Norm-root estimates r_n = |x^{*n}|^{1/n} at n = 1, 2, 4, ..., together
/// with the independent grid maximum of |phi_x| on the unit circle that the
/// estimates approach from above.
#[derive(Clone, PartialEq, Debug)]
pub struct SpectralReport {
    pub radius_estimates: Vec<(u64, f64)>,
    pub circle_max: f64,
    pub grid_size: u64,
}

/// Compute convolution powers by repeated squaring, recording the norm root
/// at each power of two up to `n_max`, plus the circle maximum on a uniform
/// grid.
pub fn spectral_radius_estimate(x: &L1Seq, n_max: u64, grid: u64) -> Result<SpectralReport> {
    assert!(n_max >= 1, "need at least one power");
    let mut estimates = vec![(1u64, x.l1_norm())];
    let mut power = x.clone();
    let mut n = 1u64;
    while 2 * n <= n_max {
        if power.len() > SUPPORT_CAP {
            return Err(Error::SupportCap { cap: SUPPORT_CAP });
        }
        power = power.convolve(&power)?;
        n *= 2;
        estimates.push((n, power.l1_norm().powf(1.0 / n as f64)));
    }
    let circle_max = sup_norm_estimate(x, grid);
    Ok(SpectralReport { radius_estimates: estimates, circle_max, grid_size: grid })
}

/// Evaluate phi_f(z) = sum f(j) z^j. For sequences on Z the point must lie
/// on the unit circle; for W anywhere on the closed unit disk (tolerance
/// 1e-9 in both cases).
pub fn fourier_eval(f: &L1Seq, z: ComplexFloat) -> Result<ComplexFloat> {
    let m = z.modulus();
    match f.monoid() {
        SeqMonoid::Integers => {
            if (m - 1.0).abs() > 1e-9 {
                return Err(Error::OutsideDomain(format!(
                    "|z| = {m} but sequences on Z evaluate on the unit circle"
                )));
            }
        }
        SeqMonoid::Wholes => {
            if m > 1.0 + 1e-9 {
                return Err(Error::OutsideDomain(format!(
                    "|z| = {m} but sequences on W evaluate on the closed unit disk"
                )));
            }
        }
    }
    let mut acc = ComplexFloat::ZERO;
    for (j, v) in f.entries() {
        acc = acc.add(&v.mul(&z.powi(j)?));
    }
    Ok(acc)
}

/// Maximum of |phi_f| over `grid` uniformly spaced points of the circle; a
/// lower bound for the supremum, converging as the grid refines.
pub fn sup_norm_estimate(f: &L1Seq, grid: u64) -> f64 {
    assert!(grid >= 1, "need at least one sample");
    let mut best = 0.0f64;
    for k in 0..grid {
        let theta = 2.0 * std::f64::consts::PI * (k as f64) / (grid as f64);
        let value = fourier_eval(f, ComplexFloat::unit(theta))
            .expect("unit-circle points are always admissible");
        best = best.max(value.modulus());
    }
    best
}

/// Parse complex coefficient lines `<index> <x+yi>` for a sequence on the
/// chosen monoid.
pub fn parse_l1_text(monoid: SeqMonoid, text: &str) -> Result<L1Seq> {
    let raw = crate::conv::parse_coef_text(monoid.to_monoid(), ComplexField, text)?;
    let mut entries: BTreeMap<i64, ComplexFloat> = BTreeMap::new();
    for (x, v) in raw.iter() {
        entries.insert(SeqMonoid::index(x), *v);
    }
    L1Seq::from_entries(monoid, entries)
}

/// Render a sequence in the coefficient line format, ascending by index.
pub fn render_l1_table(f: &L1Seq) -> String {
    let mut out = String::new();
    for (j, v) in f.entries() {
        out.push_str(&format!("{j} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexFloat {
        ComplexFloat::new(re, im).unwrap()
    }

    #[test]
    fn l1_norm_examples() {
        let d0 = L1Seq::delta(SeqMonoid::Integers, 0).unwrap();
        assert_eq!(d0.l1_norm(), 1.0);
        let f = L1Seq::from_entries(SeqMonoid::Integers, [(1, c(1.0, 0.0)), (-1, c(-1.0, 0.0))])
            .unwrap();
        assert_eq!(f.l1_norm(), 2.0);
        let g = L1Seq::from_entries(SeqMonoid::Wholes, [(0, c(3.0, 4.0))]).unwrap();
        assert_eq!(g.l1_norm(), 5.0);
        assert_eq!(L1Seq::zero(SeqMonoid::Wholes).l1_norm(), 0.0);
    }

    #[test]
    fn w_sequences_reject_negative_indices() {
        assert!(L1Seq::delta(SeqMonoid::Wholes, -1).is_err());
        let mut f = L1Seq::zero(SeqMonoid::Wholes);
        assert!(f.add_at(-3, c(1.0, 0.0)).is_err());
    }

    #[test]
    fn convolution_examples() {
        let d1 = L1Seq::delta(SeqMonoid::Integers, 1).unwrap();
        let d2 = L1Seq::delta(SeqMonoid::Integers, 2).unwrap();
        assert_eq!(d1.convolve(&d2).unwrap(), L1Seq::delta(SeqMonoid::Integers, 3).unwrap());

        let d0 = L1Seq::delta(SeqMonoid::Integers, 0).unwrap();
        let f = L1Seq::from_entries(SeqMonoid::Integers, [(-2, c(0.5, 1.0)), (4, c(0.0, -3.0))])
            .unwrap();
        assert_eq!(d0.convolve(&f).unwrap(), f);

        // ((d_{-1} + d_1)/2)^2 = d_{-2}/4 + d_0/2 + d_2/4
        let g = L1Seq::from_entries(SeqMonoid::Integers, [(-1, c(0.5, 0.0)), (1, c(0.5, 0.0))])
            .unwrap();
        let sq = g.convolve(&g).unwrap();
        assert_eq!(sq.coeff(-2), c(0.25, 0.0));
        assert_eq!(sq.coeff(0), c(0.5, 0.0));
        assert_eq!(sq.coeff(2), c(0.25, 0.0));
        assert_eq!(sq.len(), 3);

        let w = L1Seq::delta(SeqMonoid::Wholes, 1).unwrap();
        assert!(w.convolve(&d1).is_err());
    }

    #[test]
    fn neumann_identity_for_zero() {
        let zero = L1Seq::zero(SeqMonoid::Wholes);
        let inv = neumann_inverse(&zero, 1e-12, 10).unwrap();
        assert_eq!(inv, L1Seq::delta(SeqMonoid::Wholes, 0).unwrap());
    }

    #[test]
    fn neumann_geometric_example() {
        // x = d_1/2 on W: inverse coefficients 2^{-j}, norm close to 2
        let x = L1Seq::from_entries(SeqMonoid::Wholes, [(1, c(0.5, 0.0))]).unwrap();
        let s = neumann_inverse(&x, 1e-12, 100).unwrap();
        for j in 0..10 {
            assert!((s.coeff(j).re() - 0.5f64.powi(j as i32)).abs() < 1e-15);
        }
        let norm = s.l1_norm();
        assert!((norm - 2.0).abs() <= 1e-9, "norm {norm}");
        assert!(neumann_residual(&x, &s).unwrap() <= 1e-12);
    }

    #[test]
    fn neumann_rejects_large_norm() {
        let x = L1Seq::from_entries(SeqMonoid::Integers, [(1, c(1.2, 0.0))]).unwrap();
        assert!(matches!(neumann_inverse(&x, 1e-9, 100), Err(Error::NormTooLarge { .. })));
    }

    #[test]
    fn neumann_budget_error_reports_residual() {
        let x = L1Seq::from_entries(SeqMonoid::Wholes, [(1, c(0.9, 0.0))]).unwrap();
        match neumann_inverse(&x, 1e-12, 3) {
            Err(Error::IterationBudget { residual }) => {
                assert!(residual > 1e-12 && residual < 1.0);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn resolvent_examples() {
        let d1 = L1Seq::delta(SeqMonoid::Integers, 1).unwrap();
        assert_eq!(resolvent_certificate(&d1, c(2.0, 0.0)), ResolventStatus::CertifiedInvertible);
        assert_eq!(resolvent_certificate(&d1, c(1.0, 0.0)), ResolventStatus::Unknown);
        let zero = L1Seq::zero(SeqMonoid::Integers);
        assert_eq!(resolvent_certificate(&zero, c(3.0, 0.0)), ResolventStatus::CertifiedInvertible);
        // 0 lies in the spectrum of 0: no certificate
        assert_eq!(resolvent_certificate(&zero, ComplexFloat::ZERO), ResolventStatus::Unknown);
    }

    #[test]
    fn spectral_radius_of_delta() {
        let d1 = L1Seq::delta(SeqMonoid::Integers, 1).unwrap();
        let report = spectral_radius_estimate(&d1, 16, 128).unwrap();
        for (_, r) in &report.radius_estimates {
            assert!((r - 1.0).abs() < 1e-12);
        }
        assert!((report.circle_max - 1.0).abs() < 1e-12);
    }

    #[test]
    fn spectral_radius_nonnegative_coefficients() {
        let x = L1Seq::from_entries(SeqMonoid::Integers, [(-1, c(0.5, 0.0)), (1, c(0.5, 0.0))])
            .unwrap();
        let report = spectral_radius_estimate(&x, 8, 1000).unwrap();
        for (n, r) in &report.radius_estimates {
            assert!((r - 1.0).abs() < 1e-12, "r_{n} = {r}");
        }
        assert!((report.circle_max - 1.0).abs() < 1e-6);
    }

    #[test]
    fn fourier_examples() {
        let d0 = L1Seq::delta(SeqMonoid::Integers, 0).unwrap();
        let z = ComplexFloat::unit(0.7);
        assert_eq!(fourier_eval(&d0, z).unwrap(), ComplexFloat::ONE);

        let d1 = L1Seq::delta(SeqMonoid::Integers, 1).unwrap();
        let v = fourier_eval(&d1, z).unwrap();
        assert!((v.re() - 0.7f64.cos()).abs() < 1e-15);
        assert!((v.im() - 0.7f64.sin()).abs() < 1e-15);

        // (d_1 + d_{-1})/2 evaluates to cos(theta)
        let f = L1Seq::from_entries(SeqMonoid::Integers, [(1, c(0.5, 0.0)), (-1, c(0.5, 0.0))])
            .unwrap();
        for theta in [0.0, 0.3, 1.9, 3.0] {
            let v = fourier_eval(&f, ComplexFloat::unit(theta)).unwrap();
            assert!((v.re() - theta.cos()).abs() < 1e-12);
            assert!(v.im().abs() < 1e-12);
        }
    }

    #[test]
    fn fourier_domain_checks() {
        let d1 = L1Seq::delta(SeqMonoid::Integers, 1).unwrap();
        assert!(matches!(fourier_eval(&d1, c(0.5, 0.0)), Err(Error::OutsideDomain(_))));
        // W sequences extend to the whole closed disk
        let w =
            L1Seq::from_entries(SeqMonoid::Wholes, [(0, c(1.0, 0.0)), (2, c(1.0, 0.0))]).unwrap();
        let v = fourier_eval(&w, c(0.5, 0.0)).unwrap();
        assert!((v.re() - 1.25).abs() < 1e-15);
        assert!(fourier_eval(&w, c(1.5, 0.0)).is_err());
        // z = 0 picks out the constant term
        assert_eq!(fourier_eval(&w, ComplexFloat::ZERO).unwrap(), ComplexFloat::ONE);
    }

    #[test]
    fn sup_norm_examples() {
        let d1 = L1Seq::delta(SeqMonoid::Integers, 1).unwrap();
        assert!((sup_norm_estimate(&d1, 100) - 1.0).abs() < 1e-12);

        let cosine =
            L1Seq::from_entries(SeqMonoid::Integers, [(1, c(0.5, 0.0)), (-1, c(0.5, 0.0))])
                .unwrap();
        let est = sup_norm_estimate(&cosine, 10_000);
        assert!((est - 1.0).abs() < 1e-7);

        // f(0)=1, f(1)=1, f(-1)=-1 has |phi| = |1 + 2 i sin theta|, max sqrt(5)
        let f = L1Seq::from_entries(
            SeqMonoid::Integers,
            [(0, c(1.0, 0.0)), (1, c(1.0, 0.0)), (-1, c(-1.0, 0.0))],
        )
        .unwrap();
        let est = sup_norm_estimate(&f, 10_000);
        assert!((est - 5f64.sqrt()).abs() < 1e-9, "estimate {est}");
    }

    #[test]
    fn w_embedding_agrees_with_native_convolution() {
        let f =
            L1Seq::from_entries(SeqMonoid::Wholes, [(0, c(1.0, 2.0)), (3, c(-0.5, 0.25))]).unwrap();
        let g =
            L1Seq::from_entries(SeqMonoid::Wholes, [(1, c(0.75, 0.0)), (2, c(0.0, -1.0))]).unwrap();
        let native = f.convolve(&g).unwrap();
        let embedded = f.embedded_in_integers().convolve(&g.embedded_in_integers()).unwrap();
        assert_eq!(native.support(), embedded.support());
        for (j, v) in native.entries() {
            let w = embedded.coeff(j);
            assert!(v.sub(&w).modulus() <= 1e-12);
        }
    }

    #[test]
    fn support_cap_stops_runaway_powers() {
        let mut big = L1Seq::zero(SeqMonoid::Wholes);
        for j in 0..=(SUPPORT_CAP as i64) {
            big.add_at(j, ComplexFloat::new(1e-9, 0.0).unwrap()).unwrap();
        }
        assert!(matches!(spectral_radius_estimate(&big, 4, 1), Err(Error::SupportCap { .. })));
    }

    #[test]
    fn l1_text_round_trip() {
        let text = "-2 5.00000000e-1+2.50000000e-1i\n0 1.00000000e0+0i\n";
        let f = parse_l1_text(SeqMonoid::Integers, text).unwrap();
        assert_eq!(f.coeff(-2), c(0.5, 0.25));
        let rendered = render_l1_table(&f);
        let back = parse_l1_text(SeqMonoid::Integers, &rendered).unwrap();
        assert_eq!(back, f);
    }
}
