//! Shared random generators for the property suites.
#![allow(dead_code)]

use convalg::conv::FinSupp;
use convalg::monoid::{Monoid, MonoidElement};
use convalg::poly::Polynomial;
use convalg::scalars::{ComplexFloat, Field, PrimeField, Rational, RationalField};
use rand::rngs::StdRng;
use rand::Rng;

pub fn rand_rational(rng: &mut StdRng, bound: i64) -> Rational {
    let num = rng.random_range(-bound..=bound);
    let den = rng.random_range(1..=bound);
    Rational::new(num, den).expect("positive denominator")
}

pub fn rand_fp(field: &PrimeField, rng: &mut StdRng) -> convalg::scalars::PrimeFieldElement {
    field.elem(rng.random_range(0..field.modulus()) as i64)
}

pub fn rand_complex(rng: &mut StdRng, bound: f64) -> ComplexFloat {
    ComplexFloat::new(rng.random_range(-bound..bound), rng.random_range(-bound..bound))
        .expect("finite components")
}

pub fn rand_element(monoid: &Monoid, rng: &mut StdRng) -> MonoidElement {
    match monoid {
        Monoid::IntegersZ => MonoidElement::Int(rng.random_range(-12..=12)),
        Monoid::WholesW => MonoidElement::Whole(rng.random_range(0..=12)),
        Monoid::MultiIndexWn(n) => {
            MonoidElement::Multi((0..*n).map(|_| rng.random_range(0..=5)).collect())
        }
        Monoid::ResidueZm(m) => MonoidElement::Residue(rng.random_range(0..*m)),
    }
}

pub fn rand_finsupp<F: Field>(
    monoid: &Monoid,
    field: &F,
    rng: &mut StdRng,
    terms: usize,
    mut scalar: impl FnMut(&mut StdRng) -> F::Elem,
) -> FinSupp<F> {
    let mut f = FinSupp::zero(monoid.clone(), field.clone());
    for _ in 0..terms {
        f.add_at(rand_element(monoid, rng), scalar(rng)).expect("valid element");
    }
    f
}

/// Random polynomial with total degree at most `max_deg`.
pub fn rand_poly<F: Field>(
    field: &F,
    nvars: usize,
    max_deg: u64,
    rng: &mut StdRng,
    terms: usize,
    mut scalar: impl FnMut(&mut StdRng) -> F::Elem,
) -> Polynomial<F> {
    let mut p = Polynomial::zero(field.clone(), nvars);
    for _ in 0..terms {
        let mut exps = vec![0u64; nvars];
        let mut budget = max_deg;
        for e in exps.iter_mut() {
            let step = rng.random_range(0..=budget);
            *e = step;
            budget -= step;
        }
        p = p.add(&Polynomial::monomial(field.clone(), exps, scalar(rng))).expect("same context");
    }
    p
}

pub fn rand_poly_q(rng: &mut StdRng, nvars: usize, max_deg: u64) -> Polynomial<RationalField> {
    rand_poly(&RationalField, nvars, max_deg, rng, 4, |r| rand_rational(r, 10))
}

pub fn approx_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs() + b.abs())
}

pub fn complex_approx_eq(a: &ComplexFloat, b: &ComplexFloat, tol: f64) -> bool {
    a.sub(b).modulus() <= tol * (1.0 + a.modulus() + b.modulus())
}
