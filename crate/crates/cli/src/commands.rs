use std::fmt::Write as _;

use convalg::conv::{parse_coef_text, render_coef_table, FinSupp};
use convalg::error::Error;
use convalg::expr::{eval_expr, parse_expr};
use convalg::ideals::{IntIdeal, IntQuotientRing, PolyIdeal, PolyQuotientRing};
use convalg::l1banach::{fourier_eval, parse_l1_text, spectral_radius_estimate, L1Seq, SeqMonoid};
use convalg::monoid::{multi_indices_of_degree, Monoid, MonoidElement};
use convalg::poly::{parse_poly_terms, parse_polynomial, render_polynomial, Polynomial, RawTerm};
use convalg::scalars::{fmt_f64, ComplexField, ComplexFloat, Field, PrimeField, RationalField};
use convalg::series::{LaurentSeries, PowerSeries, RationalFunction};

use crate::Cmd;

pub enum CliError {
    Usage(String),
    Domain { code: &'static str, msg: String },
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain { code: e.code(), msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum FieldSpec {
    Q,
    Fp(u64),
    C,
}

/// Accepts `Q`, `C`, `Fp:<p>`, and the bracketless `F<p>` shorthand.
fn parse_field_spec(s: &str) -> Result<FieldSpec, CliError> {
    let s = s.trim();
    match s {
        "Q" => return Ok(FieldSpec::Q),
        "C" => return Ok(FieldSpec::C),
        _ => {}
    }
    let digits = s
        .strip_prefix("Fp:")
        .or_else(|| s.strip_prefix('F'))
        .ok_or_else(|| usage(format!("unknown field `{s}` (expected Q, Fp:<p>, or C)")))?;
    let p: u64 = digits.parse().map_err(|_| usage(format!("bad prime in field spec `{s}`")))?;
    Ok(FieldSpec::Fp(p))
}

fn parse_monoid_spec(s: &str) -> Result<Monoid, CliError> {
    let s = s.trim();
    match s {
        "Z" => return Ok(Monoid::IntegersZ),
        "W" => return Ok(Monoid::WholesW),
        _ => {}
    }
    if let Some(n) = s.strip_prefix("W^") {
        let n: usize = n.parse().map_err(|_| usage(format!("bad arity in monoid spec `{s}`")))?;
        if n == 0 {
            return Err(usage("W^n needs n >= 1"));
        }
        return Ok(Monoid::MultiIndexWn(n));
    }
    if let Some(m) = s.strip_prefix("Zmod:") {
        let m: u64 = m.parse().map_err(|_| usage(format!("bad modulus in monoid spec `{s}`")))?;
        if m == 0 {
            return Err(usage("Zmod:<m> needs m >= 1"));
        }
        return Ok(Monoid::ResidueZm(m));
    }
    Err(usage(format!("unknown monoid `{s}` (expected Z, W, W^<n>, or Zmod:<m>)")))
}

fn parse_seq_monoid(s: &str) -> Result<SeqMonoid, CliError> {
    match s.trim() {
        "Z" => Ok(SeqMonoid::Integers),
        "W" => Ok(SeqMonoid::Wholes),
        other => Err(usage(format!("unknown monoid `{other}` (expected Z or W)"))),
    }
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Domain { code: "io", msg: format!("{path}: {e}") })
}

macro_rules! with_field {
    ($spec:expr, $f:ident => $body:expr) => {
        match $spec {
            FieldSpec::Q => {
                let $f = RationalField;
                $body
            }
            FieldSpec::Fp(p) => {
                let $f = PrimeField::new(p)?;
                $body
            }
            FieldSpec::C => {
                let $f = ComplexField;
                $body
            }
        }
    };
}

pub fn run(cmd: Cmd) -> Result<String, CliError> {
    match cmd {
        Cmd::Conv { monoid, field, input, files } => {
            let monoid = parse_monoid_spec(&monoid)?;
            let spec = parse_field_spec(&field)?;
            with_field!(spec, f => conv_verb(&monoid, f, &input, &files))
        }
        Cmd::SeriesInvert { field, input, order } => {
            let spec = parse_field_spec(&field)?;
            with_field!(spec, f => series_invert_verb(f, &input, order))
        }
        Cmd::LaurentRecip { field, input, probe, order } => {
            let spec = parse_field_spec(&field)?;
            with_field!(spec, f => laurent_recip_verb(f, &input, probe, order))
        }
        Cmd::PolyEval { field, input, at } => {
            let spec = parse_field_spec(&field)?;
            with_field!(spec, f => poly_eval_verb(f, &input, &at))
        }
        Cmd::PolyCompose { field, input, with } => {
            let spec = parse_field_spec(&field)?;
            with_field!(spec, f => poly_compose_verb(f, &input, &with))
        }
        Cmd::Quotient { ring, modulus, gen, eval } => quotient_verb(&ring, modulus, gen, &eval),
        Cmd::Classify { ring, gen } => classify_verb(&ring, &gen),
        Cmd::Specrad { input, monoid, nmax, grid } => {
            if nmax == 0 || grid == 0 {
                return Err(usage("--nmax and --grid must be positive"));
            }
            let monoid = parse_seq_monoid(&monoid)?;
            let seq = parse_l1_text(monoid, &read_file(&input)?)?;
            specrad_verb(&seq, nmax, grid)
        }
        Cmd::Fourier { input, monoid, grid } => {
            if grid == 0 {
                return Err(usage("--grid must be positive"));
            }
            let monoid = parse_seq_monoid(&monoid)?;
            let seq = parse_l1_text(monoid, &read_file(&input)?)?;
            fourier_verb(&seq, grid)
        }
        Cmd::Characteristic { field } => {
            let spec = parse_field_spec(&field)?;
            with_field!(spec, f => Ok(format!("{}\n", f.characteristic())))
        }
    }
}

// ---------------------------------------------------------------------------
// conv
// ---------------------------------------------------------------------------

/// Materialize polynomial-syntax terms as a coefficient function on any of
/// the four monoids: exponents become indices (reduced for Zmod, rejected
/// when negative on W).
fn terms_to_finsupp<F: Field>(
    monoid: &Monoid,
    field: &F,
    terms: Vec<RawTerm<F>>,
) -> Result<FinSupp<F>, CliError> {
    let mut out = FinSupp::zero(monoid.clone(), field.clone());
    for term in terms {
        let elem = match monoid {
            Monoid::MultiIndexWn(n) => {
                let mut exps = vec![0u64; *n];
                for (idx, e) in term.exponents {
                    if idx > *n {
                        return Err(Error::parse(format!(
                            "variable t{idx} exceeds monoid arity {n}"
                        ))
                        .into());
                    }
                    if e < 0 {
                        return Err(Error::parse("negative exponent on W^n").into());
                    }
                    exps[idx - 1] += e as u64;
                }
                MonoidElement::Multi(exps)
            }
            _ => {
                let mut total: i64 = 0;
                for (idx, e) in term.exponents {
                    if idx != 1 {
                        return Err(
                            Error::parse(format!("variable t{idx} needs a W^n monoid")).into()
                        );
                    }
                    total += e;
                }
                match monoid {
                    Monoid::IntegersZ => MonoidElement::Int(total),
                    Monoid::WholesW => {
                        let e = u64::try_from(total)
                            .map_err(|_| Error::parse("negative exponent on W"))?;
                        MonoidElement::Whole(e)
                    }
                    Monoid::ResidueZm(m) => {
                        let m_i = *m as i64;
                        MonoidElement::Residue(((total % m_i) + m_i) as u64 % m)
                    }
                    Monoid::MultiIndexWn(_) => unreachable!(),
                }
            }
        };
        out.add_at(elem, term.coeff)?;
    }
    Ok(out)
}

fn conv_verb<F: Field>(
    monoid: &Monoid,
    field: F,
    inline: &[String],
    files: &[String],
) -> Result<String, CliError> {
    let mut operands: Vec<FinSupp<F>> = Vec::new();
    for src in inline {
        operands.push(terms_to_finsupp(monoid, &field, parse_poly_terms(&field, src)?)?);
    }
    for path in files {
        operands.push(parse_coef_text(monoid.clone(), field.clone(), &read_file(path)?)?);
    }
    let [a, b] = operands.as_slice() else {
        return Err(usage(format!(
            "conv takes exactly two operands (inline or files), got {}",
            operands.len()
        )));
    };
    Ok(render_coef_table(&a.convolve(b)?))
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

fn parse_rational_input<F: Field>(
    field: &F,
    p_src: &str,
    q_src: &str,
) -> Result<RationalFunction<F>, CliError> {
    let p = parse_polynomial(field, p_src, Some(1))?;
    let q = parse_polynomial(field, q_src, Some(1))?;
    Ok(RationalFunction::new(p, q)?)
}

fn parse_series_input<F: Field>(field: &F, src: &str) -> Result<PowerSeries<F>, CliError> {
    let src = src.trim();
    if src == "geom" {
        let one = field.one();
        return Ok(PowerSeries::from_fn(field.clone(), 1, move |_| one.clone()));
    }
    if let Some((p_src, q_src)) = src.split_once(" / ") {
        let laurent = parse_rational_input(field, p_src, q_src)?.to_laurent()?;
        if laurent.start() < 0 {
            return Err(CliError::Domain {
                code: "outside-domain",
                msg: format!(
                    "expansion starts at t^{}, which is not a power series",
                    laurent.start()
                ),
            });
        }
        return Ok(PowerSeries::from_fn(field.clone(), 1, move |exps| {
            laurent.coeff(exps[0] as i64)
        }));
    }
    Ok(PowerSeries::from_polynomial(&parse_polynomial(field, src, None)?))
}

fn series_invert_verb<F: Field>(field: F, input: &str, order: u64) -> Result<String, CliError> {
    let series = parse_series_input(&field, input)?;
    let inv = series.invert()?;
    let mut out = String::new();
    if inv.nvars() == 1 {
        let row: Vec<String> = (0..order)
            .map(|j| Ok(field.render_elem(&inv.coeff(&[j])?)))
            .collect::<Result<_, Error>>()?;
        writeln!(out, "{}", row.join(" ")).unwrap();
    } else {
        let monoid = Monoid::MultiIndexWn(inv.nvars());
        for d in 0..order {
            for exps in multi_indices_of_degree(inv.nvars(), d) {
                let v = inv.coeff(&exps)?;
                let key = monoid.render_element(&MonoidElement::Multi(exps));
                writeln!(out, "{key} {}", field.render_elem(&v)).unwrap();
            }
        }
    }
    Ok(out)
}

fn parse_laurent_input<F: Field>(field: &F, src: &str) -> Result<LaurentSeries<F>, CliError> {
    let src = src.trim();
    if src == "geom" {
        let one = field.one();
        return Ok(LaurentSeries::from_fn(field.clone(), 0, move |_| one.clone()));
    }
    if let Some((p_src, q_src)) = src.split_once(" / ") {
        return Ok(parse_rational_input(field, p_src, q_src)?.to_laurent()?);
    }
    let mut terms = Vec::new();
    for term in parse_poly_terms(field, src)? {
        let mut exponent = 0i64;
        for (idx, e) in term.exponents {
            if idx != 1 {
                return Err(Error::parse("Laurent input is single-variable").into());
            }
            exponent += e;
        }
        terms.push((exponent, term.coeff));
    }
    Ok(LaurentSeries::from_terms(field.clone(), &terms))
}

fn laurent_recip_verb<F: Field>(
    field: F,
    input: &str,
    probe: u64,
    order: u64,
) -> Result<String, CliError> {
    let series = parse_laurent_input(&field, input)?;
    let inv = series.reciprocal(probe)?;
    let mut out = String::new();
    for (j, c) in inv.table(order) {
        writeln!(out, "{j} {}", field.render_elem(&c)).unwrap();
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// polynomials
// ---------------------------------------------------------------------------

fn poly_eval_verb<F: Field>(field: F, input: &str, at: &str) -> Result<String, CliError> {
    let p = parse_polynomial(&field, input, None)?;
    let args: Vec<F::Elem> =
        at.split(',').map(|tok| field.parse_elem(tok)).collect::<Result<_, Error>>()?;
    let alg = convalg::algebra::FieldAlgebra(field.clone());
    let value = p.evaluate(&alg, &args)?;
    Ok(format!("{}\n", field.render_elem(&value)))
}

fn poly_compose_verb<F: Field>(field: F, input: &str, with: &str) -> Result<String, CliError> {
    let p = parse_polynomial(&field, input, None)?;
    let sources: Vec<&str> = with.split(';').map(str::trim).collect();
    let parsed: Vec<Polynomial<F>> = sources
        .iter()
        .map(|src| parse_polynomial(&field, src, None))
        .collect::<Result<_, Error>>()?;
    let arity = parsed.iter().map(|q| q.nvars()).max().unwrap_or(1);
    let qs: Vec<Polynomial<F>> = sources
        .iter()
        .map(|src| parse_polynomial(&field, src, Some(arity)))
        .collect::<Result<_, Error>>()?;
    let composed = p.compose(&qs)?;
    Ok(format!("{}\n", render_polynomial(&composed)))
}

// ---------------------------------------------------------------------------
// quotient rings and ideals
// ---------------------------------------------------------------------------

enum RingSpec {
    Int,
    PolyOver(FieldSpec),
}

fn parse_ring_spec(s: &str) -> Result<RingSpec, CliError> {
    let s = s.trim();
    if s == "Z" {
        return Ok(RingSpec::Int);
    }
    if let Some(field) = s.strip_suffix("[t]") {
        return Ok(RingSpec::PolyOver(parse_field_spec(field)?));
    }
    Err(usage(format!("unknown ring `{s}` (expected Z or <field>[t])")))
}

fn quotient_verb(
    ring: &str,
    modulus: Option<String>,
    gen: Option<String>,
    eval: &str,
) -> Result<String, CliError> {
    let expr = parse_expr(eval)?;
    match parse_ring_spec(ring)? {
        RingSpec::Int => {
            let m = modulus.ok_or_else(|| usage("quotient over Z needs --mod <m>"))?;
            if gen.is_some() {
                return Err(usage("--gen applies to polynomial rings; use --mod for Z"));
            }
            let m: convalg::num_bigint::BigInt =
                m.trim().parse().map_err(|_| usage(format!("bad modulus `{m}`")))?;
            let ring = IntQuotientRing::new(m);
            let value = eval_expr(&ring, &expr)?;
            Ok(format!("{value}\n"))
        }
        RingSpec::PolyOver(spec) => {
            let g = gen.ok_or_else(|| usage("quotient over k[t] needs --gen <poly>"))?;
            if modulus.is_some() {
                return Err(usage("--mod applies to Z; use --gen for polynomial rings"));
            }
            with_field!(spec, f => {
                let modulus = parse_polynomial(&f, &g, Some(1))?;
                let ring = PolyQuotientRing::new(modulus)?;
                let value = eval_expr(&ring, &expr)?;
                Ok(format!("{}\n", render_polynomial(value.value())))
            })
        }
    }
}

fn classify_verb(ring: &str, gen: &str) -> Result<String, CliError> {
    match parse_ring_spec(ring)? {
        RingSpec::Int => {
            let g: convalg::num_bigint::BigInt =
                gen.trim().parse().map_err(|_| usage(format!("bad integer generator `{gen}`")))?;
            Ok(format!("{}\n", IntIdeal::new(g).classify()?))
        }
        RingSpec::PolyOver(FieldSpec::Q) => {
            let g = parse_polynomial(&RationalField, gen, Some(1))?;
            Ok(format!("{}\n", PolyIdeal::new(g)?.classify()?))
        }
        RingSpec::PolyOver(FieldSpec::Fp(p)) => {
            let f = PrimeField::new(p)?;
            let g = parse_polynomial(&f, gen, Some(1))?;
            Ok(format!("{}\n", PolyIdeal::new(g)?.classify()?))
        }
        RingSpec::PolyOver(FieldSpec::C) => Err(Error::ClassificationUnsupported(
            "irreducibility over C is not decided numerically".into(),
        )
        .into()),
    }
}

// ---------------------------------------------------------------------------
// l1 layer
// ---------------------------------------------------------------------------

fn specrad_verb(seq: &L1Seq, nmax: u64, grid: u64) -> Result<String, CliError> {
    let report = spectral_radius_estimate(seq, nmax, grid)?;
    let mut out = String::new();
    for (n, r) in &report.radius_estimates {
        writeln!(out, "{n} {}", fmt_f64(*r)).unwrap();
    }
    writeln!(out, "circle_max {}", fmt_f64(report.circle_max)).unwrap();
    Ok(out)
}

fn fourier_verb(seq: &L1Seq, grid: u64) -> Result<String, CliError> {
    let mut out = String::new();
    for k in 0..grid {
        let theta = 2.0 * std::f64::consts::PI * (k as f64) / (grid as f64);
        let v = fourier_eval(seq, ComplexFloat::unit(theta))?;
        writeln!(out, "{} {} {}", fmt_f64(theta), fmt_f64(v.re()), fmt_f64(v.im())).unwrap();
    }
    Ok(out)
}
