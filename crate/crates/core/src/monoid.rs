//! Commutative monoids used as index sets: the integers Z, the whole numbers
//! W, multi-indices W^n, and the residues Z/mZ.
//!
//! W, W^n and Z/mZ have the finite-decomposition property (each z splits as
//! x + y in only finitely many ordered ways), which is what makes a total
//! convolution of two arbitrary coefficient functions well-defined. Z does
//! not, and [`Monoid::decompose`] rejects it.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Descriptor of one of the four supported commutative monoids.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Monoid {
    /// The integers under addition.
    IntegersZ,
    /// The whole numbers 0, 1, 2, ... under addition.
    WholesW,
    /// n-tuples of whole numbers under componentwise addition, n >= 1.
    MultiIndexWn(usize),
    /// Residues modulo m under addition, m >= 1.
    ResidueZm(u64),
}

/// An element of one of the supported monoids, in canonical encoding.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum MonoidElement {
    Int(i64),
    Whole(u64),
    Multi(Vec<u64>),
    Residue(u64),
}

impl MonoidElement {
    pub fn multi(parts: impl Into<Vec<u64>>) -> Self {
        MonoidElement::Multi(parts.into())
    }

    /// Total degree of a multi-index; other kinds are rejected.
    pub fn degree(&self) -> Result<u64> {
        match self {
            MonoidElement::Multi(v) => Ok(v.iter().sum()),
            other => Err(Error::KindMismatch(format!(
                "degree is defined for multi-indices, got {other:?}"
            ))),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            MonoidElement::Int(_) => "integer",
            MonoidElement::Whole(_) => "whole",
            MonoidElement::Multi(_) => "multi-index",
            MonoidElement::Residue(_) => "residue",
        }
    }

    fn rank(&self) -> u8 {
        match self {
            MonoidElement::Int(_) => 0,
            MonoidElement::Whole(_) => 1,
            MonoidElement::Multi(_) => 2,
            MonoidElement::Residue(_) => 3,
        }
    }
}

// Canonical key order: multi-indices sort by total degree first, then
// lexicographically, so printed tables and iteration are deterministic.
impl Ord for MonoidElement {
    fn cmp(&self, other: &Self) -> Ordering {
        use MonoidElement::*;
        match (self, other) {
            (Int(a), Int(b)) => a.cmp(b),
            (Whole(a), Whole(b)) => a.cmp(b),
            (Residue(a), Residue(b)) => a.cmp(b),
            (Multi(a), Multi(b)) => {
                let da: u64 = a.iter().sum();
                let db: u64 = b.iter().sum();
                da.cmp(&db).then_with(|| a.cmp(b))
            }
            (x, y) => x.rank().cmp(&y.rank()),
        }
    }
}

impl PartialOrd for MonoidElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonoidElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidElement::Int(a) => write!(f, "{a}"),
            MonoidElement::Whole(a) => write!(f, "{a}"),
            MonoidElement::Residue(a) => write!(f, "{a}"),
            MonoidElement::Multi(v) => {
                write!(f, "(")?;
                for (i, a) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl Monoid {
    /// Whether each element has only finitely many ordered decompositions.
    pub fn has_finite_decomposition(&self) -> bool {
        !matches!(self, Monoid::IntegersZ)
    }

    pub fn identity(&self) -> MonoidElement {
        match self {
            Monoid::IntegersZ => MonoidElement::Int(0),
            Monoid::WholesW => MonoidElement::Whole(0),
            Monoid::MultiIndexWn(n) => MonoidElement::Multi(vec![0; *n]),
            Monoid::ResidueZm(_) => MonoidElement::Residue(0),
        }
    }

    /// Check that `x` is a canonical element of this monoid.
    pub fn validate(&self, x: &MonoidElement) -> Result<()> {
        let ok = match (self, x) {
            (Monoid::IntegersZ, MonoidElement::Int(_)) => true,
            (Monoid::WholesW, MonoidElement::Whole(_)) => true,
            (Monoid::MultiIndexWn(n), MonoidElement::Multi(v)) => v.len() == *n,
            (Monoid::ResidueZm(m), MonoidElement::Residue(r)) => r < m,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::KindMismatch(format!(
                "{} element {x:?} does not belong to {self:?}",
                x.kind()
            )))
        }
    }

    /// The monoid operation (addition in all four instances).
    pub fn op(&self, x: &MonoidElement, y: &MonoidElement) -> Result<MonoidElement> {
        self.validate(x)?;
        self.validate(y)?;
        Ok(match (self, x, y) {
            (Monoid::IntegersZ, MonoidElement::Int(a), MonoidElement::Int(b)) => {
                MonoidElement::Int(a + b)
            }
            (Monoid::WholesW, MonoidElement::Whole(a), MonoidElement::Whole(b)) => {
                MonoidElement::Whole(a + b)
            }
            (Monoid::MultiIndexWn(_), MonoidElement::Multi(a), MonoidElement::Multi(b)) => {
                MonoidElement::Multi(a.iter().zip(b).map(|(p, q)| p + q).collect())
            }
            (Monoid::ResidueZm(m), MonoidElement::Residue(a), MonoidElement::Residue(b)) => {
                MonoidElement::Residue((a + b) % m)
            }
            _ => unreachable!("validated above"),
        })
    }

    /// All ordered pairs (x, y) with x + y = z. Fails on Z, where the list
    /// would be infinite.
    pub fn decompose(&self, z: &MonoidElement) -> Result<Vec<(MonoidElement, MonoidElement)>> {
        self.validate(z)?;
        match (self, z) {
            (Monoid::IntegersZ, _) => Err(Error::InfiniteDecomposition),
            (Monoid::WholesW, MonoidElement::Whole(n)) => Ok((0..=*n)
                .map(|x| (MonoidElement::Whole(x), MonoidElement::Whole(n - x)))
                .collect()),
            (Monoid::MultiIndexWn(_), MonoidElement::Multi(alpha)) => {
                // odometer over the box 0..=alpha_i, lexicographic order
                let mut pairs = Vec::new();
                let mut x = vec![0u64; alpha.len()];
                loop {
                    let y: Vec<u64> = alpha.iter().zip(&x).map(|(a, b)| a - b).collect();
                    pairs.push((MonoidElement::Multi(x.clone()), MonoidElement::Multi(y)));
                    let mut i = alpha.len();
                    loop {
                        if i == 0 {
                            return Ok(pairs);
                        }
                        i -= 1;
                        if x[i] < alpha[i] {
                            x[i] += 1;
                            break;
                        }
                        x[i] = 0;
                    }
                }
            }
            (Monoid::ResidueZm(m), MonoidElement::Residue(r)) => Ok((0..*m)
                .map(|x| (MonoidElement::Residue(x), MonoidElement::Residue((r + m - x) % m)))
                .collect()),
            _ => unreachable!("validated above"),
        }
    }

    pub fn render_element(&self, x: &MonoidElement) -> String {
        match x {
            MonoidElement::Residue(r) => {
                if let Monoid::ResidueZm(m) = self {
                    format!("{r} mod {m}")
                } else {
                    x.to_string()
                }
            }
            _ => x.to_string(),
        }
    }

    /// Parse the text encoding of an element of this monoid.
    pub fn parse_element(&self, s: &str) -> Result<MonoidElement> {
        let s = s.trim();
        let elem = match self {
            Monoid::IntegersZ => MonoidElement::Int(
                s.parse().map_err(|_| Error::parse(format!("bad integer `{s}`")))?,
            ),
            Monoid::WholesW => MonoidElement::Whole(
                s.parse().map_err(|_| Error::parse(format!("bad whole number `{s}`")))?,
            ),
            Monoid::MultiIndexWn(n) => {
                let inner = s
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| Error::parse(format!("bad multi-index `{s}`")))?;
                let parts: Vec<u64> = inner
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse()
                            .map_err(|_| Error::parse(format!("bad multi-index part `{p}`")))
                    })
                    .collect::<Result<_>>()?;
                if parts.len() != *n {
                    return Err(Error::parse(format!(
                        "multi-index `{s}` has {} parts, expected {n}",
                        parts.len()
                    )));
                }
                MonoidElement::Multi(parts)
            }
            Monoid::ResidueZm(m) => {
                let body = match s.split_once(" mod ") {
                    Some((v, mm)) => {
                        let mm: u64 = mm
                            .trim()
                            .parse()
                            .map_err(|_| Error::parse(format!("bad modulus `{mm}`")))?;
                        if mm != *m {
                            return Err(Error::parse(format!(
                                "residue written mod {mm} but monoid is Z/{m}"
                            )));
                        }
                        v.trim()
                    }
                    None => s,
                };
                let v: i64 =
                    body.parse().map_err(|_| Error::parse(format!("bad residue `{body}`")))?;
                let m_i = *m as i64;
                MonoidElement::Residue(((v % m_i) + m_i) as u64 % m)
            }
        };
        Ok(elem)
    }
}

/// All multi-indices of length `n` with total degree exactly `d`, in
/// lexicographic order.
pub fn multi_indices_of_degree(n: usize, d: u64) -> Vec<Vec<u64>> {
    fn rec(n: usize, d: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=d {
            prefix.push(first);
            rec(n - 1, d - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn op_examples() {
        let w = Monoid::WholesW;
        assert_eq!(
            w.op(&MonoidElement::Whole(2), &MonoidElement::Whole(3)).unwrap(),
            MonoidElement::Whole(5)
        );
        let w2 = Monoid::MultiIndexWn(2);
        assert_eq!(
            w2.op(&MonoidElement::multi([1, 0]), &MonoidElement::multi([0, 2])).unwrap(),
            MonoidElement::multi([1, 2])
        );
        let z6 = Monoid::ResidueZm(6);
        // 4 + 5 = 9, reduced mod 6
        assert_eq!(
            z6.op(&MonoidElement::Residue(4), &MonoidElement::Residue(5)).unwrap(),
            MonoidElement::Residue(9 % 6)
        );
    }

    #[test]
    fn identity_examples() {
        assert_eq!(Monoid::IntegersZ.identity(), MonoidElement::Int(0));
        assert_eq!(Monoid::MultiIndexWn(3).identity(), MonoidElement::multi([0, 0, 0]));
        assert_eq!(Monoid::ResidueZm(6).identity(), MonoidElement::Residue(0));
    }

    #[test]
    fn cross_monoid_rejected() {
        let w = Monoid::WholesW;
        assert!(w.op(&MonoidElement::Whole(1), &MonoidElement::Int(1)).is_err());
        assert!(Monoid::MultiIndexWn(2).validate(&MonoidElement::multi([1, 2, 3])).is_err());
        assert!(Monoid::ResidueZm(6).validate(&MonoidElement::Residue(6)).is_err());
    }

    #[test]
    fn decompose_w() {
        let w = Monoid::WholesW;
        let pairs = w.decompose(&MonoidElement::Whole(2)).unwrap();
        let expect: Vec<_> = [(0, 2), (1, 1), (2, 0)]
            .iter()
            .map(|&(a, b)| (MonoidElement::Whole(a), MonoidElement::Whole(b)))
            .collect();
        assert_eq!(pairs, expect);
        assert_eq!(
            w.decompose(&MonoidElement::Whole(0)).unwrap(),
            vec![(MonoidElement::Whole(0), MonoidElement::Whole(0))]
        );
        for z in 0..20u64 {
            let n = w.decompose(&MonoidElement::Whole(z)).unwrap().len();
            assert_eq!(n as u64, z + 1);
        }
    }

    #[test]
    fn decompose_multi_matches_brute_force() {
        let w2 = Monoid::MultiIndexWn(2);
        let z = MonoidElement::multi([1, 1]);
        let pairs = w2.decompose(&z).unwrap();
        assert_eq!(pairs.len(), 4);
        // brute force over the box
        let mut expected = Vec::new();
        for a in 0..=1u64 {
            for b in 0..=1u64 {
                expected.push((MonoidElement::multi([a, b]), MonoidElement::multi([1 - a, 1 - b])));
            }
        }
        for p in &expected {
            assert!(pairs.contains(p));
        }
        for (x, y) in &pairs {
            assert_eq!(w2.op(x, y).unwrap(), z);
        }
    }

    #[test]
    fn decompose_z_rejected() {
        assert_eq!(
            Monoid::IntegersZ.decompose(&MonoidElement::Int(3)),
            Err(Error::InfiniteDecomposition)
        );
    }

    #[test]
    fn degree_examples() {
        assert_eq!(MonoidElement::multi([2, 0, 3]).degree().unwrap(), 5);
        assert_eq!(MonoidElement::multi([0, 0]).degree().unwrap(), 0);
        assert_eq!(MonoidElement::multi([1, 1]).degree().unwrap(), 2);
        assert!(MonoidElement::Whole(3).degree().is_err());
    }

    #[test]
    fn element_text_round_trip() {
        let cases: Vec<(Monoid, &str)> = vec![
            (Monoid::IntegersZ, "-4"),
            (Monoid::WholesW, "12"),
            (Monoid::MultiIndexWn(3), "(1,0,2)"),
        ];
        for (m, s) in cases {
            let e = m.parse_element(s).unwrap();
            assert_eq!(m.render_element(&e), s);
        }
        let z6 = Monoid::ResidueZm(6);
        assert_eq!(z6.parse_element("10").unwrap(), MonoidElement::Residue(4));
        assert_eq!(z6.render_element(&MonoidElement::Residue(4)), "4 mod 6");
        assert_eq!(z6.parse_element("4 mod 6").unwrap(), MonoidElement::Residue(4));
        assert!(z6.parse_element("4 mod 5").is_err());
    }

    #[test]
    fn degree_then_lex_order() {
        let mut keys = vec![
            MonoidElement::multi([0, 2]),
            MonoidElement::multi([2, 0]),
            MonoidElement::multi([0, 0]),
            MonoidElement::multi([1, 0]),
            MonoidElement::multi([1, 1]),
            MonoidElement::multi([0, 1]),
        ];
        keys.sort();
        assert_eq!(
            keys,
            vec![
                MonoidElement::multi([0, 0]),
                MonoidElement::multi([0, 1]),
                MonoidElement::multi([1, 0]),
                MonoidElement::multi([0, 2]),
                MonoidElement::multi([1, 1]),
                MonoidElement::multi([2, 0]),
            ]
        );
    }

    #[test]
    fn degree_enumeration_counts() {
        // |{alpha in W^n : |alpha| = d}| = C(d + n - 1, n - 1)
        assert_eq!(multi_indices_of_degree(1, 7).len(), 1);
        assert_eq!(multi_indices_of_degree(2, 5).len(), 6);
        assert_eq!(multi_indices_of_degree(3, 4).len(), 15);
        for alpha in multi_indices_of_degree(3, 4) {
            assert_eq!(alpha.iter().sum::<u64>(), 4);
        }
    }
}
