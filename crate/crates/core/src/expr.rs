//! A small arithmetic expression language over rings: integer literals, the
//! indeterminate `t`, `+ - *`, powers by nonnegative integers, `inv(..)`,
//! and parentheses. Used by front ends to evaluate expressions inside
//! quotient rings.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ideals::{IntQuotientRing, IntResidue, PolyQuotientRing, PolyResidue};
use crate::poly::Polynomial;
use crate::scalars::Field;

#[derive(Clone, PartialEq, Debug)]
pub enum Expr {
    Int(BigInt),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
    Inv(Box<Expr>),
}

/// A ring that expressions can evaluate into.
pub trait ExprRing {
    type Elem: Clone;

    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    /// The image of `t`, when the ring has one.
    fn var(&self) -> Result<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn neg(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn invert(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn one(&self) -> Self::Elem;
}

pub fn eval_expr<R: ExprRing>(ring: &R, e: &Expr) -> Result<R::Elem> {
    Ok(match e {
        Expr::Int(n) => ring.from_int(n),
        Expr::Var => ring.var()?,
        Expr::Neg(a) => ring.neg(&eval_expr(ring, a)?)?,
        Expr::Add(a, b) => ring.add(&eval_expr(ring, a)?, &eval_expr(ring, b)?)?,
        Expr::Sub(a, b) => {
            let rhs = ring.neg(&eval_expr(ring, b)?)?;
            ring.add(&eval_expr(ring, a)?, &rhs)?
        }
        Expr::Mul(a, b) => ring.mul(&eval_expr(ring, a)?, &eval_expr(ring, b)?)?,
        Expr::Pow(a, e) => {
            let base = eval_expr(ring, a)?;
            let mut acc = ring.one();
            for _ in 0..*e {
                acc = ring.mul(&acc, &base)?;
            }
            acc
        }
        Expr::Inv(a) => ring.invert(&eval_expr(ring, a)?)?,
    })
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Int(BigInt),
    Var,
    Inv,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut num = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        num.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Int(num.parse().expect("digits")));
            }
            't' => {
                chars.next();
                toks.push(Tok::Var);
            }
            'i' => {
                for want in ['i', 'n', 'v'] {
                    if chars.next() != Some(want) {
                        return Err(Error::parse("expected `inv`"));
                    }
                }
                toks.push(Tok::Inv);
            }
            '+' => {
                chars.next();
                toks.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                toks.push(Tok::Star);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                toks.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                toks.push(Tok::RParen);
            }
            other => return Err(Error::parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.bump() {
            Some(got) if got == t => Ok(()),
            got => Err(Error::parse(format!("expected {t:?}, got {got:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e = u64::try_from(n).map_err(|_| Error::parse("exponent out of range"))?;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                got => return Err(Error::parse(format!("expected exponent, got {got:?}"))),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Expr::Int(n)),
            Some(Tok::Var) => Ok(Expr::Var),
            Some(Tok::Minus) => Ok(Expr::Neg(Box::new(self.factor()?))),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Inv) => {
                self.expect(Tok::LParen)?;
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Inv(Box::new(e)))
            }
            got => Err(Error::parse(format!("expected a value, got {got:?}"))),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser { toks: tokenize(s)?, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::parse("trailing input after expression"));
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// Ring instances
// ---------------------------------------------------------------------------

impl ExprRing for IntQuotientRing {
    type Elem = IntResidue;

    fn from_int(&self, n: &BigInt) -> IntResidue {
        self.elem(n.clone())
    }

    fn var(&self) -> Result<IntResidue> {
        Err(Error::parse("`t` has no meaning in Z/(m)"))
    }

    fn add(&self, a: &IntResidue, b: &IntResidue) -> Result<IntResidue> {
        IntQuotientRing::add(self, a, b)
    }

    fn neg(&self, a: &IntResidue) -> Result<IntResidue> {
        IntQuotientRing::neg(self, a)
    }

    fn mul(&self, a: &IntResidue, b: &IntResidue) -> Result<IntResidue> {
        IntQuotientRing::mul(self, a, b)
    }

    fn invert(&self, a: &IntResidue) -> Result<IntResidue> {
        IntQuotientRing::invert(self, a)
    }

    fn one(&self) -> IntResidue {
        IntQuotientRing::one(self)
    }
}

impl<F: Field> ExprRing for PolyQuotientRing<F> {
    type Elem = PolyResidue<F>;

    fn from_int(&self, n: &BigInt) -> PolyResidue<F> {
        // reduce the literal into the scalar field through repeated halving
        let field = self.field().clone();
        let mut mag = n.magnitude().clone();
        let mut scalar = field.zero();
        let mut power = field.one();
        let two = field.from_i64(2);
        use num_traits::Zero;
        while !mag.is_zero() {
            if mag.bit(0) {
                scalar = field.add(&scalar, &power);
            }
            power = field.mul(&power, &two);
            mag >>= 1;
        }
        if n.sign() == num_bigint::Sign::Minus {
            scalar = field.neg(&scalar);
        }
        let p = Polynomial::constant(field, 1, scalar);
        self.elem(&p).expect("constant lies in k[t]")
    }

    fn var(&self) -> Result<PolyResidue<F>> {
        let t = Polynomial::variable(self.field().clone(), 1, 1);
        self.elem(&t)
    }

    fn add(&self, a: &PolyResidue<F>, b: &PolyResidue<F>) -> Result<PolyResidue<F>> {
        self.add_res(a, b)
    }

    fn neg(&self, a: &PolyResidue<F>) -> Result<PolyResidue<F>> {
        self.neg_res(a)
    }

    fn mul(&self, a: &PolyResidue<F>, b: &PolyResidue<F>) -> Result<PolyResidue<F>> {
        self.mul_res(a, b)
    }

    fn invert(&self, a: &PolyResidue<F>) -> Result<PolyResidue<F>> {
        self.invert_res(a)
    }

    fn one(&self) -> PolyResidue<F> {
        let p = Polynomial::one(self.field().clone(), 1);
        self.elem(&p).expect("constant lies in k[t]")
    }
}
