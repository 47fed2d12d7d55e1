//! Bracketed element expressions: small trees of products, sums, and scalar
//! multiples over named elements of a superalgebra. Used by the verification
//! case files to spell out both sides of a claimed identity exactly as
//! bracketed in the source being checked.

use crate::algebra::{Element, SuperAlgebra};
use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;
use std::collections::BTreeMap;
use std::fmt;

/// An element-valued expression. `Name` refers to a generator or an
/// abbreviation bound in the evaluation environment; `Circ` is the plain
/// anticommutator `xy + yx` in the ambient product.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Name(String),
    Unit,
    Basis(String),
    Mul(Box<Expr>, Box<Expr>),
    Circ(Box<Expr>, Box<Expr>),
    Add(Vec<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    IMul(i64, Box<Expr>),
    SMul(Scalar, Box<Expr>),
}

impl Expr {
    pub fn name(n: &str) -> Expr {
        Expr::Name(n.to_string())
    }

    pub fn basis(n: &str) -> Expr {
        Expr::Basis(n.to_string())
    }

    pub fn mul(a: Expr, b: Expr) -> Expr {
        Expr::Mul(Box::new(a), Box::new(b))
    }

    pub fn circ(a: Expr, b: Expr) -> Expr {
        Expr::Circ(Box::new(a), Box::new(b))
    }

    pub fn add(terms: Vec<Expr>) -> Expr {
        Expr::Add(terms)
    }

    pub fn sub(a: Expr, b: Expr) -> Expr {
        Expr::Sub(Box::new(a), Box::new(b))
    }

    pub fn neg(a: Expr) -> Expr {
        Expr::Neg(Box::new(a))
    }

    pub fn imul(n: i64, a: Expr) -> Expr {
        Expr::IMul(n, Box::new(a))
    }

    pub fn smul(s: Scalar, a: Expr) -> Expr {
        Expr::SMul(s, Box::new(a))
    }

    /// Left-to-right product of two or more factors: `((a b) c) d`.
    pub fn chain(factors: Vec<Expr>) -> Expr {
        let mut it = factors.into_iter();
        let mut acc = it.next().expect("at least one factor");
        for f in it {
            acc = Expr::mul(acc, f);
        }
        acc
    }

    pub fn eval(&self, env: &ExprEnv) -> Result<Element> {
        match self {
            Expr::Name(n) => env
                .names
                .get(n)
                .cloned()
                .ok_or_else(|| Error::InvalidArgument(format!("unbound name {n}"))),
            Expr::Unit => env
                .algebra
                .unit_element()
                .ok_or_else(|| Error::InvalidArgument("algebra has no unit".into())),
            Expr::Basis(n) => {
                let i = env.algebra.index_of(n).ok_or_else(|| {
                    Error::InvalidArgument(format!("no basis element named {n}"))
                })?;
                Ok(env.algebra.basis_element(i))
            }
            Expr::Mul(a, b) => a.eval(env)?.try_mul(&b.eval(env)?),
            Expr::Circ(a, b) => {
                let x = a.eval(env)?;
                let y = b.eval(env)?;
                x.try_mul(&y)?.try_add(&y.try_mul(&x)?)
            }
            Expr::Add(terms) => {
                let mut acc = env.algebra.zero();
                for t in terms {
                    acc = acc.try_add(&t.eval(env)?)?;
                }
                Ok(acc)
            }
            Expr::Sub(a, b) => a.eval(env)?.try_sub(&b.eval(env)?),
            Expr::Neg(a) => Ok(a.eval(env)?.negate()),
            Expr::IMul(n, a) => Ok(a.eval(env)?.scale_int(*n)),
            Expr::SMul(s, a) => Ok(a.eval(env)?.scale(s)),
        }
    }
}

/// Evaluation environment: the algebra together with all bound names
/// (generic elements and abbreviations).
pub struct ExprEnv<'a> {
    pub algebra: &'a SuperAlgebra,
    pub names: BTreeMap<String, Element>,
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Name(n) => f.write_str(n),
            Expr::Unit => f.write_str("unit"),
            Expr::Basis(n) => write!(f, "(basis {n})"),
            Expr::Mul(a, b) => write!(f, "(mul {a} {b})"),
            Expr::Circ(a, b) => write!(f, "(circ {a} {b})"),
            Expr::Add(terms) => {
                f.write_str("(add")?;
                for t in terms {
                    write!(f, " {t}")?;
                }
                f.write_str(")")
            }
            Expr::Sub(a, b) => write!(f, "(sub {a} {b})"),
            Expr::Neg(a) => write!(f, "(neg {a})"),
            Expr::IMul(n, a) => write!(f, "(imul {n} {a})"),
            Expr::SMul(s, a) => write!(f, "(smul {s} {a})"),
        }
    }
}
