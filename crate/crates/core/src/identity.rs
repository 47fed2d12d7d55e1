//! Multilinear graded identities and exhaustive basis sweeps.
//!
//! An [`IdentitySpec`] is a signed sum of bracketed monomials in the
//! variables `x1..xn`. A term may carry the `koszul` marker, in which case
//! its coefficient picks up `(-1)` for every inversion of two odd arguments
//! relative to the written order `x1,…,xn`. Since every term is multilinear,
//! an identity holds on a superalgebra exactly when it vanishes on all
//! `dim^arity` tuples of (homogeneous) basis elements; [`check_identity`]
//! performs that sweep, in parallel when the `parallel` feature is on, and
//! reports the lexicographically first failing tuple otherwise.

use crate::algebra::{Parity, SuperAlgebra};
use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;
use std::collections::BTreeMap;
use std::fmt;

/// Binary bracketing with variable indices (0-based) at the leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bracketing {
    Leaf(usize),
    Node(Box<Bracketing>, Box<Bracketing>),
}

impl Bracketing {
    pub fn leaf(i: usize) -> Bracketing {
        Bracketing::Leaf(i)
    }

    pub fn node(l: Bracketing, r: Bracketing) -> Bracketing {
        Bracketing::Node(Box::new(l), Box::new(r))
    }

    /// Left-to-right sequence of leaf variables.
    pub fn flatten(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            Bracketing::Leaf(i) => out.push(*i),
            Bracketing::Node(l, r) => {
                l.collect(out);
                r.collect(out);
            }
        }
    }

    /// The tree with its leaves renumbered 0,1,2,… from the left: the pure
    /// bracketing shape, forgetting which variable sits where.
    pub fn shape(&self) -> Bracketing {
        fn go(t: &Bracketing, next: &mut usize) -> Bracketing {
            match t {
                Bracketing::Leaf(_) => {
                    let i = *next;
                    *next += 1;
                    Bracketing::Leaf(i)
                }
                Bracketing::Node(l, r) => {
                    let l = go(l, next);
                    let r = go(r, next);
                    Bracketing::node(l, r)
                }
            }
        }
        let mut next = 0;
        go(self, &mut next)
    }

    /// Rebuild a variable tree from a shape (leaves 0,1,2,… from the left)
    /// and the variable sitting in each slot.
    fn substitute(&self, slot_vars: &[usize]) -> Bracketing {
        match self {
            Bracketing::Leaf(s) => Bracketing::Leaf(slot_vars[*s]),
            Bracketing::Node(l, r) => {
                Bracketing::node(l.substitute(slot_vars), r.substitute(slot_vars))
            }
        }
    }
}

impl fmt::Display for Bracketing {
    /// Leaves print 1-based, matching the file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracketing::Leaf(i) => write!(f, "{}", i + 1),
            Bracketing::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

/// One signed monomial of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityTerm {
    pub coefficient: i64,
    pub koszul: bool,
    pub tree: Bracketing,
}

/// A multilinear graded identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySpec {
    pub name: String,
    pub arity: usize,
    pub terms: Vec<IdentityTerm>,
}

/// `(-1)^k` where `k` counts pairs written out of order whose arguments are
/// both odd: the sign of moving `x1…xn` into the order given by `perm`
/// (`perm[a]` = variable at output position `a`).
pub fn koszul_sign(perm: &[usize], parities: &[Parity]) -> i64 {
    let mut sign = 1i64;
    for a in 0..perm.len() {
        for b in (a + 1)..perm.len() {
            if perm[a] > perm[b]
                && parities[perm[a]] == Parity::Odd
                && parities[perm[b]] == Parity::Odd
            {
                sign = -sign;
            }
        }
    }
    sign
}

impl IdentitySpec {
    /// Every term must use each of `x1..x_arity` exactly once.
    pub fn validate(&self) -> Result<()> {
        if self.arity == 0 {
            return Err(Error::InvalidArgument("arity must be positive".into()));
        }
        for t in &self.terms {
            if t.coefficient == 0 {
                return Err(Error::InvalidArgument(format!(
                    "zero coefficient in {}",
                    self.name
                )));
            }
            let mut seen = vec![false; self.arity];
            for v in t.tree.flatten() {
                if v >= self.arity || seen[v] {
                    return Err(Error::InvalidArgument(format!(
                        "term {} of {} is not multilinear in x1..x{}",
                        t.tree, self.name, self.arity
                    )));
                }
                seen[v] = true;
            }
            if !seen.iter().all(|&s| s) {
                return Err(Error::InvalidArgument(format!(
                    "term {} of {} misses a variable",
                    t.tree, self.name
                )));
            }
        }
        Ok(())
    }

    /// `(x1 x2) x3 - x1 (x2 x3)`.
    pub fn associativity() -> IdentitySpec {
        use Bracketing as B;
        IdentitySpec {
            name: "assoc".into(),
            arity: 3,
            terms: vec![
                IdentityTerm {
                    coefficient: 1,
                    koszul: false,
                    tree: B::node(B::node(B::leaf(0), B::leaf(1)), B::leaf(2)),
                },
                IdentityTerm {
                    coefficient: -1,
                    koszul: false,
                    tree: B::node(B::leaf(0), B::node(B::leaf(1), B::leaf(2))),
                },
            ],
        }
    }

    /// Graded left alternativity: `(x1,x2,x3) + (-1)^{|x1||x2|}(x2,x1,x3)`
    /// with `(a,b,c)` the associator.
    pub fn left_alternative() -> IdentitySpec {
        use Bracketing as B;
        let assoc = |a: usize, b: usize, c: usize, koszul: bool| {
            vec![
                IdentityTerm {
                    coefficient: 1,
                    koszul,
                    tree: B::node(B::node(B::leaf(a), B::leaf(b)), B::leaf(c)),
                },
                IdentityTerm {
                    coefficient: -1,
                    koszul,
                    tree: B::node(B::leaf(a), B::node(B::leaf(b), B::leaf(c))),
                },
            ]
        };
        let mut terms = assoc(0, 1, 2, false);
        terms.extend(assoc(1, 0, 2, true));
        IdentitySpec {
            name: "alt-left".into(),
            arity: 3,
            terms,
        }
    }

    /// Graded right alternativity: `(x1,x2,x3) + (-1)^{|x2||x3|}(x1,x3,x2)`.
    pub fn right_alternative() -> IdentitySpec {
        use Bracketing as B;
        let assoc = |a: usize, b: usize, c: usize, koszul: bool| {
            vec![
                IdentityTerm {
                    coefficient: 1,
                    koszul,
                    tree: B::node(B::node(B::leaf(a), B::leaf(b)), B::leaf(c)),
                },
                IdentityTerm {
                    coefficient: -1,
                    koszul,
                    tree: B::node(B::leaf(a), B::node(B::leaf(b), B::leaf(c))),
                },
            ]
        };
        let mut terms = assoc(0, 1, 2, false);
        terms.extend(assoc(0, 2, 1, true));
        IdentitySpec {
            name: "alt-right".into(),
            arity: 3,
            terms,
        }
    }

    /// `x1 x2 - (-1)^{|x1||x2|} x2 x1`.
    pub fn supercommutativity() -> IdentitySpec {
        use Bracketing as B;
        IdentitySpec {
            name: "supercomm".into(),
            arity: 2,
            terms: vec![
                IdentityTerm {
                    coefficient: 1,
                    koszul: false,
                    tree: B::node(B::leaf(0), B::leaf(1)),
                },
                IdentityTerm {
                    coefficient: -1,
                    koszul: true,
                    tree: B::node(B::leaf(1), B::leaf(0)),
                },
            ],
        }
    }

    /// Graded form of the four-variable linearized Jordan identity:
    /// `((x1x2)x4)x3 + ((x1x3)x4)x2 + ((x2x3)x4)x1` minus the same three
    /// permutations bracketed `(..)(..)`, every term with its Koszul sign.
    pub fn super_jordan() -> IdentitySpec {
        use Bracketing as B;
        let left = |p: [usize; 4]| B::node(
            B::node(B::node(B::leaf(p[0]), B::leaf(p[1])), B::leaf(p[2])),
            B::leaf(p[3]),
        );
        let right = |p: [usize; 4]| B::node(
            B::node(B::leaf(p[0]), B::leaf(p[1])),
            B::node(B::leaf(p[2]), B::leaf(p[3])),
        );
        let perms = [[0, 1, 3, 2], [0, 2, 3, 1], [1, 2, 3, 0]];
        let mut terms = Vec::new();
        for p in perms {
            terms.push(IdentityTerm {
                coefficient: 1,
                koszul: true,
                tree: left(p),
            });
        }
        for p in perms {
            terms.push(IdentityTerm {
                coefficient: -1,
                koszul: true,
                tree: right(p),
            });
        }
        IdentitySpec {
            name: "super-jordan".into(),
            arity: 4,
            terms,
        }
    }

    pub fn builtins() -> Vec<IdentitySpec> {
        vec![
            IdentitySpec::associativity(),
            IdentitySpec::left_alternative(),
            IdentitySpec::right_alternative(),
            IdentitySpec::supercommutativity(),
            IdentitySpec::super_jordan(),
        ]
    }

    pub fn builtin(name: &str) -> Option<IdentitySpec> {
        IdentitySpec::builtins().into_iter().find(|s| s.name == name)
    }

    /// Canonical text form (see [`IdentitySpec::parse`]).
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("identity {}\n", self.name));
        out.push_str(&format!("arity {}\n", self.arity));
        for t in &self.terms {
            let sign = match t.coefficient {
                1 => "+".to_string(),
                -1 => "-".to_string(),
                c if c > 0 => format!("+{c}"),
                c => format!("{c}"),
            };
            let perm: Vec<String> = t
                .tree
                .flatten()
                .iter()
                .map(|v| (v + 1).to_string())
                .collect();
            out.push_str(&format!(
                "{sign} ({}) {}{}\n",
                perm.join(" "),
                t.tree.shape(),
                if t.koszul { " koszul" } else { "" }
            ));
        }
        out
    }

    /// Parse the line format produced by [`IdentitySpec::serialize`]: an
    /// `identity NAME` line, an `arity N` line, then one line per monomial
    /// of the form
    ///
    /// ```text
    /// SIGN (PERM) BRACKETING [koszul]
    /// ```
    ///
    /// where SIGN is `+`, `-`, or a signed integer, PERM lists which
    /// variable (1-based) occupies each slot left to right, and BRACKETING
    /// is a fully parenthesized grouping whose leaves read `1..arity` in
    /// order. Example: `+ (2 1 3) ((1 2) 3) koszul` is the Koszul-signed
    /// monomial `(x2 x1) x3`. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<IdentitySpec> {
        let mut name: Option<String> = None;
        let mut arity: Option<usize> = None;
        let mut terms = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = ln + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (word, rest) = split_word(line);
            match word {
                "identity" => name = Some(rest.trim().to_string()),
                "arity" => {
                    arity = Some(rest.trim().parse().map_err(|_| Error::Parse {
                        line: lineno,
                        col: 1,
                        msg: format!("bad arity {rest:?}"),
                    })?)
                }
                _ => {
                    let n = arity.ok_or_else(|| Error::Parse {
                        line: lineno,
                        col: 1,
                        msg: "term before the arity line".into(),
                    })?;
                    terms.push(parse_term(line, lineno, n)?);
                }
            }
        }
        let spec = IdentitySpec {
            name: name.ok_or_else(|| Error::Parse {
                line: 1,
                col: 1,
                msg: "missing identity line".into(),
            })?,
            arity: arity.ok_or_else(|| Error::Parse {
                line: 1,
                col: 1,
                msg: "missing arity line".into(),
            })?,
            terms,
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn parse_term(line: &str, lineno: usize, arity: usize) -> Result<IdentityTerm> {
    let (sign_s, rest) = split_word(line);
    let coefficient: i64 = match sign_s {
        "+" => 1,
        "-" => -1,
        other => other.parse().map_err(|_| Error::Parse {
            line: lineno,
            col: 1,
            msg: format!("expected a sign or signed integer, found {other:?}"),
        })?,
    };
    let rest = rest.trim_start();
    let close = rest.find(')').ok_or(Error::Parse {
        line: lineno,
        col: 1,
        msg: "expected a parenthesized permutation".into(),
    })?;
    if !rest.starts_with('(') {
        return Err(Error::Parse {
            line: lineno,
            col: 1,
            msg: "expected a parenthesized permutation".into(),
        });
    }
    let perm: Vec<usize> = rest[1..close]
        .split_whitespace()
        .map(|w| {
            w.parse::<usize>().map_err(|_| Error::Parse {
                line: lineno,
                col: 1,
                msg: format!("bad permutation entry {w:?}"),
            })
        })
        .collect::<Result<_>>()?;
    let mut seen = vec![false; arity];
    if perm.len() != arity
        || !perm.iter().all(|&v| {
            (1..=arity).contains(&v) && !std::mem::replace(&mut seen[v - 1], true)
        })
    {
        return Err(Error::Parse {
            line: lineno,
            col: 1,
            msg: format!("permutation must list 1..{arity} once each"),
        });
    }
    let mut rest = rest[close + 1..].trim_start();
    let koszul = if let Some(stripped) = rest.strip_suffix("koszul") {
        rest = stripped.trim_end();
        true
    } else {
        false
    };
    let shape = parse_tree(rest, lineno)?;
    let leaves = shape.flatten();
    if leaves.iter().enumerate().any(|(i, &v)| v != i) || leaves.len() != arity {
        return Err(Error::Parse {
            line: lineno,
            col: 1,
            msg: format!("bracketing leaves must read 1..{arity} in order"),
        });
    }
    let slot_vars: Vec<usize> = perm.iter().map(|&v| v - 1).collect();
    Ok(IdentityTerm {
        coefficient,
        koszul,
        tree: shape.substitute(&slot_vars),
    })
}

fn split_word(s: &str) -> (&str, &str) {
    match s.find(char::is_whitespace) {
        Some(i) => (&s[..i], &s[i..]),
        None => (s, ""),
    }
}

fn parse_tree(text: &str, lineno: usize) -> Result<Bracketing> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0usize;
    let tree = parse_tree_at(&chars, &mut pos, lineno)?;
    skip_ws(&chars, &mut pos);
    if pos != chars.len() {
        return Err(Error::Parse {
            line: lineno,
            col: pos + 1,
            msg: "trailing input after bracketing".into(),
        });
    }
    Ok(tree)
}

fn skip_ws(chars: &[char], pos: &mut usize) {
    while *pos < chars.len() && chars[*pos].is_whitespace() {
        *pos += 1;
    }
}

fn parse_tree_at(chars: &[char], pos: &mut usize, lineno: usize) -> Result<Bracketing> {
    skip_ws(chars, pos);
    match chars.get(*pos) {
        Some('(') => {
            *pos += 1;
            let l = parse_tree_at(chars, pos, lineno)?;
            let r = parse_tree_at(chars, pos, lineno)?;
            skip_ws(chars, pos);
            if chars.get(*pos) != Some(&')') {
                return Err(Error::Parse {
                    line: lineno,
                    col: *pos + 1,
                    msg: "expected closing parenthesis".into(),
                });
            }
            *pos += 1;
            Ok(Bracketing::node(l, r))
        }
        Some(c) if c.is_ascii_digit() => {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let text: String = chars[start..*pos].iter().collect();
            let n: usize = text.parse().map_err(|_| Error::Parse {
                line: lineno,
                col: start + 1,
                msg: "bad leaf number".into(),
            })?;
            if n == 0 {
                return Err(Error::Parse {
                    line: lineno,
                    col: start + 1,
                    msg: "leaves are numbered from 1".into(),
                });
            }
            Ok(Bracketing::leaf(n - 1))
        }
        other => Err(Error::Parse {
            line: lineno,
            col: *pos + 1,
            msg: format!("expected bracketing, found {other:?}"),
        }),
    }
}

/// First failing basis tuple of a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepWitness {
    /// Basis indices substituted for `x1..xn`.
    pub tuple: Vec<usize>,
    /// The same tuple through the algebra's basis names.
    pub names: Vec<String>,
    /// Rendered nonzero value of the identity at that tuple.
    pub residual: String,
}

/// Result of sweeping one identity over all basis tuples of one algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub algebra: String,
    pub identity: String,
    pub tuples: u64,
    pub witness: Option<SweepWitness>,
}

impl SweepReport {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(
                f,
                "{}: {} holds on all {} tuples",
                self.algebra, self.identity, self.tuples
            ),
            Some(w) => write!(
                f,
                "{}: {} fails at ({}) with value {}",
                self.algebra,
                self.identity,
                w.names.join(", "),
                w.residual
            ),
        }
    }
}

/// Sparse element representation used inside sweeps: sorted (index, coeff).
type Sp = Vec<(usize, Scalar)>;

fn sp_mul(alg: &SuperAlgebra, a: &Sp, b: &Sp) -> Sp {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (i, ca) in a {
        for (j, cb) in b {
            let products = alg.product_of_basis(*i, *j);
            if products.is_empty() {
                continue;
            }
            let cab = ca * cb;
            for (k, c) in products {
                let v = &cab * c;
                match acc.get_mut(k) {
                    Some(slot) => *slot = &*slot + &v,
                    None => {
                        acc.insert(*k, v);
                    }
                }
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn eval_tree(alg: &SuperAlgebra, tree: &Bracketing, tuple: &[usize]) -> Sp {
    match tree {
        Bracketing::Leaf(v) => vec![(tuple[*v], Scalar::one(alg.ring()))],
        Bracketing::Node(l, r) => {
            let a = eval_tree(alg, l, tuple);
            if a.is_empty() {
                return Vec::new();
            }
            let b = eval_tree(alg, r, tuple);
            if b.is_empty() {
                return Vec::new();
            }
            sp_mul(alg, &a, &b)
        }
    }
}

struct Prepared<'a> {
    spec: &'a IdentitySpec,
    perms: Vec<Vec<usize>>,
}

fn prepare(spec: &IdentitySpec) -> Prepared<'_> {
    Prepared {
        spec,
        perms: spec.terms.iter().map(|t| t.tree.flatten()).collect(),
    }
}

fn eval_tuple(alg: &SuperAlgebra, prep: &Prepared<'_>, tuple: &[usize]) -> Option<Sp> {
    let parities: Vec<Parity> = tuple.iter().map(|&i| alg.parity(i)).collect();
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (term, perm) in prep.spec.terms.iter().zip(&prep.perms) {
        let mut c = term.coefficient;
        if term.koszul {
            c *= koszul_sign(perm, &parities);
        }
        let cs = Scalar::from_int(alg.ring(), c);
        if cs.is_zero() {
            continue;
        }
        for (k, v) in eval_tree(alg, &term.tree, tuple) {
            let signed = &v * &cs;
            match acc.get_mut(&k) {
                Some(slot) => *slot = &*slot + &signed,
                None => {
                    acc.insert(k, signed);
                }
            }
        }
    }
    let residual: Sp = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    if residual.is_empty() {
        None
    } else {
        Some(residual)
    }
}

fn decode(mut idx: u64, dim: usize, arity: usize) -> Vec<usize> {
    let mut tuple = vec![0usize; arity];
    for slot in tuple.iter_mut().rev() {
        *slot = (idx % dim as u64) as usize;
        idx /= dim as u64;
    }
    tuple
}

fn witness_from(alg: &SuperAlgebra, tuple: Vec<usize>, residual: Sp) -> SweepWitness {
    let mut coords = vec![Scalar::zero(alg.ring()); alg.dim()];
    for (k, c) in residual {
        coords[k] = c;
    }
    let value = alg.element(coords);
    SweepWitness {
        names: tuple.iter().map(|&i| alg.basis_name(i).to_string()).collect(),
        tuple,
        residual: value.to_string(),
    }
}

fn total_tuples(dim: usize, arity: usize) -> u64 {
    (dim as u64).pow(arity as u32)
}

/// Exhaustive sweep, single threaded.
pub fn check_identity_sequential(
    alg: &SuperAlgebra,
    spec: &IdentitySpec,
) -> Result<SweepReport> {
    spec.validate()?;
    let prep = prepare(spec);
    let total = total_tuples(alg.dim(), spec.arity);
    let mut witness = None;
    for idx in 0..total {
        let tuple = decode(idx, alg.dim(), spec.arity);
        if let Some(residual) = eval_tuple(alg, &prep, &tuple) {
            witness = Some(witness_from(alg, tuple, residual));
            break;
        }
    }
    Ok(SweepReport {
        algebra: alg.name().to_string(),
        identity: spec.name.clone(),
        tuples: total,
        witness,
    })
}

/// Exhaustive sweep over all `dim^arity` basis tuples. With the `parallel`
/// feature the tuples are distributed over a rayon pool; the reported
/// witness is the lexicographically first failure either way.
#[cfg(feature = "parallel")]
pub fn check_identity(alg: &SuperAlgebra, spec: &IdentitySpec) -> Result<SweepReport> {
    use rayon::prelude::*;
    spec.validate()?;
    let prep = prepare(spec);
    let total = total_tuples(alg.dim(), spec.arity);
    let first = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let tuple = decode(idx, alg.dim(), spec.arity);
            eval_tuple(alg, &prep, &tuple).map(|residual| (idx, tuple, residual))
        })
        .min_by_key(|(idx, _, _)| *idx);
    Ok(SweepReport {
        algebra: alg.name().to_string(),
        identity: spec.name.clone(),
        tuples: total,
        witness: first.map(|(_, tuple, residual)| witness_from(alg, tuple, residual)),
    })
}

#[cfg(not(feature = "parallel"))]
pub fn check_identity(alg: &SuperAlgebra, spec: &IdentitySpec) -> Result<SweepReport> {
    check_identity_sequential(alg, spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraBuilder;
    use crate::ring::Ring;

    fn tiny(ring: &Ring) -> SuperAlgebra {
        let mut b = AlgebraBuilder::new("tiny", ring);
        let one = b.basis_element("1", Parity::Even);
        let x = b.basis_element("x", Parity::Odd);
        b.set_product_int(one, one, &[(one, 1)]);
        b.set_product_int(one, x, &[(x, 1)]);
        b.set_product_int(x, one, &[(x, 1)]);
        b.set_product_int(x, x, &[(one, 1)]);
        b.unit_basis(one);
        b.build().unwrap()
    }

    #[test]
    fn koszul_sign_counts_odd_inversions() {
        use Parity::{Even as E, Odd as O};
        assert_eq!(koszul_sign(&[0, 1], &[O, O]), 1);
        assert_eq!(koszul_sign(&[1, 0], &[O, O]), -1);
        assert_eq!(koszul_sign(&[1, 0], &[O, E]), 1);
        assert_eq!(koszul_sign(&[2, 1, 0], &[O, O, O]), -1, "three odd inversions");
    }

    #[test]
    fn builtin_specs_validate_and_round_trip() {
        for spec in IdentitySpec::builtins() {
            spec.validate().unwrap();
            let text = spec.serialize();
            let again = IdentitySpec::parse(&text).unwrap();
            assert_eq!(spec, again, "round trip of {}", spec.name);
        }
        assert!(IdentitySpec::builtin("super-jordan").is_some());
        assert!(IdentitySpec::builtin("nope").is_none());
    }

    #[test]
    fn rejects_malformed_term_lines() {
        // Repeated variable in the permutation.
        assert!(IdentitySpec::parse("identity bad\narity 2\n+ (1 1) (1 2)\n").is_err());
        // Bracketing slots out of order.
        assert!(IdentitySpec::parse("identity bad\narity 2\n+ (1 2) (2 1)\n").is_err());
        // Wrong number of slots.
        assert!(IdentitySpec::parse("identity bad\narity 3\n+ (1 2 3) (1 2)\n").is_err());
    }

    #[test]
    fn serialized_term_lines_use_sign_perm_shape() {
        let text = IdentitySpec::supercommutativity().serialize();
        assert_eq!(
            text,
            "identity supercomm\narity 2\n+ (1 2) (1 2)\n- (2 1) (1 2) koszul\n"
        );
        let jordan = IdentitySpec::super_jordan().serialize();
        assert!(jordan.contains("+ (1 2 4 3) (((1 2) 3) 4) koszul"));
        assert!(jordan.contains("- (2 3 4 1) ((1 2) (3 4)) koszul"));
        // Integer coefficients round trip too.
        let scaled = "identity scaled\narity 2\n+2 (1 2) (1 2)\n-3 (2 1) (1 2) koszul\n";
        let spec = IdentitySpec::parse(scaled).unwrap();
        assert_eq!(spec.terms[0].coefficient, 2);
        assert_eq!(spec.terms[1].coefficient, -3);
        assert_eq!(spec.serialize(), scaled);
    }

    #[test]
    fn associativity_holds_on_commutative_example() {
        let ring = Ring::rationals();
        let alg = tiny(&ring);
        let report = check_identity(&alg, &IdentitySpec::associativity()).unwrap();
        assert!(report.holds());
        assert_eq!(report.tuples, 8);
    }

    #[test]
    fn supercommutativity_fails_with_lex_first_witness() {
        let ring = Ring::rationals();
        let alg = tiny(&ring);
        // [x,x] = 2 under the graded convention, so (x,x) is the only
        // failing tuple.
        let report = check_identity(&alg, &IdentitySpec::supercommutativity()).unwrap();
        let w = report.witness.expect("should fail");
        assert_eq!(w.tuple, vec![1, 1]);
        assert_eq!(w.residual, "2*1");
        let seq = check_identity_sequential(&alg, &IdentitySpec::supercommutativity()).unwrap();
        assert_eq!(seq.witness.unwrap().tuple, vec![1, 1]);
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let ring = Ring::gf(3).unwrap();
        let alg = tiny(&ring);
        for spec in IdentitySpec::builtins() {
            let a = check_identity(&alg, &spec).unwrap();
            let b = check_identity_sequential(&alg, &spec).unwrap();
            assert_eq!(a, b, "{}", spec.name);
        }
    }

    #[test]
    fn matrix_plus_algebra_satisfies_super_jordan() {
        let ring = Ring::rationals();
        // 2x2 matrix units, all even; its plus algebra is Jordan.
        let mut b = AlgebraBuilder::new("m2", &ring);
        for i in 0..2 {
            for j in 0..2 {
                b.basis_element(&format!("e{}{}", i + 1, j + 1), Parity::Even);
            }
        }
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        if j == k {
                            b.set_product_int(i * 2 + j, k * 2 + l, &[(i * 2 + l, 1)]);
                        }
                    }
                }
            }
        }
        let m2 = b.build().unwrap();
        assert!(check_identity(&m2, &IdentitySpec::associativity()).unwrap().holds());
        let plus = m2.plus_algebra().unwrap();
        assert!(check_identity(&plus, &IdentitySpec::supercommutativity()).unwrap().holds());
        assert!(check_identity(&plus, &IdentitySpec::super_jordan()).unwrap().holds());
        // The associative algebra itself is not Jordan-commutative.
        assert!(!check_identity(&m2, &IdentitySpec::supercommutativity()).unwrap().holds());
    }
}
