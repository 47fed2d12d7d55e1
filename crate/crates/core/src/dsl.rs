//! Line-oriented text documents for structure-constant superalgebras, with a
//! canonical serializer.
//!
//! A document is a sequence of declarations, one per line; `#` starts a
//! comment. Example:
//!
//! ```text
//! algebra B(1,2)
//! char 3
//! basis 1 x y
//! odd x y
//! unit 1
//! mul 1 1 = 1
//! mul x y = 1
//! mul y x = -1*1
//! ```
//!
//! Lines:
//!
//! * `algebra NAME` (optional): free-text name, rest of the line.
//! * `char P` (required): 0 or a prime.
//! * `params NAME*` (optional): polynomial parameters of the coefficients.
//! * `basis NAME+` (required): basis element names, `[A-Za-z0-9_]+`.
//! * `odd NAME*` (optional): the odd subset of the basis; the rest is even.
//! * `unit LINCOMB` (optional): a declared two-sided unit, checked on parse.
//! * `mul A B = LINCOMB`: the product of two basis elements. Pairs with no
//!   line multiply to zero.
//!
//! A `LINCOMB` is `TERM (+ TERM)*` where a term is a basis name with an
//! optional `SCALAR*` coefficient prefix, e.g. `e11 + (1/2)*e22 + -1*e21`;
//! a bare `0` denotes the empty combination. A `-` between terms negates
//! the following term, so multi-term coefficients must be parenthesized.
//!
//! [`serialize`] emits a canonical form: `params` and `basis` sorted
//! bytewise, `odd` in basis order, `mul` lines sorted by the (left, right)
//! pair with zero products omitted, and every coefficient rendered without
//! spaces (parenthesized when it has several terms, so `+` at the top level
//! always separates terms of the combination). The output is byte-stable:
//! parsing it and serializing again reproduces it exactly.

use std::collections::{BTreeMap, BTreeSet};

use num::{One, Signed};

use crate::algebra::{AlgebraBuilder, Parity, SuperAlgebra};
use crate::error::Error;
use crate::ring::{Coeff, Ring};
use crate::scalar::Scalar;
use crate::Result;

/// Parsed form of a document: everything is validated except grading
/// closure and the unit axiom, which [`AlgebraDocument::to_algebra`] checks.
#[derive(Debug, Clone)]
pub struct AlgebraDocument {
    pub name: String,
    pub ring: Ring,
    pub basis: Vec<String>,
    /// Odd subset of `basis`, in declaration order.
    pub odd: Vec<String>,
    /// Unit coordinates as (basis name, coefficient) pairs.
    pub unit: Option<Vec<(String, Scalar)>>,
    /// Source line of the `unit` declaration, 0 when absent.
    pub unit_line: usize,
    pub products: Vec<MulLine>,
}

/// One `mul` declaration.
#[derive(Debug, Clone)]
pub struct MulLine {
    pub left: String,
    pub right: String,
    /// Accumulated nonzero terms, sorted by basis name.
    pub terms: Vec<(String, Scalar)>,
    /// Source line, for error reports.
    pub line: usize,
}

impl AlgebraDocument {
    pub fn characteristic(&self) -> u64 {
        self.ring.characteristic()
    }

    pub fn parameters(&self) -> &[String] {
        self.ring.parameters()
    }

    /// Build the algebra, enforcing grading closure and (when declared) the
    /// unit axiom. Violations are reported against the offending source line.
    pub fn to_algebra(&self) -> Result<SuperAlgebra> {
        let odd: BTreeSet<&str> = self.odd.iter().map(|s| s.as_str()).collect();
        let mut b = AlgebraBuilder::new(&self.name, &self.ring);
        let mut index: BTreeMap<&str, usize> = BTreeMap::new();
        for name in &self.basis {
            let parity = if odd.contains(name.as_str()) {
                Parity::Odd
            } else {
                Parity::Even
            };
            index.insert(name, b.basis_element(name, parity));
        }
        for m in &self.products {
            let entry: Vec<(usize, Scalar)> = m
                .terms
                .iter()
                .map(|(n, c)| (index[n.as_str()], c.clone()))
                .collect();
            b.set_product(index[m.left.as_str()], index[m.right.as_str()], entry);
        }
        if let Some(unit) = &self.unit {
            let mut coords = vec![Scalar::zero(&self.ring); self.basis.len()];
            for (n, c) in unit {
                coords[index[n.as_str()]] = c.clone();
            }
            b.unit(coords);
        }
        b.build().map_err(|e| self.annotate(e))
    }

    fn annotate(&self, e: Error) -> Error {
        match e {
            Error::GradingViolation { i, j, k } => {
                let line = self
                    .products
                    .iter()
                    .find(|m| m.left == self.basis[i] && m.right == self.basis[j])
                    .map(|m| m.line)
                    .unwrap_or(0);
                Error::Parse {
                    line,
                    col: 1,
                    msg: format!(
                        "grading closure violated: {}*{} has a component on {} of the \
                         wrong parity (indices {}, {}, {})",
                        self.basis[i], self.basis[j], self.basis[k], i, j, k
                    ),
                }
            }
            Error::UnitAxiom { i } => Error::Parse {
                line: self.unit_line,
                col: 1,
                msg: format!(
                    "declared unit fails the unit axiom against basis element {}",
                    self.basis[i]
                ),
            },
            other => other,
        }
    }
}

/// Parse a document and build the algebra it describes.
pub fn parse(text: &str) -> Result<SuperAlgebra> {
    parse_document(text)?.to_algebra()
}

fn perr(line: usize, col: usize, msg: String) -> Error {
    Error::Parse { line, col, msg }
}

fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && s.bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// Split a header tail into names, validating the charset.
fn name_list(rest: &str, lineno: usize, base: usize, what: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for tok in rest.split_whitespace() {
        if !valid_name(tok) {
            let col = base + rest.find(tok).unwrap_or(0) + 1;
            return Err(perr(
                lineno,
                col,
                format!("{what} name {tok:?} may only use letters, digits and _"),
            ));
        }
        out.push(tok.to_string());
    }
    Ok(out)
}

pub fn parse_document(text: &str) -> Result<AlgebraDocument> {
    let mut name: Option<String> = None;
    let mut characteristic: Option<u64> = None;
    let mut params: Option<Vec<String>> = None;
    let mut basis: Option<(Vec<String>, usize)> = None;
    let mut odd: Option<(Vec<String>, usize, usize)> = None;
    let mut unit: Option<(String, usize, usize)> = None;
    let mut muls: Vec<(String, String, String, usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(h) => &raw[..h],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let start = line.len() - line.trim_start().len();
        let word_end = line[start..]
            .find(char::is_whitespace)
            .map(|w| start + w)
            .unwrap_or(line.len());
        let word = &line[start..word_end];
        let rest = &line[word_end..];
        let rest_base = word_end;
        let dup = |have: bool| -> Result<()> {
            if have {
                Err(perr(lineno, start + 1, format!("duplicate {word} line")))
            } else {
                Ok(())
            }
        };
        match word {
            "algebra" => {
                dup(name.is_some())?;
                let n = rest.trim();
                if n.is_empty() {
                    return Err(perr(lineno, rest_base + 1, "algebra line needs a name".into()));
                }
                name = Some(n.to_string());
            }
            "char" => {
                dup(characteristic.is_some())?;
                let t = rest.trim();
                let p: u64 = t.parse().map_err(|_| {
                    perr(
                        lineno,
                        rest_base + 1,
                        format!("char needs a nonnegative integer, got {t:?}"),
                    )
                })?;
                characteristic = Some(p);
            }
            "params" => {
                dup(params.is_some())?;
                params = Some(name_list(rest, lineno, rest_base, "parameter")?);
            }
            "basis" => {
                dup(basis.is_some())?;
                let names = name_list(rest, lineno, rest_base, "basis")?;
                if names.is_empty() {
                    return Err(perr(
                        lineno,
                        rest_base + 1,
                        "basis line needs at least one name".into(),
                    ));
                }
                basis = Some((names, lineno));
            }
            "odd" => {
                dup(odd.is_some())?;
                odd = Some((name_list(rest, lineno, rest_base, "basis")?, lineno, rest_base));
            }
            "unit" => {
                dup(unit.is_some())?;
                unit = Some((rest.to_string(), lineno, rest_base));
            }
            "mul" => {
                let mut pos = word_end;
                let mut word_at = |what: &str| -> Result<(String, usize)> {
                    let tail = &line[pos..];
                    let s = pos + (tail.len() - tail.trim_start().len());
                    let e = line[s..]
                        .find(char::is_whitespace)
                        .map(|w| s + w)
                        .unwrap_or(line.len());
                    let tok = &line[s..e];
                    if !valid_name(tok) {
                        return Err(perr(
                            lineno,
                            s + 1,
                            format!("mul needs a {what} basis name, got {tok:?}"),
                        ));
                    }
                    pos = e;
                    Ok((tok.to_string(), s))
                };
                let (left, _) = word_at("left")?;
                let (right, _) = word_at("right")?;
                let tail = &line[pos..];
                let eq = pos + (tail.len() - tail.trim_start().len());
                if line[eq..].chars().next() != Some('=') {
                    return Err(perr(lineno, eq + 1, "expected = after the basis pair".into()));
                }
                muls.push((left, right, line[eq + 1..].to_string(), lineno, eq + 1));
            }
            _ => {
                return Err(perr(
                    lineno,
                    start + 1,
                    format!(
                        "unknown keyword {word:?} (expected algebra, char, params, basis, \
                         odd, unit or mul)"
                    ),
                ))
            }
        }
    }

    let characteristic =
        characteristic.ok_or_else(|| perr(1, 1, "missing required char line".into()))?;
    let (basis, basis_line) =
        basis.ok_or_else(|| perr(1, 1, "missing required basis line".into()))?;
    let mut seen = BTreeSet::new();
    for n in &basis {
        if !seen.insert(n.as_str()) {
            return Err(perr(basis_line, 1, format!("duplicate basis name {n}")));
        }
    }
    let params = params.unwrap_or_default();
    let param_refs: Vec<&str> = params.iter().map(|s| s.as_str()).collect();
    let ring = Ring::new(characteristic, &param_refs)?;

    let declared: BTreeSet<&str> = basis.iter().map(|s| s.as_str()).collect();
    let odd = match odd {
        None => Vec::new(),
        Some((names, lineno, base)) => {
            for n in &names {
                if !declared.contains(n.as_str()) {
                    return Err(perr(
                        lineno,
                        base + 1,
                        format!("odd names undeclared basis element {n}"),
                    ));
                }
            }
            names
        }
    };

    let (unit, unit_line) = match unit {
        None => (None, 0),
        Some((text, lineno, base)) => {
            let terms = parse_lincomb(&ring, &declared, &text, lineno, base)?;
            (Some(terms), lineno)
        }
    };

    let mut products: Vec<MulLine> = Vec::new();
    let mut pairs: BTreeSet<(String, String)> = BTreeSet::new();
    for (left, right, text, lineno, base) in muls {
        for n in [&left, &right] {
            if !declared.contains(n.as_str()) {
                return Err(perr(
                    lineno,
                    1,
                    format!("mul references undeclared basis element {n}"),
                ));
            }
        }
        if !pairs.insert((left.clone(), right.clone())) {
            return Err(perr(
                lineno,
                1,
                format!("duplicate product line for {left} {right}"),
            ));
        }
        let terms = parse_lincomb(&ring, &declared, &text, lineno, base)?;
        products.push(MulLine {
            left,
            right,
            terms,
            line: lineno,
        });
    }

    Ok(AlgebraDocument {
        name: name.unwrap_or_else(|| "unnamed".to_string()),
        ring,
        basis,
        odd,
        unit,
        unit_line,
        products,
    })
}

/// Parse `TERM (+ TERM)*` against declared basis names. `base` is the byte
/// offset of `text` within its source line, for error columns.
fn parse_lincomb(
    ring: &Ring,
    declared: &BTreeSet<&str>,
    text: &str,
    lineno: usize,
    base: usize,
) -> Result<Vec<(String, Scalar)>> {
    if text.trim() == "0" {
        return Ok(Vec::new());
    }
    // Split at top-level + and -; a sign in front of an all-blank chunk
    // (leading sign, or the second of "+ -") folds into the next term.
    let mut chunks: Vec<(i64, usize, &str)> = Vec::new();
    let bytes = text.as_bytes();
    let mut depth = 0i32;
    let mut sign = 1i64;
    let mut start = 0usize;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                let chunk = &text[start..i];
                if chunk.trim().is_empty() {
                    if b == b'-' {
                        sign = -sign;
                    }
                } else {
                    chunks.push((sign, start, chunk));
                    sign = if b == b'-' { -1 } else { 1 };
                }
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(perr(lineno, base + 1, "unbalanced parentheses".into()));
    }
    let last = &text[start..];
    if last.trim().is_empty() {
        return Err(perr(
            lineno,
            base + start + 1,
            "linear combination ends with a dangling separator".into(),
        ));
    }
    chunks.push((sign, start, last));

    let mut acc: BTreeMap<String, Scalar> = BTreeMap::new();
    for (sign, off, chunk) in chunks {
        let lead = chunk.len() - chunk.trim_start().len();
        let term = chunk.trim();
        let term_col = base + off + lead + 1;
        // The basis name is everything after the last top-level *.
        let mut split = None;
        let mut d = 0i32;
        for (i, &b) in term.as_bytes().iter().enumerate() {
            match b {
                b'(' => d += 1,
                b')' => d -= 1,
                b'*' if d == 0 => split = Some(i),
                _ => {}
            }
        }
        let (scalar_text, name, name_off) = match split {
            None => ("", term, 0),
            Some(i) => (&term[..i], term[i + 1..].trim(), i + 1),
        };
        if !valid_name(name) {
            return Err(perr(
                lineno,
                term_col + name_off,
                format!(
                    "term must end with a basis name, got {name:?} \
                     (multi-term coefficients need parentheses)"
                ),
            ));
        }
        if !declared.contains(name) {
            return Err(perr(
                lineno,
                term_col + name_off,
                format!("unknown basis element {name}"),
            ));
        }
        let coeff = if scalar_text.is_empty() {
            if split.is_some() {
                return Err(perr(lineno, term_col, "empty coefficient before *".into()));
            }
            Scalar::one(ring)
        } else {
            Scalar::parse(ring, scalar_text).map_err(|e| match e {
                Error::Parse { col, msg, .. } => perr(lineno, term_col + col - 1, msg),
                other => perr(lineno, term_col, other.to_string()),
            })?
        };
        let coeff = if sign < 0 { coeff.negate() } else { coeff };
        match acc.get_mut(name) {
            Some(slot) => *slot = &*slot + &coeff,
            None => {
                acc.insert(name.to_string(), coeff);
            }
        }
    }
    Ok(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

/// Canonical document text for an algebra. Re-parsing yields a
/// structure-constant-identical algebra, and serializing that reproduces
/// the same bytes.
pub fn serialize(a: &SuperAlgebra) -> String {
    let ring = a.ring();
    let mut out = format!("algebra {}\nchar {}\n", a.name(), ring.characteristic());
    let mut params: Vec<&str> = ring.parameters().iter().map(|s| s.as_str()).collect();
    params.sort_unstable();
    if !params.is_empty() {
        out.push_str(&format!("params {}\n", params.join(" ")));
    }
    let mut order: Vec<usize> = (0..a.dim()).collect();
    order.sort_by(|&i, &j| a.basis_name(i).cmp(a.basis_name(j)));
    let names: Vec<&str> = order.iter().map(|&i| a.basis_name(i)).collect();
    out.push_str(&format!("basis {}\n", names.join(" ")));
    let odd: Vec<&str> = order
        .iter()
        .filter(|&&i| a.parity(i) == Parity::Odd)
        .map(|&i| a.basis_name(i))
        .collect();
    if !odd.is_empty() {
        out.push_str(&format!("odd {}\n", odd.join(" ")));
    }
    if let Some(u) = a.unit_element() {
        let terms: Vec<(usize, Scalar)> = u
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        out.push_str(&format!("unit {}\n", render_lincomb(a, &terms)));
    }
    for &i in &order {
        for &j in &order {
            let prod = a.product_of_basis(i, j);
            if prod.is_empty() {
                continue;
            }
            out.push_str(&format!(
                "mul {} {} = {}\n",
                a.basis_name(i),
                a.basis_name(j),
                render_lincomb(a, prod)
            ));
        }
    }
    out
}

fn render_lincomb(a: &SuperAlgebra, terms: &[(usize, Scalar)]) -> String {
    let mut parts: Vec<(&str, &Scalar)> = terms
        .iter()
        .map(|(i, c)| (a.basis_name(*i), c))
        .collect();
    parts.sort_by(|x, y| x.0.cmp(y.0));
    let rendered: Vec<String> = parts
        .iter()
        .map(|(name, c)| {
            if c.is_one() {
                name.to_string()
            } else if c.term_count() > 1 {
                format!("({})*{}", render_scalar(c), name)
            } else {
                format!("{}*{}", render_scalar(c), name)
            }
        })
        .collect();
    rendered.join(" + ")
}

/// Compact, ring-order-independent polynomial rendering: terms sorted by
/// total degree (descending) then by their sorted factor list, factors
/// sorted by parameter name, no spaces.
fn render_scalar(s: &Scalar) -> String {
    if s.is_zero() {
        return "0".to_string();
    }
    let params = s.ring().parameters();
    let mut terms: Vec<(u64, Vec<(String, u32)>, bool, String)> = Vec::new();
    for (m, c) in s.terms() {
        let mut factors: Vec<(String, u32)> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (params[i].clone(), e))
            .collect();
        factors.sort();
        let (neg, mag) = match c {
            Coeff::Rat(r) => {
                let neg = r.is_negative();
                let abs = if neg { -r } else { r.clone() };
                let s = if abs.denom().is_one() {
                    abs.numer().to_string()
                } else {
                    format!("{}/{}", abs.numer(), abs.denom())
                };
                (neg, s)
            }
            Coeff::Mod(v) => (false, v.to_string()),
        };
        terms.push((m.degree(), factors, neg, mag));
    }
    terms.sort_by(|x, y| y.0.cmp(&x.0).then_with(|| x.1.cmp(&y.1)));
    let mut out = String::new();
    for (k, (_, factors, neg, mag)) in terms.iter().enumerate() {
        if k == 0 {
            if *neg {
                out.push('-');
            }
        } else {
            out.push(if *neg { '-' } else { '+' });
        }
        let mut pieces: Vec<String> = Vec::new();
        if mag != "1" || factors.is_empty() {
            pieces.push(mag.clone());
        }
        for (name, e) in factors {
            if *e == 1 {
                pieces.push(name.clone());
            } else {
                pieces.push(format!("{name}^{e}"));
            }
        }
        out.push_str(&pieces.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const B12_DOC: &str = "\
char 3
basis 1 x y
odd x y
unit 1
mul 1 1 = 1
mul 1 x = x
mul 1 y = y
mul x 1 = x
mul y 1 = y
mul x y = 1
mul y x = -1*1
";

    #[test]
    fn document_matches_catalog_b12() {
        let parsed = parse(B12_DOC).expect("document parses");
        let built = catalog::make_b12(&Ring::gf(3).unwrap()).unwrap();
        // Same structure up to the algebra name: compare canonical forms
        // with the name line dropped.
        let (ta, tb) = (serialize(&parsed), serialize(&built));
        let a: Vec<&str> = ta.lines().skip(1).collect();
        let b: Vec<&str> = tb.lines().skip(1).collect();
        assert_eq!(a, b);
        assert_eq!(parsed.name(), "unnamed");
        assert!(parsed.unit_element().is_some());
    }

    #[test]
    fn missing_mul_lines_default_to_zero() {
        let a = parse("char 3\nbasis 1 x y\nodd x y\nmul x y = 1\n").unwrap();
        let x = a.basis_element(1);
        assert!(x.mul(&x).is_zero());
        let y = a.basis_element(2);
        assert!(y.mul(&y).is_zero());
        assert!(!x.mul(&y).is_zero());
    }

    #[test]
    fn grading_closure_violation_is_located() {
        let doc = "char 0\nbasis e x\nodd x\nmul x x = x\n";
        match parse(doc) {
            Err(Error::Parse { line, msg, .. }) => {
                assert_eq!(line, 4);
                assert!(msg.contains("grading"), "{msg}");
            }
            other => panic!("expected a grading error, got {other:?}"),
        }
    }

    #[test]
    fn bad_documents_are_rejected_with_positions() {
        let dup = parse("char 0\nbasis e e\n");
        assert!(matches!(dup, Err(Error::Parse { line: 2, .. })), "{dup:?}");

        let unknown = parse("char 0\nbasis e\nmul e f = e\n");
        assert!(
            matches!(unknown, Err(Error::Parse { line: 3, .. })),
            "{unknown:?}"
        );

        let twice = parse("char 0\nbasis e\nmul e e = e\nmul e e = e\n");
        assert!(
            matches!(twice, Err(Error::Parse { line: 4, .. })),
            "{twice:?}"
        );

        let nochar = parse("basis e\n");
        assert!(matches!(nochar, Err(Error::Parse { .. })), "{nochar:?}");

        let badterm = parse("char 0\nbasis e\nmul e e = 2*m\n");
        assert!(
            matches!(badterm, Err(Error::Parse { line: 3, .. })),
            "{badterm:?}"
        );

        let badunit = parse("char 0\nbasis e f\nunit f\nmul e e = e\nmul e f = f\nmul f e = f\n");
        match badunit {
            Err(Error::Parse { line, msg, .. }) => {
                assert_eq!(line, 3);
                assert!(msg.contains("unit axiom"), "{msg}");
            }
            other => panic!("expected a unit error, got {other:?}"),
        }
    }

    #[test]
    fn lincomb_syntax_accepts_signs_fractions_and_parens() {
        let doc = "char 0\nparams m\nbasis e f\nmul e e = (m-1)*e + 1/2*f\nmul f f = -e\n";
        let a = parse(doc).unwrap();
        let e = a.basis_element(0);
        let p = e.mul(&e);
        assert_eq!(p.to_string(), "(m - 1)*e + 1/2*f");
        let f = a.basis_element(1);
        assert_eq!(f.mul(&f).to_string(), "-e");
    }

    fn fingerprint(a: &SuperAlgebra) -> Vec<String> {
        serialize(a).lines().skip(1).map(str::to_string).collect()
    }

    #[test]
    fn catalog_exports_round_trip() {
        let gf2 = Ring::new(2, &["mu", "beta", "gamma"]).unwrap();
        let m = Scalar::param(&gf2, "mu").unwrap();
        let b = Scalar::param(&gf2, "beta").unwrap();
        let g = Scalar::param(&gf2, "gamma").unwrap();
        let gf3g = Ring::new(3, &["gamma"]).unwrap();
        let qt = Ring::new(0, &["t"]).unwrap();
        let samples = vec![
            catalog::make_b12(&Ring::gf(3).unwrap()).unwrap(),
            catalog::make_b42(&Ring::gf(3).unwrap()).unwrap(),
            catalog::make_b_gamma(3, &Scalar::param(&gf3g, "gamma").unwrap()).unwrap(),
            catalog::make_octonion_super(&m, &b, &g).unwrap(),
            catalog::checkerboard(&Ring::rationals(), 2, 1).unwrap(),
            catalog::make_jordan_mnm(&Ring::rationals(), 1, 1).unwrap(),
            catalog::make_jordan_osp(&Ring::rationals(), 1, 1).unwrap(),
            catalog::make_jordan_dt(&Scalar::param(&qt, "t").unwrap()).unwrap(),
            catalog::make_jordan_h3b42(&Ring::gf(3).unwrap()).unwrap(),
        ];
        for a in samples {
            let text = serialize(&a);
            let back = parse(&text).unwrap_or_else(|e| panic!("{}: {e}", a.name()));
            assert_eq!(serialize(&back), text, "canonical form unstable for {}", a.name());
            assert_eq!(fingerprint(&back), fingerprint(&a));
        }
    }

    #[test]
    fn random_documents_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for case in 0..100 {
            let char_choices = [0u64, 2, 3, 5, 7];
            let p = char_choices[rng.gen_range(0..char_choices.len())];
            let nparams = rng.gen_range(0..3usize);
            let all_params = ["s", "t"];
            let ring = Ring::new(p, &all_params[..nparams]).unwrap();
            let dim = rng.gen_range(1..6usize);
            let mut builder = AlgebraBuilder::new(&format!("R{case}"), &ring);
            let mut parities = Vec::new();
            for i in 0..dim {
                let parity = if rng.gen_bool(0.4) {
                    Parity::Odd
                } else {
                    Parity::Even
                };
                parities.push(parity);
                builder.basis_element(&format!("v{i}"), parity);
            }
            for i in 0..dim {
                for j in 0..dim {
                    if rng.gen_bool(0.5) {
                        continue;
                    }
                    let want = parities[i].compose(parities[j]);
                    let targets: Vec<usize> =
                        (0..dim).filter(|&k| parities[k] == want).collect();
                    if targets.is_empty() {
                        continue;
                    }
                    let k = targets[rng.gen_range(0..targets.len())];
                    let c = random_scalar(&ring, &mut rng);
                    if c.is_zero() {
                        continue;
                    }
                    builder.set_product(i, j, vec![(k, c)]);
                }
            }
            let a = builder.build().unwrap();
            let text = serialize(&a);
            let back = parse(&text).unwrap_or_else(|e| panic!("doc {case}: {e}\n{text}"));
            assert_eq!(serialize(&back), text, "doc {case} unstable:\n{text}");
        }
    }

    fn random_scalar(ring: &Ring, rng: &mut ChaCha8Rng) -> Scalar {
        let mut acc = Scalar::from_int(ring, rng.gen_range(-3i64..4));
        for name in ring.parameters() {
            if rng.gen_bool(0.5) {
                let var = Scalar::param(ring, name).unwrap();
                let e = rng.gen_range(1..3u32);
                let c = Scalar::from_int(ring, rng.gen_range(-2i64..3));
                acc = &acc + &(&c * &var.pow(e));
            }
        }
        if ring.characteristic() == 0 && rng.gen_bool(0.3) {
            acc = &acc * &Scalar::from_fraction(ring, 1, 2).unwrap();
        }
        acc
    }
}
