//! Recorded verification cases. Each case fixes a coefficient ring and an
//! algebra from the catalog, binds a generic element with named coordinates
//! plus a few abbreviations, and then checks a list of records exactly. An
//! equation record claims two bracketed expressions are equal; a support
//! record claims a value lies in the span of listed elements. A record that
//! fails as quoted may carry a corrected variant, and the report keeps the
//! original reading, its residual, and the correction side by side.

pub mod registry;
pub mod sexp;

use crate::algebra::{Element, SuperAlgebra};
use crate::catalog;
use crate::error::Error;
use crate::expr::{Expr, ExprEnv};
use crate::ring::Ring;
use crate::scalar::{specialization_assignment, Scalar};
use crate::Result;
use sexp::Sexp;
use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

/// One verification case: ring, algebra, bound names, and records.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseSpec {
    pub id: String,
    pub title: String,
    /// Characteristic of the coefficient field (0 for the rationals).
    pub characteristic: u64,
    /// Polynomial parameters of the coefficient ring, in declaration order.
    pub params: Vec<String>,
    /// Catalog constructor token followed by its arguments.
    pub algebra: Vec<String>,
    /// Generic elements: name and one coordinate parameter per basis slot.
    pub gens: Vec<(String, Vec<String>)>,
    /// Abbreviations, evaluated in order; later ones may use earlier ones.
    pub lets: Vec<(String, Expr)>,
    pub records: Vec<Record>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub id: String,
    /// The claim being checked, quoted in plain text.
    pub quote: String,
    pub body: RecordBody,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RecordBody {
    Equation {
        lhs: Expr,
        rhs: Expr,
        emend: Option<Emend>,
    },
    Support {
        expr: Expr,
        span: Vec<Expr>,
    },
}

/// A corrected reading for a record that fails verbatim.
#[derive(Debug, Clone, PartialEq)]
pub struct Emend {
    pub note: String,
    pub lhs: Expr,
    pub rhs: Expr,
}

/// A case with its algebra built and every name bound to an element.
pub struct PreparedCase {
    pub algebra: SuperAlgebra,
    pub names: BTreeMap<String, Element>,
}

impl CaseSpec {
    pub fn ring(&self) -> Result<Ring> {
        let params: Vec<&str> = self.params.iter().map(|s| s.as_str()).collect();
        Ring::new(self.characteristic, &params)
    }

    /// Instantiate the algebra named by the case's constructor token.
    pub fn build_algebra(&self, ring: &Ring) -> Result<SuperAlgebra> {
        let tok = self
            .algebra
            .first()
            .ok_or_else(|| Error::InvalidArgument("empty algebra directive".into()))?;
        let args = &self.algebra[1..];
        let size = |k: usize| -> Result<usize> {
            args.get(k)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::InvalidArgument(format!("{tok}: bad size argument")))
        };
        let p = |name: &str| Scalar::param(ring, name);
        match tok.as_str() {
            "matrix-ku" => catalog::matrix_superalgebra(&catalog::scalar_algebra(ring), size(0)?)?
                .adjoin_root(&p("l")?, crate::algebra::Parity::Odd, "u"),
            "octonion" => catalog::make_octonion_super(&p("m")?, &p("b")?, &p("g")?),
            "octonion-mu0" => {
                catalog::make_octonion_super(&Scalar::zero(ring), &p("b")?, &p("g")?)
            }
            "octonion-u" => catalog::make_octonion_u(&p("m")?, &p("b")?, &p("g")?, &p("q")?),
            "octonion-u-mu0" => {
                catalog::make_octonion_u(&Scalar::zero(ring), &p("b")?, &p("g")?, &p("q")?)
            }
            "b12" => catalog::make_b12(ring),
            "b42" => catalog::make_b42(ring),
            "jordan-mnm" => catalog::make_jordan_mnm(ring, size(0)?, size(1)?),
            "jordan-qn" => catalog::make_jordan_qn(ring, size(0)?),
            "jordan-pn" => catalog::make_jordan_pn(ring, size(0)?),
            "jordan-osp" => catalog::make_jordan_osp(ring, size(0)?, size(1)?),
            "jordan-dt" => catalog::make_jordan_dt(&p("t")?),
            "jordan-superform" => {
                let n = size(0)?;
                let m = size(1)?;
                let alphas: Vec<Scalar> = (1..=n)
                    .map(|i| p(&format!("al{i}")))
                    .collect::<Result<_>>()?;
                let betas: Vec<Scalar> = (1..=m)
                    .map(|i| p(&format!("be{i}")))
                    .collect::<Result<_>>()?;
                catalog::make_jordan_superform(ring, &alphas, &betas)
            }
            "jordan-jp3" => catalog::make_jordan_jp3(ring),
            "jordan-h3b42" => catalog::make_jordan_h3b42(ring),
            _ => Err(Error::InvalidArgument(format!(
                "unknown algebra token {tok}"
            ))),
        }
    }

    pub fn prepare(&self) -> Result<PreparedCase> {
        let ring = self.ring()?;
        let algebra = self.build_algebra(&ring)?;
        let mut names: BTreeMap<String, Element> = BTreeMap::new();
        let bind = |names: &mut BTreeMap<String, Element>, n: &str, v: Element| {
            if n == "unit" || names.contains_key(n) {
                return Err(Error::InvalidArgument(format!(
                    "case {}: name {n} already bound",
                    self.id
                )));
            }
            names.insert(n.to_string(), v);
            Ok(())
        };
        for (name, coeffs) in &self.gens {
            if coeffs.len() != algebra.dim() {
                return Err(Error::InvalidArgument(format!(
                    "case {}: generator {name} has {} coordinates for dimension {}",
                    self.id,
                    coeffs.len(),
                    algebra.dim()
                )));
            }
            let coords: Vec<Scalar> = coeffs
                .iter()
                .map(|c| Scalar::param(&ring, c))
                .collect::<Result<_>>()?;
            bind(&mut names, name, algebra.element(coords))?;
        }
        for (name, expr) in &self.lets {
            let env = ExprEnv {
                algebra: &algebra,
                names: names.clone(),
            };
            let v = expr.eval(&env)?;
            bind(&mut names, name, v)?;
        }
        Ok(PreparedCase { algebra, names })
    }
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

fn check_scalar_atoms(e: &Expr) -> Result<()> {
    match e {
        Expr::SMul(s, a) => {
            let t = s.to_string();
            if t.is_empty() || t.contains([' ', '(', ')', '"']) {
                return Err(Error::InvalidArgument(format!(
                    "scalar {t} is not a single monomial atom"
                )));
            }
            check_scalar_atoms(a)
        }
        Expr::Mul(a, b) | Expr::Circ(a, b) | Expr::Sub(a, b) => {
            check_scalar_atoms(a)?;
            check_scalar_atoms(b)
        }
        Expr::Add(ts) => ts.iter().try_for_each(check_scalar_atoms),
        Expr::Neg(a) | Expr::IMul(_, a) => check_scalar_atoms(a),
        Expr::Name(_) | Expr::Unit | Expr::Basis(_) => Ok(()),
    }
}

/// Render a case in its canonical text form.
pub fn serialize_case(spec: &CaseSpec) -> Result<String> {
    let mut out = String::new();
    let _ = writeln!(out, "(case {}", spec.id);
    let _ = writeln!(out, "  (title {})", sexp::quote_str(&spec.title));
    let _ = writeln!(
        out,
        "  (field {} ({}))",
        spec.characteristic,
        spec.params.join(" ")
    );
    let _ = writeln!(out, "  (algebra {})", spec.algebra.join(" "));
    for (name, coeffs) in &spec.gens {
        let _ = writeln!(out, "  (gen {name} ({}))", coeffs.join(" "));
    }
    for (name, expr) in &spec.lets {
        check_scalar_atoms(expr)?;
        let _ = writeln!(out, "  (let {name} {expr})");
    }
    for rec in &spec.records {
        match &rec.body {
            RecordBody::Equation { lhs, rhs, emend } => {
                check_scalar_atoms(lhs)?;
                check_scalar_atoms(rhs)?;
                let _ = writeln!(out, "  (record {} equation", rec.id);
                let _ = writeln!(out, "    (quote {})", sexp::quote_str(&rec.quote));
                let _ = writeln!(out, "    (lhs {lhs})");
                match emend {
                    None => {
                        let _ = writeln!(out, "    (rhs {rhs}))");
                    }
                    Some(em) => {
                        check_scalar_atoms(&em.lhs)?;
                        check_scalar_atoms(&em.rhs)?;
                        let _ = writeln!(out, "    (rhs {rhs})");
                        let _ = writeln!(out, "    (emend {}", sexp::quote_str(&em.note));
                        let _ = writeln!(out, "      (lhs {})", em.lhs);
                        let _ = writeln!(out, "      (rhs {})))", em.rhs);
                    }
                }
            }
            RecordBody::Support { expr, span } => {
                check_scalar_atoms(expr)?;
                let _ = writeln!(out, "  (record {} support", rec.id);
                let _ = writeln!(out, "    (quote {})", sexp::quote_str(&rec.quote));
                let _ = writeln!(out, "    (expr {expr})");
                let mut line = String::from("    (span");
                for s in span {
                    check_scalar_atoms(s)?;
                    let _ = write!(line, " {s}");
                }
                let _ = writeln!(out, "{line}))");
            }
        }
    }
    if !spec.notes.is_empty() {
        let mut line = String::from("  (notes");
        for n in &spec.notes {
            let _ = write!(line, " {}", sexp::quote_str(n));
        }
        let _ = writeln!(out, "{line})");
    }
    out.push_str(")\n");
    Ok(out)
}

fn expr_from_sexp(s: &Sexp, ring: &Ring) -> Result<Expr> {
    let bad = |msg: &str| Error::InvalidArgument(format!("bad expression: {msg}"));
    match s {
        Sexp::Sym(t) if t == "unit" => Ok(Expr::Unit),
        Sexp::Sym(t) => Ok(Expr::Name(t.clone())),
        Sexp::Str(_) => Err(bad("string where an expression was expected")),
        Sexp::List(items) => {
            let head = items
                .first()
                .and_then(|h| h.sym())
                .ok_or_else(|| bad("empty list"))?;
            let arg = |k: usize| -> Result<Expr> {
                expr_from_sexp(
                    items.get(k + 1).ok_or_else(|| bad("missing operand"))?,
                    ring,
                )
            };
            let arity = |n: usize| -> Result<()> {
                if items.len() == n + 1 {
                    Ok(())
                } else {
                    Err(bad(&format!("{head} expects {n} operands")))
                }
            };
            match head {
                "basis" => {
                    arity(1)?;
                    let n = items[1].sym().ok_or_else(|| bad("basis needs a name"))?;
                    Ok(Expr::basis(n))
                }
                "mul" => {
                    arity(2)?;
                    Ok(Expr::mul(arg(0)?, arg(1)?))
                }
                "circ" => {
                    arity(2)?;
                    Ok(Expr::circ(arg(0)?, arg(1)?))
                }
                "sub" => {
                    arity(2)?;
                    Ok(Expr::sub(arg(0)?, arg(1)?))
                }
                "add" => {
                    if items.len() < 3 {
                        return Err(bad("add expects at least 2 operands"));
                    }
                    let terms = items[1..]
                        .iter()
                        .map(|t| expr_from_sexp(t, ring))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Expr::add(terms))
                }
                "neg" => {
                    arity(1)?;
                    Ok(Expr::neg(arg(0)?))
                }
                "imul" => {
                    arity(2)?;
                    let n = items[1].int().ok_or_else(|| bad("imul needs an integer"))?;
                    Ok(Expr::imul(n, arg(1)?))
                }
                "smul" => {
                    arity(2)?;
                    let t = items[1].sym().ok_or_else(|| bad("smul needs a scalar"))?;
                    Ok(Expr::smul(Scalar::parse(ring, t)?, arg(1)?))
                }
                _ => Err(bad(&format!("unknown operator {head}"))),
            }
        }
    }
}

/// Re-read a case with its coefficient field swapped to characteristic `p`.
/// Every scalar literal is re-parsed over the new ring, so a case whose
/// coefficients or algebra cannot exist there reports an error rather than
/// verifying something meaningless.
pub fn case_at_characteristic(spec: &CaseSpec, p: u64) -> Result<CaseSpec> {
    if spec.characteristic == p {
        return Ok(spec.clone());
    }
    let text = serialize_case(spec)?;
    let old = format!("(field {} ", spec.characteristic);
    let new = format!("(field {p} ");
    parse_case(&text.replacen(&old, &new, 1))
}

/// Parse a case from its text form.
pub fn parse_case(text: &str) -> Result<CaseSpec> {
    let top = sexp::parse(text)?;
    let items = top
        .tagged("case")
        .ok_or_else(|| Error::InvalidArgument("expected a (case ...) form".into()))?;
    let id = items
        .first()
        .and_then(|s| s.sym())
        .ok_or_else(|| Error::InvalidArgument("case needs an identifier".into()))?
        .to_string();
    let bad = |msg: String| Error::InvalidArgument(format!("case {id}: {msg}"));
    let mut title = None;
    let mut field: Option<(u64, Vec<String>)> = None;
    let mut algebra = None;
    let mut gens = Vec::new();
    let mut lets = Vec::new();
    let mut records = Vec::new();
    let mut notes = Vec::new();
    let mut ring: Option<Ring> = None;
    for d in &items[1..] {
        let list = d
            .list()
            .ok_or_else(|| bad("stray atom among directives".into()))?;
        let head = list
            .first()
            .and_then(|h| h.sym())
            .ok_or_else(|| bad("directive without a head symbol".into()))?;
        let body = &list[1..];
        match head {
            "title" => {
                let t = body
                    .first()
                    .and_then(|s| s.str())
                    .ok_or_else(|| bad("title needs a string".into()))?;
                title = Some(t.to_string());
            }
            "field" => {
                let c = body
                    .first()
                    .and_then(|s| s.int())
                    .and_then(|n| u64::try_from(n).ok())
                    .ok_or_else(|| bad("field needs a characteristic".into()))?;
                let ps = body
                    .get(1)
                    .and_then(|s| s.list())
                    .ok_or_else(|| bad("field needs a parameter list".into()))?
                    .iter()
                    .map(|s| {
                        s.sym()
                            .map(str::to_string)
                            .ok_or_else(|| bad("parameter names must be symbols".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let refs: Vec<&str> = ps.iter().map(|s| s.as_str()).collect();
                ring = Some(Ring::new(c, &refs)?);
                field = Some((c, ps));
            }
            "algebra" => {
                let toks = body
                    .iter()
                    .map(|s| {
                        s.sym()
                            .map(str::to_string)
                            .ok_or_else(|| bad("algebra arguments must be symbols".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if toks.is_empty() {
                    return Err(bad("algebra directive is empty".into()));
                }
                algebra = Some(toks);
            }
            "gen" => {
                let name = body
                    .first()
                    .and_then(|s| s.sym())
                    .ok_or_else(|| bad("gen needs a name".into()))?;
                let coeffs = body
                    .get(1)
                    .and_then(|s| s.list())
                    .ok_or_else(|| bad("gen needs a coordinate list".into()))?
                    .iter()
                    .map(|s| {
                        s.sym()
                            .map(str::to_string)
                            .ok_or_else(|| bad("gen coordinates must be symbols".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                gens.push((name.to_string(), coeffs));
            }
            "let" => {
                let r = ring
                    .as_ref()
                    .ok_or_else(|| bad("field must come before let".into()))?;
                let name = body
                    .first()
                    .and_then(|s| s.sym())
                    .ok_or_else(|| bad("let needs a name".into()))?;
                let e = expr_from_sexp(
                    body.get(1).ok_or_else(|| bad("let needs a body".into()))?,
                    r,
                )?;
                lets.push((name.to_string(), e));
            }
            "record" => {
                let r = ring
                    .as_ref()
                    .ok_or_else(|| bad("field must come before records".into()))?;
                records.push(parse_record(body, r).map_err(|e| match e {
                    Error::InvalidArgument(m) => bad(m),
                    other => other,
                })?);
            }
            "notes" => {
                for s in body {
                    notes.push(
                        s.str()
                            .ok_or_else(|| bad("notes must be strings".into()))?
                            .to_string(),
                    );
                }
            }
            _ => return Err(bad(format!("unknown directive {head}"))),
        }
    }
    let (characteristic, params) =
        field.ok_or_else(|| bad("missing field directive".into()))?;
    Ok(CaseSpec {
        id: id.clone(),
        title: title.ok_or_else(|| bad("missing title".into()))?,
        characteristic,
        params,
        algebra: algebra.ok_or_else(|| bad("missing algebra directive".into()))?,
        gens,
        lets,
        records,
        notes,
    })
}

fn parse_record(body: &[Sexp], ring: &Ring) -> Result<Record> {
    let bad = |msg: &str| Error::InvalidArgument(msg.to_string());
    let id = body
        .first()
        .and_then(|s| s.sym())
        .ok_or_else(|| bad("record needs an identifier"))?
        .to_string();
    let kind = body
        .get(1)
        .and_then(|s| s.sym())
        .ok_or_else(|| bad("record needs a kind"))?;
    let mut parts: BTreeMap<&str, &Sexp> = BTreeMap::new();
    for d in &body[2..] {
        let head = d
            .list()
            .and_then(|l| l.first())
            .and_then(|h| h.sym())
            .ok_or_else(|| bad("record parts must be tagged lists"))?;
        if parts.insert(head, d).is_some() {
            return Err(bad(&format!("record {id}: duplicate {head}")));
        }
    }
    let quote = parts
        .get("quote")
        .and_then(|d| d.list())
        .and_then(|l| l.get(1))
        .and_then(|s| s.str())
        .ok_or_else(|| bad(&format!("record {id}: missing quote")))?
        .to_string();
    let one_expr = |tag: &str| -> Result<Expr> {
        let d = parts
            .get(tag)
            .ok_or_else(|| bad(&format!("record {id}: missing {tag}")))?;
        expr_from_sexp(
            d.list()
                .and_then(|l| l.get(1))
                .ok_or_else(|| bad(&format!("record {id}: empty {tag}")))?,
            ring,
        )
    };
    let kind_body = match kind {
        "equation" => {
            let lhs = one_expr("lhs")?;
            let rhs = one_expr("rhs")?;
            let emend = match parts.get("emend") {
                None => None,
                Some(d) => {
                    let l = d.list().unwrap();
                    let note = l
                        .get(1)
                        .and_then(|s| s.str())
                        .ok_or_else(|| bad(&format!("record {id}: emend needs a note")))?
                        .to_string();
                    let sub = |tag: &str| -> Result<Expr> {
                        let part = l[2..]
                            .iter()
                            .find(|s| s.tagged(tag).is_some())
                            .ok_or_else(|| bad(&format!("record {id}: emend missing {tag}")))?;
                        expr_from_sexp(&part.tagged(tag).unwrap()[0], ring)
                    };
                    Some(Emend {
                        note,
                        lhs: sub("lhs")?,
                        rhs: sub("rhs")?,
                    })
                }
            };
            RecordBody::Equation { lhs, rhs, emend }
        }
        "support" => {
            let expr = one_expr("expr")?;
            let d = parts
                .get("span")
                .ok_or_else(|| bad(&format!("record {id}: missing span")))?;
            let span = d.list().unwrap()[1..]
                .iter()
                .map(|s| expr_from_sexp(s, ring))
                .collect::<Result<Vec<_>>>()?;
            if span.is_empty() {
                return Err(bad(&format!("record {id}: empty span")));
            }
            RecordBody::Support { expr, span }
        }
        _ => return Err(bad(&format!("record {id}: unknown kind {kind}"))),
    };
    Ok(Record {
        id,
        quote,
        body: kind_body,
    })
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordStatus {
    /// Holds exactly as quoted.
    Verbatim,
    /// Fails as quoted; the attached correction holds exactly.
    Emended,
    /// Fails as quoted and no correction settles it.
    Open,
}

#[derive(Debug, Clone)]
pub struct RecordReport {
    pub id: String,
    pub quote: String,
    pub status: RecordStatus,
    /// Difference of the two sides under the quoted reading, when nonzero.
    pub residual: Option<String>,
    /// The correction note, when one was applied.
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct CaseReport {
    pub case_id: String,
    pub title: String,
    pub records: Vec<RecordReport>,
}

impl CaseReport {
    /// True when no record is left open.
    pub fn settled(&self) -> bool {
        self.records.iter().all(|r| r.status != RecordStatus::Open)
    }

    pub fn count(&self, status: RecordStatus) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }
}

impl fmt::Display for CaseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "case {}: {} ({} records, {} verbatim, {} corrected, {} open)",
            self.case_id,
            self.title,
            self.records.len(),
            self.count(RecordStatus::Verbatim),
            self.count(RecordStatus::Emended),
            self.count(RecordStatus::Open),
        )?;
        for r in &self.records {
            let tag = match r.status {
                RecordStatus::Verbatim => "ok   ",
                RecordStatus::Emended => "fixed",
                RecordStatus::Open => "OPEN ",
            };
            writeln!(f, "  [{tag}] {}: {}", r.id, r.quote)?;
            if let Some(res) = &r.residual {
                writeln!(f, "          residual as quoted: {res}")?;
            }
            if let Some(note) = &r.note {
                writeln!(f, "          correction: {note}")?;
            }
        }
        Ok(())
    }
}

/// Subtract off span members to decide whether `value` lies in their span.
/// Each span element must have some coordinate with an invertible constant
/// coefficient; that coordinate fixes its multiplier. Returns the remainder,
/// which is zero exactly when the greedy elimination certifies membership.
pub fn support_remainder(value: &Element, span: &[Element]) -> Result<Element> {
    let mut rem = value.clone();
    for v in span {
        let pivot = v
            .coords()
            .iter()
            .position(|c| !c.is_zero() && c.is_constant());
        let p = pivot.ok_or_else(|| {
            Error::InvalidArgument("span element has no constant coordinate".into())
        })?;
        let c = &rem.coords()[p] * &v.coords()[p].inverse()?;
        rem = rem.try_sub(&v.scale(&c))?;
    }
    Ok(rem)
}

/// Check every record of a case exactly.
pub fn verify_case(spec: &CaseSpec) -> Result<CaseReport> {
    let prepared = spec.prepare()?;
    let env = ExprEnv {
        algebra: &prepared.algebra,
        names: prepared.names,
    };
    let mut records = Vec::new();
    for rec in &spec.records {
        let report = match &rec.body {
            RecordBody::Equation { lhs, rhs, emend } => {
                let diff = lhs.eval(&env)?.try_sub(&rhs.eval(&env)?)?;
                if diff.is_zero() {
                    RecordReport {
                        id: rec.id.clone(),
                        quote: rec.quote.clone(),
                        status: RecordStatus::Verbatim,
                        residual: None,
                        note: None,
                    }
                } else {
                    let residual = Some(diff.to_string());
                    match emend {
                        Some(em) => {
                            let fixed = em.lhs.eval(&env)?.try_sub(&em.rhs.eval(&env)?)?;
                            if fixed.is_zero() {
                                RecordReport {
                                    id: rec.id.clone(),
                                    quote: rec.quote.clone(),
                                    status: RecordStatus::Emended,
                                    residual,
                                    note: Some(em.note.clone()),
                                }
                            } else {
                                RecordReport {
                                    id: rec.id.clone(),
                                    quote: rec.quote.clone(),
                                    status: RecordStatus::Open,
                                    residual,
                                    note: Some(format!(
                                        "correction also fails, residual {fixed}"
                                    )),
                                }
                            }
                        }
                        None => RecordReport {
                            id: rec.id.clone(),
                            quote: rec.quote.clone(),
                            status: RecordStatus::Open,
                            residual,
                            note: None,
                        },
                    }
                }
            }
            RecordBody::Support { expr, span } => {
                let value = expr.eval(&env)?;
                let members = span
                    .iter()
                    .map(|s| s.eval(&env))
                    .collect::<Result<Vec<_>>>()?;
                let rem = support_remainder(&value, &members)?;
                if rem.is_zero() {
                    RecordReport {
                        id: rec.id.clone(),
                        quote: rec.quote.clone(),
                        status: RecordStatus::Verbatim,
                        residual: None,
                        note: None,
                    }
                } else {
                    RecordReport {
                        id: rec.id.clone(),
                        quote: rec.quote.clone(),
                        status: RecordStatus::Open,
                        residual: Some(rem.to_string()),
                        note: None,
                    }
                }
            }
        };
        records.push(report);
    }
    Ok(CaseReport {
        case_id: spec.id.clone(),
        title: spec.title.clone(),
        records,
    })
}

// ---------------------------------------------------------------------------
// Numeric spot checks
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct SpotCheck {
    pub case_id: String,
    pub prime: u64,
    pub assignments: usize,
    pub equations: usize,
    pub failures: Vec<String>,
}

impl SpotCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluate both sides of every equation record (in its settled reading) and
/// compare them coordinatewise under random nonzero parameter assignments
/// mod a small prime: 5 in characteristic 0, otherwise the field's own
/// characteristic. Over GF(2) the only all-nonzero assignment is tried once.
pub fn spot_check_case(spec: &CaseSpec, seeds: u64) -> Result<SpotCheck> {
    let ring = spec.ring()?;
    let prepared = spec.prepare()?;
    let env = ExprEnv {
        algebra: &prepared.algebra,
        names: prepared.names,
    };
    let p = if spec.characteristic == 0 {
        5
    } else {
        spec.characteristic
    };
    let assignments: Vec<Vec<u64>> = if p == 2 {
        vec![vec![1; spec.params.len()]]
    } else {
        (0..seeds)
            .map(|s| specialization_assignment(&ring, s, p, true))
            .collect()
    };
    let mut failures = Vec::new();
    let mut equations = 0;
    for rec in &spec.records {
        let RecordBody::Equation { lhs, rhs, emend } = &rec.body else {
            continue;
        };
        equations += 1;
        let (l, r) = match emend {
            Some(em) => (em.lhs.eval(&env)?, em.rhs.eval(&env)?),
            None => (lhs.eval(&env)?, rhs.eval(&env)?),
        };
        for (k, asg) in assignments.iter().enumerate() {
            let agree = l
                .coords()
                .iter()
                .zip(r.coords())
                .try_fold(true, |acc, (a, b)| -> Result<bool> {
                    Ok(acc && a.specialize(p, asg)? == b.specialize(p, asg)?)
                })?;
            if !agree {
                failures.push(format!(
                    "record {} disagrees mod {p} at assignment {k}",
                    rec.id
                ));
            }
        }
    }
    Ok(SpotCheck {
        case_id: spec.id.clone(),
        prime: p,
        assignments: assignments.len(),
        equations,
        failures,
    })
}

// ---------------------------------------------------------------------------
// Discrepancy summary
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct Discrepancy {
    pub case_id: String,
    pub record_id: String,
    pub quote: String,
    pub residual: String,
    pub note: Option<String>,
    pub resolved: bool,
}

#[derive(Debug, Clone)]
pub struct DiscrepancyReport {
    pub items: Vec<Discrepancy>,
}

/// Collect every record that failed as quoted, across a batch of reports.
pub fn discrepancy_report(reports: &[CaseReport]) -> DiscrepancyReport {
    let mut items = Vec::new();
    for cr in reports {
        for r in &cr.records {
            if let Some(residual) = &r.residual {
                items.push(Discrepancy {
                    case_id: cr.case_id.clone(),
                    record_id: r.id.clone(),
                    quote: r.quote.clone(),
                    residual: residual.clone(),
                    note: r.note.clone(),
                    resolved: r.status == RecordStatus::Emended,
                });
            }
        }
    }
    DiscrepancyReport { items }
}

impl fmt::Display for DiscrepancyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let resolved = self.items.iter().filter(|d| d.resolved).count();
        writeln!(
            f,
            "{} quoted identities fail exactly as written; {} settled by a correction",
            self.items.len(),
            resolved
        )?;
        for d in &self.items {
            writeln!(f, "- {} / {}: {}", d.case_id, d.record_id, d.quote)?;
            writeln!(f, "  residual as quoted: {}", d.residual)?;
            match (&d.note, d.resolved) {
                (Some(n), true) => writeln!(f, "  correction: {n}")?,
                (Some(n), false) => writeln!(f, "  unresolved: {n}")?,
                (None, _) => writeln!(f, "  unresolved")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_case() -> CaseSpec {
        CaseSpec {
            id: "demo".into(),
            title: "three-dimensional composition checks".into(),
            characteristic: 3,
            params: vec!["z".into(), "a0".into(), "a1".into(), "a2".into()],
            algebra: vec!["b12".into()],
            gens: vec![("a".into(), vec!["a0".into(), "a1".into(), "a2".into()])],
            lets: vec![("x0".into(), {
                let ring = Ring::new(3, &["z", "a0", "a1", "a2"]).unwrap();
                Expr::smul(
                    Scalar::param(&ring, "z").unwrap(),
                    Expr::basis("x"),
                )
            })],
            records: vec![
                Record {
                    id: "r1".into(),
                    quote: "x*y = 1".into(),
                    body: RecordBody::Equation {
                        lhs: Expr::mul(Expr::basis("x"), Expr::basis("y")),
                        rhs: Expr::Unit,
                        emend: None,
                    },
                },
                Record {
                    id: "r2".into(),
                    quote: "y*x = 1".into(),
                    body: RecordBody::Equation {
                        lhs: Expr::mul(Expr::basis("y"), Expr::basis("x")),
                        rhs: Expr::Unit,
                        emend: Some(Emend {
                            note: "the product is skew, so the sign flips".into(),
                            lhs: Expr::mul(Expr::basis("y"), Expr::basis("x")),
                            rhs: Expr::neg(Expr::Unit),
                        }),
                    },
                },
                Record {
                    id: "r3".into(),
                    quote: "a*x0 lies in the span of 1 and x".into(),
                    body: RecordBody::Support {
                        expr: Expr::mul(Expr::name("a"), Expr::name("x0")),
                        span: vec![Expr::Unit, Expr::basis("x")],
                    },
                },
            ],
            notes: vec!["a demonstration case used only by tests".into()],
        }
    }

    #[test]
    fn verifies_and_classifies_records() {
        let spec = tiny_case();
        let report = verify_case(&spec).unwrap();
        assert!(report.settled(), "{report}");
        assert_eq!(report.records[0].status, RecordStatus::Verbatim);
        assert_eq!(report.records[1].status, RecordStatus::Emended);
        assert_eq!(report.records[1].residual.as_deref(), Some("1"));
        assert_eq!(report.records[2].status, RecordStatus::Verbatim);
        let disc = discrepancy_report(&[report]);
        assert_eq!(disc.items.len(), 1);
        assert!(disc.items[0].resolved);
    }

    #[test]
    fn round_trips_through_the_text_form() {
        let spec = tiny_case();
        let text = serialize_case(&spec).unwrap();
        let back = parse_case(&text).unwrap();
        assert_eq!(back, spec);
        assert_eq!(serialize_case(&back).unwrap(), text);
    }

    #[test]
    fn spot_checks_catch_a_wrong_equation() {
        let mut spec = tiny_case();
        let ok = spot_check_case(&spec, 10).unwrap();
        assert!(ok.passed());
        assert_eq!(ok.prime, 3);
        assert_eq!(ok.equations, 2);
        spec.records.push(Record {
            id: "r4".into(),
            quote: "x = y".into(),
            body: RecordBody::Equation {
                lhs: Expr::basis("x"),
                rhs: Expr::basis("y"),
                emend: None,
            },
        });
        let bad = spot_check_case(&spec, 10).unwrap();
        assert!(!bad.passed());
        assert!(bad.failures.iter().all(|f| f.contains("record r4")));
    }

    #[test]
    fn rejects_malformed_cases() {
        assert!(parse_case("(case x (title \"t\"))").is_err());
        assert!(parse_case("(algebra b12)").is_err());
        let spec = CaseSpec {
            algebra: vec!["no-such-algebra".into()],
            ..tiny_case()
        };
        assert!(spec.prepare().is_err());
        let dup = CaseSpec {
            lets: vec![
                ("w".into(), Expr::Unit),
                ("w".into(), Expr::Unit),
            ],
            ..tiny_case()
        };
        assert!(dup.prepare().is_err());
    }
}
