//! The shipped verification cases: one builder per algebra family, each
//! spelling out the recorded coefficient-extraction identities for a generic
//! element with named coordinates. Corrections attached to records that fail
//! as quoted are re-checked exactly by `verify_case`; nothing here is taken
//! on faith.

use super::{CaseSpec, Emend, Record, RecordBody};
use crate::expr::Expr;
use crate::ring::Ring;
use crate::scalar::Scalar;
use crate::Result;

fn lit(ring: &Ring, text: &str) -> Scalar {
    Scalar::parse(ring, text).expect("scalar literal in a case builder")
}

fn nm(x: &str) -> Expr {
    Expr::name(x)
}

fn bs(x: &str) -> Expr {
    Expr::basis(x)
}

fn mul(a: Expr, b: Expr) -> Expr {
    Expr::mul(a, b)
}

fn circ(a: Expr, b: Expr) -> Expr {
    Expr::circ(a, b)
}

fn add(terms: Vec<Expr>) -> Expr {
    Expr::add(terms)
}

fn sub(a: Expr, b: Expr) -> Expr {
    Expr::sub(a, b)
}

fn neg(a: Expr) -> Expr {
    Expr::neg(a)
}

fn im(k: i64, a: Expr) -> Expr {
    Expr::imul(k, a)
}

fn ch(factors: Vec<Expr>) -> Expr {
    Expr::chain(factors)
}

fn sm(ring: &Ring, atom: &str, a: Expr) -> Expr {
    Expr::smul(lit(ring, atom), a)
}

fn eq(id: &str, quote: &str, lhs: Expr, rhs: Expr) -> Record {
    Record {
        id: id.to_string(),
        quote: quote.to_string(),
        body: RecordBody::Equation {
            lhs,
            rhs,
            emend: None,
        },
    }
}

fn eq_fix(
    id: &str,
    quote: &str,
    lhs: Expr,
    rhs: Expr,
    note: &str,
    fixed_lhs: Expr,
    fixed_rhs: Expr,
) -> Record {
    Record {
        id: id.to_string(),
        quote: quote.to_string(),
        body: RecordBody::Equation {
            lhs,
            rhs,
            emend: Some(Emend {
                note: note.to_string(),
                lhs: fixed_lhs,
                rhs: fixed_rhs,
            }),
        },
    }
}

fn sup(id: &str, quote: &str, expr: Expr, span: Vec<Expr>) -> Record {
    Record {
        id: id.to_string(),
        quote: quote.to_string(),
        body: RecordBody::Support { expr, span },
    }
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn ring_for(characteristic: u64, params: &[String]) -> Result<Ring> {
    let refs: Vec<&str> = params.iter().map(|s| s.as_str()).collect();
    Ring::new(characteristic, &refs)
}

// ---------------------------------------------------------------------------
// Split 2x2 matrices with an adjoined central odd root
// ---------------------------------------------------------------------------

fn assoc_matrix_u() -> Result<CaseSpec> {
    let params = strings(&[
        "z", "l", "a11", "a12", "a21", "a22", "b11", "b12", "b21", "b22",
    ]);
    let ring = ring_for(0, &params)?;
    let mut lets = Vec::new();
    for ij in ["11", "12", "21", "22"] {
        lets.push((format!("f{ij}"), sm(&ring, "z", bs(&format!("e{ij}")))));
    }
    lets.push(("ub".into(), add(vec![bs("e11u"), bs("e22u")])));
    lets.push(("v".into(), sm(&ring, "z", nm("ub"))));
    let mut records = Vec::new();
    for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let trace = add(vec![
            ch(vec![nm(&format!("f1{i}")), nm("a"), nm(&format!("f{j}1"))]),
            ch(vec![nm(&format!("f2{i}")), nm("a"), nm(&format!("f{j}2"))]),
        ]);
        records.push(eq(
            &format!("t{i}{j}"),
            &format!(
                "sum_t f_t{i}*a*f_{j}t = z^2*(alpha_{i}{j} + beta_{i}{j}*u)"
            ),
            add(vec![
                sm(&ring, &format!("z^2*a{i}{j}"), Expr::Unit),
                sm(&ring, &format!("z^2*b{i}{j}"), nm("ub")),
            ]),
            trace,
        ));
    }
    for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        records.push(eq(
            &format!("v{i}{j}"),
            &format!(
                "z^2*(alpha_{i}{j} + beta_{i}{j}*u)*v = z^3*alpha_{i}{j}*u + l*z^3*beta_{i}{j}"
            ),
            mul(
                add(vec![
                    sm(&ring, &format!("z^2*a{i}{j}"), Expr::Unit),
                    sm(&ring, &format!("z^2*b{i}{j}"), nm("ub")),
                ]),
                nm("v"),
            ),
            add(vec![
                sm(&ring, &format!("z^3*a{i}{j}"), nm("ub")),
                sm(&ring, &format!("l*z^3*b{i}{j}"), Expr::Unit),
            ]),
        ));
    }
    for (i, j) in [(1, 1), (2, 1)] {
        records.push(sup(
            &format!("k{i}{j}"),
            &format!("sum_t f_t{i}*a*f_{j}t lies in K = k*1 + k*u"),
            add(vec![
                ch(vec![nm(&format!("f1{i}")), nm("a"), nm(&format!("f{j}1"))]),
                ch(vec![nm(&format!("f2{i}")), nm("a"), nm(&format!("f{j}2"))]),
            ]),
            vec![Expr::Unit, nm("ub")],
        ));
    }
    Ok(CaseSpec {
        id: "assoc-matrix-u".into(),
        title: "coefficient recovery in 2x2 matrices over k[u], u odd with u^2 = l".into(),
        characteristic: 0,
        params,
        algebra: strings(&["matrix-ku", "2"]),
        gens: vec![(
            "a".into(),
            strings(&["a11", "a12", "a21", "a22", "b11", "b12", "b21", "b22"]),
        )],
        lets,
        records,
        notes: vec![
            "the generic element is a = sum alpha_ij e_ij + sum beta_ij e_ij u; \
             f_ij = z e_ij, v = z u"
                .into(),
        ],
    })
}

// ---------------------------------------------------------------------------
// Characteristic-2 octonion cases
// ---------------------------------------------------------------------------

fn oct_f_lets(ring: &Ring, lets: &mut Vec<(String, Expr)>) {
    for i in 1..=7 {
        lets.push((format!("f{i}"), sm(ring, "z", bs(&format!("e{i}")))));
    }
}

/// `nu*z*alpha_1 = (a*z - a o f_1)*(f_1 - z)` and the six follow-ups, with
/// `mu != 0`. The quoted middle factor still contains `alpha_0*z`, which
/// pollutes every product; the correction subtracts it.
fn alt_oct() -> Result<CaseSpec> {
    let mut params = strings(&["z", "m", "b", "g"]);
    for i in 0..8 {
        params.push(format!("a{i}"));
    }
    let ring = ring_for(2, &params)?;
    let mut lets = Vec::new();
    oct_f_lets(&ring, &mut lets);
    lets.push((
        "mid".into(),
        sub(sm(&ring, "z", nm("a")), circ(nm("a"), nm("f1"))),
    ));
    lets.push(("w".into(), sub(nm("f1"), sm(&ring, "z", Expr::Unit))));
    lets.push((
        "midf".into(),
        sub(nm("mid"), sm(&ring, "z*a0", Expr::Unit)),
    ));
    let note = "the factor a*z - a o f_1 still contains alpha_0*z; subtracting it leaves \
                z*alpha_1*e_1 and the product becomes exact";
    let mut records = vec![eq_fix(
        "r1",
        "nu*z*alpha_1 = (a*z - a o f_1)*(f_1 - z)",
        sm(&ring, "m*z^2*a1", Expr::Unit),
        mul(nm("mid"), nm("w")),
        note,
        sm(&ring, "m*z^2*a1", Expr::Unit),
        mul(nm("midf"), nm("w")),
    )];
    let followups = [
        ("r2", "a2", "m*b*z^3", "f3", "z*nu*lambda*alpha_2", "lambda"),
        ("r3", "a3", "m*b*z^3", "f2", "z*nu*lambda*alpha_3", "lambda"),
        ("r4", "a4", "m*g*z^3", "f5", "z*nu*delta*alpha_4", "delta"),
        ("r5", "a5", "m*g*z^3", "f4", "z*nu*delta*alpha_5", "delta"),
        ("r6", "a6", "m*b*g*z^3", "f7", "nu*lambda*delta*alpha_6", "lambda*delta"),
        ("r7", "a7", "m*b*g*z^3", "f6", "nu*lambda*delta*alpha_7", "lambda*delta"),
    ];
    for (id, coeff, scale, fk, lhs_text, _) in followups {
        let quote = format!(
            "{lhs_text} = nu*(a o {f})*z - (a*z - a o f_1)*(f_1 - z)*{f}",
            f = fk.replace('f', "f_")
        );
        let lhs = sm(&ring, &format!("{scale}*{coeff}"), Expr::Unit);
        let rhs = |middle: &str| {
            sub(
                sm(&ring, "m*z^2", circ(nm("a"), nm(fk))),
                mul(mul(nm(middle), nm("w")), nm(fk)),
            )
        };
        records.push(eq_fix(
            id,
            &quote,
            lhs.clone(),
            rhs("mid"),
            note,
            lhs,
            rhs("midf"),
        ));
    }
    Ok(CaseSpec {
        id: "alt-oct".into(),
        title: "graded octonion coefficients, nonzero doubling parameter mu".into(),
        characteristic: 2,
        params,
        algebra: strings(&["octonion"]),
        gens: vec![(
            "a".into(),
            strings(&["a0", "a1", "a2", "a3", "a4", "a5", "a6", "a7"]),
        )],
        lets,
        records,
        notes: vec![
            "nu = m*z, lambda = b*z, delta = g*z; f_i = z*e_i; a = sum alpha_i e_i".into(),
        ],
    })
}

/// The `mu = 0` branch: an `alpha_0` extraction through the odd part, then
/// `alpha_1` and the remaining coefficients.
fn alt_oct_mu0() -> Result<CaseSpec> {
    let mut params = strings(&["z", "b", "g"]);
    for i in 0..8 {
        params.push(format!("a{i}"));
    }
    let ring = ring_for(2, &params)?;
    let mut lets = Vec::new();
    oct_f_lets(&ring, &mut lets);
    lets.push((
        "mid".into(),
        sub(sm(&ring, "z", nm("a")), circ(nm("a"), nm("f1"))),
    ));
    lets.push((
        "q".into(),
        sub(
            sub(
                sm(&ring, "b*g^2*z^5", nm("a")),
                sm(&ring, "b*g^2*z^4", circ(nm("a"), nm("f1"))),
            ),
            sm(&ring, "b*g^2*z^5*a0", Expr::Unit),
        ),
    ));
    let b1rhs = mul(
        circ(
            mul(mul(sub(nm("f4"), nm("f5")), nm("mid")), nm("f4")),
            nm("f6"),
        ),
        nm("f6"),
    );
    let mut records = vec![
        eq(
            "b1",
            "lambda*delta^2*z^2*alpha_0 = ((((f_4 - f_5)*(a*z - a o f_1))*f_4) o f_6)*f_6",
            sm(&ring, "b*g^2*z^5*a0", Expr::Unit),
            b1rhs,
        ),
        eq_fix(
            "b2",
            "lambda^2*delta^4*alpha_1*z = ((lambda*delta^2*a*z^2 - lambda*delta^2*z*(a o f_1) \
             - lambda*delta^2*alpha_0*z^2) o f_6)*f_6",
            sm(&ring, "b^2*g^4*z^7*a1", Expr::Unit),
            mul(circ(nm("q"), nm("f6")), nm("f6")),
            "the quoted coefficient lambda^2*delta^4*z does not match the product's degree; \
             lambda^2*delta^3*z^2 does",
            sm(&ring, "b^2*g^3*z^7*a1", Expr::Unit),
            mul(circ(nm("q"), nm("f6")), nm("f6")),
        ),
    ];
    let tail = [
        ("b3", "a2", "b^3*g^4*z^8", "f3", "b^2*g^4*z^7", false),
        ("b4", "a3", "b^3*g^4*z^8", "f2", "b^2*g^2*z^5", true),
        ("b5", "a4", "b^2*g^5*z^8", "f5", "b^2*g^4*z^7", false),
        ("b6", "a5", "b^2*g^5*z^8", "f4", "b^2*g^4*z^7", false),
        ("b7", "a6", "b^3*g^5*z^8", "f7", "b^2*g^4*z^7", false),
        ("b8", "a7", "b^3*g^5*z^8", "f6", "b^2*g^4*z^7", false),
    ];
    let quotes = [
        "lambda^3*delta^4*alpha_2*z = lambda^2*delta^4*z*(a o f_3) - lambda^2*delta^4*z*alpha_1*f_3",
        "lambda^3*delta^4*z*alpha_3 = lambda^2*delta^2*z*(a o f_2) - lambda^2*delta^4*z*alpha_1*f_2",
        "lambda^2*delta^5*alpha_4*z = lambda^2*delta^4*z*(a o f_5) - lambda^2*delta^4*z*alpha_1*f_5",
        "lambda^2*delta^5*alpha_5*z = lambda^2*delta^4*z*(a o f_4) - lambda^2*delta^4*z*alpha_1*f_4",
        "lambda^3*delta^5*alpha_6 = lambda^2*delta^4*z*(a o f_7) - lambda^2*delta^4*z*alpha_1*f_7",
        "lambda^3*delta^5*alpha_7 = lambda^2*delta^4*z*(a o f_6) - lambda^2*delta^4*z*alpha_1*f_6",
    ];
    for ((id, coeff, lhs_scale, fk, first_scale, fix), quote) in tail.into_iter().zip(quotes) {
        let lhs = sm(&ring, &format!("{lhs_scale}*{coeff}"), Expr::Unit);
        let rhs = |scale: &str| {
            sub(
                sm(&ring, scale, circ(nm("a"), nm(fk))),
                sm(&ring, "b^2*g^4*z^7*a1", nm(fk)),
            )
        };
        if fix {
            records.push(eq_fix(
                id,
                quote,
                lhs.clone(),
                rhs(first_scale),
                "the quoted first coefficient lambda^2*delta^2*z breaks the degree pattern; \
                 lambda^2*delta^4*z restores it",
                lhs,
                rhs("b^2*g^4*z^7"),
            ));
        } else {
            records.push(eq(id, quote, lhs, rhs(first_scale)));
        }
    }
    Ok(CaseSpec {
        id: "alt-oct-mu0".into(),
        title: "graded octonion coefficients, vanishing doubling parameter mu".into(),
        characteristic: 2,
        params,
        algebra: strings(&["octonion-mu0"]),
        gens: vec![(
            "a".into(),
            strings(&["a0", "a1", "a2", "a3", "a4", "a5", "a6", "a7"]),
        )],
        lets,
        records,
        notes: vec!["lambda = b*z, delta = g*z; f_i = z*e_i; a = sum alpha_i e_i".into()],
    })
}

/// The sixteen-dimensional extension by a central odd root `u`, `mu != 0`:
/// the same seven extractions now recover `alpha_i + beta_i*u`.
fn alt_oct_u() -> Result<CaseSpec> {
    let mut params = strings(&["z", "m", "b", "g", "q"]);
    for i in 0..8 {
        params.push(format!("a{i}"));
    }
    for i in 0..8 {
        params.push(format!("b{i}"));
    }
    let ring = ring_for(2, &params)?;
    let mut lets = Vec::new();
    oct_f_lets(&ring, &mut lets);
    lets.push(("ub".into(), bs("1u")));
    lets.push((
        "mid".into(),
        sub(sm(&ring, "z", nm("a")), circ(nm("a"), nm("f1"))),
    ));
    lets.push(("w".into(), sub(nm("f1"), sm(&ring, "z", Expr::Unit))));
    lets.push((
        "midf".into(),
        sub(
            sub(nm("mid"), sm(&ring, "z*a0", Expr::Unit)),
            sm(&ring, "z*b0", nm("ub")),
        ),
    ));
    let note = "the factor a*z - a o f_1 still contains (alpha_0 + beta_0*u)*z; \
                subtracting it makes the product exact";
    let pair = |s: &str, i: usize| {
        add(vec![
            sm(&ring, &format!("{s}*a{i}"), Expr::Unit),
            sm(&ring, &format!("{s}*b{i}"), nm("ub")),
        ])
    };
    let mut records = vec![eq_fix(
        "s1",
        "nu*z*(alpha_1 + beta_1*u) = (a*z - a o f_1)*(f_1 - z)",
        pair("m*z^2", 1),
        mul(nm("mid"), nm("w")),
        note,
        pair("m*z^2", 1),
        mul(nm("midf"), nm("w")),
    )];
    let followups = [
        ("s2", 2, "m*b*z^3", "f3", "z*nu*lambda*(alpha_2 + beta_2*u)"),
        ("s3", 3, "m*b*z^3", "f2", "z*nu*lambda*(alpha_3 + beta_3*u)"),
        ("s4", 4, "m*g*z^3", "f5", "z*nu*delta*(alpha_4 + beta_4*u)"),
        ("s5", 5, "m*g*z^3", "f4", "z*nu*delta*(alpha_5 + beta_5*u)"),
        ("s6", 6, "m*b*g*z^3", "f7", "nu*lambda*delta*(alpha_6 + beta_6*u)"),
        ("s7", 7, "m*b*g*z^3", "f6", "nu*lambda*delta*(alpha_7 + beta_7*u)"),
    ];
    for (id, i, scale, fk, lhs_text) in followups {
        let quote = format!(
            "{lhs_text} = nu*(a o {f})*z - (a*z - a o f_1)*(f_1 - z)*{f}",
            f = fk.replace('f', "f_")
        );
        let lhs = pair(scale, i);
        let rhs = |middle: &str| {
            sub(
                sm(&ring, "m*z^2", circ(nm("a"), nm(fk))),
                mul(mul(nm(middle), nm("w")), nm(fk)),
            )
        };
        records.push(eq_fix(id, &quote, lhs.clone(), rhs("mid"), note, lhs, rhs("midf")));
    }
    Ok(CaseSpec {
        id: "alt-oct-u".into(),
        title: "octonions with an adjoined central odd root, nonzero mu".into(),
        characteristic: 2,
        params,
        algebra: strings(&["octonion-u"]),
        gens: vec![(
            "a".into(),
            strings(&[
                "a0", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "b0", "b1", "b2", "b3",
                "b4", "b5", "b6", "b7",
            ]),
        )],
        lets,
        records,
        notes: vec![
            "nu = m*z, lambda = b*z, delta = g*z, u^2 = q; a = sum alpha_i e_i + sum beta_i e_i u"
                .into(),
        ],
    })
}

/// The `mu = 0` branch of the extension: the quoted tails drop the `beta_i*u`
/// halves that the products actually produce.
fn alt_oct_u_mu0() -> Result<CaseSpec> {
    let mut params = strings(&["z", "b", "g", "q"]);
    for i in 0..8 {
        params.push(format!("a{i}"));
    }
    for i in 0..8 {
        params.push(format!("b{i}"));
    }
    let ring = ring_for(2, &params)?;
    let mut lets = Vec::new();
    oct_f_lets(&ring, &mut lets);
    lets.push(("ub".into(), bs("1u")));
    lets.push((
        "mid".into(),
        sub(sm(&ring, "z", nm("a")), circ(nm("a"), nm("f1"))),
    ));
    lets.push((
        "el1".into(),
        add(vec![
            sm(&ring, "a1", Expr::Unit),
            sm(&ring, "b1", nm("ub")),
        ]),
    ));
    lets.push((
        "q0".into(),
        sub(
            sub(
                sm(&ring, "b*g^2*z^5", nm("a")),
                sm(&ring, "b*g^2*z^4", circ(nm("a"), nm("f1"))),
            ),
            add(vec![
                sm(&ring, "b*g^2*z^5*a0", Expr::Unit),
                sm(&ring, "b*g^2*z^5*b0", nm("ub")),
            ]),
        ),
    ));
    let pair = |s: &str, i: usize| {
        add(vec![
            sm(&ring, &format!("{s}*a{i}"), Expr::Unit),
            sm(&ring, &format!("{s}*b{i}"), nm("ub")),
        ])
    };
    let b1rhs = mul(
        circ(
            mul(mul(sub(nm("f4"), nm("f5")), nm("mid")), nm("f4")),
            nm("f6"),
        ),
        nm("f6"),
    );
    let mut records = vec![
        eq(
            "t1",
            "lambda*delta^2*z^2*(alpha_0 + beta_0*u) = \
             ((((f_4 - f_5)*(a*z - a o f_1))*f_4) o f_6)*f_6",
            pair("b*g^2*z^5", 0),
            b1rhs,
        ),
        eq_fix(
            "t2",
            "lambda^2*delta^4*(alpha_1 + beta_1*u)*z = ((lambda*delta^2*a*z^2 - \
             lambda*delta^2*z*(a o f_1) - lambda*delta^2*(alpha_0 + beta_0*u)*z^2) o f_6)*f_6",
            pair("b^2*g^4*z^7", 1),
            mul(circ(nm("q0"), nm("f6")), nm("f6")),
            "the quoted coefficient lambda^2*delta^4*z does not match the product's degree; \
             lambda^2*delta^3*z^2 does",
            pair("b^2*g^3*z^7", 1),
            mul(circ(nm("q0"), nm("f6")), nm("f6")),
        ),
    ];
    let tail = [
        ("t3", 2, "b^3*g^4*z^8", "f3", "b^2*g^4*z^7", false),
        ("t4", 3, "b^3*g^4*z^8", "f2", "b^2*g^2*z^5", true),
        ("t5", 4, "b^2*g^5*z^8", "f5", "b^2*g^4*z^7", false),
        ("t6", 5, "b^2*g^5*z^8", "f4", "b^2*g^4*z^7", false),
        ("t7", 6, "b^3*g^5*z^8", "f7", "b^2*g^4*z^7", false),
        ("t8", 7, "b^3*g^5*z^8", "f6", "b^2*g^4*z^7", false),
    ];
    let quotes = [
        "lambda^3*delta^4*alpha_2*z = lambda^2*delta^4*z*(a o f_3) - \
         lambda^2*delta^4*z*(alpha_1 + beta_1*u)*f_3",
        "lambda^3*delta^4*z*alpha_3 = lambda^2*delta^2*z*(a o f_2) - \
         lambda^2*delta^4*z*(alpha_1 + beta_1*u)*f_2",
        "lambda^2*delta^5*alpha_4*z = lambda^2*delta^4*z*(a o f_5) - \
         lambda^2*delta^4*z*(alpha_1 + beta_1*u)*f_5",
        "lambda^2*delta^5*alpha_5*z = lambda^2*delta^4*z*(a o f_4) - \
         lambda^2*delta^4*z*(alpha_1 + beta_1*u)*f_4",
        "lambda^3*delta^5*alpha_6 = lambda^2*delta^4*z*(a o f_7) - \
         lambda^2*delta^4*z*(alpha_1 + beta_1*u)*f_7",
        "lambda^3*delta^5*alpha_7 = lambda^2*delta^4*z*(a o f_6) - \
         lambda^2*delta^4*z*(alpha_1 + beta_1*u)*f_6",
    ];
    for ((id, i, lhs_scale, fk, first_scale, fix_scale), quote) in tail.into_iter().zip(quotes) {
        let lhs = sm(&ring, &format!("{lhs_scale}*a{i}"), Expr::Unit);
        let rhs = |scale: &str| {
            sub(
                sm(&ring, scale, circ(nm("a"), nm(fk))),
                sm(&ring, "b^2*g^4*z^7", mul(nm("el1"), nm(fk))),
            )
        };
        let note = if fix_scale {
            "the quoted first coefficient breaks the degree pattern and the left side \
             drops the odd half; the corrected reading recovers alpha + beta*u"
        } else {
            "the left side drops the odd half beta*u that the products produce; \
             the corrected reading recovers alpha + beta*u"
        };
        records.push(eq_fix(
            id,
            quote,
            lhs,
            rhs(first_scale),
            note,
            pair(lhs_scale, i),
            rhs("b^2*g^4*z^7"),
        ));
    }
    Ok(CaseSpec {
        id: "alt-oct-u-mu0".into(),
        title: "octonions with an adjoined central odd root, vanishing mu".into(),
        characteristic: 2,
        params,
        algebra: strings(&["octonion-u-mu0"]),
        gens: vec![(
            "a".into(),
            strings(&[
                "a0", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "b0", "b1", "b2", "b3",
                "b4", "b5", "b6", "b7",
            ]),
        )],
        lets,
        records,
        notes: vec![
            "lambda = b*z, delta = g*z, u^2 = q; a = sum alpha_i e_i + sum beta_i e_i u".into(),
        ],
    })
}

// ---------------------------------------------------------------------------
// Characteristic-3 alternative cases
// ---------------------------------------------------------------------------

fn alt_b12() -> Result<CaseSpec> {
    let params = strings(&["z", "al", "be", "ga"]);
    let ring = ring_for(3, &params)?;
    let lets = vec![
        ("x0".to_string(), sm(&ring, "z", bs("x"))),
        ("y0".to_string(), sm(&ring, "z", bs("y"))),
    ];
    let records = vec![
        eq(
            "cx",
            "((a*y_0)*y_0)*x_0 = -alpha*z^3",
            ch(vec![nm("a"), nm("y0"), nm("y0"), nm("x0")]),
            neg(sm(&ring, "al*z^3", Expr::Unit)),
        ),
        eq(
            "cy",
            "((a*x_0)*x_0)*y_0 = -beta*z^3",
            ch(vec![nm("a"), nm("x0"), nm("x0"), nm("y0")]),
            neg(sm(&ring, "be*z^3", Expr::Unit)),
        ),
        eq(
            "c1",
            "(((a*y_0)*x_0)*x_0)*y_0 = -gamma*z^4",
            ch(vec![nm("a"), nm("y0"), nm("x0"), nm("x0"), nm("y0")]),
            neg(sm(&ring, "ga*z^4", Expr::Unit)),
        ),
    ];
    Ok(CaseSpec {
        id: "alt-b12".into(),
        title: "the three-dimensional characteristic-3 family: all coefficients".into(),
        characteristic: 3,
        params,
        algebra: strings(&["b12"]),
        gens: vec![("a".into(), strings(&["ga", "al", "be"]))],
        lets,
        records,
        notes: vec!["a = alpha*x + beta*y + gamma*1; x_0 = z*x, y_0 = z*y".into()],
    })
}

fn alt_b42() -> Result<CaseSpec> {
    let params = strings(&["z", "a11", "a12", "a21", "a22", "b1", "b2"]);
    let ring = ring_for(3, &params)?;
    let mut lets = Vec::new();
    for ij in ["11", "12", "21", "22"] {
        lets.push((format!("f{ij}"), sm(&ring, "z", bs(&format!("e{ij}")))));
    }
    lets.push(("n1".into(), sm(&ring, "z", bs("m1"))));
    lets.push(("n2".into(), sm(&ring, "z", bs("m2"))));
    let t1 = mul(ch(vec![nm("a"), nm("n1"), nm("n1")]), nm("f12"));
    let s1 = mul(ch(vec![nm("a"), nm("n1"), nm("n1")]), nm("f21"));
    let t2 = mul(ch(vec![nm("a"), nm("n2"), nm("n2")]), nm("f21"));
    let s2 = mul(ch(vec![nm("a"), nm("n2"), nm("n2")]), nm("f12"));
    let u1 = mul(mul(nm("f22"), mul(nm("f12"), nm("a"))), nm("n2"));
    let u2 = mul(mul(nm("f11"), mul(nm("f21"), nm("a"))), nm("n1"));
    let records = vec![
        eq(
            "q11",
            "(f_12*(((a*n_1)*n_1)*f_12))*f_21 + z^2*((a*n_1)*n_1)*f_12 = -alpha_11*z^5",
            add(vec![
                mul(mul(nm("f12"), t1.clone()), nm("f21")),
                sm(&ring, "z^2", t1.clone()),
            ]),
            neg(sm(&ring, "a11*z^5", Expr::Unit)),
        ),
        eq(
            "q12",
            "f_12*(((a*n_1)*n_1)*f_21) + (((a*n_1)*n_1)*f_21)*f_12 = -alpha_12*z^4",
            add(vec![mul(nm("f12"), s1.clone()), mul(s1, nm("f12"))]),
            neg(sm(&ring, "a12*z^4", Expr::Unit)),
        ),
        eq(
            "q21",
            "f_21*(((a*n_2)*n_2)*f_12) + (((a*n_2)*n_2)*f_12)*f_21 = alpha_21*z^4",
            add(vec![mul(nm("f21"), s2.clone()), mul(s2, nm("f21"))]),
            sm(&ring, "a21*z^4", Expr::Unit),
        ),
        eq(
            "q22",
            "(f_21*(((a*n_2)*n_2)*f_21))*f_12 + z^2*((a*n_2)*n_2)*f_21 = alpha_22*z^5",
            add(vec![
                mul(mul(nm("f21"), t2.clone()), nm("f12")),
                sm(&ring, "z^2", t2),
            ]),
            sm(&ring, "a22*z^5", Expr::Unit),
        ),
        eq(
            "qm1",
            "((f_22*(f_12*a))*n_2)*f_21 + f_21*((f_22*(f_12*a))*n_2) = beta_1*z^4",
            add(vec![mul(u1.clone(), nm("f21")), mul(nm("f21"), u1)]),
            sm(&ring, "b1*z^4", Expr::Unit),
        ),
        eq(
            "qm2",
            "((f_11*(f_21*a))*n_1)*f_12 + f_12*((f_11*(f_21*a))*n_1) = -beta_2*z^4",
            add(vec![mul(u2.clone(), nm("f12")), mul(nm("f12"), u2)]),
            neg(sm(&ring, "b2*z^4", Expr::Unit)),
        ),
    ];
    Ok(CaseSpec {
        id: "alt-b42".into(),
        title: "the six-dimensional characteristic-3 family: all coefficients".into(),
        characteristic: 3,
        params,
        algebra: strings(&["b42"]),
        gens: vec![(
            "a".into(),
            strings(&["a11", "a12", "a21", "a22", "b1", "b2"]),
        )],
        lets,
        records,
        notes: vec![
            "a = sum alpha_ij e_ij + beta_1 m_1 + beta_2 m_2; f_ij = z e_ij, n_i = z m_i".into(),
        ],
    })
}

// ---------------------------------------------------------------------------
// Jordan cases
// ---------------------------------------------------------------------------

/// Records shared by the matrix families: the five displayed steps at
/// concrete indices. `pm(i, k)` carries the sign resolving the quoted
/// `e_ii +- e_kk` at that instance.
fn jordan_matrix_records(
    ring: &Ring,
    records: &mut Vec<Record>,
    id_prefix: &str,
    k: usize,
    i2: usize,
    sign2: i64,
    l: usize,
    sign3: i64,
    i5: usize,
    sign5: i64,
) {
    let fkk = format!("f{k}{k}");
    let e = |p: usize, q: usize| bs(&format!("e{p}{q}"));
    let pm = |i: usize, k: usize, sign: i64| {
        if sign >= 0 {
            add(vec![e(i, i), e(k, k)])
        } else {
            sub(e(i, i), e(k, k))
        }
    };
    // Step 1: the Peirce projection onto e_kk, quoted without the z that
    // makes the two terms the same degree.
    records.push(eq_fix(
        &format!("{id_prefix}p{k}"),
        &format!("2*(a o f_{k}{k}) o f_{k}{k} - a o f_{k}{k} = z^2*alpha_{k}{k}*e_{k}{k}"),
        sub(
            im(2, mul(mul(nm("a"), nm(&fkk)), nm(&fkk))),
            mul(nm("a"), nm(&fkk)),
        ),
        sm(ring, &format!("z^2*a{k}{k}"), e(k, k)),
        "the subtracted term needs the factor z to match degrees",
        sub(
            im(2, mul(mul(nm("a"), nm(&fkk)), nm(&fkk))),
            sm(ring, "z", mul(nm("a"), nm(&fkk))),
        ),
        sm(ring, &format!("z^2*a{k}{k}"), e(k, k)),
    ));
    // Step 2: spreading the diagonal coefficient along row i2.
    records.push(eq(
        &format!("{id_prefix}s{k}{i2}"),
        &format!(
            "z^2*alpha_{k}{k}*(e_{k}{k} o f_{i2}{k}) o f_{k}{i2} = \
             1/4*z^4*alpha_{k}{k}*(e_{i2}{i2} +- e_{k}{k})"
        ),
        sm(
            ring,
            &format!("z^2*a{k}{k}"),
            mul(mul(e(k, k), nm(&format!("f{i2}{k}"))), nm(&format!("f{k}{i2}"))),
        ),
        sm(ring, &format!("1/4*z^4*a{k}{k}"), pm(i2, k, sign2)),
    ));
    // Steps 3 and 4: the off-diagonal coefficient at (l, k).
    let chain3 = ch(vec![
        nm("a"),
        nm(&fkk),
        nm(&format!("f{l}{l}")),
        nm(&format!("f{k}{l}")),
    ]);
    records.push(eq_fix(
        &format!("{id_prefix}o{l}{k}"),
        &format!(
            "1/8*alpha_{l}{k}*(e_{l}{l} +- e_{k}{k}) = \
             ((a o f_{k}{k}) o f_{l}{l}) o f_{k}{l}"
        ),
        sm(ring, &format!("1/8*a{l}{k}"), pm(l, k, sign3)),
        chain3.clone(),
        "the left side needs the factor z^3 carried by the three f's",
        sm(ring, &format!("1/8*z^3*a{l}{k}"), pm(l, k, sign3)),
        chain3.clone(),
    ));
    records.push(eq_fix(
        &format!("{id_prefix}d{l}{k}"),
        &format!(
            "z^4*alpha_{l}{k}*e_{l}{l} = \
             16*(((a o f_{k}{k}) o f_{l}{l}) o f_{k}{l}) o f_{l}{l}"
        ),
        sm(ring, &format!("z^4*a{l}{k}"), e(l, l)),
        im(16, mul(chain3.clone(), nm(&format!("f{l}{l}")))),
        "the factor 16 double-counts the final halved projection; 8 is exact",
        sm(ring, &format!("z^4*a{l}{k}"), e(l, l)),
        im(8, mul(chain3, nm(&format!("f{l}{l}")))),
    ));
    // Step 5: moving the off-diagonal coefficient along the diagonal.
    records.push(eq(
        &format!("{id_prefix}m{l}{k}{i5}"),
        &format!(
            "z^6*alpha_{l}{k}*(e_{i5}{i5} +- e_{l}{l}) = \
             4*z^4*alpha_{l}{k}*(e_{l}{l} o f_{i5}{l}) o f_{l}{i5}"
        ),
        sm(ring, &format!("z^6*a{l}{k}"), pm(i5, l, sign5)),
        sm(
            ring,
            &format!("4*z^4*a{l}{k}"),
            mul(mul(e(l, l), nm(&format!("f{i5}{l}"))), nm(&format!("f{l}{i5}"))),
        ),
    ));
}

fn jordan_mnm_case(n: usize, m: usize) -> Result<CaseSpec> {
    let size = n + m;
    let mut params = strings(&["z"]);
    let mut coeffs = Vec::new();
    for i in 1..=size {
        for j in 1..=size {
            params.push(format!("a{i}{j}"));
            coeffs.push(format!("a{i}{j}"));
        }
    }
    let ring = ring_for(0, &params)?;
    let mut lets = Vec::new();
    for i in 1..=size {
        for j in 1..=size {
            lets.push((format!("f{i}{j}"), sm(&ring, "z", bs(&format!("e{i}{j}")))));
        }
    }
    let mut records = Vec::new();
    if size == 2 {
        // n = m = 1: the cross pair (1,2) is odd-odd, so both signs flip.
        jordan_matrix_records(&ring, &mut records, "", 1, 2, -1, 2, -1, 1, -1);
    } else {
        // n = 2, m = 1: indices 1, 2 even, 3 odd; record one instance of
        // each parity pattern.
        jordan_matrix_records(&ring, &mut records, "", 1, 2, 1, 2, 1, 3, -1);
        records.push(eq(
            "s13",
            "z^2*alpha_11*(e_11 o f_31) o f_13 = 1/4*z^4*alpha_11*(e_33 +- e_11)",
            sm(
                &ring,
                "z^2*a11",
                mul(mul(bs("e11"), nm("f31")), nm("f13")),
            ),
            sm(&ring, "1/4*z^4*a11", sub(bs("e33"), bs("e11"))),
        ));
    }
    Ok(CaseSpec {
        id: format!("jordan-m{n}{m}"),
        title: format!(
            "symmetrized {s}x{s} matrices with the {n}|{m} split: diagonal and \
             off-diagonal coefficients",
            s = size
        ),
        characteristic: 0,
        params,
        algebra: vec!["jordan-mnm".into(), n.to_string(), m.to_string()],
        gens: vec![("a".into(), coeffs)],
        lets,
        records,
        notes: vec![
            "the product is the supersymmetrized one; a = sum alpha_ij e_ij, f_ij = z e_ij"
                .into(),
        ],
    })
}

fn jordan_qn_case(n: usize) -> Result<CaseSpec> {
    let params = strings(&["z", "bij"]);
    let ring = ring_for(0, &params)?;
    let mut lets = vec![
        ("f11".to_string(), sm(&ring, "z", bs("e11"))),
        ("f12".to_string(), sm(&ring, "z", bs("e12"))),
        ("f21".to_string(), sm(&ring, "z", bs("e21"))),
        ("fb21".to_string(), sm(&ring, "z", bs("e21b"))),
    ];
    if n == 3 {
        lets.push(("f13".into(), sm(&ring, "z", bs("e13"))));
        lets.push(("f31".into(), sm(&ring, "z", bs("e31"))));
    }
    let obar = add((1..=n).map(|i| bs(&format!("e{i}{i}b"))).collect());
    lets.push(("obar".into(), obar));
    lets.push(("w".into(), sm(&ring, "z^6*bij", nm("obar"))));
    lets.push((
        "u0".into(),
        ch(vec![nm("w"), nm("f12"), nm("fb21"), nm("f11")]),
    ));
    let term = |k: usize| {
        im(
            8,
            mul(
                mul(nm("u0"), nm(&format!("f1{k}"))),
                nm(&format!("f{k}1")),
            ),
        )
    };
    let tail = im(2 * (n as i64 - 2), sm(&ring, "z^2", nm("u0")));
    let rhs = if n == 2 {
        sub(term(2), tail)
    } else {
        sub(add(vec![term(2), term(3)]), tail)
    };
    let records = vec![eq(
        "beta",
        &format!(
            "z^11*beta_ij = sum_k 8*(((((z^6*beta_ij*ob) o f_12) o fb_21) o f_11) o f_1k) o f_k1 \
             - 2*(n-2)*z^2*(((z^6*beta_ij*ob) o f_12) o fb_21) o f_11, at n = {n}"
        ),
        sm(&ring, "z^11*bij", Expr::Unit),
        rhs,
    )];
    Ok(CaseSpec {
        id: format!("jordan-q{n}"),
        title: format!("the doubled {n}x{n} matrices: recovering an odd-copy coefficient"),
        characteristic: 0,
        params,
        algebra: vec!["jordan-qn".into(), n.to_string()],
        gens: vec![],
        lets,
        records,
        notes: vec![
            "ob is the odd copy of the unit; z^6*beta_ij*ob stands for the odd remainder \
             left by the even-part recovery, with beta_ij kept symbolic"
                .into(),
        ],
    })
}

fn jordan_p2_case() -> Result<CaseSpec> {
    let params = strings(&[
        "z", "a11", "a12", "a21", "a22", "b11", "b12", "b22", "g12",
    ]);
    let ring = ring_for(0, &params)?;
    let mut lets = Vec::new();
    for ij in ["11", "12", "21", "22"] {
        lets.push((format!("F{ij}"), sm(&ring, "z", bs(&format!("a{ij}")))));
    }
    lets.push((
        "kmat".into(),
        add(vec![bs("h11"), bs("h22")]),
    ));
    lets.push(("s0".into(), sm(&ring, "z", bs("s12"))));
    // The gamma extraction: project the even part of a*(z*kmat) onto the
    // (1,2) matrix coefficient and spread it back along the diagonal.
    lets.push((
        "w0".into(),
        mul(nm("a"), sm(&ring, "z", nm("kmat"))),
    ));
    lets.push((
        "t0".into(),
        im(
            8,
            mul(
                ch(vec![nm("w0"), nm("F22"), nm("F11"), nm("F21")]),
                nm("F11"),
            ),
        ),
    ));
    let odd_span = vec![bs("h11"), bs("h12"), bs("h22"), bs("s12")];
    let records = vec![
        sup(
            "c1",
            "Y*(0 0; E 0) = 1/2*(s d; x -s) for some d, x: the even part is \
             1/2*gamma_12*(a_12 - a_21)",
            sub(
                mul(nm("a"), nm("kmat")),
                sm(&ring, "1/2*g12", sub(bs("a12"), bs("a21"))),
            ),
            odd_span.clone(),
        ),
        sup(
            "c2",
            "z^7*gamma_12 lies in Z: an even-coefficient chain recovers it up to \
             an odd remainder",
            sub(
                im(
                    2,
                    im(4, mul(mul(nm("t0"), nm("F21")), nm("F12"))),
                ),
                sm(&ring, "z^7*g12", Expr::Unit),
            ),
            odd_span.clone(),
        ),
        sup(
            "c3",
            "multiplying by (0 f_12 - f_21; 0 0) puts z*beta_kj in the upper left \
             quarter: the even part of a*(z*s_12)",
            sub(
                mul(nm("a"), nm("s0")),
                add(vec![
                    neg(sm(&ring, "1/2*z*b12", bs("a11"))),
                    sm(&ring, "1/2*z*b12", bs("a22")),
                    neg(sm(&ring, "1/2*z*b22", bs("a12"))),
                    sm(&ring, "1/2*z*b11", bs("a21")),
                ]),
            ),
            odd_span.clone(),
        ),
        sup(
            "c4",
            "z^7*beta_11 lies in Z: the same chain applied after the s-multiplication",
            sub(
                im(
                    2,
                    im(
                        4,
                        mul(
                            mul(
                                im(
                                    8,
                                    mul(
                                        ch(vec![
                                            mul(nm("a"), nm("s0")),
                                            nm("F11"),
                                            nm("F22"),
                                            nm("F12"),
                                        ]),
                                        nm("F22"),
                                    ),
                                ),
                                nm("F12"),
                            ),
                            nm("F21"),
                        ),
                    ),
                ),
                sm(&ring, "z^7*b11", Expr::Unit),
            ),
            odd_span,
        ),
    ];
    Ok(CaseSpec {
        id: "jordan-p2".into(),
        title: "the transpose-paired matrices inside the 2|2 split: odd-block recovery"
            .into(),
        characteristic: 0,
        params,
        algebra: strings(&["jordan-pn", "2"]),
        gens: vec![(
            "a".into(),
            strings(&["a11", "a12", "a21", "a22", "b11", "b12", "b22", "g12"]),
        )],
        lets,
        records,
        notes: vec![
            "even basis a_ij, odd basis h_ij (symmetric block) and s_12 (skew block); \
             alpha -> a, beta -> b, gamma -> g coefficients"
                .into(),
        ],
    })
}

fn jordan_osp12_case() -> Result<CaseSpec> {
    let params = strings(&["xa", "xc", "xb1", "xb2"]);
    let ring = ring_for(0, &params)?;
    let lets = vec![("s".to_string(), bs("a11"))];
    let records = vec![
        eq(
            "d1",
            "(a 0; 0 0) = (2*x o S - x) o S",
            sm(&ring, "xa", bs("a11")),
            mul(sub(im(2, mul(nm("x"), nm("s"))), nm("x")), nm("s")),
        ),
        eq_fix(
            "d2",
            "(0 0; 0 c) = (2*x o S - x) o (1 - S)",
            sm(&ring, "xc", bs("c1_11")),
            mul(
                sub(im(2, mul(nm("x"), nm("s"))), nm("x")),
                sub(Expr::Unit, nm("s")),
            ),
            "the stated product gives the negative of the c block; swapping the \
             subtraction fixes the sign",
            sm(&ring, "xc", bs("c1_11")),
            mul(
                sub(nm("x"), im(2, mul(nm("x"), nm("s")))),
                sub(Expr::Unit, nm("s")),
            ),
        ),
    ];
    Ok(CaseSpec {
        id: "jordan-osp12".into(),
        title: "orthosymplectic 1|2: splitting off the two even blocks".into(),
        characteristic: 0,
        params,
        algebra: strings(&["jordan-osp", "1", "1"]),
        gens: vec![("x".into(), strings(&["xa", "xc", "xb1", "xb2"]))],
        lets,
        records,
        notes: vec!["S is the upper even idempotent a_11; 1 - S = c1_11".into()],
    })
}

fn jordan_osp24_case() -> Result<CaseSpec> {
    // Basis order of osp(2, 4): a11 a12 a22, c1_11 c1_12 c1_21 c1_22,
    // c2_12 c3_12, then b1/b2 pairs over (i, j).
    let coeffs = strings(&[
        "xa11", "xa12", "xa22", "xc11", "xc12", "xc21", "xc22", "xd12", "xe12",
        "xb11", "xg11", "xb12", "xg12", "xb21", "xg21", "xb22", "xg22",
    ]);
    let params = coeffs.clone();
    let ring = ring_for(0, &params)?;
    let lets = vec![(
        "s".to_string(),
        add(vec![bs("a11"), bs("a22")]),
    )];
    let base = mul(sub(mul(nm("x"), nm("s")), nm("x")), nm("s"));
    let chain = |scale: i64, final_b: &str| {
        im(
            scale,
            ch(vec![
                base.clone(),
                bs("a11"),
                bs("c1_11"),
                bs("c1_21"),
                bs(final_b),
            ]),
        )
    };
    let records = vec![eq_fix(
        "d3",
        "gamma_ij*(e_kj - e_jk in the c2 block) = 2*((((x o S - x) o S) o a_ii) o c1_jj) \
         o c1_rj) o (b2 with e_rk), at i = 1, j = 1, r = 2, k = 2",
        neg(sm(&ring, "xg11", bs("c2_12"))),
        chain(2, "b2_22"),
        "the quoted final factor at (r, k) annihilates the chain; pairing with the \
         b2 element at (i, j) and scaling by 64 instead of 2 is exact",
        neg(sm(&ring, "xg11", bs("c2_12"))),
        chain(64, "b2_11"),
    )];
    Ok(CaseSpec {
        id: "jordan-osp24".into(),
        title: "orthosymplectic 2|4: recovering an odd b2 coefficient".into(),
        characteristic: 0,
        params,
        algebra: strings(&["jordan-osp", "2", "2"]),
        gens: vec![("x".into(), coeffs)],
        lets,
        records,
        notes: vec![
            "coefficients: xa (a block), xc (c1 block), xd/xe (c2/c3), \
             xb (b1 block), xg (b2 block)"
                .into(),
        ],
    })
}

fn jordan_dt_case() -> Result<CaseSpec> {
    let params = strings(&["z", "t", "a1", "a2", "b1", "b2"]);
    let ring = ring_for(0, &params)?;
    let lets = vec![
        ("f1".to_string(), sm(&ring, "z", bs("e1"))),
        ("f2".to_string(), sm(&ring, "z", bs("e2"))),
        ("v".to_string(), sm(&ring, "z", bs("x"))),
        ("w".to_string(), sm(&ring, "z", bs("y"))),
        (
            "m".to_string(),
            add(vec![sm(&ring, "t*z", nm("f1")), sm(&ring, "z", nm("f2"))]),
        ),
    ];
    let records = vec![
        eq(
            "e1",
            "u*z^4*beta_1 = 4*(((a*f_1)*f_2)*w)*(u*f_1 + z*f_2)",
            sm(&ring, "t*z^5*b1", Expr::Unit),
            im(4, mul(ch(vec![nm("a"), nm("f1"), nm("f2"), nm("w")]), nm("m"))),
        ),
        eq(
            "e2",
            "u*z^4*beta_2 = -4*(((a*f_1)*f_2)*v)*(u*f_1 + z*f_2)",
            sm(&ring, "t*z^5*b2", Expr::Unit),
            neg(im(
                4,
                mul(ch(vec![nm("a"), nm("f1"), nm("f2"), nm("v")]), nm("m")),
            )),
        ),
        eq_fix(
            "e3",
            "u*z^6*alpha_1 = 4*(((((a*f_1)*v)*f_1)*f_2)*w)*(u*f_1 + z*f_2)",
            sm(&ring, "t*z^7*a1", Expr::Unit),
            im(
                4,
                mul(
                    ch(vec![nm("a"), nm("f1"), nm("v"), nm("f1"), nm("f2"), nm("w")]),
                    nm("m"),
                ),
            ),
            "the longer chain halves the coefficient once more; the factor must be 8",
            sm(&ring, "t*z^7*a1", Expr::Unit),
            im(
                8,
                mul(
                    ch(vec![nm("a"), nm("f1"), nm("v"), nm("f1"), nm("f2"), nm("w")]),
                    nm("m"),
                ),
            ),
        ),
        eq_fix(
            "e4",
            "u*z^6*alpha_2 = 4*(((((a*f_2)*v)*f_1)*f_2)*w)*(u*f_1 + z*f_2)",
            sm(&ring, "t*z^7*a2", Expr::Unit),
            im(
                4,
                mul(
                    ch(vec![nm("a"), nm("f2"), nm("v"), nm("f1"), nm("f2"), nm("w")]),
                    nm("m"),
                ),
            ),
            "the longer chain halves the coefficient once more; the factor must be 8",
            sm(&ring, "t*z^7*a2", Expr::Unit),
            im(
                8,
                mul(
                    ch(vec![nm("a"), nm("f2"), nm("v"), nm("f1"), nm("f2"), nm("w")]),
                    nm("m"),
                ),
            ),
        ),
    ];
    Ok(CaseSpec {
        id: "jordan-dt".into(),
        title: "the one-parameter four-dimensional family: all four coefficients".into(),
        characteristic: 0,
        params,
        algebra: strings(&["jordan-dt"]),
        gens: vec![("a".into(), strings(&["a1", "a2", "b1", "b2"]))],
        lets,
        records,
        notes: vec![
            "a = alpha_1 e_1 + alpha_2 e_2 + beta_1 x + beta_2 y; u = t*z stands for the \
             numerator of the structure parameter"
                .into(),
        ],
    })
}

fn jordan_form21_case() -> Result<CaseSpec> {
    let params = strings(&["z", "al1", "al2", "be1", "g0", "d1", "d2", "s1", "s2"]);
    let ring = ring_for(0, &params)?;
    let lets = vec![
        ("f1".to_string(), sm(&ring, "z", bs("v1"))),
        ("f2".to_string(), sm(&ring, "z", bs("v2"))),
        ("h1".to_string(), sm(&ring, "z", bs("g1"))),
        ("h2".to_string(), sm(&ring, "z", bs("g2"))),
    ];
    let records = vec![
        eq(
            "f1r",
            "z^2*lambda_1*lambda_2*gamma = (((a*f_1)*f_1)*f_2)*f_2",
            sm(&ring, "al1*al2*z^4*g0", Expr::Unit),
            ch(vec![nm("a"), nm("f1"), nm("f1"), nm("f2"), nm("f2")]),
        ),
        eq(
            "f2r",
            "z*lambda_1*lambda_i*delta_i = ((a*f_i)*f_1)*f_1, at i = 2",
            sm(&ring, "al1*al2*z^3*d2", Expr::Unit),
            ch(vec![nm("a"), nm("f2"), nm("f1"), nm("f1")]),
        ),
        eq(
            "f3r",
            "z*lambda_1*lambda_2*delta_1 = ((a*f_1)*f_2)*f_2",
            sm(&ring, "al1*al2*z^3*d1", Expr::Unit),
            ch(vec![nm("a"), nm("f1"), nm("f2"), nm("f2")]),
        ),
        eq(
            "f4r",
            "((a*h_2k)*h_2k)*h_2k-1 = -z*mu_k^2*epsilon_2k-1, at k = 1",
            ch(vec![nm("a"), nm("h2"), nm("h2"), nm("h1")]),
            neg(sm(&ring, "be1^2*z^3*s1", Expr::Unit)),
        ),
        eq(
            "f5r",
            "((a*h_2k-1)*h_2k-1)*h_2k = -z*mu_k^2*epsilon_2k, at k = 1",
            ch(vec![nm("a"), nm("h1"), nm("h1"), nm("h2")]),
            neg(sm(&ring, "be1^2*z^3*s2", Expr::Unit)),
        ),
    ];
    Ok(CaseSpec {
        id: "jordan-form21".into(),
        title: "the superform family on a 2|2 space: all five coefficients".into(),
        characteristic: 0,
        params,
        algebra: strings(&["jordan-superform", "2", "1"]),
        gens: vec![("a".into(), strings(&["g0", "d1", "d2", "s1", "s2"]))],
        lets,
        records,
        notes: vec![
            "a = gamma e + delta_1 e_1 + delta_2 e_2 + epsilon_1 g_1 + epsilon_2 g_2; \
             lambda_i = al_i*z, mu_1 = be1*z"
                .into(),
        ],
    })
}

fn jordan_3x3_case() -> Result<CaseSpec> {
    let params = strings(&[
        "z", "a11", "a22", "a33", "a12", "a13", "a23", "b12", "b13", "b23", "g12",
        "g13", "g23",
    ]);
    let ring = ring_for(0, &params)?;
    let mut lets = Vec::new();
    for (text, basis) in [
        ("f11", "f11"),
        ("f22", "f22"),
        ("f33", "f33"),
        ("f12", "h12"),
        ("f13", "h13"),
        ("f23", "h23"),
        ("fb12", "p12"),
        ("fb13", "p13"),
        ("fbb12", "q12"),
        ("fbb13", "q13"),
    ] {
        lets.push((text.to_string(), sm(&ring, "z", bs(basis))));
    }
    for (name, first, second, d1, d2) in [
        ("bigf1", "fbb12", "fb12", "f11", "f33"),
        ("bigf2", "fbb12", "fb12", "f22", "f33"),
        ("bigf3", "fbb13", "fb13", "f33", "f22"),
        ("bigg1", "fb12", "fbb12", "f11", "f33"),
        ("bigg2", "fb12", "fbb12", "f22", "f33"),
        ("bigg3", "fb13", "fbb13", "f33", "f22"),
    ] {
        lets.push((
            name.to_string(),
            ch(vec![nm("a"), nm(first), nm(first), nm(second), nm(d1), nm(d2)]),
        ));
    }
    let mut records = Vec::new();
    let odd_recs = [
        ("ob23", "b23", "bigf1", "f13", "f23", "f12", false),
        ("ob13", "b13", "bigf2", "f23", "f13", "f12", true),
        ("ob12", "b12", "bigf3", "f23", "f12", "f13", true),
        ("og23", "g23", "bigg1", "f13", "f23", "f12", false),
        ("og13", "g13", "bigg2", "f23", "f13", "f12", true),
        ("og12", "g12", "bigg3", "f23", "f12", "f13", true),
    ];
    for (id, coeff, big, single, pa, pb, flip) in odd_recs {
        let fname = if big.starts_with("bigf") { "F" } else { "G" };
        let fidx = &big[4..];
        let quote = format!(
            "z^7*{greek}_{sub} = 16*z*{fname}{fidx}(a)*{single_t} + \
             32*({fname}{fidx}(a)*{pa_t})*{pb_t} + 32*({fname}{fidx}(a)*{pb_t})*{pa_t}",
            greek = if coeff.starts_with('b') { "beta" } else { "gamma" },
            sub = &coeff[1..],
            single_t = single.replace('f', "f_"),
            pa_t = pa.replace('f', "f_"),
            pb_t = pb.replace('f', "f_"),
        );
        let lhs = sm(&ring, &format!("z^7*{coeff}"), Expr::Unit);
        let rhs = add(vec![
            sm(&ring, "16*z", mul(nm(big), nm(single))),
            im(32, mul(mul(nm(big), nm(pa)), nm(pb))),
            im(32, mul(mul(nm(big), nm(pb)), nm(pa))),
        ]);
        if flip {
            records.push(eq_fix(
                id,
                &quote,
                lhs.clone(),
                rhs.clone(),
                "the chains built on the (2,2) and (3,3) projections return the \
                 negative of the quoted multiple; the sign on the left flips",
                neg(lhs),
                rhs,
            ));
        } else {
            records.push(eq(id, &quote, lhs, rhs));
        }
    }
    let even_off = [
        ("oa12", "a12", "f11", "f22", "f12", "f13", "f23"),
        ("oa13", "a13", "f11", "f33", "f13", "f12", "f23"),
        ("oa23", "a23", "f22", "f33", "f23", "f12", "f13"),
    ];
    for (id, coeff, d1, d2, single, pa, pb) in even_off {
        let w = ch(vec![nm("a"), nm(d1), nm(d2)]);
        records.push(eq(
            id,
            &format!(
                "z^4*alpha_{sub} = 2*z*((a*{d1_t})*{d2_t})*{single_t} + \
                 4*(((a*{d1_t})*{d2_t})*{pa_t})*{pb_t} + 4*(((a*{d1_t})*{d2_t})*{pb_t})*{pa_t}",
                sub = &coeff[1..],
                d1_t = d1.replace('f', "f_"),
                d2_t = d2.replace('f', "f_"),
                single_t = single.replace('f', "f_"),
                pa_t = pa.replace('f', "f_"),
                pb_t = pb.replace('f', "f_"),
            ),
            sm(&ring, &format!("z^4*{coeff}"), Expr::Unit),
            add(vec![
                sm(&ring, "2*z", mul(w.clone(), nm(single))),
                im(4, mul(mul(w.clone(), nm(pa)), nm(pb))),
                im(4, mul(mul(w, nm(pb)), nm(pa))),
            ]),
        ));
    }
    let even_diag = [
        ("oa11", "a11", "f11", "f12", "f13"),
        ("oa22", "a22", "f22", "f12", "f23"),
        ("oa33", "a33", "f33", "f23", "f13"),
    ];
    for (id, coeff, dd, pa, pb) in even_diag {
        let b = sub(im(2, mul(nm("a"), nm(dd))), sm(&ring, "z", nm("a")));
        let bd = mul(b, nm(dd));
        records.push(eq(
            id,
            &format!(
                "z^4*alpha_{sub} = 2*(((2*a*{dd_t} - z*a)*{dd_t})*{pa_t})*{pa_t} + \
                 2*(((2*a*{dd_t} - z*a)*{dd_t})*{pb_t})*{pb_t} - z^2*(2*a*{dd_t} - z*a)*{dd_t}",
                sub = &coeff[1..],
                dd_t = dd.replace('f', "f_"),
                pa_t = pa.replace('f', "f_"),
                pb_t = pb.replace('f', "f_"),
            ),
            sm(&ring, &format!("z^4*{coeff}"), Expr::Unit),
            add(vec![
                im(2, mul(mul(bd.clone(), nm(pa)), nm(pa))),
                im(2, mul(mul(bd.clone(), nm(pb)), nm(pb))),
                neg(sm(&ring, "z^2", bd)),
            ]),
        ));
    }
    Ok(CaseSpec {
        id: "jordan-3x3".into(),
        title: "symmetric 3x3 matrices acting on two skew copies: all twelve \
                coefficient families"
            .into(),
        characteristic: 0,
        params,
        algebra: strings(&["jordan-jp3"]),
        gens: vec![(
            "a".into(),
            strings(&[
                "a11", "a22", "a33", "a12", "a13", "a23", "b12", "b13", "b23", "g12",
                "g13", "g23",
            ]),
        )],
        lets,
        records,
        notes: vec![
            "text f_ii are the diagonal idempotents, f_ij the symmetric pairs, \
             fb/fbb the two skew copies carrying beta and gamma"
                .into(),
        ],
    })
}

fn jordan_h3_case() -> Result<CaseSpec> {
    // Read the 21 basis names off a throwaway copy of the algebra.
    let probe = crate::catalog::make_jordan_h3b42(&Ring::new(3, &[])?)?;
    let coeffs: Vec<String> = (0..probe.dim())
        .map(|i| format!("c_{}", probe.basis_name(i)))
        .collect();
    let params = coeffs.clone();
    let ring = ring_for(3, &params)?;
    let mut lets = Vec::new();
    for cell in ["12", "13", "23"] {
        lets.push((
            format!("e{cell}"),
            add(vec![bs(&format!("e11_{cell}")), bs(&format!("e22_{cell}"))]),
        ));
    }
    let mut records = Vec::new();
    // Diagonal entries.
    let diag = [
        ("h1", "c_d1", "d1", "e12", "e13"),
        ("h2", "c_d2", "d2", "e12", "e23"),
        ("h3", "c_d3", "d3", "e23", "e13"),
    ];
    for (id, coeff, dd, pa, pb) in diag {
        let i = &coeff[3..];
        let b = sub(im(2, mul(nm("a"), bs(dd))), nm("a"));
        let bd = mul(b, bs(dd));
        let rhs = |k: i64| {
            add(vec![
                im(k, mul(mul(bd.clone(), nm(pa)), nm(pa))),
                im(k, mul(mul(bd.clone(), nm(pb)), nm(pb))),
                neg(bd.clone()),
            ])
        };
        records.push(eq_fix(
            id,
            &format!(
                "alpha_{i} = 4*(((2*a*e_{i}{i} - a)*e_{i}{i})*e_{pa_t})*e_{pa_t} + \
                 4*(((2*a*e_{i}{i} - a)*e_{i}{i})*e_{pb_t})*e_{pb_t} - (2*a*e_{i}{i} - a)*e_{i}{i}",
                pa_t = &pa[1..],
                pb_t = &pb[1..],
            ),
            Expr::smul(lit(&ring, coeff), Expr::Unit),
            rhs(4),
            "mod 3 the stated factor 4 leaves the diagonal entry off by itself; 2 is exact",
            Expr::smul(lit(&ring, coeff), Expr::Unit),
            rhs(2),
        ));
    }
    // Off-diagonal cells: conjugator in the cell, two spread-unit factors,
    // and the diagonal to subtract against. The last flag picks between the
    // two coefficient patterns that are exact mod 3: the m2-conjugator rows
    // keep the leading 32 and shrink the trailing 8's to 4, all other rows
    // keep the 8's and shrink the 32 to 16.
    let off = [
        ("h4", "c_m1_12", "delta_1", "d1", "d2", "m2_12", "e13", "d1", false, true),
        ("h5", "c_m2_12", "delta_2", "d1", "d2", "m1_12", "e13", "d1", false, false),
        ("h6", "c_m1_13", "epsilon_1", "d1", "d3", "m2_13", "e12", "d1", false, true),
        ("h7", "c_m2_13", "epsilon_2", "d1", "d3", "m1_13", "e12", "d1", false, false),
        ("h8", "c_m1_23", "mu_1", "d2", "d3", "m2_23", "e12", "d2", false, true),
        ("h9", "c_m2_23", "mu_2", "d2", "d3", "m1_23", "e12", "d2", false, false),
        ("h10", "c_e21_12", "-alpha_21", "d1", "d2", "e12_12", "e13", "d1", true, false),
        ("h11", "c_e12_12", "-alpha_12", "d1", "d2", "e21_12", "e13", "d1", true, false),
        ("h12", "c_e21_13", "-beta_21", "d1", "d3", "e12_13", "e12", "d1", true, false),
        ("h13", "c_e12_13", "-beta_12", "d1", "d3", "e21_13", "e12", "d1", true, false),
        ("h14", "c_e21_23", "-gamma_21", "d2", "d3", "e12_23", "e12", "d2", true, false),
        ("h15", "c_e12_23", "-gamma_12", "d2", "d3", "e21_23", "e12", "d2", true, false),
        ("h16", "c_e11_12", "alpha_11", "d1", "d2", "e22_12", "e13", "d1", false, false),
        ("h17", "c_e22_12", "alpha_22", "d1", "d2", "e11_12", "e13", "d1", false, false),
        ("h18", "c_e11_13", "beta_11", "d1", "d3", "e22_13", "e12", "d1", false, false),
        ("h19", "c_e22_13", "beta_22", "d1", "d3", "e11_13", "e12", "d1", false, false),
        ("h20", "c_e11_23", "gamma_11", "d2", "d3", "e22_23", "e12", "d2", false, false),
        ("h21", "c_e22_23", "gamma_22", "d2", "d3", "e11_23", "e12", "d2", false, false),
    ];
    for (id, coeff, greek, dd1, dd2, conj, spread, dsub, negated, keep32) in off {
        let v = mul(ch(vec![nm("a"), bs(dd1), bs(dd2)]), bs(conj));
        let rhs = |lead: i64, tail: i64| {
            add(vec![
                im(lead, mul(mul(v.clone(), nm(spread)), nm(spread))),
                im(tail, v.clone()),
                neg(im(tail, mul(v.clone(), bs(dsub)))),
            ])
        };
        let lhs_core = Expr::smul(lit(&ring, coeff), Expr::Unit);
        let lhs = if negated {
            neg(lhs_core)
        } else {
            lhs_core
        };
        let (fixed, note) = if keep32 {
            (
                rhs(32, 4),
                "mod 3 the two trailing multiples must be 4, not 8",
            )
        } else {
            (
                rhs(16, 8),
                "mod 3 the leading multiple must be 16, not 32",
            )
        };
        records.push(eq_fix(
            id,
            &format!(
                "{greek} = 32*((((a*e_{d1})*e_{d2})*{conj})*e_{sp})*e_{sp} + \
                 8*((a*e_{d1})*e_{d2})*{conj} - 8*(((a*e_{d1})*e_{d2})*{conj})*e_{ds}",
                d1 = &dd1[1..],
                d2 = &dd2[1..],
                sp = &spread[1..],
                ds = &dsub[1..],
            ),
            lhs.clone(),
            rhs(32, 8),
            note,
            lhs,
            fixed,
        ));
    }
    Ok(CaseSpec {
        id: "jordan-h3".into(),
        title: "hermitian 3x3 matrices over the six-dimensional characteristic-3 \
                algebra: all 21 coefficients"
            .into(),
        characteristic: 3,
        params,
        algebra: strings(&["jordan-h3b42"]),
        gens: vec![("a".into(), coeffs)],
        lets,
        records,
        notes: vec![
            "the coordinate of basis vector v is named c_v; e_ij (i < j) in the quotes \
             means the spread unit cell e11_ij + e22_ij, e_ii means d_i"
                .into(),
        ],
    })
}

/// Every shipped case, in presentation order.
pub fn all_cases() -> Result<Vec<CaseSpec>> {
    Ok(vec![
        assoc_matrix_u()?,
        alt_oct()?,
        alt_oct_mu0()?,
        alt_b12()?,
        alt_b42()?,
        alt_oct_u()?,
        alt_oct_u_mu0()?,
        jordan_mnm_case(1, 1)?,
        jordan_mnm_case(2, 1)?,
        jordan_qn_case(2)?,
        jordan_qn_case(3)?,
        jordan_p2_case()?,
        jordan_osp12_case()?,
        jordan_osp24_case()?,
        jordan_dt_case()?,
        jordan_form21_case()?,
        jordan_3x3_case()?,
        jordan_h3_case()?,
    ])
}

/// The checked-in text form of every case, byte-identical to
/// `serialize_case` applied to [`all_cases`]; regenerate with the
/// `regen-cases` binary after editing a builder.
pub const CASE_TEXTS: &[(&str, &str)] = &[
    ("assoc-matrix-u", include_str!("../../cases/assoc-matrix-u.case")),
    ("alt-oct", include_str!("../../cases/alt-oct.case")),
    ("alt-oct-mu0", include_str!("../../cases/alt-oct-mu0.case")),
    ("alt-b12", include_str!("../../cases/alt-b12.case")),
    ("alt-b42", include_str!("../../cases/alt-b42.case")),
    ("alt-oct-u", include_str!("../../cases/alt-oct-u.case")),
    ("alt-oct-u-mu0", include_str!("../../cases/alt-oct-u-mu0.case")),
    ("jordan-m11", include_str!("../../cases/jordan-m11.case")),
    ("jordan-m21", include_str!("../../cases/jordan-m21.case")),
    ("jordan-q2", include_str!("../../cases/jordan-q2.case")),
    ("jordan-q3", include_str!("../../cases/jordan-q3.case")),
    ("jordan-p2", include_str!("../../cases/jordan-p2.case")),
    ("jordan-osp12", include_str!("../../cases/jordan-osp12.case")),
    ("jordan-osp24", include_str!("../../cases/jordan-osp24.case")),
    ("jordan-dt", include_str!("../../cases/jordan-dt.case")),
    ("jordan-form21", include_str!("../../cases/jordan-form21.case")),
    ("jordan-3x3", include_str!("../../cases/jordan-3x3.case")),
    ("jordan-h3", include_str!("../../cases/jordan-h3.case")),
];

/// The checked-in text of one case, if the id is known.
pub fn case_text(id: &str) -> Option<&'static str> {
    CASE_TEXTS
        .iter()
        .find(|(name, _)| *name == id)
        .map(|(_, text)| *text)
}
