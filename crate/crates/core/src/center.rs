//! Centers and centralizers as exact nullspace computations.
//!
//! An element `z` is central when it associates with everything and commutes
//! with everything: `(z,a,b) = (a,z,b) = (a,b,z) = 0` and `[a,z] = 0` for all
//! `a`, `b`. All four conditions are linear in `z` and multilinear in the
//! probes, so it suffices to impose them on basis pairs. The commutator is
//! the plain one `az - za` by default; the graded convention, where odd
//! elements pick up the Koszul sign, is available as [`Convention::Graded`]
//! and changes only the commutator condition. Conditions split by parity of
//! the unknown, so the computed basis is homogeneous.
//!
//! All solvers here require an honest field (no free parameters in the
//! coefficient ring): over a parametric ring the answer can jump at special
//! parameter values, so they refuse and ask for a specialization instead.

use crate::algebra::{associator, Element, Parity, SuperAlgebra};
use crate::error::Error;
use crate::linalg::{span_rank, spans_equal, Matrix};
use crate::ring::Ring;
use crate::scalar::Scalar;
use crate::Result;

/// Which commutator defines "commuting with".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// `az - za`.
    Plain,
    /// `az - (-1)^{|a||z|} za`.
    Graded,
}

/// Homogeneous basis of the center, split by parity.
#[derive(Debug, Clone)]
pub struct CenterBasis {
    pub even_part: Vec<Element>,
    pub odd_part: Vec<Element>,
}

impl CenterBasis {
    pub fn dim(&self) -> usize {
        self.even_part.len() + self.odd_part.len()
    }

    /// Even basis vectors followed by the odd ones.
    pub fn all(&self) -> Vec<Element> {
        self.even_part
            .iter()
            .chain(&self.odd_part)
            .cloned()
            .collect()
    }
}

fn field_only(ring: &Ring, what: &str) -> Result<()> {
    if ring.parameters().is_empty() {
        Ok(())
    } else {
        Err(Error::ParametricRing(format!(
            "{what} over {} depends on the parameter values; specialize them first \
             (e.g. with specialize)",
            ring.describe()
        )))
    }
}

/// Elements that associate and commute with the whole algebra (plain
/// commutator). Fails over parametric rings.
pub fn center(alg: &SuperAlgebra) -> Result<CenterBasis> {
    center_with(alg, Convention::Plain)
}

pub fn center_with(alg: &SuperAlgebra, conv: Convention) -> Result<CenterBasis> {
    field_only(alg.ring(), "the center")?;
    let ring = alg.ring();
    let d = alg.dim();
    let basis: Vec<Element> = (0..d).map(|i| alg.basis_element(i)).collect();
    let mut even_part = Vec::new();
    let mut odd_part = Vec::new();
    for z_parity in [Parity::Even, Parity::Odd] {
        let idxs: Vec<usize> = (0..d).filter(|&i| alg.parity(i) == z_parity).collect();
        if idxs.is_empty() {
            continue;
        }
        let candidates: Vec<Element> = idxs.iter().map(|&i| alg.basis_element(i)).collect();
        let mut m = Matrix::new(ring, idxs.len());
        let push_columns = |m: &mut Matrix, columns: &[Vec<Scalar>]| {
            for k in 0..d {
                m.push_row(columns.iter().map(|c| c[k].clone()).collect());
            }
        };
        for a in &basis {
            for b in &basis {
                for position in 0..3 {
                    let columns: Vec<Vec<Scalar>> = candidates
                        .iter()
                        .map(|z| {
                            let v = match position {
                                0 => associator(z, a, b),
                                1 => associator(a, z, b),
                                _ => associator(a, b, z),
                            };
                            v.coords().to_vec()
                        })
                        .collect();
                    push_columns(&mut m, &columns);
                }
            }
            let a_parity = a.parity().expect("basis elements are homogeneous");
            let sign: i64 = match conv {
                Convention::Plain => -1,
                Convention::Graded => -a_parity.swap_sign(z_parity),
            };
            let columns: Vec<Vec<Scalar>> = candidates
                .iter()
                .map(|z| (&a.mul(z) + &z.mul(a).scale_int(sign)).coords().to_vec())
                .collect();
            push_columns(&mut m, &columns);
        }
        for v in m.nullspace() {
            let mut coords = vec![Scalar::zero(ring); d];
            for (t, &i) in idxs.iter().enumerate() {
                coords[i] = v[t].clone();
            }
            match z_parity {
                Parity::Even => even_part.push(alg.element(coords)),
                Parity::Odd => odd_part.push(alg.element(coords)),
            }
        }
    }
    Ok(CenterBasis {
        even_part,
        odd_part,
    })
}

/// Elements `z` with `xz = zx` (adjusted per the convention) for every `x`
/// in the given family. Fails over parametric rings.
pub fn centralizer(
    alg: &SuperAlgebra,
    family: &[Element],
    conv: Convention,
) -> Result<Vec<Element>> {
    solve_commutant(alg, family, conv, false)
}

/// Elements `z` with `xz + zx = 0` for every `x` in the family.
pub fn anticentralizer(alg: &SuperAlgebra, family: &[Element]) -> Result<Vec<Element>> {
    solve_commutant(alg, family, Convention::Plain, true)
}

fn solve_commutant(
    alg: &SuperAlgebra,
    family: &[Element],
    conv: Convention,
    anti: bool,
) -> Result<Vec<Element>> {
    field_only(alg.ring(), if anti { "the anticentralizer" } else { "the centralizer" })?;
    let ring = alg.ring();
    for x in family {
        if !alg.same_algebra(x.algebra()) {
            return Err(Error::AlgebraMismatch {
                left: alg.name().to_string(),
                right: x.algebra().name().to_string(),
            });
        }
    }
    let mut out = Vec::new();
    for z_parity in [Parity::Even, Parity::Odd] {
        let idxs: Vec<usize> = (0..alg.dim())
            .filter(|&i| alg.parity(i) == z_parity)
            .collect();
        if idxs.is_empty() {
            continue;
        }
        // Column t holds x*z + s*z*x evaluated at the basis vector idxs[t],
        // with x split into homogeneous parts so the graded sign is defined.
        let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(idxs.len());
        let mut m = Matrix::new(ring, idxs.len());
        let mut parts = Vec::new();
        for x in family {
            for p in [Parity::Even, Parity::Odd] {
                let comp = x.component(p);
                if !comp.is_zero() {
                    parts.push((p, comp));
                }
            }
        }
        for (x_parity, xpart) in &parts {
            columns.clear();
            for &i in &idxs {
                let z = alg.basis_element(i);
                let s: i64 = if anti {
                    1
                } else {
                    match conv {
                        Convention::Plain => -1,
                        Convention::Graded => -x_parity.swap_sign(z_parity),
                    }
                };
                let val = &xpart.mul(&z) + &z.mul(xpart).scale_int(s);
                columns.push(val.coords().to_vec());
            }
            for k in 0..alg.dim() {
                let row: Vec<Scalar> = columns.iter().map(|c| c[k].clone()).collect();
                m.push_row(row);
            }
        }
        for v in m.nullspace() {
            let mut coords = vec![Scalar::zero(ring); alg.dim()];
            for (t, &i) in idxs.iter().enumerate() {
                coords[i] = v[t].clone();
            }
            out.push(alg.element(coords));
        }
    }
    Ok(out)
}

/// Whether two element families span the same subspace (over the fraction
/// field of the coefficient ring).
pub fn same_span(a: &[Element], b: &[Element]) -> bool {
    let alg = match a.first().or_else(|| b.first()) {
        Some(e) => e.algebra().clone(),
        None => return true,
    };
    let rows = |xs: &[Element]| -> Vec<Vec<Scalar>> {
        xs.iter().map(|e| e.coords().to_vec()).collect()
    };
    spans_equal(alg.ring(), &rows(a), &rows(b))
}

/// Dimension of the space spanned by the given elements.
pub fn span_dim(elements: &[Element]) -> usize {
    let Some(first) = elements.first() else {
        return 0;
    };
    let rows: Vec<Vec<Scalar>> = elements.iter().map(|e| e.coords().to_vec()).collect();
    span_rank(first.algebra().ring(), &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraBuilder;
    use crate::ring::Ring;

    /// Group algebra of Z/2 with the nontrivial element odd. Commutative and
    /// associative, so the plain center is everything.
    fn commutative_tiny(ring: &Ring) -> SuperAlgebra {
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
    fn plain_and_graded_centers_differ() {
        let ring = Ring::rationals();
        let alg = commutative_tiny(&ring);
        let plain = center(&alg).unwrap();
        assert_eq!(plain.even_part.len(), 1);
        assert_eq!(plain.odd_part.len(), 1, "commutative, so everything is central");
        let graded = center_with(&alg, Convention::Graded).unwrap();
        // Odd x has [x,x] = 2 ≠ 0 in the graded convention.
        assert_eq!(graded.even_part.len(), 1);
        assert!(graded.odd_part.is_empty());
        assert!(same_span(&graded.all(), &[alg.basis_element(0)]));
    }

    #[test]
    fn associator_conditions_cut_down_the_center() {
        let ring = Ring::rationals();
        // Commutative but non-associative: x*x = x+1 with (x,x,x) ≠ 0 is
        // avoided; instead take u*u = u, u*x = x*u = 0, x*x = u. Then x
        // commutes with everything but (x,x,u) = (x*x)*u - x*(x*u) = u ≠ 0,
        // so x is not central even though the algebra is commutative.
        let mut b = AlgebraBuilder::new("nonassoc", &ring);
        let u = b.basis_element("u", Parity::Even);
        let x = b.basis_element("x", Parity::Even);
        b.set_product_int(u, u, &[(u, 1)]);
        b.set_product_int(x, x, &[(u, 1)]);
        let alg = b.build().unwrap();
        let z = center(&alg).unwrap();
        assert_eq!(z.dim(), 0, "no unit, and x fails the associator conditions");
    }

    #[test]
    fn parametric_ring_is_refused() {
        let ring = Ring::new(0, &["t"]).unwrap();
        let alg = commutative_tiny(&ring);
        match center(&alg) {
            Err(Error::ParametricRing(msg)) => {
                assert!(msg.contains("specialize"), "message should instruct: {msg}")
            }
            other => panic!("expected a parametric-ring refusal, got {other:?}"),
        }
        assert!(centralizer(&alg, &[alg.basis_element(1)], Convention::Plain).is_err());
    }

    #[test]
    fn centralizer_and_anticentralizer() {
        let ring = Ring::rationals();
        let alg = commutative_tiny(&ring);
        let z = centralizer(&alg, &[alg.basis_element(1)], Convention::Plain).unwrap();
        assert_eq!(span_dim(&z), 2);
        let a = anticentralizer(&alg, &[alg.basis_element(0)]).unwrap();
        assert_eq!(span_dim(&a), 0, "nothing anticommutes with the unit");
    }

    #[test]
    fn center_of_matrix_like_algebra_is_scalar() {
        let ring = Ring::rationals();
        // 2x2 matrix units, all even.
        let mut b = AlgebraBuilder::new("m2", &ring);
        let mut idx = [[0usize; 2]; 2];
        for (i, row) in idx.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = b.basis_element(&format!("e{}{}", i + 1, j + 1), Parity::Even);
            }
        }
        for a in 0..2 {
            for bb in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        if bb == c {
                            b.set_product_int(idx[a][bb], idx[c][d], &[(idx[a][d], 1)]);
                        }
                    }
                }
            }
        }
        b.detect_unit();
        let alg = b.build().unwrap();
        let unit = alg.unit_element().unwrap();
        let z = center(&alg).unwrap();
        assert_eq!(z.dim(), 1);
        assert!(z.odd_part.is_empty());
        assert!(same_span(&z.all(), &[unit]));
    }
}
