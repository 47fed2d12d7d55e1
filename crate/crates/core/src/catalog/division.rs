//! The four association-graded division superalgebra shapes: the ground
//! field, a quadratic odd extension, the graded quaternions, and the 2x2
//! matrix algebra with its checkerboard grading written on the basis
//! `1, u, w, uw`.

use crate::algebra::{AlgebraBuilder, Parity, SuperAlgebra};
use crate::error::Error;
use crate::ring::Ring;
use crate::scalar::Scalar;
use crate::Result;

/// Build case `1..=4`. Cases 2 and 4 need the quadratic parameter `lambda`
/// (the square of the adjoined element); cases 1 and 3 ignore it.
///
/// * case 1: the ground field, one even basis vector.
/// * case 2: `1` even, `u` odd, `u^2 = lambda`.
/// * case 3: quaternions with `i^2 = j^2 = -1`, graded so that `1, i` are
///   even and `j, k` odd; characteristic 0 only.
/// * case 4: basis `1, u` even and `w, uw` odd with `w^2 = 1` and
///   `u^2 = lambda` (characteristic != 2) or `u^2 = u + lambda`
///   (characteristic 2, where the conjugate of `u` is `u + 1`).
pub fn make_division_super(
    case: usize,
    ring: &Ring,
    lambda: Option<&Scalar>,
) -> Result<SuperAlgebra> {
    let need_lambda = || -> Result<Scalar> {
        let l = lambda.ok_or_else(|| {
            Error::InvalidArgument(format!("division case {case} needs the parameter lambda"))
        })?;
        if l.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring.describe(),
                right: l.ring().describe(),
            });
        }
        if l.is_zero() {
            return Err(Error::InvalidArgument("lambda must be nonzero".into()));
        }
        Ok(l.clone())
    };
    match case {
        1 => {
            let mut b = AlgebraBuilder::new("D1", ring);
            b.basis_element("1", Parity::Even);
            b.set_product_int(0, 0, &[(0, 1)]);
            b.unit_basis(0);
            b.build()
        }
        2 => {
            let l = need_lambda()?;
            let mut b = AlgebraBuilder::new("D2", ring);
            let one = b.basis_element("1", Parity::Even);
            let u = b.basis_element("u", Parity::Odd);
            b.set_product_int(one, one, &[(one, 1)]);
            b.set_product_int(one, u, &[(u, 1)]);
            b.set_product_int(u, one, &[(u, 1)]);
            b.set_product(u, u, vec![(one, l)]);
            b.unit_basis(one);
            b.build()
        }
        3 => {
            if ring.characteristic() != 0 {
                return Err(Error::BadCharacteristic {
                    expected: "0".into(),
                    got: ring.characteristic(),
                });
            }
            let mut b = AlgebraBuilder::new("D3", ring);
            let one = b.basis_element("1", Parity::Even);
            let i = b.basis_element("i", Parity::Even);
            let j = b.basis_element("j", Parity::Odd);
            let k = b.basis_element("k", Parity::Odd);
            for t in [one, i, j, k] {
                b.set_product_int(one, t, &[(t, 1)]);
                if t != one {
                    b.set_product_int(t, one, &[(t, 1)]);
                }
            }
            b.set_product_int(i, i, &[(one, -1)]);
            b.set_product_int(j, j, &[(one, -1)]);
            b.set_product_int(k, k, &[(one, -1)]);
            b.set_product_int(i, j, &[(k, 1)]);
            b.set_product_int(j, i, &[(k, -1)]);
            b.set_product_int(j, k, &[(i, 1)]);
            b.set_product_int(k, j, &[(i, -1)]);
            b.set_product_int(k, i, &[(j, 1)]);
            b.set_product_int(i, k, &[(j, -1)]);
            b.unit_basis(one);
            b.build()
        }
        4 => {
            let l = need_lambda()?;
            let p = i64::from(ring.characteristic() == 2);
            let mut b = AlgebraBuilder::new("D4", ring);
            let one = b.basis_element("1", Parity::Even);
            let u = b.basis_element("u", Parity::Even);
            let w = b.basis_element("w", Parity::Odd);
            let uw = b.basis_element("uw", Parity::Odd);
            for t in [one, u, w, uw] {
                b.set_product_int(one, t, &[(t, 1)]);
                if t != one {
                    b.set_product_int(t, one, &[(t, 1)]);
                }
            }
            b.set_product(u, u, vec![(one, l.clone()), (u, Scalar::from_int(ring, p))]);
            b.set_product_int(u, w, &[(uw, 1)]);
            b.set_product(u, uw, vec![(w, l.clone()), (uw, Scalar::from_int(ring, p))]);
            if p == 0 {
                b.set_product_int(w, u, &[(uw, -1)]);
                b.set_product_int(w, uw, &[(u, -1)]);
            } else {
                b.set_product_int(w, u, &[(w, 1), (uw, 1)]);
                b.set_product_int(w, uw, &[(one, 1), (u, 1)]);
            }
            b.set_product_int(w, w, &[(one, 1)]);
            b.set_product(uw, u, vec![(w, -&l)]);
            b.set_product_int(uw, w, &[(u, 1)]);
            b.set_product(uw, uw, vec![(one, -&l)]);
            b.unit_basis(one);
            b.build()
        }
        _ => Err(Error::InvalidArgument(format!(
            "division case must be 1..=4, got {case}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::{check_identity, IdentitySpec};

    #[test]
    fn all_cases_are_associative() {
        let assoc = IdentitySpec::associativity();
        let q = Ring::rationals();
        let ql = Ring::new(0, &["lambda"]).unwrap();
        let l = Scalar::param(&ql, "lambda").unwrap();
        let f2l = Ring::new(2, &["lambda"]).unwrap();
        let l2 = Scalar::param(&f2l, "lambda").unwrap();
        for alg in [
            make_division_super(1, &q, None).unwrap(),
            make_division_super(2, &ql, Some(&l)).unwrap(),
            make_division_super(3, &q, None).unwrap(),
            make_division_super(4, &ql, Some(&l)).unwrap(),
            make_division_super(4, &f2l, Some(&l2)).unwrap(),
        ] {
            let report = check_identity(&alg, &assoc).unwrap();
            assert!(report.holds(), "{report}");
        }
    }

    #[test]
    fn gradings_and_guards() {
        let q = Ring::rationals();
        let quat = make_division_super(3, &q, None).unwrap();
        assert_eq!(quat.dim(), 4);
        assert_eq!(quat.even_indices().len(), 2);
        // ij = k with j, k odd and i even.
        let i = quat.basis_element(1);
        let j = quat.basis_element(2);
        assert_eq!(i.mul(&j).to_string(), "k");
        assert_eq!(j.mul(&i).to_string(), "-k");
        assert!(make_division_super(3, &Ring::gf(5).unwrap(), None).is_err());
        assert!(make_division_super(2, &q, None).is_err(), "lambda required");
        assert!(make_division_super(5, &q, None).is_err());
    }

    #[test]
    fn case4_squares() {
        // Characteristic 2: u^2 = u + lambda and the odd part squares to
        // units: w^2 = 1, (uw)^2 = lambda.
        let ring = Ring::new(2, &["lambda"]).unwrap();
        let l = Scalar::param(&ring, "lambda").unwrap();
        let alg = make_division_super(4, &ring, Some(&l)).unwrap();
        let u = alg.basis_element(1);
        let w = alg.basis_element(2);
        let uw = alg.basis_element(3);
        assert_eq!(u.mul(&u).to_string(), "lambda*1 + u");
        assert_eq!(w.mul(&w).to_string(), "1");
        assert_eq!(uw.mul(&uw).to_string(), "lambda*1");
        assert_eq!(u.mul(&w), uw);
    }
}
