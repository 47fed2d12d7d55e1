//! The exceptional characteristic-3 alternative superalgebras: the
//! 3-dimensional `B(1,2)`, the 6-dimensional `B(4,2)`, and the twisted
//! truncated-polynomial family `B(Gamma, gamma)`.

use crate::algebra::{AlgebraBuilder, Parity, SuperAlgebra};
use crate::error::Error;
use crate::ring::Ring;
use crate::scalar::Scalar;
use crate::Result;

fn require_char3(ring: &Ring) -> Result<()> {
    if ring.characteristic() != 3 {
        return Err(Error::BadCharacteristic {
            expected: "3".into(),
            got: ring.characteristic(),
        });
    }
    Ok(())
}

/// `B(1,2)`: unit plus two odd elements with `xy = 1`, `yx = -1`,
/// `x^2 = y^2 = 0`. Characteristic 3 only.
pub fn make_b12(ring: &Ring) -> Result<SuperAlgebra> {
    require_char3(ring)?;
    let mut b = AlgebraBuilder::new("B(1,2)", ring);
    let one = b.basis_element("1", Parity::Even);
    let x = b.basis_element("x", Parity::Odd);
    let y = b.basis_element("y", Parity::Odd);
    for i in [one, x, y] {
        b.set_product_int(one, i, &[(i, 1)]);
        b.set_product_int(i, one, &[(i, 1)]);
    }
    b.set_product_int(x, y, &[(one, 1)]);
    b.set_product_int(y, x, &[(one, -1)]);
    b.unit_basis(one);
    b.build()
}

/// `B(4,2)`: the 2x2 matrices as even part acting on a two-dimensional odd
/// space, `e_ij . m_k = delta_ik m_j` from the left and through the
/// symplectic involution from the right, with `m1^2 = -e21`, `m2^2 = e12`,
/// `m1 m2 = e11`, `m2 m1 = -e22`. Characteristic 3 only.
pub fn make_b42(ring: &Ring) -> Result<SuperAlgebra> {
    require_char3(ring)?;
    let mut b = AlgebraBuilder::new("B(4,2)", ring);
    // Even basis e[i][j] at index 2*i + j; odd m1, m2 at 4, 5.
    for i in 1..=2 {
        for j in 1..=2 {
            b.basis_element(&format!("e{i}{j}"), Parity::Even);
        }
    }
    let m = [b.basis_element("m1", Parity::Odd), b.basis_element("m2", Parity::Odd)];
    let e = |i: usize, j: usize| 2 * (i - 1) + (j - 1);
    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                for l in 1..=2 {
                    if j == k {
                        b.set_product_int(e(i, j), e(k, l), &[(e(i, l), 1)]);
                    }
                }
            }
        }
    }
    // Left action e_ij . m_k = delta_ik m_j.
    for i in 1..=2 {
        for j in 1..=2 {
            b.set_product_int(e(i, j), m[i - 1], &[(m[j - 1], 1)]);
        }
    }
    // Right action m . a = abar . m with the symplectic involution
    // e11 -> e22, e22 -> e11, e12 -> -e12, e21 -> -e21.
    // m_k . e_ij = sign(e_ij) * e_{bar(i)bar(j)} . m_k written out:
    //   m_k . e11 = e22 . m_k, m_k . e22 = e11 . m_k,
    //   m_k . e12 = -e12 . m_k, m_k . e21 = -e21 . m_k.
    for k in 0..2 {
        // e22 . m_k = delta_2,k+1 m_2 etc., expanded per the left action.
        let left = |i: usize, j: usize, k: usize| -> Vec<(usize, i64)> {
            if i == k + 1 {
                vec![(m[j - 1], 1)]
            } else {
                vec![]
            }
        };
        let neg = |v: Vec<(usize, i64)>| v.into_iter().map(|(t, c)| (t, -c)).collect::<Vec<_>>();
        b.set_product_int(m[k], e(1, 1), &left(2, 2, k));
        b.set_product_int(m[k], e(2, 2), &left(1, 1, k));
        b.set_product_int(m[k], e(1, 2), &neg(left(1, 2, k)));
        b.set_product_int(m[k], e(2, 1), &neg(left(2, 1, k)));
    }
    b.set_product_int(m[0], m[0], &[(e(2, 1), -1)]);
    b.set_product_int(m[1], m[1], &[(e(1, 2), 1)]);
    b.set_product_int(m[0], m[1], &[(e(1, 1), 1)]);
    b.set_product_int(m[1], m[0], &[(e(2, 2), -1)]);
    b.detect_unit();
    b.build()
}

/// `B(Gamma(3), gamma)`: even part the truncated polynomials `k[x]/(x^3)`,
/// odd part a second copy written with a trailing `b`, with
/// `x^i b * x^j b = gamma x^(i+j) + (2i+j) x^(i+j-1)` (powers >= 3 drop)
/// and mixed products `(x^i)(x^j b) = (x^i b)(x^j) = x^(i+j) b`. Only
/// truncation degree 3 is supported; characteristic 3 only.
pub fn make_b_gamma(trunc_degree: usize, gamma: &Scalar) -> Result<SuperAlgebra> {
    let ring = gamma.ring();
    require_char3(ring)?;
    if trunc_degree != 3 {
        return Err(Error::UnsatisfiableConstraints(format!(
            "only truncation degree 3 is supported, got {trunc_degree}"
        )));
    }
    let n = trunc_degree;
    let mut b = AlgebraBuilder::new("B(Gamma(3),gamma)", ring);
    let even_label = |i: usize| match i {
        0 => "1".to_string(),
        1 => "x".to_string(),
        i => format!("x{i}"),
    };
    for i in 0..n {
        b.basis_element(&even_label(i), Parity::Even);
    }
    for i in 0..n {
        b.basis_element(&format!("{}b", even_label(i)), Parity::Odd);
    }
    // Even times even, and the mixed products.
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                b.set_product_int(i, j, &[(i + j, 1)]);
                b.set_product_int(i, n + j, &[(n + i + j, 1)]);
                b.set_product_int(n + i, j, &[(n + i + j, 1)]);
            }
        }
    }
    // Odd times odd lands in the even part.
    for i in 0..n {
        for j in 0..n {
            let mut entry: Vec<(usize, Scalar)> = Vec::new();
            if i + j < n {
                entry.push((i + j, gamma.clone()));
            }
            if i + j >= 1 && i + j - 1 < n {
                let c = Scalar::from_int(ring, (2 * i + j) as i64);
                if !c.is_zero() {
                    entry.push((i + j - 1, c));
                }
            }
            b.set_product(n + i, n + j, entry);
        }
    }
    b.unit_basis(0);
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::{check_identity, IdentitySpec};

    #[test]
    fn b12_shape_and_alternativity() {
        let ring = Ring::gf(3).unwrap();
        let alg = make_b12(&ring).unwrap();
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.odd_indices().len(), 2);
        assert!(check_identity(&alg, &IdentitySpec::left_alternative()).unwrap().holds());
        assert!(check_identity(&alg, &IdentitySpec::right_alternative()).unwrap().holds());
        assert!(make_b12(&Ring::gf(5).unwrap()).is_err());
    }

    #[test]
    fn b42_shape_and_alternativity() {
        let ring = Ring::gf(3).unwrap();
        let alg = make_b42(&ring).unwrap();
        assert_eq!(alg.dim(), 6);
        assert_eq!(alg.even_indices().len(), 4);
        let unit = alg.unit_element().expect("e11 + e22 is the unit");
        assert_eq!(unit.to_string(), "e11 + e22");
        // Sample products from the bimodule action.
        let m1 = alg.basis_element(4);
        let e12 = alg.basis_element(1);
        assert_eq!(e12.mul(&m1).to_string(), "m2");
        assert_eq!(m1.mul(&e12).to_string(), "2*m2", "-m2 over GF(3)");
        assert!(check_identity(&alg, &IdentitySpec::left_alternative()).unwrap().holds());
        assert!(check_identity(&alg, &IdentitySpec::right_alternative()).unwrap().holds());
        // Not associative: that is the point of the family.
        assert!(!check_identity(&alg, &IdentitySpec::associativity()).unwrap().holds());
    }

    #[test]
    fn b_gamma_table_matches_the_derivation_formula() {
        let ring = Ring::new(3, &["g"]).unwrap();
        let gamma = Scalar::param(&ring, "g").unwrap();
        let alg = make_b_gamma(3, &gamma).unwrap();
        assert_eq!(alg.dim(), 6);
        assert!(alg.unit_element().is_some());
        let onebar = alg.basis_element(3);
        let xbar = alg.basis_element(4);
        let x2bar = alg.basis_element(5);
        assert_eq!(onebar.mul(&xbar).to_string(), "1 + g*x");
        assert_eq!(xbar.mul(&onebar).to_string(), "2*1 + g*x");
        assert_eq!(xbar.mul(&x2bar).to_string(), "x2");
        assert_eq!(x2bar.mul(&xbar).to_string(), "2*x2");
        assert_eq!(x2bar.mul(&x2bar).to_string(), "0");
        assert!(check_identity(&alg, &IdentitySpec::left_alternative()).unwrap().holds());
        assert!(check_identity(&alg, &IdentitySpec::right_alternative()).unwrap().holds());
        assert!(make_b_gamma(4, &gamma).is_err());
    }
}
