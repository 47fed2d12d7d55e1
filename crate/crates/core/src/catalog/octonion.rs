//! The characteristic-2 octonion algebra with parameters `mu`, `beta`,
//! `gamma`, in two gradings: the split grading with even part spanned by
//! `1, e1, e2, e3` and odd part `e4..e7`, and the all-even (ungraded) form
//! used to build the 16-dimensional extension with an odd root `u`.
//!
//! The table is the doubling of the quaternion algebra generated by `e1`
//! (with `e1^2 = e1 + mu`) and `e2` (with `e2^2 = beta`, `e3 = e2 e1`) by
//! the odd-square parameter `gamma`; a test rebuilds it from the doubling
//! rules constant for constant.

use crate::algebra::{AlgebraBuilder, Parity, SuperAlgebra};
use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;

/// Corrections baked into the table relative to variants in circulation;
/// each is forced by the doubling construction and by the graded
/// alternative laws, which fail on the uncorrected entries.
pub const TABLE_NOTES: [&str; 3] = [
    "e3*e5 = mu*e6 + e7 (a variant prints alpha*e6 + e7; the doubling gives mu)",
    "e6*e7 = beta*gamma*(e1 + 1) (in characteristic 2 the variant beta*gamma*(e1 - 1) \
     is the same element; the sum form is canonical here)",
    "e7*e3 = mu*beta*e4 (a variant prints beta*gamma*e4; the doubling gives mu*beta, \
     and the graded alternative laws fail otherwise)",
];

fn build_table(
    name: &str,
    mu: &Scalar,
    beta: &Scalar,
    gamma: &Scalar,
    odd_top: bool,
) -> Result<SuperAlgebra> {
    let ring = mu.ring();
    for other in [beta, gamma] {
        if other.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring.describe(),
                right: other.ring().describe(),
            });
        }
    }
    if ring.characteristic() != 2 {
        return Err(Error::BadCharacteristic {
            expected: "2".into(),
            got: ring.characteristic(),
        });
    }
    if beta.is_zero() || gamma.is_zero() {
        return Err(Error::InvalidArgument(
            "the octonion parameters beta and gamma must be nonzero".into(),
        ));
    }
    let one = Scalar::one(ring);
    let mubeta = mu * beta;
    let mugamma = mu * gamma;
    let betagamma = beta * gamma;
    let mubetagamma = &mubeta * gamma;
    let mut b = AlgebraBuilder::new(name, ring);
    for (i, label) in ["1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"]
        .iter()
        .enumerate()
    {
        let parity = if odd_top && i >= 4 {
            Parity::Odd
        } else {
            Parity::Even
        };
        b.basis_element(label, parity);
    }
    let rows: [[&[(usize, &Scalar)]; 7]; 7] = [
        [
            &[(1, &one), (0, mu)],
            &[(2, &one), (3, &one)],
            &[(2, mu)],
            &[(4, &one), (5, &one)],
            &[(4, mu)],
            &[(7, &one)],
            &[(7, &one), (6, mu)],
        ],
        [
            &[(3, &one)],
            &[(0, beta)],
            &[(1, beta)],
            &[(6, &one)],
            &[(7, &one)],
            &[(4, beta)],
            &[(5, beta)],
        ],
        [
            &[(3, &one), (2, mu)],
            &[(0, beta), (1, beta)],
            &[(0, &mubeta)],
            &[(7, &one)],
            &[(6, mu), (7, &one)],
            &[(4, beta), (5, beta)],
            &[(4, &mubeta)],
        ],
        [
            &[(5, &one)],
            &[(6, &one)],
            &[(7, &one)],
            &[(0, gamma)],
            &[(1, gamma)],
            &[(2, gamma)],
            &[(3, gamma)],
        ],
        [
            &[(5, &one), (4, mu)],
            &[(7, &one)],
            &[(7, &one), (6, mu)],
            &[(0, gamma), (1, gamma)],
            &[(0, &mugamma)],
            &[(2, gamma), (3, gamma)],
            &[(2, &mugamma)],
        ],
        [
            &[(6, &one), (7, &one)],
            &[(4, beta)],
            &[(4, beta), (5, beta)],
            &[(2, gamma)],
            &[(2, gamma), (3, gamma)],
            &[(0, &betagamma)],
            &[(0, &betagamma), (1, &betagamma)],
        ],
        [
            &[(6, mu)],
            &[(5, beta)],
            &[(4, &mubeta)],
            &[(3, gamma)],
            &[(2, &mugamma)],
            &[(1, &betagamma)],
            &[(0, &mubetagamma)],
        ],
    ];
    for i in 0..8 {
        b.set_product_int(0, i, &[(i, 1)]);
        if i > 0 {
            b.set_product_int(i, 0, &[(i, 1)]);
        }
    }
    for (i, row) in rows.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            let value: Vec<(usize, Scalar)> = entry
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (*k, (*c).clone()))
                .collect();
            b.set_product(i + 1, j + 1, value);
        }
    }
    b.unit_basis(0);
    b.build()
}

/// The graded octonion table: even part `1, e1, e2, e3`, odd part
/// `e4..e7`. Requires characteristic 2 and nonzero `beta`, `gamma`.
pub fn make_octonion_super(mu: &Scalar, beta: &Scalar, gamma: &Scalar) -> Result<SuperAlgebra> {
    build_table("O(mu,beta,gamma)", mu, beta, gamma, true)
}

/// The same table with every basis element even.
pub fn make_octonion_ungraded(
    mu: &Scalar,
    beta: &Scalar,
    gamma: &Scalar,
) -> Result<SuperAlgebra> {
    build_table("O(mu,beta,gamma) ungraded", mu, beta, gamma, false)
}

/// The 16-dimensional extension `O + O u` of the all-even octonion table by
/// an odd root with `u^2 = alpha != 0`.
pub fn make_octonion_u(
    mu: &Scalar,
    beta: &Scalar,
    gamma: &Scalar,
    alpha: &Scalar,
) -> Result<SuperAlgebra> {
    make_octonion_ungraded(mu, beta, gamma)?.adjoin_root(alpha, Parity::Odd, "u")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Element;
    use crate::identity::{check_identity, IdentitySpec};
    use crate::ring::Ring;

    fn params() -> (Scalar, Scalar, Scalar) {
        let ring = Ring::new(2, &["mu", "beta", "gamma"]).unwrap();
        (
            Scalar::param(&ring, "mu").unwrap(),
            Scalar::param(&ring, "beta").unwrap(),
            Scalar::param(&ring, "gamma").unwrap(),
        )
    }

    /// The even subalgebra generated by e1, e2: explicit 4x4 table.
    fn quaternion_char2(mu: &Scalar, beta: &Scalar) -> SuperAlgebra {
        let ring = mu.ring();
        let one = Scalar::one(ring);
        let mubeta = mu * beta;
        let mut b = AlgebraBuilder::new("H", ring);
        for label in ["1", "e1", "e2", "e3"] {
            b.basis_element(label, Parity::Even);
        }
        for i in 0..4 {
            b.set_product_int(0, i, &[(i, 1)]);
            if i > 0 {
                b.set_product_int(i, 0, &[(i, 1)]);
            }
        }
        let rows: [[&[(usize, &Scalar)]; 3]; 3] = [
            [&[(1, &one), (0, mu)], &[(2, &one), (3, &one)], &[(2, mu)]],
            [&[(3, &one)], &[(0, beta)], &[(1, beta)]],
            [
                &[(3, &one), (2, mu)],
                &[(0, beta), (1, beta)],
                &[(0, &mubeta)],
            ],
        ];
        for (i, row) in rows.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let value: Vec<(usize, Scalar)> =
                    entry.iter().map(|(k, c)| (*k, (*c).clone())).collect();
                b.set_product(i + 1, j + 1, value);
            }
        }
        b.unit_basis(0);
        b.build().unwrap()
    }

    /// Conjugation on the quaternion part: fixes 1 <-> traces, sends
    /// e1 -> e1 + 1, fixes e2 and e3 (characteristic 2).
    fn conj(h: &SuperAlgebra, x: &Element) -> Element {
        let c = x.coords();
        let mut out = c.to_vec();
        out[0] = &c[0] + &c[1];
        h.element(out)
    }

    #[test]
    fn doubling_oracle_matches_table() {
        let (mu, beta, gamma) = params();
        let h = quaternion_char2(&mu, &beta);
        assert!(check_identity(&h, &IdentitySpec::associativity())
            .unwrap()
            .holds());
        let o = make_octonion_super(&mu, &beta, &gamma).unwrap();
        // Pairs (a, s): the basis vector a of H, and whether the factor
        // carries a leading v (s = 1 for e4..e7).
        let part = |i: usize| (h.basis_element(i % 4), i / 4);
        for i in 0..8 {
            for j in 0..8 {
                let (a, sa) = part(i);
                let (b, sb) = part(j);
                // (a)(b) = ab | (a)(vb) = v(conj(a) b)
                // (va)(b) = v(ba) | (va)(vb) = gamma (b conj(a))
                let (hval, out_v) = match (sa, sb) {
                    (0, 0) => (a.mul(&b), 0),
                    (0, 1) => (conj(&h, &a).mul(&b), 1),
                    (1, 0) => (b.mul(&a), 1),
                    _ => (b.mul(&conj(&h, &a)).scale(&gamma), 0),
                };
                let mut coords = vec![Scalar::zero(o.ring()); 8];
                for (k, c) in hval.coords().iter().enumerate() {
                    coords[k + 4 * out_v] = c.clone();
                }
                let expected = o.element(coords);
                let got = o.basis_element(i).mul(&o.basis_element(j));
                assert_eq!(
                    got.coords(),
                    expected.coords(),
                    "entry e{i} * e{j}: table {got}, doubling {expected}"
                );
            }
        }
    }

    #[test]
    fn graded_table_shape() {
        let (mu, beta, gamma) = params();
        let o = make_octonion_super(&mu, &beta, &gamma).unwrap();
        assert_eq!(o.dim(), 8);
        assert_eq!(o.even_indices(), vec![0, 1, 2, 3]);
        assert_eq!(o.odd_indices(), vec![4, 5, 6, 7]);
        assert!(o.unit_element().is_some());
        let ungraded = make_octonion_ungraded(&mu, &beta, &gamma).unwrap();
        assert!(ungraded.odd_indices().is_empty());
        // Zero beta or gamma is refused, zero mu is fine.
        let zero = Scalar::zero(mu.ring());
        assert!(make_octonion_super(&mu, &zero, &gamma).is_err());
        assert!(make_octonion_super(&zero, &beta, &gamma).is_ok());
        // The grading and the characteristic are enforced.
        let ring3 = Ring::new(3, &["mu", "beta", "gamma"]).unwrap();
        let m3 = Scalar::param(&ring3, "mu").unwrap();
        let b3 = Scalar::param(&ring3, "beta").unwrap();
        let g3 = Scalar::param(&ring3, "gamma").unwrap();
        assert!(matches!(
            make_octonion_super(&m3, &b3, &g3),
            Err(Error::BadCharacteristic { got: 3, .. })
        ));
    }

    #[test]
    fn corrected_entries_are_forced_by_alternativity() {
        let (mu, beta, gamma) = params();
        let o = make_octonion_super(&mu, &beta, &gamma).unwrap();
        for spec in [IdentitySpec::left_alternative(), IdentitySpec::right_alternative()] {
            let report = check_identity(&o, &spec).unwrap();
            assert!(report.holds(), "{report}");
        }
        // Rebuild with the uncorrected e7*e3 = beta*gamma*e4 and watch the
        // left alternative law fail.
        let ring = mu.ring();
        let mut b = AlgebraBuilder::new("variant", ring);
        for i in 0..8 {
            b.basis_element(o.basis_name(i), o.parity(i));
        }
        for i in 0..8 {
            for j in 0..8 {
                let value = if (i, j) == (7, 3) {
                    vec![(4, &beta * &gamma)]
                } else {
                    o.product_of_basis(i, j).to_vec()
                };
                b.set_product(i, j, value);
            }
        }
        b.unit_basis(0);
        let variant = b.build().unwrap();
        let report = check_identity(&variant, &IdentitySpec::left_alternative()).unwrap();
        assert!(!report.holds(), "the uncorrected entry should break alt-left");
    }

    #[test]
    fn extension_by_odd_root() {
        let ring = Ring::new(2, &["mu", "beta", "gamma", "alpha"]).unwrap();
        let mu = Scalar::param(&ring, "mu").unwrap();
        let beta = Scalar::param(&ring, "beta").unwrap();
        let gamma = Scalar::param(&ring, "gamma").unwrap();
        let alpha = Scalar::param(&ring, "alpha").unwrap();
        let ou = make_octonion_u(&mu, &beta, &gamma, &alpha).unwrap();
        assert_eq!(ou.dim(), 16);
        assert_eq!(ou.even_indices().len(), 8);
        assert_eq!(ou.basis_name(8), "1u");
        // u^2 = alpha: the adjoined root is basis 8 (image of 1).
        let u = ou.basis_element(8);
        let sq = u.mul(&u);
        assert_eq!(sq.to_string(), format!("alpha*1"));
        assert!(make_octonion_u(&mu, &beta, &gamma, &Scalar::zero(&ring)).is_err());
    }
}
