//! The simple Jordan superalgebra families: symmetrized matrix algebras
//! `M_{n,m}^+`, the doubled matrices `Q_n`, the transpose-symmetric family
//! `P_n`, the orthosymplectic hermitian family `osp(n,2m)`, the
//! one-parameter family `D_t`, the superalgebra of a supersymmetric bilinear
//! form, and two exceptional hermitian 3x3 families.

use crate::algebra::{AlgebraBuilder, Element, Parity, SuperAlgebra};
use crate::catalog::{checkerboard, make_b42, matrix_superalgebra};
use crate::error::Error;
use crate::ring::Ring;
use crate::scalar::Scalar;
use crate::Result;

/// `M_{n,m}^+`: the checkerboard matrix superalgebra under the
/// supersymmetrized product. Characteristic 2 is refused (the product
/// halves).
pub fn make_jordan_mnm(ring: &Ring, n: usize, m: usize) -> Result<SuperAlgebra> {
    checkerboard(ring, n, m)?.plus_algebra()
}

/// `Q_n`: two copies of the `n x n` matrices, the second one odd (written
/// with a trailing `b`), with the symmetrized product on matching copies
/// and the halved commutator on the odd-odd products.
pub fn make_jordan_qn(ring: &Ring, n: usize) -> Result<SuperAlgebra> {
    if n == 0 {
        return Err(Error::InvalidArgument("Q_n needs n >= 1".into()));
    }
    let half = Scalar::half(ring)?;
    let d = n * n;
    let mut b = AlgebraBuilder::new(&format!("Q{n}"), ring);
    for bar in ["", "b"] {
        for i in 1..=n {
            for j in 1..=n {
                b.basis_element(
                    &format!("e{i}{j}{bar}"),
                    if bar.is_empty() { Parity::Even } else { Parity::Odd },
                );
            }
        }
    }
    let at = |i: usize, j: usize| (i - 1) * n + (j - 1);
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let mut terms: Vec<(usize, Scalar)> = Vec::new();
                    let mut push = |t: usize, c: &Scalar| {
                        if let Some(slot) = terms.iter_mut().find(|(u, _)| *u == t) {
                            slot.1 = &slot.1 + c;
                        } else {
                            terms.push((t, c.clone()));
                        }
                    };
                    if j == k {
                        push(at(i, l), &half);
                    }
                    if l == i {
                        push(at(k, j), &half);
                    }
                    let even: Vec<(usize, Scalar)> =
                        terms.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
                    let bar: Vec<(usize, Scalar)> =
                        even.iter().map(|(t, c)| (t + d, c.clone())).collect();
                    b.set_product(at(i, j), at(k, l), even);
                    b.set_product(at(i, j), at(k, l) + d, bar.clone());
                    b.set_product(at(i, j) + d, at(k, l), bar);
                    // Odd times odd: the halved commutator lands even.
                    let mut anti: Vec<(usize, Scalar)> = Vec::new();
                    let mut push = |t: usize, c: Scalar| {
                        if let Some(slot) = anti.iter_mut().find(|(u, _)| *u == t) {
                            slot.1 = &slot.1 + &c;
                        } else {
                            anti.push((t, c));
                        }
                    };
                    if j == k {
                        push(at(i, l), half.clone());
                    }
                    if l == i {
                        push(at(k, j), -&half);
                    }
                    anti.retain(|(_, c)| !c.is_zero());
                    b.set_product(at(i, j) + d, at(k, l) + d, anti);
                }
            }
        }
    }
    let mut unit = vec![Scalar::zero(ring); 2 * d];
    for i in 1..=n {
        unit[at(i, i)] = Scalar::one(ring);
    }
    b.unit(unit);
    b.build()
}

/// `P_n` (`n >= 2`): the subalgebra of `M_{n,n}^+` spanned by the
/// transpose-paired even matrices `a_ij` and the odd symmetric (`h`) and
/// skew (`s`) families.
pub fn make_jordan_pn(ring: &Ring, n: usize) -> Result<SuperAlgebra> {
    if n < 2 {
        return Err(Error::InvalidArgument("P_n needs n >= 2".into()));
    }
    let plus = checkerboard(ring, n, n)?.plus_algebra()?;
    let size = 2 * n;
    let e = |p: usize, q: usize| plus.basis_element((p - 1) * size + (q - 1));
    let mut span: Vec<(String, Element)> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            span.push((format!("a{i}{j}"), &e(i, j) + &e(n + j, n + i)));
        }
    }
    for i in 1..=n {
        for j in i..=n {
            let v = if i == j {
                e(n + i, i)
            } else {
                &e(n + i, j) + &e(n + j, i)
            };
            span.push((format!("h{i}{j}"), v));
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            span.push((format!("s{i}{j}"), &e(i, n + j) - &e(j, n + i)));
        }
    }
    plus.subalgebra_on_span(&format!("P{n}"), &span)
}

/// `osp(n, 2m)` (`n, m >= 1`): the hermitian subalgebra of `M_{n,2m}^+`
/// fixed by the orthosymplectic structure, spanned by symmetric `a` blocks,
/// skew-hamiltonian `c` blocks, and the odd `b1`/`b2` pairs.
pub fn make_jordan_osp(ring: &Ring, n: usize, m: usize) -> Result<SuperAlgebra> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument("osp(n,2m) needs n, m >= 1".into()));
    }
    let plus = checkerboard(ring, n, 2 * m)?.plus_algebra()?;
    let size = n + 2 * m;
    let e = |p: usize, q: usize| plus.basis_element((p - 1) * size + (q - 1));
    let mut span: Vec<(String, Element)> = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            let v = if i == j { e(i, i) } else { &e(i, j) + &e(j, i) };
            span.push((format!("a{i}{j}"), v));
        }
    }
    for i in 1..=m {
        for j in 1..=m {
            span.push((
                format!("c1_{i}{j}"),
                &e(n + i, n + j) + &e(n + m + j, n + m + i),
            ));
        }
    }
    for i in 1..=m {
        for j in (i + 1)..=m {
            span.push((
                format!("c2_{i}{j}"),
                &e(n + i, n + m + j) - &e(n + j, n + m + i),
            ));
            span.push((
                format!("c3_{i}{j}"),
                &e(n + m + i, n + j) - &e(n + m + j, n + i),
            ));
        }
    }
    for i in 1..=n {
        for j in 1..=m {
            span.push((format!("b1_{i}{j}"), &e(i, n + j) + &e(n + m + j, i)));
            span.push((format!("b2_{i}{j}"), &e(i, n + m + j) - &e(n + j, i)));
        }
    }
    plus.subalgebra_on_span(&format!("osp({n},{})", 2 * m), &span)
}

/// `D_t`: two even idempotents acting by one half on a two-dimensional odd
/// part, with `x o y = e1 + t e2`. Unital with unit `e1 + e2`.
pub fn make_jordan_dt(t: &Scalar) -> Result<SuperAlgebra> {
    let ring = t.ring();
    let half = Scalar::half(ring)?;
    let mut b = AlgebraBuilder::new("D_t", ring);
    let e1 = b.basis_element("e1", Parity::Even);
    let e2 = b.basis_element("e2", Parity::Even);
    let x = b.basis_element("x", Parity::Odd);
    let y = b.basis_element("y", Parity::Odd);
    b.set_product_int(e1, e1, &[(e1, 1)]);
    b.set_product_int(e2, e2, &[(e2, 1)]);
    for odd in [x, y] {
        for even in [e1, e2] {
            b.set_product(even, odd, vec![(odd, half.clone())]);
            b.set_product(odd, even, vec![(odd, half.clone())]);
        }
    }
    b.set_product(x, y, vec![(e1, Scalar::one(ring)), (e2, t.clone())]);
    b.set_product(y, x, vec![(e1, -&Scalar::one(ring)), (e2, -t)]);
    let mut unit = vec![Scalar::zero(ring); 4];
    unit[0] = Scalar::one(ring);
    unit[1] = Scalar::one(ring);
    b.unit(unit);
    b.build()
}

/// The Jordan superalgebra of a supersymmetric bilinear form: a unit `e`,
/// even vectors `v_i` with `v_i o v_i = alpha_i e`, and odd vectors paired
/// two by two with `g_{2i-1} o g_{2i} = beta_i e = -g_{2i} o g_{2i-1}`.
pub fn make_jordan_superform(
    ring: &Ring,
    alphas: &[Scalar],
    betas: &[Scalar],
) -> Result<SuperAlgebra> {
    for s in alphas.iter().chain(betas) {
        if s.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring.describe(),
                right: s.ring().describe(),
            });
        }
    }
    let n = alphas.len();
    let m = betas.len();
    let mut b = AlgebraBuilder::new(&format!("J(form {n}|{})", 2 * m), ring);
    let e = b.basis_element("e", Parity::Even);
    for i in 1..=n {
        b.basis_element(&format!("v{i}"), Parity::Even);
    }
    for i in 1..=(2 * m) {
        b.basis_element(&format!("g{i}"), Parity::Odd);
    }
    let dim = 1 + n + 2 * m;
    for i in 0..dim {
        b.set_product_int(e, i, &[(i, 1)]);
        if i != e {
            b.set_product_int(i, e, &[(i, 1)]);
        }
    }
    for (i, alpha) in alphas.iter().enumerate() {
        b.set_product(1 + i, 1 + i, vec![(e, alpha.clone())]);
    }
    for (i, beta) in betas.iter().enumerate() {
        let g1 = 1 + n + 2 * i;
        let g2 = g1 + 1;
        b.set_product(g1, g2, vec![(e, beta.clone())]);
        b.set_product(g2, g1, vec![(e, -beta)]);
    }
    b.unit_basis(e);
    b.build()
}

type M3 = [[i64; 3]; 3];

fn m3_mul(a: &M3, b: &M3) -> M3 {
    let mut out = [[0i64; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn m3_sym(a: &M3, b: &M3) -> M3 {
    let ab = m3_mul(a, b);
    let ba = m3_mul(b, a);
    let mut out = [[0i64; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = ab[i][j] + ba[i][j];
        }
    }
    out
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// The 12-dimensional exceptional family: symmetric 3x3 matrices as even
/// part acting on two odd copies `p`, `q` of the skew 3x3 matrices; products
/// inside one odd copy vanish, and `p o q` falls back into the even part
/// through the symmetrized matrix product.
pub fn make_jordan_jp3(ring: &Ring) -> Result<SuperAlgebra> {
    let half = Scalar::half(ring)?;
    let mut b = AlgebraBuilder::new("JP3", ring);
    for i in 1..=3 {
        b.basis_element(&format!("f{i}{i}"), Parity::Even);
    }
    for (i, j) in PAIRS {
        b.basis_element(&format!("h{}{}", i + 1, j + 1), Parity::Even);
    }
    for family in ["p", "q"] {
        for (i, j) in PAIRS {
            b.basis_element(&format!("{family}{}{}", i + 1, j + 1), Parity::Odd);
        }
    }
    // Matrix pictures: f_ii and h_ij symmetric, s_ij = E_ij - E_ji skew.
    let mut sym_rep: Vec<M3> = Vec::new();
    for i in 0..3 {
        let mut m = [[0i64; 3]; 3];
        m[i][i] = 1;
        sym_rep.push(m);
    }
    for (i, j) in PAIRS {
        let mut m = [[0i64; 3]; 3];
        m[i][j] = 1;
        m[j][i] = 1;
        sym_rep.push(m);
    }
    let skew_rep: Vec<M3> = PAIRS
        .iter()
        .map(|&(i, j)| {
            let mut m = [[0i64; 3]; 3];
            m[i][j] = 1;
            m[j][i] = -1;
            m
        })
        .collect();
    let scale = |terms: Vec<(usize, i64)>, s: &Scalar| -> Vec<(usize, Scalar)> {
        terms
            .into_iter()
            .map(|(t, c)| (t, s.scale_int(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    };
    let decompose_sym = |m: &M3| -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for i in 0..3 {
            if m[i][i] != 0 {
                out.push((i, m[i][i]));
            }
        }
        for (t, &(i, j)) in PAIRS.iter().enumerate() {
            debug_assert_eq!(m[i][j], m[j][i]);
            if m[i][j] != 0 {
                out.push((3 + t, m[i][j]));
            }
        }
        out
    };
    let decompose_skew = |m: &M3, base: usize| -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for (t, &(i, j)) in PAIRS.iter().enumerate() {
            debug_assert_eq!(m[i][j], -m[j][i]);
            if m[i][j] != 0 {
                out.push((base + t, m[i][j]));
            }
        }
        out
    };
    // Even times even.
    for i in 0..6 {
        for j in 0..6 {
            let s = m3_sym(&sym_rep[i], &sym_rep[j]);
            b.set_product(i, j, scale(decompose_sym(&s), &half));
        }
    }
    // Even action on each odd copy (the same in both orders).
    for i in 0..6 {
        for copy in 0..2 {
            let base = 6 + 3 * copy;
            for (t, skew) in skew_rep.iter().enumerate() {
                let s = m3_sym(&sym_rep[i], skew);
                let entry = scale(decompose_skew(&s, base), &half);
                b.set_product(i, base + t, entry.clone());
                b.set_product(base + t, i, entry);
            }
        }
    }
    // p o q lands in the even part; q o p is its negative; p o p = q o q = 0.
    for (t1, s1) in skew_rep.iter().enumerate() {
        for (t2, s2) in skew_rep.iter().enumerate() {
            let s = m3_sym(s1, s2);
            let entry = scale(decompose_sym(&s), &half);
            let neg: Vec<(usize, Scalar)> =
                entry.iter().map(|(t, c)| (*t, -c)).collect();
            b.set_product(6 + t1, 9 + t2, entry);
            b.set_product(9 + t2, 6 + t1, neg);
        }
    }
    let mut unit = vec![Scalar::zero(ring); 12];
    for slot in unit.iter_mut().take(3) {
        *slot = Scalar::one(ring);
    }
    b.unit(unit);
    b.build()
}

/// The 21-dimensional exceptional hermitian family over the characteristic-3
/// algebra `B(4,2)`: inside the supersymmetrized 3x3 matrices over `B(4,2)`,
/// the span of the diagonal unit cells `d_i` and, for each upper cell
/// `(i,j)` and `B(4,2)` basis vector `b`, the hermitian combination
/// `E_ij (x) b + E_ji (x) b*` for the symplectic superinvolution `*`.
pub fn make_jordan_h3b42(ring: &Ring) -> Result<SuperAlgebra> {
    let inner = make_b42(ring)?;
    let ambient = matrix_superalgebra(&inner, 3)?;
    let plus = ambient.plus_algebra()?;
    let d = inner.dim();
    let cell = |p: usize, q: usize, t: usize| plus.basis_element((p * 3 + q) * d + t);
    // b* for b in e11, e12, e21, e22, m1, m2.
    let star: [(usize, i64); 6] = [(3, 1), (1, -1), (2, -1), (0, 1), (4, -1), (5, -1)];
    let mut span: Vec<(String, Element)> = Vec::new();
    for i in 0..3 {
        span.push((format!("d{}", i + 1), &cell(i, i, 0) + &cell(i, i, 3)));
    }
    for (i, j) in PAIRS {
        for t in 0..d {
            let (ts, sign) = star[t];
            let mirror = cell(j, i, ts).scale_int(sign);
            span.push((
                format!("{}_{}{}", inner.basis_name(t), i + 1, j + 1),
                &cell(i, j, t) + &mirror,
            ));
        }
    }
    plus.subalgebra_on_span("H3(B(4,2))", &span)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::scalar_algebra;
    use crate::identity::{check_identity, IdentitySpec};

    #[test]
    fn qn_matches_the_doubled_matrix_oracle() {
        let ring = Ring::rationals();
        let q2 = make_jordan_qn(&ring, 2).unwrap();
        let m2 = matrix_superalgebra(&scalar_algebra(&ring), 2).unwrap();
        let oracle = m2
            .adjoin_root(&Scalar::one(&ring), Parity::Odd, "b")
            .unwrap()
            .plus_algebra()
            .unwrap();
        assert_eq!(q2.dim(), oracle.dim());
        for i in 0..q2.dim() {
            assert_eq!(q2.basis_name(i), oracle.basis_name(i));
            assert_eq!(q2.parity(i), oracle.parity(i));
            for j in 0..q2.dim() {
                assert_eq!(
                    q2.product_of_basis(i, j),
                    oracle.product_of_basis(i, j),
                    "entry ({i},{j})"
                );
            }
        }
        assert!(check_identity(&q2, &IdentitySpec::supercommutativity())
            .unwrap()
            .holds());
    }

    #[test]
    fn pn_and_osp_close_with_the_right_shapes() {
        let ring = Ring::rationals();
        let p2 = make_jordan_pn(&ring, 2).unwrap();
        assert_eq!(p2.dim(), 8);
        assert_eq!(p2.even_indices().len(), 4);
        assert!(p2.unit_element().is_some());
        let osp12 = make_jordan_osp(&ring, 1, 1).unwrap();
        assert_eq!(osp12.dim(), 4);
        assert_eq!(osp12.even_indices().len(), 2);
        let osp22 = make_jordan_osp(&ring, 2, 1).unwrap();
        assert_eq!(osp22.dim(), 8);
        assert_eq!(osp22.even_indices().len(), 4);
        assert!(make_jordan_pn(&ring, 1).is_err());
        assert!(make_jordan_osp(&ring, 0, 1).is_err());
    }

    #[test]
    fn dt_and_superform_tables() {
        let ring = Ring::new(0, &["t"]).unwrap();
        let t = Scalar::param(&ring, "t").unwrap();
        let dt = make_jordan_dt(&t).unwrap();
        assert_eq!(dt.dim(), 4);
        let x = dt.basis_element(2);
        let y = dt.basis_element(3);
        assert_eq!(x.mul(&y).to_string(), "e1 + t*e2");
        assert_eq!(dt.unit_element().unwrap().to_string(), "e1 + e2");

        let fring = Ring::new(0, &["a1", "a2", "b1"]).unwrap();
        let alphas = [
            Scalar::param(&fring, "a1").unwrap(),
            Scalar::param(&fring, "a2").unwrap(),
        ];
        let betas = [Scalar::param(&fring, "b1").unwrap()];
        let j = make_jordan_superform(&fring, &alphas, &betas).unwrap();
        assert_eq!(j.dim(), 5);
        let g1 = j.basis_element(3);
        let g2 = j.basis_element(4);
        assert_eq!(g1.mul(&g2).to_string(), "b1*e");
        assert_eq!(g2.mul(&g1).to_string(), "-b1*e");
        assert_eq!(g1.mul(&g1).to_string(), "0");
        let v1 = j.basis_element(1);
        assert_eq!(v1.mul(&v1).to_string(), "a1*e");
    }

    #[test]
    fn jp3_products() {
        let ring = Ring::rationals();
        let j = make_jordan_jp3(&ring).unwrap();
        assert_eq!(j.dim(), 12);
        assert_eq!(j.even_indices().len(), 6);
        let h12 = j.basis_element(3);
        assert_eq!(h12.mul(&h12).to_string(), "f11 + f22");
        let p12 = j.basis_element(6);
        let q12 = j.basis_element(9);
        assert_eq!(p12.mul(&q12).to_string(), "-f11 - f22");
        assert_eq!(q12.mul(&p12).to_string(), "f11 + f22");
        assert_eq!(p12.mul(&p12).to_string(), "0");
        let f11 = j.basis_element(0);
        assert_eq!(f11.mul(&p12).to_string(), "1/2*p12");
        assert!(j.unit_element().is_some());
    }

    #[test]
    fn h3b42_closes_to_dimension_21() {
        let ring = Ring::gf(3).unwrap();
        let j = make_jordan_h3b42(&ring).unwrap();
        assert_eq!(j.dim(), 21);
        assert_eq!(j.even_indices().len(), 3 + 4 * 3);
        assert_eq!(j.odd_indices().len(), 6);
        let unit = j.unit_element().expect("d1 + d2 + d3");
        assert_eq!(unit.to_string(), "d1 + d2 + d3");
        let m1_12 = j.basis_element(j.index_of("m1_12").unwrap());
        let m2_12 = j.basis_element(j.index_of("m2_12").unwrap());
        assert_eq!(m1_12.mul(&m2_12).to_string(), "d1 + d2");
        // The family only exists in characteristic 3.
        assert!(make_jordan_h3b42(&Ring::rationals()).is_err());
        assert!(make_jordan_h3b42(&Ring::gf(5).unwrap()).is_err());
    }

    #[test]
    fn small_families_satisfy_super_jordan() {
        let ring = Ring::rationals();
        let spec = IdentitySpec::super_jordan();
        for alg in [
            make_jordan_mnm(&ring, 1, 1).unwrap(),
            make_jordan_qn(&ring, 2).unwrap(),
            make_jordan_dt(&Scalar::param(&Ring::new(0, &["t"]).unwrap(), "t").unwrap()).unwrap(),
        ] {
            let report = check_identity(&alg, &spec).unwrap();
            assert!(report.holds(), "{report}");
        }
    }
}
