//! Ready-made algebras: matrix superalgebras over an inner algebra, the
//! characteristic-2 octonion families, the exceptional characteristic-3
//! alternative families, division superalgebras, and the Jordan families.

use std::collections::BTreeMap;

use crate::algebra::{AlgebraBuilder, Parity, SuperAlgebra};
use crate::error::Error;
use crate::ring::Ring;
use crate::scalar::Scalar;
use crate::Result;

pub mod alt_char3;
pub mod division;
pub mod jordan;
pub mod octonion;

pub use alt_char3::{make_b12, make_b42, make_b_gamma};
pub use division::make_division_super;
pub use jordan::{
    make_jordan_dt, make_jordan_h3b42, make_jordan_jp3, make_jordan_mnm, make_jordan_osp,
    make_jordan_pn, make_jordan_qn, make_jordan_superform,
};
pub use octonion::{make_octonion_super, make_octonion_u, make_octonion_ungraded};

/// Label for the matrix unit in row `p`, column `q` (0-based in, 1-based
/// out), optionally tagged with an inner basis name.
fn unit_label(inner_name: Option<&str>, size: usize, p: usize, q: usize) -> String {
    let cell = if size > 9 {
        format!("{}_{}", p + 1, q + 1)
    } else {
        format!("{}{}", p + 1, q + 1)
    };
    match inner_name {
        Some(b) => format!("{b}_{cell}"),
        None => format!("e{cell}"),
    }
}

/// `size x size` matrices with entries in `inner`, graded by the rule
/// `parity(E_pq (x) b) = block_parity(p, q) + parity(b)`. The product is the
/// ordinary matrix product over `inner`; the unit (if `inner` has one) is
/// the diagonal.
fn matrix_over(
    name: &str,
    inner: &SuperAlgebra,
    size: usize,
    block_parity: impl Fn(usize, usize) -> Parity,
) -> Result<SuperAlgebra> {
    if size == 0 {
        return Err(Error::InvalidArgument("matrix size must be positive".into()));
    }
    let ring = inner.ring();
    let d = inner.dim();
    let mut b = AlgebraBuilder::new(name, ring);
    let tag = |t: usize| -> Option<&str> {
        if d == 1 {
            None
        } else {
            Some(inner.basis_name(t))
        }
    };
    let idx = |p: usize, q: usize, t: usize| (p * size + q) * d + t;
    for p in 0..size {
        for q in 0..size {
            for t in 0..d {
                b.basis_element(
                    &unit_label(tag(t), size, p, q),
                    block_parity(p, q).compose(inner.parity(t)),
                );
            }
        }
    }
    for p in 0..size {
        for q in 0..size {
            for s in 0..size {
                for t in 0..d {
                    for u in 0..d {
                        // (E_pq (x) t)(E_qs (x) u) = E_ps (x) tu
                        let entry: Vec<(usize, Scalar)> = inner
                            .product_of_basis(t, u)
                            .iter()
                            .map(|(k, c)| (idx(p, s, *k), c.clone()))
                            .collect();
                        b.set_product(idx(p, q, t), idx(q, s, u), entry);
                    }
                }
            }
        }
    }
    if let Some(unit) = inner.unit_element() {
        let mut coords = vec![Scalar::zero(ring); size * size * d];
        for p in 0..size {
            for (t, c) in unit.coords().iter().enumerate() {
                coords[idx(p, p, t)] = c.clone();
            }
        }
        b.unit(coords);
    }
    b.build()
}

/// Full matrix superalgebra `M_n(inner)`: the grading comes entirely from
/// the entries, with no block structure.
pub fn matrix_superalgebra(inner: &SuperAlgebra, n: usize) -> Result<SuperAlgebra> {
    matrix_over(
        &format!("M{}({})", n, inner.name()),
        inner,
        n,
        |_, _| Parity::Even,
    )
}

/// Block-graded matrix superalgebra `M_{n,m}(inner)`: `(n+m) x (n+m)`
/// matrices over a wholly even `inner`, with the two diagonal blocks even
/// and the two off-diagonal blocks odd. At least one of `n`, `m` must be
/// positive.
pub fn checkerboard_matrix_super(
    inner: &SuperAlgebra,
    n: usize,
    m: usize,
) -> Result<SuperAlgebra> {
    if n == 0 && m == 0 {
        return Err(Error::InvalidArgument(
            "checkerboard needs at least one block of positive size".into(),
        ));
    }
    if !inner.odd_indices().is_empty() {
        return Err(Error::InvalidArgument(
            "checkerboard grading needs a wholly even inner algebra".into(),
        ));
    }
    matrix_over(
        &format!("M{},{}({})", n, m, inner.name()),
        inner,
        n + m,
        |p, q| {
            if (p < n) == (q < n) {
                Parity::Even
            } else {
                Parity::Odd
            }
        },
    )
}

/// The scalars as a one-dimensional even algebra.
pub fn scalar_algebra(ring: &Ring) -> SuperAlgebra {
    let mut b = AlgebraBuilder::new("k", ring);
    b.basis_element("1", Parity::Even);
    b.set_product_int(0, 0, &[(0, 1)]);
    b.unit_basis(0);
    b.build().expect("one-dimensional unit algebra")
}

/// `M_{n,m}` over the scalars: the checkerboard grading of `(n+m) x (n+m)`
/// matrix units.
pub fn checkerboard(ring: &Ring, n: usize, m: usize) -> Result<SuperAlgebra> {
    if n == 0 && m == 0 {
        return Err(Error::InvalidArgument(
            "checkerboard needs at least one block of positive size".into(),
        ));
    }
    matrix_over(&format!("M{n},{m}"), &scalar_algebra(ring), n + m, |p, q| {
        if (p < n) == (q < n) {
            Parity::Even
        } else {
            Parity::Odd
        }
    })
}

// ---------------------------------------------------------------------------
// Family builder
// ---------------------------------------------------------------------------

/// Integer arguments for [`build_family`]: sizes, values for parameters that
/// would otherwise stay symbolic, and an optional characteristic override.
#[derive(Debug, Clone, Default)]
pub struct FamilyArgs {
    pub sizes: BTreeMap<String, usize>,
    pub values: BTreeMap<String, i64>,
    pub characteristic: Option<u64>,
}

impl FamilyArgs {
    pub fn size(mut self, key: &str, v: usize) -> FamilyArgs {
        self.sizes.insert(key.to_string(), v);
        self
    }

    pub fn value(mut self, key: &str, v: i64) -> FamilyArgs {
        self.values.insert(key.to_string(), v);
        self
    }

    pub fn with_char(mut self, p: u64) -> FamilyArgs {
        self.characteristic = Some(p);
        self
    }
}

/// One buildable family: its size keys with defaults, its parameter names,
/// and the characteristic it lives in by default.
#[derive(Debug, Clone, Copy)]
pub struct FamilyInfo {
    pub name: &'static str,
    pub sizes: &'static [(&'static str, usize)],
    pub params: &'static [&'static str],
    pub default_char: u64,
    pub summary: &'static str,
}

pub const FAMILIES: &[FamilyInfo] = &[
    FamilyInfo {
        name: "scalar",
        sizes: &[],
        params: &[],
        default_char: 0,
        summary: "the coefficient field as a one dimensional even algebra",
    },
    FamilyInfo {
        name: "checkerboard",
        sizes: &[("n", 1), ("m", 1)],
        params: &[],
        default_char: 0,
        summary: "(n+m) x (n+m) matrix units, diagonal blocks even, off blocks odd",
    },
    FamilyInfo {
        name: "matrix-ku",
        sizes: &[("n", 2)],
        params: &["l"],
        default_char: 0,
        summary: "n x n matrices over the scalars with an adjoined odd root of l",
    },
    FamilyInfo {
        name: "octonion",
        sizes: &[],
        params: &["mu", "beta", "gamma"],
        default_char: 2,
        summary: "characteristic 2 octonion algebra, quaternion part even, double part odd",
    },
    FamilyInfo {
        name: "octonion-u",
        sizes: &[],
        params: &["mu", "beta", "gamma", "q"],
        default_char: 2,
        summary: "the octonion table with an adjoined central odd root of q",
    },
    FamilyInfo {
        name: "b12",
        sizes: &[],
        params: &[],
        default_char: 3,
        summary: "three dimensional characteristic 3 algebra: even unit, odd x and y with xy = 1",
    },
    FamilyInfo {
        name: "b42",
        sizes: &[],
        params: &[],
        default_char: 3,
        summary: "2x2 matrices plus an odd two dimensional bimodule, characteristic 3",
    },
    FamilyInfo {
        name: "b-gamma",
        sizes: &[("deg", 3)],
        params: &["gamma"],
        default_char: 3,
        summary: "truncated polynomials with a derivation-twisted odd copy, characteristic 3",
    },
    FamilyInfo {
        name: "division",
        sizes: &[("case", 2)],
        params: &["lambda"],
        default_char: 0,
        summary: "division superalgebra shapes 1-4 (field, odd quadratic, quaternion, 2x2)",
    },
    FamilyInfo {
        name: "jordan-mnm",
        sizes: &[("n", 1), ("m", 1)],
        params: &[],
        default_char: 0,
        summary: "symmetrized checkerboard matrices under a o b = (ab + ba)/2",
    },
    FamilyInfo {
        name: "jordan-qn",
        sizes: &[("n", 2)],
        params: &[],
        default_char: 0,
        summary: "two glued copies of n x n matrices, the second one odd",
    },
    FamilyInfo {
        name: "jordan-pn",
        sizes: &[("n", 2)],
        params: &[],
        default_char: 0,
        summary: "the transpose-symplectic subalgebra of the symmetrized 2n x 2n matrices",
    },
    FamilyInfo {
        name: "jordan-osp",
        sizes: &[("n", 1), ("m", 1)],
        params: &[],
        default_char: 0,
        summary: "symmetric-orthogonal by symplectic blocks inside the symmetrized matrices",
    },
    FamilyInfo {
        name: "jordan-dt",
        sizes: &[],
        params: &["t"],
        default_char: 0,
        summary: "four dimensional family: two even idempotents, two odd elements, xy = e1 + t*e2",
    },
    FamilyInfo {
        name: "jordan-superform",
        sizes: &[("n", 2), ("m", 1)],
        params: &[],
        default_char: 0,
        summary: "unit plus a graded bilinear form space: a1..an even values, b1..bm symplectic pairs",
    },
    FamilyInfo {
        name: "jordan-jp3",
        sizes: &[],
        params: &[],
        default_char: 0,
        summary: "3x3 symmetrized matrices glued to their antisymmetric odd counterpart",
    },
    FamilyInfo {
        name: "jordan-h3b42",
        sizes: &[],
        params: &[],
        default_char: 3,
        summary: "hermitian 3x3 matrices over the characteristic 3 six dimensional coordinate algebra",
    },
];

fn family_info(name: &str) -> Result<&'static FamilyInfo> {
    FAMILIES.iter().find(|f| f.name == name).ok_or_else(|| {
        let known: Vec<&str> = FAMILIES.iter().map(|f| f.name).collect();
        Error::Unknown(format!(
            "unknown family {name:?}; available: {}",
            known.join(", ")
        ))
    })
}

/// Build a catalog family from integer arguments. Parameters without a
/// `values` entry stay symbolic; sizes fall back to the family's defaults.
pub fn build_family(family: &str, args: &FamilyArgs) -> Result<SuperAlgebra> {
    let info = family_info(family)?;
    for k in args.sizes.keys() {
        if !info.sizes.iter().any(|(n, _)| n == k) {
            return Err(Error::InvalidArgument(format!(
                "family {family} takes no size {k:?} (accepted: {})",
                info.sizes
                    .iter()
                    .map(|(n, _)| *n)
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
    }
    let param_ok = |k: &str| -> bool {
        if info.params.contains(&k) {
            return true;
        }
        if family == "jordan-superform" {
            // Form values a1..an, b1..bm, bounded by the requested sizes.
            let n = args.sizes.get("n").copied().unwrap_or(2);
            let m = args.sizes.get("m").copied().unwrap_or(1);
            let (head, tail) = k.split_at(1);
            if let Ok(i) = tail.parse::<usize>() {
                return (head == "a" && (1..=n).contains(&i))
                    || (head == "b" && (1..=m).contains(&i));
            }
        }
        false
    };
    for k in args.values.keys() {
        if !param_ok(k) {
            return Err(Error::InvalidArgument(format!(
                "family {family} takes no parameter {k:?} (accepted: {})",
                info.params.join(", ")
            )));
        }
    }
    let size = |k: &str| -> usize {
        let d = info
            .sizes
            .iter()
            .find(|(n, _)| *n == k)
            .map(|(_, d)| *d)
            .unwrap_or(0);
        args.sizes.get(k).copied().unwrap_or(d)
    };
    let chr = args.characteristic.unwrap_or(info.default_char);
    let make_ring = |names: &[String]| -> Result<Ring> {
        let symbolic: Vec<&str> = names
            .iter()
            .map(|s| s.as_str())
            .filter(|n| !args.values.contains_key(*n))
            .collect();
        Ring::new(chr, &symbolic)
    };
    let scalar_for = |ring: &Ring, name: &str| -> Result<Scalar> {
        match args.values.get(name) {
            Some(v) => Ok(Scalar::from_int(ring, *v)),
            None => Scalar::param(ring, name),
        }
    };
    let plain_params: Vec<String> = info.params.iter().map(|s| s.to_string()).collect();
    match family {
        "scalar" => Ok(scalar_algebra(&make_ring(&[])?)),
        "checkerboard" => checkerboard(&make_ring(&[])?, size("n"), size("m")),
        "matrix-ku" => {
            let ring = make_ring(&plain_params)?;
            let l = scalar_for(&ring, "l")?;
            matrix_superalgebra(&scalar_algebra(&ring), size("n"))?
                .adjoin_root(&l, Parity::Odd, "u")
        }
        "octonion" | "octonion-u" => {
            let ring = make_ring(&plain_params)?;
            let mu = scalar_for(&ring, "mu")?;
            let beta = scalar_for(&ring, "beta")?;
            let gamma = scalar_for(&ring, "gamma")?;
            if family == "octonion" {
                make_octonion_super(&mu, &beta, &gamma)
            } else {
                make_octonion_u(&mu, &beta, &gamma, &scalar_for(&ring, "q")?)
            }
        }
        "b12" => make_b12(&make_ring(&[])?),
        "b42" => make_b42(&make_ring(&[])?),
        "b-gamma" => {
            let ring = make_ring(&plain_params)?;
            make_b_gamma(size("deg"), &scalar_for(&ring, "gamma")?)
        }
        "division" => {
            let case = size("case");
            let ring = make_ring(&plain_params)?;
            let lambda = if matches!(case, 2 | 4) {
                Some(scalar_for(&ring, "lambda")?)
            } else {
                None
            };
            make_division_super(case, &ring, lambda.as_ref())
        }
        "jordan-mnm" => make_jordan_mnm(&make_ring(&[])?, size("n"), size("m")),
        "jordan-qn" => make_jordan_qn(&make_ring(&[])?, size("n")),
        "jordan-pn" => make_jordan_pn(&make_ring(&[])?, size("n")),
        "jordan-osp" => make_jordan_osp(&make_ring(&[])?, size("n"), size("m")),
        "jordan-dt" => {
            let ring = make_ring(&plain_params)?;
            make_jordan_dt(&scalar_for(&ring, "t")?)
        }
        "jordan-superform" => {
            let n = size("n");
            let m = size("m");
            let names: Vec<String> = (1..=n)
                .map(|i| format!("a{i}"))
                .chain((1..=m).map(|i| format!("b{i}")))
                .collect();
            let ring = make_ring(&names)?;
            let alphas: Vec<Scalar> = (1..=n)
                .map(|i| scalar_for(&ring, &format!("a{i}")))
                .collect::<Result<_>>()?;
            let betas: Vec<Scalar> = (1..=m)
                .map(|i| scalar_for(&ring, &format!("b{i}")))
                .collect::<Result<_>>()?;
            make_jordan_superform(&ring, &alphas, &betas)
        }
        "jordan-jp3" => make_jordan_jp3(&make_ring(&[])?),
        "jordan-h3b42" => make_jordan_h3b42(&make_ring(&[])?),
        _ => unreachable!("family_info vetted the name"),
    }
}

/// Every family at its default arguments, plus a few larger instances of the
/// size-parametric ones. Used by round-trip tests and as the reference list
/// of catalog exports.
pub fn standard_exports() -> Result<Vec<SuperAlgebra>> {
    let d = FamilyArgs::default();
    let mut out = Vec::new();
    for f in FAMILIES {
        out.push(build_family(f.name, &d)?);
    }
    out.push(build_family("checkerboard", &d.clone().size("n", 2).size("m", 1))?);
    out.push(build_family("division", &d.clone().size("case", 1))?);
    out.push(build_family("division", &d.clone().size("case", 3))?);
    out.push(build_family("division", &d.clone().size("case", 4))?);
    out.push(build_family("jordan-mnm", &d.clone().size("n", 2).size("m", 1))?);
    out.push(build_family("jordan-qn", &d.clone().size("n", 3))?);
    out.push(build_family("jordan-osp", &d.clone().size("n", 2).size("m", 2))?);
    out.push(build_family("jordan-superform", &d.clone().size("n", 3).size("m", 2))?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::{check_identity, IdentitySpec};

    #[test]
    fn checkerboard_shape_and_grading() {
        let ring = Ring::rationals();
        let alg = checkerboard(&ring, 2, 1).unwrap();
        assert_eq!(alg.dim(), 9);
        assert_eq!(alg.even_indices().len(), 5);
        assert_eq!(alg.odd_indices().len(), 4);
        assert_eq!(alg.basis_name(0), "e11");
        assert_eq!(alg.basis_name(5), "e23");
        assert!(alg.unit_element().is_some());
        assert!(check_identity(&alg, &IdentitySpec::associativity())
            .unwrap()
            .holds());
        // e13 (odd) * e32 (odd) = e12 (even).
        let e13 = alg.basis_element(2);
        let e32 = alg.basis_element(7);
        let prod = e13.mul(&e32);
        assert_eq!(prod.to_string(), "e12");
    }

    #[test]
    fn degenerate_checkerboard_sizes() {
        let ring = Ring::rationals();
        assert!(checkerboard(&ring, 0, 0).is_err());
        let ungraded = checkerboard(&ring, 2, 0).unwrap();
        assert_eq!(ungraded.dim(), 4);
        assert!(ungraded.odd_indices().is_empty());
    }

    #[test]
    fn matrix_superalgebra_takes_parity_from_entries() {
        let ring = Ring::gf(3).unwrap();
        let inner = make_b12(&ring).unwrap();
        let alg = matrix_superalgebra(&inner, 2).unwrap();
        assert_eq!(alg.dim(), 12);
        assert_eq!(alg.even_indices().len(), 4);
        assert_eq!(alg.odd_indices().len(), 8);
        assert!(alg.unit_element().is_some());
        // (E_12 (x) x)(E_21 (x) y) = E_11 (x) xy = E_11 (x) 1.
        let i = alg.index_of("x_12").unwrap();
        let j = alg.index_of("y_21").unwrap();
        let prod = alg.basis_element(i).mul(&alg.basis_element(j));
        assert_eq!(prod.to_string(), "1_11");
    }

    #[test]
    fn checkerboard_rejects_graded_inner() {
        let ring = Ring::gf(3).unwrap();
        let inner = make_b12(&ring).unwrap();
        assert!(checkerboard_matrix_super(&inner, 1, 1).is_err());
    }

    #[test]
    fn build_family_defaults_and_overrides() {
        let d = FamilyArgs::default();
        let oct = build_family("octonion", &d).unwrap();
        assert_eq!(oct.ring().parameters(), ["mu", "beta", "gamma"]);

        let fixed = build_family(
            "octonion",
            &d.clone().value("mu", 1).value("beta", 1).value("gamma", 1),
        )
        .unwrap();
        assert!(fixed.ring().parameters().is_empty());
        assert_eq!(fixed.ring().characteristic(), 2);

        let big = build_family("checkerboard", &d.clone().size("n", 2).size("m", 2)).unwrap();
        assert_eq!(big.dim(), 16);

        let q5 = build_family("jordan-qn", &d.clone().with_char(5)).unwrap();
        assert_eq!(q5.ring().characteristic(), 5);
    }

    #[test]
    fn build_family_rejects_unknown_names_and_keys() {
        let d = FamilyArgs::default();
        assert!(matches!(
            build_family("nonsense", &d),
            Err(Error::Unknown(_))
        ));
        assert!(build_family("b12", &d.clone().size("n", 2)).is_err());
        assert!(build_family("checkerboard", &d.clone().value("mu", 1)).is_err());
        // Superform values must stay within the requested sizes.
        assert!(build_family("jordan-superform", &d.clone().value("a2", 1)).is_ok());
        assert!(build_family("jordan-superform", &d.clone().value("a3", 1)).is_err());
    }

    #[test]
    fn standard_exports_cover_every_family() {
        let exports = standard_exports().unwrap();
        assert!(exports.len() >= FAMILIES.len());
        for f in FAMILIES {
            let want = build_family(f.name, &FamilyArgs::default())
                .unwrap()
                .name()
                .to_string();
            assert!(
                exports.iter().any(|a| a.name() == want),
                "family {} missing from the exports",
                f.name
            );
        }
    }
}
