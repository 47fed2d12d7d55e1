//! ℤ₂-graded algebras given by structure constants.
//!
//! A [`SuperAlgebra`] is a free module with a named homogeneous basis, a
//! parity for each basis element, and a sparse multiplication table. The
//! table must respect the grading: the product of basis elements of parities
//! `p` and `q` may only involve basis elements of parity `p+q`. Algebras are
//! immutable and cheaply clonable; [`Element`]s hold a handle to their
//! algebra plus a dense coordinate vector.

use crate::error::Error;
use crate::linalg::{Matrix, SpanSolver};
use crate::ring::Ring;
use crate::scalar::Scalar;
use crate::Result;
use std::fmt;
use std::sync::Arc;

/// Parity (degree) of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// Parity of a product of homogeneous elements.
    pub fn compose(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The Koszul factor `(-1)^{pq}` for swapping elements of these parities.
    pub fn swap_sign(self, other: Parity) -> i64 {
        if self == Parity::Odd && other == Parity::Odd {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

type SparseVec = Vec<(usize, Scalar)>;

#[derive(Debug)]
struct AlgebraInner {
    name: String,
    ring: Ring,
    basis: Vec<String>,
    parity: Vec<Parity>,
    table: Vec<Vec<SparseVec>>,
    unit: Option<Vec<Scalar>>,
}

/// Finite dimensional ℤ₂-graded algebra over a [`Ring`].
#[derive(Debug, Clone)]
pub struct SuperAlgebra(Arc<AlgebraInner>);

/// Mutable staging area for building a [`SuperAlgebra`].
pub struct AlgebraBuilder {
    name: String,
    ring: Ring,
    basis: Vec<String>,
    parity: Vec<Parity>,
    products: Vec<((usize, usize), SparseVec)>,
    unit: Option<Vec<Scalar>>,
    detect_unit: bool,
}

impl AlgebraBuilder {
    pub fn new(name: &str, ring: &Ring) -> AlgebraBuilder {
        AlgebraBuilder {
            name: name.to_string(),
            ring: ring.clone(),
            basis: Vec::new(),
            parity: Vec::new(),
            products: Vec::new(),
            unit: None,
            detect_unit: false,
        }
    }

    /// Declare a basis element and get its index.
    pub fn basis_element(&mut self, name: &str, parity: Parity) -> usize {
        self.basis.push(name.to_string());
        self.parity.push(parity);
        self.basis.len() - 1
    }

    pub fn set_product(&mut self, i: usize, j: usize, value: SparseVec) {
        self.products.push(((i, j), value));
    }

    pub fn set_product_int(&mut self, i: usize, j: usize, terms: &[(usize, i64)]) {
        let v = terms
            .iter()
            .map(|&(k, c)| (k, Scalar::from_int(&self.ring, c)))
            .collect();
        self.set_product(i, j, v);
    }

    /// Declare the unit as a coordinate vector over the basis.
    pub fn unit(&mut self, coords: Vec<Scalar>) {
        self.unit = Some(coords);
    }

    /// Declare that the single basis element `i` is the unit.
    pub fn unit_basis(&mut self, i: usize) {
        let mut coords = vec![Scalar::zero(&self.ring); self.basis.len()];
        coords[i] = Scalar::one(&self.ring);
        self.unit = Some(coords);
    }

    /// Ask [`AlgebraBuilder::build`] to solve for a two-sided unit and record
    /// it when one exists (no error when there is none).
    pub fn detect_unit(&mut self) {
        self.detect_unit = true;
    }

    pub fn build(self) -> Result<SuperAlgebra> {
        let dim = self.basis.len();
        let mut table: Vec<Vec<SparseVec>> = vec![vec![Vec::new(); dim]; dim];
        for ((i, j), terms) in self.products {
            assert!(i < dim && j < dim, "product index out of range");
            let mut dense = vec![Scalar::zero(&self.ring); dim];
            for (k, c) in terms {
                assert!(k < dim, "product target out of range");
                dense[k] = &dense[k] + &c;
            }
            let entry: SparseVec = dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            table[i][j] = entry;
        }
        for i in 0..dim {
            for j in 0..dim {
                let want = self.parity[i].compose(self.parity[j]);
                for (k, _) in &table[i][j] {
                    if self.parity[*k] != want {
                        return Err(Error::GradingViolation { i, j, k: *k });
                    }
                }
            }
        }
        let mut inner = AlgebraInner {
            name: self.name,
            ring: self.ring,
            basis: self.basis,
            parity: self.parity,
            table,
            unit: None,
        };
        if let Some(coords) = self.unit {
            assert_eq!(coords.len(), dim, "unit coordinate length mismatch");
            check_unit(&inner, &coords)?;
            inner.unit = Some(coords);
        } else if self.detect_unit {
            inner.unit = solve_for_unit(&inner);
        }
        Ok(SuperAlgebra(Arc::new(inner)))
    }
}

fn basis_product(inner: &AlgebraInner, i: usize, j: usize) -> &SparseVec {
    &inner.table[i][j]
}

fn check_unit(inner: &AlgebraInner, coords: &[Scalar]) -> Result<()> {
    let dim = inner.basis.len();
    for j in 0..dim {
        for side in 0..2 {
            let mut dense = vec![Scalar::zero(&inner.ring); dim];
            for (i, ci) in coords.iter().enumerate() {
                if ci.is_zero() {
                    continue;
                }
                let prod = if side == 0 {
                    basis_product(inner, i, j)
                } else {
                    basis_product(inner, j, i)
                };
                for (k, c) in prod {
                    dense[*k] = &dense[*k] + &(ci * c);
                }
            }
            for (k, v) in dense.iter().enumerate() {
                let want = if k == j {
                    Scalar::one(&inner.ring)
                } else {
                    Scalar::zero(&inner.ring)
                };
                if *v != want {
                    return Err(Error::UnitAxiom { i: j });
                }
            }
        }
    }
    Ok(())
}

/// Solve `u*e_j = e_j = e_j*u` for `u`. Returns `None` when no unit exists
/// or its coordinates are not polynomial in the parameters.
fn solve_for_unit(inner: &AlgebraInner) -> Option<Vec<Scalar>> {
    let dim = inner.basis.len();
    let ring = &inner.ring;
    // Unknowns: u_0..u_{dim-1} plus a homogenizing t; rows demand
    // sum_i u_i (e_i e_j)_k - t delta_{jk} = 0 on both sides.
    let mut m = Matrix::new(ring, dim + 1);
    for j in 0..dim {
        for k in 0..dim {
            for side in 0..2 {
                let mut row = vec![Scalar::zero(ring); dim + 1];
                for i in 0..dim {
                    let prod = if side == 0 {
                        basis_product(inner, i, j)
                    } else {
                        basis_product(inner, j, i)
                    };
                    for (kk, c) in prod {
                        if *kk == k {
                            row[i] = &row[i] + c;
                        }
                    }
                }
                if k == j {
                    row[dim] = Scalar::from_int(ring, -1);
                }
                m.push_row(row);
            }
        }
    }
    for v in m.nullspace() {
        let t = &v[dim];
        if t.is_zero() {
            continue;
        }
        if let Ok(tinv) = t.inverse() {
            let coords: Vec<Scalar> = v[..dim].iter().map(|c| c * &tinv).collect();
            if check_unit(inner, &coords).is_ok() {
                return Some(coords);
            }
        }
    }
    None
}

impl SuperAlgebra {
    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    pub fn dim(&self) -> usize {
        self.0.basis.len()
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.0.basis[i]
    }

    pub fn basis_names(&self) -> &[String] {
        &self.0.basis
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.0.parity[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.0.parity
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.basis.iter().position(|b| b == name)
    }

    /// Sparse product of two basis elements.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.0.table[i][j]
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity(i) == Parity::Even).collect()
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity(i) == Parity::Odd).collect()
    }

    pub fn same_algebra(&self, other: &SuperAlgebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn zero(&self) -> Element {
        Element {
            algebra: self.clone(),
            coords: vec![Scalar::zero(self.ring()); self.dim()],
        }
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut e = self.zero();
        e.coords[i] = Scalar::one(self.ring());
        e
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Element {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        Element {
            algebra: self.clone(),
            coords,
        }
    }

    pub fn element_from_ints(&self, coords: &[i64]) -> Element {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        self.element(
            coords
                .iter()
                .map(|&n| Scalar::from_int(self.ring(), n))
                .collect(),
        )
    }

    pub fn unit_element(&self) -> Option<Element> {
        self.0.unit.as_ref().map(|coords| Element {
            algebra: self.clone(),
            coords: coords.clone(),
        })
    }

    /// Same table with every structure constant evaluated at `assignment`
    /// in GF(p); the unit carries over.
    pub fn specialize(&self, p: u64, assignment: &[u64]) -> Result<SuperAlgebra> {
        let target = Ring::gf(p)?;
        let mut b = AlgebraBuilder::new(
            &format!("{}@{}", self.name(), target.describe()),
            &target,
        );
        for i in 0..self.dim() {
            b.basis_element(self.basis_name(i), self.parity(i));
        }
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let entry: Result<SparseVec> = self
                    .product_of_basis(i, j)
                    .iter()
                    .map(|(k, c)| Ok((*k, c.specialize(p, assignment)?)))
                    .collect();
                b.set_product(i, j, entry?);
            }
        }
        if let Some(u) = &self.0.unit {
            let coords: Result<Vec<Scalar>> =
                u.iter().map(|c| c.specialize(p, assignment)).collect();
            b.unit(coords?);
        }
        b.build()
    }

    /// Commutative superization: same module with the product
    /// `x ∘ y = (xy + (-1)^{|x||y|} yx) / 2`. Fails in characteristic 2.
    pub fn plus_algebra(&self) -> Result<SuperAlgebra> {
        let half = Scalar::half(self.ring())?;
        let mut b = AlgebraBuilder::new(&format!("{}^+", self.name()), self.ring());
        for i in 0..self.dim() {
            b.basis_element(self.basis_name(i), self.parity(i));
        }
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let sign = self.parity(i).swap_sign(self.parity(j));
                let mut dense = vec![Scalar::zero(self.ring()); self.dim()];
                for (k, c) in self.product_of_basis(i, j) {
                    dense[*k] = &dense[*k] + &(c * &half);
                }
                for (k, c) in self.product_of_basis(j, i) {
                    let signed = if sign < 0 { -(c * &half) } else { c * &half };
                    dense[*k] = &dense[*k] + &signed;
                }
                let entry: SparseVec = dense
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                b.set_product(i, j, entry);
            }
        }
        if let Some(u) = &self.0.unit {
            b.unit(u.clone());
        }
        b.build()
    }

    /// Doubling `A ⊕ Av` with an adjoined homogeneous element `v` of the
    /// given parity satisfying `x(yv) = (xy)v`, `(xv)y = (xy)v` and
    /// `(xv)(yv) = alpha·xy`. Basis names gain the suffix `label`.
    pub fn adjoin_root(
        &self,
        alpha: &Scalar,
        parity_of_root: Parity,
        label: &str,
    ) -> Result<SuperAlgebra> {
        if alpha.ring() != self.ring() {
            return Err(Error::RingMismatch {
                left: self.ring().describe(),
                right: alpha.ring().describe(),
            });
        }
        if alpha.is_zero() {
            return Err(Error::InvalidArgument(
                "adjoined root must square to a nonzero scalar".into(),
            ));
        }
        let d = self.dim();
        let mut b = AlgebraBuilder::new(&format!("{}[{}]", self.name(), label), self.ring());
        for i in 0..d {
            b.basis_element(self.basis_name(i), self.parity(i));
        }
        for i in 0..d {
            b.basis_element(
                &format!("{}{}", self.basis_name(i), label),
                self.parity(i).compose(parity_of_root),
            );
        }
        for i in 0..d {
            for j in 0..d {
                let prod = self.product_of_basis(i, j);
                b.set_product(i, j, prod.to_vec());
                b.set_product(i, j + d, prod.iter().map(|(k, c)| (k + d, c.clone())).collect());
                b.set_product(i + d, j, prod.iter().map(|(k, c)| (k + d, c.clone())).collect());
                b.set_product(
                    i + d,
                    j + d,
                    prod.iter().map(|(k, c)| (*k, c * alpha)).collect(),
                );
            }
        }
        if let Some(u) = &self.0.unit {
            let mut coords = u.clone();
            coords.extend(vec![Scalar::zero(self.ring()); d]);
            b.unit(coords);
        }
        b.build()
    }

    /// Subalgebra spanned by the given homogeneous vectors, expressed in its
    /// own basis. Each spanning vector must be supported on parent basis
    /// elements of a single parity, the vectors must be independent, and the
    /// span must be closed under the product ([`Error::NotClosed`] names the
    /// offending pair otherwise).
    pub fn subalgebra_on_span(
        &self,
        name: &str,
        span: &[(String, Element)],
    ) -> Result<SuperAlgebra> {
        let ring = self.ring();
        let mut solver = SpanSolver::new(ring, self.dim());
        let mut parities = Vec::new();
        for (label, v) in span {
            if !self.same_algebra(&v.algebra) {
                return Err(Error::AlgebraMismatch {
                    left: self.name().to_string(),
                    right: v.algebra.name().to_string(),
                });
            }
            let p = v.parity().ok_or_else(|| {
                Error::InvalidArgument(format!("spanning vector {label} is not homogeneous"))
            })?;
            parities.push(p);
            if !solver.add(&v.coords)? {
                return Err(Error::InvalidArgument(format!(
                    "spanning vector {label} depends on the earlier ones"
                )));
            }
        }
        let mut b = AlgebraBuilder::new(name, ring);
        for ((label, _), p) in span.iter().zip(&parities) {
            b.basis_element(label, *p);
        }
        for (i, (_, vi)) in span.iter().enumerate() {
            for (j, (_, vj)) in span.iter().enumerate() {
                let prod = vi.mul(vj);
                let coords = solver
                    .coordinates(&prod.coords)
                    .ok_or(Error::NotClosed { i, j })?;
                let entry: SparseVec = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                b.set_product(i, j, entry);
            }
        }
        if let Some(u) = self.unit_element() {
            if let Some(coords) = solver.coordinates(&u.coords) {
                b.unit(coords);
            } else {
                b.detect_unit();
            }
        } else {
            b.detect_unit();
        }
        b.build()
    }
}

/// Element of a [`SuperAlgebra`]: dense coordinates over its basis.
#[derive(Debug, Clone)]
pub struct Element {
    algebra: SuperAlgebra,
    coords: Vec<Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_algebra(&other.algebra) && self.coords == other.coords
    }
}
impl Eq for Element {}

impl Element {
    pub fn algebra(&self) -> &SuperAlgebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn same_algebra(&self, other: &Element) -> Result<()> {
        if self.algebra.same_algebra(&other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch {
                left: self.algebra.name().to_string(),
                right: other.algebra.name().to_string(),
            })
        }
    }

    /// Parity when homogeneous (zero counts as even), `None` when mixed.
    pub fn parity(&self) -> Option<Parity> {
        let mut seen: Option<Parity> = None;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = self.algebra.parity(i);
            match seen {
                None => seen = Some(p),
                Some(q) if q == p => {}
                Some(_) => return None,
            }
        }
        Some(seen.unwrap_or(Parity::Even))
    }

    /// Even and odd components, in that order.
    pub fn parity_parts(&self) -> (Element, Element) {
        let mut even = self.algebra.zero();
        let mut odd = self.algebra.zero();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match self.algebra.parity(i) {
                Parity::Even => even.coords[i] = c.clone(),
                Parity::Odd => odd.coords[i] = c.clone(),
            }
        }
        (even, odd)
    }

    pub fn component(&self, parity: Parity) -> Element {
        let (e, o) = self.parity_parts();
        match parity {
            Parity::Even => e,
            Parity::Odd => o,
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.same_algebra(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(self.algebra.element(coords))
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        self.same_algebra(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(self.algebra.element(coords))
    }

    pub fn negate(&self) -> Element {
        self.algebra
            .element(self.coords.iter().map(|c| c.negate()).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        self.algebra
            .element(self.coords.iter().map(|c| c * s).collect())
    }

    pub fn scale_int(&self, n: i64) -> Element {
        self.scale(&Scalar::from_int(self.algebra.ring(), n))
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        self.same_algebra(other)?;
        let mut out = self.algebra.zero();
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.algebra.product_of_basis(i, j) {
                    out.coords[*k] = &out.coords[*k] + &(&ab * c);
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Element) -> Element {
        self.try_mul(other).expect("algebra mismatch")
    }
}

impl std::ops::Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("algebra mismatch")
    }
}
impl std::ops::Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).expect("algebra mismatch")
    }
}
impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.negate()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let compound = cs.contains([' ', '+']) || cs[1..].contains('-');
            let (neg, body) = if !compound && cs.starts_with('-') {
                (true, &cs[1..])
            } else {
                (false, cs.as_str())
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if body == "1" {
                f.write_str(self.algebra.basis_name(i))?;
            } else if compound {
                write!(f, "({body})*{}", self.algebra.basis_name(i))?;
            } else {
                write!(f, "{body}*{}", self.algebra.basis_name(i))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `(ab)c - a(bc)`.
pub fn associator(a: &Element, b: &Element, c: &Element) -> Element {
    &a.mul(b).mul(c) - &a.mul(&b.mul(c))
}

/// Plain (ungraded) commutator `ab - ba`.
pub fn commutator(a: &Element, b: &Element) -> Element {
    &a.mul(b) - &b.mul(a)
}

/// Graded commutator `[a,b] = ab - (-1)^{|a||b|} ba`, extended bilinearly
/// over the parity components.
pub fn supercommutator(a: &Element, b: &Element) -> Element {
    let (ae, ao) = a.parity_parts();
    let (be, bo) = b.parity_parts();
    let mut out = a.mul(b);
    for (ap, apart) in [(Parity::Even, &ae), (Parity::Odd, &ao)] {
        for (bp, bpart) in [(Parity::Even, &be), (Parity::Odd, &bo)] {
            if apart.is_zero() || bpart.is_zero() {
                continue;
            }
            let swapped = bpart.mul(apart);
            let signed = if ap.swap_sign(bp) < 0 {
                swapped
            } else {
                swapped.negate()
            };
            out = &out + &signed;
        }
    }
    out
}

/// Anticommutator `ab + ba`.
pub fn circ(a: &Element, b: &Element) -> Element {
    &a.mul(b) + &b.mul(a)
}

/// Graded symmetrized product `a ∘ b = (ab + (-1)^{|a||b|} ba)/2`.
/// Fails in characteristic 2.
pub fn super_circ(a: &Element, b: &Element) -> Result<Element> {
    let half = Scalar::half(a.algebra().ring())?;
    let (ae, ao) = a.parity_parts();
    let (be, bo) = b.parity_parts();
    let mut out = a.mul(b);
    for (ap, apart) in [(Parity::Even, &ae), (Parity::Odd, &ao)] {
        for (bp, bpart) in [(Parity::Even, &be), (Parity::Odd, &bo)] {
            if apart.is_zero() || bpart.is_zero() {
                continue;
            }
            let swapped = bpart.mul(apart);
            let signed = if ap.swap_sign(bp) < 0 {
                swapped.negate()
            } else {
                swapped
            };
            out = &out + &signed;
        }
    }
    Ok(out.scale(&half))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 2-dimensional algebra `k[x]/(x^2 - 1)` with `x` odd.
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
    fn grading_violation_is_rejected() {
        let ring = Ring::rationals();
        let mut b = AlgebraBuilder::new("bad", &ring);
        let one = b.basis_element("1", Parity::Even);
        let x = b.basis_element("x", Parity::Odd);
        b.set_product_int(x, x, &[(x, 1)]);
        let _ = one;
        assert!(matches!(
            b.build().unwrap_err(),
            Error::GradingViolation { i: 1, j: 1, k: 1 }
        ));
    }

    #[test]
    fn unit_axiom_is_checked() {
        let ring = Ring::rationals();
        let mut b = AlgebraBuilder::new("bad-unit", &ring);
        let one = b.basis_element("1", Parity::Even);
        let x = b.basis_element("x", Parity::Odd);
        b.set_product_int(one, one, &[(one, 1)]);
        b.set_product_int(x, x, &[(one, 1)]);
        // 1*x and x*1 left at zero, so 1 is not a unit.
        b.unit_basis(one);
        assert!(matches!(b.build().unwrap_err(), Error::UnitAxiom { .. }));
    }

    #[test]
    fn unit_detection_finds_composite_units() {
        let ring = Ring::rationals();
        // 2x2 diagonal matrices: unit is e0 + e1.
        let mut b = AlgebraBuilder::new("diag", &ring);
        let e0 = b.basis_element("e0", Parity::Even);
        let e1 = b.basis_element("e1", Parity::Even);
        b.set_product_int(e0, e0, &[(e0, 1)]);
        b.set_product_int(e1, e1, &[(e1, 1)]);
        b.detect_unit();
        let alg = b.build().unwrap();
        let u = alg.unit_element().unwrap();
        assert_eq!(u, &alg.basis_element(0) + &alg.basis_element(1));
    }

    #[test]
    fn supercommutator_signs() {
        let ring = Ring::rationals();
        let a = tiny(&ring);
        let x = a.basis_element(1);
        // x odd: [x,x] = x·x + x·x = 2.
        let sc = supercommutator(&x, &x);
        assert_eq!(sc, a.basis_element(0).scale_int(2));
        // Plain commutator of x with itself is zero.
        assert!(commutator(&x, &x).is_zero());
        let u = a.unit_element().unwrap();
        assert!(supercommutator(&u, &x).is_zero());
    }

    #[test]
    fn super_circ_on_odd_pair() {
        let ring = Ring::rationals();
        let a = tiny(&ring);
        let x = a.basis_element(1);
        // x ∘ x = (x·x - x·x)/2 = 0 for odd x.
        assert!(super_circ(&x, &x).unwrap().is_zero());
        let one = a.basis_element(0);
        assert_eq!(super_circ(&one, &x).unwrap(), x);
    }

    #[test]
    fn adjoin_root_squares_to_alpha() {
        let ring = Ring::new(0, &["g"]).unwrap();
        let a = tiny(&ring);
        let g = Scalar::param(&ring, "g").unwrap();
        let b = a.adjoin_root(&g, Parity::Odd, "v").unwrap();
        assert_eq!(b.dim(), 4);
        assert_eq!(b.basis_name(2), "1v");
        assert_eq!(b.parity(2), Parity::Odd);
        assert_eq!(b.parity(3), Parity::Even, "x odd, v odd");
        let v = b.basis_element(2);
        assert_eq!(v.mul(&v), b.basis_element(0).scale(&g));
        let unit = b.unit_element().unwrap();
        assert_eq!(unit.mul(&v), v);
    }

    #[test]
    fn subalgebra_closure_and_failure() {
        let ring = Ring::rationals();
        let a = tiny(&ring);
        let good = a.subalgebra_on_span(
            "span-1",
            &[("one".to_string(), a.basis_element(0))],
        ).unwrap();
        assert_eq!(good.dim(), 1);
        assert!(good.unit_element().is_some());

        let bad = a.subalgebra_on_span(
            "span-x",
            &[("x".to_string(), a.basis_element(1))],
        );
        assert!(matches!(bad.unwrap_err(), Error::NotClosed { i: 0, j: 0 }));
    }

    #[test]
    fn plus_algebra_is_supercommutative() {
        let ring = Ring::rationals();
        let a = tiny(&ring);
        let p = a.plus_algebra().unwrap();
        let x = p.basis_element(1);
        // In the plus algebra, odd x squares to zero: x∘x = (1 - 1)/2.
        assert!(x.mul(&x).is_zero());
        assert!(p.unit_element().is_some());
    }

    #[test]
    fn specialization_of_parametric_table() {
        let ring = Ring::new(0, &["g"]).unwrap();
        let a = tiny(&ring);
        let g = Scalar::param(&ring, "g").unwrap();
        let b = a.adjoin_root(&g, Parity::Even, "w").unwrap();
        let s = b.specialize(5, &[3]).unwrap();
        assert_eq!(s.ring().characteristic(), 5);
        let w = s.basis_element(2);
        assert_eq!(w.mul(&w), s.basis_element(0).scale_int(3));
    }
}
