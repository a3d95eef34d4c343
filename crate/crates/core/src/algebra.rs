//! Finite-dimensional algebras given by structure constants, and the operators built
//! from their product.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Vector};
use crate::scalar::{Field, Scalar};

/// Coordinates of an algebra element in the standard basis.
pub type Element = Vector;

/// Linear endomorphism; column `j` is the image of `e_j`.
pub type LinearMap = Matrix;

/// An algebra `e_i · e_j = Σ_k c[i][j][k] e_k` over Q or a prime field.
///
/// The product of each basis pair is stored sparsely, zero coefficients dropped, so
/// equality of algebras is equality of structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    products: Vec<Vec<(usize, Scalar)>>,
    labels: Option<Vec<String>>,
}

impl Algebra {
    /// The algebra of dimension `dim` with every product zero.
    pub fn zero(field: Field, dim: usize) -> Algebra {
        Algebra {
            field,
            dim,
            products: alloc::vec![Vec::new(); dim * dim],
            labels: None,
        }
    }

    /// Builds an algebra from a dense tensor indexed `(i * dim + j) * dim + k`.
    pub fn from_table(field: Field, dim: usize, table: &[Scalar]) -> Result<Algebra> {
        if table.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: table.len(),
            });
        }
        let mut a = Algebra::zero(field, dim);
        for (idx, c) in table.iter().enumerate() {
            if c.field() != field {
                return Err(Error::FieldMismatch {
                    expected: field,
                    found: c.field(),
                });
            }
            if !c.is_zero() {
                a.products[idx / dim].push((idx % dim, c.clone()));
            }
        }
        Ok(a)
    }

    /// Builds an algebra from sparse `(i, j, k, c)` entries; repeated keys are rejected.
    pub fn from_entries<I>(field: Field, dim: usize, entries: I) -> Result<Algebra>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let mut a = Algebra::zero(field, dim);
        let mut seen = alloc::collections::BTreeSet::new();
        for (i, j, k, c) in entries {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            if c.field() != field {
                return Err(Error::FieldMismatch {
                    expected: field,
                    found: c.field(),
                });
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::DuplicateEntry(i, j, k));
            }
            if !c.is_zero() {
                a.products[i * dim + j].push((k, c));
            }
        }
        for p in &mut a.products {
            p.sort_by_key(|e| e.0);
        }
        Ok(a)
    }

    /// Builds an algebra from integer entries `(i, j, k, c)`.
    pub fn from_i64_entries(field: Field, dim: usize, entries: &[(usize, usize, usize, i64)]) -> Algebra {
        Algebra::from_entries(field, dim, entries.iter().map(|&(i, j, k, c)| (i, j, k, field.from_i64(c))))
            .expect("valid integer structure constants")
    }

    /// The algebra whose product of basis vectors is given by `f(i, j)`.
    pub fn from_basis_products(field: Field, dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Algebra {
        let mut a = Algebra::zero(field, dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "product length mismatch");
                a.products[i * dim + j] = v.support().map(|k| (k, v.get(k).clone())).collect();
            }
        }
        a
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Algebra> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.products[i * self.dim + j]
            .iter()
            .find(|e| e.0 == k)
            .map_or_else(|| self.field.zero(), |e| e.1.clone())
    }

    /// Nonzero entries of `e_i · e_j` as `(k, c)` pairs in increasing `k`.
    pub fn basis_product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim + j]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let mut v = self.zero_element();
        for (k, c) in self.basis_product_terms(i, j) {
            v.set(*k, c.clone());
        }
        v
    }

    /// All nonzero structure constants in lexicographic `(i, j, k)` order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        let n = self.dim;
        self.products
            .iter()
            .enumerate()
            .flat_map(move |(ij, terms)| terms.iter().map(move |(k, c)| (ij / n, ij % n, *k, c)))
    }

    pub fn zero_element(&self) -> Element {
        Vector::zeros(self.field, self.dim)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Vector::unit(self.field, self.dim, i)
    }

    pub fn basis_elements(&self) -> Vec<Element> {
        (0..self.dim).map(|i| self.basis_element(i)).collect()
    }

    fn check(&self, x: &Element) -> Result<()> {
        x.check_compatible(self.field, self.dim)
    }

    /// `x · y`; panics on incompatible operands.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let mut out = alloc::vec![self.field.zero(); self.dim];
        for i in x.support() {
            let xi = x.get(i);
            for j in y.support() {
                let terms = &self.products[i * self.dim + j];
                if terms.is_empty() {
                    continue;
                }
                let w = xi * y.get(j);
                for (k, c) in terms {
                    out[*k] = &out[*k] + &(&w * c);
                }
            }
        }
        Vector::from_entries_unchecked(self.field, out)
    }

    /// Checked product `x · y`.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    /// `L_x : y ↦ x · y`.
    pub fn left_mul_map(&self, x: &Element) -> LinearMap {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(x, &self.basis_element(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// `R_x : y ↦ y · x`.
    pub fn right_mul_map(&self, x: &Element) -> LinearMap {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis_element(j), x)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Checked left multiplication operator.
    pub fn left_op(&self, x: &Element) -> Result<LinearMap> {
        self.check(x)?;
        Ok(self.left_mul_map(x))
    }

    /// Checked right multiplication operator.
    pub fn right_op(&self, x: &Element) -> Result<LinearMap> {
        self.check(x)?;
        Ok(self.right_mul_map(x))
    }

    /// `xy - yx`, unchecked.
    pub fn comm(&self, x: &Element, y: &Element) -> Element {
        &self.mul(x, y) - &self.mul(y, x)
    }

    /// `(xy)z - x(yz)`, unchecked.
    pub fn assoc(&self, x: &Element, y: &Element, z: &Element) -> Element {
        &self.mul(&self.mul(x, y), z) - &self.mul(x, &self.mul(y, z))
    }

    pub fn commutator(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.comm(x, y))
    }

    pub fn anticommutator(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(&self.mul(x, y) + &self.mul(y, x))
    }

    pub fn associator(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        self.check(z)?;
        Ok(self.assoc(x, y, z))
    }

    /// First basis triple with nonzero associator.
    pub fn associativity_witness(&self) -> Option<[usize; 3]> {
        let b = self.basis_elements();
        triples(self.dim).find(|&[i, j, k]| !self.assoc(&b[i], &b[j], &b[k]).is_zero())
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product_terms(i, j) == self.basis_product_terms(j, i)))
    }

    /// `x · x = 0` for every `x`.
    pub fn is_anticommutative(&self) -> bool {
        let b = self.basis_elements();
        (0..self.dim).all(|i| {
            self.basis_product_terms(i, i).is_empty()
                && (0..i).all(|j| (&self.mul(&b[i], &b[j]) + &self.mul(&b[j], &b[i])).is_zero())
        })
    }

    /// `x · y = 0` for all `x, y`.
    pub fn has_zero_product(&self) -> bool {
        self.products.iter().all(Vec::is_empty)
    }

    /// The algebra with product `x ∘ y = y · x`.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim;
        let mut a = Algebra::zero(self.field, n);
        for i in 0..n {
            for j in 0..n {
                a.products[i * n + j] = self.products[j * n + i].clone();
            }
        }
        a.labels = self.labels.clone();
        a
    }

    /// The same algebra in the basis `f_i = P e_i` (columns of the invertible `p`).
    pub fn change_basis(&self, p: &Matrix) -> Result<Algebra> {
        if p.field() != self.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: p.field(),
            });
        }
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.rows(),
            });
        }
        let inv = p
            .inverse()
            .ok_or_else(|| Error::PreconditionViolated("change of basis matrix is singular".into()))?;
        let cols = p.columns();
        Ok(Algebra::from_basis_products(self.field, self.dim, |i, j| {
            inv.apply(&self.mul(&cols[i], &cols[j]))
        }))
    }
}

/// All triples `[i, j, k]` in `0..n`, lexicographically.
pub fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| [i, j, k])))
}

/// An algebra with a twisting map `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    base: Algebra,
    twist: LinearMap,
}

impl HomAlgebra {
    pub fn new(base: Algebra, twist: LinearMap) -> Result<HomAlgebra> {
        check_endomorphism(&base, &twist)?;
        Ok(HomAlgebra { base, twist })
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn twist(&self) -> &LinearMap {
        &self.twist
    }

    pub fn into_parts(self) -> (Algebra, LinearMap) {
        (self.base, self.twist)
    }

    /// `(xy)α(z) - α(x)(yz)`, unchecked.
    pub fn hom_assoc(&self, x: &Element, y: &Element, z: &Element) -> Element {
        let a = &self.base;
        &a.mul(&a.mul(x, y), &self.twist.apply(z)) - &a.mul(&self.twist.apply(x), &a.mul(y, z))
    }

    pub fn hom_associator(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        for v in [x, y, z] {
            self.base.check(v)?;
        }
        Ok(self.hom_assoc(x, y, z))
    }

    /// First basis triple with nonzero hom-associator.
    pub fn hom_associativity_witness(&self) -> Option<[usize; 3]> {
        let b = self.base.basis_elements();
        let images: Vec<Vector> = (0..self.base.dim).map(|i| self.twist.column(i)).collect();
        let a = &self.base;
        triples(a.dim).find(|&[i, j, k]| {
            let lhs = a.mul(&a.basis_product(i, j), &images[k]);
            let rhs = a.mul(&images[i], &a.mul(&b[j], &b[k]));
            lhs != rhs
        })
    }

    pub fn is_hom_associative(&self) -> bool {
        self.hom_associativity_witness().is_none()
    }

    /// First basis pair with `α(xy) ≠ α(x)α(y)`.
    pub fn multiplicativity_witness(&self) -> Option<[usize; 2]> {
        is_multiplicative_witness(&self.base, &self.twist)
    }

    pub fn is_multiplicative(&self) -> bool {
        self.multiplicativity_witness().is_none()
    }
}

pub(crate) fn is_multiplicative_witness(a: &Algebra, f: &LinearMap) -> Option<[usize; 2]> {
    let images: Vec<Vector> = (0..a.dim).map(|i| f.column(i)).collect();
    (0..a.dim)
        .flat_map(|i| (0..a.dim).map(move |j| [i, j]))
        .find(|&[i, j]| f.apply(&a.basis_product(i, j)) != a.mul(&images[i], &images[j]))
}

/// Whether `f` is a multiplicative map of `a`.
pub fn is_multiplicative(a: &Algebra, f: &LinearMap) -> Result<bool> {
    check_endomorphism(a, f)?;
    Ok(is_multiplicative_witness(a, f).is_none())
}

/// Whether `f ∘ f = f`.
pub fn is_idempotent_map(f: &LinearMap) -> bool {
    f.is_square() && f.compose(f) == *f
}

/// Whether `x · x = x`.
pub fn is_idempotent_elem(a: &Algebra, x: &Element) -> Result<bool> {
    Ok(a.multiply(x, x)? == *x)
}

fn check_endomorphism(a: &Algebra, f: &LinearMap) -> Result<()> {
    if f.field() != a.field {
        return Err(Error::FieldMismatch {
            expected: a.field,
            found: f.field(),
        });
    }
    if f.rows() != a.dim || f.cols() != a.dim {
        return Err(Error::DimensionMismatch {
            expected: a.dim,
            found: if f.rows() != a.dim { f.rows() } else { f.cols() },
        });
    }
    Ok(())
}

/// An algebra with an involutive linear map, the input of the Cayley–Dickson doubling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutiveAlgebra {
    base: Algebra,
    conj: LinearMap,
}

impl InvolutiveAlgebra {
    pub fn new(base: Algebra, conj: LinearMap) -> Result<InvolutiveAlgebra> {
        check_endomorphism(&base, &conj)?;
        if !conj.compose(&conj).is_identity() {
            return Err(Error::NotAnInvolution);
        }
        Ok(InvolutiveAlgebra { base, conj })
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn conj(&self) -> &LinearMap {
        &self.conj
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn dual_numbers() -> Algebra {
        Algebra::from_i64_entries(Q, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
    }

    #[test]
    fn dual_number_product() {
        let a = dual_numbers();
        let x = Vector::from_i64(Q, &[1, 2]);
        let y = Vector::from_i64(Q, &[3, 4]);
        assert_eq!(a.multiply(&x, &y).unwrap(), Vector::from_i64(Q, &[3, 10]));
        assert!(a.is_associative());
        assert!(a.is_commutative());
    }

    #[test]
    fn duplicate_and_out_of_range_entries() {
        let e = Algebra::from_entries(Q, 2, [(0, 0, 0, Q.one()), (0, 0, 0, Q.one())]);
        assert_eq!(e, Err(Error::DuplicateEntry(0, 0, 0)));
        let e = Algebra::from_entries(Q, 2, [(0, 2, 0, Q.one())]);
        assert_eq!(e, Err(Error::IndexOutOfRange { index: 2, dim: 2 }));
    }

    #[test]
    fn operators_match_products() {
        let a = Algebra::from_i64_entries(Q, 2, &[(0, 1, 0, 2), (1, 1, 1, -1), (1, 0, 1, 3)]);
        let x = Vector::from_i64(Q, &[1, -2]);
        let y = Vector::from_i64(Q, &[5, 7]);
        assert_eq!(a.left_op(&x).unwrap().apply(&y), a.mul(&x, &y));
        assert_eq!(a.right_op(&y).unwrap().apply(&x), a.mul(&x, &y));
    }

    #[test]
    fn mismatched_operands_are_rejected() {
        let a = dual_numbers();
        let x = Vector::from_i64(Q, &[1, 2, 3]);
        assert!(matches!(a.multiply(&x, &x), Err(Error::DimensionMismatch { .. })));
        let f = Field::prime(3).unwrap();
        let y = Vector::from_i64(f, &[1, 2]);
        assert!(matches!(a.multiply(&y, &y), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn involution_is_checked() {
        let a = dual_numbers();
        let bad = Matrix::from_i64_rows(Q, &[&[1, 1], &[0, 1]]);
        assert_eq!(InvolutiveAlgebra::new(a.clone(), bad), Err(Error::NotAnInvolution));
        let good = Matrix::from_i64_rows(Q, &[&[1, 0], &[0, -1]]);
        assert!(InvolutiveAlgebra::new(a, good).is_ok());
    }

    #[test]
    fn identity_twist_of_associative_algebra() {
        let a = dual_numbers();
        let h = HomAlgebra::new(a, Matrix::identity(Q, 2)).unwrap();
        assert!(h.is_hom_associative());
        assert!(h.is_multiplicative());
    }

    #[test]
    fn change_basis_preserves_structure() {
        let a = dual_numbers();
        let p = Matrix::from_i64_rows(Q, &[&[1, 1], &[0, 1]]);
        let b = a.change_basis(&p).unwrap();
        assert!(b.is_associative());
        assert!(b.is_commutative());
        assert_ne!(a, b);
    }
}
