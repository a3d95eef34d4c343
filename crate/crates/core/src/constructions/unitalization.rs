use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::exactlin::{LinearConditions, Matrix, Subspace, Vector};
use crate::homstruct::{ac_two_sided, hu_n, HuVariant};
use crate::subspaces::{center, full_nucleus, span_of, SpanKind};

/// `A ⊕ F·1` with an adjoined two-sided unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unitalization {
    /// Basis `e_0, ..., e_{n-1}` of `A` followed by the unity at index `n`.
    pub algebra: Algebra,
    /// The inclusion `A → A⁺` as an `(n+1) × n` matrix.
    pub embedding: Matrix,
}

impl Unitalization {
    pub fn unity(&self) -> Element {
        self.algebra.basis_element(self.algebra.dim() - 1)
    }
}

/// `(a, λ)(b, μ) = (ab + λb + μa, λμ)`.
pub fn unitalize(a: &Algebra) -> Unitalization {
    let n = a.dim();
    let field = a.field();
    let algebra = Algebra::from_basis_products(field, n + 1, |i, j| match (i == n, j == n) {
        (true, _) => Vector::unit(field, n + 1, j),
        (false, true) => Vector::unit(field, n + 1, i),
        (false, false) => embed(&a.basis_product(i, j)),
    });
    let columns: Vec<Vector> = (0..n).map(|i| Vector::unit(field, n + 1, i)).collect();
    Unitalization {
        algebra,
        embedding: Matrix::from_columns(field, n + 1, &columns),
    }
}

fn embed(v: &Vector) -> Vector {
    let mut e = v.entries().to_vec();
    e.push(v.field().zero());
    Vector::new(v.field(), e).expect("same field")
}

/// `AC(A⁺)` from the description `{ (b, μ) : b ∈ Z(A) ∩ N(A), b·X = -μX for X ∈ [A, A, A] }`:
/// the associator span lies in the `-μ` eigenspace of `L_b`.
///
/// Cross-checked against the direct computation on the unitalization, against
/// `ker(π) = HU_n(A)` for the projection `π(b, μ) = μ`, and against
/// `λb - μa ∈ HU_n(A)` for pairs of basis vectors.
pub fn ac_unitalized_by_eigenspaces(a: &Algebra) -> Result<Subspace> {
    let n = a.dim();
    let field = a.field();
    let zn = center(a).meet(&full_nucleus(a))?;
    let eq = zn.equations();
    let mut lc = LinearConditions::new(field, n + 1);
    for r in 0..eq.rows() {
        let mut images: Vec<Vector> = (0..n).map(|m| Vector::new(field, alloc::vec![eq.get(r, m).clone()]).expect("field")).collect();
        images.push(Vector::zeros(field, 1));
        lc.require_zero(&images);
    }
    let basis = a.basis_elements();
    for x in span_of(a, SpanKind::Associators).basis() {
        let mut images: Vec<Vector> = basis.iter().map(|e| a.mul(e, &x)).collect();
        images.push(x);
        lc.require_zero(&images);
    }
    let ac = lc.solve();

    let plus = unitalize(a);
    let direct = ac_two_sided(&plus.algebra)?;
    if direct != ac {
        return Err(Error::InternalCheckFailure(format!(
            "eigenspace description has dimension {} but AC of the unitalization has dimension {}",
            ac.dim(),
            direct.dim()
        )));
    }
    let hu = hu_n(a, HuVariant::TwoSided);
    let kernel = ac.meet(&Subspace::full(field, n).image(&plus.embedding))?;
    if kernel != hu.image(&plus.embedding) {
        return Err(Error::InternalCheckFailure(format!(
            "kernel of the projection has dimension {} but HU_n has dimension {}",
            kernel.dim(),
            hu.dim()
        )));
    }
    let split = |v: &Vector| (Vector::new(field, v.entries()[..n].to_vec()).expect("field"), v.get(n).clone());
    let acb: Vec<_> = ac.basis().iter().map(split).collect();
    for (x, lambda) in &acb {
        for (y, mu) in &acb {
            let d = &y.scale(lambda) - &x.scale(mu);
            if !hu.contains(&d) {
                return Err(Error::InternalCheckFailure("λb - μa lies outside HU_n".into()));
            }
        }
    }
    Ok(ac)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{octonions, truncated_poly};
    use crate::subspaces::{unity, UnitySide};
    use crate::Field;

    #[test]
    fn adjoined_unity_is_two_sided() {
        let a = truncated_poly(Field::Rational, 3, false);
        let plus = unitalize(&a);
        assert_eq!(unity(&plus.algebra, UnitySide::TwoSided), Some(plus.unity()));
        assert!(plus.algebra.is_associative());
    }

    #[test]
    fn eigenspace_description_matches() {
        // Associative: everything central is allowed, plus the unity.
        let a = truncated_poly(Field::Rational, 3, false);
        assert_eq!(ac_unitalized_by_eigenspaces(&a).unwrap().dim(), 4);
        // O⁺ ≅ O × F, so only the unity of the F factor, (1_O, -1) up to sign, survives.
        let o = octonions();
        let ac = ac_unitalized_by_eigenspaces(o.base()).unwrap();
        assert_eq!(ac.dim(), 1);
        let mut v = alloc::vec![0i64; 9];
        v[0] = 1;
        v[8] = -1;
        assert!(ac.contains(&Vector::from_i64(Field::Rational, &v)));
    }
}
