use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::ac::ac_one_sided;
use super::twist::twist_space;
use super::unities::{hu_n, solve_streaming, HuVariant};
use crate::algebra::{Algebra, Element, HomAlgebra};
use crate::error::{Error, Result, Side};
use crate::report::Check;
use crate::scalar::Field;
use crate::subspaces::{
    center, enumerate_subspace, idempotents, is_domain_sampled, unity, UnitySide, IDEMPOTENT_SEARCH_CAP,
};

/// Seed of the sampled domain test used throughout the reports.
pub(crate) const DOMAIN_SEED: u64 = 0x5eed;

/// Correspondence between twisting maps and the unital part of the AC construction.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BijectionReport {
    pub side: Side,
    pub twist_dim: usize,
    pub ac_unit_dim: usize,
    /// Idempotents of `AC_l(A)·1_l`, when they could be enumerated.
    pub idempotents: Option<Vec<Element>>,
    pub checks: Vec<Check>,
}

/// Checks, for a unital algebra, that `α ↦ α(1)` and `b ↦ L_b` (or `R_b`) are mutually
/// inverse between the twist space and `AC_l(A)·1_l` (or `1_r·AC_r(A)`), that every
/// element of `AC_l(A)` yields a hom-associative multiplication operator, that
/// multiplicative twists correspond to idempotents, and the associative special cases.
pub fn bijection_report(a: &Algebra, side: Side) -> Result<BijectionReport> {
    let work = match side {
        Side::Left => a.clone(),
        Side::Right => a.opposite(),
    };
    let ac = ac_one_sided(&work, Side::Left).map_err(|e| match e {
        Error::NotUnitalOnSide(_) => Error::NotUnitalOnSide(side),
        other => other,
    })?;
    let one = &ac.unity;
    let twists = twist_space(&work);
    let maps = twists.basis_maps();
    let unit_basis = ac.ac_unit.basis();
    let mut checks = Vec::new();

    checks.push(Check::expect("dim Twist = dim AC·1", twists.dim() == ac.ac_unit.dim(), || {
        format!("{} vs {}", twists.dim(), ac.ac_unit.dim())
    }));
    let images: Vec<Element> = maps.iter().map(|m| m.apply(one)).collect();
    let phi_image = crate::Subspace::span(work.field(), work.dim(), &images)?;
    checks.push(Check::expect("φ(Twist) = AC·1", phi_image == ac.ac_unit, || {
        "image of evaluation at the unity differs".to_string()
    }));
    checks.push(Check::expect(
        "ψ(AC·1) ⊆ Twist",
        unit_basis.iter().all(|b| twists.contains(&work.left_mul_map(b))),
        || "some multiplication operator is not a twist".to_string(),
    ));
    checks.push(Check::expect(
        "ψ∘φ = id on Twist",
        maps.iter().all(|m| work.left_mul_map(&m.apply(one)) == *m),
        || "a twist is not the multiplication by its value at the unity".to_string(),
    ));
    checks.push(Check::expect(
        "φ∘ψ = id on AC·1",
        unit_basis.iter().all(|b| work.mul(b, one) == *b),
        || "b·1 ≠ b for some basis vector".to_string(),
    ));
    checks.push(Check::expect(
        "every a ∈ AC gives a hom-associative multiplication operator",
        ac.ac.basis().iter().all(|x| {
            HomAlgebra::new(work.clone(), work.left_mul_map(x)).expect("endomorphism").is_hom_associative()
        }),
        || "a basis vector of AC fails".to_string(),
    ));

    let (idem, check) = idempotent_correspondence(&work, &ac.ac_unit);
    checks.push(check);
    checks.extend(associative_case(&work));

    Ok(BijectionReport {
        side,
        twist_dim: twists.dim(),
        ac_unit_dim: ac.ac_unit.dim(),
        idempotents: idem,
        checks,
    })
}

fn mult_op_is_multiplicative(a: &Algebra, b: &Element) -> bool {
    crate::algebra::is_multiplicative_witness(a, &a.left_mul_map(b)).is_none()
}

fn idempotent_correspondence(a: &Algebra, unit: &crate::Subspace) -> (Option<Vec<Element>>, Check) {
    const NAME: &str = "multiplicative twists ↔ idempotents of AC·1";
    let idem = match idempotents(a, unit, IDEMPOTENT_SEARCH_CAP) {
        Ok(v) => v,
        Err(e) => return (None, Check::skipped(NAME, e.to_string())),
    };
    if let Some(e) = idem.iter().find(|e| !mult_op_is_multiplicative(a, e)) {
        return (Some(idem.clone()), Check::fail(NAME, format!("idempotent {e} gives a non-multiplicative map")));
    }
    // Converse: exhaustive over a prime field, sampled over Q.
    let bad = match a.field() {
        Field::Prime(p) => enumerate_subspace(unit, p)
            .find(|b| mult_op_is_multiplicative(a, b) && !idem.contains(b)),
        Field::Rational => {
            let basis = unit.basis();
            let mut samples = basis.clone();
            for i in 0..basis.len() {
                for j in i + 1..basis.len() {
                    samples.push(&basis[i] + &basis[j]);
                    samples.push(&basis[i] - &basis[j]);
                }
            }
            samples.into_iter().find(|b| mult_op_is_multiplicative(a, b) && a.mul(b, b) != *b)
        }
    };
    let check = match bad {
        None => Check::pass(NAME),
        Some(b) => Check::fail(NAME, format!("{b} gives a multiplicative map but is not idempotent")),
    };
    (Some(idem), check)
}

fn associative_case(a: &Algebra) -> Vec<Check> {
    if !a.is_associative() {
        return alloc::vec![Check::skipped("associative case", "algebra is not associative")];
    }
    let n = a.dim();
    let b = a.basis_elements();
    let ac = super::ac::ac_left(a);
    let z = center(a);
    let simplified = solve_streaming(a, (0..n).flat_map(|x| (0..n).map(move |y| (x, y))), |&(x, y), m| {
        &a.mul(&a.mul(&b[m], &b[x]), &b[y]) - &a.mul(&b[x], &a.mul(&b[m], &b[y]))
    });
    let mut checks = alloc::vec![
        Check::expect("associative: Z(A) ⊆ AC", ac.contains_subspace(&z), || {
            "a central element is missing from AC".to_string()
        }),
        Check::expect("associative: AC = { a : axz = xaz }", ac == simplified, || {
            format!("dimensions {} vs {}", ac.dim(), simplified.dim())
        }),
    ];
    let two_sided = unity(a, UnitySide::TwoSided).is_some();
    let domain = is_domain_sampled(a, DOMAIN_SEED);
    let name = "associative and two-sided unital, commutative or a domain: AC = Z(A) = AC·1 = HU_n";
    if two_sided || a.is_commutative() || domain {
        let one = unity(a, UnitySide::Left).expect("left-unital");
        let unit = ac.image(&a.right_mul_map(&one));
        let hu = hu_n(a, HuVariant::Left);
        checks.push(Check::expect(name, ac == z && unit == z && hu == z, || {
            format!("dims AC {}, Z {}, AC·1 {}, HU_n {}", ac.dim(), z.dim(), unit.dim(), hu.dim())
        }));
    } else {
        checks.push(Check::skipped(name, "hypotheses do not hold"));
    }
    checks
}
