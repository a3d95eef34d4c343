use alloc::format;
use alloc::vec::Vec;

use super::twist::twist_space;
use super::unities::{hu_n, solve_streaming, HuVariant};
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result, Side};
use crate::exactlin::{eigenspace, Subspace};
use crate::subspaces::{annihilator_of_algebra, unity, AnnihilatorSide, UnitySide};

/// `AC(A) = Z(A) ∩ N(A) ∩ Ann^l([A, A, A])` for a two-sided unital algebra.
///
/// The result is cross-checked against the image `{ α(1) : α ∈ Twist(A) }`.
pub fn ac_two_sided(a: &Algebra) -> Result<Subspace> {
    let one = unity(a, UnitySide::TwoSided).ok_or(Error::NotTwoSidedUnital)?;
    let formula = hu_n(a, HuVariant::TwoSided);
    let twists = twist_space(a);
    let images: Vec<Element> = twists.basis_maps().iter().map(|m| m.apply(&one)).collect();
    let via_twists = Subspace::span(a.field(), a.dim(), &images)?;
    if via_twists != formula {
        return Err(Error::InternalCheckFailure(format!(
            "AC formula has dimension {} but the twist images span dimension {}",
            formula.dim(),
            via_twists.dim()
        )));
    }
    Ok(formula)
}

enum LeftCondition {
    /// `a(xz) = x(az)`
    Exchange(usize, usize),
    /// `(ax)(yz) = a((xy)z)`
    Regroup(usize, usize, usize),
}

/// `AC_l(A) = { a : a(xz) = x(az), (ax)(yz) = a((xy)z) for all x, y, z }`.
pub fn ac_left(a: &Algebra) -> Subspace {
    let n = a.dim();
    let b = a.basis_elements();
    let products: Vec<Element> = (0..n * n).map(|ij| a.basis_product(ij / n, ij % n)).collect();
    let p = |i: usize, j: usize| &products[i * n + j];
    let conditions = (0..n)
        .flat_map(|x| (0..n).map(move |z| LeftCondition::Exchange(x, z)))
        .chain(crate::algebra::triples(n).map(|[x, y, z]| LeftCondition::Regroup(x, y, z)));
    solve_streaming(a, conditions, |c, m| match *c {
        LeftCondition::Exchange(x, z) => &a.mul(&b[m], p(x, z)) - &a.mul(&b[x], p(m, z)),
        LeftCondition::Regroup(x, y, z) => &a.mul(p(m, x), p(y, z)) - &a.mul(&b[m], &a.mul(p(x, y), &b[z])),
    })
}

/// `AC_r(A) = { a : (xy)a = (xa)y, (xy)(za) = (x(yz))a }`, the left construction of the opposite algebra.
pub fn ac_right(a: &Algebra) -> Subspace {
    ac_left(&a.opposite())
}

/// The one-sided AC construction together with its splitting.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct OneSidedAc {
    pub side: Side,
    /// Canonical unity of that side.
    pub unity: Element,
    /// `AC_l(A)` or `AC_r(A)`.
    pub ac: Subspace,
    /// `AC_l(A)·1_l` or `1_r·AC_r(A)`.
    pub ac_unit: Subspace,
    /// `Ann^l(A)` or `Ann^r(A)`.
    pub annihilator: Subspace,
    /// Whether `ac = ac_unit ⊕ annihilator`.
    pub split_ok: bool,
}

/// `AC_l(A)` and `AC_l(A)·1_l` for a left-unital algebra (or the right versions).
///
/// Fails with `InternalCheckFailure` if `AC_l(A)·1_l` differs from the fixed points of
/// `R_{1_l}` inside `AC_l(A)`, or if the splitting `AC_l(A) = AC_l(A)·1_l ⊕ Ann^l(A)` fails.
pub fn ac_one_sided(a: &Algebra, side: Side) -> Result<OneSidedAc> {
    let work = match side {
        Side::Left => a.clone(),
        Side::Right => a.opposite(),
    };
    let one = unity(&work, UnitySide::Left).ok_or(Error::NotUnitalOnSide(side))?;
    let ac = ac_left(&work);
    let r_one = work.right_mul_map(&one);
    let ac_unit = ac.image(&r_one);
    let fixed = ac.meet(&eigenspace(&r_one, &work.field().one())?)?;
    if fixed != ac_unit {
        return Err(Error::InternalCheckFailure(format!(
            "{side} AC times the unity has dimension {} but its fixed points have dimension {}",
            ac_unit.dim(),
            fixed.dim()
        )));
    }
    let ann = annihilator_of_algebra(&work, AnnihilatorSide::Left);
    let split_ok = Subspace::is_direct_sum_of(&ac, &ac_unit, &ann)?;
    if !split_ok {
        return Err(Error::InternalCheckFailure(format!(
            "{side} AC is not the direct sum of its unital part and the {side} annihilator"
        )));
    }
    Ok(OneSidedAc {
        side,
        unity: one,
        ac,
        ac_unit,
        annihilator: ann,
        split_ok,
    })
}
