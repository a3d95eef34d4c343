//! Leibniz, hom-Leibniz and hom-Lie predicates, and the hom-unities of Leibniz algebras.
//!
//! The bracket `[x, y]` is the algebra product.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::algebra::{triples, Algebra, Element, HomAlgebra, LinearMap};
use crate::constructions::yau_twist;
use crate::error::{Error, Result, Side};
use crate::exactlin::{LinearConditions, Subspace, Vector};
use crate::report::Check;
use crate::subspaces::{annihilator, center, find_unities, span_of, AnnihilatorSide, SpanKind, UnitySide};

/// The hom-Lie identities checked by [`hom_lie_check`].
pub const HOM_LIE_DEFINITION: &str =
    "[x,y] = -[y,x], [x,x] = 0, [α(x),[y,z]] + [α(y),[z,x]] + [α(z),[x,y]] = 0";

/// Outcome of a (hom-)Leibniz identity check.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LeibnizVerdict {
    pub side: Side,
    pub holds: bool,
    /// First basis triple `(x, y, z)` violating the identity.
    pub witness: Option<[usize; 3]>,
}

fn check_twist(a: &Algebra, twist: &LinearMap) -> Result<()> {
    if twist.rows() != a.dim() || twist.cols() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: twist.rows().max(twist.cols()),
        });
    }
    if twist.field() != a.field() {
        return Err(Error::FieldMismatch {
            expected: a.field(),
            found: twist.field(),
        });
    }
    Ok(())
}

/// Left: `[α(x),[y,z]] = [[x,y],α(z)] + [α(y),[x,z]]`.
/// Right: `[[x,y],α(z)] = [[x,z],α(y)] + [α(x),[y,z]]`.
/// Without a twist these are the classical Leibniz identities.
pub fn leibniz_check(a: &Algebra, side: Side, twist: Option<&LinearMap>) -> Result<LeibnizVerdict> {
    if let Some(t) = twist {
        check_twist(a, t)?;
    }
    let images: Vec<Element> = match twist {
        Some(t) => t.columns(),
        None => a.basis_elements(),
    };
    let p = |i: usize, j: usize| a.basis_product(i, j);
    let witness = triples(a.dim()).find(|&[x, y, z]| {
        let residual = match side {
            Side::Left => &(&a.mul(&images[x], &p(y, z)) - &a.mul(&p(x, y), &images[z])) - &a.mul(&images[y], &p(x, z)),
            Side::Right => &(&a.mul(&p(x, y), &images[z]) - &a.mul(&p(x, z), &images[y])) - &a.mul(&images[x], &p(y, z)),
        };
        !residual.is_zero()
    });
    Ok(LeibnizVerdict {
        side,
        holds: witness.is_none(),
        witness,
    })
}

/// Sides on which `a` is a Leibniz algebra.
pub fn leibniz_sides(a: &Algebra) -> Vec<Side> {
    [Side::Left, Side::Right]
        .into_iter()
        .filter(|&s| leibniz_check(a, s, None).expect("no twist").holds)
        .collect()
}

/// Every twist `α` (flattened row-major) for which `(a, α)` satisfies the hom-Leibniz
/// identity of `side`. The identity is linear in `α`.
pub fn hom_leibniz_twists(a: &Algebra, side: Side) -> Subspace {
    let n = a.dim();
    let field = a.field();
    let mut lc = LinearConditions::new(field, n * n);
    let p = |i: usize, j: usize| a.basis_product(i, j);
    let mut images: Vec<Vector> = Vec::with_capacity(n * n);
    for [x, y, z] in triples(n) {
        images.clear();
        images.resize(n * n, Vector::zeros(field, n));
        // Unknown r*n + c is the coefficient of e_r in α(e_c).
        for r in 0..n {
            let (first, second, third) = match side {
                // [α(x),[y,z]] - [[x,y],α(z)] - [α(y),[x,z]]
                Side::Left => (
                    (x, a.mul(&a.basis_element(r), &p(y, z))),
                    (z, a.mul(&p(x, y), &a.basis_element(r))),
                    (y, a.mul(&a.basis_element(r), &p(x, z))),
                ),
                // [[x,y],α(z)] - [[x,z],α(y)] - [α(x),[y,z]]
                Side::Right => (
                    (z, a.mul(&p(x, y), &a.basis_element(r))),
                    (y, a.mul(&p(x, z), &a.basis_element(r))),
                    (x, a.mul(&a.basis_element(r), &p(y, z))),
                ),
            };
            images[r * n + first.0] = &images[r * n + first.0] + &first.1;
            images[r * n + second.0] = &images[r * n + second.0] - &second.1;
            images[r * n + third.0] = &images[r * n + third.0] - &third.1;
        }
        lc.require_zero(&images);
    }
    lc.solve()
}

/// Whether every product of three factors with `v` in some slot vanishes:
/// `[[v,x],y]`, `[[x,v],y]`, `[[x,y],v]`, `[v,[x,y]]`, `[x,[v,y]]`, `[x,[y,v]]`.
pub fn triple_products_vanish(a: &Algebra, v: &Element) -> bool {
    triple_product_witness(a, v).is_none()
}

fn triple_product_witness(a: &Algebra, v: &Element) -> Option<[usize; 2]> {
    let b = a.basis_elements();
    (0..a.dim()).flat_map(|i| (0..a.dim()).map(move |j| [i, j])).find(|&[i, j]| {
        let (x, y) = (&b[i], &b[j]);
        let vx = a.mul(v, x);
        let xv = a.mul(x, v);
        let xy = a.basis_product(i, j);
        [
            a.mul(&vx, y),
            a.mul(&xv, y),
            a.mul(&xy, v),
            a.mul(v, &xy),
            a.mul(x, &a.mul(v, y)),
            a.mul(x, &a.mul(y, v)),
        ]
        .iter()
        .any(|t| !t.is_zero())
    })
}

/// `C(𝓛) ∩ Ann^l([𝓛,𝓛])` with the relations verified on it.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LeibnizHomUnities {
    pub sides: Vec<Side>,
    pub space: Subspace,
    pub checks: Vec<Check>,
}

/// Computes `C(𝓛) ∩ Ann^l([𝓛,𝓛])` for a Leibniz algebra and checks that it equals the
/// right and two-sided annihilator versions, that its elements are 3-nilpotent in the
/// strong sense of [`triple_products_vanish`], that each basis vector gives a
/// hom-associative `L_a`, and the associator-span identities of each Leibniz side.
pub fn leibniz_hom_unities(a: &Algebra) -> Result<LeibnizHomUnities> {
    let sides = leibniz_sides(a);
    if sides.is_empty() {
        return Err(Error::NotLeibniz);
    }
    let c = center(a);
    let products = span_of(a, SpanKind::Products);
    let with = |side| c.meet(&annihilator(a, &products, side).expect("compatible")).expect("same ambient");
    let space = with(AnnihilatorSide::Left);
    let right = with(AnnihilatorSide::Right);
    let both = with(AnnihilatorSide::Both);
    let mut checks = alloc::vec![
        Check::expect("C ∩ Ann^l([L,L]) = C ∩ Ann^r([L,L])", space == right, || {
            format!("dimensions {} and {}", space.dim(), right.dim())
        }),
        Check::expect("C ∩ Ann^l([L,L]) = C ∩ Ann([L,L])", space == both, || {
            format!("dimensions {} and {}", space.dim(), both.dim())
        }),
    ];
    let basis = space.basis();
    let bad = basis.iter().find_map(|v| triple_product_witness(a, v).map(|w| (v.clone(), w)));
    checks.push(Check::expect("every triple product involving HU_n vanishes", bad.is_none(), || {
        let (v, [i, j]) = bad.clone().expect("witness");
        format!("v = {v} with basis pair ({i}, {j}) in characteristic {}", a.field().characteristic())
    }));
    checks.push(Check::expect(
        "L_a is hom-associative for every basis vector a of HU_n",
        basis.iter().all(|v| HomAlgebra::new(a.clone(), a.left_mul_map(v)).expect("endomorphism").is_hom_associative()),
        || "some L_a is not hom-associative".to_string(),
    ));
    let assoc = span_of(a, SpanKind::Associators);
    let b = a.basis_elements();
    // From the Leibniz rule: left gives [a,b,c] = -[b,[a,c]], right gives [a,b,c] = [[a,c],b].
    for &side in &sides {
        let nested: Vec<Element> = triples(a.dim())
            .map(|[i, j, k]| match side {
                Side::Left => a.mul(&b[i], &a.basis_product(j, k)),
                Side::Right => a.mul(&a.basis_product(i, j), &b[k]),
            })
            .collect();
        let nested = Subspace::span(a.field(), a.dim(), &nested)?;
        let name = match side {
            Side::Left => "left Leibniz: associator span = [L,[L,L]]",
            Side::Right => "right Leibniz: associator span = [[L,L],L]",
        };
        checks.push(Check::expect(name, assoc == nested, || {
            format!("dimensions {} and {}", assoc.dim(), nested.dim())
        }));
    }
    Ok(LeibnizHomUnities { sides, space, checks })
}

/// [`leibniz_hom_unities`] as a plain subspace, failing if any of its checks fails.
pub fn hu_n_leibniz(a: &Algebra) -> Result<Subspace> {
    let r = leibniz_hom_unities(a)?;
    if let Some(c) = r.checks.iter().find(|c| c.failed()) {
        return Err(Error::InternalCheckFailure(format!("{}: {}", c.name, c.verdict)));
    }
    Ok(r.space)
}

/// A Leibniz algebra with a unity on either side has zero product.
pub fn unitality_collapse_check(a: &Algebra) -> Check {
    const NAME: &str = "a unital Leibniz algebra has zero product";
    if leibniz_sides(a).is_empty() {
        return Check::skipped(NAME, "not a Leibniz algebra");
    }
    let unital = [UnitySide::Left, UnitySide::Right]
        .into_iter()
        .any(|s| !find_unities(a, s).is_empty());
    if !unital {
        return Check::pass(NAME);
    }
    Check::expect(NAME, a.has_zero_product(), || "unital Leibniz algebra with a nonzero product".to_string())
}

/// Which hypotheses of the crossed-unitality statements held, and the resulting checks.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CrossedUnitalityReport {
    pub hom_associative: bool,
    pub left_unital: bool,
    pub right_unital: bool,
    pub left_hom_leibniz: bool,
    pub right_hom_leibniz: bool,
    pub checks: Vec<Check>,
}

/// For hom-associative `h` with a one-sided unity: right hom-Leibniz with a left unity
/// forces `α(1_l) ∈ Ann^r`, left hom-Leibniz with a right unity forces `α(1_r) ∈ Ann^l`,
/// and a unity on the same side as the Leibniz identity forces `α = 0`.
pub fn crossed_unitality_check(h: &HomAlgebra) -> CrossedUnitalityReport {
    let a = h.base();
    let alpha = h.twist();
    let hom_associative = h.is_hom_associative();
    let left_unity = find_unities(a, UnitySide::Left).particular().cloned();
    let right_unity = find_unities(a, UnitySide::Right).particular().cloned();
    let left_hl = leibniz_check(a, Side::Left, Some(alpha)).expect("endomorphism").holds;
    let right_hl = leibniz_check(a, Side::Right, Some(alpha)).expect("endomorphism").holds;
    let b = a.basis_elements();
    let mut checks = Vec::new();
    let skip = |name: &str, why: &str| Check::skipped(name, why);

    const C1: &str = "right hom-Leibniz with a left unity: α(1_l) ∈ Ann^r";
    const C2: &str = "left hom-Leibniz with a right unity: α(1_r) ∈ Ann^l";
    const C3R: &str = "right hom-Leibniz with a right unity: α = 0";
    const C3L: &str = "left hom-Leibniz with a left unity: α = 0";
    if !hom_associative {
        for name in [C1, C2, C3R, C3L] {
            checks.push(skip(name, "not hom-associative"));
        }
    } else {
        checks.push(match (&left_unity, right_hl) {
            (Some(one), true) => {
                let u = alpha.apply(one);
                Check::expect(C1, b.iter().all(|x| a.mul(x, &u).is_zero()), || format!("α(1_l) = {u}"))
            }
            _ => skip(C1, "hypotheses do not hold"),
        });
        checks.push(match (&right_unity, left_hl) {
            (Some(one), true) => {
                let u = alpha.apply(one);
                Check::expect(C2, b.iter().all(|x| a.mul(&u, x).is_zero()), || format!("α(1_r) = {u}"))
            }
            _ => skip(C2, "hypotheses do not hold"),
        });
        checks.push(if right_unity.is_some() && right_hl {
            Check::expect(C3R, alpha.is_zero(), || "nonzero twist".to_string())
        } else {
            skip(C3R, "hypotheses do not hold")
        });
        checks.push(if left_unity.is_some() && left_hl {
            Check::expect(C3L, alpha.is_zero(), || "nonzero twist".to_string())
        } else {
            skip(C3L, "hypotheses do not hold")
        });
    }
    const C4: &str = "a nonzero twist is never unital, hom-associative and hom-Leibniz on the opposite side";
    let violation = !alpha.is_zero()
        && hom_associative
        && ((left_unity.is_some() && right_hl) || (right_unity.is_some() && left_hl));
    checks.push(Check::expect(C4, !violation, || "all hypotheses hold with α ≠ 0".to_string()));

    CrossedUnitalityReport {
        hom_associative,
        left_unital: left_unity.is_some(),
        right_unital: right_unity.is_some(),
        left_hom_leibniz: left_hl,
        right_hom_leibniz: right_hl,
        checks,
    }
}

/// Which hom-Lie identity fails first.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HomLieWitness {
    SkewSymmetry([usize; 2]),
    Alternating(usize),
    HomJacobi([usize; 3]),
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HomLieVerdict {
    pub holds: bool,
    pub witness: Option<HomLieWitness>,
}

/// Checks the identities of [`HOM_LIE_DEFINITION`] on basis elements.
pub fn hom_lie_check(h: &HomAlgebra) -> HomLieVerdict {
    let a = h.base();
    let n = a.dim();
    let images = h.twist().columns();
    let p = |i: usize, j: usize| a.basis_product(i, j);
    let witness = (0..n)
        .flat_map(|i| (i..n).map(move |j| [i, j]))
        .find(|&[i, j]| !(&p(i, j) + &p(j, i)).is_zero())
        .map(HomLieWitness::SkewSymmetry)
        .or_else(|| (0..n).find(|&i| !p(i, i).is_zero()).map(HomLieWitness::Alternating))
        .or_else(|| {
            triples(n)
                .find(|&[x, y, z]| {
                    let s = &(&a.mul(&images[x], &p(y, z)) + &a.mul(&images[y], &p(z, x))) + &a.mul(&images[z], &p(x, y));
                    !s.is_zero()
                })
                .map(HomLieWitness::HomJacobi)
        });
    HomLieVerdict {
        holds: witness.is_none(),
        witness,
    }
}

/// The Yau twist `(𝓛, α∘[·,·], α∘α)` of a multiplicative hom-Leibniz algebra `(𝓛, [·,·], α)`,
/// where `α = L_mult` with `mult = [mult, w]` on the right side, or `α = R_mult` with
/// `mult = [w, mult]` on the left side.
///
/// The result is checked to be a multiplicative hom-Lie algebra with skew-symmetric product.
pub fn leibniz_yau_to_homlie(a: &Algebra, mult: &Element, w: &Element, side: Side) -> Result<HomAlgebra> {
    a.multiply(mult, w)?;
    let (alpha, fixed) = match side {
        Side::Right => (a.left_mul_map(mult), a.mul(mult, w)),
        Side::Left => (a.right_mul_map(mult), a.mul(w, mult)),
    };
    if fixed != *mult {
        return Err(Error::PreconditionViolated(match side {
            Side::Right => "mult ≠ [mult, w]".into(),
            Side::Left => "mult ≠ [w, mult]".into(),
        }));
    }
    if !leibniz_check(a, side, Some(&alpha))?.holds {
        return Err(Error::PreconditionViolated(format!("not {side} hom-Leibniz for the multiplication operator")));
    }
    if crate::algebra::is_multiplicative_witness(a, &alpha).is_some() {
        return Err(Error::PreconditionViolated("the multiplication operator is not multiplicative".into()));
    }
    let twisted = yau_twist(a, &alpha)?;
    let squared = alpha.compose(&alpha);
    let out = HomAlgebra::new(twisted.base().clone(), squared)?;
    let hom_lie = hom_lie_check(&out);
    if !hom_lie.holds {
        return Err(Error::InternalCheckFailure(format!("Yau twist is not hom-Lie: {:?}", hom_lie.witness)));
    }
    if !out.is_multiplicative() {
        return Err(Error::InternalCheckFailure("Yau twist is not multiplicative".into()));
    }
    Ok(out)
}

/// Everything the Leibniz module can say about `a`, optionally with a twist.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LeibnizReport {
    pub left: LeibnizVerdict,
    pub right: LeibnizVerdict,
    pub hom_unities: Option<LeibnizHomUnities>,
    pub unitality_collapse: Check,
    pub twisted: Option<TwistedLeibnizReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TwistedLeibnizReport {
    pub left: LeibnizVerdict,
    pub right: LeibnizVerdict,
    pub crossed_unitality: CrossedUnitalityReport,
    pub hom_lie: HomLieVerdict,
    pub hom_lie_definition: &'static str,
}

pub fn leibniz_report(a: &Algebra, twist: Option<&LinearMap>) -> Result<LeibnizReport> {
    let twisted = match twist {
        Some(t) => {
            let h = HomAlgebra::new(a.clone(), t.clone())?;
            Some(TwistedLeibnizReport {
                left: leibniz_check(a, Side::Left, Some(t))?,
                right: leibniz_check(a, Side::Right, Some(t))?,
                crossed_unitality: crossed_unitality_check(&h),
                hom_lie: hom_lie_check(&h),
                hom_lie_definition: HOM_LIE_DEFINITION,
            })
        }
        None => None,
    };
    Ok(LeibnizReport {
        left: leibniz_check(a, Side::Left, None)?,
        right: leibniz_check(a, Side::Right, None)?,
        hom_unities: match leibniz_hom_unities(a) {
            Ok(r) => Some(r),
            Err(Error::NotLeibniz) => None,
            Err(e) => return Err(e),
        },
        unitality_collapse: unitality_collapse_check(a),
        twisted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog::{cross_product, leib2, sl2};
    use crate::{Field, Matrix};

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn lie_algebras_are_leibniz_on_both_sides() {
        for a in [cross_product(Field::Rational), sl2(Field::Rational)] {
            assert_eq!(leibniz_sides(&a), alloc::vec![Side::Left, Side::Right]);
            let id = Matrix::identity(a.field(), a.dim());
            assert!(hom_lie_check(&HomAlgebra::new(a, id).unwrap()).holds);
        }
    }

    #[test]
    fn leib2_is_right_leibniz_with_full_hom_unities() {
        let a = leib2(Field::Rational);
        assert!(leibniz_check(&a, Side::Right, None).unwrap().holds);
        let hu = hu_n_leibniz(&a).unwrap();
        assert!(hu.is_full());
        let ly = a.left_mul_map(&a.basis_element(1));
        assert!(HomAlgebra::new(a.clone(), ly).unwrap().is_hom_associative());
        let id = Matrix::identity(a.field(), 2);
        let v = hom_lie_check(&HomAlgebra::new(a, id).unwrap());
        assert_eq!(v.witness, Some(HomLieWitness::SkewSymmetry([1, 1])));
    }

    #[test]
    fn perturbed_leib2_fails_with_witness() {
        let a = Algebra::from_i64_entries(Field::Rational, 2, &[(1, 1, 0, 1), (0, 1, 1, 1)]);
        assert!(leibniz_sides(&a).is_empty());
        assert!(leibniz_check(&a, Side::Right, None).unwrap().witness.is_some());
        assert_eq!(hu_n_leibniz(&a), Err(Error::NotLeibniz));
    }

    #[test]
    fn hom_leibniz_twists_match_direct_check() {
        for a in [leib2(Field::Rational), cross_product(f2()), leib2(f2())] {
            for side in [Side::Left, Side::Right] {
                let s = hom_leibniz_twists(&a, side);
                for v in s.basis() {
                    let m = Matrix::unflatten(a.dim(), a.dim(), &v);
                    assert!(leibniz_check(&a, side, Some(&m)).unwrap().holds);
                }
                let id = Matrix::identity(a.field(), a.dim());
                assert_eq!(
                    s.contains(&id.flatten()),
                    leibniz_check(&a, side, None).unwrap().holds
                );
            }
        }
    }

    #[test]
    fn three_nilpotency_needs_odd_characteristic() {
        // For central a annihilating [L,L], the Leibniz rule only gives 2[[a,b],c] = 0.
        let a = crate::constructions::catalog::char_two_leibniz();
        assert_eq!(leibniz_sides(&a), alloc::vec![Side::Left, Side::Right]);
        let r = leibniz_hom_unities(&a).unwrap();
        assert!(r.space.contains(&a.basis_element(0)));
        let failed: Vec<_> = r.checks.iter().filter(|c| c.failed()).map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["every triple product involving HU_n vanishes"]);
        // Over Q the same table is not Leibniz at all.
        let q = Algebra::from_i64_entries(Field::Rational, 4, &[(0, 1, 2, 1), (1, 0, 2, 1), (2, 1, 3, 1), (1, 2, 3, 1)]);
        assert!(leibniz_sides(&q).is_empty());
    }

    #[test]
    fn unitality_collapse() {
        assert!(unitality_collapse_check(&leib2(Field::Rational)).passed());
        let zero_plus = crate::constructions::unitalize(&Algebra::zero(Field::Rational, 2)).algebra;
        assert!(matches!(unitality_collapse_check(&zero_plus).verdict, crate::report::Verdict::Skipped(_)));
        // The ground field is not Leibniz: [[1,1],1] = 1 but [[1,1],1] + [1,[1,1]] = 2.
        let f = crate::constructions::catalog::ground(Field::Rational);
        assert!(matches!(unitality_collapse_check(&f).verdict, crate::report::Verdict::Skipped(_)));
    }

    #[test]
    fn zero_multiplier_gives_trivial_hom_lie() {
        let a = leib2(Field::Rational);
        let z = a.zero_element();
        let h = leibniz_yau_to_homlie(&a, &z, &a.basis_element(1), Side::Right).unwrap();
        assert!(h.base().has_zero_product());
        let e = leibniz_yau_to_homlie(&a, &a.basis_element(0), &a.basis_element(1), Side::Right);
        assert!(matches!(e, Err(Error::PreconditionViolated(_))));
    }
}
