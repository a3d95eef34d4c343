use alloc::vec::Vec;

use crate::algebra::{triples, Algebra, Element};
use crate::error::Side;
use crate::exactlin::{LinearConditions, Subspace, Vector};
use crate::subspaces::{
    annihilator, center, centralizer, full_nucleus, nucleus, span_of, AnnihilatorSide, NucleusSlot, SpanKind,
};

/// Which hom-unity subspace to compute from the nucleus-type formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HuVariant {
    /// `Z(A) ∩ N(A) ∩ Ann^l([A, A, A])`.
    TwoSided,
    /// `Z_A(A·A) ∩ N^l(A) ∩ N^m(A) ∩ Ann^l([A, A, A])`.
    Left,
    /// `Z_A(A·A) ∩ N^m(A) ∩ N^r(A) ∩ Ann^r([A, A, A])`.
    Right,
}

/// Solves linear conditions on an unknown element, one batch of residual vectors per
/// condition: `residual(c, m)` is the residual of condition `c` at the basis vector `e_m`.
pub(crate) fn solve_streaming<C>(
    a: &Algebra,
    conditions: impl IntoIterator<Item = C>,
    mut residual: impl FnMut(&C, usize) -> Element,
) -> Subspace {
    let n = a.dim();
    let mut lc = LinearConditions::new(a.field(), n);
    let mut images: Vec<Vector> = Vec::with_capacity(n);
    for c in conditions {
        images.clear();
        images.extend((0..n).map(|m| residual(&c, m)));
        lc.require_zero(&images);
    }
    lc.solve()
}

/// `{ a : (A, L_a) is hom-associative }` for `Left`, `{ a : (A, R_a) is hom-associative }` for `Right`.
pub fn hu_t(a: &Algebra, side: Side) -> Subspace {
    let n = a.dim();
    let products: Vec<Element> = (0..n * n).map(|ij| a.basis_product(ij / n, ij % n)).collect();
    // (xy)·α(z) - α(x)·(yz) with α = L_{e_m} or R_{e_m}
    solve_streaming(a, triples(n), |&[i, j, k], m| {
        let (az, ax) = match side {
            Side::Left => (&products[m * n + k], &products[m * n + i]),
            Side::Right => (&products[k * n + m], &products[i * n + m]),
        };
        &a.mul(&products[i * n + j], az) - &a.mul(ax, &products[j * n + k])
    })
}

/// Hom-unity subspace given by centralizer, nucleus and annihilator conditions.
pub fn hu_n(a: &Algebra, variant: HuVariant) -> Subspace {
    let full = Subspace::full(a.field(), a.dim());
    let assoc = span_of(a, SpanKind::Associators);
    let meet = |x: Subspace, y: Subspace| x.meet(&y).expect("same ambient space");
    match variant {
        HuVariant::TwoSided => {
            let ann = annihilator(a, &assoc, AnnihilatorSide::Left).expect("compatible");
            meet(meet(center(a), full_nucleus(a)), ann)
        }
        HuVariant::Left | HuVariant::Right => {
            let products = span_of(a, SpanKind::Products);
            let z = centralizer(a, &products).expect("compatible");
            let (outer, ann_side) = if variant == HuVariant::Left {
                (NucleusSlot::Left, AnnihilatorSide::Left)
            } else {
                (NucleusSlot::Right, AnnihilatorSide::Right)
            };
            let n1 = nucleus(a, outer, &full).expect("compatible");
            let n2 = nucleus(a, NucleusSlot::Middle, &full).expect("compatible");
            let ann = annihilator(a, &assoc, ann_side).expect("compatible");
            meet(meet(meet(z, n1), n2), ann)
        }
    }
}
