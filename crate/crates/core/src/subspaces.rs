//! Distinguished subspaces of an algebra: centralizers, nuclei, annihilators, spans of
//! products, unities and idempotents.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result, Side};
use crate::exactlin::{affine_from_augmented, AffineSet, LinearConditions, RowSpaceBuilder, Subspace, Vector};
use crate::scalar::{Field, Scalar};

/// Which argument of the associator is constrained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NucleusSlot {
    Left,
    Middle,
    Right,
    /// All three slots.
    Full,
}

/// Which annihilator: `Left` is `{v : v·s = 0}`, `Right` is `{v : s·v = 0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnnihilatorSide {
    Left,
    Right,
    Both,
}

/// Which family of elements to span.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanKind {
    Products,
    Commutators,
    Associators,
}

/// Which kind of unity to look for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitySide {
    Left,
    Right,
    TwoSided,
}

impl From<Side> for UnitySide {
    fn from(s: Side) -> Self {
        match s {
            Side::Left => UnitySide::Left,
            Side::Right => UnitySide::Right,
        }
    }
}

/// Default cap on exhaustive idempotent enumeration over prime fields.
pub const IDEMPOTENT_SEARCH_CAP: u128 = 1 << 20;

fn check_subspace(a: &Algebra, s: &Subspace) -> Result<()> {
    if s.field() != a.field() {
        return Err(Error::FieldMismatch {
            expected: a.field(),
            found: s.field(),
        });
    }
    if s.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: s.ambient_dim(),
        });
    }
    Ok(())
}

/// Solves `{ v : residual(e_m) = 0 }` where `residual` is linear and returns one vector per condition.
pub(crate) fn solve_linear<F>(a: &Algebra, mut residuals: F) -> Subspace
where
    F: FnMut(&Element) -> Vec<Element>,
{
    let n = a.dim();
    let per_unknown: Vec<Vec<Element>> = a.basis_elements().iter().map(&mut residuals).collect();
    let mut lc = LinearConditions::new(a.field(), n);
    let conditions = per_unknown.first().map_or(0, Vec::len);
    let mut images = Vec::with_capacity(n);
    for c in 0..conditions {
        images.clear();
        images.extend(per_unknown.iter().map(|r| r[c].clone()));
        lc.require_zero(&images);
    }
    lc.solve()
}

/// `{ v : v·s = s·v for all s ∈ S }`.
pub fn centralizer(a: &Algebra, s: &Subspace) -> Result<Subspace> {
    check_subspace(a, s)?;
    let basis = s.basis();
    Ok(solve_linear(a, |v| basis.iter().map(|b| a.comm(v, b)).collect()))
}

/// `Z(A)`: the commutative center.
pub fn center(a: &Algebra) -> Subspace {
    centralizer(a, &Subspace::full(a.field(), a.dim())).expect("compatible")
}

/// Elements whose associators with all pairs from `S` vanish in the given slot(s).
pub fn nucleus(a: &Algebra, slot: NucleusSlot, relative_to: &Subspace) -> Result<Subspace> {
    check_subspace(a, relative_to)?;
    let basis = relative_to.basis();
    let products: Vec<Vec<Element>> =
        basis.iter().map(|s| basis.iter().map(|t| a.mul(s, t)).collect()).collect();
    let slots: &[NucleusSlot] = match slot {
        NucleusSlot::Full => &[NucleusSlot::Left, NucleusSlot::Middle, NucleusSlot::Right],
        NucleusSlot::Left => &[NucleusSlot::Left],
        NucleusSlot::Middle => &[NucleusSlot::Middle],
        NucleusSlot::Right => &[NucleusSlot::Right],
    };
    Ok(solve_linear(a, |v| {
        let mut out = Vec::new();
        for (i, s) in basis.iter().enumerate() {
            for (j, t) in basis.iter().enumerate() {
                for sl in slots {
                    out.push(match sl {
                        NucleusSlot::Left => &a.mul(&a.mul(v, s), t) - &a.mul(v, &products[i][j]),
                        NucleusSlot::Middle => &a.mul(&a.mul(s, v), t) - &a.mul(s, &a.mul(v, t)),
                        _ => &a.mul(&products[i][j], v) - &a.mul(s, &a.mul(t, v)),
                    });
                }
            }
        }
        out
    }))
}

/// `N(A)`: the full nucleus.
pub fn full_nucleus(a: &Algebra) -> Subspace {
    nucleus(a, NucleusSlot::Full, &Subspace::full(a.field(), a.dim())).expect("compatible")
}

/// Annihilator of `S`.
pub fn annihilator(a: &Algebra, s: &Subspace, side: AnnihilatorSide) -> Result<Subspace> {
    check_subspace(a, s)?;
    let basis = s.basis();
    Ok(solve_linear(a, |v| {
        let mut out = Vec::new();
        for b in &basis {
            if side != AnnihilatorSide::Right {
                out.push(a.mul(v, b));
            }
            if side != AnnihilatorSide::Left {
                out.push(a.mul(b, v));
            }
        }
        out
    }))
}

/// Annihilator of the whole algebra.
pub fn annihilator_of_algebra(a: &Algebra, side: AnnihilatorSide) -> Subspace {
    annihilator(a, &Subspace::full(a.field(), a.dim()), side).expect("compatible")
}

/// Span of all products, commutators or associators of basis elements.
pub fn span_of(a: &Algebra, kind: SpanKind) -> Subspace {
    let n = a.dim();
    let b = a.basis_elements();
    let mut rb = RowSpaceBuilder::new(a.field(), n);
    match kind {
        SpanKind::Products => {
            for i in 0..n {
                for j in 0..n {
                    rb.push_sparse(a.basis_product_terms(i, j));
                }
            }
        }
        SpanKind::Commutators => {
            for i in 0..n {
                for j in 0..i {
                    rb.push_dense(a.comm(&b[i], &b[j]).entries());
                }
            }
        }
        SpanKind::Associators => {
            for i in 0..n {
                for j in 0..n {
                    let p = a.basis_product(i, j);
                    for k in 0..n {
                        let x = &a.mul(&p, &b[k]) - &a.mul(&b[i], &a.basis_product(j, k));
                        rb.push_dense(x.entries());
                    }
                }
            }
        }
    }
    Subspace::from_builder(rb)
}

/// All unities of the requested kind, as an affine set.
pub fn find_unities(a: &Algebra, side: UnitySide) -> AffineSet {
    // Unknown e; L_e = id (left) means Σ_m e_m (e_m · e_c) = e_c for each c.
    let n = a.dim();
    let mut rb = RowSpaceBuilder::new(a.field(), n + 1);
    let sides: &[Side] = match side {
        UnitySide::Left => &[Side::Left],
        UnitySide::Right => &[Side::Right],
        UnitySide::TwoSided => &[Side::Left, Side::Right],
    };
    let mut row = Vec::with_capacity(n + 1);
    for s in sides {
        for c in 0..n {
            for r in 0..n {
                row.clear();
                for m in 0..n {
                    row.push(match s {
                        Side::Left => a.coeff(m, c, r),
                        Side::Right => a.coeff(c, m, r),
                    });
                }
                row.push(if r == c { a.field().one() } else { a.field().zero() });
                rb.push_dense(&row);
            }
        }
    }
    affine_from_augmented(rb)
}

/// The canonical unity of the given kind (free coordinates zero), if one exists.
pub fn unity(a: &Algebra, side: UnitySide) -> Option<Element> {
    find_unities(a, side).particular().cloned()
}

/// Whether `R_x` is injective, i.e. `y·x = 0` forces `y = 0`.
pub fn is_right_regular(a: &Algebra, x: &Element) -> bool {
    a.right_mul_map(x).is_injective()
}

/// Whether `L_x` is injective, i.e. `x·y = 0` forces `y = 0`.
pub fn is_left_regular(a: &Algebra, x: &Element) -> bool {
    a.left_mul_map(x).is_injective()
}

/// Number of seeded random elements tested by [`is_domain_sampled`] besides the basis.
pub const DOMAIN_SAMPLES: usize = 32;

/// Sampled domain test: every basis vector and [`DOMAIN_SAMPLES`] seeded random nonzero
/// elements must have injective left and right multiplication operators.
///
/// A `true` answer is evidence, not a proof, that the algebra has no zero divisors.
pub fn is_domain_sampled(a: &Algebra, seed: u64) -> bool {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut candidates = a.basis_elements();
    while candidates.len() < a.dim() + DOMAIN_SAMPLES {
        let coeffs: Vec<i64> = (0..a.dim()).map(|_| rng.gen_range(-3..=3)).collect();
        let v = Vector::from_i64(a.field(), &coeffs);
        if !v.is_zero() {
            candidates.push(v);
        }
        if a.dim() == 0 {
            break;
        }
    }
    candidates.iter().all(|x| is_left_regular(a, x) && is_right_regular(a, x))
}

/// Every idempotent `x = x·x` of the algebra lying in `within`, sorted.
///
/// Over a prime field the subspace is enumerated exhaustively up to `cap` elements.
/// Over Q subspaces of dimension at most 2 are solved exactly.
pub fn idempotents(a: &Algebra, within: &Subspace, cap: u128) -> Result<Vec<Element>> {
    check_subspace(a, within)?;
    let mut out = match a.field() {
        Field::Prime(p) => enumerate_idempotents(a, within, p, cap)?,
        Field::Rational => rational_idempotents(a, within)?,
    };
    out.sort();
    out.dedup();
    Ok(out)
}

fn enumerate_idempotents(a: &Algebra, within: &Subspace, p: u64, cap: u128) -> Result<Vec<Element>> {
    let size = (p as u128).checked_pow(within.dim() as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::SearchSpaceTooLarge { size, cap });
    }
    Ok(enumerate_subspace(within, p)
        .filter(|x| a.mul(x, x) == *x)
        .collect())
}

/// All elements of a subspace over `F_p`, in coordinate-counter order.
pub fn enumerate_subspace(s: &Subspace, p: u64) -> impl Iterator<Item = Vector> + '_ {
    let d = s.dim();
    let field = s.field();
    let total = (p as u128).pow(d as u32);
    (0..total).map(move |mut idx| {
        let coeffs: Vec<Scalar> = (0..d)
            .map(|_| {
                let c = (idx % p as u128) as u64;
                idx /= p as u128;
                field.element(c)
            })
            .collect();
        s.combination(&coeffs)
    })
}

fn rational_idempotents(a: &Algebra, within: &Subspace) -> Result<Vec<Element>> {
    let basis = within.basis();
    let mut out = alloc::vec![a.zero_element()];
    match basis.len() {
        0 => {}
        1 => out.extend(line_idempotent(a, &basis[0])),
        2 => {
            let (u, v) = (&basis[0], &basis[1]);
            out.extend(line_idempotent(a, u));
            // x = μ(t u + v), μ ≠ 0: μ P(t) = Q(t) with P(t) = t²uu + t(uv+vu) + vv, Q(t) = t u + v.
            let cu = a.mul(u, u);
            let cb = &a.mul(u, v) + &a.mul(v, u);
            let cv = a.mul(v, v);
            let n = a.dim();
            let p_coord = |i: usize| -> Poly { Poly::new(alloc::vec![rat(cv.get(i)), rat(cb.get(i)), rat(cu.get(i))]) };
            let q_coord = |i: usize| -> Poly { Poly::new(alloc::vec![rat(v.get(i)), rat(u.get(i))]) };
            let mut g = Poly::zero();
            for i in 0..n {
                for j in 0..i {
                    let minor = p_coord(i).mul(&q_coord(j)).sub(&p_coord(j).mul(&q_coord(i)));
                    g = g.gcd(&minor);
                }
            }
            let p_is_zero = (0..n).all(|i| p_coord(i).is_zero());
            if g.is_zero() {
                if !p_is_zero {
                    return Err(Error::InfinitelyManyIdempotents);
                }
            } else {
                for t in g.rational_roots()? {
                    let tq = Scalar::Rational(t.clone());
                    let Some(i) = (0..n).find(|&i| !p_coord(i).eval(&t).is_zero()) else { continue };
                    let mu = q_coord(i).eval(&t) / p_coord(i).eval(&t);
                    let x = (&u.scale(&tq) + v).scale(&Scalar::Rational(mu));
                    if a.mul(&x, &x) == x {
                        out.push(x);
                    }
                }
            }
        }
        d => return Err(Error::UnsupportedDimensionOverQ(d)),
    }
    Ok(out)
}

/// The nonzero idempotent on the line through `u`, if any.
fn line_idempotent(a: &Algebra, u: &Element) -> Option<Element> {
    let sq = a.mul(u, u);
    let i = u.support().next()?;
    let c = sq.get(i).checked_div(u.get(i)).ok()?;
    if c.is_zero() || u.scale(&c) != sq {
        return None;
    }
    Some(u.scale(&c.inverse().ok()?))
}

fn rat(s: &Scalar) -> BigRational {
    s.as_rational().clone()
}

/// Dense univariate polynomial over Q, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq)]
struct Poly(Vec<BigRational>);

impl Poly {
    fn new(mut c: Vec<BigRational>) -> Poly {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    fn zero() -> Poly {
        Poly(Vec::new())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = alloc::vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    fn sub(&self, o: &Poly) -> Poly {
        let len = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        Poly::new((0..len).map(|i| self.0.get(i).unwrap_or(&z) - o.0.get(i).unwrap_or(&z)).collect())
    }

    fn rem(&self, d: &Poly) -> Poly {
        let mut r = self.0.clone();
        let lead = d.0.last().expect("nonzero divisor");
        while r.len() >= d.0.len() && !r.is_empty() {
            let shift = r.len() - d.0.len();
            let f = r.last().expect("nonempty") / lead;
            for (i, c) in d.0.iter().enumerate() {
                r[shift + i] -= &f * c;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Poly::new(r)
    }

    fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    fn eval(&self, t: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    /// Distinct rational roots, by the rational root theorem.
    fn rational_roots(&self) -> Result<Vec<BigRational>> {
        let mut roots = Vec::new();
        if self.degree() == 0 {
            return Ok(roots);
        }
        let mut l = BigInt::one();
        for c in &self.0 {
            l = l.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self.0.iter().map(|c| c.numer() * (&l / c.denom())).collect();
        if ints[0].is_zero() {
            roots.push(BigRational::zero());
            let k = ints.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
            ints.drain(..k);
        }
        if ints.len() > 1 {
            let a0 = divisors(&ints[0])?;
            let an = divisors(ints.last().expect("nonempty"))?;
            let poly = Poly::new(ints.iter().map(|c| BigRational::from_integer(c.clone())).collect());
            for p in &a0 {
                for q in &an {
                    for sign in [1, -1] {
                        let t = BigRational::new(BigInt::from(*p * sign), BigInt::from(*q));
                        if poly.eval(&t).is_zero() && !roots.contains(&t) {
                            roots.push(t);
                        }
                    }
                }
            }
        }
        Ok(roots)
    }
}

fn divisors(n: &BigInt) -> Result<Vec<i64>> {
    const LIMIT: u64 = 1 << 40;
    let m = n.abs().to_u64().filter(|&m| m <= LIMIT).ok_or(Error::SearchSpaceTooLarge {
        size: n.abs().to_u128().unwrap_or(u128::MAX),
        cap: LIMIT as u128,
    })?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(d as i64);
            if d * d != m {
                out.push((m / d) as i64);
            }
        }
        d += 1;
    }
    Ok(out)
}
