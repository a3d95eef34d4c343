use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::ac::{ac_left, ac_one_sided, ac_two_sided, OneSidedAc};
use super::bijection::{bijection_report, BijectionReport, DOMAIN_SEED};
use super::tables::{multiplicativity_report, relation_tables_check};
use super::twist::{twist_space, TwistSpace};
use super::unities::{hu_n, hu_t, HuVariant};
use crate::algebra::{Algebra, Element, HomAlgebra, LinearMap};
use crate::constructions::ac_unitalized_by_eigenspaces;
use crate::error::Side;
use crate::exactlin::{Matrix, Subspace};
use crate::report::Check;
use crate::scalar::Field;
use crate::subspaces::{
    annihilator, annihilator_of_algebra, center, centralizer, enumerate_subspace, find_unities, full_nucleus,
    idempotents, is_domain_sampled, is_right_regular, span_of, unity, AnnihilatorSide, SpanKind, UnitySide,
    IDEMPOTENT_SEARCH_CAP,
};

/// Everything computed about an algebra that does not depend on a choice of side.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CommonSection {
    pub associative: bool,
    pub commutative: bool,
    pub two_sided_unital: bool,
    /// Outcome of the sampled domain test (evidence, not proof).
    pub domain_sampled: bool,
    pub center: Subspace,
    pub nucleus: Subspace,
    pub associator_span: Subspace,
    pub annihilator: Subspace,
    /// `Z(A) ∩ N(A) ∩ Ann^l([A, A, A])`.
    pub hu_n: Subspace,
    pub twist_dim: usize,
    pub twist_basis: Vec<Matrix>,
    /// `AC(A)` when the algebra has a two-sided unity.
    pub ac: Option<Subspace>,
    /// `AC` of the unitalization, from the eigenspace description.
    pub unitalization_ac: Option<Subspace>,
    pub checks: Vec<Check>,
}

/// The one-sided computations; the right section of `A` is the left section of its opposite.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SideSection {
    pub unital: bool,
    /// Canonical unity of this side.
    pub unity: Option<Element>,
    /// Dimension of the affine space of unities of this side.
    pub unity_freedom: Option<usize>,
    pub annihilator: Subspace,
    pub ac: Subspace,
    pub ac_unit: Option<Subspace>,
    pub hu_n: Subspace,
    pub hu_t: Subspace,
    /// An element of `hu_t` outside `hu_n`, reported without any claim attached.
    pub hu_t_outside_hu_n: Option<Element>,
    pub bijection: Option<BijectionReport>,
    pub checks: Vec<Check>,
}

/// Full structure report of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HomStructureReport {
    pub field: String,
    pub dim: usize,
    pub common: CommonSection,
    pub left: SideSection,
    pub right: SideSection,
}

impl HomStructureReport {
    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.common.checks.iter().chain(&self.left.checks).chain(&self.right.checks)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks().filter(|c| c.failed()).collect()
    }
}

fn inclusion(name: &str, small: &Subspace, big: &Subspace) -> Check {
    Check::expect(name, big.contains_subspace(small), || {
        format!("dimension {} not contained in dimension {}", small.dim(), big.dim())
    })
}

fn equality(name: &str, x: &Subspace, y: &Subspace) -> Check {
    Check::expect(name, x == y, || format!("dimensions {} and {}", x.dim(), y.dim()))
}

fn meet(x: &Subspace, y: &Subspace) -> Subspace {
    x.meet(y).expect("same ambient space")
}

/// Computes every structural subspace of `a` and re-verifies each relation between them
/// that holds in general or under hypotheses detectable on `a`.
pub fn structure_theorem_audit(a: &Algebra) -> HomStructureReport {
    let twists = twist_space(a);
    let left = side_section(a, &twists);
    let right = side_section(&a.opposite(), &twists);
    let common = common_section(a, &twists, &left, &right);
    HomStructureReport {
        field: a.field().to_string(),
        dim: a.dim(),
        common,
        left,
        right,
    }
}

fn common_section(a: &Algebra, twists: &TwistSpace, left: &SideSection, right: &SideSection) -> CommonSection {
    let field = a.field();
    let n = a.dim();
    let z = center(a);
    let nuc = full_nucleus(a);
    let assoc = span_of(a, SpanKind::Associators);
    let ann = annihilator_of_algebra(a, AnnihilatorSide::Both);
    let hu = hu_n(a, HuVariant::TwoSided);
    let associative = assoc.is_zero();
    let commutative = a.is_commutative();
    let two_sided = unity(a, UnitySide::TwoSided);
    let domain = is_domain_sampled(a, DOMAIN_SEED);
    // Basic inclusions among the hom-unity subspaces.
    let mut checks = alloc::vec![
        inclusion("HU_n ⊆ HU_t (left)", &hu, &left.hu_t),
        inclusion("HU_n ⊆ HU_t (right)", &hu, &right.hu_t),
        inclusion("HU_n ⊆ HU_n (left)", &hu, &left.hu_n),
        inclusion("HU_n ⊆ HU_n (right)", &hu, &right.hu_n),
    ];
    let products = span_of(a, SpanKind::Products);
    let z_products = centralizer(a, &products).expect("compatible");
    if z_products == z {
        checks.push(equality("Z(A·A) = Z(A) ⇒ HU_n = HU_n(left) ∩ HU_n(right)", &hu, &meet(&left.hu_n, &right.hu_n)));
    }
    checks.push(hu_n_ideal_check(a, &hu, &nuc));
    let zn = meet(&z, &nuc);
    checks.push(Check::expect(
        "HU_n is a subalgebra and an ideal of Z(A) ∩ N(A)",
        hu.basis().iter().all(|x| zn.basis().iter().all(|y| hu.contains(&a.mul(x, y)) && hu.contains(&a.mul(y, x)))),
        || "a product leaves HU_n".to_string(),
    ));
    checks.push(Check::expect(
        "HU_n = A ⇔ A commutative and associative",
        hu.is_full() == (associative && commutative),
        || format!("HU_n full: {}, commutative associative: {}", hu.is_full(), associative && commutative),
    ));

    // Twist space two-pass check: basis maps pass the direct test, a complement ray fails.
    let basis_maps = twists.basis_maps();
    checks.push(Check::expect(
        "twist basis maps are hom-associative",
        basis_maps.iter().all(|m| HomAlgebra::new(a.clone(), m.clone()).expect("endomorphism").is_hom_associative()),
        || "a basis map fails the direct check".to_string(),
    ));
    match (0..n * n).find(|&i| !twists.subspace().contains(&crate::Vector::unit(field, n * n, i))) {
        Some(i) => {
            let ray = Matrix::unflatten(n, n, &crate::Vector::unit(field, n * n, i));
            checks.push(Check::expect(
                "a map outside the twist space is not hom-associative",
                !HomAlgebra::new(a.clone(), ray).expect("endomorphism").is_hom_associative(),
                || format!("matrix unit {i} passes but lies outside"),
            ));
        }
        None => checks.push(Check::skipped(
            "a map outside the twist space is not hom-associative",
            "every map is a twist",
        )),
    }

    // Two-sided unital algebras.
    let mut ac = None;
    if let Some(one) = &two_sided {
        match ac_two_sided(a) {
            Ok(s) => {
                checks.push(Check::pass("AC formula agrees with the twist images"));
                checks.push(equality("two-sided unital: AC = HU_n", &s, &hu));
                checks.push(equality("two-sided unital: AC = HU_t (left)", &s, &left.hu_t));
                checks.push(equality("two-sided unital: AC = HU_t (right)", &s, &right.hu_t));
                checks.push(equality("two-sided unital: AC = AC_l ∩ AC_r", &s, &meet(&left.ac, &right.ac)));
                let regular = (!associative).then(|| regular_associator(a)).flatten();
                if regular.is_some() {
                    checks.push(Check::expect("one-sided regular associator ⇒ AC = 0", s.is_zero(), || {
                        format!("AC has dimension {}", s.dim())
                    }));
                }
                ac = Some(s);
            }
            Err(e) => checks.push(Check::fail("AC formula agrees with the twist images", e.to_string())),
        }
        if !associative {
            checks.push(non_injective_twists(a, twists));
        }
        let _ = one;
    }
    if (left.unital || right.unital) && two_sided.is_none() {
        checks.push(equality("one-sided unital: HU_n = AC_l ∩ AC_r", &hu, &meet(&left.ac, &right.ac)));
    }

    // Unitalization.
    let unitalization_ac = match ac_unitalized_by_eigenspaces(a) {
        Ok(s) => {
            checks.push(Check::pass("unitalization: eigenspace description = AC(A⁺), kernel of projection ≅ HU_n"));
            Some(s)
        }
        Err(e) => {
            checks.push(Check::fail(
                "unitalization: eigenspace description = AC(A⁺), kernel of projection ≅ HU_n",
                e.to_string(),
            ));
            None
        }
    };

    CommonSection {
        associative,
        commutative,
        two_sided_unital: two_sided.is_some(),
        domain_sampled: domain,
        center: z,
        nucleus: nuc,
        associator_span: assoc,
        annihilator: ann,
        hu_n: hu,
        twist_dim: twists.dim(),
        twist_basis: basis_maps,
        ac,
        unitalization_ac,
        checks,
    }
}

/// Each basis element `h` of HU_n has `A·h ⊆ N(A)` with `A·h` a two-sided ideal.
fn hu_n_ideal_check(a: &Algebra, hu: &Subspace, nuc: &Subspace) -> Check {
    for h in hu.basis() {
        let r = a.right_mul_map(&h);
        let ah = Subspace::full(a.field(), a.dim()).image(&r);
        if !nuc.contains_subspace(&ah) {
            return Check::fail("A·h ⊆ N(A) is a two-sided ideal for h ∈ HU_n", "A·h leaves the nucleus");
        }
        for y in ah.basis() {
            for x in a.basis_elements() {
                if !ah.contains(&a.mul(&x, &y)) || !ah.contains(&a.mul(&y, &x)) {
                    return Check::fail("A·h ⊆ N(A) is a two-sided ideal for h ∈ HU_n", "A·h is not an ideal");
                }
            }
        }
    }
    Check::pass("A·h ⊆ N(A) is a two-sided ideal for h ∈ HU_n")
}

/// A basis associator that is right- or left-regular, if any.
fn regular_associator(a: &Algebra) -> Option<Element> {
    let b = a.basis_elements();
    crate::algebra::triples(a.dim())
        .map(|[i, j, k]| a.assoc(&b[i], &b[j], &b[k]))
        .filter(|x| !x.is_zero())
        .find(|x| is_right_regular(a, x) || crate::subspaces::is_left_regular(a, x))
}

/// A right-regular basis associator, if any.
fn right_regular_associator(a: &Algebra) -> Option<Element> {
    let b = a.basis_elements();
    crate::algebra::triples(a.dim())
        .map(|[i, j, k]| a.assoc(&b[i], &b[j], &b[k]))
        .filter(|x| !x.is_zero())
        .find(|x| is_right_regular(a, x))
}

fn non_injective_twists(a: &Algebra, twists: &TwistSpace) -> Check {
    const NAME: &str = "two-sided unital, not associative: no twist is injective";
    let mut samples: Vec<LinearMap> = twists.basis_maps();
    if twists.dim() > 0 {
        let coeffs: Vec<_> = (0..twists.dim()).map(|i| a.field().from_i64(i as i64 + 1)).collect();
        samples.push(twists.map_from(&coeffs));
    }
    match samples.iter().position(Matrix::is_injective) {
        None => Check::pass(NAME),
        Some(i) => Check::fail(NAME, format!("sampled twist {i} is injective")),
    }
}

fn side_section(a: &Algebra, twists: &TwistSpace) -> SideSection {
    let ac = ac_left(a);
    let ann = annihilator_of_algebra(a, AnnihilatorSide::Left);
    let hu_n_side = hu_n(a, HuVariant::Left);
    let hu_t_side = hu_t(a, Side::Left);
    let unities = find_unities(a, UnitySide::Left);
    let one = unities.particular().cloned();
    let mut checks = Vec::new();

    checks.push(inclusion("HU_n ⊆ HU_t", &hu_n_side, &hu_t_side));
    let witness = hu_t_side.basis().into_iter().find(|v| !hu_n_side.contains(v));

    if a.is_associative() && ann.is_zero() {
        let z = center(a);
        let hu_two = hu_n(a, HuVariant::TwoSided);
        checks.push(Check::expect(
            "associative with trivial annihilator: HU_t = HU_n = Z(A)",
            hu_t_side == z && hu_two == z,
            || format!("dims HU_t {}, HU_n {}, Z {}", hu_t_side.dim(), hu_two.dim(), z.dim()),
        ));
    }

    if a.is_associative() && a.basis_elements().iter().any(|x| is_right_regular(a, x)) {
        let z = center(a);
        let hu_two = hu_n(a, HuVariant::TwoSided);
        checks.push(Check::expect(
            "associative with a right-regular basis element: HU_t = HU_n = Z(A)",
            hu_t_side == z && hu_two == z,
            || format!("dims HU_t {}, HU_n {}, Z {}", hu_t_side.dim(), hu_two.dim(), z.dim()),
        ));
    }

    if let Some(field_p) = small_f2(a) {
        checks.push(exhaustive_hu_t(a, &hu_t_side, field_p));
    }

    let mut ac_unit = None;
    let mut bijection = None;
    let mut unity_freedom = None;
    if let (Some(one), crate::AffineSet::NonEmpty { direction, .. }) = (&one, &unities) {
        unity_freedom = Some(direction.dim());
        match ac_one_sided(a, Side::Left) {
            Ok(OneSidedAc { ac_unit: unit, .. }) => {
                checks.push(Check::pass("AC = AC·1 ⊕ Ann, and AC·1 = fixed points of R_1 in AC"));
                unital_checks(a, one, &ac, &unit, &ann, &hu_n_side, direction, &mut checks);
                ac_unit = Some(unit);
            }
            Err(e) => checks.push(Check::fail("AC = AC·1 ⊕ Ann, and AC·1 = fixed points of R_1 in AC", e.to_string())),
        }
        match bijection_report(a, Side::Left) {
            Ok(r) => {
                checks.extend(r.checks.iter().cloned());
                bijection = Some(r);
            }
            Err(e) => checks.push(Check::fail("twist ↔ AC·1 correspondence", e.to_string())),
        }
        checks.extend(twist_sample_checks(a, one, twists, ac_unit.as_ref()));
    }

    SideSection {
        unital: one.is_some(),
        unity: one,
        unity_freedom,
        annihilator: ann,
        ac,
        ac_unit,
        hu_n: hu_n_side,
        hu_t: hu_t_side,
        hu_t_outside_hu_n: witness,
        bijection,
        checks,
    }
}

fn small_f2(a: &Algebra) -> Option<u64> {
    match a.field() {
        Field::Prime(2) if a.dim() <= 3 => Some(2),
        _ => None,
    }
}

/// Compares `hu_t` with a brute-force scan of every element.
fn exhaustive_hu_t(a: &Algebra, hu: &Subspace, p: u64) -> Check {
    let full = Subspace::full(a.field(), a.dim());
    let bad = enumerate_subspace(&full, p).find(|x| {
        let ok = HomAlgebra::new(a.clone(), a.left_mul_map(x)).expect("endomorphism").is_hom_associative();
        ok != hu.contains(x)
    });
    Check::expect("HU_t agrees with an exhaustive scan", bad.is_none(), || {
        format!("disagreement at {}", bad.as_ref().expect("witness"))
    })
}

#[allow(clippy::too_many_arguments)]
fn unital_checks(
    a: &Algebra,
    one: &Element,
    ac: &Subspace,
    unit: &Subspace,
    ann: &Subspace,
    hu_n_side: &Subspace,
    unity_directions: &Subspace,
    checks: &mut Vec<Check>,
) {
    checks.push(Check::expect("AC·1 = AC ⇔ Ann = 0", (unit == ac) == ann.is_zero(), || {
        format!("AC·1 = AC: {}, Ann = 0: {}", unit == ac, ann.is_zero())
    }));
    // Another unity 1' = 1 + d can give a different subspace (every e_i is a left unity of
    // the projection algebra), but AC·1' is again the fixed points of R_1' and has the same dimension.
    let independent = unity_directions.basis().iter().all(|d| {
        let r = a.right_mul_map(&(one + d));
        let other = ac.image(&r);
        let fixed = ac.meet(&crate::exactlin::eigenspace(&r, &a.field().one()).expect("square")).expect("same ambient");
        other.dim() == unit.dim() && other == fixed
    });
    checks.push(Check::expect("AC·1' for another unity 1' has the same dimension and is fixed by R_1'", independent, || {
        "another unity gives a subspace of different dimension".to_string()
    }));
    let ub = unit.basis();
    checks.push(Check::expect(
        "AC·1 is a commutative associative subalgebra",
        ub.iter().all(|x| {
            ub.iter().all(|y| {
                let xy = a.mul(x, y);
                unit.contains(&xy) && xy == a.mul(y, x) && ub.iter().all(|z| a.assoc(x, y, z).is_zero())
            })
        }),
        || "closure, commutativity or associativity fails".to_string(),
    ));
    let assoc = span_of(a, SpanKind::Associators);
    let ann_assoc = annihilator(a, &assoc, AnnihilatorSide::Left).expect("compatible");
    checks.push(Check::expect(
        "(AC·1)² ⊆ Ann([A,A,A])",
        ub.iter().all(|x| ub.iter().all(|y| ann_assoc.contains(&a.mul(x, y)))),
        || "a product does not annihilate the associators".to_string(),
    ));
    checks.push(inclusion("HU_n ⊆ AC·1", hu_n_side, unit));
    if let Some(x) = right_regular_associator(a) {
        let assoc_basis = assoc.basis();
        checks.push(Check::expect(
            "right-regular associator ⇒ AC·1 has zero products",
            ub.iter().all(|b| ub.iter().all(|c| a.mul(b, c).is_zero())),
            || "nonzero product in AC·1".to_string(),
        ));
        checks.push(Check::expect(
            "right-regular associator ⇒ b·(b'·X) = 0 on associators",
            ub.iter().all(|b| ub.iter().all(|c| assoc_basis.iter().all(|y| a.mul(b, &a.mul(c, y)).is_zero()))),
            || "nonzero triple product".to_string(),
        ));
        let _ = x;
    }
    if !assoc.is_zero() && is_domain_sampled(a, DOMAIN_SEED) {
        checks.push(Check::expect("domain (sampled), not associative ⇒ AC·1 = 0", unit.is_zero(), || {
            format!("AC·1 has dimension {}", unit.dim())
        }));
    }
}

/// Multiplicativity and relation-table checks on sample twists: the basis maps, one
/// combination of them, and the multiplication operators of idempotents of AC·1.
fn twist_sample_checks(a: &Algebra, one: &Element, twists: &TwistSpace, unit: Option<&Subspace>) -> Vec<Check> {
    let mut samples: Vec<LinearMap> = twists.basis_maps();
    if twists.dim() > 1 {
        let coeffs: Vec<_> = (0..twists.dim()).map(|i| a.field().from_i64(2 * i as i64 + 1)).collect();
        samples.push(twists.map_from(&coeffs));
    }
    if let Some(u) = unit {
        if let Ok(idem) = idempotents(a, u, IDEMPOTENT_SEARCH_CAP) {
            samples.extend(idem.iter().map(|e| a.left_mul_map(e)));
        }
    }
    samples.push(Matrix::zeros(a.field(), a.dim(), a.dim()));
    let mut mult = Check::pass("multiplicativity conditions agree on sample twists");
    let mut tables = Check::pass("relation tables hold for sample twists");
    for (i, f) in samples.iter().enumerate() {
        let h = HomAlgebra::new(a.clone(), f.clone()).expect("endomorphism");
        match multiplicativity_report(&h, one, Side::Left) {
            Ok(r) if r.consistent => {}
            Ok(r) => {
                mult = Check::fail(mult.name.clone(), format!("sample {i}: {r:?}"));
            }
            Err(e) => mult = Check::fail(mult.name.clone(), format!("sample {i}: {e}")),
        }
        match relation_tables_check(&h, one, Side::Left) {
            Ok(r) if r.violations == 0 => {}
            Ok(r) => {
                let first = r.checks.iter().find(|c| c.failed()).map(|c| c.name.clone()).unwrap_or_default();
                tables = Check::fail(tables.name.clone(), format!("sample {i}: {} rows fail, first: {first}", r.violations));
            }
            Err(e) => tables = Check::fail(tables.name.clone(), format!("sample {i}: {e}")),
        }
    }
    alloc::vec![mult, tables]
}
