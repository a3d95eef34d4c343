//! Acceptance criteria, one line of output per criterion.
//!
//! Derived quantities are recomputed here from first principles where practical, rather
//! than read back from the report types under test.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use homalg_core::algebra::triples;
use homalg_core::campaign::{leibniz_instance, left_unital_instance, mixed_instance, yau_sample_maps, Instance};
use homalg_core::constructions::{
    ac_unitalized_by_eigenspaces, complexes, octonions, quaternions, random_algebra, sedenions, truncated_poly,
    unitalize, yau_criterion, yau_twist, GeneratorConfig,
};
use homalg_core::homstruct::{
    ac_left, ac_right, ac_two_sided, hu_n, hu_t, multiplicativity_report, relation_tables_check, twist_space, HuVariant,
};
use homalg_core::leibniz::{hu_n_leibniz, leibniz_check, leibniz_hom_unities, triple_products_vanish, unitality_collapse_check};
use homalg_core::report::Verdict;
use homalg_core::subspaces::{
    annihilator_of_algebra, enumerate_subspace, is_domain_sampled, unity, AnnihilatorSide, UnitySide,
};
use homalg_core::{Algebra, Element, Field, HomAlgebra, LinearMap, Matrix, Side, Subspace, Vector};

const DOMAIN_SEED: u64 = 0x5eed;

/// Criteria expected to fail, with the reason every failure detail must mention.
const KNOWN_FAILURES: &[(u8, &str)] = &[(10, "characteristic 2")];

struct Outcome {
    id: u8,
    failures: Vec<String>,
    note: String,
}

fn criterion(id: u8, title: &str, body: impl FnOnce(&mut Vec<String>) -> String) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let note = body(&mut failures);
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {id:>2} {status} {title} ({note}; {:.1?})", start.elapsed());
    for f in failures.iter().take(5) {
        println!("    {f}");
    }
    if failures.len() > 5 {
        println!("    ... {} more", failures.len() - 5);
    }
    Outcome { id, failures, note }
}

fn left_unital_campaign() -> Vec<Instance> {
    (0..200).map(left_unital_instance).collect()
}

fn full_campaign() -> Vec<Instance> {
    let mut all = left_unital_campaign();
    all.extend((0..150).map(mixed_instance));
    all.extend((0..63).map(leibniz_instance));
    all
}

/// Sample twists of a unital algebra: the twist basis, a combination, and zero.
fn sample_twists(a: &Algebra) -> Vec<LinearMap> {
    let t = twist_space(a);
    let mut maps = t.basis_maps();
    if t.dim() > 1 {
        let coeffs: Vec<_> = (0..t.dim()).map(|i| a.field().from_i64(i as i64 + 1)).collect();
        maps.push(t.map_from(&coeffs));
    }
    maps.push(Matrix::zeros(a.field(), a.dim(), a.dim()));
    maps
}

/// `(unity, side)` for each side on which `a` is unital.
fn unities(a: &Algebra) -> Vec<(Element, Side)> {
    let mut out = Vec::new();
    if let Some(u) = unity(a, UnitySide::Left) {
        out.push((u, Side::Left));
    }
    if let Some(u) = unity(a, UnitySide::Right) {
        out.push((u, Side::Right));
    }
    out
}

/// Twist space computed one triple at a time: the meet of the kernels of each per-triple
/// hom-associator map, assembled with dense matrices and no deduplication.
fn twist_space_by_meets(a: &Algebra) -> Subspace {
    let n = a.dim();
    let field = a.field();
    let mut acc = Subspace::full(field, n * n);
    for [i, j, k] in triples(n) {
        // Column r*n + c: effect of the matrix unit E_rc on (e_i e_j) α(e_k) - α(e_i)(e_j e_k).
        let mut cols = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let er = a.basis_element(r);
                let mut v = a.zero_element();
                if c == k {
                    v = &v + &a.mul(&a.basis_product(i, j), &er);
                }
                if c == i {
                    v = &v - &a.mul(&er, &a.basis_product(j, k));
                }
                cols.push(v);
            }
        }
        let m = Matrix::from_columns(field, n, &cols);
        let kernel = homalg_core::exactlin::kernel(&m);
        acc = acc.meet(&kernel).unwrap();
    }
    acc
}

fn main() -> ExitCode {
    let total = Instant::now();
    let q = Field::Rational;
    let f2 = Field::prime(2).unwrap();
    let lu = left_unital_campaign();
    let all = full_campaign();
    let mut outcomes = Vec::new();

    outcomes.push(criterion(1, "Cayley-Dickson AC and twist dimensions 2/1/0/0", |fail| {
        let start = Instant::now();
        let algebras = [complexes(), quaternions(), octonions(), sedenions()];
        let mut ac = Vec::new();
        let mut tw = Vec::new();
        for x in &algebras {
            ac.push(ac_two_sided(x.base()).map(|s| s.dim()).unwrap_or(usize::MAX));
            tw.push(twist_space(x.base()).dim());
        }
        if ac != [2, 1, 0, 0] {
            fail.push(format!("AC dims {ac:?}"));
        }
        if tw != [2, 1, 0, 0] {
            fail.push(format!("twist dims {tw:?}"));
        }
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs(60) {
            fail.push(format!("took {elapsed:?}"));
        }
        format!("AC {ac:?}, twist {tw:?}")
    }));

    outcomes.push(criterion(2, "quaternion table", |fail| {
        let h = quaternions();
        let a = h.base();
        let e = |i| a.basis_element(i);
        let neg = |v: Vector| -&v;
        let facts = [
            ("i² = -1", a.mul(&e(1), &e(1)) == neg(e(0))),
            ("j² = -1", a.mul(&e(2), &e(2)) == neg(e(0))),
            ("k² = -1", a.mul(&e(3), &e(3)) == neg(e(0))),
            ("ij = k", a.mul(&e(1), &e(2)) == e(3)),
            ("ijk = -1", a.mul(&a.mul(&e(1), &e(2)), &e(3)) == neg(e(0))),
            ("ji = -k", a.mul(&e(2), &e(1)) == neg(e(3))),
        ];
        for (name, ok) in facts {
            if !ok {
                fail.push(name.to_string());
            }
        }
        "6 relations".to_string()
    }));

    outcomes.push(criterion(3, "split AC_l = AC_l·1_l ⊕ Ann^l, 200 left-unital algebras", |fail| {
        let mut with_ann = 0;
        for inst in &lu {
            let a = &inst.algebra;
            let one = unity(a, UnitySide::Left).expect("left-unital");
            let ac = ac_left(a);
            let unit = ac.image(&a.right_mul_map(&one));
            let ann = annihilator_of_algebra(a, AnnihilatorSide::Left);
            with_ann += usize::from(!ann.is_zero());
            let sum = unit.join(&ann).unwrap();
            let direct = sum == ac && unit.dim() + ann.dim() == ac.dim();
            if !direct {
                fail.push(format!("{}: not a direct sum", inst.name));
            }
            if (unit == ac) != ann.is_zero() {
                fail.push(format!("{}: AC·1 = AC is {} but Ann = 0 is {}", inst.name, unit == ac, ann.is_zero()));
            }
        }
        format!("{} algebras, {with_ann} with nonzero Ann^l", lu.len())
    }));

    outcomes.push(criterion(4, "bijection Twist ↔ AC_l·1_l, same 200 algebras", |fail| {
        for inst in &lu {
            let a = &inst.algebra;
            let one = unity(a, UnitySide::Left).unwrap();
            let unit = ac_left(a).image(&a.right_mul_map(&one));
            let t = twist_space(a);
            if t.dim() != unit.dim() {
                fail.push(format!("{}: dims {} vs {}", inst.name, t.dim(), unit.dim()));
            }
            for m in t.basis_maps() {
                if a.left_mul_map(&m.apply(&one)) != m {
                    fail.push(format!("{}: ψ∘φ ≠ id", inst.name));
                }
                if !unit.contains(&m.apply(&one)) {
                    fail.push(format!("{}: φ leaves AC·1", inst.name));
                }
            }
            for b in unit.basis() {
                if a.mul(&b, &one) != b || !t.contains(&a.left_mul_map(&b)) {
                    fail.push(format!("{}: φ∘ψ ≠ id", inst.name));
                }
            }
        }
        format!("{} algebras", lu.len())
    }));

    // Unital instances with their sample twists, shared by criteria 5 and 12.
    let mut unital_cases = Vec::new();
    for inst in &all {
        let us = unities(&inst.algebra);
        if us.is_empty() {
            continue;
        }
        for m in sample_twists(&inst.algebra) {
            let h = HomAlgebra::new(inst.algebra.clone(), m).unwrap();
            if h.is_hom_associative() {
                for (u, side) in &us {
                    unital_cases.push((inst.name.clone(), h.clone(), u.clone(), *side));
                }
            }
        }
    }

    outcomes.push(criterion(5, "multiplicativity equivalence on unital hom-associative instances", |fail| {
        for (name, h, u, side) in &unital_cases {
            let a = h.base();
            let alpha = h.twist();
            let w = alpha.apply(u);
            let conditions = [
                h.is_multiplicative(),
                alpha.compose(alpha) == *alpha,
                alpha.apply(&w) == w,
                a.mul(&w, &w) == w,
            ];
            if conditions.iter().any(|&c| c != conditions[0]) {
                fail.push(format!("{name} ({side}): {conditions:?}"));
            }
            match multiplicativity_report(h, u, *side) {
                Ok(r) if r.consistent && r.multiplicative == conditions[0] => {}
                Ok(r) => fail.push(format!("{name} ({side}): report {r:?}")),
                Err(e) => fail.push(format!("{name} ({side}): {e}")),
            }
        }
        format!("{} cases", unital_cases.len())
    }));

    outcomes.push(criterion(6, "two-pass twist-space oracle", |fail| {
        let mut exhaustive = 0;
        for inst in &all {
            let a = &inst.algebra;
            let n = a.dim();
            let t = twist_space(a);
            if *t.subspace() != twist_space_by_meets(a) {
                fail.push(format!("{}: per-triple meet differs", inst.name));
            }
            for m in t.basis_maps() {
                if !HomAlgebra::new(a.clone(), m).unwrap().is_hom_associative() {
                    fail.push(format!("{}: basis map fails", inst.name));
                }
            }
            if let Some(i) = (0..n * n).find(|&i| !t.subspace().contains(&Vector::unit(a.field(), n * n, i))) {
                let ray = Matrix::unflatten(n, n, &Vector::unit(a.field(), n * n, i));
                if HomAlgebra::new(a.clone(), ray).unwrap().is_hom_associative() {
                    fail.push(format!("{}: complement ray passes", inst.name));
                }
            }
            if a.field() == f2 && n <= 3 {
                exhaustive += 1;
                let hu = hu_t(a, Side::Left);
                for x in enumerate_subspace(&Subspace::full(f2, n), 2) {
                    let ok = HomAlgebra::new(a.clone(), a.left_mul_map(&x)).unwrap().is_hom_associative();
                    if ok != hu.contains(&x) {
                        fail.push(format!("{}: HU_t scan disagrees at {x}", inst.name));
                    }
                }
            }
        }
        format!("{} algebras, {exhaustive} exhaustive HU_t scans", all.len())
    }));

    outcomes.push(criterion(7, "unitalization eigenspace description", |fail| {
        for inst in &all {
            let a = &inst.algebra;
            let n = a.dim();
            let plus = unitalize(a);
            let by_eigen = match ac_unitalized_by_eigenspaces(a) {
                Ok(s) => s,
                Err(e) => {
                    fail.push(format!("{}: {e}", inst.name));
                    continue;
                }
            };
            if ac_two_sided(&plus.algebra).ok() != Some(by_eigen.clone()) {
                fail.push(format!("{}: differs from AC of the unitalization", inst.name));
            }
            // ker π: elements with zero unity coordinate.
            let coordinate = Matrix::from_columns(a.field(), 1, &(0..=n).map(|i| Vector::from_i64(a.field(), &[i64::from(i == n)])).collect::<Vec<_>>());
            let kernel = by_eigen.meet(&homalg_core::exactlin::kernel(&coordinate)).unwrap();
            if kernel != hu_n(a, HuVariant::TwoSided).image(&plus.embedding) {
                fail.push(format!("{}: ker π ≠ HU_n", inst.name));
            }
        }
        format!("{} algebras", all.len())
    }));

    outcomes.push(criterion(8, "AC = AC_l ∩ AC_r on two-sided unital instances", |fail| {
        let mut count = 0;
        for inst in &all {
            let a = &inst.algebra;
            if unity(a, UnitySide::TwoSided).is_none() {
                continue;
            }
            count += 1;
            let meet = ac_left(a).meet(&ac_right(a)).unwrap();
            if ac_two_sided(a).ok() != Some(meet) {
                fail.push(inst.name.clone());
            }
        }
        format!("{count} algebras")
    }));

    outcomes.push(criterion(9, "unital non-associative domains have AC_l·1_l = 0", |fail| {
        let o = octonions();
        let a = o.base();
        let certificate = a.basis_elements().iter().all(|x| a.left_mul_map(x).is_injective() && a.right_mul_map(x).is_injective());
        if !certificate {
            fail.push("octonion basis operators are not injective".into());
        }
        let one = unity(a, UnitySide::Left).unwrap();
        if !ac_left(a).image(&a.right_mul_map(&one)).is_zero() {
            fail.push("AC_l(O)·1 ≠ 0".into());
        }
        let mut count = 0;
        for inst in &all {
            let a = &inst.algebra;
            let Some(one) = unity(a, UnitySide::Left) else { continue };
            if a.is_associative() || !is_domain_sampled(a, DOMAIN_SEED) {
                continue;
            }
            count += 1;
            if !ac_left(a).image(&a.right_mul_map(&one)).is_zero() {
                fail.push(inst.name.clone());
            }
        }
        format!("octonions plus {count} sampled domains")
    }));

    outcomes.push(criterion(10, "Leibniz suite", |fail| {
        let leib2 = homalg_core::constructions::catalog::leib2(q);
        if !leibniz_check(&leib2, Side::Right, None).unwrap().holds {
            fail.push("Leib2 is not right Leibniz".into());
        }
        if !hu_n_leibniz(&leib2).map(|s| s.is_full() && s.dim() == 2).unwrap_or(false) {
            fail.push("HU_n(Leib2) is not the full plane".into());
        }
        let ly = leib2.left_mul_map(&leib2.basis_element(1));
        if !HomAlgebra::new(leib2.clone(), ly).unwrap().is_hom_associative() {
            fail.push("L_y is not HA-compatible on Leib2".into());
        }
        let mut leibniz = 0;
        for inst in &all {
            let a = &inst.algebra;
            if let Ok(r) = leibniz_hom_unities(a) {
                leibniz += 1;
                for v in r.space.basis() {
                    if !triple_products_vanish(a, &v) {
                        fail.push(format!(
                            "{}: {v} has a nonzero triple product in characteristic {}",
                            inst.name,
                            a.field().characteristic()
                        ));
                    }
                }
            }
            let collapse = unitality_collapse_check(a);
            if let Verdict::Fail(d) = collapse.verdict {
                fail.push(format!("{}: unitality collapse violated: {d}", inst.name));
            }
        }
        format!("{leibniz} Leibniz algebras")
    }));

    outcomes.push(criterion(11, "Yau criterion equivalence on 500 pairs", |fail| {
        let mut pairs = 0;
        let mut hom_assoc = 0;
        'outer: for seed in 0u64.. {
            let field = [q, f2, Field::prime(3).unwrap()][(seed % 3) as usize];
            let a = random_algebra(&GeneratorConfig::new(seed, 2 + (seed as usize % 3), field)).unwrap();
            for m in yau_sample_maps(&a, seed) {
                let direct = yau_twist(&a, &m).unwrap().is_hom_associative();
                match yau_criterion(&a, &m) {
                    Ok(v) if v.hom_associative == direct => hom_assoc += usize::from(direct),
                    Ok(_) => fail.push(format!("seed {seed}: verdict differs")),
                    Err(e) => fail.push(format!("seed {seed}: {e}")),
                }
                pairs += 1;
                if pairs == 500 {
                    break 'outer;
                }
            }
        }
        let c = complexes();
        if !yau_criterion(c.base(), c.conj()).map(|v| v.hom_associative).unwrap_or(false) {
            fail.push("complex conjugation".into());
        }
        let t = truncated_poly(q, 6, false);
        let lt = t.left_mul_map(&t.basis_element(0));
        if !yau_criterion(&t, &lt).map(|v| v.hom_associative).unwrap_or(false) {
            fail.push("L_t on truncated polynomials".into());
        }
        format!("{pairs} pairs, {hom_assoc} hom-associative")
    }));

    outcomes.push(criterion(12, "relation tables on unital hom-associative instances", |fail| {
        let mut rows = 0;
        for (name, h, u, side) in &unital_cases {
            match relation_tables_check(h, u, *side) {
                Ok(r) => {
                    rows += r.checks.len();
                    for c in r.checks.iter().filter(|c| c.failed()) {
                        fail.push(format!("{name} ({side}): {}", c.name));
                    }
                }
                Err(e) => fail.push(format!("{name} ({side}): {e}")),
            }
        }
        // The transport identity on its own: associator(x, y, α(z)) = α(associator(x, y, z)).
        for (name, h, _, side) in &unital_cases {
            if *side != Side::Left {
                continue;
            }
            let a = h.base();
            let alpha = h.twist();
            let b = a.basis_elements();
            if triples(a.dim()).any(|[i, j, k]| a.assoc(&b[i], &b[j], &alpha.apply(&b[k])) != alpha.apply(&a.assoc(&b[i], &b[j], &b[k]))) {
                fail.push(format!("{name}: transport identity"));
            }
        }
        format!("{} cases, {rows} rows", unital_cases.len())
    }));

    println!("total {:.1?}", total.elapsed());
    let mut unexpected = false;
    for o in &outcomes {
        if o.failures.is_empty() {
            continue;
        }
        match KNOWN_FAILURES.iter().find(|(id, _)| *id == o.id) {
            Some((_, reason)) if o.failures.iter().all(|f| f.contains(reason)) => {
                println!("criterion {} fails only as documented ({reason}): {}", o.id, o.note);
            }
            _ => unexpected = true,
        }
    }
    if unexpected || total.elapsed() > Duration::from_secs(300) {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
