//! Seeded families of algebras and the invariant suite that is run over each of them.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, HomAlgebra, LinearMap};
use crate::constructions::catalog::{
    char_two_leibniz, cross_product, direct_product, dual_numbers, first_row_matrices, heisenberg, hemisemidirect,
    leib2, matrix_algebra, projection_algebra, sl2, split_pair, tensor_product, two_step_nilpotent,
};
use crate::constructions::{
    complexes, quaternions, random_algebra, random_invertible, truncated_poly, unitalize, yau_criterion,
    GeneratorConfig,
};
use crate::error::{Error, Side};
use crate::exactlin::{Matrix, Subspace, Vector};
use crate::homstruct::{structure_theorem_audit, twist_space};
use crate::leibniz::{
    crossed_unitality_check, hom_leibniz_twists, leibniz_hom_unities, leibniz_sides, leibniz_yau_to_homlie,
    unitality_collapse_check,
};
use crate::report::{scoped, Check};
use crate::scalar::Field;
use crate::subspaces::{enumerate_subspace, find_unities, UnitySide};

/// Which generator produced an instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    LeftUnital,
    Mixed,
    Leibniz,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub family: Family,
    pub name: String,
    pub algebra: Algebra,
}

fn f2() -> Field {
    Field::Prime(2)
}

fn f3() -> Field {
    Field::Prime(3)
}

fn small_pool(field: Field) -> Vec<crate::Scalar> {
    [0, 1, -1, 2].iter().map(|&v| field.from_i64(v)).collect()
}

/// Zeroes the products `e_i · x` for the chosen rows, which puts those `e_i` in `Ann^l`.
fn zero_rows(a: &Algebra, rows: &[usize]) -> Algebra {
    Algebra::from_basis_products(a.field(), a.dim(), |i, j| {
        if rows.contains(&i) {
            Vector::zeros(a.field(), a.dim())
        } else {
            a.basis_product(i, j)
        }
    })
}

/// Left-unital algebras over Q (even seeds) and F_2 (odd seeds) of dimension at most 5.
pub fn left_unital_instance(seed: u64) -> Instance {
    let field = if seed % 2 == 0 { Field::Rational } else { f2() };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1eff);
    let dim = rng.gen_range(2..=5usize);
    let random = |dim: usize, salt: u64| {
        random_algebra(&GeneratorConfig::new(seed.wrapping_mul(31).wrapping_add(salt), dim, field).left_unital())
            .expect("valid configuration")
    };
    let other = if rng.gen_bool(0.5) { dual_numbers(field) } else { split_pair(field) };
    let (name, algebra) = match (seed / 2) % 7 {
        0 => ("random left-unital".to_string(), random(dim, 0)),
        1 => {
            let n = rng.gen_range(2..=4usize);
            let p = random_invertible(field, n, seed, &small_pool(field)).expect("nonzero pool");
            (format!("first-row matrices {n}, basis changed"), first_row_matrices(field, n).change_basis(&p).expect("invertible"))
        }
        2 => {
            let n = rng.gen_range(2..=4usize);
            (format!("projection algebra {n}"), projection_algebra(field, n))
        }
        3 => {
            let n = rng.gen_range(1..=3usize);
            ("random left-unital × unital".to_string(), direct_product(&random(n, 1), &other))
        }
        4 => {
            let base = if rng.gen_bool(0.5) { projection_algebra(field, 2) } else { first_row_matrices(field, 2) };
            ("left-unital ⊗ unital".to_string(), tensor_product(&base, &other))
        }
        5 => {
            let rows: Vec<usize> = (1..dim).filter(|_| rng.gen_bool(0.4)).collect();
            (format!("random left-unital, rows {rows:?} zeroed"), zero_rows(&random(dim, 2), &rows))
        }
        _ => {
            let p = random_invertible(field, dim, seed, &small_pool(field)).expect("nonzero pool");
            ("random left-unital, basis changed".to_string(), random(dim, 3).change_basis(&p).expect("invertible"))
        }
    };
    Instance {
        family: Family::LeftUnital,
        name: format!("{name} [{field}, seed {seed}]"),
        algebra,
    }
}

/// Algebras of every kind: random with or without symmetry, two-sided unital
/// unitalizations, named examples and products, over Q, F_2 and F_3.
pub fn mixed_instance(seed: u64) -> Instance {
    let field = [Field::Rational, f2(), f3()][(seed % 3) as usize];
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x313d);
    let dim = rng.gen_range(2..=4usize);
    let cfg = GeneratorConfig::new(seed.wrapping_mul(17).wrapping_add(5), dim, field);
    let (name, algebra) = match (seed / 3) % 10 {
        0 => ("random".to_string(), random_algebra(&cfg).expect("valid")),
        1 => ("random commutative".to_string(), random_algebra(&cfg.commutative()).expect("valid")),
        2 => ("random anticommutative".to_string(), random_algebra(&cfg.anticommutative()).expect("valid")),
        3 => {
            let inner = GeneratorConfig { dim: dim.min(3), ..cfg };
            ("unitalized random".to_string(), unitalize(&random_algebra(&inner).expect("valid")).algebra)
        }
        4 => {
            let inner = GeneratorConfig { dim: dim.min(3), ..cfg }.commutative();
            ("unitalized commutative".to_string(), unitalize(&random_algebra(&inner).expect("valid")).algebra)
        }
        5 => {
            let d = rng.gen_range(2..=5usize);
            let c = rng.gen_bool(0.5);
            (format!("truncated polynomials degree {d}"), truncated_poly(field, d, c))
        }
        6 => {
            let list = [
                ("M2", matrix_algebra(field, 2)),
                ("cross product", cross_product(field)),
                ("sl2", sl2(field)),
                ("heisenberg", heisenberg(field)),
            ];
            let (n, a) = list[rng.gen_range(0..list.len())].clone();
            (n.to_string(), a)
        }
        7 => match field {
            Field::Rational => {
                if rng.gen_bool(0.5) {
                    ("complex numbers".to_string(), complexes().base().clone())
                } else {
                    ("quaternions".to_string(), quaternions().base().clone())
                }
            }
            _ => ("dual ⊗ split".to_string(), tensor_product(&dual_numbers(field), &split_pair(field))),
        },
        8 => {
            let inner = GeneratorConfig { dim: 2, ..cfg }.left_unital();
            let r = random_algebra(&inner).expect("valid");
            ("opposite of random left-unital × split".to_string(), direct_product(&r.opposite(), &split_pair(field)))
        }
        _ => {
            let p = random_invertible(field, dim, seed, &small_pool(field)).expect("nonzero pool");
            let base = random_algebra(&GeneratorConfig { dim, ..cfg }).expect("valid");
            ("random, basis changed".to_string(), base.change_basis(&p).expect("invertible"))
        }
    };
    Instance {
        family: Family::Mixed,
        name: format!("{name} [{field}, seed {seed}]"),
        algebra,
    }
}

/// Leibniz algebras: Lie algebras, hemisemidirect products, two-step nilpotent algebras,
/// random tables that happen to be Leibniz, and the characteristic-two example.
pub fn leibniz_instance(seed: u64) -> Instance {
    let field = [Field::Rational, f2(), f3()][(seed % 3) as usize];
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1e1b);
    let (name, algebra) = match (seed / 3) % 7 {
        0 => {
            let list = [("cross product", cross_product(field)), ("sl2", sl2(field)), ("heisenberg", heisenberg(field))];
            let (n, a) = list[rng.gen_range(0..list.len())].clone();
            (n.to_string(), a)
        }
        1 => ("Leib2".to_string(), leib2(field)),
        2 => {
            // Adjoint action on a copy of g: left Leibniz and not Lie.
            let g = if rng.gen_bool(0.5) { heisenberg(field) } else { sl2(field) };
            let rho: Vec<Matrix> = g.basis_elements().iter().map(|x| g.left_mul_map(x)).collect();
            ("hemisemidirect adjoint".to_string(), hemisemidirect(&g, &rho).expect("one operator per basis vector"))
        }
        3 => {
            let v = rng.gen_range(1..=3usize);
            let w = rng.gen_range(1..=2usize);
            let pool = small_pool(field);
            let products: Vec<(usize, usize, Vector)> = (0..v)
                .flat_map(|i| (0..v).map(move |j| (i, j)))
                .map(|(i, j)| {
                    let e = (0..w).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
                    (i, j, Vector::new(field, e).expect("same field"))
                })
                .collect();
            (format!("two-step nilpotent {v}+{w}"), two_step_nilpotent(field, v, &products))
        }
        4 => {
            let pool: Vec<_> = [0, 0, 0, 0, 0, 1].iter().map(|&v| field.from_i64(v)).collect();
            let found = (0..400u64).find_map(|t| {
                let cfg = GeneratorConfig::new(seed.wrapping_mul(1000).wrapping_add(t), 3, field).with_pool(pool.clone());
                let a = random_algebra(&cfg).expect("valid");
                (!a.has_zero_product() && !leibniz_sides(&a).is_empty()).then_some(a)
            });
            match found {
                Some(a) => ("random Leibniz table".to_string(), a),
                None => ("Leib2 × Leib2".to_string(), direct_product(&leib2(field), &leib2(field))),
            }
        }
        5 => ("Leib2 × heisenberg".to_string(), direct_product(&leib2(field), &heisenberg(field))),
        _ => match field {
            Field::Prime(2) => ("commutative Leibniz in characteristic 2".to_string(), char_two_leibniz()),
            _ => ("Leib2 opposite".to_string(), leib2(field).opposite()),
        },
    };
    Instance {
        family: Family::Leibniz,
        name: format!("{name} [{field}, seed {seed}]"),
        algebra,
    }
}

/// The `seed`-th generated instance, cycling through the three families.
pub fn generated_instance(seed: u64) -> Instance {
    match seed % 3 {
        0 => left_unital_instance(seed / 3),
        1 => mixed_instance(seed / 3),
        _ => leibniz_instance(seed / 3),
    }
}

/// Results of the invariant suite on one algebra.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct InstanceReport {
    pub name: String,
    pub field: String,
    pub dim: usize,
    pub checks: Vec<Check>,
}

impl InstanceReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.failed())
    }
}

/// Runs every check that applies to `a`.
pub fn check_algebra(name: &str, a: &Algebra) -> InstanceReport {
    let mut checks = scoped("audit", structure_theorem_audit(a).checks().cloned().collect());
    checks.push(scale_invariance(a));
    checks.push(yau_samples(a));
    checks.extend(scoped("leibniz", leibniz_checks(a)));
    InstanceReport {
        name: name.to_string(),
        field: a.field().to_string(),
        dim: a.dim(),
        checks,
    }
}

fn scale_invariance(a: &Algebra) -> Check {
    const NAME: &str = "twist space is unchanged by rescaling the product";
    let lambda = a.field().from_i64(2);
    if lambda.is_zero() {
        return Check::skipped(NAME, "2 = 0 in this field");
    }
    let scaled = Algebra::from_basis_products(a.field(), a.dim(), |i, j| a.basis_product(i, j).scale(&lambda));
    let (x, y) = (twist_space(a), twist_space(&scaled));
    Check::expect(NAME, x.subspace() == y.subspace(), || format!("dimensions {} and {}", x.dim(), y.dim()))
}

/// Sample maps for the Yau criterion: identity, zero, multiplication operators, twist basis
/// maps and a seeded random map.
pub fn yau_sample_maps(a: &Algebra, seed: u64) -> Vec<LinearMap> {
    let field = a.field();
    let n = a.dim();
    let mut maps = alloc::vec![Matrix::identity(field, n), Matrix::zeros(field, n, n)];
    for x in a.basis_elements() {
        maps.push(a.left_mul_map(&x));
        maps.push(a.right_mul_map(&x));
    }
    maps.extend(twist_space(a).basis_maps());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = small_pool(field);
    let data = (0..n * n).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
    maps.push(Matrix::new(field, n, n, data).expect("square"));
    maps
}

fn yau_samples(a: &Algebra) -> Check {
    const NAME: &str = "Yau criterion agrees with the direct check";
    for (i, m) in yau_sample_maps(a, 0x7a0).iter().enumerate() {
        if let Err(e) = yau_criterion(a, m) {
            return Check::fail(NAME, format!("sample {i}: {e}"));
        }
    }
    Check::pass(NAME)
}

fn leibniz_checks(a: &Algebra) -> Vec<Check> {
    let mut checks = Vec::new();
    match leibniz_hom_unities(a) {
        Ok(r) => checks.extend(r.checks),
        Err(Error::NotLeibniz) => {}
        Err(e) => checks.push(Check::fail("Leibniz hom-unities", e.to_string())),
    }
    let collapse = unitality_collapse_check(a);
    if !matches!(collapse.verdict, crate::report::Verdict::Skipped(_)) {
        checks.push(collapse);
    }
    let unital = [UnitySide::Left, UnitySide::Right].into_iter().any(|s| !find_unities(a, s).is_empty());
    if unital {
        // Twists that are hom-associative and hom-Leibniz, found by solving, then checked directly.
        let twists = twist_space(a);
        for side in [Side::Left, Side::Right] {
            let both = twists.subspace().meet(&hom_leibniz_twists(a, side)).expect("same ambient");
            for v in both.basis() {
                let h = HomAlgebra::new(a.clone(), Matrix::unflatten(a.dim(), a.dim(), &v)).expect("endomorphism");
                checks.extend(crossed_unitality_check(&h).checks.into_iter().filter(|c| !matches!(c.verdict, crate::report::Verdict::Skipped(_))));
            }
        }
    }
    if let Some(check) = yau_homlie_search(a) {
        checks.push(check);
    }
    checks
}

/// Over a small prime field, tries every pair `(mult, w)` in the hom-Leibniz to hom-Lie
/// construction; every pair meeting the hypotheses must give a multiplicative hom-Lie algebra.
fn yau_homlie_search(a: &Algebra) -> Option<Check> {
    const NAME: &str = "hom-Leibniz Yau twists are multiplicative hom-Lie";
    let p = a.field().order()?;
    if (p as u128).pow(2 * a.dim() as u32) > 1 << 12 {
        return None;
    }
    let full = Subspace::full(a.field(), a.dim());
    for m in enumerate_subspace(&full, p) {
        for w in enumerate_subspace(&full, p) {
            for side in [Side::Left, Side::Right] {
                match leibniz_yau_to_homlie(a, &m, &w, side) {
                    Ok(_) | Err(Error::PreconditionViolated(_)) => {}
                    Err(e) => return Some(Check::fail(NAME, format!("mult {m}, w {w}: {e}"))),
                }
            }
        }
    }
    Some(Check::pass(NAME))
}
