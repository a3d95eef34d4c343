use homalg_core::constructions::catalog::*;
use homalg_core::constructions::{complexes, octonions, quaternions, random_algebra, truncated_poly, GeneratorConfig};
use homalg_core::homstruct::structure_theorem_audit;
use homalg_core::{Algebra, Field};

fn f2() -> Field {
    Field::prime(2).unwrap()
}

fn assert_clean(name: &str, a: &Algebra) {
    let r = structure_theorem_audit(a);
    let bad: Vec<_> = r.failures().into_iter().map(|c| format!("{c:?}")).collect();
    assert!(bad.is_empty(), "{name}: {bad:#?}");
}

#[test]
fn catalog_audits_clean() {
    for field in [Field::Rational, f2(), Field::prime(3).unwrap()] {
        let cases = [
            ("dual", dual_numbers(field)),
            ("split", split_pair(field)),
            ("ground", ground(field)),
            ("P2", projection_algebra(field, 2)),
            ("P3", projection_algebra(field, 3)),
            ("P2op", projection_algebra(field, 2).opposite()),
            ("nil", nilpotent_square(field)),
            ("leib2", leib2(field)),
            ("M2", matrix_algebra(field, 2)),
            ("row2", first_row_matrices(field, 2)),
            ("row3", first_row_matrices(field, 3)),
            ("cross", cross_product(field)),
            ("sl2", sl2(field)),
            ("heis", heisenberg(field)),
            ("poly", truncated_poly(field, 3, false)),
            ("polyc", truncated_poly(field, 2, true)),
            ("P2xdual", direct_product(&projection_algebra(field, 2), &dual_numbers(field))),
            ("P2⊗split", tensor_product(&projection_algebra(field, 2), &split_pair(field))),
        ];
        for (name, a) in cases {
            assert_clean(&format!("{name}/{field}"), &a);
        }
    }
}

#[test]
fn cayley_dickson_audits_clean() {
    assert_clean("C", complexes().base());
    assert_clean("H", quaternions().base());
    assert_clean("O", octonions().base());
}

#[test]
fn random_algebras_audit_clean() {
    for seed in 0..40u64 {
        for field in [Field::Rational, f2()] {
            let dim = 2 + (seed as usize % 3);
            let mut cfg = GeneratorConfig::new(seed, dim, field);
            if seed % 2 == 0 {
                cfg = cfg.left_unital();
            }
            let a = random_algebra(&cfg).unwrap();
            assert_clean(&format!("random {seed} {field}"), &a);
        }
    }
}
