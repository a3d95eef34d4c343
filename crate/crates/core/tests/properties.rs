use homalg_core::constructions::{opposite, random_invertible};
use homalg_core::exactlin::{kernel, rank, rref, solve_affine};
use homalg_core::homstruct::{ac_left, ac_right, ac_two_sided, hu_n, twist_space, HuVariant};
use homalg_core::{AffineSet, Algebra, Field, HomAlgebra, Matrix, Subspace, Vector};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::prime(2).unwrap()),
        Just(Field::prime(3).unwrap()),
        Just(Field::prime(5).unwrap()),
    ]
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    (field(), prop::collection::vec(-3i64..=3, rows * cols)).prop_map(move |(f, v)| {
        let data = v.into_iter().map(|x| f.from_i64(x)).collect();
        Matrix::new(f, rows, cols, data).unwrap()
    })
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))
}

/// Structure constants biased towards zero so that interesting substructures show up.
fn algebra() -> impl Strategy<Value = Algebra> {
    (field(), 1usize..4).prop_flat_map(|(f, n)| {
        let entry = prop_oneof![3 => Just(0i64), 1 => -2i64..=2];
        prop::collection::vec(entry, n * n * n).prop_map(move |v| {
            let table: Vec<_> = v.into_iter().map(|x| f.from_i64(x)).collect();
            Algebra::from_table(f, n, &table).unwrap()
        })
    })
}

fn vector(f: Field, n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(-3i64..=3, n).prop_map(move |v| Vector::from_i64(f, &v))
}

/// Two subspaces of the same ambient space, spanned by random vectors.
fn subspaces(count: usize) -> impl Strategy<Value = Vec<Subspace>> {
    (field(), 1usize..6).prop_flat_map(move |(f, n)| {
        prop::collection::vec(prop::collection::vec(vector(f, n), 0..4), count)
            .prop_map(move |gens| gens.iter().map(|g| Subspace::span(f, n, g).unwrap()).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rref_is_idempotent(m in any_matrix()) {
        let (r, pivots) = rref(&m);
        let (rr, pivots2) = rref(&r);
        prop_assert_eq!(r, rr);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn rank_nullity(m in any_matrix()) {
        let k = kernel(&m);
        prop_assert_eq!(rank(&m) + k.dim(), m.cols());
        for v in k.basis() {
            prop_assert!(m.apply(&v).is_zero());
        }
    }

    #[test]
    fn affine_solutions_solve(m in any_matrix(), seed in any::<u64>()) {
        // A right-hand side in the column space always has a solution.
        let x = Vector::from_i64(m.field(), &(0..m.cols()).map(|i| ((seed >> i) & 3) as i64 - 1).collect::<Vec<_>>());
        let b = m.apply(&x);
        match solve_affine(&m, &b).unwrap() {
            AffineSet::Empty => prop_assert!(false, "consistent system reported empty"),
            AffineSet::NonEmpty { particular, direction } => {
                prop_assert_eq!(m.apply(&particular), b);
                prop_assert_eq!(&direction, &kernel(&m));
                prop_assert!(direction.contains(&(&x - &particular)));
            }
        }
    }

    #[test]
    fn join_meet_dimension_formula(s in subspaces(2)) {
        let (a, b) = (&s[0], &s[1]);
        let join = a.join(b).unwrap();
        let meet = a.meet(b).unwrap();
        prop_assert_eq!(join.dim() + meet.dim(), a.dim() + b.dim());
        prop_assert!(join.contains_subspace(a) && a.contains_subspace(&meet));
    }

    #[test]
    fn modular_law(s in subspaces(3)) {
        // Force a ⊆ c by replacing c with a + c.
        let a = &s[0];
        let b = &s[1];
        let c = s[2].join(a).unwrap();
        let lhs = a.join(&b.meet(&c).unwrap()).unwrap();
        let rhs = a.join(b).unwrap().meet(&c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn equations_cut_out_the_subspace(s in subspaces(1)) {
        let s = &s[0];
        prop_assert_eq!(&kernel(&s.equations()), s);
    }

    #[test]
    fn multiplication_is_bilinear(a in algebra(), seed in any::<u64>()) {
        let f = a.field();
        let n = a.dim();
        let v = |shift: u32| Vector::from_i64(f, &(0..n).map(|i| ((seed >> (shift + 2 * i as u32)) & 3) as i64 - 1).collect::<Vec<_>>());
        let (x, y, z) = (v(0), v(16), v(32));
        let c = f.from_i64((seed >> 60) as i64 - 7);
        prop_assert_eq!(a.mul(&(&x + &y), &z), &a.mul(&x, &z) + &a.mul(&y, &z));
        prop_assert_eq!(a.mul(&x, &(&y + &z)), &a.mul(&x, &y) + &a.mul(&x, &z));
        prop_assert_eq!(a.mul(&x.scale(&c), &y), a.mul(&x, &y).scale(&c));
        prop_assert_eq!(a.mul(&x, &y.scale(&c)), a.mul(&x, &y).scale(&c));
    }

    #[test]
    fn twist_space_is_a_subspace_of_twists(a in algebra(), c in -3i64..=3) {
        let t = twist_space(&a);
        let c = a.field().from_i64(c);
        let maps = t.basis_maps();
        for m in &maps {
            prop_assert!(HomAlgebra::new(a.clone(), m.clone()).unwrap().is_hom_associative());
            prop_assert!(t.contains(&m.scale(&c)));
        }
        if maps.len() >= 2 {
            let sum = maps[0].add(&maps[1]);
            prop_assert!(HomAlgebra::new(a.clone(), sum).unwrap().is_hom_associative());
        }
    }

    #[test]
    fn sides_swap_under_opposite(a in algebra()) {
        let op = opposite(&a);
        prop_assert_eq!(opposite(&op), a.clone());
        prop_assert_eq!(ac_left(&a), ac_right(&op));
        prop_assert_eq!(ac_right(&a), ac_left(&op));
        prop_assert_eq!(twist_space(&a).dim(), twist_space(&op).dim());
        prop_assert_eq!(hu_n(&a, HuVariant::TwoSided), hu_n(&op, HuVariant::TwoSided));
    }

    #[test]
    fn dimensions_survive_change_of_basis(a in algebra(), seed in any::<u64>()) {
        let f = a.field();
        let pool: Vec<_> = (-2..=2).map(|x| f.from_i64(x)).collect();
        let p = random_invertible(f, a.dim(), seed, &pool).unwrap();
        let b = a.change_basis(&p).unwrap();
        prop_assert_eq!(twist_space(&a).dim(), twist_space(&b).dim());
        prop_assert_eq!(ac_left(&a).dim(), ac_left(&b).dim());
        prop_assert_eq!(ac_right(&a).dim(), ac_right(&b).dim());
        prop_assert_eq!(ac_two_sided(&a).ok().map(|s| s.dim()), ac_two_sided(&b).ok().map(|s| s.dim()));
        // Elements transform by P^{-1}.
        let inv = p.inverse().unwrap();
        prop_assert_eq!(ac_left(&b), ac_left(&a).image(&inv));
    }
}
