use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::ac::ac_one_sided;
use crate::algebra::{Algebra, Element, HomAlgebra, LinearMap};
use crate::error::{Error, Result, Side};
use crate::exactlin::{solve_affine, Matrix};
use crate::report::Check;

fn check_preconditions(h: &HomAlgebra, unity: &Element, side: Side) -> Result<()> {
    let a = h.base();
    unity.check_compatible(a.field(), a.dim())?;
    if let Some(w) = h.hom_associativity_witness() {
        return Err(Error::PreconditionViolated(format!("not hom-associative at basis triple {w:?}")));
    }
    let op = match side {
        Side::Left => a.left_mul_map(unity),
        Side::Right => a.right_mul_map(unity),
    };
    if !op.is_identity() {
        return Err(Error::PreconditionViolated(format!("the given element is not a {side} unity")));
    }
    Ok(())
}

/// The four conditions that are equivalent for a unital hom-associative algebra.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct MultiplicativityReport {
    /// `α(xy) = α(x)α(y)`.
    pub multiplicative: bool,
    /// `α ∘ α = α`.
    pub idempotent_map: bool,
    /// `α(α(1)) = α(1)`.
    pub fixes_unity_image: bool,
    /// `α(1)·α(1) = α(1)`.
    pub unity_image_idempotent: bool,
    /// Whether all four agree.
    pub consistent: bool,
}

/// Evaluates the four multiplicativity conditions for a unital hom-associative algebra.
pub fn multiplicativity_report(h: &HomAlgebra, unity: &Element, side: Side) -> Result<MultiplicativityReport> {
    check_preconditions(h, unity, side)?;
    let a = h.base();
    let f = h.twist();
    let fu = f.apply(unity);
    let flags = [
        h.is_multiplicative(),
        crate::algebra::is_idempotent_map(f),
        f.apply(&fu) == fu,
        a.mul(&fu, &fu) == fu,
    ];
    Ok(MultiplicativityReport {
        multiplicative: flags[0],
        idempotent_map: flags[1],
        fixes_unity_image: flags[2],
        unity_image_idempotent: flags[3],
        consistent: flags.iter().all(|&b| b == flags[0]),
    })
}

/// Outcome of checking every relation row on basis elements.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TableReport {
    pub side: Side,
    pub checks: Vec<Check>,
    pub violations: usize,
}

struct Rows {
    side: Side,
    checks: Vec<Check>,
}

impl Rows {
    fn push(&mut self, left: &str, right: &str, violation: Option<String>) {
        let name = match self.side {
            Side::Left => left,
            Side::Right => right,
        };
        self.checks.push(match violation {
            None => Check::pass(name),
            Some(d) => Check::fail(name, d),
        });
    }
}

fn singles(n: usize, mut ok: impl FnMut(usize) -> bool) -> Option<String> {
    (0..n).find(|&x| !ok(x)).map(|x| format!("fails at x = e{x}"))
}

fn pairs(n: usize, m: usize, mut ok: impl FnMut(usize, usize) -> bool) -> Option<String> {
    for i in 0..n {
        for j in 0..m {
            if !ok(i, j) {
                return Some(format!("fails at basis pair ({i}, {j})"));
            }
        }
    }
    None
}

fn triples(n: usize, m: usize, k: usize, mut ok: impl FnMut(usize, usize, usize) -> bool) -> Option<String> {
    for i in 0..n {
        for j in 0..m {
            for l in 0..k {
                if !ok(i, j, l) {
                    return Some(format!("fails at basis triple ({i}, {j}, {l})"));
                }
            }
        }
    }
    None
}

/// Basis vectors together with all pairwise sums, for the rows that are not multilinear.
fn diagonal_samples(a: &Algebra) -> Vec<Element> {
    let b = a.basis_elements();
    let mut out = b.clone();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            out.push(&b[i] + &b[j]);
        }
    }
    out
}

/// Verifies, on basis elements, every relation implied by one-sided unitality of a
/// hom-associative algebra: the twist relations, the associator transport rule, the
/// relations satisfied by `AC_l(A)` and `AC_l(A)·1_l` (or their right versions), and the
/// two-sided relations when the unity is two-sided.
pub fn relation_tables_check(h: &HomAlgebra, unity: &Element, side: Side) -> Result<TableReport> {
    check_preconditions(h, unity, side)?;
    let work = match side {
        Side::Left => h.base().clone(),
        Side::Right => h.base().opposite(),
    };
    let mut rows = Rows {
        side,
        checks: Vec::new(),
    };
    twist_rows(&mut rows, &work, h.twist(), unity);
    let one_sided = ac_one_sided(h.base(), side)?;
    ac_rows(&mut rows, &work, unity, &one_sided.ac.basis(), &one_sided.ac_unit.basis());
    let violations = rows.checks.iter().filter(|c| c.failed()).count();
    Ok(TableReport {
        side,
        checks: rows.checks,
        violations,
    })
}

fn twist_rows(rows: &mut Rows, a: &Algebra, f: &LinearMap, u: &Element) {
    let n = a.dim();
    let b = a.basis_elements();
    let fb: Vec<Element> = (0..n).map(|i| f.column(i)).collect();
    let fu = f.apply(u);
    let mul = |x: &Element, y: &Element| a.mul(x, y);

    rows.push(
        "α(x)·y = (x·1)·α(y)",
        "x·α(y) = α(x)·(1·y)",
        pairs(n, n, |x, y| mul(&fb[x], &b[y]) == mul(&mul(&b[x], u), &fb[y])),
    );
    rows.push(
        "α(x·y) = x·α(y)",
        "α(x·y) = α(x)·y",
        pairs(n, n, |x, y| f.apply(&a.basis_product(x, y)) == mul(&b[x], &fb[y])),
    );
    rows.push(
        "α(x)·1 = (x·1)·α(1)",
        "1·α(x) = α(1)·(1·x)",
        singles(n, |x| mul(&fb[x], u) == mul(&mul(&b[x], u), &fu)),
    );
    rows.push("α(x) = α(1)·x", "α(x) = x·α(1)", singles(n, |x| fb[x] == mul(&fu, &b[x])));
    rows.push(
        "α = L_α(1)",
        "α = R_α(1)",
        (a.left_mul_map(&fu) != *f).then(|| String::from("operator mismatch")),
    );
    // x·y = 1 ⇒ x·α(y) = α(1): solve L_x y = 1, then check the particular solution and
    // that x·α(d) = 0 along the solution directions.
    let mut candidates = b.clone();
    candidates.push(u.clone());
    rows.push(
        "x·y = 1 ⇒ x·α(y) = α(1)",
        "x·y = 1 ⇒ α(x)·y = α(1)",
        candidates.iter().enumerate().find_map(|(i, x)| {
            let lx = a.left_mul_map(x);
            let set = solve_affine(&lx, u).expect("compatible");
            match set {
                crate::AffineSet::Empty => None,
                crate::AffineSet::NonEmpty { particular, direction } => {
                    let ok = mul(x, &f.apply(&particular)) == fu
                        && direction.basis().iter().all(|d| mul(x, &f.apply(d)).is_zero());
                    (!ok).then(|| format!("fails for candidate {i}"))
                }
            }
        }),
    );
    rows.push(
        "1·α(1) = α(1) = α(1)·1",
        "α(1)·1 = α(1) = 1·α(1)",
        (mul(u, &fu) != fu || mul(&fu, u) != fu).then(|| String::from("fails")),
    );
    let samples = diagonal_samples(a);
    rows.push(
        "α(x)·x = (x·1)·α(x)",
        "x·α(x) = α(x)·(1·x)",
        samples
            .iter()
            .position(|x| mul(&f.apply(x), x) != mul(&mul(x, u), &f.apply(x)))
            .map(|i| format!("fails at sample {i}")),
    );
    rows.push(
        "[x,y,α(z)] = α([x,y,z])",
        "[α(x),y,z] = α([x,y,z])",
        triples(n, n, n, |x, y, z| a.assoc(&b[x], &b[y], &fb[z]) == f.apply(&a.assoc(&b[x], &b[y], &b[z]))),
    );

    let two_sided = a.right_mul_map(u).is_identity();
    if two_sided {
        rows.push(
            "x·α(y) = α(x)·y = α(x·y)",
            "x·α(y) = α(x)·y = α(x·y)",
            pairs(n, n, |x, y| {
                let l = mul(&b[x], &fb[y]);
                l == mul(&fb[x], &b[y]) && l == f.apply(&a.basis_product(x, y))
            }),
        );
        rows.push(
            "α(1)·x = α(x) = x·α(1)",
            "α(1)·x = α(x) = x·α(1)",
            singles(n, |x| mul(&fu, &b[x]) == fb[x] && mul(&b[x], &fu) == fb[x]),
        );
        rows.push(
            "L_α(1) = α = R_α(1)",
            "L_α(1) = α = R_α(1)",
            (a.left_mul_map(&fu) != *f || a.right_mul_map(&fu) != *f).then(|| String::from("operator mismatch")),
        );
        rows.push(
            "x·y = 1 ⇒ x·α(y) = α(1) = α(x)·y",
            "x·y = 1 ⇒ x·α(y) = α(1) = α(x)·y",
            candidates.iter().enumerate().find_map(|(i, x)| {
                let set = solve_affine(&a.left_mul_map(x), u).expect("compatible");
                let crate::AffineSet::NonEmpty { particular: y, direction } = set else { return None };
                let ok = mul(x, &f.apply(&y)) == fu
                    && mul(&f.apply(x), &y) == fu
                    && direction
                        .basis()
                        .iter()
                        .all(|d| mul(x, &f.apply(d)).is_zero() && mul(&f.apply(x), d).is_zero());
                (!ok).then(|| format!("fails for candidate {i}"))
            }),
        );
        rows.push(
            "x·α(x) = α(x·x) = α(x)·x",
            "x·α(x) = α(x·x) = α(x)·x",
            samples
                .iter()
                .position(|x| {
                    let fx = f.apply(x);
                    let l = mul(x, &fx);
                    l != f.apply(&mul(x, x)) || l != mul(&fx, x)
                })
                .map(|i| format!("fails at sample {i}")),
        );
    }
}

fn ac_rows(rows: &mut Rows, a: &Algebra, u: &Element, ac: &[Element], unit: &[Element]) {
    let n = a.dim();
    let b = a.basis_elements();
    let mul = |x: &Element, y: &Element| a.mul(x, y);
    let k = ac.len();

    rows.push(
        "a·(x·y) = x·(a·y)",
        "(x·y)·a = (x·a)·y",
        triples(k, n, n, |i, x, y| mul(&ac[i], &a.basis_product(x, y)) == mul(&b[x], &mul(&ac[i], &b[y]))),
    );
    rows.push(
        "(a·x)·(y·z) = a·((x·y)·z)",
        "(x·y)·(z·a) = (x·(y·z))·a",
        triples(k, n, n, |i, x, y| {
            (0..n).all(|z| {
                mul(&mul(&ac[i], &b[x]), &a.basis_product(y, z))
                    == mul(&ac[i], &mul(&a.basis_product(x, y), &b[z]))
            })
        }),
    );
    rows.push(
        "(y·z)·(a·x) = a·((y·z)·x)",
        "(x·a)·(y·z) = (x·(y·z))·a",
        triples(k, n, n, |i, x, y| {
            (0..n).all(|z| {
                mul(&a.basis_product(y, z), &mul(&ac[i], &b[x]))
                    == mul(&ac[i], &mul(&a.basis_product(y, z), &b[x]))
            })
        }),
    );
    rows.push(
        "(a·1)·x = a·x",
        "x·(1·a) = x·a",
        pairs(k, n, |i, x| mul(&mul(&ac[i], u), &b[x]) == mul(&ac[i], &b[x])),
    );
    rows.push(
        "(a·1)·1 = a·1",
        "1·(1·a) = 1·a",
        singles(k, |i| {
            let au = mul(&ac[i], u);
            mul(&au, u) == au
        }),
    );
    rows.push(
        "a·(x·1) = x·(a·1)",
        "(1·x)·a = (1·a)·x",
        pairs(k, n, |i, x| mul(&ac[i], &mul(&b[x], u)) == mul(&b[x], &mul(&ac[i], u))),
    );
    rows.push(
        "L_(a·x)∘R_z = L_a∘R_z∘L_x",
        "R_(x·a)∘L_z = R_a∘L_z∘R_x",
        triples(k, n, n, |i, x, z| {
            let lhs = a.left_mul_map(&mul(&ac[i], &b[x])).compose(&a.right_mul_map(&b[z]));
            let rhs: Matrix =
                a.left_mul_map(&ac[i]).compose(&a.right_mul_map(&b[z])).compose(&a.left_mul_map(&b[x]));
            lhs == rhs
        }),
    );
    rows.push(
        "(a·x)·1 = a·(x·1)",
        "1·(x·a) = (1·x)·a",
        pairs(k, n, |i, x| mul(&mul(&ac[i], &b[x]), u) == mul(&ac[i], &mul(&b[x], u))),
    );
    rows.push(
        "x·(a·1) = (x·1)·(a·1) = a·(x·1)",
        "(1·a)·x = (1·a)·(1·x) = (1·x)·a",
        pairs(k, n, |i, x| {
            let au = mul(&ac[i], u);
            let xu = mul(&b[x], u);
            let l = mul(&b[x], &au);
            l == mul(&xu, &au) && l == mul(&ac[i], &xu)
        }),
    );

    let m = unit.len();
    rows.push(
        "b·(x·1) = x·b",
        "(1·z)·b = b·z",
        pairs(m, n, |i, x| mul(&unit[i], &mul(&b[x], u)) == mul(&b[x], &unit[i])),
    );
    rows.push(
        "b·(x·1) = (x·1)·b",
        "(1·z)·b = b·(1·z)",
        pairs(m, n, |i, x| {
            let xu = mul(&b[x], u);
            mul(&unit[i], &xu) == mul(&xu, &unit[i])
        }),
    );
    rows.push(
        "(b·x)·1 = (x·1)·b",
        "1·(z·b) = b·(1·z)",
        pairs(m, n, |i, x| mul(&mul(&unit[i], &b[x]), u) == mul(&mul(&b[x], u), &unit[i])),
    );
    rows.push(
        "x·b = (x·1)·b",
        "b·z = b·(1·z)",
        pairs(m, n, |i, x| mul(&b[x], &unit[i]) == mul(&mul(&b[x], u), &unit[i])),
    );
    rows.push(
        "[b,b',x] = 0",
        "[z,b',b] = 0",
        triples(m, m, n, |i, j, x| a.assoc(&unit[i], &unit[j], &b[x]).is_zero()),
    );
    rows.push(
        "[b,x,b'] = 0",
        "[b',z,b] = 0",
        triples(m, n, m, |i, x, j| a.assoc(&unit[i], &b[x], &unit[j]).is_zero()),
    );
    rows.push(
        "[x,b,b'] = 0",
        "[b',b,z] = 0",
        triples(n, m, m, |x, i, j| a.assoc(&b[x], &unit[i], &unit[j]).is_zero()),
    );
}
