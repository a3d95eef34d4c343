//! Incremental sparse row reduction.
//!
//! Rows over Q are cleared of denominators and kept as primitive integer rows
//! (fraction-free elimination); rows over a prime field are kept monic. Rows are
//! normalized to a canonical form on entry so duplicates are dropped cheaply, which
//! matters for the large, highly redundant systems produced by twist-space solving.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Matrix;
use crate::scalar::{mod_inverse, Field, Scalar};

type SparseRow<E> = Vec<(usize, E)>;

trait Reduction {
    type Elem: Clone + Ord;

    fn lift(&self, row: &[(usize, Scalar)]) -> SparseRow<Self::Elem>;

    /// Cancels column `col` of `target` using `pivot`, whose entry at `col` is its lead.
    fn eliminate(&self, target: &SparseRow<Self::Elem>, pivot: &SparseRow<Self::Elem>, col: usize)
        -> SparseRow<Self::Elem>;

    /// Dense scalar row divided by its leading entry.
    fn to_scalars(&self, row: &SparseRow<Self::Elem>, cols: usize) -> Vec<Scalar>;
}

struct IntegerReduction;

impl IntegerReduction {
    fn make_primitive(row: &mut SparseRow<BigInt>) {
        let mut g = BigInt::zero();
        for (_, v) in row.iter() {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        let negate = row.first().is_some_and(|(_, v)| v.is_negative());
        if !g.is_one() && !g.is_zero() {
            for (_, v) in row.iter_mut() {
                *v = &*v / &g;
            }
        }
        if negate {
            for (_, v) in row.iter_mut() {
                *v = -&*v;
            }
        }
    }
}

fn entry_at<E>(row: &SparseRow<E>, col: usize) -> Option<&E> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|i| &row[i].1)
}

impl Reduction for IntegerReduction {
    type Elem = BigInt;

    fn lift(&self, row: &[(usize, Scalar)]) -> SparseRow<BigInt> {
        let mut l = BigInt::one();
        for (_, s) in row {
            l = l.lcm(s.as_rational().denom());
        }
        let mut out: SparseRow<BigInt> = row
            .iter()
            .map(|(c, s)| {
                let q = s.as_rational();
                (*c, q.numer() * (&l / q.denom()))
            })
            .collect();
        Self::make_primitive(&mut out);
        out
    }

    fn eliminate(&self, target: &SparseRow<BigInt>, pivot: &SparseRow<BigInt>, col: usize) -> SparseRow<BigInt> {
        let a = entry_at(pivot, col).expect("pivot entry").clone();
        let b = entry_at(target, col).expect("target entry").clone();
        let g = a.gcd(&b);
        let (a, b) = (&a / &g, &b / &g);
        // a * target - b * pivot
        let mut out = Vec::with_capacity(target.len() + pivot.len());
        let (mut i, mut j) = (0, 0);
        while i < target.len() || j < pivot.len() {
            let ci = target.get(i).map_or(usize::MAX, |e| e.0);
            let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
            let (c, v) = if ci < cj {
                i += 1;
                (ci, &a * &target[i - 1].1)
            } else if cj < ci {
                j += 1;
                (cj, -(&b * &pivot[j - 1].1))
            } else {
                i += 1;
                j += 1;
                (ci, &a * &target[i - 1].1 - &b * &pivot[j - 1].1)
            };
            if !v.is_zero() {
                out.push((c, v));
            }
        }
        Self::make_primitive(&mut out);
        out
    }

    fn to_scalars(&self, row: &SparseRow<BigInt>, cols: usize) -> Vec<Scalar> {
        let lead = &row[0].1;
        let mut dense = alloc::vec![Field::Rational.zero(); cols];
        for (c, v) in row {
            dense[*c] = Scalar::Rational(BigRational::new(v.clone(), lead.clone()));
        }
        dense
    }
}

struct ModularReduction {
    p: u64,
}

impl ModularReduction {
    fn make_monic(&self, row: &mut SparseRow<u64>) {
        if let Some(&(_, lead)) = row.first() {
            if lead != 1 {
                let inv = mod_inverse(lead, self.p);
                for (_, v) in row.iter_mut() {
                    *v = *v * inv % self.p;
                }
            }
        }
    }
}

impl Reduction for ModularReduction {
    type Elem = u64;

    fn lift(&self, row: &[(usize, Scalar)]) -> SparseRow<u64> {
        let mut out: SparseRow<u64> = row.iter().map(|(c, s)| (*c, s.residue())).collect();
        self.make_monic(&mut out);
        out
    }

    fn eliminate(&self, target: &SparseRow<u64>, pivot: &SparseRow<u64>, col: usize) -> SparseRow<u64> {
        let p = self.p;
        let lead = *entry_at(pivot, col).expect("pivot entry");
        let b = *entry_at(target, col).expect("target entry") * mod_inverse(lead, p) % p;
        let nb = (p - b) % p;
        let mut out = Vec::with_capacity(target.len() + pivot.len());
        let (mut i, mut j) = (0, 0);
        while i < target.len() || j < pivot.len() {
            let ci = target.get(i).map_or(usize::MAX, |e| e.0);
            let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
            let (c, v) = if ci < cj {
                i += 1;
                (ci, target[i - 1].1)
            } else if cj < ci {
                j += 1;
                (cj, nb * pivot[j - 1].1 % p)
            } else {
                i += 1;
                j += 1;
                (ci, (target[i - 1].1 + nb * pivot[j - 1].1) % p)
            };
            if v != 0 {
                out.push((c, v));
            }
        }
        self.make_monic(&mut out);
        out
    }

    fn to_scalars(&self, row: &SparseRow<u64>, cols: usize) -> Vec<Scalar> {
        let field = Field::Prime(self.p);
        let inv = mod_inverse(row[0].1, self.p);
        let mut dense = alloc::vec![field.zero(); cols];
        for (c, v) in row {
            dense[*c] = Scalar::Residue {
                value: v * inv % self.p,
                modulus: self.p,
            };
        }
        dense
    }
}

struct Echelon<R: Reduction> {
    reduction: R,
    cols: usize,
    rows: Vec<SparseRow<R::Elem>>,
    lead_of: Vec<Option<usize>>,
    seen: BTreeSet<SparseRow<R::Elem>>,
}

impl<R: Reduction> Echelon<R> {
    fn new(reduction: R, cols: usize) -> Self {
        Echelon {
            reduction,
            cols,
            rows: Vec::new(),
            lead_of: alloc::vec![None; cols],
            seen: BTreeSet::new(),
        }
    }

    fn push(&mut self, row: &[(usize, Scalar)]) {
        if self.rows.len() == self.cols {
            return;
        }
        let mut r = self.reduction.lift(row);
        if r.is_empty() || !self.seen.insert(r.clone()) {
            return;
        }
        loop {
            let Some(&(lead, _)) = r.first() else { return };
            match self.lead_of[lead] {
                Some(p) => r = self.reduction.eliminate(&r, &self.rows[p], lead),
                None => {
                    self.lead_of[lead] = Some(self.rows.len());
                    self.rows.push(r);
                    return;
                }
            }
        }
    }

    fn finish(self) -> (Vec<Vec<Scalar>>, Vec<usize>) {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        let leads: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
        for i in (0..rows.len()).rev() {
            for j in i + 1..rows.len() {
                if entry_at(&rows[i], leads[j]).is_some() {
                    rows[i] = self.reduction.eliminate(&rows[i], &rows[j], leads[j]);
                }
            }
        }
        let dense = rows.iter().map(|r| self.reduction.to_scalars(r, self.cols)).collect();
        (dense, leads)
    }
}

enum Engine {
    Integer(Echelon<IntegerReduction>),
    Modular(Echelon<ModularReduction>),
}

/// Accumulates rows and produces the reduced row echelon form of their span.
pub struct RowSpaceBuilder {
    field: Field,
    cols: usize,
    engine: Engine,
}

impl RowSpaceBuilder {
    pub fn new(field: Field, cols: usize) -> Self {
        let engine = match field {
            Field::Rational => Engine::Integer(Echelon::new(IntegerReduction, cols)),
            Field::Prime(p) => Engine::Modular(Echelon::new(ModularReduction { p }, cols)),
        };
        RowSpaceBuilder { field, cols, engine }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Adds a row given by its nonzero entries in strictly increasing column order.
    pub fn push_sparse(&mut self, entries: &[(usize, Scalar)]) {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(c, s)| *c < self.cols && !s.is_zero() && s.field() == self.field));
        match &mut self.engine {
            Engine::Integer(e) => e.push(entries),
            Engine::Modular(e) => e.push(entries),
        }
    }

    pub fn push_dense(&mut self, row: &[Scalar]) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        let sparse: Vec<(usize, Scalar)> =
            row.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(c, s)| (c, s.clone())).collect();
        self.push_sparse(&sparse);
    }

    pub fn rank(&self) -> usize {
        match &self.engine {
            Engine::Integer(e) => e.rows.len(),
            Engine::Modular(e) => e.rows.len(),
        }
    }

    /// The nonzero rows of the reduced row echelon form and their pivot columns.
    pub fn finish(self) -> (Matrix, Vec<usize>) {
        let (rows, pivots) = match self.engine {
            Engine::Integer(e) => e.finish(),
            Engine::Modular(e) => e.finish(),
        };
        let n = rows.len();
        let data = rows.into_iter().flatten().collect();
        (Matrix::new(self.field, n, self.cols, data).expect("consistent shape"), pivots)
    }
}
