use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::exactlin::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Name and version of the pseudo-random generator behind [`random_algebra`].
pub const GENERATOR_ALGORITHM: &str = "ChaCha8Rng (rand_chacha 0.3), seed_from_u64";

/// Parameters of a seeded random structure tensor.
///
/// Coefficients are drawn uniformly from `pool`, so repeated entries weight the draw.
/// Entries are filled in lexicographic `(i, j, k)` order. When several flags are set,
/// `force_left_unital` fixes the products `e_0 · e_j = e_j` first, then
/// `anticommutative` takes precedence over `commutative` for the remaining entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub dim: usize,
    pub field: Field,
    pub pool: Vec<Scalar>,
    pub force_left_unital: bool,
    pub commutative: bool,
    pub anticommutative: bool,
}

impl GeneratorConfig {
    /// Zero-heavy default pool `{0, 0, 0, 1, -1, 2}`.
    pub fn new(seed: u64, dim: usize, field: Field) -> GeneratorConfig {
        GeneratorConfig {
            seed,
            dim,
            field,
            pool: [0, 0, 0, 1, -1, 2].iter().map(|&v| field.from_i64(v)).collect(),
            force_left_unital: false,
            commutative: false,
            anticommutative: false,
        }
    }

    pub fn with_pool(mut self, pool: Vec<Scalar>) -> Self {
        self.pool = pool;
        self
    }

    pub fn left_unital(mut self) -> Self {
        self.force_left_unital = true;
        self
    }

    pub fn commutative(mut self) -> Self {
        self.commutative = true;
        self
    }

    pub fn anticommutative(mut self) -> Self {
        self.anticommutative = true;
        self
    }
}

/// A random algebra; the same configuration always yields the same algebra.
pub fn random_algebra(cfg: &GeneratorConfig) -> Result<Algebra> {
    let field = cfg.field;
    if cfg.pool.is_empty() {
        return Err(Error::PreconditionViolated("empty coefficient pool".into()));
    }
    if let Some(bad) = cfg.pool.iter().find(|s| s.field() != field) {
        return Err(Error::FieldMismatch {
            expected: field,
            found: bad.field(),
        });
    }
    let n = cfg.dim;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut table = alloc::vec![field.zero(); n * n * n];
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                table[idx(i, j, k)] = if cfg.force_left_unital && i == 0 {
                    if j == k { field.one() } else { field.zero() }
                } else if cfg.anticommutative && i == j {
                    field.zero()
                } else if cfg.anticommutative && i > j {
                    -&table[idx(j, i, k)]
                } else if cfg.commutative && i > j {
                    table[idx(j, i, k)].clone()
                } else {
                    cfg.pool[rng.gen_range(0..cfg.pool.len())].clone()
                };
            }
        }
    }
    Algebra::from_table(field, n, &table)
}

/// A seeded random invertible `n × n` matrix with entries from `pool`, for basis changes.
pub fn random_invertible(field: Field, n: usize, seed: u64, pool: &[Scalar]) -> Result<Matrix> {
    if pool.iter().all(Scalar::is_zero) {
        return Err(Error::PreconditionViolated("pool has no nonzero entry".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let data = (0..n * n).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
        let m = Matrix::new(field, n, n, data)?;
        if m.is_injective() {
            return Ok(m);
        }
    }
}
