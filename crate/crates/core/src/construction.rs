//! Synthesis of functions with prescribed spectra.
//!
//! The central construction is the modular sum
//! `f(x) = [a_1 f_1(X_1) + ... + a_s f_s(X_s)] mod k` over a partition
//! `(X_1, ..., X_s)` of the variables with every `a_i` coprime to `k`. Each
//! block `X_i` then has spectrum `{Rng(f_i)}` in `f`. Singleton blocks give
//! q̄H- and H(q)-functions; bijective unary pieces give Latin hypercubes.
//!
//! Coefficients are taken as arbitrary non-negative integers and reduced
//! modulo `k` before the coprimality check.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::range;
use crate::arith::is_coprime;
use crate::error::{Error, Result};
use crate::function::{cell_count, TruthTable, VariableSet};
use crate::partition::Partition;

/// An affine map `v -> (a*v + b) mod k` with `gcd(a, k) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineParams {
    a: u8,
    b: u8,
    k: u8,
}

impl AffineParams {
    pub fn new(a: u64, b: u64, k: u8) -> Result<Self> {
        cell_count(k, 1)?;
        if !is_coprime(a, k) {
            return Err(Error::CoprimeViolation { a, k });
        }
        let m = u64::from(k);
        Ok(AffineParams {
            a: (a % m) as u8,
            b: (b % m) as u8,
            k,
        })
    }

    pub fn multiplier(&self) -> u8 {
        self.a
    }

    pub fn offset(&self) -> u8 {
        self.b
    }

    pub fn modulus(&self) -> u8 {
        self.k
    }

    pub fn apply(&self, v: u8) -> u8 {
        ((u32::from(self.a) * u32::from(v) + u32::from(self.b)) % u32::from(self.k)) as u8
    }
}

/// `(a*g + b) mod k`, pointwise. Preserves the range of `g`.
pub fn affine_transform(g: &TruthTable, p: &AffineParams) -> Result<TruthTable> {
    if p.k != g.order() {
        return Err(Error::domain(format!(
            "affine map is modulo {} but the function has order {}",
            p.k,
            g.order()
        )));
    }
    let f = TruthTable::new(
        g.order(),
        g.arity(),
        g.values().iter().map(|&v| p.apply(v)).collect(),
    )?;
    debug_assert_eq!(range(&f), range(g));
    Ok(f)
}

/// One term `a_i * f_i(X_i)` of a modular sum. The variables of `function`
/// are the positions of `block` in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSummand {
    coefficient: u64,
    block: VariableSet,
    function: TruthTable,
}

impl BlockSummand {
    pub fn new(coefficient: u64, block: VariableSet, function: TruthTable) -> Result<Self> {
        if function.arity() != block.len() {
            return Err(Error::Arity {
                expected: block.len(),
                got: function.arity(),
            });
        }
        if !is_coprime(coefficient, function.order()) {
            return Err(Error::CoprimeViolation {
                a: coefficient,
                k: function.order(),
            });
        }
        Ok(BlockSummand {
            coefficient,
            block,
            function,
        })
    }

    pub fn coefficient(&self) -> u64 {
        self.coefficient
    }

    pub fn block(&self) -> &VariableSet {
        &self.block
    }

    pub fn function(&self) -> &TruthTable {
        &self.function
    }
}

/// `[a_1 f_1(X_1) + ... + a_s f_s(X_s)] mod k`.
///
/// The result is not re-verified here; when the blocks partition `1..=n` and
/// each `a_i` is coprime to `k`, block `X_i` has spectrum `{Rng(f_i)}`.
pub fn compose_sum(k: u8, n: usize, summands: &[BlockSummand]) -> Result<TruthTable> {
    let cells = cell_count(k, n)?;
    Partition::new(n, summands.iter().map(|s| s.block.clone()).collect())?;
    for s in summands {
        if s.function.order() != k {
            return Err(Error::domain(format!(
                "block function over x_{{{}}} has order {}, expected {k}",
                s.block,
                s.function.order()
            )));
        }
        if !is_coprime(s.coefficient, k) {
            return Err(Error::CoprimeViolation {
                a: s.coefficient,
                k,
            });
        }
    }

    let frame = TruthTable::constant(k, n, 0)?;
    let modulus = u32::from(k);
    let mut acc = vec![0u32; cells];
    for s in summands {
        let a = (s.coefficient % u64::from(k)) as u32;
        let outer = frame.offsets(s.block.complement(n).positions());
        for (&o, &v) in frame.offsets(s.block.positions()).iter().zip(s.function.values()) {
            let term = a * u32::from(v) % modulus;
            for &c in &outer {
                let cell = &mut acc[o + c];
                *cell = (*cell + term) % modulus;
            }
        }
    }
    TruthTable::new(k, n, acc.into_iter().map(|v| v as u8).collect())
}

/// `[a_1 x_1 + ... + a_n x_n] mod k`, a Latin hypercube when every `a_i` is
/// coprime to `k`.
pub fn construct_linear_h(k: u8, coeffs: &[u64]) -> Result<TruthTable> {
    let id = TruthTable::identity(k)?;
    let summands = coeffs
        .iter()
        .enumerate()
        .map(|(i, &a)| BlockSummand::new(a, VariableSet::single(i + 1)?, id.clone()))
        .collect::<Result<Vec<_>>>()?;
    compose_sum(k, coeffs.len(), &summands)
}

/// A seeded member of `P_n^{k,q}`: `q` distinct values are chosen, each is
/// placed on its own randomly chosen cell, and the remaining cells are filled
/// uniformly from the chosen values.
pub fn sample_with_range(k: u8, n: usize, q: u8, seed: u64) -> Result<TruthTable> {
    let cells = cell_count(k, n)?;
    if q == 0 || usize::from(q) > cells.min(usize::from(k)) {
        return Err(Error::domain(format!(
            "range {q} is not attainable in P_{n}^{k} (must be in [1, {}])",
            cells.min(usize::from(k))
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chosen: Vec<u8> = index::sample(&mut rng, usize::from(k), usize::from(q))
        .into_iter()
        .map(|v| v as u8)
        .collect();
    let mut values: Vec<u8> = (0..cells)
        .map(|_| chosen[rng.gen_range(0..chosen.len())])
        .collect();
    for (cell, &v) in index::sample(&mut rng, cells, usize::from(q))
        .into_iter()
        .zip(&chosen)
    {
        values[cell] = v;
    }
    let f = TruthTable::new(k, n, values)?;
    assert_eq!(range(&f), q);
    Ok(f)
}

/// `gcd(a_1 + ... + a_t mod k, k) = 1`: identifying variables whose
/// coefficients satisfy this keeps an H(q) sum an H(q)-function.
pub fn identification_condition(coeffs: &[u64], k: u8) -> bool {
    let m = u64::from(k);
    let sum = coeffs.iter().fold(0u64, |s, &a| (s + a % m) % m);
    is_coprime(sum, k)
}

/// Replaces the variables in `vars` by a single variable `z`, placed at the
/// smallest position of `vars`; the other variables keep their order. The
/// result has arity `n - t + 1`.
pub fn identify_variables(f: &TruthTable, vars: &VariableSet) -> Result<TruthTable> {
    if vars.len() < 2 {
        return Err(Error::domain(format!(
            "identification needs at least two variables, got {}",
            vars.len()
        )));
    }
    vars.check_within(f.arity())?;
    let z = vars.positions()[0];
    let kept: Vec<usize> = (1..=f.arity())
        .filter(|&p| p == z || !vars.contains(p))
        .collect();
    // for each result variable, the total stride of the original variables it drives
    let strides: Vec<usize> = kept
        .iter()
        .map(|&p| {
            if p == z {
                vars.positions().iter().map(|&v| f.stride(v)).sum()
            } else {
                f.stride(p)
            }
        })
        .collect();
    TruthTable::from_fn(f.order(), kept.len(), |y| {
        let flat: usize = y.iter().zip(&strides).map(|(&c, &s)| usize::from(c) * s).sum();
        f.values()[flat]
    })
}
