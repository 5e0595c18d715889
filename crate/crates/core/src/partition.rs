//! Ordered partitions `S = (X_1, ..., X_s)` of the variables and their target
//! vectors `q = (q_1, ..., q_s)`.

use crate::error::{Error, Result};
use crate::function::VariableSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    blocks: Vec<VariableSet>,
}

impl Partition {
    /// Blocks must be nonempty, pairwise disjoint, and cover `1..=n`. A single
    /// block is accepted.
    pub fn new(n: usize, blocks: Vec<VariableSet>) -> Result<Self> {
        if n > 0 && blocks.is_empty() {
            return Err(Error::Partition("no blocks".into()));
        }
        let mut seen = vec![false; n + 1];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Partition(format!("block {} is empty", i + 1)));
            }
            for &p in block.positions() {
                if p > n {
                    return Err(Error::Partition(format!(
                        "x_{p} is not a variable of a function of {n} variables"
                    )));
                }
                if seen[p] {
                    return Err(Error::Partition(format!("x_{p} appears in two blocks")));
                }
                seen[p] = true;
            }
        }
        if let Some(p) = (1..=n).find(|&p| !seen[p]) {
            return Err(Error::Partition(format!("x_{p} is not covered")));
        }
        Ok(Partition { n, blocks })
    }

    /// Infers `n` as the number of listed variables.
    pub fn from_blocks(blocks: Vec<VariableSet>) -> Result<Self> {
        let n = blocks.iter().map(VariableSet::len).sum();
        Self::new(n, blocks)
    }

    /// `({x_1}, ..., {x_n})`
    pub fn singletons(n: usize) -> Self {
        Partition {
            n,
            blocks: (1..=n).map(|p| VariableSet::single(p).unwrap()).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[VariableSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Target ranges `q_1, ..., q_s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QVector(Vec<u8>);

impl QVector {
    pub fn new(targets: Vec<u8>) -> Self {
        QVector(targets)
    }

    /// `(q, ..., q)` of length `len`.
    pub fn uniform(q: u8, len: usize) -> Self {
        QVector(vec![q; len])
    }

    pub fn targets(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every target in `[1, k]` and exactly `len` of them.
    pub fn check(&self, k: u8, len: usize) -> Result<()> {
        if self.0.len() != len {
            return Err(Error::Arity {
                expected: len,
                got: self.0.len(),
            });
        }
        match self.0.iter().find(|&&q| q == 0 || q > k) {
            Some(q) => Err(Error::domain(format!("target range {q} is not in [1, {k}]"))),
            None => Ok(()),
        }
    }
}
