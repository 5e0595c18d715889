//! Truth-table representation of functions `E_k^n -> E_k`.
//!
//! Tables are stored densely in lexicographic order of their assignments with
//! `x_1` the most significant coordinate, so the assignment `(a_1, ..., a_n)`
//! lives at `a_1*k^(n-1) + ... + a_n`. Element values are `u8` since the order
//! is capped at [`MAX_ORDER`].
//!
//! Variables are addressed by 1-based position (`x_1 .. x_n`); element values
//! and assignment coordinates are 0-based members of `E_k`. The 1-based matrix
//! indexing `a_{i_1 ... i_n}` only exists behind [`HypercubeView`].

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order `k`.
pub const MAX_ORDER: u8 = 64;

/// Largest supported table size `k^n`.
pub const MAX_CELLS: usize = 1 << 28;

/// Validates `k` and `n` and returns `k^n`.
///
/// Arity 0 is accepted: it is the constant left over after fixing every
/// variable of a function.
pub fn cell_count(k: u8, n: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::domain(format!("order k = {k} must be at least 2")));
    }
    if k > MAX_ORDER {
        return Err(Error::Capacity(format!("order k = {k} exceeds {MAX_ORDER}")));
    }
    let mut cells: usize = 1;
    for _ in 0..n {
        cells = cells
            .checked_mul(usize::from(k))
            .filter(|&c| c <= MAX_CELLS)
            .ok_or_else(|| Error::Capacity(format!("{k}^{n} cells exceeds {MAX_CELLS}")))?;
    }
    Ok(cells)
}

/// A point of `E_k^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment(Vec<u8>);

impl Assignment {
    pub fn new(coords: Vec<u8>) -> Self {
        Assignment(coords)
    }

    pub fn coords(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<u8>> for Assignment {
    fn from(coords: Vec<u8>) -> Self {
        Assignment(coords)
    }
}

impl From<&[u8]> for Assignment {
    fn from(coords: &[u8]) -> Self {
        Assignment(coords.to_vec())
    }
}

/// Position of `a` in the lexicographic layout of `E_k^n`, `n = a.len()`.
pub fn flat_index(a: &Assignment, k: u8) -> Result<usize> {
    cell_count(k, a.len())?;
    let mut index = 0usize;
    for (pos, &c) in a.coords().iter().enumerate() {
        if c >= k {
            return Err(Error::domain(format!(
                "coordinate x_{} = {c} is not in E_{k}",
                pos + 1
            )));
        }
        index = index * usize::from(k) + usize::from(c);
    }
    Ok(index)
}

/// Inverse of [`flat_index`].
pub fn assignment_at(index: usize, k: u8, n: usize) -> Result<Assignment> {
    let cells = cell_count(k, n)?;
    if index >= cells {
        return Err(Error::domain(format!("index {index} is not below {k}^{n}")));
    }
    let mut coords = vec![0u8; n];
    let mut rest = index;
    for c in coords.iter_mut().rev() {
        *c = (rest % usize::from(k)) as u8;
        rest /= usize::from(k);
    }
    Ok(Assignment(coords))
}

/// A set of variable positions, each in `1..=n`, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VariableSet(Vec<usize>);

impl VariableSet {
    /// Rejects position 0 and duplicates. The upper bound is checked against a
    /// concrete arity by [`VariableSet::check_within`].
    pub fn new(positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = positions.into_iter().collect();
        if v.contains(&0) {
            return Err(Error::domain("variable positions are 1-based"));
        }
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain("duplicate variable position"));
        }
        Ok(VariableSet(v))
    }

    /// `{x_1, ..., x_n}`
    pub fn all(n: usize) -> Self {
        VariableSet((1..=n).collect())
    }

    pub fn single(position: usize) -> Result<Self> {
        Self::new([position])
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.0.binary_search(&position).is_ok()
    }

    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&p) if p > n => Err(Error::domain(format!(
                "variable x_{p} does not exist in a function of {n} variables"
            ))),
            _ => Ok(()),
        }
    }

    /// `X_f \ self` for a function of arity `n`.
    pub fn complement(&self, n: usize) -> VariableSet {
        VariableSet((1..=n).filter(|p| !self.contains(*p)).collect())
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A total function `E_k^n -> E_k`. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    k: u8,
    n: usize,
    values: Vec<u8>,
}

impl TruthTable {
    pub fn new(k: u8, n: usize, values: Vec<u8>) -> Result<Self> {
        let cells = cell_count(k, n)?;
        if values.len() != cells {
            return Err(Error::Length {
                expected: cells,
                got: values.len(),
            });
        }
        if let Some((i, &v)) = values.iter().enumerate().find(|(_, &v)| v >= k) {
            return Err(Error::domain(format!("entry {i} = {v} is not in E_{k}")));
        }
        Ok(TruthTable { k, n, values })
    }

    /// Tabulates `f` over all assignments in lexicographic order.
    pub fn from_fn(k: u8, n: usize, mut f: impl FnMut(&[u8]) -> u8) -> Result<Self> {
        let cells = cell_count(k, n)?;
        let mut values = Vec::with_capacity(cells);
        let mut coords = vec![0u8; n];
        for _ in 0..cells {
            values.push(f(&coords));
            for c in coords.iter_mut().rev() {
                *c += 1;
                if *c < k {
                    break;
                }
                *c = 0;
            }
        }
        Self::new(k, n, values)
    }

    pub fn constant(k: u8, n: usize, value: u8) -> Result<Self> {
        let cells = cell_count(k, n)?;
        Self::new(k, n, vec![value; cells])
    }

    /// The unary identity `x -> x`.
    pub fn identity(k: u8) -> Result<Self> {
        cell_count(k, 1)?;
        Self::new(k, 1, (0..k).collect())
    }

    pub fn order(&self) -> u8 {
        self.k
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u8> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn evaluate(&self, a: &Assignment) -> Result<u8> {
        if a.len() != self.n {
            return Err(Error::Arity {
                expected: self.n,
                got: a.len(),
            });
        }
        Ok(self.values[flat_index(a, self.k)?])
    }

    /// Same as [`TruthTable::evaluate`] on a coordinate slice.
    pub fn at(&self, coords: &[u8]) -> Result<u8> {
        self.evaluate(&Assignment::from(coords))
    }

    pub fn as_hypercube(&self) -> HypercubeView<'_> {
        HypercubeView { table: self }
    }

    /// Distance in the flat layout between neighbours along `x_position`.
    pub(crate) fn stride(&self, position: usize) -> usize {
        debug_assert!((1..=self.n).contains(&position));
        usize::from(self.k).pow((self.n - position) as u32)
    }

    /// Flat offsets of every assignment to `positions` (all other variables
    /// zero), enumerated lexicographically with the first listed position most
    /// significant.
    pub(crate) fn offsets(&self, positions: &[usize]) -> Vec<usize> {
        let mut out = vec![0usize];
        for &p in positions {
            let stride = self.stride(p);
            out = out
                .iter()
                .flat_map(|&o| (0..usize::from(self.k)).map(move |v| o + v * stride))
                .collect();
        }
        out
    }
}

/// Read-only 1-based matrix view `a_{i_1 ... i_n} = f(i_1 - 1, ..., i_n - 1)`.
#[derive(Debug, Clone, Copy)]
pub struct HypercubeView<'a> {
    table: &'a TruthTable,
}

impl<'a> HypercubeView<'a> {
    pub fn table(&self) -> &'a TruthTable {
        self.table
    }

    pub fn order(&self) -> u8 {
        self.table.k
    }

    pub fn dimension(&self) -> usize {
        self.table.n
    }

    /// `a_{i_1 ... i_n}` with every index in `1..=k`.
    pub fn get(&self, indices: &[usize]) -> Result<u8> {
        let k = usize::from(self.table.k);
        let coords = indices
            .iter()
            .map(|&i| {
                if (1..=k).contains(&i) {
                    Ok((i - 1) as u8)
                } else {
                    Err(Error::domain(format!("matrix index {i} is not in 1..={k}")))
                }
            })
            .collect::<Result<Vec<u8>>>()?;
        self.table.evaluate(&Assignment(coords))
    }

    /// The `k` entries along `axis` (1-based) through the cell `indices`; the
    /// entry of `indices` at `axis` is ignored.
    pub fn line(&self, axis: usize, indices: &[usize]) -> Result<Vec<u8>> {
        if !(1..=self.dimension()).contains(&axis) {
            return Err(Error::domain(format!("axis {axis} out of range")));
        }
        let mut idx = indices.to_vec();
        (1..=usize::from(self.table.k))
            .map(|j| {
                idx[axis - 1] = j;
                self.get(&idx)
            })
            .collect()
    }
}
