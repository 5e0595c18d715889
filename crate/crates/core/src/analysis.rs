//! Ranges, subfunctions, spectra, and the H-family / Latin predicates.
//!
//! Every predicate is decided by exhaustive enumeration over the table and
//! returns a [`Verdict`]. A refutation carries a [`Witness`] naming the
//! offending line or subfunction, which [`Witness::confirm`] can re-check
//! against the function independently of the predicate that produced it.
//!
//! Lines are scanned in lexicographic order of `(axis, fixed coordinates)` and
//! the first violation wins, so witnesses are deterministic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::function::{assignment_at, TruthTable, VariableSet};
use crate::partition::{Partition, QVector};

fn value_mask(values: impl IntoIterator<Item = u8>) -> u64 {
    values.into_iter().fold(0u64, |m, v| m | (1u64 << v))
}

/// `Rng(f)`: the number of distinct values `f` assumes.
pub fn range(f: &TruthTable) -> u8 {
    value_mask(f.values().iter().copied()).count_ones() as u8
}

/// Variables bound to constants, keyed by 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Fixing(BTreeMap<usize, u8>);

impl Fixing {
    pub fn new(bindings: impl IntoIterator<Item = (usize, u8)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (p, c) in bindings {
            if p == 0 {
                return Err(Error::domain("variable positions are 1-based"));
            }
            if map.insert(p, c).is_some() {
                return Err(Error::domain(format!("x_{p} is bound twice")));
            }
        }
        Ok(Fixing(map))
    }

    pub fn empty() -> Self {
        Fixing::default()
    }

    pub fn bindings(&self) -> &BTreeMap<usize, u8> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn positions(&self) -> VariableSet {
        VariableSet::new(self.0.keys().copied()).expect("map keys are distinct and nonzero")
    }

    fn check_for(&self, f: &TruthTable) -> Result<()> {
        for (&p, &c) in &self.0 {
            if p > f.arity() {
                return Err(Error::domain(format!(
                    "x_{p} is not a variable of a function of {} variables",
                    f.arity()
                )));
            }
            if c >= f.order() {
                return Err(Error::domain(format!(
                    "constant {c} for x_{p} is not in E_{}",
                    f.order()
                )));
            }
        }
        Ok(())
    }

    fn base_offset(&self, f: &TruthTable) -> usize {
        self.0.iter().map(|(&p, &c)| usize::from(c) * f.stride(p)).sum()
    }

    /// The bindings of `positions` read off the flat index `base` of `f`.
    fn from_flat(f: &TruthTable, base: usize, positions: &[usize]) -> Self {
        let a = assignment_at(base, f.order(), f.arity()).expect("offset lies inside the table");
        Fixing(positions.iter().map(|&p| (p, a.coords()[p - 1])).collect())
    }
}

/// Subfunction of `f` obtained by binding the variables of `fix`. The free
/// variables keep their relative order; fixing every variable leaves an
/// arity-0 constant.
pub fn subfunction(f: &TruthTable, fix: &Fixing) -> Result<TruthTable> {
    fix.check_for(f)?;
    if fix.is_empty() {
        return Ok(f.clone());
    }
    let free = fix.positions().complement(f.arity());
    let base = fix.base_offset(f);
    let values = f
        .offsets(free.positions())
        .into_iter()
        .map(|o| f.values()[base + o])
        .collect();
    TruthTable::new(f.order(), free.len(), values)
}

/// `Spr(M, f)`: a set of ranges, each in `[1, k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SpectrumSet(BTreeSet<u8>);

impl SpectrumSet {
    pub fn members(&self) -> &BTreeSet<u8> {
        &self.0
    }

    pub fn contains(&self, q: u8) -> bool {
        self.0.contains(&q)
    }

    /// `true` iff the set is exactly `{q}`.
    pub fn is_exactly(&self, q: u8) -> bool {
        self.0.len() == 1 && self.0.contains(&q)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<u8> for SpectrumSet {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        SpectrumSet(iter.into_iter().collect())
    }
}

impl fmt::Display for SpectrumSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|q| q.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Calls `visit(base, mask)` for every fixing of `X_f \ block`, in
/// lexicographic order, where `mask` is the value set of the subfunction over
/// `block`. Stops early when `visit` returns `false`.
fn scan_block(f: &TruthTable, block: &VariableSet, mut visit: impl FnMut(usize, u64) -> bool) {
    let inner = f.offsets(block.positions());
    let outer = f.offsets(block.complement(f.arity()).positions());
    let values = f.values();
    for base in outer {
        let mask = inner
            .iter()
            .fold(0u64, |m, &o| m | (1u64 << values[base + o]));
        if !visit(base, mask) {
            return;
        }
    }
}

/// `Spr(M, f)`: the ranges of all subfunctions of `f` with respect to `X_f \ M`.
pub fn spectrum(m: &VariableSet, f: &TruthTable) -> Result<SpectrumSet> {
    if m.is_empty() {
        return Err(Error::EmptySet);
    }
    m.check_within(f.arity())?;
    let mut out = BTreeSet::new();
    scan_block(f, m, |_, mask| {
        out.insert(mask.count_ones() as u8);
        true
    });
    Ok(SpectrumSet(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// `value` occurs more than once on the line.
    RepeatedValueOnLine { value: u8 },
    /// The subfunction's range differs from `expected`.
    WrongRange { expected: u8 },
    /// `value` does not occur on the line.
    MissingValue { value: u8 },
}

/// A counterexample: the subfunction of `f` obtained by `fixing`, whose free
/// variables are `varying`, together with its values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    pub kind: WitnessKind,
    pub fixing: Fixing,
    pub varying: VariableSet,
    pub values: Vec<u8>,
}

impl Witness {
    fn new(f: &TruthTable, kind: WitnessKind, block: &VariableSet, base: usize) -> Self {
        let fixing = Fixing::from_flat(f, base, block.complement(f.arity()).positions());
        let values = f
            .offsets(block.positions())
            .into_iter()
            .map(|o| f.values()[base + o])
            .collect();
        Witness {
            kind,
            fixing,
            varying: block.clone(),
            values,
        }
    }

    /// Re-derives the witnessed subfunction from `f` and checks that it really
    /// exhibits the claimed violation.
    pub fn confirm(&self, f: &TruthTable) -> bool {
        if self.fixing.positions().complement(f.arity()) != self.varying {
            return false;
        }
        let Ok(g) = subfunction(f, &self.fixing) else {
            return false;
        };
        if g.values() != self.values.as_slice() {
            return false;
        }
        match self.kind {
            WitnessKind::RepeatedValueOnLine { value } => {
                g.values().iter().filter(|&&v| v == value).count() > 1
            }
            WitnessKind::MissingValue { value } => value < f.order() && !g.values().contains(&value),
            WitnessKind::WrongRange { expected } => range(&g) != expected,
        }
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "axis={} fixed=({}) values=({})",
            self.varying,
            join(self.fixing.bindings().values()),
            join(&self.values)
        )?;
        match self.kind {
            WitnessKind::RepeatedValueOnLine { value } => write!(f, " repeated={value}"),
            WitnessKind::MissingValue { value } => write!(f, " missing={value}"),
            WitnessKind::WrongRange { expected } => write!(f, " expected_range={expected}"),
        }
    }
}

/// Outcome of a predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Refuted(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Refuted(w) => Some(w),
        }
    }
}

impl From<Option<Witness>> for Verdict {
    fn from(w: Option<Witness>) -> Self {
        w.map_or(Verdict::Holds, Verdict::Refuted)
    }
}

/// Visits every axis-parallel line in scan order as `(axis, base, cells)`.
fn scan_lines(
    f: &TruthTable,
    mut visit: impl FnMut(&VariableSet, usize, &[u8]) -> Option<Witness>,
    all: bool,
) -> Vec<Witness> {
    let k = usize::from(f.order());
    let mut found = Vec::new();
    let mut cells = vec![0u8; k];
    for axis in 1..=f.arity() {
        let line = VariableSet::single(axis).unwrap();
        let stride = f.stride(axis);
        for base in f.offsets(line.complement(f.arity()).positions()) {
            for (j, c) in cells.iter_mut().enumerate() {
                *c = f.values()[base + j * stride];
            }
            if let Some(w) = visit(&line, base, &cells) {
                found.push(w);
                if !all {
                    return found;
                }
            }
        }
    }
    found
}

fn h_scan(f: &TruthTable, all: bool) -> Vec<Witness> {
    scan_lines(
        f,
        |axis, base, cells| {
            // changing one argument a' != a'' must change the value
            for a1 in 0..cells.len() {
                for a2 in a1 + 1..cells.len() {
                    if cells[a1] == cells[a2] {
                        let kind = WitnessKind::RepeatedValueOnLine { value: cells[a1] };
                        return Some(Witness::new(f, kind, axis, base));
                    }
                }
            }
            None
        },
        all,
    )
}

fn latin_scan(f: &TruthTable, all: bool) -> Vec<Witness> {
    let full = value_mask(0..f.order());
    scan_lines(
        f,
        |axis, base, cells| {
            let union = value_mask(cells.iter().copied());
            (union != full).then(|| {
                let value = (!union & full).trailing_zeros() as u8;
                Witness::new(f, WitnessKind::MissingValue { value }, axis, base)
            })
        },
        all,
    )
}

/// H-function test: along every variable, distinct arguments give distinct
/// values.
///
/// Arity 1 is accepted and reads as "f is a bijection of `E_k`", which is what
/// `Spr(x, g) = {Rng(g)}` demands of unary subfunctions. Arity 0 holds
/// vacuously.
pub fn is_h_function(f: &TruthTable) -> Verdict {
    h_scan(f, false).pop().into()
}

/// Every violating line, in scan order.
pub fn h_function_violations(f: &TruthTable) -> Vec<Witness> {
    h_scan(f, true)
}

/// Latin hypercube test: every axis-parallel line contains all of `E_k`.
pub fn is_latin_hypercube(f: &TruthTable) -> Verdict {
    latin_scan(f, false).pop().into()
}

/// Every violating line, in scan order.
pub fn latin_violations(f: &TruthTable) -> Vec<Witness> {
    latin_scan(f, true)
}

fn check_blocks(f: &TruthTable, blocks: &[VariableSet], targets: &[u8]) -> Verdict {
    for (block, &q) in blocks.iter().zip(targets) {
        let mut bad = None;
        scan_block(f, block, |base, mask| {
            if mask.count_ones() as u8 != q {
                bad = Some(base);
            }
            bad.is_none()
        });
        if let Some(base) = bad {
            return Verdict::Refuted(Witness::new(
                f,
                WitnessKind::WrongRange { expected: q },
                block,
                base,
            ));
        }
    }
    Verdict::Holds
}

/// H(S, q) test: `Spr(X_i, f) = {q_i}` for every block `X_i` of `s`.
pub fn check_hsq(f: &TruthTable, s: &Partition, qvec: &QVector) -> Result<Verdict> {
    if s.arity() != f.arity() {
        return Err(Error::Partition(format!(
            "partition covers {} variables but the function has {}",
            s.arity(),
            f.arity()
        )));
    }
    qvec.check(f.order(), s.len())?;
    Ok(check_blocks(f, s.blocks(), qvec.targets()))
}

/// q̄H test: `Spr(x_i, f) = {q_i}` for every variable.
pub fn check_qh(f: &TruthTable, qvec: &QVector) -> Result<Verdict> {
    qvec.check(f.order(), f.arity())?;
    let s = Partition::singletons(f.arity());
    Ok(check_blocks(f, s.blocks(), qvec.targets()))
}

/// H(q) test: `Spr(x_i, f) = {q}` for every variable. With `q = k` this is the
/// H-function property.
pub fn check_hq(f: &TruthTable, q: u8) -> Result<Verdict> {
    check_qh(f, &QVector::uniform(q, f.arity())).map_err(|e| match e {
        Error::Domain(_) => Error::domain(format!("q = {q} is not in [1, {}]", f.order())),
        other => other,
    })
}

/// Checks [`check_hq`] on every subfunction of `f` that still depends on at
/// least one variable: all fixings of all proper subsets of `X_f`, including
/// the empty fixing. Agrees with `check_hq(f, q)` on every input, which makes
/// the pair a self-test.
pub fn hereditary_check(f: &TruthTable, q: u8) -> Result<Verdict> {
    if q == 0 || q > f.order() {
        return Err(Error::domain(format!("q = {q} is not in [1, {}]", f.order())));
    }
    let n = f.arity();
    if n == 0 {
        return Ok(Verdict::Holds);
    }
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize == n {
            continue;
        }
        let fixed: Vec<usize> = (1..=n).filter(|p| mask & (1 << (p - 1)) != 0).collect();
        let fixed_set = VariableSet::new(fixed.iter().copied())?;
        let free = fixed_set.complement(n);
        for base in f.offsets(&fixed) {
            let fix = Fixing::from_flat(f, base, &fixed);
            let g = subfunction(f, &fix)?;
            if let Verdict::Refuted(w) = check_hq(&g, q)? {
                // lift the witness from g's variables back to f's
                let mut bindings: Vec<(usize, u8)> = fix.bindings().iter().map(|(&p, &c)| (p, c)).collect();
                bindings.extend(
                    w.fixing
                        .bindings()
                        .iter()
                        .map(|(&p, &c)| (free.positions()[p - 1], c)),
                );
                let varying =
                    VariableSet::new(w.varying.positions().iter().map(|&p| free.positions()[p - 1]))?;
                return Ok(Verdict::Refuted(Witness {
                    kind: w.kind,
                    fixing: Fixing::new(bindings)?,
                    varying,
                    values: w.values,
                }));
            }
        }
    }
    Ok(Verdict::Holds)
}
