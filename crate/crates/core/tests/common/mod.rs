//! Brute-force oracles and random instance generators shared by the
//! integration tests. The oracles work on explicit assignment vectors and
//! never touch the library's offset arithmetic.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use kvlogic::{TruthTable, VariableSet};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

pub fn golden_f1() -> TruthTable {
    TruthTable::new(3, 2, vec![2, 2, 0, 1, 1, 1, 0, 2, 1]).unwrap()
}

pub fn golden_f2() -> TruthTable {
    TruthTable::new(3, 1, vec![1, 0, 1]).unwrap()
}

pub const SUM_F1_F2: [u8; 27] = [
    0, 0, 1, 2, 2, 0, 0, 0, 1, 2, 2, 2, 1, 1, 1, 2, 2, 2, 1, 0, 2, 0, 2, 1, 1, 0, 2,
];

pub const H1_LATIN: [u8; 9] = [1, 2, 0, 2, 0, 1, 0, 1, 2];

pub fn vs(p: &[usize]) -> VariableSet {
    VariableSet::new(p.iter().copied()).unwrap()
}

/// All points of `E_k^n` in nested-loop order with `x_1` outermost.
pub fn all_points(k: u8, n: usize) -> Vec<Vec<u8>> {
    let mut points = vec![vec![]];
    for _ in 0..n {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..k).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    points
}

/// `Spr(M, f)` by definition: fix the complement every possible way and count
/// the distinct values over all assignments of `M`.
pub fn naive_spectrum(f: &TruthTable, m: &[usize]) -> BTreeSet<u8> {
    let n = f.arity();
    let k = f.order();
    let comp: Vec<usize> = (1..=n).filter(|p| !m.contains(p)).collect();
    let mut out = BTreeSet::new();
    for fixed in all_points(k, comp.len()) {
        let mut seen = BTreeSet::new();
        for free in all_points(k, m.len()) {
            let mut x = vec![0u8; n];
            for (i, &p) in comp.iter().enumerate() {
                x[p - 1] = fixed[i];
            }
            for (i, &p) in m.iter().enumerate() {
                x[p - 1] = free[i];
            }
            seen.insert(f.at(&x).unwrap());
        }
        out.insert(seen.len() as u8);
    }
    out
}

/// Definition of an H-function: changing any one argument changes the value.
pub fn naive_h(f: &TruthTable) -> bool {
    let k = f.order();
    all_points(k, f.arity()).iter().all(|x| {
        (0..f.arity()).all(|i| {
            (0..k).filter(|&v| v != x[i]).all(|v| {
                let mut y = x.clone();
                y[i] = v;
                f.at(&y).unwrap() != f.at(x).unwrap()
            })
        })
    })
}

/// Latin property by definition: every line holds all of `E_k`.
pub fn naive_latin(f: &TruthTable) -> bool {
    (1..=f.arity()).all(|p| naive_spectrum(f, &[p]).iter().all(|&q| q == f.order()))
}

pub fn random_table<R: Rng>(rng: &mut R, k: u8, n: usize) -> TruthTable {
    let cells = (k as usize).pow(n as u32);
    TruthTable::new(k, n, (0..cells).map(|_| rng.gen_range(0..k)).collect()).unwrap()
}

/// A random ordered partition of `1..=n` into at least two blocks (n >= 2).
pub fn random_partition<R: Rng>(rng: &mut R, n: usize) -> Vec<VariableSet> {
    let mut vars: Vec<usize> = (1..=n).collect();
    vars.shuffle(rng);
    let s = rng.gen_range(2..=n);
    // s nonempty blocks: cut the shuffled list at s - 1 distinct points
    let mut cuts: Vec<usize> = rand::seq::index::sample(rng, n - 1, s - 1)
        .into_iter()
        .map(|c| c + 1)
        .collect();
    cuts.sort_unstable();
    let mut blocks = Vec::new();
    let mut start = 0;
    for &c in cuts.iter().chain(std::iter::once(&n)) {
        blocks.push(VariableSet::new(vars[start..c].iter().copied()).unwrap());
        start = c;
    }
    blocks
}

pub fn coprime_to(k: u8) -> Vec<u64> {
    (1..u64::from(k))
        .filter(|&a| num_gcd(a, u64::from(k)) == 1)
        .collect()
}

pub fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}
