//! Cross-checks of the interpolating polynomial against two independent
//! routes: solving the Vandermonde system by Gaussian elimination, and
//! expanding the bordered determinant `|1 x ... x^{p-1} y; 1 j ... j^{p-1} b_j|`
//! along its first row.

#![allow(clippy::needless_range_loop)]

mod common;

use common::all_points;
use kvlogic::{eval_polynomial, interpolate_unary, TruthTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pw(b: i64, e: usize, p: i64) -> i64 {
    (0..e).fold(1, |acc, _| acc * b % p)
}

fn inv(a: i64, p: i64) -> i64 {
    pw(a.rem_euclid(p), (p - 2) as usize, p)
}

/// Solve `V c = b` over GF(p) where `V[j][i] = j^i`.
fn vandermonde_solve(values: &[u8], p: i64) -> Vec<u8> {
    let m = values.len();
    let mut a: Vec<Vec<i64>> = (0..m)
        .map(|j| {
            let mut row: Vec<i64> = (0..m).map(|i| pw(j as i64, i, p)).collect();
            row.push(i64::from(values[j]));
            row
        })
        .collect();
    for col in 0..m {
        let piv = (col..m).find(|&r| a[r][col] != 0).expect("Vandermonde is invertible");
        a.swap(col, piv);
        let s = inv(a[col][col], p);
        for x in a[col].iter_mut() {
            *x = *x * s % p;
        }
        for r in 0..m {
            if r != col && a[r][col] != 0 {
                let factor = a[r][col];
                for c in 0..=m {
                    a[r][c] = (a[r][c] - factor * a[col][c]).rem_euclid(p);
                }
            }
        }
    }
    a.iter().map(|row| row[m] as u8).collect()
}

fn det(mut a: Vec<Vec<i64>>, p: i64) -> i64 {
    let m = a.len();
    let mut d = 1;
    for col in 0..m {
        let Some(piv) = (col..m).find(|&r| a[r][col].rem_euclid(p) != 0) else {
            return 0;
        };
        if piv != col {
            a.swap(col, piv);
            d = -d;
        }
        d = d * a[col][col] % p;
        let s = inv(a[col][col], p);
        for r in col + 1..m {
            let factor = a[r][col] * s % p;
            for c in col..m {
                a[r][c] = (a[r][c] - factor * a[col][c]).rem_euclid(p);
            }
        }
    }
    d.rem_euclid(p)
}

/// Data rows of the bordered determinant, `(1, j, ..., j^{p-1}, b_j)`.
fn data_rows(values: &[u8], p: i64) -> Vec<Vec<i64>> {
    (0..values.len())
        .map(|j| {
            let mut row: Vec<i64> = (0..values.len()).map(|i| pw(j as i64, i, p)).collect();
            row.push(i64::from(values[j]));
            row
        })
        .collect()
}

fn bordered_det(values: &[u8], p: i64, x: i64, y: i64) -> i64 {
    let m = values.len();
    let mut first: Vec<i64> = (0..m).map(|i| pw(x, i, p)).collect();
    first.push(y);
    let mut rows = vec![first];
    rows.extend(data_rows(values, p));
    det(rows, p)
}

/// Coefficients from the first-row cofactor expansion: `sum C_i x^i + C_y y = 0`.
fn cofactor_coefficients(values: &[u8], p: i64) -> Vec<u8> {
    let m = values.len();
    let rows = data_rows(values, p);
    let minor = |skip: usize| -> i64 {
        let sub: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|(c, _)| *c != skip).map(|(_, v)| *v).collect())
            .collect();
        let sign = if skip.is_multiple_of(2) { 1 } else { -1 };
        (sign * det(sub, p)).rem_euclid(p)
    };
    let cy = minor(m);
    (0..m)
        .map(|i| ((-minor(i)).rem_euclid(p) * inv(cy, p) % p) as u8)
        .collect()
}

#[test]
fn gf3_example_matches_reduced_rational_form() {
    // 1 + (5x - 3x^2)/2 over GF(3): 5/2 = 1, 3/2 = 0
    let t = TruthTable::new(3, 1, vec![1, 2, 0]).unwrap();
    let half = inv(2, 3);
    let expected = vec![1u8, (5 * half % 3) as u8, ((-3 * half).rem_euclid(3)) as u8];
    assert_eq!(expected, vec![1, 1, 0]);
    assert_eq!(interpolate_unary(&t).unwrap().coefficients(), expected.as_slice());
    assert_eq!(vandermonde_solve(&[1, 2, 0], 3), expected);
    assert_eq!(cofactor_coefficients(&[1, 2, 0], 3), expected);
}

#[test]
fn agrees_with_vandermonde_and_cofactors_exhaustively() {
    for p in [2u8, 3, 5] {
        for values in all_points(p, usize::from(p)) {
            let t = TruthTable::new(p, 1, values.clone()).unwrap();
            let poly = interpolate_unary(&t).unwrap();
            assert_eq!(poly.coefficients(), vandermonde_solve(&values, i64::from(p)).as_slice());
            assert_eq!(poly.coefficients(), cofactor_coefficients(&values, i64::from(p)).as_slice());
            assert!(poly.degree().is_none_or(|d| d < usize::from(p)));
            for x in 0..p {
                assert_eq!(eval_polynomial(&poly, x).unwrap(), values[usize::from(x)]);
            }
        }
    }
}

#[test]
fn bordered_determinant_vanishes_exactly_on_the_graph() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for p in [2u8, 3, 5] {
        for _ in 0..30 {
            let values: Vec<u8> = (0..p).map(|_| rng.gen_range(0..p)).collect();
            let poly = interpolate_unary(&TruthTable::new(p, 1, values.clone()).unwrap()).unwrap();
            for x in 0..p {
                let fx = eval_polynomial(&poly, x).unwrap();
                for y in 0..p {
                    let d = bordered_det(&values, i64::from(p), i64::from(x), i64::from(y));
                    assert_eq!(d == 0, y == fx, "p={p} x={x} y={y}");
                }
            }
        }
    }
}

#[test]
fn random_round_trips_up_to_13() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for p in [7u8, 11, 13] {
        for _ in 0..100 {
            let values: Vec<u8> = (0..p).map(|_| rng.gen_range(0..p)).collect();
            let t = TruthTable::new(p, 1, values.clone()).unwrap();
            let poly = interpolate_unary(&t).unwrap();
            assert_eq!(poly.coefficients(), vandermonde_solve(&values, i64::from(p)).as_slice());
            assert_eq!(interpolate_unary(&t).unwrap(), poly);
            for x in 0..p {
                assert_eq!(eval_polynomial(&poly, x).unwrap(), values[usize::from(x)]);
            }
        }
    }
}
