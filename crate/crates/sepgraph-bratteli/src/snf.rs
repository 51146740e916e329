use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

fn min_nonzero_in_cross(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let consider = |i: usize, j: usize, best: &mut Option<(usize, usize)>| {
        if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
            *best = Some((i, j));
        }
    };
    for i in t..a.len() {
        consider(i, t, &mut best);
    }
    for j in t..a[t].len() {
        consider(t, j, &mut best);
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], j: usize, k: usize) {
    if j != k {
        for row in a.iter_mut() {
            row.swap(j, k);
        }
    }
}

/// Diagonal of the Smith normal form of an integer matrix: the nonzero
/// invariant factors `d_1 | d_2 | ...`, all positive.
pub fn smith_normal_form(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
        else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    let (pivot_rows, rest) = a.split_at_mut(i);
                    for (x, p) in rest[0][t..].iter_mut().zip(&pivot_rows[t][t..]) {
                        *x -= &q * p;
                    }
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in &mut a[t..] {
                        let delta = &q * &row[t];
                        row[j] -= delta;
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                let (pi, pj) = min_nonzero_in_cross(&a, t).expect("pivot row or column is nonzero");
                a.swap(t, pi);
                swap_cols(&mut a, t, pj);
                continue;
            }
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match offender {
                Some(i) => {
                    let (upper, lower) = a.split_at_mut(i);
                    for (x, y) in upper[t][t..].iter_mut().zip(&lower[0][t..]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

/// Invariant factors of a small integer matrix.
pub fn invariant_factors(m: &[Vec<i64>]) -> Vec<BigInt> {
    smith_normal_form(m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(invariant_factors(&[vec![2, 0], vec![0, 3]]), vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(invariant_factors(&[vec![1, -3], vec![1, -2]]), vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(invariant_factors(&[vec![0, 0]]), Vec::<BigInt>::new());
        assert_eq!(invariant_factors(&[vec![4, 6]]), vec![BigInt::from(2)]);
    }
}
