//! Exact linear algebra over ℚ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// column of each nonzero row.
pub fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(found) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, found);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r == row || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            let pivot_row = m[row].clone();
            for (x, p) in m[r].iter_mut().zip(&pivot_row).skip(col) {
                *x -= &factor * p;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(matrix: &[Vec<BigInt>]) -> usize {
    let mut m = to_rational(matrix);
    rref(&mut m).len()
}

fn to_rational(matrix: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect()
}

/// Basis of `{v : matrix · v = 0}` for a `rows × cols` integer matrix.
///
/// One vector per free column, scaled to coprime integers with a positive
/// entry in its free column.
pub fn kernel(matrix: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut m = to_rational(matrix);
    debug_assert!(m.iter().all(|r| r.len() == cols));
    let pivots = rref(&mut m);
    let free = (0..cols).filter(|c| !pivots.contains(c));
    free.map(|fc| {
        let mut v = vec![BigRational::zero(); cols];
        v[fc] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][fc].clone();
        }
        primitive_integer_vector(&v)
    })
    .collect()
}

/// Clears denominators and divides out the content.
fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / gcd.abs()).collect()
}
