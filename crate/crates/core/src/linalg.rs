//! Small exact linear algebra over the rationals and the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qfrac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

pub fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Converts a rational vector with integral entries; `None` if some entry is fractional.
pub fn integral(v: &[Q]) -> Option<Vec<BigInt>> {
    v.iter().map(|x| if x.is_integer() { Some(x.to_integer()) } else { None }).collect()
}

pub fn integral_i64(v: &[Q]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
        .collect()
}

pub fn big_to_i64(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(|x| x.to_i64()).collect()
}

/// Divides an integer vector by the gcd of its entries. The zero vector is left alone.
pub fn gcd_normalize(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Smallest positive integer multiple of `v`, divided by its gcd.
pub fn primitive(v: &[Q]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut out: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    gcd_normalize(&mut out);
    out
}

pub fn mat_q(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    m.iter().map(|r| to_q(r)).collect()
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

pub fn mat_vec_i64(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn mat_mul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| (0..n).map(|j| row.iter().zip(b).map(|(x, br)| x * br[j]).sum()).collect())
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    (0..ncols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn dot_q(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Reduced row echelon form in place, pivoting only in the first `ncols` columns; returns the pivots.
pub fn rref(m: &mut [Vec<Q>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row >= m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..m[row].len() {
                    let t = &f * &m[row][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank_q(rows: &[Vec<Q>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn rank_big(rows: &[&[BigInt]], ncols: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.to_vec()).collect();
    let mut rank = 0;
    for col in 0..ncols {
        if rank >= m.len() {
            break;
        }
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for r in rest.iter_mut() {
            if r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            let pv = pivot[col].clone();
            for j in col..ncols {
                r[j] = &r[j] * &pv - &f * &pivot[j];
            }
            gcd_normalize(r);
        }
        rank += 1;
    }
    rank
}

/// Basis of the right null space `{x : M x = 0}`.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    let piv = rref(&mut aug, n);
    if piv.len() < n || piv.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Q::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else { return Q::zero() };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        det *= a[col][col].clone();
        for i in col + 1..n {
            let f = &a[i][col] / &a[col][col];
            for j in col..n {
                let t = &f * &a[col][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

pub fn sign(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_a2_cartan() {
        let a = mat_q(&[vec![2, -1], vec![-1, 2]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv[0][0], qfrac(2, 3));
        assert_eq!(inv[0][1], qfrac(1, 3));
        assert_eq!(determinant(&a), q(3));
    }

    #[test]
    fn nullspace_and_rank_agree() {
        let m = mat_q(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank_q(&m, 3), 2);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&m, &ns[0]).iter().all(|x| x.is_zero()));
        let big: Vec<Vec<BigInt>> = vec![to_big(&[1, 2, 3]), to_big(&[2, 4, 6]), to_big(&[1, 0, 1])];
        let refs: Vec<&[BigInt]> = big.iter().map(|r| r.as_slice()).collect();
        assert_eq!(rank_big(&refs, 3), 2);
    }

    #[test]
    fn primitive_clears_denominators() {
        assert_eq!(primitive(&[qfrac(1, 2), qfrac(-3, 4)]), to_big(&[2, -3]));
    }
}
