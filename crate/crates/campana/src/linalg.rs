//! Exact linear algebra over Z and Q for small matrices: determinants, rank,
//! kernels (saturated over Z), rational inverses, and unimodular
//! diagonalization for solving linear congruences.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub(crate) type IMat = Vec<Vec<BigInt>>;
pub(crate) type QMat = Vec<Vec<BigRational>>;

pub(crate) fn identity_int(n: usize) -> IMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Fraction-free Bareiss determinant.
pub(crate) fn det(m: &IMat) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = &num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Rank of an integer matrix (exact, via rational elimination).
pub(crate) fn rank(m: &IMat) -> usize {
    if m.is_empty() {
        return 0;
    }
    let mut a: QMat = m
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let rows = a.len();
    let cols = a[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let pivot = (rank..rows).find(|&r| !a[r][c].is_zero());
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        let inv = a[rank][c].recip();
        for j in c..cols {
            let v = &a[rank][j] * &inv;
            a[rank][j] = v;
        }
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in c..cols {
                    let v = &a[r][j] - &f * &a[rank][j];
                    a[r][j] = v;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Gauss-Jordan inverse of a rational square matrix.
pub(crate) fn inverse(m: &QMat) -> Option<QMat> {
    let n = m.len();
    let mut a = m.clone();
    let mut inv: QMat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        inv.swap(c, p);
        let f = a[c][c].recip();
        for j in 0..n {
            let va = &a[c][j] * &f;
            a[c][j] = va;
            let vi = &inv[c][j] * &f;
            inv[c][j] = vi;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..n {
                    let va = &a[r][j] - &f * &a[c][j];
                    a[r][j] = va;
                    let vi = &inv[r][j] - &f * &inv[c][j];
                    inv[r][j] = vi;
                }
            }
        }
    }
    Some(inv)
}

pub(crate) fn mat_mul_rational(a: &QMat, b: &QMat) -> QMat {
    let n = a.len();
    let k = b.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut s = BigRational::zero();
                    for t in 0..k {
                        s += &a[i][t] * &b[t][j];
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub(crate) fn int_to_rational(m: &IMat) -> QMat {
    m.iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

/// Unimodular diagonalization P·A·Q = D. Returns (P, D, Q); D is diagonal
/// (no divisibility chain is enforced).
pub(crate) fn diagonalize(a: &IMat) -> (IMat, IMat, IMat) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut d = a.clone();
    let mut p = identity_int(rows);
    let mut q = identity_int(cols);
    let steps = rows.min(cols);
    for k in 0..steps {
        loop {
            // Minimal nonzero entry of the trailing block into the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if !d[i][j].is_zero()
                        && best
                            .map(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
                            .unwrap_or(true)
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            if bi != k {
                d.swap(k, bi);
                p.swap(k, bi);
            }
            if bj != k {
                for row in d.iter_mut() {
                    row.swap(k, bj);
                }
                for row in q.iter_mut() {
                    row.swap(k, bj);
                }
            }
            let mut clean = true;
            for i in k + 1..rows {
                if !d[i][k].is_zero() {
                    let f = &d[i][k] / &d[k][k];
                    if !f.is_zero() {
                        for j in 0..cols {
                            let v = &d[i][j] - &f * &d[k][j];
                            d[i][j] = v;
                        }
                        for j in 0..rows {
                            let v = &p[i][j] - &f * &p[k][j];
                            p[i][j] = v;
                        }
                    }
                    if !d[i][k].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in k + 1..cols {
                if !d[k][j].is_zero() {
                    let f = &d[k][j] / &d[k][k];
                    if !f.is_zero() {
                        for i in 0..rows {
                            let v = &d[i][j] - &f * &d[i][k];
                            d[i][j] = v;
                        }
                        for i in 0..cols {
                            let v = &q[i][j] - &f * &q[i][k];
                            q[i][j] = v;
                        }
                    }
                    if !d[k][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean
                && (k + 1..rows).all(|i| d[i][k].is_zero())
                && (k + 1..cols).all(|j| d[k][j].is_zero())
            {
                break;
            }
        }
    }
    (p, d, q)
}

/// Basis of the saturated kernel lattice ker(A) ∩ Z^n (columns are basis
/// vectors, returned as row vectors).
pub(crate) fn kernel_saturated(a: &IMat) -> Vec<Vec<BigInt>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    if rows == 0 {
        return identity_int(cols);
    }
    let (_, d, q) = diagonalize(a);
    let mut basis = Vec::new();
    for j in 0..cols {
        let diag_zero = j >= rows || d[j][j].is_zero();
        if diag_zero {
            basis.push((0..cols).map(|i| q[i][j].clone()).collect());
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IMat {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn det_and_rank() {
        let m = mat(&[&[1, 2], &[3, 4]]);
        assert_eq!(det(&m), BigInt::from(-2));
        assert_eq!(rank(&m), 2);
        let s = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(det(&s), BigInt::zero());
        assert_eq!(rank(&s), 1);
    }

    #[test]
    fn diagonalize_roundtrip() {
        let a = mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let (p, d, q) = diagonalize(&a);
        // P A Q = D
        let pa = mat_mul_rational(&int_to_rational(&p), &int_to_rational(&a));
        let paq = mat_mul_rational(&pa, &int_to_rational(&q));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(paq[i][j], BigRational::from_integer(d[i][j].clone()));
                if i != j {
                    assert!(d[i][j].is_zero());
                }
            }
        }
        // unimodular transforms
        assert_eq!(det(&p).abs(), BigInt::one());
        assert_eq!(det(&q).abs(), BigInt::one());
    }

    #[test]
    fn kernel_of_coordinate_forms() {
        // kernel of {x0, x1} in 3 variables is spanned by e2
        let a = mat(&[&[1, 0, 0], &[0, 1, 0]]);
        let k = kernel_saturated(&a);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0], BigInt::zero());
        assert_eq!(k[0][1], BigInt::zero());
        assert_eq!(k[0][2].abs(), BigInt::one());
    }

    #[test]
    fn kernel_is_saturated() {
        // row (2, 4): saturated kernel contains (2, -1), not just (4, -2)
        let a = mat(&[&[2, 4]]);
        let k = kernel_saturated(&a);
        assert_eq!(k.len(), 1);
        let g = num::Integer::gcd(&k[0][0], &k[0][1]);
        assert_eq!(g.abs(), BigInt::one());
    }
}
