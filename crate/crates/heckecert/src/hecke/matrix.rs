//! Dense square matrices over a [`Coeff`] carrier.

use rayon::prelude::*;

use super::coeff::{Coeff, ModP};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    pub n: usize,
    /// Row-major.
    pub data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.n + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.n).map(|i| self.data[i * self.n + j].clone()).collect()
    }
}

pub fn zeros<R: Coeff>(r: &R, n: usize) -> Matrix<R::E> {
    Matrix { n, data: vec![r.zero(); n * n] }
}

pub fn identity<R: Coeff>(r: &R, n: usize) -> Matrix<R::E> {
    let mut m = zeros(r, n);
    for i in 0..n {
        m.set(i, i, r.one());
    }
    m
}

pub fn mul<R: Coeff>(r: &R, a: &Matrix<R::E>, b: &Matrix<R::E>) -> Matrix<R::E> {
    let n = a.n;
    let data: Vec<R::E> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut row = vec![r.zero(); n];
            for k in 0..n {
                let aik = a.get(i, k);
                if r.is_zero(aik) {
                    continue;
                }
                for (j, x) in row.iter_mut().enumerate() {
                    let bkj = b.get(k, j);
                    if !r.is_zero(bkj) {
                        *x = r.add(x, &r.mul(aik, bkj));
                    }
                }
            }
            row
        })
        .collect();
    Matrix { n, data }
}

/// `a - c * I`.
pub fn sub_scalar<R: Coeff>(r: &R, a: &Matrix<R::E>, c: &R::E) -> Matrix<R::E> {
    let mut m = a.clone();
    for i in 0..a.n {
        let v = r.sub(m.get(i, i), c);
        m.set(i, i, v);
    }
    m
}

pub fn is_zero<R: Coeff>(r: &R, a: &Matrix<R::E>) -> bool {
    a.data.iter().all(|x| r.is_zero(x))
}

pub fn equal<R: Coeff>(r: &R, a: &Matrix<R::E>, b: &Matrix<R::E>) -> bool {
    a.n == b.n && a.data.iter().zip(&b.data).all(|(x, y)| r.is_zero(&r.sub(x, y)))
}

/// Product of `mats` in the given order.
pub fn product<R: Coeff>(r: &R, n: usize, mats: &[&Matrix<R::E>]) -> Matrix<R::E> {
    match mats {
        [] => identity(r, n),
        [m] => (*m).clone(),
        [first, rest @ ..] => rest.iter().fold((*first).clone(), |acc, m| mul(r, &acc, m)),
    }
}

/// Inverse by Gauss-Jordan with unit pivots only. `None` when some column
/// offers no unit, which over a field means singular and over a Laurent ring
/// means the inverse was not found this way.
pub fn inverse<R: Coeff>(r: &R, a: &Matrix<R::E>) -> Option<Matrix<R::E>> {
    let n = a.n;
    let mut m: Vec<Vec<R::E>> = (0..n).map(|i| (0..n).map(|j| a.get(i, j).clone()).collect()).collect();
    let mut inv: Vec<Vec<R::E>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { r.one() } else { r.zero() }).collect()).collect();
    for c in 0..n {
        let (p, u) = (c..n).find_map(|i| r.unit_inverse(&m[i][c]).map(|u| (i, u)))?;
        m.swap(c, p);
        inv.swap(c, p);
        m[c] = m[c].iter().map(|x| r.mul(x, &u)).collect();
        inv[c] = inv[c].iter().map(|x| r.mul(x, &u)).collect();
        for i in 0..n {
            if i == c || r.is_zero(&m[i][c]) {
                continue;
            }
            let k = m[i][c].clone();
            for j in 0..n {
                if !r.is_zero(&m[c][j]) {
                    m[i][j] = r.sub(&m[i][j], &r.mul(&k, &m[c][j]));
                }
                if !r.is_zero(&inv[c][j]) {
                    inv[i][j] = r.sub(&inv[i][j], &r.mul(&k, &inv[c][j]));
                }
            }
        }
    }
    let mut out = zeros(r, n);
    for (i, row) in inv.into_iter().enumerate() {
        for (j, x) in row.into_iter().enumerate() {
            out.set(i, j, x);
        }
    }
    Some(out)
}

/// Rank over the field, by Gaussian elimination on a copy of the rows.
/// Incremental reduced row echelon basis over `F_p`.
pub struct Echelon<'a> {
    r: &'a ModP,
    rows: Vec<(usize, Vec<u64>)>,
}

impl<'a> Echelon<'a> {
    pub fn new(r: &'a ModP) -> Self {
        Echelon { r, rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v` against the basis; keeps it if independent.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let f = self.r.field();
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        let Some(pivot) = v.iter().position(|&x| x != 0) else { return false };
        let inv = f.inv(v[pivot]).expect("nonzero");
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pivot];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&v) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }
}

pub fn rank_mod_p(r: &ModP, rows: &[Vec<u64>]) -> usize {
    let f = r.field();
    let mut rows: Vec<Vec<u64>> = rows.to_vec();
    let ncols = rows.first().map_or(0, |x| x.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, p);
        let inv = f.inv(rows[rank][c]).expect("nonzero");
        let pivot: Vec<u64> = rows[rank].iter().map(|&x| f.mul(x, inv)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let k = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(k, y));
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Characteristic polynomial `det(X I - a)` over `F_p`, coefficients from
/// the constant term up, via reduction to Hessenberg form.
pub fn charpoly_mod_p(r: &ModP, a: &Matrix<u64>) -> Vec<u64> {
    let f = r.field();
    let n = a.n;
    let mut h: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| *a.get(i, j)).collect()).collect();
    for m in 1..n.saturating_sub(1) {
        let Some(piv) = (m..n).find(|&i| h[i][m - 1] != 0) else { continue };
        if piv != m {
            h.swap(piv, m);
            for row in h.iter_mut() {
                row.swap(piv, m);
            }
        }
        let inv = f.inv(h[m][m - 1]).expect("nonzero");
        for i in m + 1..n {
            let t = f.mul(h[i][m - 1], inv);
            if t == 0 {
                continue;
            }
            let pivot_row = h[m].clone();
            for (x, &y) in h[i].iter_mut().zip(&pivot_row) {
                *x = f.sub(*x, f.mul(t, y));
            }
            for row in h.iter_mut() {
                let v = f.mul(t, row[i]);
                row[m] = f.add(row[m], v);
            }
        }
    }
    // p_k = det(X I - H[0..k, 0..k]) by the standard Hessenberg recurrence.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        // (X - h_kk) p_k
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = f.add(next[d + 1], c);
            next[d] = f.sub(next[d], f.mul(h[k][k], c));
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = f.mul(prod, h[i + 1][i]);
            let coef = f.mul(prod, h[i][k]);
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = f.sub(next[d], f.mul(coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PrimeField, SpecPoint};

    fn modp() -> ModP {
        ModP::new(SpecPoint::fixed(PrimeField::new(101).unwrap(), []).unwrap())
    }

    fn m(rows: &[&[u64]]) -> Matrix<u64> {
        Matrix { n: rows.len(), data: rows.iter().flat_map(|r| r.iter().copied()).collect() }
    }

    #[test]
    fn charpoly_of_companion_matrix() {
        // Companion matrix of X^3 - 2X^2 + 5X - 7.
        let r = modp();
        let a = m(&[&[0, 0, 7], &[1, 0, 101 - 5], &[0, 1, 2]]);
        assert_eq!(charpoly_mod_p(&r, &a), vec![101 - 7, 5, 101 - 2, 1]);
    }

    #[test]
    fn charpoly_of_permutation() {
        // A 3-cycle plus a fixed point: (X^3 - 1)(X - 1).
        let r = modp();
        let a = m(&[&[0, 0, 1, 0], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
        assert_eq!(charpoly_mod_p(&r, &a), vec![1, 100, 0, 100, 1]);
    }

    #[test]
    fn rank_and_products() {
        let r = modp();
        assert_eq!(rank_mod_p(&r, &[vec![1, 2], vec![2, 4]]), 1);
        let a = m(&[&[1, 2], &[3, 4]]);
        let i = identity(&r, 2);
        assert!(equal(&r, &mul(&r, &a, &i), &a));
        assert_eq!(mul(&r, &a, &a).data, vec![7, 10, 15, 22]);
        assert!(is_zero(&r, &sub_scalar(&r, &i, &1)));
    }
}
