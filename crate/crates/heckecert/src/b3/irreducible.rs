//! Brute-force irreducibility over `F_p`.
//!
//! By Burnside's theorem a pair of `k x k` matrices acts absolutely
//! irreducibly iff the algebra it generates is all of `M_k`, so we grow a
//! basis of that algebra from the identity and compare its dimension to
//! `k^2`. This is exact for every `k`.

use super::RepPair;
use crate::hecke::matrix::{self, Echelon, Matrix};
use crate::hecke::ModP;

/// Dimension of the unital algebra generated by `A` and `B`.
pub fn generated_algebra_dim(r: &ModP, pair: &RepPair<u64>) -> usize {
    let n = pair.a.n;
    let mut basis = Echelon::new(r);
    let id = matrix::identity(r, n);
    basis.insert(id.data.clone());
    let mut queue = vec![id];
    while let Some(m) = queue.pop() {
        for g in [&pair.a, &pair.b] {
            let next = matrix::mul(r, g, &m);
            if basis.insert(next.data.clone()) {
                queue.push(next);
            }
        }
    }
    basis.len()
}

/// True iff no proper nonzero subspace over the algebraic closure is
/// stable under both matrices.
pub fn brute_irreducible(r: &ModP, pair: &RepPair<u64>) -> bool {
    generated_algebra_dim(r, pair) == pair.a.n * pair.a.n
}

/// Kernel basis of a `rows.len() x ncols` matrix.
fn nullspace(r: &ModP, mut rows: Vec<Vec<u64>>, ncols: usize) -> Vec<Vec<u64>> {
    let f = r.field();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, p);
        let inv = f.inv(rows[rank][c]).expect("nonzero");
        rows[rank] = rows[rank].iter().map(|&x| f.mul(x, inv)).collect();
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let k = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(k, y));
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|fc| {
            let mut v = vec![0u64; ncols];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(rows[i][fc]);
            }
            v
        })
        .collect()
}

fn dense(m: &Matrix<u64>) -> Vec<Vec<u64>> {
    (0..m.n).map(|i| (0..m.n).map(|j| *m.get(i, j)).collect()).collect()
}

/// A vector that is an eigenvector of both matrices, if one exists over
/// `F_p`. Eigenvalues are the roots of the characteristic polynomials.
pub fn common_eigenvector(r: &ModP, a: &Matrix<u64>, b: &Matrix<u64>) -> Option<Vec<u64>> {
    let f = r.field();
    let n = a.n;
    let roots = |m: &Matrix<u64>| f.roots(&matrix::charpoly_mod_p(r, m));
    for la in roots(a) {
        let space = nullspace(r, dense(&matrix::sub_scalar(r, a, &la)), n);
        for mu in roots(b) {
            // v = sum c_j s_j with (B - mu) v = 0.
            let bm = matrix::sub_scalar(r, b, &mu);
            let sys: Vec<Vec<u64>> = (0..n)
                .map(|i| {
                    space
                        .iter()
                        .map(|s| s.iter().enumerate().fold(0, |acc, (t, &st)| f.add(acc, f.mul(*bm.get(i, t), st))))
                        .collect()
                })
                .collect();
            if let Some(c) = nullspace(r, sys, space.len()).into_iter().next() {
                let mut v = vec![0u64; n];
                for (ci, s) in c.iter().zip(&space) {
                    for (vi, si) in v.iter_mut().zip(s) {
                        *vi = f.add(*vi, f.mul(*ci, *si));
                    }
                }
                return Some(v);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PrimeField;

    fn r() -> ModP {
        ModP::over(PrimeField::new(101).unwrap())
    }

    #[test]
    fn shared_eigenvector_is_reducible() {
        // Both upper triangular: e_1 is a common eigenvector.
        let pair = RepPair { a: Matrix { n: 2, data: vec![3, 1, 0, 3] }, b: Matrix { n: 2, data: vec![3, 5, 0, 7] } };
        assert!(!brute_irreducible(&r(), &pair));
        assert!(common_eigenvector(&r(), &pair.a, &pair.b).is_some());
    }

    #[test]
    fn opposite_triangular_generic_pair_is_irreducible() {
        let pair = RepPair { a: Matrix { n: 2, data: vec![2, 1, 0, 3] }, b: Matrix { n: 2, data: vec![3, 0, 5, 2] } };
        assert_eq!(generated_algebra_dim(&r(), &pair), 4);
        assert!(common_eigenvector(&r(), &pair.a, &pair.b).is_none());
    }

    #[test]
    fn nullspace_of_rank_one() {
        let ns = nullspace(&r(), vec![vec![1, 2], vec![2, 4]], 2);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        let f = r().field();
        assert_eq!(f.add(v[0], f.mul(2, v[1])), 0);
    }
}
