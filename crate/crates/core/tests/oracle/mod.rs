//! Dense, deliberately naive reference computations used to cross-check the
//! sparse library code.

#![allow(dead_code)]

use uqrs_core::linalg::Matrix;
use uqrs_core::scalars::Scalar;

pub type Dense<F> = Vec<Vec<F>>;

pub fn zeros<F: Scalar>(rows: usize, cols: usize) -> Dense<F> {
    vec![vec![F::zero(); cols]; rows]
}

pub fn to_dense<F: Scalar>(m: &Matrix<F>) -> Dense<F> {
    let mut out = zeros(m.nrows(), m.ncols());
    for (i, j, c) in m.entries() {
        out[i][j] = c.clone();
    }
    out
}

pub fn mul<F: Scalar>(a: &Dense<F>, b: &Dense<F>) -> Dense<F> {
    let (n, m, p) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    let mut out: Dense<F> = zeros(n, p);
    for i in 0..n {
        for k in 0..m {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..p {
                out[i][j] = out[i][j].clone() + a[i][k].clone() * &b[k][j];
            }
        }
    }
    out
}

/// Rank by textbook Gaussian elimination on a copy.
pub fn rank<F: Scalar>(a: &Dense<F>) -> usize {
    let mut m = a.clone();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].inv().unwrap();
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone() * &inv;
                for j in c..cols {
                    let t = f.clone() * &m[rank][j];
                    m[r][j] = m[r][j].clone() - t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Basis vector index of `v_{t_1} ⊗ … ⊗ v_{t_k}` (1-based entries).
pub fn index(n: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &i| acc * n + i - 1)
}

/// The constant R-matrix from its action on `v_i ⊗ v_j`:
/// `v_i⊗v_i ↦ v_i⊗v_i`, `v_i⊗v_j ↦ r v_j⊗v_i` (i < j),
/// `v_j⊗v_i ↦ s⁻¹ v_i⊗v_j + (1 − r/s) v_j⊗v_i` (i < j).
pub fn r_matrix<F: Scalar>(n: usize, r: &F, s: &F) -> Dense<F> {
    let s_inv = s.inv().unwrap();
    let mut m = zeros(n * n, n * n);
    for i in 1..=n {
        for j in 1..=n {
            let col = index(n, &[i, j]);
            if i == j {
                m[col][col] = F::one();
            } else if i < j {
                m[index(n, &[j, i])][col] = r.clone();
            } else {
                m[index(n, &[j, i])][col] = s_inv.clone();
                m[col][col] = F::one() - r.clone() * &s_inv;
            }
        }
    }
    m
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut c = 1usize;
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (k, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

pub fn inversions(t: &[usize]) -> usize {
    (0..t.len()).flat_map(|a| ((a + 1)..t.len()).map(move |b| (a, b))).filter(|&(a, b)| t[a] > t[b]).count()
}

/// Strictly increasing `k`-subsets of `1..=n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (1..=n).filter(|i| m & (1 << (i - 1)) != 0).collect::<Vec<_>>())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Dimension of `V^{⊗k} / Σ_i V^{⊗i} ⊗ S² ⊗ V^{⊗(k−i−2)}` by dense rank of
/// every insertion vector.
pub fn wedge_dim<F: Scalar>(n: usize, k: usize, s: &F) -> usize {
    let d = n.pow(k as u32);
    let mut rows: Dense<F> = Vec::new();
    for pos in 0..k.saturating_sub(1) {
        for prefix in 0..n.pow(pos as u32) {
            for suffix in 0..n.pow((k - pos - 2) as u32) {
                let place = |i: usize, j: usize| {
                    (prefix * n * n + (i - 1) * n + (j - 1)) * n.pow((k - pos - 2) as u32) + suffix
                };
                for i in 1..=n {
                    for j in i..=n {
                        let mut row = vec![F::zero(); d];
                        row[place(i, j)] = F::one();
                        if i != j {
                            row[place(j, i)] = s.clone();
                        }
                        rows.push(row);
                    }
                }
            }
        }
    }
    d - rank(&rows)
}
