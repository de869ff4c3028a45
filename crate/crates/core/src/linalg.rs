//! Dense linear algebra over [`Scalar`]: rank and kernel via Gaussian
//! elimination. Exact over Gaussian rationals; float mode pivots by
//! magnitude with a zero tolerance.

use crate::algebra::{Backend, Scalar};

const FLOAT_EPS: f64 = 1e-9;

fn is_negligible(s: &Scalar) -> bool {
    match s.backend() {
        Backend::Exact => s.is_zero(),
        Backend::Float => s.magnitude() < FLOAT_EPS,
    }
}

/// Reduce `rows` in place to row echelon form; returns pivot column per row.
fn echelon(rows: &mut [Vec<Scalar>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        // pick pivot: first nonzero (exact) or largest magnitude (float)
        let mut best: Option<usize> = None;
        for i in r..nrows {
            if !is_negligible(&rows[i][c]) {
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        if rows[i][c].backend() == Backend::Float
                            && rows[i][c].magnitude() > rows[b][c].magnitude()
                        {
                            best = Some(i);
                        }
                    }
                }
                if rows[i][c].backend() == Backend::Exact {
                    break;
                }
            }
        }
        let Some(pr) = best else { continue };
        rows.swap(r, pr);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for j in c..ncols {
            rows[r][j] = rows[r][j].mul(&inv);
        }
        for i in 0..nrows {
            if i != r && !is_negligible(&rows[i][c]) {
                let f = rows[i][c].clone();
                for j in c..ncols {
                    let t = rows[r][j].mul(&f);
                    rows[i][j] = rows[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    pivots
}

/// Rank of the matrix given as a list of rows.
pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    echelon(&mut rows).len()
}

/// Basis of the right kernel of the matrix (rows are equations over the
/// column variables). Deterministic: one vector per free column, with a 1
/// in the free position.
pub fn kernel_basis(mut rows: Vec<Vec<Scalar>>, ncols: usize, backend: Backend) -> Vec<Vec<Scalar>> {
    let pivots = echelon(&mut rows);
    let pivot_set: Vec<usize> = pivots.clone();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Scalar::zero(backend); ncols];
        v[free] = Scalar::one(backend);
        // back-substitute: pivot row r has leading 1 at column pivots[r]
        for (r, &pc) in pivots.iter().enumerate() {
            // value at pivot column = -(coefficient of free column in row r)
            v[pc] = rows[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_i64(Backend::Exact, n)
    }

    #[test]
    fn rank_and_kernel() {
        // [[1,2,3],[2,4,6],[0,1,1]] has rank 2, kernel dim 1
        let rows = vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)],
            vec![s(0), s(1), s(1)],
        ];
        assert_eq!(rank(rows.clone()), 2);
        let ker = kernel_basis(rows.clone(), 3, Backend::Exact);
        assert_eq!(ker.len(), 1);
        // check A v = 0
        for row in &rows {
            let mut acc = Scalar::zero(Backend::Exact);
            for (a, b) in row.iter().zip(&ker[0]) {
                acc = acc.add(&a.mul(b));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn full_rank_empty_kernel() {
        let rows = vec![vec![s(1), s(0)], vec![s(3), s(1)]];
        assert_eq!(rank(rows.clone()), 2);
        assert!(kernel_basis(rows, 2, Backend::Exact).is_empty());
    }
}
