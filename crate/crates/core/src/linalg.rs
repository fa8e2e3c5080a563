//! Small dense linear algebra over `Vec<f64>` vectors.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{GeomError, Result};
use crate::math;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    math::sqrt(dot(a, a))
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    norm(&sub(a, b))
}

pub fn normalize(a: &[f64]) -> Result<Vec<f64>> {
    let n = norm(a);
    if n < 1e-14 {
        return Err(GeomError::ZeroVector);
    }
    Ok(scale(a, 1.0 / n))
}

pub fn cross3(a: &[f64], b: &[f64]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Two unit vectors spanning the hyperplane orthogonal to a unit `u` in R^3.
pub fn plane_basis3(u: &[f64]) -> ([f64; 3], [f64; 3]) {
    let pick = if math::abs(u[0]) <= math::abs(u[1]) && math::abs(u[0]) <= math::abs(u[2]) {
        [1.0, 0.0, 0.0]
    } else if math::abs(u[1]) <= math::abs(u[2]) {
        [0.0, 1.0, 0.0]
    } else {
        [0.0, 0.0, 1.0]
    };
    let e1 = cross3(u, &pick);
    let n1 = norm(&e1);
    let e1 = [e1[0] / n1, e1[1] / n1, e1[2] / n1];
    let e2 = cross3(u, &e1);
    (e1, e2)
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
/// `a` is row-major, consumed as scratch.
pub fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let mut piv = col;
        for row in col + 1..n {
            if math::abs(a[row][col]) > math::abs(a[piv][col]) {
                piv = row;
            }
        }
        if math::abs(a[piv][col]) < 1e-300 {
            return Err(GeomError::SingularMap);
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            if f == 0.0 {
                continue;
            }
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for col in (0..n).rev() {
        let mut s = b[col];
        for k in col + 1..n {
            s -= a[col][k] * x[k];
        }
        x[col] = s / a[col][col];
    }
    Ok(x)
}

/// An invertible n x n linear map with cached determinant and inverse.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMap {
    dim: usize,
    matrix: Vec<Vec<f64>>,
    inverse: Vec<Vec<f64>>,
    det: f64,
}

impl LinearMap {
    pub fn new(matrix: Vec<Vec<f64>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|row| row.len() != n) {
            return Err(GeomError::Invalid("matrix must be square".into()));
        }
        let (inverse, det) = invert(&matrix)?;
        if math::abs(det) <= 1e-10 {
            return Err(GeomError::SingularMap);
        }
        Ok(LinearMap { dim: n, matrix, inverse, det })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = vec![vec![0.0; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        LinearMap::new(m).expect("identity is invertible")
    }

    pub fn scaling(n: usize, s: f64) -> Result<Self> {
        let mut m = vec![vec![0.0; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = s;
        }
        LinearMap::new(m)
    }

    pub fn diagonal(entries: &[f64]) -> Result<Self> {
        let n = entries.len();
        let mut m = vec![vec![0.0; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = entries[i];
        }
        LinearMap::new(m)
    }

    /// Block rotation by `theta` in the {x1, x2}-plane, fixing the other axes.
    pub fn rotation_xy(n: usize, theta: f64) -> Self {
        let mut m = vec![vec![0.0; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        let (c, s) = (math::cos(theta), math::sin(theta));
        m[0][0] = c;
        m[0][1] = -s;
        m[1][0] = s;
        m[1][1] = c;
        LinearMap::new(m).expect("rotation is invertible")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn det(&self) -> f64 {
        self.det
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.matrix
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.matrix.iter().map(|row| dot(row, x)).collect()
    }

    pub fn apply_inverse(&self, x: &[f64]) -> Vec<f64> {
        self.inverse.iter().map(|row| dot(row, x)).collect()
    }

    /// Applies the inverse transpose, the natural action on normal vectors.
    pub fn apply_inv_transpose(&self, x: &[f64]) -> Vec<f64> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.inverse[j][i] * x[j]).sum())
            .collect()
    }

    pub fn inverse_map(&self) -> Self {
        LinearMap {
            dim: self.dim,
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
            det: 1.0 / self.det,
        }
    }

    /// The map `phi^{-t}` as its own `LinearMap`.
    pub fn inv_transpose_map(&self) -> Self {
        let n = self.dim;
        let mut m = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = self.inverse[j][i];
            }
        }
        LinearMap::new(m).expect("inverse transpose of invertible map is invertible")
    }

    /// Largest ratio of singular values, estimated from sampled unit vectors.
    pub fn condition_estimate(&self) -> f64 {
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        // Power-iteration-free estimate: operator norms from column/row sums
        // bracket the condition number well enough for test filtering.
        for j in 0..self.dim {
            let col: Vec<f64> = (0..self.dim).map(|i| self.matrix[i][j]).collect();
            let n = norm(&col);
            lo = lo.min(n);
            hi = hi.max(n);
        }
        hi / lo
    }
}

fn invert(m: &[Vec<f64>]) -> Result<(Vec<Vec<f64>>, f64)> {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let mut inv = vec![vec![0.0; n]; n];
    for (i, row) in inv.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let mut det = 1.0;
    for col in 0..n {
        let mut piv = col;
        for row in col + 1..n {
            if math::abs(a[row][col]) > math::abs(a[piv][col]) {
                piv = row;
            }
        }
        if math::abs(a[piv][col]) < 1e-300 {
            return Err(GeomError::SingularMap);
        }
        if piv != col {
            a.swap(col, piv);
            inv.swap(col, piv);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for k in 0..n {
            a[col][k] /= p;
            inv[col][k] /= p;
        }
        for row in 0..n {
            if row == col {
                continue;
            }
            let f = a[row][col];
            if f == 0.0 {
                continue;
            }
            for k in 0..n {
                a[row][k] -= f * a[col][k];
                inv[row][k] -= f * inv[col][k];
            }
        }
    }
    Ok((inv, det))
}
