//! Dense real symmetric eigenvalues: Householder reduction to tridiagonal
//! form followed by implicit-shift QL iteration (after EISPACK `tred2` and
//! `tql1`, eigenvalues only).

use crate::error::{Error, Result};

/// QL sweeps allowed per eigenvalue before giving up.
pub const MAX_QL_ITERATIONS: usize = 60;

/// Relative tolerance for the symmetry check on input matrices.
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;

/// A square real matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SquareMatrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::domain("matrix rows must all have length n"));
        }
        Ok(SquareMatrix {
            n,
            data: rows.concat(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
    }

    /// Largest `|a_ij − a_ji|`.
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.n {
            for j in 0..i {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        worst
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for SquareMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for SquareMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

/// All eigenvalues of a symmetric matrix, ascending.
pub fn eigenvalues_symmetric(matrix: &SquareMatrix) -> Result<Vec<f64>> {
    let n = matrix.dim();
    let scale = matrix.max_abs().max(1.0);
    let asym = matrix.asymmetry();
    if asym > SYMMETRY_TOLERANCE * scale {
        return Err(Error::domain(format!(
            "matrix is not symmetric (max |a_ij - a_ji| = {asym:e})"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let (mut diag, mut off) = tridiagonalize(matrix.clone());
    tridiagonal_ql(&mut diag, &mut off)?;
    diag.sort_by(f64::total_cmp);
    Ok(diag)
}

/// Reduces `a` to tridiagonal form in place using its lower triangle and
/// returns `(diagonal, subdiagonal)`, with `subdiagonal[i]` coupling rows
/// `i − 1` and `i` (`subdiagonal[0] = 0`).
///
/// The rank-2 update of one step and the matrix-vector product of the next
/// share a single pass over the matrix, which is what bounds the run time
/// at a few thousand rows.
fn tridiagonalize(mut a: SquareMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = a.n;
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n];
    if n == 0 {
        return (diag, off);
    }
    // reflector of the current step and A·u / h for it
    let mut u = vec![0.0; n];
    let mut p = vec![0.0; n];
    // same for the next step, accumulated during the fused pass
    let mut u_next = vec![0.0; n];
    let mut p_next = vec![0.0; n];

    let mut step = reflector(&a, n - 1, &mut u, &mut off);
    if let Some(h) = step {
        symmetric_matvec(&a, n - 2, &u, &mut p);
        finish_step(&mut p, &u, n - 2, h);
    }

    for i in (1..n).rev() {
        let l = i - 1;
        let Some(_) = step else {
            // nothing to apply; set up the next row from the untouched matrix
            if l == 0 {
                break;
            }
            step = reflector(&a, l, &mut u, &mut off);
            if let Some(h) = step {
                symmetric_matvec(&a, l - 1, &u, &mut p);
                finish_step(&mut p, &u, l - 1, h);
            }
            continue;
        };

        // row l first: the next reflector lives there
        rank2_row(&mut a, l, &u, &p);
        if l == 0 {
            break;
        }
        let next = reflector(&a, l, &mut u_next, &mut off);
        let ln = l - 1;
        if next.is_some() {
            p_next[..=ln].iter_mut().for_each(|v| *v = 0.0);
        }
        for j in 0..=ln {
            rank2_row(&mut a, j, &u, &p);
            if next.is_some() {
                matvec_row(&a, j, &u_next, &mut p_next);
            }
        }
        if let Some(h) = next {
            finish_step(&mut p_next, &u_next, ln, h);
        }
        std::mem::swap(&mut u, &mut u_next);
        std::mem::swap(&mut p, &mut p_next);
        step = next;
    }
    for (i, d) in diag.iter_mut().enumerate() {
        *d = a[(i, i)];
    }
    (diag, off)
}

/// Builds the Householder vector that annihilates row `i` left of the
/// subdiagonal. Writes `off[i]` and returns `h = |u|²/2`, or `None` when the
/// row is already reduced.
fn reflector(a: &SquareMatrix, i: usize, u: &mut [f64], off: &mut [f64]) -> Option<f64> {
    if i == 0 {
        return None;
    }
    let l = i - 1;
    if l == 0 {
        off[i] = a[(i, 0)];
        return None;
    }
    let row = &a.row(i)[..=l];
    let scale: f64 = row.iter().map(|v| v.abs()).sum();
    if scale == 0.0 {
        off[i] = row[l];
        return None;
    }
    let mut h = 0.0;
    for (uk, &ak) in u[..=l].iter_mut().zip(row) {
        *uk = ak / scale;
        h += *uk * *uk;
    }
    let f = u[l];
    let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
    off[i] = scale * g;
    h -= f * g;
    u[l] = f - g;
    Some(h)
}

/// `p[..=l] = A[..=l, ..=l] · u` from the lower triangle.
fn symmetric_matvec(a: &SquareMatrix, l: usize, u: &[f64], p: &mut [f64]) {
    p[..=l].iter_mut().for_each(|v| *v = 0.0);
    for j in 0..=l {
        matvec_row(a, j, u, p);
    }
}

/// Adds the contribution of lower-triangle row `j` to `p = A·u`.
#[inline]
fn matvec_row(a: &SquareMatrix, j: usize, u: &[f64], p: &mut [f64]) {
    let n = a.n;
    let row = &a.data[j * n..j * n + j];
    let uj = u[j];
    let mut lanes = [0.0; 8];
    let chunks = row.len() / 8 * 8;
    for ((r, uc), pc) in row[..chunks]
        .chunks_exact(8)
        .zip(u[..chunks].chunks_exact(8))
        .zip(p[..chunks].chunks_exact_mut(8))
    {
        for k in 0..8 {
            lanes[k] += r[k] * uc[k];
            pc[k] += r[k] * uj;
        }
    }
    let mut acc: f64 = lanes.iter().sum();
    for k in chunks..j {
        acc += row[k] * u[k];
        p[k] += row[k] * uj;
    }
    p[j] += acc + a.data[j * n + j] * uj;
}

/// Turns `A·u` into the `p` of the symmetric rank-2 update.
fn finish_step(p: &mut [f64], u: &[f64], l: usize, h: f64) {
    let mut f_acc = 0.0;
    for j in 0..=l {
        p[j] /= h;
        f_acc += p[j] * u[j];
    }
    let hh = f_acc / (h + h);
    for j in 0..=l {
        p[j] -= hh * u[j];
    }
}

/// `A[j, ..=j] -= u_j p + p_j u`.
#[inline]
fn rank2_row(a: &mut SquareMatrix, j: usize, u: &[f64], p: &[f64]) {
    let n = a.n;
    let (uj, pj) = (u[j], p[j]);
    let row = &mut a.data[j * n..j * n + j + 1];
    for ((ajk, &pk), &uk) in row.iter_mut().zip(&p[..=j]).zip(&u[..=j]) {
        *ajk -= uj * pk + pj * uk;
    }
}

/// Implicit QL with Wilkinson-style shifts on a symmetric tridiagonal
/// matrix; on return `diag` holds the (unsorted) eigenvalues.
fn tridiagonal_ql(diag: &mut [f64], off: &mut [f64]) -> Result<()> {
    let n = diag.len();
    if n < 2 {
        return Ok(());
    }
    // shift so that off[i] couples i and i + 1
    off.copy_within(1.., 0);
    off[n - 1] = 0.0;

    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            if iterations == MAX_QL_ITERATIONS {
                return Err(Error::NoConvergence {
                    index: l,
                    iterations,
                });
            }
            iterations += 1;

            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + off[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Ok(())
}
