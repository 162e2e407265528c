//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.
//! Small orders only (the toolkit caps at 64), where Jacobi is simple,
//! deterministic, and accurate to near machine precision.

use super::{LinalgError, SymmetricMatrix};

const MAX_SWEEPS: usize = 50;

/// Eigenvalues of `m`, unsorted. Sweeps the strict upper triangle in row
/// order, rotating away each pivot, until the off-diagonal Frobenius norm
/// drops below `tol * (diagonal norm + 1)`.
pub(crate) fn jacobi_eigenvalues(
    m: &SymmetricMatrix,
    tol: f64,
) -> Result<Vec<f64>, LinalgError> {
    let n = m.order();
    let mut a = m.entries().to_vec();
    let idx = |i: usize, j: usize| i * n + j;

    for _sweep in 0..=MAX_SWEEPS {
        let mut off = 0.0;
        let mut diag = 0.0;
        for i in 0..n {
            diag += a[idx(i, i)] * a[idx(i, i)];
            for j in (i + 1)..n {
                off += 2.0 * a[idx(i, j)] * a[idx(i, j)];
            }
        }
        if off.sqrt() < tol * (diag.sqrt() + 1.0) {
            return Ok((0..n).map(|i| a[idx(i, i)]).collect());
        }
        if _sweep == MAX_SWEEPS {
            return Err(LinalgError::NonConvergence {
                sweeps: MAX_SWEEPS,
                off_norm: off.sqrt(),
            });
        }

        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let apq = a[idx(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[idx(q, q)] - a[idx(p, p)]) / (2.0 * apq);
                // stable tangent of the rotation angle; large theta would
                // overflow theta^2, so fall back to the asymptotic form
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let s = if theta >= 0.0 { 1.0 } else { -1.0 };
                    s / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                a[idx(p, p)] -= h;
                a[idx(q, q)] += h;
                a[idx(p, q)] = 0.0;
                a[idx(q, p)] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[idx(r, p)];
                    let arq = a[idx(r, q)];
                    let new_rp = arp - s * (arq + arp * tau);
                    let new_rq = arq + s * (arp - arq * tau);
                    a[idx(r, p)] = new_rp;
                    a[idx(p, r)] = new_rp;
                    a[idx(r, q)] = new_rq;
                    a[idx(q, r)] = new_rq;
                }
            }
        }
    }
    unreachable!("loop exits by return")
}
