//! Nonsymmetric complex eigenvalues: Hessenberg reduction by Householder
//! reflectors, then explicitly shifted QR with Wilkinson shifts and
//! deflation.

use num_complex::Complex64;

use super::{CMatrix, MatNumError};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// All eigenvalues with multiplicity, sorted by decreasing modulus. The
/// order among eigenvalues of equal modulus carries no promise.
///
/// Deflation threshold: 1e−14 relative to the local diagonal scale, with
/// the global entry scale as a floor. Iteration cap 30n² steps; exceeding
/// it is an explicit error rather than a wrong answer.
pub fn eigenvalues_qr(m: &CMatrix) -> Result<Vec<Complex64>, MatNumError> {
    let n = m.dim();
    let scale = m.max_abs();
    let mut h = hessenberg(m);
    let mut eigs: Vec<Complex64> = Vec::with_capacity(n);

    let mut p = n;
    let mut iters = 0usize;
    let cap = 30 * n * n;
    while p > 0 {
        if p == 1 {
            eigs.push(h[(0, 0)]);
            break;
        }
        if negligible(&h, p - 1, scale) {
            eigs.push(h[(p - 1, p - 1)]);
            p -= 1;
            continue;
        }
        // Start of the trailing unreduced block.
        let mut l = p - 1;
        while l > 0 && !negligible(&h, l, scale) {
            l -= 1;
        }
        if p - l == 2 {
            // Close a 2×2 block exactly by its characteristic polynomial.
            let (x, y) =
                quadratic_eigenvalues(h[(l, l)], h[(l, l + 1)], h[(l + 1, l)], h[(l + 1, l + 1)]);
            eigs.push(y);
            eigs.push(x);
            p = l;
            continue;
        }
        if iters >= cap {
            return Err(MatNumError::QrNonConvergence);
        }
        iters += 1;
        qr_step(&mut h, l, p);
    }

    eigs.sort_by(|x, y| y.norm().total_cmp(&x.norm()));
    Ok(eigs)
}

/// Subdiagonal entry h[i][i−1] negligible against its diagonal neighbors,
/// falling back to the global scale when those vanish.
fn negligible(h: &CMatrix, i: usize, global: f64) -> bool {
    let local = h[(i - 1, i - 1)].norm() + h[(i, i)].norm();
    let reference = if local > 0.0 { local } else { global };
    h[(i, i - 1)].norm() <= 1e-14 * reference
}

/// Eigenvalues of [[a, b], [c, d]], the one closer to d first.
fn quadratic_eigenvalues(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
) -> (Complex64, Complex64) {
    let mid = (a + d) / Complex64::new(2.0, 0.0);
    let disc = (mid * mid - (a * d - b * c)).sqrt();
    let (x, y) = (mid + disc, mid - disc);
    if (x - d).norm() <= (y - d).norm() {
        (x, y)
    } else {
        (y, x)
    }
}

/// One explicit QR step with Wilkinson shift on the trailing block
/// h[l..p, l..p]: factor H − µI = QR by Givens rotations on the
/// subdiagonal, form RQ + µI. All updates stay inside the block.
fn qr_step(h: &mut CMatrix, l: usize, p: usize) {
    let (mu, _) = quadratic_eigenvalues(
        h[(p - 2, p - 2)],
        h[(p - 2, p - 1)],
        h[(p - 1, p - 2)],
        h[(p - 1, p - 1)],
    );
    for i in l..p {
        h[(i, i)] -= mu;
    }

    let mut rotations = Vec::with_capacity(p - l - 1);
    for i in l..p - 1 {
        let (c, s) = givens(h[(i, i)], h[(i + 1, i)]);
        // Left-apply to rows i, i+1 over block columns i..p.
        for j in i..p {
            let (top, bot) = (h[(i, j)], h[(i + 1, j)]);
            h[(i, j)] = c * top + s * bot;
            h[(i + 1, j)] = -s.conj() * top + c * bot;
        }
        h[(i + 1, i)] = ZERO;
        rotations.push((c, s));
    }
    for (idx, i) in (l..p - 1).enumerate() {
        let (c, s) = rotations[idx];
        // Right-apply the adjoint rotation to columns i, i+1 over rows
        // l..=i+1 (lower rows hold zeros in these columns).
        for r in l..=i + 1 {
            let (left, right) = (h[(r, i)], h[(r, i + 1)]);
            h[(r, i)] = c * left + s.conj() * right;
            h[(r, i + 1)] = -s * left + c * right;
        }
    }
    for i in l..p {
        h[(i, i)] += mu;
    }
}

/// Rotation [[c, s], [−s̄, c]] with real c mapping (f, g) to (r, 0).
fn givens(f: Complex64, g: Complex64) -> (Complex64, Complex64) {
    let (fn_, gn) = (f.norm(), g.norm());
    if gn == 0.0 {
        return (Complex64::new(1.0, 0.0), ZERO);
    }
    if fn_ == 0.0 {
        return (ZERO, g.conj() / Complex64::new(gn, 0.0));
    }
    let denom = fn_.hypot(gn);
    let c = Complex64::new(fn_ / denom, 0.0);
    let phase = f / Complex64::new(fn_, 0.0);
    let s = phase * g.conj() / Complex64::new(denom, 0.0);
    (c, s)
}

/// Unitary reduction to upper Hessenberg form by Householder reflectors;
/// entries below the subdiagonal are zeroed exactly.
fn hessenberg(m: &CMatrix) -> CMatrix {
    let n = m.dim();
    let mut h = m.clone();
    for k in 0..n.saturating_sub(2) {
        // Reflector annihilating column k below the subdiagonal.
        let x: Vec<Complex64> = (k + 1..n).map(|i| h[(i, k)]).collect();
        let xnorm = x.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        if xnorm == 0.0 {
            continue;
        }
        let phase = if x[0].norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x[0] / Complex64::new(x[0].norm(), 0.0)
        };
        let alpha = -phase * Complex64::new(xnorm, 0.0);
        let mut v = x;
        v[0] -= alpha;
        let vnorm = v.iter().map(|w| w.norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for w in &mut v {
            *w /= Complex64::new(vnorm, 0.0);
        }

        // H ← P H with P = I − 2vv* acting on rows k+1..n.
        for j in 0..n {
            let dot: Complex64 = v
                .iter()
                .enumerate()
                .map(|(i, w)| w.conj() * h[(k + 1 + i, j)])
                .sum();
            let dot2 = dot * Complex64::new(2.0, 0.0);
            for (i, w) in v.iter().enumerate() {
                let delta = *w * dot2;
                h[(k + 1 + i, j)] -= delta;
            }
        }
        // H ← H P on columns k+1..n.
        for r in 0..n {
            let dot: Complex64 = v
                .iter()
                .enumerate()
                .map(|(i, w)| h[(r, k + 1 + i)] * *w)
                .sum();
            let dot2 = dot * Complex64::new(2.0, 0.0);
            for (i, w) in v.iter().enumerate() {
                let delta = dot2 * w.conj();
                h[(r, k + 1 + i)] -= delta;
            }
        }
        for i in k + 2..n {
            h[(i, k)] = ZERO;
        }
    }
    h
}
