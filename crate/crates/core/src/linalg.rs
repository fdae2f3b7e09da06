//! Fixed-size 3x3 complex matrix helpers: products, adjoints, permanents and
//! a Jacobi eigensolver for Hermitian matrices.
//!
//! Everything here is specialized to dimension three; no dynamic allocation
//! is needed and all routines are deterministic.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

pub type C64 = Complex64;
pub type Mat3 = [[C64; 3]; 3];

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

pub fn identity() -> Mat3 {
    let mut m = [[ZERO; 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = ONE;
    }
    m
}

/// Matrix product `a * b`.
pub fn matmul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[ZERO; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = ZERO;
            for (k, bk) in b.iter().enumerate() {
                acc += a[i][k] * bk[j];
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Conjugate transpose.
pub fn adjoint(a: &Mat3) -> Mat3 {
    let mut out = [[ZERO; 3]; 3];
    for i in 0..3 {
        for (j, row) in a.iter().enumerate() {
            out[i][j] = row[i].conj();
        }
    }
    out
}

pub fn scale(a: &Mat3, c: C64) -> Mat3 {
    let mut out = *a;
    for row in out.iter_mut() {
        for e in row.iter_mut() {
            *e *= c;
        }
    }
    out
}

/// Largest absolute entry of `a - b`.
pub fn max_abs_diff(a: &Mat3, b: &Mat3) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            worst = worst.max((a[i][j] - b[i][j]).norm());
        }
    }
    worst
}

/// Permanent of a 3x3 matrix by its explicit 6-term expansion.
pub fn permanent3(m: &Mat3) -> C64 {
    m[0][0] * (m[1][1] * m[2][2] + m[1][2] * m[2][1])
        + m[0][1] * (m[1][0] * m[2][2] + m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] + m[1][1] * m[2][0])
}

fn offdiag_sq(h: &Mat3) -> f64 {
    h[0][1].norm_sqr() + h[0][2].norm_sqr() + h[1][2].norm_sqr()
}

/// Eigendecomposition of a Hermitian 3x3 matrix by cyclic complex Jacobi
/// rotations. Returns eigenvalues in ascending order and the matrix whose
/// columns are the matching orthonormal eigenvectors, so that
/// `a = v * diag(w) * v^dagger` to machine precision.
///
/// Only the upper triangle of `a` is read; the diagonal is assumed real.
pub fn hermitian_eigen(a: &Mat3) -> ([f64; 3], Mat3) {
    let mut h = *a;
    // Symmetrize defensively so rounding in the caller cannot break Hermiticity.
    for p in 0..3 {
        h[p][p] = C64::new(h[p][p].re, 0.0);
        for q in (p + 1)..3 {
            let m = (h[p][q] + h[q][p].conj()) * 0.5;
            h[p][q] = m;
            h[q][p] = m.conj();
        }
    }
    let mut v = identity();
    let frob: f64 = (0..3)
        .map(|i| (0..3).map(|j| h[i][j].norm_sqr()).sum::<f64>())
        .sum();
    let stop = frob * 1e-32 + f64::MIN_POSITIVE;

    for _sweep in 0..40 {
        if offdiag_sq(&h) <= stop {
            break;
        }
        for (p, q) in [(0usize, 1usize), (0, 2), (1, 2)] {
            let hpq = h[p][q];
            let r = hpq.norm();
            if r <= 1e-300 {
                continue;
            }
            // Fold out the phase of h[p][q] and pick the small-angle rotation
            // that zeroes the real off-diagonal entry.
            let e = hpq / r;
            let tau = (h[q][q].re - h[p][p].re) / (2.0 * r);
            let t = if tau >= 0.0 {
                -1.0 / (tau + (1.0 + tau * tau).sqrt())
            } else {
                -1.0 / (tau - (1.0 + tau * tau).sqrt())
            };
            let c = 1.0 / (1.0 + t * t).sqrt();
            let s = t * c;
            // Columns p,q of h and v are mixed by
            //   [ c       -s*e ]
            //   [ s*conj(e)  c ]
            let (cs, se, sec) = (C64::new(c, 0.0), e * s, e.conj() * s);
            for k in 0..3 {
                let (hp, hq) = (h[k][p], h[k][q]);
                h[k][p] = hp * cs + hq * sec;
                h[k][q] = hq * cs - hp * se;
                let (vp, vq) = (v[k][p], v[k][q]);
                v[k][p] = vp * cs + vq * sec;
                v[k][q] = vq * cs - vp * se;
            }
            for k in 0..3 {
                let (hp, hq) = (h[p][k], h[q][k]);
                h[p][k] = hp * cs + hq * sec.conj();
                h[q][k] = hq * cs - hp * se.conj();
            }
            h[p][q] = ZERO;
            h[q][p] = ZERO;
        }
    }

    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| h[i][i].re.partial_cmp(&h[j][j].re).unwrap());
    let mut w = [0.0f64; 3];
    let mut vs = [[ZERO; 3]; 3];
    for (slot, &idx) in order.iter().enumerate() {
        w[slot] = h[idx][idx].re;
        for k in 0..3 {
            vs[k][slot] = v[k][idx];
        }
    }
    (w, vs)
}

/// Singular values of a 3x3 complex matrix, descending.
pub fn singular_values(a: &Mat3) -> [f64; 3] {
    let h = matmul(&adjoint(a), a);
    let (w, _) = hermitian_eigen(&h);
    // Ascending eigenvalues of a^dagger a; clamp the rounding negatives.
    [w[2].max(0.0).sqrt(), w[1].max(0.0).sqrt(), w[0].max(0.0).sqrt()]
}
