//! Real roots of the dip-shape polynomial `h(y) = A y^3 + 4B - 3C y`.
//!
//! The polynomial has no quadratic term, so its three roots always sum to
//! zero; at most two of them can exceed one. Roots are found in closed form
//! (trigonometric or Cardano branch depending on the discriminant) and simple
//! roots get one Newton polish step.

// Float brings sqrt/cbrt/trig to f64 under no_std; redundant with std.
#[allow(unused_imports)]
use num_traits::Float;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Root {
    pub y: f64,
    pub multiplicity: u8,
}

/// Up to three real roots, no heap allocation.
#[derive(Clone, Copy, Debug, Default)]
pub struct RootSet {
    items: [Root; 3],
    len: u8,
}

impl RootSet {
    fn push(&mut self, y: f64, multiplicity: u8) {
        self.items[self.len as usize] = Root { y, multiplicity };
        self.len += 1;
    }

    pub fn iter(&self) -> impl Iterator<Item = &Root> {
        self.items[..self.len as usize].iter()
    }

    #[allow(dead_code)] // test helper
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
}

/// Evaluate `h(y) = a3 y^3 + a1 y + a0`.
#[inline]
pub fn eval(a3: f64, a1: f64, a0: f64, y: f64) -> f64 {
    (a3 * y * y + a1) * y + a0
}

fn newton_polish(a3: f64, a1: f64, a0: f64, y: f64) -> f64 {
    let slope = 3.0 * a3 * y * y + a1;
    if slope.abs() < 1e-300 {
        return y;
    }
    let step = eval(a3, a1, a0, y) / slope;
    if step.is_finite() && step.abs() < 0.5 * (1.0 + y.abs()) {
        y - step
    } else {
        y
    }
}

/// Real roots (with multiplicity) of the depressed cubic
/// `a3 y^3 + a1 y + a0`. Degenerate leading coefficients fall back to the
/// linear case; the identically-zero polynomial reports no isolated roots.
pub fn depressed_cubic_roots(a3: f64, a1: f64, a0: f64) -> RootSet {
    let mut out = RootSet::default();
    if a3 == 0.0 {
        if a1 != 0.0 {
            out.push(-a0 / a1, 1);
        }
        return out;
    }

    let p = a1 / a3;
    let q = a0 / a3;

    if q == 0.0 {
        // y (y^2 + p) = 0
        if p < 0.0 {
            let r = (-p).sqrt();
            out.push(-r, 1);
            out.push(0.0, 1);
            out.push(r, 1);
        } else if p == 0.0 {
            out.push(0.0, 3);
        } else {
            out.push(0.0, 1);
        }
        return out;
    }

    let disc = -4.0 * p * p * p - 27.0 * q * q;
    if disc > 0.0 {
        // Three distinct real roots; requires p < 0.
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (2.0 * p)) * (-3.0 / p).sqrt();
        let phi = arg.clamp(-1.0, 1.0).acos();
        for k in 0..3 {
            let y = m * ((phi - 2.0 * core::f64::consts::PI * k as f64) / 3.0).cos();
            out.push(newton_polish(a3, a1, a0, y), 1);
        }
    } else if disc < 0.0 {
        // One real root; Cardano with the cancellation-free cube root.
        let s = (q * q / 4.0 + p * p * p / 27.0).sqrt();
        let u = if q >= 0.0 {
            (-q / 2.0 - s).cbrt()
        } else {
            (-q / 2.0 + s).cbrt()
        };
        let y = u - p / (3.0 * u);
        out.push(newton_polish(a3, a1, a0, y), 1);
    } else {
        // Exactly vanishing discriminant: a double root plus a simple one
        // (the p = q = 0 triple root was handled above).
        let simple = 3.0 * q / p;
        let double = -3.0 * q / (2.0 * p);
        out.push(newton_polish(a3, a1, a0, simple), 1);
        out.push(double, 2);
    }

    // Sort ascending for a stable public order.
    let n = out.len as usize;
    let slice = &mut out.items[..n];
    slice.sort_by(|a, b| a.y.partial_cmp(&b.y).unwrap());
    out
}

/// Roots of the shape polynomial `h(y) = a y^3 + 4 b - 3 c y`.
pub fn h_roots(a: f64, b: f64, c: f64) -> RootSet {
    depressed_cubic_roots(a, -3.0 * c, 4.0 * b)
}
