//! Small helpers for complex channel/beamformer vectors and their real lift.

use num_complex::Complex64;

/// Hermitian inner product `h^H m`.
pub fn inner(h: &[Complex64], m: &[Complex64]) -> Complex64 {
    debug_assert_eq!(h.len(), m.len());
    h.iter().zip(m).map(|(hi, mi)| hi.conj() * mi).sum()
}

/// Beamforming gain `|h^H m|^2`.
pub fn gain(h: &[Complex64], m: &[Complex64]) -> f64 {
    inner(h, m).norm_sqr()
}

/// Squared Euclidean norm `∥v∥²`.
pub fn norm_sq(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum()
}

/// Real lift of a complex vector `m` as `[Re m; Im m]` (length `2T`).
pub fn to_real(m: &[Complex64]) -> Vec<f64> {
    let t = m.len();
    let mut x = vec![0.0; 2 * t];
    for (i, c) in m.iter().enumerate() {
        x[i] = c.re;
        x[t + i] = c.im;
    }
    x
}

/// Inverse of [`to_real`].
pub fn from_real(x: &[f64]) -> Vec<Complex64> {
    debug_assert_eq!(x.len() % 2, 0);
    let t = x.len() / 2;
    (0..t).map(|i| Complex64::new(x[i], x[t + i])).collect()
}

/// Channel `h` expressed on the real lift: with `x = [Re m; Im m]`,
/// `Re(h^H m) = u·x` and `Im(h^H m) = v·x`, so `|h^H m|² = (u·x)² + (v·x)²`.
#[derive(Debug, Clone)]
pub struct RealLift {
    pub u: Vec<f64>,
    pub v: Vec<f64>,
}

impl RealLift {
    pub fn of(h: &[Complex64]) -> Self {
        let t = h.len();
        let mut u = vec![0.0; 2 * t];
        let mut v = vec![0.0; 2 * t];
        for (i, c) in h.iter().enumerate() {
            u[i] = c.re;
            u[t + i] = c.im;
            v[i] = -c.im;
            v[t + i] = c.re;
        }
        Self { u, v }
    }

    /// `Re(h^H m)` for `x` the real lift of `m`.
    pub fn re(&self, x: &[f64]) -> f64 {
        dot(&self.u, x)
    }

    /// `Im(h^H m)` for `x` the real lift of `m`.
    pub fn im(&self, x: &[f64]) -> f64 {
        dot(&self.v, x)
    }

    /// `|h^H m|²` for `x` the real lift of `m`.
    pub fn gain(&self, x: &[f64]) -> f64 {
        let r = self.re(x);
        let i = self.im(x);
        r * r + i * i
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_lift_matches_complex_arithmetic() {
        let h = vec![Complex64::new(1.0, -2.0), Complex64::new(0.5, 3.0)];
        let m = vec![Complex64::new(-1.0, 0.25), Complex64::new(2.0, -1.5)];
        let x = to_real(&m);
        let lift = RealLift::of(&h);
        let ip = inner(&h, &m);
        assert!((lift.re(&x) - ip.re).abs() < 1e-14);
        assert!((lift.im(&x) - ip.im).abs() < 1e-14);
        assert!((lift.gain(&x) - gain(&h, &m)).abs() < 1e-12);
        assert_eq!(from_real(&x), m);
    }
}
