//! Quaternion samples on a uniform periodic 1D grid, with second-order
//! central differences.

use std::io::Write;

use crate::error::{Error, Result};
use crate::quat::Quaternion;
use crate::waves::lambda::LambdaSpec;

/// Smallest grid accepted by [`fd_derivative`].
pub const MIN_SAMPLES: usize = 8;
/// Default number of samples over one period.
pub const DEFAULT_SAMPLES: usize = 256;

/// Samples at `x_k = k·h`, `h = domain_length / n`. Periodic grids do not
/// store the duplicated endpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction1D {
    pub samples: Vec<Quaternion>,
    pub domain_length: f64,
    pub periodic: bool,
}

impl GridFunction1D {
    pub fn new(samples: Vec<Quaternion>, domain_length: f64, periodic: bool) -> Result<Self> {
        if samples.is_empty() || domain_length.is_nan() || domain_length <= 0.0 {
            return Err(Error::Domain("grid needs samples and a positive length".into()));
        }
        Ok(Self {
            samples,
            domain_length,
            periodic,
        })
    }

    /// Samples `f` at `n` points on a periodic grid of length `length`.
    pub fn sample(n: usize, length: f64, f: impl Fn(f64) -> Quaternion) -> Self {
        let h = length / n as f64;
        let samples = (0..n).map(|k| f(k as f64 * h)).collect();
        Self {
            samples,
            domain_length: length,
            periodic: true,
        }
    }

    /// Λ sampled over one period.
    pub fn sample_lambda(spec: &LambdaSpec, n: usize) -> Self {
        Self::sample(n, spec.period(), |x| spec.eval(x))
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn spacing(&self) -> f64 {
        self.domain_length / self.samples.len() as f64
    }

    pub fn x(&self, k: usize) -> f64 {
        k as f64 * self.spacing()
    }

    pub fn fd_derivative(&self, order: u8) -> Result<Self> {
        fd_derivative(self, order)
    }

    /// `max_k |self_k − other_k|`.
    pub fn max_dist(&self, other: &GridFunction1D) -> Result<f64> {
        if self.len() != other.len() {
            return Err(Error::Dimension(format!(
                "grid lengths differ: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        Ok(self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a.dist(*b))
            .fold(0.0, crate::exec::nan_max))
    }

    /// CSV with header `x,w,x_i,y_j,z_k`, comma separated, LF line endings.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut wtr = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        let io = |e: csv::Error| Error::Io(format!("csv write failed: {e}"));
        wtr.write_record(["x", "w", "x_i", "y_j", "z_k"]).map_err(io)?;
        for (k, q) in self.samples.iter().enumerate() {
            wtr.serialize((self.x(k), q.w, q.x, q.y, q.z)).map_err(io)?;
        }
        wtr.flush().map_err(|e| Error::Io(format!("csv flush failed: {e}")))
    }
}

/// Central differences with periodic wraparound, componentwise:
/// `(f_{k+1} − f_{k−1}) / 2h` for `order = 1`,
/// `(f_{k+1} − 2 f_k + f_{k−1}) / h²` for `order = 2`.
pub fn fd_derivative(f: &GridFunction1D, order: u8) -> Result<GridFunction1D> {
    if !f.periodic {
        return Err(Error::Boundary("only periodic grids are supported".into()));
    }
    let n = f.len();
    if n < MIN_SAMPLES {
        return Err(Error::Resolution(format!(
            "need at least {MIN_SAMPLES} samples, got {n}"
        )));
    }
    let h = f.spacing();
    let s = &f.samples;
    let samples = match order {
        1 => (0..n)
            .map(|k| (s[(k + 1) % n] - s[(k + n - 1) % n]) * (0.5 / h))
            .collect(),
        2 => (0..n)
            .map(|k| (s[(k + 1) % n] - s[k] * 2.0 + s[(k + n - 1) % n]) * (1.0 / (h * h)))
            .collect(),
        _ => return Err(Error::Domain(format!("derivative order {order} not in {{1, 2}}"))),
    };
    Ok(GridFunction1D {
        samples,
        domain_length: f.domain_length,
        periodic: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_has_zero_derivative() {
        let g = GridFunction1D::sample(32, 2.0, |_| Quaternion::new(1.0, -2.0, 0.5, 3.0));
        for order in [1, 2] {
            let d = g.fd_derivative(order).unwrap();
            assert!(d.samples.iter().all(|q| q.norm() == 0.0));
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let mut g = GridFunction1D::sample(16, 1.0, |_| Quaternion::ONE);
        assert!(matches!(g.fd_derivative(3), Err(Error::Domain(_))));
        g.periodic = false;
        assert!(matches!(g.fd_derivative(1), Err(Error::Boundary(_))));
        let small = GridFunction1D::sample(4, 1.0, |_| Quaternion::ONE);
        assert!(matches!(small.fd_derivative(1), Err(Error::Resolution(_))));
        let other = GridFunction1D::sample(8, 1.0, |_| Quaternion::ONE);
        assert!(matches!(
            GridFunction1D::sample(16, 1.0, |_| Quaternion::ONE).max_dist(&other),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn central_difference_symbol() {
        // D e^{ix} = i sin(h)/h e^{ix} exactly on a periodic grid.
        let n = 64;
        let g = GridFunction1D::sample(n, std::f64::consts::TAU, Quaternion::cis);
        let h = g.spacing();
        let d = g.fd_derivative(1).unwrap();
        for (k, q) in d.samples.iter().enumerate() {
            let want = Quaternion::complex(0.0, h.sin() / h) * Quaternion::cis(g.x(k));
            assert!(q.approx_eq(want, 1e-13));
        }
    }

    #[test]
    fn csv_layout() {
        let g = GridFunction1D::sample(8, 8.0, |x| Quaternion::new(x, 0.0, 0.5, -1.0));
        let mut buf = Vec::new();
        g.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("x,w,x_i,y_j,z_k"));
        assert_eq!(lines.next(), Some("0.0,0.0,0.0,0.5,-1.0"));
        assert_eq!(text.lines().count(), 9);
        assert!(!text.contains('\r'));
    }
}
