//! Gaussian kernel density estimation with Silverman bandwidth and
//! optional boundary reflection.
//!
//! The raw estimate is `f(x) = 1/(n h) * sum_i phi((x - x_i)/h)`. For
//! compactly supported data (the storyteller ratios live in [0, 1]) a
//! plain Gaussian KDE leaks mass past the endpoints; with reflection
//! enabled the leaked mass is folded back by mirroring the evaluation
//! point across the support lattice, so the density integrates to one
//! over the support.

use crate::error::{Error, Result};

const SQRT_2PI: f64 = 2.5066282746310002;

fn gauss(u: f64) -> f64 {
    (-0.5 * u * u).exp() / SQRT_2PI
}

/// A fitted one-dimensional Gaussian KDE.
#[derive(Debug, Clone)]
pub struct KdeModel {
    samples: Vec<f64>,
    bandwidth: f64,
    lo: f64,
    hi: f64,
    reflect: bool,
}

/// Silverman's rule of thumb: `0.9 * min(sigma, IQR/1.34) * n^(-1/5)`,
/// floored at 1e-4. Sigma is the (n-1)-denominator standard deviation;
/// quartiles use linear interpolation.
pub fn silverman_bandwidth(samples: &[f64]) -> f64 {
    const FLOOR: f64 = 1e-4;
    let n = samples.len();
    if n < 2 {
        return FLOOR;
    }
    let nf = n as f64;
    let mean = samples.iter().sum::<f64>() / nf;
    let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (nf - 1.0);
    let sigma = var.sqrt();

    let mut sorted = samples.to_vec();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite samples"));
    let quantile = |p: f64| -> f64 {
        let pos = p * (nf - 1.0);
        let lo = pos.floor() as usize;
        let frac = pos - lo as f64;
        if lo + 1 < n {
            sorted[lo] + frac * (sorted[lo + 1] - sorted[lo])
        } else {
            sorted[lo]
        }
    };
    let iqr = quantile(0.75) - quantile(0.25);
    let spread = sigma.min(iqr / 1.34);
    (0.9 * spread * nf.powf(-0.2)).max(FLOOR)
}

impl KdeModel {
    /// Fit without boundary reflection. The evaluation support is the data
    /// range padded by eight bandwidths, wide enough to hold all but a
    /// negligible sliver of the mass.
    pub fn new(samples: &[f64], bandwidth: Option<f64>) -> Result<KdeModel> {
        let h = Self::resolve_bandwidth(samples, bandwidth)?;
        let min = samples.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = samples.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        Ok(KdeModel {
            samples: samples.to_vec(),
            bandwidth: h,
            lo: min - 8.0 * h,
            hi: max + 8.0 * h,
            reflect: false,
        })
    }

    /// Fit with reflection across the closed support `[lo, hi]`.
    pub fn reflected(samples: &[f64], bandwidth: Option<f64>, lo: f64, hi: f64) -> Result<KdeModel> {
        if lo >= hi || lo.is_nan() || hi.is_nan() {
            return Err(Error::InvalidSupport { lo, hi });
        }
        let h = Self::resolve_bandwidth(samples, bandwidth)?;
        Ok(KdeModel {
            samples: samples.to_vec(),
            bandwidth: h,
            lo,
            hi,
            reflect: true,
        })
    }

    fn resolve_bandwidth(samples: &[f64], bandwidth: Option<f64>) -> Result<f64> {
        if samples.is_empty() {
            return Err(Error::EmptySamples);
        }
        match bandwidth {
            Some(h) if h.is_finite() && h > 0.0 => Ok(h),
            Some(h) => Err(Error::NonPositiveBandwidth(h)),
            None => Ok(silverman_bandwidth(samples)),
        }
    }

    pub fn bandwidth(&self) -> f64 {
        self.bandwidth
    }

    pub fn support(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    fn raw(&self, x: f64) -> f64 {
        let h = self.bandwidth;
        let sum: f64 = self.samples.iter().map(|&xi| gauss((x - xi) / h)).sum();
        sum / (self.samples.len() as f64 * h)
    }

    /// Density at `x`. With reflection, points outside the support have
    /// zero density and mirror images are summed until their kernels no
    /// longer reach the support.
    pub fn evaluate(&self, x: f64) -> f64 {
        if !self.reflect {
            return self.raw(x);
        }
        if x < self.lo || x > self.hi {
            return 0.0;
        }
        let span = self.hi - self.lo;
        // One image pair per period; k periods cover distance k*2*span,
        // kernels vanish beyond ~9 bandwidths.
        let periods = ((9.0 * self.bandwidth + span) / (2.0 * span)).ceil() as i64;
        let mut total = 0.0;
        for k in -periods..=periods {
            let shift = 2.0 * k as f64 * span;
            total += self.raw(x + shift);
            total += self.raw(2.0 * self.lo - x + shift);
        }
        total
    }

    /// Evaluate the density on `n_points` evenly spaced points over the
    /// support, endpoints included.
    pub fn grid_export(&self, n_points: usize) -> Vec<(f64, f64)> {
        let n = n_points.max(2);
        let step = (self.hi - self.lo) / (n - 1) as f64;
        (0..n)
            .map(|i| {
                let x = if i == n - 1 { self.hi } else { self.lo + i as f64 * step };
                (x, self.evaluate(x))
            })
            .collect()
    }

    /// Trapezoid integral of the density over its support; used by tests
    /// and the normalization invariant.
    pub fn integral(&self, n_points: usize) -> f64 {
        let grid = self.grid_export(n_points.max(3));
        let mut total = 0.0;
        for w in grid.windows(2) {
            total += 0.5 * (w[0].1 + w[1].1) * (w[1].0 - w[0].0);
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_sample_peak_is_standard_normal_peak() {
        let kde = KdeModel::new(&[0.4], Some(1.0)).unwrap();
        assert!((kde.evaluate(0.4) - 1.0 / SQRT_2PI).abs() < 1e-12);
    }

    #[test]
    fn two_point_hand_case() {
        // 0.5*(phi(0) + phi(6))/0.1 at x = 0.2.
        let kde = KdeModel::new(&[0.2, 0.8], Some(0.1)).unwrap();
        let expected = 0.5 * (gauss(0.0) + gauss(6.0)) / 0.1;
        assert!((kde.evaluate(0.2) - expected).abs() < 1e-12);
        assert!((expected - 1.9947114323865776).abs() < 1e-9);
    }

    #[test]
    fn integrates_to_one_without_reflection() {
        let samples = [0.1, 0.2, 0.2, 0.5, 0.9];
        let kde = KdeModel::new(&samples, None).unwrap();
        assert!((kde.integral(4001) - 1.0).abs() < 1e-3);
    }

    #[test]
    fn integrates_to_one_with_reflection_even_for_wide_kernels() {
        for h in [0.05, 0.2, 0.5, 1.5] {
            let kde = KdeModel::reflected(&[0.0, 0.05, 0.5, 0.96], Some(h), 0.0, 1.0).unwrap();
            let integral = kde.integral(4001);
            assert!(
                (integral - 1.0).abs() < 1e-3,
                "h={h}: integral {integral}"
            );
        }
    }

    #[test]
    fn density_is_nonnegative_and_zero_outside_reflected_support() {
        let kde = KdeModel::reflected(&[0.3, 0.7], None, 0.0, 1.0).unwrap();
        assert_eq!(kde.evaluate(-0.1), 0.0);
        assert_eq!(kde.evaluate(1.1), 0.0);
        for i in 0..=100 {
            assert!(kde.evaluate(i as f64 / 100.0) >= 0.0);
        }
    }

    #[test]
    fn silverman_uses_min_of_sigma_and_iqr_and_floors() {
        // Identical samples: zero spread collapses to the floor.
        assert_eq!(silverman_bandwidth(&[0.5, 0.5, 0.5]), 1e-4);
        assert_eq!(silverman_bandwidth(&[0.5]), 1e-4);
        // Hand value for {0.2, 0.8}: IQR/1.34 < sigma.
        let h = silverman_bandwidth(&[0.2, 0.8]);
        let expected = 0.9 * (0.3 / 1.34) * 2f64.powf(-0.2);
        assert!((h - expected).abs() < 1e-12);
    }

    #[test]
    fn bandwidth_validation() {
        assert!(matches!(
            KdeModel::new(&[], None),
            Err(Error::EmptySamples)
        ));
        assert!(matches!(
            KdeModel::new(&[0.5], Some(0.0)),
            Err(Error::NonPositiveBandwidth(_))
        ));
        assert!(matches!(
            KdeModel::new(&[0.5], Some(-1.0)),
            Err(Error::NonPositiveBandwidth(_))
        ));
        assert!(matches!(
            KdeModel::reflected(&[0.5], None, 1.0, 0.0),
            Err(Error::InvalidSupport { .. })
        ));
    }

    #[test]
    fn grid_export_covers_support() {
        let kde = KdeModel::reflected(&[0.4], None, 0.0, 1.0).unwrap();
        let grid = kde.grid_export(512);
        assert_eq!(grid.len(), 512);
        assert_eq!(grid[0].0, 0.0);
        assert_eq!(grid[511].0, 1.0);
    }
}
