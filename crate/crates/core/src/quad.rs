//! Composite-midpoint quadrature with panel doubling.
//!
//! The midpoint rule is used everywhere on purpose: it never evaluates the
//! integrand at interval endpoints, which keeps `x log x`-type integrands away
//! from their boundary singularities. Each doubling splits every panel in two,
//! so previous function evaluations are not reused, but the rule is O(h^2) and
//! the Richardson difference |I_2n - I_n|/3 is a usable error estimate.

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadOutcome {
    pub value: f64,
    /// Richardson error estimate from the last doubling.
    pub est_error: f64,
    pub panels: usize,
    pub converged: bool,
}

/// Options controlling the doubling loop.
#[derive(Debug, Clone, Copy)]
pub struct QuadOpts {
    pub base_panels: usize,
    pub max_panels: usize,
    pub tol: f64,
}

impl Default for QuadOpts {
    fn default() -> Self {
        QuadOpts {
            base_panels: 1024,
            max_panels: 1 << 23,
            tol: 1e-9,
        }
    }
}

/// Composite midpoint rule with `n` uniform panels on [a, b].
pub fn midpoint<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, n: usize) -> f64 {
    debug_assert!(n > 0 && b > a);
    let h = (b - a) / n as f64;
    let mut acc = 0.0;
    for i in 0..n {
        let x = a + (i as f64 + 0.5) * h;
        acc += f(x);
    }
    acc * h
}

/// Integrate `f` over [a, b], doubling the panel count until the Richardson
/// estimate drops below `opts.tol` or `opts.max_panels` is reached.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, opts: &QuadOpts) -> QuadOutcome {
    let mut n = opts.base_panels.max(4);
    let mut prev = midpoint(f, a, b, n);
    loop {
        let next = midpoint(f, a, b, 2 * n);
        let est = (next - prev).abs() / 3.0;
        n *= 2;
        if est <= opts.tol || 2 * n > opts.max_panels {
            return QuadOutcome {
                value: next,
                est_error: est,
                panels: n,
                converged: est <= opts.tol,
            };
        }
        prev = next;
    }
}

/// Three-band integration for slow-decaying spectral integrands: a finely
/// panelled central band where the curvature is O(1), flanked by two tail
/// bands whose panel width only needs to resolve the oscillation period.
pub fn integrate_banded<F: Fn(f64) -> f64>(
    f: &F,
    center: f64,
    near_halfwidth: f64,
    cap_halfwidth: f64,
    near_opts: &QuadOpts,
    far_opts: &QuadOpts,
) -> QuadOutcome {
    let mid = integrate(f, center - near_halfwidth, center + near_halfwidth, near_opts);
    let hi = integrate(f, center + near_halfwidth, center + cap_halfwidth, far_opts);
    let lo = integrate(f, center - cap_halfwidth, center - near_halfwidth, far_opts);
    QuadOutcome {
        value: mid.value + hi.value + lo.value,
        est_error: mid.est_error + hi.est_error + lo.est_error,
        panels: mid.panels + hi.panels + lo.panels,
        converged: mid.converged,
    }
}

/// Cumulative-mass table of a nonnegative density on [a, b], used for
/// centroid and effective-support searches. Panel masses are midpoint ones.
pub struct MassTable {
    pub a: f64,
    pub h: f64,
    /// cum[i] = mass of the first i panels; cum[n] is the total.
    pub cum: Vec<f64>,
}

impl MassTable {
    pub fn build<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, n: usize) -> Self {
        let h = (b - a) / n as f64;
        let mut cum = Vec::with_capacity(n + 1);
        cum.push(0.0);
        let mut acc = 0.0;
        for i in 0..n {
            let x = a + (i as f64 + 0.5) * h;
            acc += f(x) * h;
            cum.push(acc);
        }
        MassTable { a, h, cum }
    }

    pub fn total(&self) -> f64 {
        *self.cum.last().unwrap()
    }

    /// Mass of [lo, hi] by linear interpolation of the cumulative table.
    pub fn mass(&self, lo: f64, hi: f64) -> f64 {
        self.at(hi) - self.at(lo)
    }

    fn at(&self, x: f64) -> f64 {
        let n = self.cum.len() - 1;
        let t = (x - self.a) / self.h;
        if t <= 0.0 {
            return 0.0;
        }
        if t >= n as f64 {
            return self.total();
        }
        let i = t.floor() as usize;
        let frac = t - i as f64;
        self.cum[i] + frac * (self.cum[i + 1] - self.cum[i])
    }

    /// Smallest halfwidth r such that mass([c-r, c+r]) >= target, by bisection
    /// on the interpolated table. Returns None if the window never reaches it.
    pub fn symmetric_halfwidth(&self, c: f64, target: f64) -> Option<f64> {
        let b = self.a + self.h * (self.cum.len() - 1) as f64;
        let rmax = (c - self.a).max(b - c);
        if self.mass(c - rmax, c + rmax) < target {
            return None;
        }
        let (mut lo, mut hi) = (0.0f64, rmax);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if self.mass(c - mid, c + mid) >= target {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 1e-12 * rmax.max(1.0) {
                break;
            }
        }
        Some(hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn midpoint_exact_for_linear() {
        let f = |x: f64| 3.0 * x + 1.0;
        let v = midpoint(&f, 0.0, 2.0, 7);
        assert!((v - 8.0).abs() < 1e-13);
    }

    #[test]
    fn integrate_gaussian_mass() {
        // Unit-mass Gaussian truncated at +-10 sigma.
        let f = |x: f64| (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();
        let out = integrate(&f, -10.0, 10.0, &QuadOpts::default());
        assert!(out.converged);
        assert!((out.value - 1.0).abs() < 1e-10);
    }

    #[test]
    fn integrate_reports_nonconvergence() {
        let f = |x: f64| (1e4 * x).sin().abs();
        let opts = QuadOpts {
            base_panels: 4,
            max_panels: 8,
            tol: 1e-12,
        };
        let out = integrate(&f, 0.0, 1.0, &opts);
        assert!(!out.converged);
    }

    #[test]
    fn mass_table_halfwidth_uniform() {
        // Uniform density on [0, 2]: mass of [1-r, 1+r] is r.
        let table = MassTable::build(&|_x| 0.5, 0.0, 2.0, 4096);
        let r = table.symmetric_halfwidth(1.0, 0.9).unwrap();
        assert!((r - 0.9).abs() < 1e-3);
    }

    #[test]
    fn mass_table_total() {
        let table = MassTable::build(&|x: f64| x, 0.0, 1.0, 2048);
        assert!((table.total() - 0.5).abs() < 1e-9);
        assert!((table.mass(0.0, 0.5) - 0.125).abs() < 1e-6);
    }
}
