//! Simultaneous polynomial root finding (Aberth-Ehrlich iteration).
//!
//! Degrees stay small here (well under 20), so the solver favours
//! robustness: Newton corrections coupled through the pairwise repulsion
//! term, a stagnation detector, and seed-deterministic perturbation
//! restarts. Converged roots are reproducible for a fixed seed, and after
//! canonical sorting they are reproducible across seeds up to round-off.

use alloc::vec::Vec;

use num_traits::Float;

use super::cpoly::CPoly;
use crate::error::{Error, Result};
use crate::rng::{mix_context, SeededRng};
use crate::C64;

/// Options for the root iteration. `seed` pins the initial configuration
/// and any restart perturbations.
#[derive(Debug, Clone, Copy)]
pub struct SolveOpts {
    pub seed: u64,
    pub tol: f64,
    pub max_iter: usize,
    pub max_restarts: usize,
}

impl Default for SolveOpts {
    fn default() -> Self {
        SolveOpts { seed: 0, tol: 1e-12, max_iter: 200, max_restarts: 4 }
    }
}

/// All complex roots of `p`, unordered multiset (repeats for multiple roots).
pub fn roots(p: &CPoly, opts: &SolveOpts) -> Result<Vec<C64>> {
    let n = match p.degree() {
        None => return Err(Error::IdenticallyZero),
        Some(0) => return Ok(Vec::new()),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(alloc::vec![-p.coeff(0) / p.coeff(1)]);
    }

    let deriv = p.derivative();
    let bound = p.root_bound();
    let ctx = mix_context(0x61626572, p.coeff(0).re, p.coeff(n).norm());
    let mut rng = SeededRng::new(opts.seed, ctx);

    let mut zs = initial_guesses(n, bound, &mut rng);
    let mut done = alloc::vec![false; n];
    let mut best: f64 = f64::INFINITY;
    let mut stagnant = 0usize;
    let mut restarts = 0usize;

    for _ in 0..opts.max_iter * (opts.max_restarts + 1) {
        let mut max_res: f64 = 0.0;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let zk = zs[k];
            let pv = p.eval(zk);
            let scale = p.eval_scale(zk).max(1e-300);
            let res = pv.norm() / scale;
            if res <= opts.tol {
                done[k] = true;
                continue;
            }
            max_res = max_res.max(res);
            let dv = deriv.eval(zk);
            let newton = if dv.norm() == 0.0 {
                // flat spot: nudge off it deterministically
                C64::new(1e-6 * (1.0 + zk.norm()), 0.0)
            } else {
                pv / dv
            };
            let mut repulse = C64::new(0.0, 0.0);
            for (j, zj) in zs.iter().enumerate() {
                if j != k {
                    let d = zk - zj;
                    if d.norm() > 1e-300 {
                        repulse += C64::new(1.0, 0.0) / d;
                    }
                }
            }
            let denom = C64::new(1.0, 0.0) - newton * repulse;
            let step = if denom.norm() < 1e-12 { newton } else { newton / denom };
            zs[k] = zk - step;
            // roots of pure powers (and exact multiple roots) approach their
            // limit geometrically while the relative residual stays pinned;
            // a vanishing step means f64 cannot improve the location further
            if step.norm() <= 1e-14 * (1.0 + zk.norm()) {
                done[k] = true;
            }
        }
        if done.iter().all(|&d| d) {
            return Ok(zs);
        }
        if max_res >= best * 0.99 {
            stagnant += 1;
        } else {
            stagnant = 0;
            best = max_res;
        }
        if stagnant > 12 {
            restarts += 1;
            if restarts > opts.max_restarts {
                break;
            }
            // random relative perturbation of the unconverged roots
            for (k, z) in zs.iter_mut().enumerate() {
                if done[k] {
                    continue;
                }
                let m = 1.0 + 1e-3 * rng.symmetric();
                let a = 1e-3 * rng.symmetric();
                *z = *z * C64::new(m * a.cos(), m * a.sin());
                if z.norm() < 1e-12 {
                    *z += C64::new(1e-6 * (1.0 + bound), 0.0);
                }
            }
            best = f64::INFINITY;
            stagnant = 0;
        }
    }
    Err(Error::SolverDiverged { point: zs[0] })
}

fn initial_guesses(n: usize, bound: f64, rng: &mut SeededRng) -> Vec<C64> {
    // points on a circle inside the root bound, golden-angle offset plus a
    // small seeded jitter to break symmetric configurations
    let radius = 0.5 * bound.max(1e-3);
    let offset = 0.6180339887498949 * core::f64::consts::TAU;
    (0..n)
        .map(|k| {
            let jitter = 1e-3 * rng.symmetric();
            let theta = offset + core::f64::consts::TAU * (k as f64 + jitter) / n as f64;
            C64::new(radius * theta.cos(), radius * theta.sin())
        })
        .collect()
}

/// Canonical ordering for root lists: lexicographic by (re, im).
/// Multisets become comparable and downstream consumers deterministic.
pub fn sort_canonical(zs: &mut [C64]) {
    zs.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then_with(|| a.im.partial_cmp(&b.im).unwrap())
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn quadratic_roots() {
        // z^2 - 1
        let p = CPoly::from_pairs(&[[-1.0, 0.0], [0.0, 0.0], [1.0, 0.0]]);
        let mut rs = roots(&p, &SolveOpts::default()).unwrap();
        sort_canonical(&mut rs);
        assert!((rs[0] - C64::new(-1.0, 0.0)).norm() < 1e-10);
        assert!((rs[1] - C64::new(1.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn multiple_root_cluster() {
        // (z - 2)^3 = z^3 - 6z^2 + 12z - 8
        let p = CPoly::from_pairs(&[[-8.0, 0.0], [12.0, 0.0], [-6.0, 0.0], [1.0, 0.0]]);
        let rs = roots(&p, &SolveOpts::default()).unwrap();
        for r in rs {
            assert!((r - C64::new(2.0, 0.0)).norm() < 1e-4);
        }
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let p = CPoly::from_pairs(&[[1.0, 2.0], [0.5, -1.0], [3.0, 0.0], [0.0, 1.0], [1.0, 0.0]]);
        let a = roots(&p, &SolveOpts::default()).unwrap();
        let b = roots(&p, &SolveOpts::default()).unwrap();
        assert_eq!(
            a.iter().map(|z| (z.re.to_bits(), z.im.to_bits())).collect::<Vec<_>>(),
            b.iter().map(|z| (z.re.to_bits(), z.im.to_bits())).collect::<Vec<_>>()
        );
    }

    #[test]
    fn random_polynomials_reconstruct(){
        let mut rng = SeededRng::new(7, 1);
        for _ in 0..25 {
            let n = 2 + (rng.unit() * 5.0) as usize;
            let mut factors = vec![];
            let mut p = CPoly::one();
            for _ in 0..n {
                let r = C64::new(2.0 * rng.symmetric(), 2.0 * rng.symmetric());
                factors.push(r);
                p = &p * &CPoly::new(vec![-r, C64::new(1.0, 0.0)]);
            }
            let mut rs = roots(&p, &SolveOpts::default()).unwrap();
            sort_canonical(&mut rs);
            sort_canonical(&mut factors);
            for (a, b) in rs.iter().zip(factors.iter()) {
                assert!((a - b).norm() < 1e-6, "root mismatch {a} vs {b}");
            }
        }
    }
}
