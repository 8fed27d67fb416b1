//! Resultant and discriminant of the defining equation.
//!
//! `R_ψ` is the (2ν-1)-order determinant with ν-1 shifted rows of
//! `A_ν ... A_0` and ν shifted rows of `B_ν ... B_1`, `B_j = j A_j`
//! (the resultant of ψ and ∂ψ/∂w in `w`). The discriminant is
//! `J_ψ = (-1)^{ν(ν-1)/2} R_ψ / A_ν`, which satisfies the product identity
//! `J_ψ = A_ν^{2ν-2} Π_{i<j} (w_i - w_j)^2` over the root functions.

use alloc::vec;
use alloc::vec::Vec;

use super::cpoly::CPoly;
use super::types::AlgebroidEquation;
use crate::error::{Error, Result};
use crate::C64;

/// Sylvester-style resultant of `ψ` and its `w`-derivative, as a
/// polynomial in `z`. For ν = 1 the determinant degenerates to the single
/// entry `B_1 = A_1`, so linear equations get `R_ψ = A_1` for free.
pub fn sylvester_resultant(eq: &AlgebroidEquation) -> CPoly {
    let nu = eq.nu();
    let n = 2 * nu - 1;
    let zero = CPoly::zero();
    let mut m = vec![vec![zero; n]; n];
    for i in 0..nu.saturating_sub(1) {
        // row of A_ν, A_{ν-1}, ..., A_0 starting at column i
        for k in 0..=nu {
            m[i][i + k] = eq.a(nu - k).clone();
        }
    }
    for i in 0..nu {
        // row of B_ν, ..., B_1 with B_j = j A_j
        for k in 0..nu {
            let j = nu - k;
            m[nu - 1 + i][i + k] = eq.a(j).scale(C64::new(j as f64, 0.0));
        }
    }
    let det = if n <= 7 { det_cofactor(&m) } else { det_bareiss(m) };
    det.truncate_noise(1e-13)
}

/// `J_ψ = (-1)^{ν(ν-1)/2} R_ψ / A_ν` by exact polynomial division.
pub fn discriminant(eq: &AlgebroidEquation) -> Result<CPoly> {
    let nu = eq.nu();
    let r = sylvester_resultant(eq);
    let q = r.div_exact(eq.leading())?;
    let sign = if (nu * (nu - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
    Ok(q.scale(C64::new(sign, 0.0)))
}

/// Elementary symmetric functions of the roots at `z` from coefficient
/// ratios: `e_k = (-1)^k A_{ν-k}(z) / A_ν(z)`.
pub fn vieta_products(eq: &AlgebroidEquation, z: C64) -> Result<Vec<C64>> {
    let nu = eq.nu();
    let lead = eq.leading().eval(z);
    if lead.norm() <= 1e-12 * eq.leading().eval_scale(z).max(1e-300) {
        return Err(Error::PoleAtPoint { point: z });
    }
    Ok((1..=nu)
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            eq.a(nu - k).eval(z) * C64::new(sign, 0.0) / lead
        })
        .collect())
}

fn det_cofactor(m: &[Vec<CPoly>]) -> CPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = CPoly::zero();
    for i in 0..n {
        if m[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<CPoly>> = m
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let sub = det_cofactor(&minor);
        let term = &m[i][0] * &sub;
        acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Fraction-free (Bareiss) elimination over polynomial entries; divisions
/// are exact in exact arithmetic, here performed with remainder discard.
fn det_bareiss(mut m: Vec<Vec<CPoly>>) -> CPoly {
    let n = m.len();
    let mut sign = 1.0;
    let mut prev = CPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return CPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                let (q, _) = num.div_rem(&prev).expect("pivot nonzero");
                m[i][j] = q.truncate_noise(1e-13);
            }
            m[i][k] = CPoly::zero();
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].scale(C64::new(sign, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn eq_from_pairs(coeffs: &[&[[f64; 2]]]) -> AlgebroidEquation {
        AlgebroidEquation::new(coeffs.iter().map(|c| CPoly::from_pairs(c)).collect(), "t").unwrap()
    }

    #[test]
    fn sqrt_z_resultant_and_discriminant() {
        // w^2 - z
        let eq = eq_from_pairs(&[&[[0.0, 0.0], [-1.0, 0.0]], &[], &[[1.0, 0.0]]]);
        let r = sylvester_resultant(&eq);
        // R = -4z
        assert_eq!(r.degree(), Some(1));
        assert!((r.coeff(1) - C64::new(-4.0, 0.0)).norm() < 1e-14);
        assert!(r.coeff(0).norm() < 1e-14);
        // J = 4z
        let j = discriminant(&eq).unwrap();
        assert!((j.coeff(1) - C64::new(4.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn constant_quadratic_matches_b2_minus_4ac() {
        // a w^2 + b w + c with a=2, b=3i, c=-1: R = -a(b^2-4ac), J = b^2-4ac
        let a = C64::new(2.0, 0.0);
        let b = C64::new(0.0, 3.0);
        let c = C64::new(-1.0, 0.0);
        let eq = AlgebroidEquation::new(
            vec![CPoly::constant(c), CPoly::constant(b), CPoly::constant(a)],
            "q",
        )
        .unwrap();
        let want = b * b - a * c * 4.0;
        let r = sylvester_resultant(&eq);
        assert!((r.coeff(0) + a * want).norm() < 1e-12);
        let j = discriminant(&eq).unwrap();
        assert!((j.coeff(0) - want).norm() < 1e-12);
    }

    #[test]
    fn linear_equation_resultant_is_a1() {
        // (z+1) w - (z-1): R = A_1 = z+1
        let eq = eq_from_pairs(&[&[[1.0, 0.0], [-1.0, 0.0]], &[[1.0, 0.0], [1.0, 0.0]]]);
        let r = sylvester_resultant(&eq);
        assert!((r.coeff(0) - C64::new(1.0, 0.0)).norm() < 1e-14);
        assert!((r.coeff(1) - C64::new(1.0, 0.0)).norm() < 1e-14);
        // J = 1 identically
        let j = discriminant(&eq).unwrap();
        assert_eq!(j.degree(), Some(0));
        assert!((j.coeff(0) - C64::new(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn bareiss_agrees_with_cofactor() {
        // ν = 2 gives a 3x3 matrix; run both determinant paths on it
        let eq = eq_from_pairs(&[
            &[[1.0, 0.0], [0.0, 2.0], [-1.0, 0.0]],
            &[[0.5, -1.0]],
            &[[0.0, 0.0], [1.0, 0.0]],
        ]);
        let nu = eq.nu();
        let n = 2 * nu - 1;
        let zero = CPoly::zero();
        let mut m = vec![vec![zero; n]; n];
        for k in 0..=nu {
            m[0][k] = eq.a(nu - k).clone();
        }
        for i in 0..nu {
            for k in 0..nu {
                let j = nu - k;
                m[nu - 1 + i][i + k] = eq.a(j).scale(C64::new(j as f64, 0.0));
            }
        }
        let a = det_cofactor(&m);
        let b = det_bareiss(m.clone());
        assert!((&a - &b).max_coeff_norm() < 1e-10 * a.max_coeff_norm().max(1.0));
    }

    #[test]
    fn vieta_ratios() {
        // w^2 + z w + 1 at z=3: e1 = -3, e2 = 1
        let eq = eq_from_pairs(&[&[[1.0, 0.0]], &[[0.0, 0.0], [1.0, 0.0]], &[[1.0, 0.0]]]);
        let e = vieta_products(&eq, C64::new(3.0, 0.0)).unwrap();
        assert!((e[0] - C64::new(-3.0, 0.0)).norm() < 1e-14);
        assert!((e[1] - C64::new(1.0, 0.0)).norm() < 1e-14);
    }
}
