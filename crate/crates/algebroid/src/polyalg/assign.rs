//! Minimum-cost assignment for small square cost matrices.
//!
//! Shortest-augmenting-path formulation with potentials; cubic in the
//! matrix size, which never exceeds the sheet count here.

use alloc::vec;
use alloc::vec::Vec;

use super::types::SpherePoint;

/// For each row, the assigned column, plus the total cost.
pub fn min_cost_assignment_matrix(cost: &[Vec<f64>]) -> (Vec<usize>, f64) {
    let n = cost.len();
    if n == 0 {
        return (Vec::new(), 0.0);
    }
    let inf = f64::INFINITY;
    // 1-indexed potentials and matching; p[j] = row matched to column j
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0usize;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut row_to_col = vec![0usize; n];
    for j in 1..=n {
        if p[j] > 0 {
            row_to_col[p[j] - 1] = j - 1;
        }
    }
    let total = (0..n).map(|i| cost[i][row_to_col[i]]).sum();
    (row_to_col, total)
}

/// Optimal matching between two equally sized sphere-point lists under the
/// chordal metric. Returns `perm` with `perm[i] = j` meaning `a[i] -> b[j]`,
/// plus the total distance.
pub fn min_cost_assignment(a: &[SpherePoint], b: &[SpherePoint]) -> (Vec<usize>, f64) {
    let cost: Vec<Vec<f64>> = a
        .iter()
        .map(|x| b.iter().map(|y| x.chordal(y)).collect())
        .collect();
    min_cost_assignment_matrix(&cost)
}
