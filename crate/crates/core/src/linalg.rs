//! Gaussian elimination over a coefficient field.
//!
//! Exact for [`Scalar`](crate::scalar::Scalar): pivots are any nonzero entry.
//! For `f64` the largest-magnitude entry is chosen and entries below the
//! float tolerance count as zero.

use crate::scalar::Coefficient;

fn pick_pivot<C: Coefficient>(rows: &[Vec<C>], col: usize, from: usize) -> Option<usize> {
    let candidates = (from..rows.len()).filter(|&r| !rows[r][col].is_negligible());
    if C::EXACT {
        candidates.min_by_key(|&r| rows[r].iter().filter(|c| !c.is_zero()).count())
    } else {
        candidates.max_by(|&a, &b| rows[a][col].to_f64().abs().total_cmp(&rows[b][col].to_f64().abs()))
    }
}

/// Reduces `rows` in place to reduced row echelon form and returns the pivot columns.
pub fn row_reduce<C: Coefficient>(rows: &mut [Vec<C>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = pick_pivot(rows, col, r) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].try_inverse().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for other in 0..rows.len() {
            if other == r || rows[other][col].is_zero() {
                continue;
            }
            let factor = rows[other][col].clone();
            let pivot_row = rows[r].clone();
            for (x, p) in rows[other].iter_mut().zip(&pivot_row).take(ncols) {
                *x = x.clone() - factor.clone() * p.clone();
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rank<C: Coefficient>(vectors: &[Vec<C>]) -> usize {
    let mut rows = vectors.to_vec();
    row_reduce(&mut rows).len()
}

/// Solves `Σ xᵢ·vectors[i] = target` for `x`, or `None` when `target` is
/// outside the span. The spanning vectors must be linearly independent.
pub fn solve_in_span<C: Coefficient>(vectors: &[Vec<C>], target: &[C]) -> Option<Vec<C>> {
    let k = vectors.len();
    // augmented system: one row per coordinate, columns x₁..x_k | target
    let mut rows: Vec<Vec<C>> = (0..target.len())
        .map(|i| {
            let mut row: Vec<C> = vectors.iter().map(|v| v[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut rows);
    if pivots.contains(&k) || pivots.len() < k {
        return None;
    }
    Some((0..k).map(|i| rows[i][k].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn s(n: i64) -> Scalar {
        Scalar::from_integer(n)
    }

    #[test]
    fn rank_of_dependent_set() {
        let v = vec![vec![s(1), s(2), s(3)], vec![s(2), s(4), s(6)], vec![s(0), s(1), s(1)]];
        assert_eq!(rank(&v), 2);
        assert_eq!(rank::<Scalar>(&[]), 0);
    }

    #[test]
    fn solve_exact_with_surds() {
        let r2 = Scalar::sqrt2();
        let v = vec![vec![s(1), r2.clone()], vec![s(0), s(1)]];
        // 3·v₀ - √2·v₁ = (3, 3√2 - √2)
        let target = vec![s(3), s(3) * r2.clone() - r2.clone()];
        assert_eq!(solve_in_span(&v, &target), Some(vec![s(3), -r2]));
        assert_eq!(solve_in_span(&[vec![s(1), s(0)]], &[s(0), s(1)]), None);
    }

    #[test]
    fn solve_float() {
        let v = vec![vec![1.0, 1.0], vec![1.0, -1.0]];
        let x = solve_in_span(&v, &[3.0, 1.0]).unwrap();
        assert!((x[0] - 2.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12);
    }
}
