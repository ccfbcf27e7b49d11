//! Shared fixtures for the criterion benches.

use std::sync::Arc;

use qcat::{q, Grid, IntervalSet, QCat, TNorm, UnitRational};

/// A chain `x0 -> x1 -> ... ` on `n` points with `r(xi, xj)` falling off
/// with distance, closed under `t`.
pub fn chain(t: &Arc<TNorm>, n: usize) -> QCat {
    let steps: Vec<UnitRational> = (0..n).map(|i| q(3 + (i as u64 % 5), 8)).collect();
    let mut matrix = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let value = if x == y {
                UnitRational::one()
            } else {
                let (lo, hi) = (x.min(y), x.max(y));
                steps[lo..hi].iter().fold(UnitRational::one(), |acc, s| t.eval(&acc, s))
            };
            matrix.push(value);
        }
    }
    QCat::indexed(t.clone(), matrix).expect("square")
}

/// Raw step values for a final lift: edges `i -> i+1` only.
pub fn path_legs(t: &Arc<TNorm>, n: usize) -> Vec<(QCat, Vec<usize>)> {
    (0..n.saturating_sub(1))
        .map(|i| {
            let c = QCat::two_point(t.clone(), q(7, 8), q(5, 8));
            (c, vec![i, i + 1])
        })
        .collect()
}

/// `K = {k/d}` together with its points.
pub fn uniform_k(d: u64) -> (IntervalSet, Vec<UnitRational>) {
    let points = Grid::uniform(d).into_values();
    (IntervalSet::points(points.clone()), points)
}

/// Rational sample points for the t-norm kernel.
pub fn sample(n: u64) -> Vec<UnitRational> {
    Grid::farey(n).into_values()
}
