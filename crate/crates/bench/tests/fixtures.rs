use std::sync::Arc;

use qcat::{final_lift, Leg, TNorm};
use qcat_bench::{chain, path_legs, sample, uniform_k};

#[test]
fn chains_are_categories() {
    for t in [TNorm::godel(), TNorm::lukasiewicz(), TNorm::product(), TNorm::remark4()] {
        let t = Arc::new(t);
        for n in 1..=6 {
            assert!(chain(&t, n).is_valid(), "{t} on {n} points");
        }
    }
}

#[test]
fn path_lift_spans_the_carrier() {
    let t = Arc::new(TNorm::lukasiewicz());
    let legs = path_legs(&t, 5);
    assert_eq!(legs.len(), 4);
    let legs: Vec<Leg<'_>> = legs.iter().map(|(c, m)| Leg::new(c, m)).collect();
    let c = final_lift(t, (0..5).map(|i| i.to_string()).collect(), &legs).unwrap();
    assert!(c.is_valid());
    assert_eq!(c.len(), 5);
}

#[test]
fn samples_and_grids() {
    let (k, points) = uniform_k(4);
    assert_eq!(points.len(), 5);
    assert!(points.iter().all(|p| k.contains(p)));
    assert_eq!(sample(8).len(), 23);
}
