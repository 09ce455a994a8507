use mcgkit::cell_surface::{make_surface, Surface, SurfaceSpec};
use mcgkit::curve_engine::{
    curves_of_length, dehn_twist, homology_class, intersection_number, is_isotopic, reduce_with_order, Curve,
    ReduceOrder,
};
use std::sync::Arc;

fn surface(g: usize, q: usize, m: usize) -> Surface {
    Arc::new(make_surface(SurfaceSpec::new(g, q, m)))
}

/// Signed crossings with each edge of the one-vertex torus.
fn torus_class(c: &Curve) -> (i64, i64) {
    let mut v = [0i64; 2];
    for x in c.word() {
        v[x.edge] += x.dir as i64;
    }
    (v[0], v[1])
}

fn torus_curves(max_len: usize) -> Vec<Curve> {
    let t = surface(1, 0, 0);
    (1..=max_len).flat_map(|l| curves_of_length(&t, l)).collect()
}

#[test]
fn torus_intersections_match_determinants() {
    let cs = torus_curves(4);
    assert!(cs.len() > 10);
    for a in &cs {
        for b in &cs {
            let (p, q) = torus_class(a);
            let (r, s) = torus_class(b);
            let det = (p * s - q * r).unsigned_abs() as usize;
            assert_eq!(intersection_number(a, b).unwrap(), det, "{:?} {:?}", a.word(), b.word());
        }
    }
}

#[test]
fn torus_twists_add_classes() {
    let cs = torus_curves(3);
    for a in cs.iter().take(6) {
        for b in cs.iter().take(6) {
            for n in [-2i64, -1, 1, 2] {
                let t = dehn_twist(b, a, n).unwrap();
                let (p, q) = torus_class(a);
                let (r, s) = torus_class(b);
                let (x, y) = torus_class(&t);
                let k = p * s - q * r;
                // in these dual coordinates a twist adds n k copies of a
                assert_eq!((x, y), (r + n * k * p, s + n * k * q), "{:?} along {:?} by {n}", b.word(), a.word());
            }
        }
    }
}

/// Cup product of the crossing cochains on the one-vertex octagon, whose
/// edges pair up into two handles.
fn genus_two_algebraic(a: &Curve, b: &Curve) -> i64 {
    let co = |c: &Curve| {
        let mut v = [0i64; 4];
        for x in c.word() {
            v[x.edge] += x.dir as i64;
        }
        v
    };
    let (x, y) = (co(a), co(b));
    (x[0] * y[1] - x[1] * y[0]) + (x[2] * y[3] - x[3] * y[2])
}

#[test]
fn genus_two_parity_and_lower_bound() {
    let s = surface(2, 0, 0);
    let cs: Vec<Curve> = (1..=3).flat_map(|l| curves_of_length(&s, l)).collect();
    for a in cs.iter().take(40) {
        for b in cs.iter().take(40) {
            let i = intersection_number(a, b).unwrap() as i64;
            let alg = genus_two_algebraic(a, b);
            assert!(i >= alg.abs(), "{:?} {:?}", a.word(), b.word());
            assert_eq!((i - alg).rem_euclid(2), 0);
            assert_eq!(intersection_number(b, a).unwrap() as i64, i);
            assert_eq!(homology_class(a).len(), 4);
        }
    }
}

#[test]
fn confluence_over_random_orders() {
    let s = surface(0, 0, 4);
    let cs: Vec<Curve> = (1..=4).flat_map(|l| curves_of_length(&s, l)).collect();
    for a in cs.iter().take(10) {
        for b in cs.iter().take(10) {
            let base = intersection_number(a, b).unwrap();
            for seed in 0..5 {
                let (_, _, n) = reduce_with_order(a, b, ReduceOrder::Random(seed)).unwrap();
                assert_eq!(n, base);
            }
        }
    }
}

#[test]
fn isotopy_is_stable_under_disjoint_twists() {
    let cs = torus_curves(2);
    for a in &cs {
        let t = dehn_twist(a, a, 2).unwrap();
        assert!(is_isotopic(a, &t, true).unwrap());
        assert!(!is_isotopic(a, &a.reverse(), true).unwrap());
        assert!(is_isotopic(a, &a.reverse(), false).unwrap());
    }
}
