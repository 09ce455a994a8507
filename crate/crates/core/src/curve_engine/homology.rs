use super::Curve;
use crate::cell_surface::CellSurface;
use num_rational::Ratio;
use num_traits::{One, Zero};

type Q = Ratio<i64>;

/// Homology class of the oriented curve in the host minus its punctures.
///
/// The curve is read as the cochain counting signed crossings of each
/// edge. Its class is recorded by pairing with a fixed basis of edge
/// cycles relative to the punctures and the boundary, taken modulo face
/// boundaries; isotopy across a free vertex does not change the pairings.
pub fn homology_class(a: &Curve) -> Vec<i64> {
    let s = a.surface();
    let mut cochain = vec![0i64; s.num_edges()];
    for c in a.word() {
        cochain[c.edge] += c.dir as i64;
    }
    cycle_basis(s).iter().map(|z| z.iter().zip(&cochain).map(|(x, y)| x * y).sum()).collect()
}

/// Integral relative cycles spanning a complement of the face boundaries.
pub(crate) fn cycle_basis(s: &CellSurface) -> Vec<Vec<i64>> {
    let ne = s.num_edges();
    let free = s.free_vertices();
    let incidence: Vec<Vec<Q>> = free
        .iter()
        .map(|&v| {
            (0..ne)
                .map(|e| {
                    let t = s.edge_side_slot(e, 0);
                    let mut x = 0;
                    if s.end_vertex(t) == v {
                        x += 1;
                    }
                    if s.start_vertex(t) == v {
                        x -= 1;
                    }
                    Q::from_integer(x)
                })
                .collect()
        })
        .collect();
    let cycles = nullspace(incidence, ne);
    let mut span: Vec<Vec<Q>> = Vec::new();
    for face in s.faces() {
        let mut row = vec![Q::zero(); ne];
        for &t in face {
            if let Some((e, side)) = s.slot_edge(t) {
                row[e] += Q::from_integer(if side == 0 { 1 } else { -1 });
            }
        }
        insert_independent(&mut span, row);
    }
    cycles.into_iter().filter(|z| insert_independent(&mut span, z.clone())).map(|z| integral(&z)).collect()
}

/// Reduces `v` against the echelon rows in `span`; appends it and returns
/// true when it is independent.
fn insert_independent(span: &mut Vec<Vec<Q>>, mut v: Vec<Q>) -> bool {
    for row in span.iter() {
        let p = row.iter().position(|x| !x.is_zero()).unwrap();
        if !v[p].is_zero() {
            let f = v[p] / row[p];
            for (x, y) in v.iter_mut().zip(row) {
                *x -= f * y;
            }
        }
    }
    match v.iter().position(|x| !x.is_zero()) {
        None => false,
        Some(p) => {
            let lead = v[p];
            for x in v.iter_mut() {
                *x /= lead;
            }
            for row in span.iter_mut() {
                if !row[p].is_zero() {
                    let f = row[p];
                    for (x, y) in row.iter_mut().zip(&v) {
                        *x -= f * y;
                    }
                }
            }
            span.push(v);
            true
        }
    }
}

fn nullspace(mut m: Vec<Vec<Q>>, n: usize) -> Vec<Vec<Q>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let lead = m[r][c];
        for x in m[r].iter_mut() {
            *x /= lead;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&row) {
                    *x -= f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|fc| {
            let mut v = vec![Q::zero(); n];
            v[fc] = Q::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][fc];
            }
            v
        })
        .collect()
}

fn integral(v: &[Q]) -> Vec<i64> {
    let l = v.iter().fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()));
    let w: Vec<i64> = v.iter().map(|x| (x * Q::from_integer(l)).to_integer()).collect();
    let g = w.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
    w.iter().map(|x| x / g.max(1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell_surface::{make_surface, SurfaceSpec};
    use crate::curve_engine::Crossing;
    use std::sync::Arc;

    #[test]
    fn torus_classes() {
        let t = Arc::new(make_surface(SurfaceSpec::new(1, 0, 0)));
        assert_eq!(cycle_basis(&t).len(), 2);
        let m = Curve::new(t.clone(), vec![Crossing { edge: 0, pos: 0, dir: 1 }]).unwrap();
        let v = homology_class(&m);
        assert!(v.iter().any(|&x| x != 0));
        let w: Vec<i64> = homology_class(&m.reverse());
        assert_eq!(w, v.iter().map(|x| -x).collect::<Vec<_>>());
    }

    #[test]
    fn ranks() {
        // punctured and bounded surfaces: rank of the first homology of the
        // complement of the punctures
        for (g, q, m, rank) in [(0, 0, 4, 3), (2, 0, 0, 4), (1, 1, 0, 2), (0, 2, 1, 2), (1, 0, 2, 3)] {
            let s = make_surface(SurfaceSpec::new(g, q, m));
            assert_eq!(cycle_basis(&s).len(), rank, "({g},{q},{m})");
        }
    }
}
