use super::CellSurface;

/// Caps every boundary circle with a one-holed torus.
///
/// Each circle gets one new face: the circle's sides in reverse (glued to
/// them) followed by a commutator `a b a' b'` with `a ~ a'`, `b ~ b'`. Old
/// slots keep their numbers and new slots follow them, so curves move over
/// with the returned map from old interior edges to new edges. A closed
/// surface is returned unchanged.
pub fn hat_extend(s: &CellSurface) -> (CellSurface, Vec<usize>) {
    if s.is_closed() {
        return (s.clone(), (0..s.num_edges()).collect());
    }
    let mut faces = s.faces().to_vec();
    let mut mate: Vec<Option<usize>> = (0..s.num_slots()).map(|t| s.mate(t)).collect();
    for circle in s.boundary_circles() {
        let base = mate.len();
        let k = circle.len();
        mate.extend(std::iter::repeat(None).take(k + 4));
        let mut face = Vec::with_capacity(k + 4);
        for (i, &t) in circle.iter().enumerate().rev() {
            let u = base + i;
            mate[u] = Some(t);
            mate[t] = Some(u);
            face.push(u);
        }
        let (a, b, a2, b2) = (base + k, base + k + 1, base + k + 2, base + k + 3);
        mate[a] = Some(a2);
        mate[a2] = Some(a);
        mate[b] = Some(b2);
        mate[b2] = Some(b);
        face.extend([a, b, a2, b2]);
        faces.push(face);
    }
    let plain = CellSurface::new(faces.clone(), mate.clone(), vec![]).expect("capped surface is valid");
    let punct = s
        .punctures()
        .iter()
        .map(|&v| {
            let t = (0..s.num_slots()).find(|&t| s.start_vertex(t) == v).unwrap();
            plain.start_vertex(t)
        })
        .collect();
    let hat = CellSurface::new(faces, mate, punct).expect("capped surface is valid");
    let map = (0..s.num_edges()).map(|e| hat.slot_edge(s.edge_slots(e).0).unwrap().0).collect();
    (hat, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell_surface::{make_surface, SurfaceSpec};

    #[test]
    fn capping_adds_genus() {
        for g in 0..=3 {
            for q in 0..=3 {
                for m in 0..=4 {
                    let s = make_surface(SurfaceSpec::new(g, q, m));
                    let (h, map) = hat_extend(&s);
                    assert_eq!(h.spec(), SurfaceSpec::new(g + q, 0, m));
                    assert_eq!(map.len(), s.num_edges());
                    for (e, &f) in map.iter().enumerate() {
                        assert_eq!(h.edge_slots(f), s.edge_slots(e));
                    }
                }
            }
        }
    }
}
