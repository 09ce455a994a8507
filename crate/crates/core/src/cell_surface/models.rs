use super::{CellSurface, SurfaceSpec};
use crate::error::Result;

/// Polygon complex over half-edge labels; converted to slots at the end.
#[derive(Debug, Clone, Default)]
pub(crate) struct Builder {
    pub faces: Vec<Vec<usize>>,
    pub mate: Vec<Option<usize>>,
}

impl Builder {
    pub fn half_edge(&mut self) -> usize {
        self.mate.push(None);
        self.mate.len() - 1
    }

    pub fn edge(&mut self) -> (usize, usize) {
        let a = self.half_edge();
        let b = self.half_edge();
        self.mate[a] = Some(b);
        self.mate[b] = Some(a);
        (a, b)
    }

    /// Fan triangulation of face `f` from its first corner.
    pub fn fan(&mut self, f: usize) {
        let h = self.faces[f].clone();
        let k = h.len();
        if k <= 3 {
            return;
        }
        // d[j] = (corner 0 -> corner j, corner j -> corner 0)
        let mut d = vec![(0, 0); k];
        for dj in d.iter_mut().take(k - 1).skip(2) {
            *dj = self.edge();
        }
        let mut tris = vec![vec![h[0], h[1], d[2].1]];
        for j in 2..k - 2 {
            tris.push(vec![d[j].0, h[j], d[j + 1].1]);
        }
        tris.push(vec![d[k - 2].0, h[k - 2], h[k - 1]]);
        self.faces[f] = tris.remove(0);
        self.faces.extend(tris);
    }

    /// Cone face `f` to a new interior vertex; returns a half-edge starting there.
    pub fn star(&mut self, f: usize) -> usize {
        let h = self.faces[f].clone();
        let k = h.len();
        // spoke j: (corner j -> centre, centre -> corner j)
        let spokes: Vec<(usize, usize)> = (0..k).map(|_| self.edge()).collect();
        let tris: Vec<Vec<usize>> =
            (0..k).map(|i| vec![h[i], spokes[(i + 1) % k].0, spokes[i].1]).collect();
        let centre = spokes[0].1;
        let mut it = tris.into_iter();
        self.faces[f] = it.next().unwrap();
        self.faces.extend(it);
        centre
    }

    /// Converts to a surface. The listed half-edge starts become
    /// punctures; the second list is truncated into boundary circles.
    pub fn build(&self, punctured: &[usize], truncated: &[usize]) -> Result<CellSurface> {
        let raw = self.to_surface(&[])?;
        let trunc_v: Vec<usize> = truncated.iter().map(|&h| raw.start_vertex(self.slot_of(h))).collect();
        let mut b = self.clone();
        if !trunc_v.is_empty() {
            let mut faces = Vec::with_capacity(b.faces.len());
            for face in &self.faces {
                let mut nf = Vec::new();
                for &h in face {
                    if trunc_v.contains(&raw.start_vertex(self.slot_of(h))) {
                        let nb = b.half_edge();
                        nf.push(nb);
                    }
                    nf.push(h);
                }
                faces.push(nf);
            }
            b.faces = faces;
        }
        b.to_surface(punctured)
    }

    fn slot_of(&self, h: usize) -> usize {
        let mut s = 0;
        for face in &self.faces {
            for &x in face {
                if x == h {
                    return s;
                }
                s += 1;
            }
        }
        panic!("half-edge {h} not in any face");
    }

    fn to_surface(&self, punctured: &[usize]) -> Result<CellSurface> {
        let mut slot = vec![usize::MAX; self.mate.len()];
        let mut faces = Vec::new();
        let mut n = 0;
        for face in &self.faces {
            let mut f = Vec::new();
            for &h in face {
                slot[h] = n;
                f.push(n);
                n += 1;
            }
            faces.push(f);
        }
        let mut mate = vec![None; n];
        for (h, m) in self.mate.iter().enumerate() {
            if slot[h] != usize::MAX {
                mate[slot[h]] = m.map(|t| slot[t]);
            }
        }
        let plain = CellSurface::new(faces.clone(), mate.clone(), vec![])?;
        let punct = punctured.iter().map(|&h| plain.start_vertex(slot[h])).collect();
        CellSurface::new(faces, mate, punct)
    }
}

/// Canonical cellulation of a spec.
///
/// Genus g >= 1 starts from the 4g-gon `a1 b1 a1' b1' ...` with one vertex;
/// genus 0 starts from two triangles. When q + m > 0 the polygon is fan
/// triangulated and coned until there are q + m vertices, so that every
/// vertex is a puncture or lies on the boundary (except for the sphere with
/// fewer than three such points). Punctures take the first vertices in
/// creation order, boundary circles the following ones.
pub fn make_surface(spec: SurfaceSpec) -> CellSurface {
    let (b, punct, trunc) = base_builder(spec);
    b.build(&punct, &trunc).expect("canonical model is valid")
}

pub(crate) fn base_builder(spec: SurfaceSpec) -> (Builder, Vec<usize>, Vec<usize>) {
    let SurfaceSpec { genus: g, boundary_count: q, puncture_count: m } = spec;
    let n = q + m;
    let mut b = Builder::default();
    let mut ideal = Vec::new();
    if g >= 1 {
        let mut poly = vec![0; 4 * g];
        for i in 0..g {
            let (a, a_inv) = b.edge();
            let (c, c_inv) = b.edge();
            poly[4 * i] = a;
            poly[4 * i + 1] = c;
            poly[4 * i + 2] = a_inv;
            poly[4 * i + 3] = c_inv;
        }
        b.faces.push(poly.clone());
        if n >= 1 {
            b.fan(0);
            ideal.push(poly[0]);
        }
    } else {
        let e0 = b.edge();
        let e1 = b.edge();
        let e2 = b.edge();
        b.faces.push(vec![e0.0, e1.0, e2.0]);
        b.faces.push(vec![e2.1, e1.1, e0.1]);
        ideal.extend([e0.0, e1.0, e2.0]);
    }
    while ideal.len() < n {
        ideal.push(b.star(0));
    }
    ideal.truncate(n);
    let punct = ideal[..m].to_vec();
    let trunc = ideal[m..].to_vec();
    (b, punct, trunc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_models() {
        let s = make_surface(SurfaceSpec::new(0, 0, 0));
        assert_eq!(s.faces().len(), 2);
        assert_eq!(s.euler_characteristic(), 2);
        let t = make_surface(SurfaceSpec::new(1, 0, 0));
        assert_eq!(t.faces().len(), 1);
        assert_eq!(t.faces()[0].len(), 4);
        assert_eq!(t.num_vertices(), 1);
        assert_eq!(t.euler_characteristic(), 0);
        let g2 = make_surface(SurfaceSpec::new(2, 0, 0));
        assert_eq!(g2.faces()[0].len(), 8);
        assert_eq!(g2.euler_characteristic(), -2);
    }

    #[test]
    fn specs_round_trip_through_models() {
        for g in 0..=3 {
            for q in 0..=3 {
                for m in 0..=4 {
                    let spec = SurfaceSpec::new(g, q, m);
                    let s = make_surface(spec);
                    assert_eq!(s.spec(), spec, "{spec}");
                    assert_eq!(s.euler_characteristic(), spec.euler_char());
                    if q + m >= 3 || (g >= 1 && q + m >= 1) {
                        assert!(s.free_vertices().is_empty(), "{spec}");
                    }
                }
            }
        }
    }
}
