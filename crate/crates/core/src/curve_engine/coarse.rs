//! Searching for curves on a one-face model of a surface.
//!
//! Faces are merged along a spanning tree of the dual graph. Curves on the
//! merged complex need far fewer crossings, and each one refines uniquely:
//! a chord between two sides of the merged polygon crosses exactly the
//! tree edges on the path between the faces of its endpoints, and chords
//! crossing one tree edge are nested, so their order along it is the order
//! of their endpoints on either side.

use super::enumerate::curves_of_length;
use super::overlay::along;
use super::{in_slot, out_slot, Crossing, Curve};
use crate::cell_surface::{CellSurface, Surface};
use crate::error::Result;
use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

pub(crate) struct Coarsening {
    fine: Surface,
    coarse: Surface,
    /// Fine slot of each coarse slot; increasing, so edge sides agree.
    fine_slot: Vec<usize>,
    /// Dual tree: parent face and the fine slot of the child crossed to
    /// reach it.
    parent: Vec<Option<(usize, usize)>>,
    depth: Vec<usize>,
    /// Faces on the side-0 slot's side of each removed edge.
    side0_faces: HashMap<usize, Vec<bool>>,
}

impl Coarsening {
    pub fn new(fine: &Surface) -> Coarsening {
        let s = &**fine;
        let nf = s.faces().len();
        let mut parent = vec![None; nf];
        let mut depth = vec![0; nf];
        let mut seen = vec![false; nf];
        let mut removed = vec![false; s.num_slots()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(f) = queue.pop_front() {
            for &t in &s.faces()[f] {
                let Some(m) = s.mate(t) else { continue };
                let g = s.slot_face(m);
                if !seen[g] {
                    seen[g] = true;
                    parent[g] = Some((f, m));
                    depth[g] = depth[f] + 1;
                    removed[t] = true;
                    removed[m] = true;
                    queue.push_back(g);
                }
            }
        }
        let fine_slot: Vec<usize> = (0..s.num_slots()).filter(|&t| !removed[t]).collect();
        let mut coarse_slot = vec![None; s.num_slots()];
        for (i, &t) in fine_slot.iter().enumerate() {
            coarse_slot[t] = Some(i);
        }
        let next = |t: usize| {
            let mut u = s.next_slot(t);
            while removed[u] {
                u = s.next_slot(s.mate(u).unwrap());
            }
            u
        };
        let mut faces = Vec::new();
        let mut done = vec![false; s.num_slots()];
        for &t0 in &fine_slot {
            if done[t0] {
                continue;
            }
            let mut face = Vec::new();
            let mut t = t0;
            while !done[t] {
                done[t] = true;
                face.push(coarse_slot[t].unwrap());
                t = next(t);
            }
            faces.push(face);
        }
        let mate: Vec<Option<usize>> =
            fine_slot.iter().map(|&t| s.mate(t).map(|m| coarse_slot[m].unwrap())).collect();
        let plain = CellSurface::new(faces.clone(), mate.clone(), vec![]).expect("merged complex is valid");
        let punct = s
            .punctures()
            .iter()
            .map(|&v| {
                let t = fine_slot.iter().position(|&t| s.start_vertex(t) == v).expect("puncture keeps a corner");
                plain.start_vertex(t)
            })
            .collect();
        let coarse = Arc::new(CellSurface::new(faces, mate, punct).expect("merged complex is valid"));

        let mut side0_faces = HashMap::new();
        for e in 0..s.num_edges() {
            let (s0, _) = s.edge_slots(e);
            if !removed[s0] {
                continue;
            }
            // faces reachable from the face of s0 without crossing e
            let mut mark = vec![false; nf];
            let start = s.slot_face(s0);
            mark[start] = true;
            let mut q = VecDeque::from([start]);
            while let Some(f) = q.pop_front() {
                for &t in &s.faces()[f] {
                    if !removed[t] || s.slot_edge(t).unwrap().0 == e {
                        continue;
                    }
                    let g = s.slot_face(s.mate(t).unwrap());
                    if !mark[g] {
                        mark[g] = true;
                        q.push_back(g);
                    }
                }
            }
            side0_faces.insert(e, mark);
        }
        Coarsening { fine: fine.clone(), coarse, fine_slot, parent, depth, side0_faces }
    }

    #[cfg(test)]
    pub fn coarse(&self) -> &Surface {
        &self.coarse
    }

    /// Exit slots (fine) of the tree edges crossed going from face `a` to `b`.
    fn tree_path(&self, mut a: usize, mut b: usize) -> Vec<usize> {
        let s = &*self.fine;
        let mut up = Vec::new();
        let mut down = Vec::new();
        while self.depth[a] > self.depth[b] {
            let (p, m) = self.parent[a].unwrap();
            up.push(m);
            a = p;
        }
        while self.depth[b] > self.depth[a] {
            let (p, m) = self.parent[b].unwrap();
            down.push(m);
            b = p;
        }
        while a != b {
            let (pa, ma) = self.parent[a].unwrap();
            up.push(ma);
            a = pa;
            let (pb, mb) = self.parent[b].unwrap();
            down.push(mb);
            b = pb;
        }
        // going down into a child leaves the parent through the mate of the
        // child's slot
        up.extend(down.into_iter().rev().map(|m| s.mate(m).unwrap()));
        up
    }

    /// The curve on the fine surface that a coarse curve stands for.
    pub fn refine(&self, c: &Curve) -> Result<Curve> {
        let s = &*self.fine;
        let k = &*self.coarse;
        let w = c.word();
        let n = w.len();
        // fine crossings with, for tree edges, the chord they come from
        let mut out: Vec<(usize, i8, Option<usize>)> = Vec::new();
        for i in 0..n {
            let p = w[i];
            let q = w[(i + 1) % n];
            let ks0 = k.edge_side_slot(p.edge, 0);
            let fe = s.slot_edge(self.fine_slot[ks0]).unwrap().0;
            out.push((fe, p.dir, None));
            let from = self.fine_slot[in_slot(k, p)];
            let to = self.fine_slot[out_slot(k, q)];
            for t in self.tree_path(s.slot_face(from), s.slot_face(to)) {
                let (e, side) = s.slot_edge(t).unwrap();
                out.push((e, if side == 0 { 1 } else { -1 }, Some(i)));
            }
        }
        // coarse boundary position of both chord endpoints
        let face = &k.faces()[0];
        let nb = face.len();
        let endpoint = |i: usize, end: u8| -> (usize, usize, (i64, i64)) {
            let slot = if end == 0 { in_slot(k, w[i]) } else { out_slot(k, w[(i + 1) % n]) };
            let pos = if end == 0 { w[i].pos } else { w[(i + 1) % n].pos };
            (slot, k.slot_index(slot), along(k, slot, (pos as i64, 0)))
        };
        let mut pos_of = vec![0usize; out.len()];
        let mut kept = vec![0usize; out.len()];
        let mut seen = 0;
        let mut by_edge: HashMap<usize, Vec<usize>> = HashMap::new();
        for (j, x) in out.iter().enumerate() {
            if x.2.is_none() {
                kept[j] = seen;
                seen += 1;
            }
            by_edge.entry(x.0).or_default().push(j);
        }
        for (e, idx) in by_edge {
            let Some(mark) = self.side0_faces.get(&e) else {
                // a kept edge keeps the coarse order
                for j in idx {
                    pos_of[j] = w[kept[j]].pos;
                }
                continue;
            };
            let in_a = |cs: usize| mark[s.slot_face(self.fine_slot[cs])];
            let i0 = (0..nb).find(|&x| in_a(face[x]) && !in_a(face[(x + nb - 1) % nb])).unwrap_or(0);
            let mut v: Vec<((usize, (i64, i64)), usize)> = idx
                .iter()
                .map(|&j| {
                    let ch = out[j].2.unwrap();
                    let a = endpoint(ch, 0);
                    let b = endpoint(ch, 1);
                    let (_, si, al) = if in_a(a.0) { a } else { b };
                    (((si + nb - i0) % nb, al), j)
                })
                .collect();
            v.sort_unstable();
            let m = v.len();
            for (r, &(_, j)) in v.iter().enumerate() {
                pos_of[j] = m - 1 - r;
            }
        }
        let word = out.iter().zip(&pos_of).map(|(&(edge, dir, _), &pos)| Crossing { edge, pos, dir }).collect();
        Curve::new(self.fine.clone(), word)
    }

    /// Refined curves of `len` crossings on the merged complex.
    pub fn curves_of_length(&self, len: usize) -> Vec<Curve> {
        curves_of_length(&self.coarse, len).iter().filter_map(|c| self.refine(c).ok()).collect()
    }

}
