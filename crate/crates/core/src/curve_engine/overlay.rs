//! Planar structure of several curves drawn together on a cellulation.
//!
//! Points on an edge are ordered by a lexicographic key along the side-0
//! slot. Inside a face, endpoints are placed on the boundary in
//! counterclockwise order and chords are straight; crossings along a chord
//! are ordered combinatorially, which is valid whenever the chords meeting
//! a given chord are pairwise disjoint (true for two simple curves, and for
//! one curve against parallel copies of another).

use super::Curve;
use crate::cell_surface::{CellSurface, UnionFind};
use std::collections::HashMap;

pub(crate) type Key = (i64, i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Pt {
    pub edge: usize,
    pub key: Key,
    pub dir: i8,
}

#[derive(Debug, Clone)]
pub(crate) struct Diagram<'a> {
    pub surf: &'a CellSurface,
    pub strands: Vec<Vec<Pt>>,
}

impl<'a> Diagram<'a> {
    /// Points are ordered by position, ties broken by curve index.
    pub fn from_curves(surf: &'a CellSurface, curves: &[&Curve]) -> Diagram<'a> {
        let strands = curves
            .iter()
            .enumerate()
            .map(|(j, c)| {
                c.word()
                    .iter()
                    .map(|x| Pt { edge: x.edge, key: (x.pos as i64, j as i64), dir: x.dir })
                    .collect()
            })
            .collect();
        let mut d = Diagram { surf, strands };
        d.compact();
        d
    }

    /// Renumbers keys on every edge to `(rank, 0)`.
    pub fn compact(&mut self) {
        let mut keys: HashMap<usize, Vec<Key>> = HashMap::new();
        for st in &self.strands {
            for p in st {
                keys.entry(p.edge).or_default().push(p.key);
            }
        }
        for v in keys.values_mut() {
            v.sort_unstable();
            v.dedup();
        }
        for st in &mut self.strands {
            for p in st.iter_mut() {
                p.key = (keys[&p.edge].binary_search(&p.key).unwrap() as i64, 0);
            }
        }
    }

    /// Strand `j` with positions taken from the joint ranks; call after
    /// [`Diagram::compact`].
    pub fn curve(&self, j: usize, host: &crate::cell_surface::Surface) -> Curve {
        Curve::from_ranked(host.clone(), &self.strands[j])
    }

    pub fn overlay(&self) -> Overlay {
        Overlay::build(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct ChordId {
    pub strand: usize,
    pub idx: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum NodeKind {
    Corner { slot: usize },
    /// `end` 0 is the chord start (point `idx`), 1 its end (point `idx+1`).
    End { chord: ChordId, end: u8 },
    Cross { a: ChordId, b: ChordId },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum HeKind {
    /// Along the face boundary, counterclockwise, on segment `seg` of `slot`.
    Fwd { slot: usize, seg: usize },
    Bwd { slot: usize, seg: usize },
    /// Segment `seg` of a chord; `fwd` follows the strand orientation.
    Chord { chord: ChordId, seg: usize, fwd: bool },
}

#[derive(Debug, Clone)]
pub(crate) struct Node {
    pub kind: NodeKind,
    /// Outgoing half-edges in counterclockwise order.
    pub rot: Vec<usize>,
}

#[derive(Debug, Clone)]
pub(crate) struct HalfEdge {
    pub origin: usize,
    pub twin: usize,
    pub kind: HeKind,
    pub rot_idx: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct Overlay {
    pub nodes: Vec<Node>,
    pub hes: Vec<HalfEdge>,
    /// Node sequence of each chord from its start to its end.
    pub chord_nodes: HashMap<ChordId, Vec<usize>>,
    /// Endpoint count on each slot.
    pub slot_points: Vec<usize>,
    pub n_cross: usize,
}

impl Overlay {
    pub fn crossing_count(&self) -> usize {
        self.n_cross
    }

    fn build(d: &Diagram) -> Overlay {
        let s = d.surf;
        let mut nodes: Vec<Node> = Vec::new();
        let mut hes: Vec<HalfEdge> = Vec::new();
        let mut chord_nodes: HashMap<ChordId, Vec<usize>> = HashMap::new();
        let mut slot_points = vec![0; s.num_slots()];
        let mut n_cross = 0;

        // endpoints per face: (slot index in face, along-slot key, chord, end)
        let mut ends: Vec<Vec<((usize, Key), ChordId, u8)>> = vec![Vec::new(); s.faces().len()];
        for (si, st) in d.strands.iter().enumerate() {
            let n = st.len();
            for i in 0..n {
                let p = st[i];
                let q = st[(i + 1) % n];
                let ps = s.edge_side_slot(p.edge, if p.dir > 0 { 1 } else { 0 });
                let qs = s.edge_side_slot(q.edge, if q.dir > 0 { 0 } else { 1 });
                let ch = ChordId { strand: si, idx: i };
                ends[s.slot_face(ps)].push(((s.slot_index(ps), along(s, ps, p.key)), ch, 0));
                ends[s.slot_face(qs)].push(((s.slot_index(qs), along(s, qs, q.key)), ch, 1));
                slot_points[ps] += 1;
                slot_points[qs] += 1;
            }
        }

        let new_he = |hes: &mut Vec<HalfEdge>, a: usize, b: usize, ka: HeKind, kb: HeKind| {
            let i = hes.len();
            hes.push(HalfEdge { origin: a, twin: i + 1, kind: ka, rot_idx: 0 });
            hes.push(HalfEdge { origin: b, twin: i, kind: kb, rot_idx: 0 });
            i
        };

        for (f, face) in s.faces().iter().enumerate() {
            let mut fe = std::mem::take(&mut ends[f]);
            fe.sort_by(|a, b| a.0.cmp(&b.0));
            // boundary sequence
            let base = nodes.len();
            let mut seq: Vec<(usize, usize)> = Vec::new(); // (slot, seg index of the segment starting here)
            let mut k = 0;
            let mut endpoint_pos: HashMap<(ChordId, u8), usize> = HashMap::new();
            for (j, &slot) in face.iter().enumerate() {
                nodes.push(Node { kind: NodeKind::Corner { slot }, rot: Vec::new() });
                seq.push((slot, 0));
                let mut seg = 1;
                while k < fe.len() && fe[k].0 .0 == j {
                    let (_, ch, end) = fe[k];
                    endpoint_pos.insert((ch, end), seq.len());
                    nodes.push(Node { kind: NodeKind::End { chord: ch, end }, rot: Vec::new() });
                    seq.push((slot, seg));
                    seg += 1;
                    k += 1;
                }
            }
            let bn = seq.len();
            let mut fwd_out = vec![0; bn];
            let mut bwd_out = vec![0; bn];
            for b in 0..bn {
                let (slot, seg) = seq[b];
                let h = new_he(&mut hes, base + b, base + (b + 1) % bn, HeKind::Fwd { slot, seg }, HeKind::Bwd { slot, seg });
                fwd_out[b] = h;
                bwd_out[(b + 1) % bn] = h + 1;
            }
            // chords of this face with boundary positions
            let mut chords: Vec<(ChordId, usize, usize)> = Vec::new();
            let mut by_chord: HashMap<ChordId, [usize; 2]> = HashMap::new();
            for (&(ch, end), &pos) in &endpoint_pos {
                by_chord.entry(ch).or_insert([0, 0])[end as usize] = pos;
            }
            for (&ch, &[p0, p1]) in &by_chord {
                chords.push((ch, p0, p1));
            }
            chords.sort_by_key(|c| (c.0.strand, c.0.idx));
            let inside = |x: usize, lo: usize, hi: usize| {
                let (lo, hi) = if lo < hi { (lo, hi) } else { (hi, lo) };
                lo < x && x < hi
            };
            // crossings
            let mut on_chord: Vec<Vec<(usize, usize)>> = vec![Vec::new(); chords.len()]; // (other chord idx, node)
            for i in 0..chords.len() {
                for j in i + 1..chords.len() {
                    let (_, a0, a1) = chords[i];
                    let (_, b0, b1) = chords[j];
                    if inside(b0, a0, a1) != inside(b1, a0, a1) {
                        let id = nodes.len();
                        nodes.push(Node {
                            kind: NodeKind::Cross { a: chords[i].0, b: chords[j].0 },
                            rot: Vec::new(),
                        });
                        on_chord[i].push((j, id));
                        on_chord[j].push((i, id));
                        n_cross += 1;
                    }
                }
            }
            // order crossings along each chord from its start
            for (i, list) in on_chord.iter_mut().enumerate() {
                let x0 = chords[i].1;
                list.sort_by(|&(b, _), &(c, _)| {
                    if b == c {
                        return std::cmp::Ordering::Equal;
                    }
                    let (_, b0, b1) = chords[b];
                    let (_, c0, _) = chords[c];
                    // b first iff c is not on the start's side of b
                    if inside(c0, b0, b1) != inside(x0, b0, b1) {
                        std::cmp::Ordering::Less
                    } else {
                        std::cmp::Ordering::Greater
                    }
                });
            }
            let mut chord_out: Vec<usize> = vec![usize::MAX; bn];
            // rays at crossing nodes: (far boundary position, half-edge)
            let mut rays: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
            for (i, &(ch, p0, p1)) in chords.iter().enumerate() {
                let mut seqn = vec![base + p0];
                seqn.extend(on_chord[i].iter().map(|&(_, n)| n));
                seqn.push(base + p1);
                for t in 0..seqn.len() - 1 {
                    let h = new_he(
                        &mut hes,
                        seqn[t],
                        seqn[t + 1],
                        HeKind::Chord { chord: ch, seg: t, fwd: true },
                        HeKind::Chord { chord: ch, seg: t, fwd: false },
                    );
                    if t == 0 {
                        chord_out[p0] = h;
                    } else {
                        rays.entry(seqn[t]).or_default().push((p1, h));
                    }
                    if t + 1 == seqn.len() - 1 {
                        chord_out[p1] = h + 1;
                    } else {
                        rays.entry(seqn[t + 1]).or_default().push((p0, h + 1));
                    }
                }
                chord_nodes.insert(ch, seqn);
            }
            for b in 0..bn {
                let node = &mut nodes[base + b];
                node.rot = match node.kind {
                    NodeKind::Corner { .. } => vec![fwd_out[b], bwd_out[b]],
                    _ => vec![fwd_out[b], chord_out[b], bwd_out[b]],
                };
            }
            for (n, mut r) in rays {
                r.sort_unstable();
                nodes[n].rot = r.into_iter().map(|x| x.1).collect();
            }
        }
        for n in 0..nodes.len() {
            for (i, &h) in nodes[n].rot.clone().iter().enumerate() {
                hes[h].rot_idx = i;
            }
        }
        Overlay { nodes, hes, chord_nodes, slot_points, n_cross }
    }

    /// Next half-edge around the piece lying on the left of `h`.
    pub fn next(&self, h: usize) -> usize {
        let t = self.hes[h].twin;
        let v = self.hes[t].origin;
        let rot = &self.nodes[v].rot;
        rot[(self.hes[t].rot_idx + rot.len() - 1) % rot.len()]
    }

    /// Interior pieces of all faces as half-edge cycles.
    pub fn pieces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.hes.len()];
        let mut out = Vec::new();
        for h0 in 0..self.hes.len() {
            if seen[h0] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut h = h0;
            let mut exterior = false;
            while !seen[h] {
                seen[h] = true;
                if matches!(self.hes[h].kind, HeKind::Bwd { .. }) {
                    exterior = true;
                }
                cyc.push(h);
                h = self.next(h);
            }
            if !exterior {
                out.push(cyc);
            }
        }
        out
    }
}

/// Position along a slot in the face's counterclockwise direction.
pub(crate) fn along(s: &CellSurface, slot: usize, key: Key) -> Key {
    match s.slot_edge(slot) {
        Some((_, 0)) => key,
        _ => (-key.0, -key.1),
    }
}

/// Pieces grouped into connected regions of the complement of the curves.
#[derive(Debug, Clone)]
pub(crate) struct Regions {
    pub pieces: Vec<Vec<usize>>,
    pub region_of: Vec<usize>,
    pub count: usize,
    /// Piece indices of each region, ascending.
    pub members: Vec<Vec<usize>>,
}

impl Overlay {
    pub fn regions(&self, s: &CellSurface) -> Regions {
        let pieces = self.pieces();
        let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
        for (pi, cyc) in pieces.iter().enumerate() {
            for &h in cyc {
                if let HeKind::Fwd { slot, seg } = self.hes[h].kind {
                    owner.insert((slot, seg), pi);
                }
            }
        }
        let mut uf = UnionFind::new(pieces.len());
        for (&(slot, seg), &pi) in &owner {
            if let Some(m) = s.mate(slot) {
                let other = (m, self.slot_points[slot] - seg);
                if let Some(&pj) = owner.get(&other) {
                    uf.union(pi, pj);
                }
            }
        }
        let mut id = HashMap::new();
        let mut region_of = vec![0; pieces.len()];
        for (pi, r) in region_of.iter_mut().enumerate() {
            let root = uf.find(pi);
            let n = id.len();
            *r = *id.entry(root).or_insert(n);
        }
        let mut members = vec![Vec::new(); id.len()];
        for (pi, &r) in region_of.iter().enumerate() {
            members[r].push(pi);
        }
        Regions { count: id.len(), pieces, region_of, members }
    }
}
