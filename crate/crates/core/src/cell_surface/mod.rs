//! Combinatorial oriented surfaces: polygons, orientation-reversing side
//! gluings and marked vertices.
//!
//! Every face is traversed counterclockwise. A slot is one side of one face.
//! Glued slots run in opposite directions, so the result is always oriented.
//! Unglued slots form the boundary. Vertices are classes of slot starts.

mod hat;
mod models;
mod pants;

pub use hat::hat_extend;
pub use models::make_surface;
pub use pants::{decompose, pants_curves_on, pants_decomposition, PantalonType, PantsDecomposition, PantsPiece};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Shared handle to an immutable surface.
pub type Surface = Arc<CellSurface>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub genus: usize,
    pub boundary_count: usize,
    pub puncture_count: usize,
}

impl SurfaceSpec {
    pub const fn new(genus: usize, boundary_count: usize, puncture_count: usize) -> Self {
        SurfaceSpec { genus, boundary_count, puncture_count }
    }

    /// Punctures are marked points, so they do not enter the count.
    pub fn euler_char(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_count as i64
    }

    /// Number of curves in a pants decomposition, when one exists.
    pub fn complexity(&self) -> i64 {
        3 * self.genus as i64 - 3 + self.boundary_count as i64 + self.puncture_count as i64
    }

    /// Number of pantalons in a decomposition, when one exists.
    pub fn piece_count(&self) -> i64 {
        2 * self.genus as i64 - 2 + self.boundary_count as i64 + self.puncture_count as i64
    }

    pub fn has_pants_decomposition(&self) -> bool {
        let (g, q, m) = (self.genus, self.boundary_count, self.puncture_count);
        !matches!((g, q), (0, 0) if m <= 3)
            && !matches!((g, q), (0, 1) if m <= 1)
            && !(g == 0 && q == 2 && m == 0)
            && !(g == 1 && q == 0 && m == 0)
    }

    pub fn is_sphere(&self) -> bool {
        self.genus == 0 && self.boundary_count == 0
    }
    pub fn is_disk(&self) -> bool {
        self.genus == 0 && self.boundary_count == 1
    }
    pub fn is_annulus(&self) -> bool {
        self.genus == 0 && self.boundary_count == 2
    }
}

impl std::fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(g={},q={},m={})", self.genus, self.boundary_count, self.puncture_count)
    }
}

/// Side of an interior edge: 0 for the lower slot, 1 for its mate.
pub type Side = u8;

#[derive(Debug, Clone)]
pub struct CellSurface {
    faces: Vec<Vec<usize>>,
    mate: Vec<Option<usize>>,
    punctures: Vec<usize>,
    slot_face: Vec<usize>,
    slot_index: Vec<usize>,
    start_vertex: Vec<usize>,
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
    slot_edge: Vec<Option<(usize, Side)>>,
    boundary_circles: Vec<Vec<usize>>,
    marked: Vec<bool>,
}

impl PartialEq for CellSurface {
    fn eq(&self, other: &Self) -> bool {
        self.faces == other.faces && self.mate == other.mate && self.punctures == other.punctures
    }
}
impl Eq for CellSurface {}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceJson {
    pub faces: Vec<Vec<usize>>,
    pub gluing: Vec<[usize; 2]>,
    pub punctures: Vec<usize>,
}

pub(crate) struct UnionFind(Vec<usize>);

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl CellSurface {
    /// Builds a surface from faces (slot lists), a partial slot pairing and
    /// punctured vertex ids. Slots must be exactly `0..S`.
    pub fn new(faces: Vec<Vec<usize>>, mate: Vec<Option<usize>>, punctures: Vec<usize>) -> Result<Self> {
        let n_slots = mate.len();
        let mut slot_face = vec![usize::MAX; n_slots];
        let mut slot_index = vec![0; n_slots];
        for (f, face) in faces.iter().enumerate() {
            if face.is_empty() {
                return Err(Error::InvalidSurface(format!("face {f} has no sides")));
            }
            for (i, &s) in face.iter().enumerate() {
                if s >= n_slots || slot_face[s] != usize::MAX {
                    return Err(Error::InvalidSurface(format!("slot {s} is out of range or repeated")));
                }
                slot_face[s] = f;
                slot_index[s] = i;
            }
        }
        if let Some(s) = slot_face.iter().position(|&f| f == usize::MAX) {
            return Err(Error::InvalidSurface(format!("slot {s} belongs to no face")));
        }
        for (s, m) in mate.iter().enumerate() {
            if let Some(t) = *m {
                if t >= n_slots || t == s || mate[t] != Some(s) {
                    return Err(Error::InvalidSurface(format!("gluing of slot {s} is not an involution")));
                }
            }
        }
        let next = |s: usize| {
            let face = &faces[slot_face[s]];
            face[(slot_index[s] + 1) % face.len()]
        };
        let mut uf = UnionFind::new(n_slots);
        for s in 0..n_slots {
            if let Some(t) = mate[s] {
                // start(s) = end(t), end(s) = start(t)
                uf.union(s, next(t));
            }
        }
        let mut class_id = vec![usize::MAX; n_slots];
        let mut start_vertex = vec![0; n_slots];
        let mut n_vertices = 0;
        for s in 0..n_slots {
            let r = uf.find(s);
            if class_id[r] == usize::MAX {
                class_id[r] = n_vertices;
                n_vertices += 1;
            }
            start_vertex[s] = class_id[r];
        }
        let mut edges = Vec::new();
        let mut slot_edge = vec![None; n_slots];
        for s in 0..n_slots {
            if let Some(t) = mate[s] {
                if s < t {
                    slot_edge[s] = Some((edges.len(), 0));
                    slot_edge[t] = Some((edges.len(), 1));
                    edges.push((s, t));
                }
            }
        }
        // boundary circles: follow boundary slots vertex to vertex
        let mut bstart = vec![usize::MAX; n_vertices];
        for s in 0..n_slots {
            if mate[s].is_none() {
                if bstart[start_vertex[s]] != usize::MAX {
                    return Err(Error::InvalidSurface(format!("vertex {} is pinched on the boundary", start_vertex[s])));
                }
                bstart[start_vertex[s]] = s;
            }
        }
        let mut seen = vec![false; n_slots];
        let mut boundary_circles = Vec::new();
        for s in 0..n_slots {
            if mate[s].is_some() || seen[s] {
                continue;
            }
            let mut circle = Vec::new();
            let mut cur = s;
            while !seen[cur] {
                seen[cur] = true;
                circle.push(cur);
                let e = start_vertex[next(cur)];
                cur = bstart[e];
                if cur == usize::MAX {
                    return Err(Error::InvalidSurface("boundary does not close up".into()));
                }
            }
            boundary_circles.push(circle);
        }
        let mut marked = vec![false; n_vertices];
        let mut punctures = punctures;
        punctures.sort_unstable();
        punctures.dedup();
        for &v in &punctures {
            if v >= n_vertices {
                return Err(Error::InvalidSurface(format!("puncture {v} is not a vertex")));
            }
            if bstart[v] != usize::MAX {
                return Err(Error::InvalidSurface(format!("puncture {v} lies on the boundary")));
            }
            marked[v] = true;
        }
        // connectivity through gluings
        let mut fuf = UnionFind::new(faces.len());
        for s in 0..n_slots {
            if let Some(t) = mate[s] {
                fuf.union(slot_face[s], slot_face[t]);
            }
        }
        if (0..faces.len()).any(|f| fuf.find(f) != fuf.find(0)) {
            return Err(Error::InvalidSurface("surface is not connected".into()));
        }
        Ok(CellSurface {
            faces,
            mate,
            punctures,
            slot_face,
            slot_index,
            start_vertex,
            n_vertices,
            edges,
            slot_edge,
            boundary_circles,
            marked,
        })
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }
    pub fn num_slots(&self) -> usize {
        self.mate.len()
    }
    pub fn mate(&self, s: usize) -> Option<usize> {
        self.mate[s]
    }
    pub fn punctures(&self) -> &[usize] {
        &self.punctures
    }
    pub fn is_marked(&self, v: usize) -> bool {
        self.marked[v]
    }
    pub fn num_vertices(&self) -> usize {
        self.n_vertices
    }
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }
    /// Slots `(side 0, side 1)` of an interior edge.
    pub fn edge_slots(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }
    pub fn slot_edge(&self, s: usize) -> Option<(usize, Side)> {
        self.slot_edge[s]
    }
    pub fn edge_side_slot(&self, e: usize, side: Side) -> usize {
        if side == 0 {
            self.edges[e].0
        } else {
            self.edges[e].1
        }
    }
    pub fn slot_face(&self, s: usize) -> usize {
        self.slot_face[s]
    }
    pub fn slot_index(&self, s: usize) -> usize {
        self.slot_index[s]
    }
    pub fn next_slot(&self, s: usize) -> usize {
        let face = &self.faces[self.slot_face[s]];
        face[(self.slot_index[s] + 1) % face.len()]
    }
    pub fn start_vertex(&self, s: usize) -> usize {
        self.start_vertex[s]
    }
    pub fn end_vertex(&self, s: usize) -> usize {
        self.start_vertex[self.next_slot(s)]
    }
    pub fn boundary_circles(&self) -> &[Vec<usize>] {
        &self.boundary_circles
    }
    pub fn is_closed(&self) -> bool {
        self.boundary_circles.is_empty()
    }

    pub fn euler_characteristic(&self) -> i64 {
        let boundary_slots = self.mate.iter().filter(|m| m.is_none()).count();
        self.n_vertices as i64 - (self.edges.len() + boundary_slots) as i64 + self.faces.len() as i64
    }

    pub fn spec(&self) -> SurfaceSpec {
        let q = self.boundary_circles.len() as i64;
        let genus = (2 - self.euler_characteristic() - q) / 2;
        SurfaceSpec::new(genus as usize, q as usize, self.punctures.len())
    }

    /// Interior unmarked vertices; curves may be isotoped across these.
    pub fn free_vertices(&self) -> Vec<usize> {
        let mut on_boundary = vec![false; self.n_vertices];
        for c in &self.boundary_circles {
            for &s in c {
                on_boundary[self.start_vertex[s]] = true;
            }
        }
        (0..self.n_vertices).filter(|&v| !on_boundary[v] && !self.marked[v]).collect()
    }

    pub fn to_json(&self) -> SurfaceJson {
        let gluing = self.edges.iter().map(|&(a, b)| [a, b]).collect();
        SurfaceJson { faces: self.faces.clone(), gluing, punctures: self.punctures.clone() }
    }

    pub fn from_json(j: &SurfaceJson) -> Result<Self> {
        let n_slots = j.faces.iter().map(|f| f.len()).sum();
        let mut mate = vec![None; n_slots];
        for &[a, b] in &j.gluing {
            if a >= n_slots || b >= n_slots || mate[a].is_some() || mate[b].is_some() || a == b {
                return Err(Error::InvalidSurface(format!("bad gluing pair [{a},{b}]")));
            }
            mate[a] = Some(b);
            mate[b] = Some(a);
        }
        CellSurface::new(j.faces.clone(), mate, j.punctures.clone())
    }
}
