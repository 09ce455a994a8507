//! Simple closed curves as cyclic words of edge crossings.
//!
//! A crossing names an interior edge, a position among the curve's own
//! crossings of that edge (counted along the edge's side-0 slot direction)
//! and a direction: `+1` crosses from the side-0 face into the side-1 face.
//! Consecutive crossings are joined by a chord inside one face; two chords
//! of one face cross iff their endpoints interleave on the face boundary.
//! Positions only need to be distinct per edge: curves cut from one joint
//! drawing keep their relative order when drawn together again.

mod coarse;
mod cut;
mod enumerate;
mod homology;
mod isotopy;
pub(crate) mod overlay;
mod reduce;
mod twist;

pub use cut::{cut_along, is_essential, is_generic, CutComponent, CutLabel};
pub use enumerate::{
    curves_of_length, enumerate_curves, find_dual_curve, is_pants_curve, short_curves, shortest_pants_curve,
    SEARCH_LIMIT,
};
pub use homology::homology_class;
pub use isotopy::{
    check_curve_system, dual_curve, intersection_vector, is_boundary_parallel, is_isotopic, reference_system,
    ReferenceSystem,
};
pub use reduce::{intersection_number, reduce, reduce_with_order, ReduceOrder};
pub use twist::dehn_twist;

use crate::cell_surface::{CellSurface, Surface};
use crate::error::{Error, Result};
use overlay::{Diagram, Pt};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Crossing {
    pub edge: usize,
    pub pos: usize,
    pub dir: i8,
}

#[derive(Debug, Clone)]
pub struct Curve {
    host: Surface,
    word: Vec<Crossing>,
}

impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        same_host(&self.host, &other.host) && self.word == other.word
    }
}

pub(crate) fn same_host(a: &Surface, b: &Surface) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Curve {
    /// Validates the word: existing edges, compact positions, consistent
    /// faces between consecutive crossings, and no self-crossing chords.
    pub fn new(host: Surface, word: Vec<Crossing>) -> Result<Curve> {
        let c = Curve { host, word };
        c.validate()?;
        Ok(c)
    }

    /// The trivial curve: a small loop inside a face.
    pub fn trivial(host: Surface) -> Curve {
        Curve { host, word: Vec::new() }
    }

    /// Positions are the global ranks of the keys, so curves taken from one
    /// diagram keep their joint drawing when stacked again.
    pub(crate) fn from_points(host: Surface, pts: &[Pt]) -> Curve {
        let mut keys: HashMap<usize, Vec<(i64, i64)>> = HashMap::new();
        for p in pts {
            keys.entry(p.edge).or_default().push(p.key);
        }
        for v in keys.values_mut() {
            v.sort_unstable();
        }
        let word = pts
            .iter()
            .map(|p| Crossing { edge: p.edge, pos: keys[&p.edge].binary_search(&p.key).unwrap(), dir: p.dir })
            .collect();
        Curve { host, word }
    }

    pub(crate) fn from_ranked(host: Surface, pts: &[Pt]) -> Curve {
        let word = pts.iter().map(|p| Crossing { edge: p.edge, pos: p.key.0 as usize, dir: p.dir }).collect();
        Curve { host, word }
    }

    pub fn host(&self) -> &Surface {
        &self.host
    }
    pub fn surface(&self) -> &CellSurface {
        &self.host
    }
    pub fn word(&self) -> &[Crossing] {
        &self.word
    }
    pub fn len(&self) -> usize {
        self.word.len()
    }
    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The same curve with the opposite orientation.
    pub fn reverse(&self) -> Curve {
        let word = self.word.iter().rev().map(|c| Crossing { dir: -c.dir, ..*c }).collect();
        Curve { host: self.host.clone(), word }
    }

    /// Moves the curve to another host with the same edge numbering on
    /// the old edges (for instance after capping boundary circles).
    pub fn transport(&self, host: Surface, edge_map: &[usize]) -> Result<Curve> {
        let word = self.word.iter().map(|c| Crossing { edge: edge_map[c.edge], ..*c }).collect();
        Curve::new(host, word)
    }

    fn validate(&self) -> Result<()> {
        let s = &*self.host;
        let n = self.word.len();
        let mut per_edge: HashMap<usize, Vec<usize>> = HashMap::new();
        for c in &self.word {
            if c.edge >= s.num_edges() {
                return Err(Error::InvalidCurve(format!("edge {} does not exist", c.edge)));
            }
            if c.dir != 1 && c.dir != -1 {
                return Err(Error::InvalidCurve(format!("direction {} is not +1 or -1", c.dir)));
            }
            per_edge.entry(c.edge).or_default().push(c.pos);
        }
        for (e, mut ps) in per_edge {
            ps.sort_unstable();
            if ps.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidCurve(format!("repeated position on edge {e}")));
            }
        }
        for i in 0..n {
            let a = self.word[i];
            let b = self.word[(i + 1) % n];
            if s.slot_face(in_slot(s, a)) != s.slot_face(out_slot(s, b)) {
                return Err(Error::InvalidCurve(format!("crossings {i} and {} do not share a face", (i + 1) % n)));
            }
        }
        let d = Diagram::from_curves(s, &[self]);
        if d.overlay().crossing_count() > 0 {
            return Err(Error::InvalidCurve("curve crosses itself".into()));
        }
        Ok(())
    }

    /// Removes innermost back-and-forth crossings of one edge (isotopies
    /// that sweep no vertex) until none remain. Positions are renumbered
    /// to `0..k` on every edge.
    pub fn simplify(&self) -> Curve {
        let mut w = self.compacted().word;
        loop {
            let n = w.len();
            let hit = (0..n).find(|&i| {
                let (a, b) = (w[i], w[(i + 1) % n]);
                n >= 2 && a.edge == b.edge && a.dir == -b.dir && a.pos.abs_diff(b.pos) == 1
            });
            let Some(i) = hit else { break };
            let j = (i + 1) % n;
            let (e, lo) = (w[i].edge, w[i].pos.min(w[j].pos));
            w = w
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i && k != j)
                .map(|(_, c)| {
                    let mut c = *c;
                    if c.edge == e && c.pos > lo {
                        c.pos -= 2;
                    }
                    c
                })
                .collect();
        }
        Curve { host: self.host.clone(), word: w }
    }

    /// The same drawing with positions renumbered to `0..k` per edge.
    pub fn compacted(&self) -> Curve {
        let pts: Vec<Pt> = self.word.iter().map(|c| Pt { edge: c.edge, key: (c.pos as i64, 0), dir: c.dir }).collect();
        Curve::from_points(self.host.clone(), &pts)
    }

    /// Crossing count with each interior edge.
    pub fn edge_weights(&self) -> Vec<usize> {
        let mut v = vec![0; self.host.num_edges()];
        for c in &self.word {
            v[c.edge] += 1;
        }
        v
    }

    pub fn to_json(&self) -> CurveJson {
        CurveJson {
            surface: Some(self.host.to_json()),
            word: self.word.clone(),
            reduce: None,
        }
    }
}

pub(crate) fn in_slot(s: &CellSurface, c: Crossing) -> usize {
    s.edge_side_slot(c.edge, if c.dir > 0 { 1 } else { 0 })
}

pub(crate) fn out_slot(s: &CellSurface, c: Crossing) -> usize {
    s.edge_side_slot(c.edge, if c.dir > 0 { 0 } else { 1 })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surface: Option<crate::cell_surface::SurfaceJson>,
    pub word: Vec<Crossing>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduce: Option<bool>,
}

/// A family of curves on one host.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiCurve {
    pub components: Vec<Curve>,
}

impl MultiCurve {
    pub fn new(components: Vec<Curve>) -> Result<MultiCurve> {
        if let Some(first) = components.first() {
            if components.iter().any(|c| !same_host(c.host(), first.host())) {
                return Err(Error::HostMismatch);
            }
        }
        Ok(MultiCurve { components })
    }
    pub fn len(&self) -> usize {
        self.components.len()
    }
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}
