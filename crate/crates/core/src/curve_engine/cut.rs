use super::overlay::{ChordId, Diagram, HeKind, NodeKind, Overlay, Pt, Regions};
use super::reduce::make_disjoint;
use super::{same_host, Curve, MultiCurve};
use crate::cell_surface::{CellSurface, Surface, SurfaceSpec};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Where a boundary circle of a cut component comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CutLabel {
    /// One side of curve `curve`; `left` is the side on the curve's left.
    Curve { curve: usize, left: bool },
    /// An original boundary circle of the host.
    Boundary { circle: usize },
    /// A circle made of several curves (only when the curves cross).
    Mixed,
}

/// Origin of a slot of a region surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SideOrigin {
    Segment { slot: usize, seg: usize },
    Chord { chord: ChordId, seg: usize, fwd: bool },
    Boundary { slot: usize, seg: usize },
}

#[derive(Debug, Clone)]
pub struct CutComponent {
    pub surface: CellSurface,
    pub spec: SurfaceSpec,
    /// One label per boundary circle, in the surface's circle order.
    pub circle_labels: Vec<CutLabel>,
    /// Host vertices that are punctures of this component.
    pub punctures: Vec<usize>,
    pub(crate) side_origin: Vec<SideOrigin>,
    /// Cut-curve endpoints on every host slot.
    pub(crate) slot_points: Vec<usize>,
}

impl CutComponent {
    pub fn is_disk(&self) -> bool {
        self.spec.genus == 0 && self.spec.boundary_count == 1
    }
    pub fn is_annulus(&self) -> bool {
        self.spec.genus == 0 && self.spec.boundary_count == 2
    }
    pub fn labels_of_curve(&self, curve: usize) -> Vec<CutLabel> {
        self.circle_labels
            .iter()
            .copied()
            .filter(|l| matches!(l, CutLabel::Curve { curve: c, .. } if *c == curve))
            .collect()
    }
    pub fn meets_host_boundary(&self) -> bool {
        self.circle_labels.iter().any(|l| matches!(l, CutLabel::Boundary { .. }))
    }

    /// Carries a curve of this component back to the host it was cut from.
    /// The result misses the cutting curves after reduction.
    pub fn lift(&self, c: &Curve, host: &Surface) -> Result<Curve> {
        let k = &self.surface;
        let pts: Vec<Pt> = c
            .word()
            .iter()
            .map(|x| {
                let s0 = k.edge_side_slot(x.edge, 0);
                let SideOrigin::Segment { slot, seg } = self.side_origin[s0] else {
                    unreachable!("interior sides come from host segments")
                };
                let (e, side) = host.slot_edge(slot).expect("glued host slot");
                let (seg0, sign) = if side == 0 { (seg, 1) } else { (self.slot_points[slot] - seg, -1) };
                Pt { edge: e, key: (2 * seg0 as i64, sign * x.pos as i64), dir: if side == 0 { x.dir } else { -x.dir } }
            })
            .collect();
        Curve::new(host.clone(), Curve::from_points(host.clone(), &pts).word().to_vec())
    }

    /// Whether the segment `seg` of host slot `slot` lies in this component.
    pub(crate) fn contains_segment(&self, slot: usize, seg: usize) -> bool {
        self.side_origin.iter().any(|o| matches!(*o, SideOrigin::Segment { slot: s, seg: g } if s == slot && g == seg))
    }
}

/// Builds the surface of region `r`.
pub(crate) fn region_component(s: &CellSurface, ov: &Overlay, regs: &Regions, r: usize) -> CutComponent {
    let mut faces = Vec::new();
    let mut origin = Vec::new();
    let mut seg_slot: HashMap<(usize, usize), usize> = HashMap::new();
    let mut marked_corner = Vec::new();
    for &pi in &regs.members[r] {
        let cyc = &regs.pieces[pi];
        let mut face = Vec::new();
        for &h in cyc {
            let id = origin.len();
            face.push(id);
            let he = &ov.hes[h];
            match ov.nodes[he.origin].kind {
                NodeKind::Corner { slot } if s.is_marked(s.start_vertex(slot)) => {
                    marked_corner.push((id, s.start_vertex(slot)));
                }
                _ => {}
            }
            origin.push(match he.kind {
                HeKind::Fwd { slot, seg } => {
                    if s.mate(slot).is_some() {
                        seg_slot.insert((slot, seg), id);
                        SideOrigin::Segment { slot, seg }
                    } else {
                        SideOrigin::Boundary { slot, seg }
                    }
                }
                HeKind::Chord { chord, seg, fwd } => SideOrigin::Chord { chord, seg, fwd },
                HeKind::Bwd { .. } => unreachable!("exterior half-edge inside a piece"),
            });
        }
        faces.push(face);
    }
    let mut mate = vec![None; origin.len()];
    for (&(slot, seg), &id) in &seg_slot {
        let m = s.mate(slot).unwrap();
        if let Some(&other) = seg_slot.get(&(m, ov.slot_points[slot] - seg)) {
            mate[id] = Some(other);
        }
    }
    let plain = CellSurface::new(faces.clone(), mate.clone(), vec![]).expect("region is a surface");
    let mut punct_v: Vec<(usize, usize)> =
        marked_corner.iter().map(|&(id, hv)| (plain.start_vertex(id), hv)).collect();
    punct_v.sort_unstable();
    punct_v.dedup();
    let surface =
        CellSurface::new(faces, mate, punct_v.iter().map(|x| x.0).collect()).expect("region is a surface");
    let circle_labels = surface
        .boundary_circles()
        .iter()
        .map(|circle| {
            let mut label = None;
            for &slot in circle {
                let l = match origin[slot] {
                    SideOrigin::Chord { chord, fwd, .. } => CutLabel::Curve { curve: chord.strand, left: fwd },
                    SideOrigin::Boundary { slot, .. } => CutLabel::Boundary {
                        circle: s.boundary_circles().iter().position(|c| c.contains(&slot)).unwrap(),
                    },
                    SideOrigin::Segment { .. } => unreachable!("glued side on a boundary circle"),
                };
                label = match label {
                    None => Some(l),
                    Some(x) if x == l => Some(x),
                    Some(_) => Some(CutLabel::Mixed),
                };
            }
            label.unwrap()
        })
        .collect();
    let spec = surface.spec();
    CutComponent {
        surface,
        spec,
        circle_labels,
        punctures: punct_v.iter().map(|x| x.1).collect(),
        side_origin: origin,
        slot_points: ov.slot_points.clone(),
    }
}

pub(crate) fn components_of(d: &Diagram) -> Vec<CutComponent> {
    let ov = d.overlay();
    let regs = ov.regions(d.surf);
    (0..regs.count).map(|r| region_component(d.surf, &ov, &regs, r)).collect()
}

/// Cuts the host along pairwise disjoint curves. Each curve contributes two
/// labelled boundary circles; punctures are distributed among components.
pub fn cut_along(mc: &MultiCurve) -> Result<Vec<CutComponent>> {
    cut_joint(mc).map(|x| x.1)
}

/// As [`cut_along`], also returning the curves in the joint drawing used.
pub(crate) fn cut_joint(mc: &MultiCurve) -> Result<(Vec<Curve>, Vec<CutComponent>)> {
    let Some(first) = mc.components.first() else {
        return Err(Error::Precondition("empty multicurve".into()));
    };
    let host = first.host().clone();
    if mc.components.iter().any(|c| !same_host(c.host(), &host)) {
        return Err(Error::HostMismatch);
    }
    if mc.components.iter().any(|c| c.is_empty()) {
        return Err(Error::NotEmbedded("a component is a trivial curve".into()));
    }
    let curves = make_disjoint(&mc.components)?;
    let refs: Vec<&Curve> = curves.iter().collect();
    let d = Diagram::from_curves(&host, &refs);
    if d.overlay().crossing_count() > 0 {
        return Err(Error::NotEmbedded("curves still cross after reduction".into()));
    }
    let comps = components_of(&d);
    Ok((curves, comps))
}

fn bounds_disk_with_at_most(a: &Curve, k: usize) -> Result<bool> {
    if a.is_empty() {
        return Ok(true);
    }
    let comps = cut_along(&MultiCurve::new(vec![a.clone()])?)?;
    Ok(comps.iter().any(|c| {
        c.is_disk() && matches!(c.circle_labels[0], CutLabel::Curve { .. }) && c.punctures.len() <= k
    }))
}

/// Does not bound a disk disjoint from the punctures.
pub fn is_essential(a: &Curve) -> Result<bool> {
    Ok(!bounds_disk_with_at_most(a, 0)?)
}

/// Bounds no disk containing at most one puncture.
pub fn is_generic(a: &Curve) -> Result<bool> {
    Ok(!bounds_disk_with_at_most(a, 1)?)
}
