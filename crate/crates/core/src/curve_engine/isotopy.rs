use super::cut::{cut_along, is_essential, is_generic, CutLabel};
use super::enumerate::find_dual_curve;
use super::reduce::intersection_number;
use super::twist::dehn_twist;
use super::{same_host, Curve, MultiCurve};
use crate::cell_surface::{hat_extend, pants_curves_on, Surface};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Isotopy of curves in the host minus its punctures.
///
/// Disjoint essential curves are isotopic iff they cobound an annulus
/// without punctures; the oriented test also needs the two curves to run
/// the same way around it, which happens iff the annulus lies on the left
/// of exactly one of them. Inessential curves are all isotopic to each
/// other (and to the trivial curve) and to no essential curve.
pub fn is_isotopic(a: &Curve, b: &Curve, oriented: bool) -> Result<bool> {
    if !same_host(a.host(), b.host()) {
        return Err(Error::HostMismatch);
    }
    let (ea, eb) = (is_essential(a)?, is_essential(b)?);
    if !ea || !eb {
        return Ok(ea == eb);
    }
    // with every vertex a puncture or on the boundary the edges are arcs,
    // and crossings with them, once tightened, are an isotopy invariant
    if a.surface().free_vertices().is_empty() && a.simplify().edge_weights() != b.simplify().edge_weights() {
        return Ok(false);
    }
    if intersection_number(a, b)? > 0 {
        return Ok(false);
    }
    let comps = cut_along(&MultiCurve::new(vec![a.clone(), b.clone()])?)?;
    for c in comps {
        if !c.is_annulus() || !c.punctures.is_empty() {
            continue;
        }
        let la = c.labels_of_curve(0);
        let lb = c.labels_of_curve(1);
        if la.len() == 1 && lb.len() == 1 {
            let (CutLabel::Curve { left: x, .. }, CutLabel::Curve { left: y, .. }) = (la[0], lb[0]) else {
                continue;
            };
            if !oriented || x != y {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Cobounds an annulus without punctures with a boundary circle of the host.
pub fn is_boundary_parallel(a: &Curve) -> Result<bool> {
    if a.is_empty() || a.surface().boundary_circles().is_empty() {
        return Ok(false);
    }
    let comps = cut_along(&MultiCurve::new(vec![a.clone()])?)?;
    Ok(comps.iter().any(|c| {
        c.is_annulus()
            && c.punctures.is_empty()
            && c.circle_labels.iter().any(|l| matches!(l, CutLabel::Boundary { .. }))
            && c.circle_labels.iter().any(|l| matches!(l, CutLabel::Curve { .. }))
    }))
}

/// Which clause of the dual-curve hypotheses a system violates, if any.
pub fn check_curve_system(system: &MultiCurve) -> Result<()> {
    let cs = &system.components;
    for (i, a) in cs.iter().enumerate() {
        if !is_generic(a)? {
            return Err(Error::Hypothesis(format!("curve {i} is not generic")));
        }
        if is_boundary_parallel(a)? {
            return Err(Error::Hypothesis(format!("curve {i} is isotopic to a boundary component")));
        }
        for (j, b) in cs.iter().enumerate().take(i) {
            if intersection_number(a, b)? > 0 {
                return Err(Error::Hypothesis(format!("curves {j} and {i} intersect")));
            }
            if is_isotopic(a, b, false)? {
                return Err(Error::Hypothesis(format!("curves {j} and {i} are isotopic")));
            }
        }
    }
    Ok(())
}

/// A curve meeting the `i`-th curve of the system once or twice and
/// missing all other curves.
pub fn dual_curve(system: &MultiCurve, i: usize) -> Result<Curve> {
    if i >= system.len() {
        return Err(Error::Precondition(format!("index {i} out of range for {} curves", system.len())));
    }
    check_curve_system(system)?;
    find_dual_curve(system, i)
}

/// Curves on a closed surface used as the identity oracle, together with
/// the surface they live on.
#[derive(Debug, Clone)]
pub struct ReferenceSystem {
    /// The host itself when it is closed, otherwise its capped surface.
    pub host: Surface,
    /// Image in `host` of every edge of the original surface.
    pub edge_map: Vec<usize>,
    /// Pants curves, one dual for each, and each dual twisted once along
    /// its pants curve. On the torus: two curves meeting once and a twist
    /// of one along the other. Empty when every twist is trivial.
    pub curves: Vec<Curve>,
}

impl ReferenceSystem {
    /// Moves a curve of the original surface onto the reference host.
    pub fn lift(&self, c: &Curve) -> Result<Curve> {
        c.transport(self.host.clone(), &self.edge_map)
    }
}

fn memo() -> &'static Mutex<HashMap<String, Arc<ReferenceSystem>>> {
    static M: OnceLock<Mutex<HashMap<String, Arc<ReferenceSystem>>>> = OnceLock::new();
    M.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The reference system of a surface; computed once per surface.
pub fn reference_system(s: &Surface) -> Result<Arc<ReferenceSystem>> {
    let key = serde_json::to_string(&s.to_json()).expect("surface serializes");
    if let Some(r) = memo().lock().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let (host, edge_map) = if s.is_closed() {
        (s.clone(), (0..s.num_edges()).collect())
    } else {
        let (h, m) = hat_extend(s);
        (Arc::new(h), m)
    };
    let curves = filling_curves(&host)?;
    let r = Arc::new(ReferenceSystem { host, edge_map, curves });
    memo().lock().unwrap().insert(key, r.clone());
    Ok(r)
}

fn filling_curves(h: &Surface) -> Result<Vec<Curve>> {
    let spec = h.spec();
    if spec.genus == 0 && spec.puncture_count <= 3 {
        return Ok(Vec::new());
    }
    if spec.genus == 1 && spec.puncture_count == 0 {
        let co = super::coarse::Coarsening::new(h);
        let mut cands: Vec<Curve> = Vec::new();
        for len in 1..=super::enumerate::SEARCH_LIMIT {
            for l in co.curves_of_length(len) {
                if !is_essential(&l)? {
                    continue;
                }
                for m in &cands {
                    if intersection_number(m, &l)? == 1 {
                        let t = dehn_twist(&l, m, 1)?;
                        return Ok(vec![m.clone(), l, t]);
                    }
                }
                cands.push(l);
            }
        }
        return Err(Error::NotFound("torus reference curves".into()));
    }
    let pants = pants_curves_on(h)?;
    let sys = MultiCurve::new(pants.clone())?;
    let mut duals = Vec::new();
    let mut twisted = Vec::new();
    for (i, a) in pants.iter().enumerate() {
        let d = find_dual_curve(&sys, i)?;
        twisted.push(dehn_twist(&d, a, 1)?);
        duals.push(d);
    }
    let mut out = pants;
    out.extend(duals);
    out.extend(twisted);
    Ok(out)
}

/// Crossing counts against the reference curves; equal for isotopic curves.
pub fn intersection_vector(c: &Curve) -> Result<Vec<usize>> {
    let r = reference_system(c.host())?;
    let lifted = r.lift(c)?;
    r.curves.iter().map(|f| intersection_number(&lifted, f)).collect()
}
