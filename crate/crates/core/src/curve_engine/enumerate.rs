use super::coarse::Coarsening;
use super::cut::{components_of, cut_along, is_generic, CutLabel};
use super::isotopy::is_boundary_parallel;
use super::overlay::Diagram;
use super::reduce::{intersection_number, make_disjoint};
use super::{Crossing, Curve, MultiCurve};
use crate::cell_surface::{CellSurface, Surface};
use crate::error::{Error, Result};
use std::collections::{HashMap, HashSet};
use std::sync::Arc;

/// Longest word tried by the searches built on [`enumerate_curves`].
pub const SEARCH_LIMIT: usize = 14;

/// Crossing that leaves the face of `slot` through it.
fn exit_crossing(s: &CellSurface, slot: usize) -> (usize, i8) {
    let (e, side) = s.slot_edge(slot).expect("interior slot");
    (e, if side == 0 { 1 } else { -1 })
}

/// Normal curves of exactly `len` crossings: no chord returns to the slot
/// it came from. One word per curve up to rotation; every way of ordering
/// repeated crossings on an edge that gives an embedded curve is kept.
pub fn curves_of_length(s: &Surface, len: usize) -> Vec<Curve> {
    let interior: Vec<usize> = (0..s.num_slots()).filter(|&t| s.mate(t).is_some()).collect();
    let mut by_face: Vec<Vec<usize>> = vec![Vec::new(); s.faces().len()];
    for &t in &interior {
        by_face[s.slot_face(t)].push(t);
    }
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut path = Vec::with_capacity(len);
    for &t0 in &interior {
        path.clear();
        path.push(t0);
        dfs(s, &by_face, len, &mut path, &mut out, &mut seen);
    }
    out
}

fn dfs(
    s: &Surface,
    by_face: &[Vec<usize>],
    len: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Curve>,
    seen: &mut HashSet<Vec<Crossing>>,
) {
    let last = *path.last().unwrap();
    let entry = s.mate(last).unwrap();
    let t0 = path[0];
    if path.len() == len {
        if s.slot_face(t0) == s.slot_face(entry) && t0 != entry && min_rotation(path) == *path {
            place(s, path, out, seen);
        }
        return;
    }
    for &t in &by_face[s.slot_face(entry)] {
        if t != entry && t >= t0 {
            path.push(t);
            dfs(s, by_face, len, path, out, seen);
            path.pop();
        }
    }
}

fn min_rotation(p: &[usize]) -> Vec<usize> {
    (0..p.len())
        .map(|r| p[r..].iter().chain(&p[..r]).copied().collect::<Vec<_>>())
        .min()
        .unwrap()
}

/// Tries every ordering of repeated crossings on each edge.
fn place(s: &Surface, path: &[usize], out: &mut Vec<Curve>, seen: &mut HashSet<Vec<Crossing>>) {
    let cross: Vec<(usize, i8)> = path.iter().map(|&t| exit_crossing(s, t)).collect();
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, c) in cross.iter().enumerate() {
        groups.entry(c.0).or_default().push(i);
    }
    let mut groups: Vec<Vec<usize>> = groups.into_values().collect();
    groups.sort();
    let mut pos = vec![0usize; cross.len()];
    assign(s, &cross, &groups, 0, &mut pos, out, seen);
}

fn assign(
    s: &Surface,
    cross: &[(usize, i8)],
    groups: &[Vec<usize>],
    g: usize,
    pos: &mut Vec<usize>,
    out: &mut Vec<Curve>,
    seen: &mut HashSet<Vec<Crossing>>,
) {
    if g == groups.len() {
        let word: Vec<Crossing> =
            cross.iter().zip(pos.iter()).map(|(&(edge, dir), &pos)| Crossing { edge, pos, dir }).collect();
        let canon = canonical(&word);
        if seen.contains(&canon) {
            return;
        }
        if let Ok(c) = Curve::new(s.clone(), word) {
            seen.insert(canon);
            out.push(c);
        }
        return;
    }
    let idx = &groups[g];
    let mut perm: Vec<usize> = (0..idx.len()).collect();
    loop {
        for (k, &i) in idx.iter().enumerate() {
            pos[i] = perm[k];
        }
        assign(s, cross, groups, g + 1, pos, out, seen);
        if !next_permutation(&mut perm) {
            break;
        }
    }
}

fn canonical(w: &[Crossing]) -> Vec<Crossing> {
    (0..w.len()).map(|r| w[r..].iter().chain(&w[..r]).copied().collect::<Vec<_>>()).min().unwrap()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All normal curves with at most `max_len` crossings, shortest first.
pub fn enumerate_curves(s: &Surface, max_len: usize) -> Result<Vec<Curve>> {
    Ok((1..=max_len).flat_map(|l| curves_of_length(s, l)).collect())
}

/// Curves with at most `max_len` crossings on a one-face model of `s`,
/// carried back to `s`. Far shorter words reach far more curves than
/// [`enumerate_curves`] does; duplicates up to isotopy remain.
pub fn short_curves(s: &Surface, max_len: usize) -> Vec<Curve> {
    let co = Coarsening::new(s);
    (1..=max_len).flat_map(|l| co.curves_of_length(l)).collect()
}

/// Generic and not parallel to the boundary: the curves that may appear in
/// a pants decomposition.
pub fn is_pants_curve(c: &Curve) -> Result<bool> {
    Ok(!c.is_empty() && is_generic(c)? && !is_boundary_parallel(c)?)
}

/// Shortest curve on `s` that may appear in a pants decomposition.
pub fn shortest_pants_curve(s: &Surface) -> Result<Curve> {
    let co = Coarsening::new(s);
    for len in 1..=SEARCH_LIMIT {
        for c in co.curves_of_length(len) {
            if is_pants_curve(&c)? {
                return Ok(c);
            }
        }
    }
    Err(Error::NotFound(format!("no pants curve on {} within {SEARCH_LIMIT} crossings", s.spec())))
}

/// Shortest curve meeting curve `i` of the system minimally (once if both
/// sides of that curve lie in one component of the cut surface, twice
/// otherwise) and missing the other curves. It is searched for inside the
/// piece left by cutting along the other curves, which has complexity one.
pub fn find_dual_curve(system: &MultiCurve, i: usize) -> Result<Curve> {
    let a = &system.components[i];
    let host = a.host().clone();
    let comps = cut_along(system)?;
    let same_side = comps.iter().any(|c| {
        c.circle_labels.iter().filter(|l| matches!(l, CutLabel::Curve { curve, .. } if *curve == i)).count() == 2
    });
    let target = if same_side { 1 } else { 2 };
    let mut order: Vec<Curve> = system.components.iter().enumerate().filter(|&(j, _)| j != i).map(|x| x.1.clone()).collect();
    let piece = if order.is_empty() {
        None
    } else {
        order.push(a.clone());
        let joint = make_disjoint(&order)?;
        let (a_j, others) = joint.split_last().unwrap();
        let refs: Vec<&Curve> = others.iter().collect();
        let d = Diagram::from_curves(&host, &refs);
        let p = a_j.word()[0];
        let below = others.iter().flat_map(|c| c.word()).filter(|x| x.edge == p.edge && x.pos < p.pos).count();
        let s0 = host.edge_side_slot(p.edge, 0);
        Some(components_of(&d).into_iter().find(|c| c.contains_segment(s0, below)).ok_or_else(|| {
            Error::NotEmbedded("curve lies in no piece of the cut surface".into())
        })?)
    };
    let search: Surface = match &piece {
        Some(c) => Arc::new(c.surface.clone()),
        None => host.clone(),
    };
    let co = Coarsening::new(&search);
    for len in 1..=SEARCH_LIMIT {
        for c in co.curves_of_length(len) {
            if !is_pants_curve(&c)? {
                continue;
            }
            let d = match &piece {
                Some(p) => p.lift(&c, &host)?,
                None => c,
            };
            if intersection_number(&d, a)? == target {
                return Ok(d);
            }
        }
    }
    Err(Error::NotFound(format!("no dual curve for component {i} within {SEARCH_LIMIT} crossings")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell_surface::{make_surface, SurfaceSpec};
    use std::sync::Arc;

    #[test]
    fn torus_short_curves() {
        let t: Surface = Arc::new(make_surface(SurfaceSpec::new(1, 0, 0)));
        let one = curves_of_length(&t, 1);
        assert_eq!(one.len(), 4);
        assert!(!curves_of_length(&t, 2).is_empty());
    }

    #[test]
    fn permutations_cycle() {
        let mut p = vec![0, 1, 2];
        let mut n = 1;
        while next_permutation(&mut p) {
            n += 1;
        }
        assert_eq!(n, 6);
    }
}
