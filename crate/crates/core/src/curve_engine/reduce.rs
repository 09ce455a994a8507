use super::cut::region_component;
use super::overlay::{Diagram, HeKind, NodeKind, Overlay, Pt, Regions};
use super::{same_host, Curve};
use crate::cell_surface::CellSurface;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Which bigon to remove when several are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReduceOrder {
    First,
    Random(u64),
}

/// Regions of the overlay that are bigons: disks with two corners, no
/// puncture and no boundary of the host.
pub(crate) fn bigons(s: &CellSurface, ov: &Overlay, regs: &Regions) -> Vec<usize> {
    let mut out = Vec::new();
    let mut nope = vec![false; regs.count];
    let mut corners = vec![0usize; regs.count];
    for (pi, cyc) in regs.pieces.iter().enumerate() {
        let r = regs.region_of[pi];
        for &h in cyc {
            match ov.nodes[ov.hes[h].origin].kind {
                NodeKind::Corner { slot } if s.is_marked(s.start_vertex(slot)) => nope[r] = true,
                NodeKind::Cross { .. } => corners[r] += 1,
                _ => {}
            }
            if let HeKind::Fwd { slot, .. } = ov.hes[h].kind {
                if s.mate(slot).is_none() {
                    nope[r] = true;
                }
            }
        }
    }
    for r in 0..regs.count {
        if !nope[r] && corners[r] == 2 {
            let c = region_component(s, ov, regs, r);
            if c.is_disk() && c.punctures.is_empty() {
                out.push(r);
            }
        }
    }
    out
}

/// Pushes strand 0 across the bigon region `r`, removing its two corners.
/// The other side of the bigon is a run of a single fixed strand.
fn remove_bigon(d: &mut Diagram, ov: &Overlay, regs: &Regions, r: usize) -> Result<()> {
    let mut cross = Vec::new();
    let mut a_segs = Vec::new();
    let mut b_segs = Vec::new();
    for &pi in &regs.members[r] {
        for &h in &regs.pieces[pi] {
            let he = &ov.hes[h];
            if let NodeKind::Cross { .. } = ov.nodes[he.origin].kind {
                cross.push(he.origin);
            }
            if let HeKind::Chord { chord, seg, fwd } = he.kind {
                if chord.strand == 0 {
                    a_segs.push((chord.idx, seg));
                } else {
                    b_segs.push(((chord.strand, chord.idx), seg, fwd));
                }
            }
        }
    }
    let bad = || Error::NotEmbedded("bigon bookkeeping failed".into());
    if cross.len() != 2 || cross[0] == cross[1] {
        return Err(bad());
    }
    let info = |x: usize| match ov.nodes[x].kind {
        NodeKind::Cross { a, b } => {
            let ka = ov.chord_nodes[&a].iter().position(|&n| n == x).unwrap();
            let kb = ov.chord_nodes[&b].iter().position(|&n| n == x).unwrap();
            (a.idx, ka, b.idx, kb, b.strand)
        }
        _ => unreachable!(),
    };
    let (mut x, mut y) = (info(cross[0]), info(cross[1]));
    if !a_segs.contains(&(x.0, x.1)) {
        std::mem::swap(&mut x, &mut y);
        if !a_segs.contains(&(x.0, x.1)) {
            return Err(bad());
        }
    }
    let sb = x.4;
    if y.4 != sb || b_segs.iter().any(|t| t.0 .0 != sb) {
        return Err(bad());
    }
    let b_fwd = b_segs.iter().any(|&((_, i), k, _)| i == x.2 && k == x.3);
    let left = b_segs.first().map(|s| s.2).ok_or_else(bad)?;
    let la = d.strands[0].len();
    let lb = d.strands[sb].len();
    // runs starting and ending on one chord either stay inside it or wrap
    // once around the whole strand
    let wrap = |same: bool, before: bool, n: usize| if same && !before { n } else { 0 };
    let removed = (y.0 + la - x.0) % la + wrap(x.0 == y.0, x.1 < y.1, la);
    let a = &d.strands[0];
    let b = &d.strands[sb];
    let shifted = |q: Pt, dir: i8| Pt {
        edge: q.edge,
        key: (q.key.0, if left { -(q.dir as i64) } else { q.dir as i64 }),
        dir,
    };
    let mut inserted = Vec::new();
    if b_fwd {
        let cnt = (y.2 + lb - x.2) % lb + wrap(x.2 == y.2, x.3 < y.3, lb);
        for t in 1..=cnt {
            let q = b[(x.2 + t) % lb];
            inserted.push(shifted(q, q.dir));
        }
    } else {
        let cnt = (x.2 + lb - y.2) % lb + wrap(x.2 == y.2, y.3 < x.3, lb);
        for t in 0..cnt {
            let q = b[(x.2 + lb - t) % lb];
            inserted.push(shifted(q, -q.dir));
        }
    }
    let mut na = Vec::with_capacity(la - removed + inserted.len());
    for t in 0..la - removed {
        na.push(a[(y.0 + 1 + t) % la]);
    }
    na.extend(inserted);
    d.strands[0] = na;
    d.compact();
    Ok(())
}

/// Removes bigons between strand 0 and the other strands, which must be
/// pairwise disjoint, until none is left; returns the number of removals.
pub(crate) fn reduce_diagram(d: &mut Diagram, order: ReduceOrder) -> Result<usize> {
    let mut rng = match order {
        ReduceOrder::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        ReduceOrder::First => None,
    };
    let mut steps = 0;
    let mut expected = None;
    loop {
        let ov = d.overlay();
        let n = ov.crossing_count();
        if let Some(e) = expected.filter(|&e| e != n) {
            return Err(Error::NotEmbedded(format!("bigon removal went from {} to {n} crossings", e + 2)));
        }
        if n == 0 {
            return Ok(steps);
        }
        let regs = ov.regions(d.surf);
        let bg = bigons(d.surf, &ov, &regs);
        if bg.is_empty() {
            return Ok(steps);
        }
        let pick = match rng.as_mut() {
            Some(g) => bg[g.gen_range(0..bg.len())],
            None => bg[0],
        };
        remove_bigon(d, &ov, &regs, pick)?;
        expected = Some(n - 2);
        steps += 1;
    }
}

/// Reduced joint drawing of two curves (strand 0 is `a`, strand 1 is `b`).
pub(crate) fn reduced_pair<'s>(s: &'s CellSurface, a: &Curve, b: &Curve, order: ReduceOrder) -> Result<Diagram<'s>> {
    let a = a.simplify();
    let b = b.simplify();
    let mut d = Diagram::from_curves(s, &[&a, &b]);
    reduce_diagram(&mut d, order)?;
    Ok(d)
}

fn check_hosts(a: &Curve, b: &Curve) -> Result<()> {
    if same_host(a.host(), b.host()) {
        Ok(())
    } else {
        Err(Error::HostMismatch)
    }
}

/// Isotopes the pair into minimal position by removing bigons. The two
/// returned curves carry joint positions, so drawing them together
/// reproduces the minimal picture.
pub fn reduce(a: &Curve, b: &Curve) -> Result<(Curve, Curve)> {
    reduce_with_order(a, b, ReduceOrder::First).map(|(x, y, _)| (x, y))
}

/// As [`reduce`], also returning the final crossing count.
pub fn reduce_with_order(a: &Curve, b: &Curve, order: ReduceOrder) -> Result<(Curve, Curve, usize)> {
    check_hosts(a, b)?;
    let d = reduced_pair(a.surface(), a, b, order)?;
    let n = d.overlay().crossing_count();
    Ok((d.curve(0, a.host()), d.curve(1, a.host()), n))
}

/// Geometric intersection number.
pub fn intersection_number(a: &Curve, b: &Curve) -> Result<usize> {
    check_hosts(a, b)?;
    if a.is_empty() || b.is_empty() {
        return Ok(0);
    }
    let d = reduced_pair(a.surface(), a, b, ReduceOrder::First)?;
    Ok(d.overlay().crossing_count())
}

/// Redraws curves with pairwise zero intersection so that they are
/// simultaneously disjoint. Each curve in turn is reduced against the
/// already placed ones; the results share one joint drawing.
pub(crate) fn make_disjoint(curves: &[Curve]) -> Result<Vec<Curve>> {
    let Some(first) = curves.first() else {
        return Ok(Vec::new());
    };
    let host = first.host().clone();
    let s: &CellSurface = &host;
    let mut placed: Vec<Vec<Pt>> = Vec::new();
    for (i, c) in curves.iter().enumerate() {
        let c = c.simplify();
        let mut refs: Vec<Curve> = vec![c];
        refs.extend(placed.iter().map(|p| Curve::from_ranked(host.clone(), p)));
        let rr: Vec<&Curve> = refs.iter().collect();
        let mut d = Diagram::from_curves(s, &rr);
        reduce_diagram(&mut d, ReduceOrder::First)?;
        if d.overlay().crossing_count() > 0 {
            return Err(Error::NotEmbedded(format!("component {i} meets an earlier one essentially")));
        }
        let mut strands = std::mem::take(&mut d.strands);
        let new = strands.remove(0);
        placed = strands;
        placed.push(new);
    }
    Ok(placed.iter().map(|p| Curve::from_ranked(host.clone(), p)).collect())
}
