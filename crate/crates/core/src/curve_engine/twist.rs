use super::overlay::{Diagram, HeKind, NodeKind, Overlay, Pt};
use super::reduce::{reduced_pair, ReduceOrder};
use super::{same_host, Curve};
use crate::error::{Error, Result};

/// Image of `b` under the `n`-th power of the Dehn twist along `along`.
///
/// With `k` minimal crossings, `b` is drawn together with `|n| k` parallel
/// copies of the twisting curve and every crossing is smoothed the same
/// way: a positive twist turns right onto the copies, a negative one turns
/// left. The smoothing is one curve winding `n` times around `along` at
/// each crossing.
pub fn dehn_twist(b: &Curve, along: &Curve, n: i64) -> Result<Curve> {
    if !same_host(b.host(), along.host()) {
        return Err(Error::HostMismatch);
    }
    if n == 0 || b.is_empty() || along.is_empty() {
        return Ok(b.clone());
    }
    let s = b.surface();
    let d = reduced_pair(s, along, b, ReduceOrder::First)?;
    let k = d.overlay().crossing_count();
    if k == 0 {
        return Ok(d.curve(1, b.host()).compacted());
    }
    let copies = n.unsigned_abs() as i64 * k as i64;
    let mut strands = vec![d.strands[1].clone()];
    for j in 1..=copies {
        strands.push(
            d.strands[0]
                .iter()
                .map(|p| Pt { edge: p.edge, key: (p.key.0, j * p.dir as i64), dir: p.dir })
                .collect(),
        );
    }
    let big = Diagram { surf: s, strands };
    let ov = big.overlay();
    let pts = smooth(&big, &ov, n > 0)?;
    Ok(Curve::from_points(b.host().clone(), &pts).simplify())
}

/// Traces the smoothing of every crossing of strand 0 with the others,
/// starting along strand 0. Fails unless the result is a single curve.
fn smooth(d: &Diagram, ov: &Overlay, right: bool) -> Result<Vec<Pt>> {
    let total: usize = d.strands.iter().map(|s| s.len()).sum();
    let first = ov.chord_nodes[&super::overlay::ChordId { strand: 0, idx: 0 }][0];
    let mut h = ov.nodes[first].rot[1];
    let mut out = Vec::new();
    while out.len() <= total {
        let t = ov.hes[h].twin;
        let v = ov.hes[t].origin;
        match ov.nodes[v].kind {
            NodeKind::Cross { .. } => {
                let i = ov.hes[t].rot_idx;
                let is_b = matches!(ov.hes[t].kind, HeKind::Chord { chord, .. } if chord.strand == 0);
                let p = if right == is_b { i + 1 } else { i + 3 };
                h = ov.nodes[v].rot[p % 4];
            }
            NodeKind::End { chord, end } => {
                let st = &d.strands[chord.strand];
                let len = st.len();
                let (pt, next_chord, next_end) = if end == 1 {
                    let q = st[(chord.idx + 1) % len];
                    (q, (chord.idx + 1) % len, 0)
                } else {
                    let q = st[chord.idx];
                    (Pt { dir: -q.dir, ..q }, (chord.idx + len - 1) % len, 1)
                };
                out.push(pt);
                let id = super::overlay::ChordId { strand: chord.strand, idx: next_chord };
                let nodes = &ov.chord_nodes[&id];
                let node = if next_end == 0 { nodes[0] } else { nodes[nodes.len() - 1] };
                h = ov.nodes[node].rot[1];
                if node == first && next_end == 0 {
                    break;
                }
            }
            NodeKind::Corner { .. } => unreachable!("chords end on boundary points"),
        }
    }
    if out.len() != total {
        return Err(Error::NotEmbedded(format!(
            "smoothing gave {} of {total} points on the traced component",
            out.len()
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell_surface::{make_surface, SurfaceSpec};
    use crate::curve_engine::{intersection_number, Crossing};
    use std::sync::Arc;

    fn torus_curves() -> (Curve, Curve) {
        let t = Arc::new(make_surface(SurfaceSpec::new(1, 0, 0)));
        let m = Curve::new(t.clone(), vec![Crossing { edge: 0, pos: 0, dir: 1 }]).unwrap();
        let l = Curve::new(t, vec![Crossing { edge: 1, pos: 0, dir: 1 }]).unwrap();
        (m, l)
    }

    #[test]
    fn torus_twist_counts() {
        let (m, l) = torus_curves();
        assert_eq!(intersection_number(&m, &l).unwrap(), 1);
        for n in [-3i64, -1, 1, 2, 4] {
            let t = dehn_twist(&l, &m, n).unwrap();
            assert_eq!(intersection_number(&t, &l).unwrap(), n.unsigned_abs() as usize);
            assert_eq!(intersection_number(&t, &m).unwrap(), 1);
        }
    }

    #[test]
    fn twist_fixes_disjoint_and_itself() {
        let (m, _) = torus_curves();
        let t = dehn_twist(&m, &m, 3).unwrap();
        assert_eq!(intersection_number(&t, &m).unwrap(), 0);
    }
}
