//! Deterministic curves and subsurfaces on the canonical models, found by
//! searching short curves. Shared by the command line and the tests.

use crate::cell_surface::{make_surface, pants_decomposition, PantalonType, Surface, SurfaceSpec};
use crate::curve_engine::{
    intersection_number, intersection_vector, is_essential, is_generic, is_isotopic, short_curves, Curve, MultiCurve,
};
use crate::error::{Error, Result};
use crate::structure::{doubled_pantalon_type, subsurfaces, SubsurfaceConfig};
use std::collections::{HashMap, HashSet};
use std::sync::Arc;

/// Crossing bound for fixture searches.
pub const FIXTURE_LENGTH: usize = 4;

pub fn surface(genus: usize, boundary: usize, punctures: usize) -> Surface {
    Arc::new(make_surface(SurfaceSpec::new(genus, boundary, punctures)))
}

/// Essential curves with at most `max_len` crossings on the one-face
/// model, one per unoriented isotopy class, in order of discovery.
pub fn curve_classes(s: &Surface, max_len: usize) -> Result<Vec<Curve>> {
    let mut out: Vec<Curve> = Vec::new();
    let mut buckets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for c in short_curves(s, max_len) {
        if !is_essential(&c)? {
            continue;
        }
        let key = intersection_vector(&c)?;
        let bucket = buckets.entry(key).or_default();
        let mut new = true;
        for &k in bucket.iter() {
            if is_isotopic(&out[k], &c, false)? {
                new = false;
                break;
            }
        }
        if new {
            bucket.push(out.len());
            out.push(c);
        }
    }
    Ok(out)
}

/// Generic curves among the classes.
pub fn generic_classes(s: &Surface, max_len: usize) -> Result<Vec<Curve>> {
    let mut out = Vec::new();
    for c in curve_classes(s, max_len)? {
        if is_generic(&c)? {
            out.push(c);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct CurvePair {
    pub name: String,
    pub a: Curve,
    pub b: Curve,
    /// `I(a, b)`.
    pub i: usize,
}

/// Up to `count` pairs of generic classes meeting `i` times.
pub fn pairs_with_intersection(s: &Surface, i: usize, count: usize) -> Result<Vec<CurvePair>> {
    let cs = generic_classes(s, FIXTURE_LENGTH)?;
    let mut out = Vec::new();
    for (x, a) in cs.iter().enumerate() {
        for (y, b) in cs.iter().enumerate().skip(x + 1) {
            if out.len() == count {
                return Ok(out);
            }
            if intersection_number(a, b)? == i {
                let name = format!("{} c{x} c{y}", s.spec());
                out.push(CurvePair { name, a: a.clone(), b: b.clone(), i });
            }
        }
    }
    if out.is_empty() {
        return Err(Error::NotFound(format!("no pair with I = {i} on {}", s.spec())));
    }
    Ok(out)
}

/// Torus meridian and longitude.
pub fn torus_pair() -> Result<CurvePair> {
    let mut p = pairs_with_intersection(&surface(1, 0, 0), 1, 1)?.remove(0);
    p.name = "torus meridian longitude".into();
    Ok(p)
}

/// The pairs on which the twist formula is checked: once-meeting curves
/// on the torus, twice-meeting curves on the closed genus-two surface and
/// on the four-punctured sphere.
pub fn twist_formula_pairs() -> Result<Vec<CurvePair>> {
    let mut out = vec![torus_pair()?];
    out.extend(pairs_with_intersection(&surface(2, 0, 0), 2, 1)?);
    out.extend(pairs_with_intersection(&surface(0, 0, 4), 2, 1)?);
    Ok(out)
}

/// Pairs with `I in {0, 1, 2}` over several surfaces.
pub fn commutation_pairs() -> Result<Vec<CurvePair>> {
    let mut out = Vec::new();
    for (spec, is) in [
        ((1, 0, 0), vec![1, 2]),
        ((1, 0, 1), vec![1, 2]),
        ((2, 0, 0), vec![0, 1, 2]),
        ((0, 0, 4), vec![2]),
        ((0, 0, 5), vec![0, 2]),
        ((1, 1, 0), vec![1]),
    ] {
        let s = surface(spec.0, spec.1, spec.2);
        for i in is {
            out.extend(pairs_with_intersection(&s, i, 2)?);
        }
    }
    Ok(out)
}

/// The pants curves of the closed genus-two model.
pub fn genus_two_pants() -> Result<MultiCurve> {
    let d = pants_decomposition(SurfaceSpec::new(2, 0, 0))?.expect("genus two has a decomposition");
    MultiCurve::new(d.curves)
}

/// Visits the subsurfaces bounded by up to `max_curves` disjoint classes
/// of `s`, possibly with a class repeated (two parallel copies), until
/// `visit` returns false.
fn for_each_subsurface(
    s: &Surface,
    max_curves: usize,
    mut visit: impl FnMut(SubsurfaceConfig) -> bool,
) -> Result<()> {
    let cs = curve_classes(s, FIXTURE_LENGTH)?;
    let n = cs.len();
    let mut disjoint = vec![vec![true; n]; n];
    for x in 0..n {
        for y in x + 1..n {
            let d = intersection_number(&cs[x], &cs[y])? == 0;
            disjoint[x][y] = d;
            disjoint[y][x] = d;
        }
    }
    let mut seen = HashSet::new();
    // nondecreasing index tuples, depth first
    let mut stack: Vec<Vec<usize>> = (0..n).rev().map(|x| vec![x]).collect();
    while let Some(t) = stack.pop() {
        let mc = MultiCurve::new(t.iter().map(|&x| cs[x].clone()).collect())?;
        for c in subsurfaces(s, &mc)? {
            let key = (t.clone(), c.sub, format!("{:?}", c.complement_components));
            if seen.insert(key) && !visit(c) {
                return Ok(());
            }
        }
        if t.len() < max_curves {
            let last = *t.last().unwrap();
            for y in (last..n).rev() {
                if t.iter().all(|&x| disjoint[x][y]) && t.iter().filter(|&&x| x == y).count() < 2 {
                    let mut u = t.clone();
                    u.push(y);
                    stack.push(u);
                }
            }
        }
    }
    Ok(())
}

/// The first `limit` subsurfaces visited by the search.
pub fn subsurface_family(s: &Surface, max_curves: usize, limit: usize) -> Result<Vec<SubsurfaceConfig>> {
    let mut out = Vec::new();
    for_each_subsurface(s, max_curves, |c| {
        out.push(c);
        out.len() < limit
    })?;
    Ok(out)
}

/// First subsurface found on `s` satisfying `pred`.
pub fn find_subsurface(
    s: &Surface,
    max_curves: usize,
    pred: impl Fn(&SubsurfaceConfig) -> bool,
) -> Result<SubsurfaceConfig> {
    let mut found = None;
    for_each_subsurface(s, max_curves, |c| {
        if pred(&c) {
            found = Some(c);
        }
        found.is_none()
    })?;
    found.ok_or_else(|| Error::NotFound(format!("no matching subsurface on {}", s.spec())))
}

/// A half `N` of the doubled pantalon of the given type and the other half.
pub fn doubled_pantalon(kind: PantalonType) -> Result<(SubsurfaceConfig, SubsurfaceConfig)> {
    let (s, k) = match kind {
        PantalonType::I => (surface(0, 0, 4), 1),
        PantalonType::II => (surface(1, 0, 2), 2),
        PantalonType::III => (surface(2, 0, 0), 3),
    };
    let n = find_subsurface(&s, k, |c| doubled_pantalon_type(c) == Some(kind))?;
    let boundary = n.concrete_part()?.boundary.clone();
    let other = subsurfaces(&s, &boundary)?
        .into_iter()
        .find(|c| c.concrete_part().is_ok_and(|x| x.n_on_left != n.concrete_part().unwrap().n_on_left))
        .ok_or_else(|| Error::NotFound("other half".into()))?;
    Ok((n, other))
}
