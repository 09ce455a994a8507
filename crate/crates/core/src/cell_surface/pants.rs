use super::{make_surface, Surface, SurfaceSpec};
use crate::curve_engine::{cut_along, shortest_pants_curve, CutLabel, Curve, MultiCurve};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PantalonType {
    /// Disk with two punctures.
    I,
    /// Annulus with one puncture.
    II,
    /// Sphere with three holes.
    III,
}

impl PantalonType {
    pub fn of(spec: SurfaceSpec) -> Option<PantalonType> {
        match (spec.genus, spec.boundary_count, spec.puncture_count) {
            (0, 1, 2) => Some(PantalonType::I),
            (0, 2, 1) => Some(PantalonType::II),
            (0, 3, 0) => Some(PantalonType::III),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PantsPiece {
    pub kind: PantalonType,
    /// Origin of each boundary circle: a side of a decomposition curve or a
    /// boundary circle of the surface.
    pub boundary: Vec<CutLabel>,
    /// Punctures of the surface lying in this piece.
    pub punctures: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct PantsDecomposition {
    pub surface: Surface,
    pub curves: Vec<Curve>,
    pub pieces: Vec<PantsPiece>,
}

/// Decomposition of the canonical model of `spec`, or `None` for the
/// surfaces that have none.
pub fn pants_decomposition(spec: SurfaceSpec) -> Result<Option<PantsDecomposition>> {
    if !spec.has_pants_decomposition() {
        return Ok(None);
    }
    let s: Surface = Arc::new(make_surface(spec));
    decompose(&s).map(Some)
}

/// Decomposition of an arbitrary cellulated surface that has one.
pub fn decompose(s: &Surface) -> Result<PantsDecomposition> {
    let curves = pants_curves_on(s)?;
    let pieces = if curves.is_empty() {
        vec![PantsPiece {
            kind: PantalonType::of(s.spec()).ok_or_else(|| Error::Precondition("no decomposition".into()))?,
            boundary: (0..s.boundary_circles().len()).map(|circle| CutLabel::Boundary { circle }).collect(),
            punctures: s.punctures().to_vec(),
        }]
    } else {
        cut_along(&MultiCurve::new(curves.clone())?)?
            .into_iter()
            .map(|c| {
                let kind = PantalonType::of(c.spec)
                    .ok_or_else(|| Error::NotEmbedded(format!("cut piece {} is not a pantalon", c.spec)))?;
                Ok(PantsPiece { kind, boundary: c.circle_labels, punctures: c.punctures })
            })
            .collect::<Result<Vec<_>>>()?
    };
    Ok(PantsDecomposition { surface: s.clone(), curves, pieces })
}

/// Pants curves found by cutting: the shortest admissible curve is taken,
/// the surface is cut along it and each piece is decomposed in turn, the
/// pieces' curves being lifted back. Admissible curves leave no annulus or
/// disk with at most one puncture, so every piece is a pantalon or has a
/// decomposition of smaller complexity.
pub fn pants_curves_on(s: &Surface) -> Result<Vec<Curve>> {
    let spec = s.spec();
    if PantalonType::of(spec).is_some() {
        return Ok(Vec::new());
    }
    if !spec.has_pants_decomposition() {
        return Err(Error::Precondition(format!("{spec} has no pants decomposition")));
    }
    let c = shortest_pants_curve(s)?;
    let mut out = vec![c.clone()];
    for piece in cut_along(&MultiCurve::new(vec![c])?)? {
        let sub: Surface = Arc::new(piece.surface.clone());
        for x in pants_curves_on(&sub)? {
            out.push(piece.lift(&x, s)?);
        }
    }
    if out.len() != spec.complexity() as usize {
        return Err(Error::NotEmbedded(format!("found {} pants curves on {spec}", out.len())));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceptional_families() {
        for spec in [
            SurfaceSpec::new(0, 0, 3),
            SurfaceSpec::new(0, 1, 1),
            SurfaceSpec::new(0, 2, 0),
            SurfaceSpec::new(1, 0, 0),
        ] {
            assert!(pants_decomposition(spec).unwrap().is_none(), "{spec}");
        }
    }

    #[test]
    fn small_decompositions() {
        for (spec, p, r) in [
            (SurfaceSpec::new(0, 0, 4), 1, 2),
            (SurfaceSpec::new(1, 1, 0), 1, 1),
            (SurfaceSpec::new(2, 0, 0), 3, 2),
            (SurfaceSpec::new(0, 3, 0), 0, 1),
            (SurfaceSpec::new(1, 0, 1), 1, 1),
        ] {
            let d = pants_decomposition(spec).unwrap().unwrap();
            assert_eq!(d.curves.len(), p, "{spec}");
            assert_eq!(d.pieces.len(), r, "{spec}");
            let slots: usize = d.pieces.iter().map(|x| x.boundary.len() + x.punctures.len()).sum();
            assert_eq!(slots, 3 * r);
        }
    }
}
