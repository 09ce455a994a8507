use crate::cell_surface::{Surface, SurfaceSpec};
use crate::curve_engine::{cut_along, CutComponent, CutLabel, Curve, MultiCurve};
use crate::error::{Error, Result};
use crate::mcg_algebra::{parse_letters, CurveRegistry, TwistWord};
use serde::{Deserialize, Serialize};

/// A component of the closure of `M \ N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementComponent {
    pub genus: usize,
    pub punctures: usize,
    /// Labels of the components of `∂N` on this piece.
    pub boundary_to_n: Vec<String>,
    /// Number of boundary circles of `M` on this piece.
    pub boundary_to_m: usize,
}

impl ComplementComponent {
    pub fn new(genus: usize, punctures: usize, boundary_to_n: &[&str], boundary_to_m: usize) -> ComplementComponent {
        ComplementComponent {
            genus,
            punctures,
            boundary_to_n: boundary_to_n.iter().map(|s| s.to_string()).collect(),
            boundary_to_m,
        }
    }

    pub fn spec(&self) -> SurfaceSpec {
        SurfaceSpec::new(self.genus, self.boundary_to_n.len() + self.boundary_to_m, self.punctures)
    }

    pub fn euler_char(&self) -> i64 {
        self.spec().euler_char()
    }

    /// Disk with exactly one puncture.
    pub fn is_pointed_disk(&self) -> bool {
        self.genus == 0 && self.boundary_to_n.len() == 1 && self.boundary_to_m == 0 && self.punctures == 1
    }

    pub fn is_empty_disk(&self) -> bool {
        self.genus == 0 && self.boundary_to_n.len() == 1 && self.boundary_to_m == 0 && self.punctures == 0
    }

    /// Annulus without punctures both of whose circles lie on `∂N`.
    pub fn is_exterior_cylinder(&self) -> bool {
        self.genus == 0 && self.boundary_to_n.len() == 2 && self.boundary_to_m == 0 && self.punctures == 0
    }
}

/// Which piece of the cut surface is `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Index into the output of `cut_along`.
    Component(usize),
    /// The piece on the left of the given curve.
    LeftOf(usize),
    RightOf(usize),
}

/// Geometry behind a config built from curves.
#[derive(Debug, Clone)]
pub struct Concrete {
    pub host: Surface,
    /// Components of `∂N`, in label order.
    pub boundary: MultiCurve,
    /// `N` lies on the left of boundary curve `i`.
    pub n_on_left: Vec<bool>,
    pub n_piece: CutComponent,
    /// Cut pieces other than `N`, aligned with `complement_components`.
    pub complement_pieces: Vec<CutComponent>,
}

/// A connected subsurface `N` of `M` together with its exterior. The
/// boundary of `N` lies in the interior of `M`, so `sub.boundary_count`
/// is the number `l` of boundary curves.
#[derive(Debug, Clone, Serialize)]
pub struct SubsurfaceConfig {
    pub ambient: SurfaceSpec,
    pub sub: SurfaceSpec,
    pub boundary_curves: Vec<String>,
    pub complement_components: Vec<ComplementComponent>,
    /// Boundary curves cobounding an exterior cylinder, earlier label first.
    pub cylinder_pairs: Vec<(String, String)>,
    /// Boundary curves bounding a pointed disk outside `N`.
    pub pointed_disk_curves: Vec<String>,
    #[serde(skip)]
    pub concrete: Option<Concrete>,
}

impl SubsurfaceConfig {
    /// Config from counts alone; the boundary labels are read off the
    /// complement components, in order of appearance.
    pub fn symbolic(
        ambient: SurfaceSpec,
        sub: SurfaceSpec,
        complement_components: Vec<ComplementComponent>,
    ) -> Result<SubsurfaceConfig> {
        let boundary_curves = complement_components.iter().flat_map(|c| c.boundary_to_n.iter().cloned()).collect();
        SubsurfaceConfig::assemble(ambient, sub, boundary_curves, complement_components, None)
    }

    fn assemble(
        ambient: SurfaceSpec,
        sub: SurfaceSpec,
        boundary_curves: Vec<String>,
        complement_components: Vec<ComplementComponent>,
        concrete: Option<Concrete>,
    ) -> Result<SubsurfaceConfig> {
        let bad = |m: String| Err(Error::Precondition(m));
        if boundary_curves.len() != sub.boundary_count {
            return bad(format!("{} boundary curves for a subsurface {}", boundary_curves.len(), sub));
        }
        for (i, b) in boundary_curves.iter().enumerate() {
            if boundary_curves[..i].contains(b) {
                return bad(format!("boundary label {b} repeated"));
            }
            let n = complement_components.iter().flat_map(|c| &c.boundary_to_n).filter(|x| *x == b).count();
            if n != 1 {
                return bad(format!("boundary curve {b} lies on {n} complement components"));
            }
        }
        let listed: usize = complement_components.iter().map(|c| c.boundary_to_n.len()).sum();
        if listed != boundary_curves.len() {
            return bad("complement lists an unknown boundary curve".into());
        }
        let chi: i64 = sub.euler_char() + complement_components.iter().map(|c| c.euler_char()).sum::<i64>();
        if chi != ambient.euler_char() {
            return bad(format!("Euler characteristics do not add up: {} vs {}", chi, ambient.euler_char()));
        }
        let q: usize = complement_components.iter().map(|c| c.boundary_to_m).sum();
        if q != ambient.boundary_count {
            return bad(format!("{q} boundary circles of M on the complement, expected {}", ambient.boundary_count));
        }
        let m: usize = sub.puncture_count + complement_components.iter().map(|c| c.punctures).sum::<usize>();
        if m != ambient.puncture_count {
            return bad(format!("{m} punctures accounted for, expected {}", ambient.puncture_count));
        }
        let index = |b: &String| boundary_curves.iter().position(|x| x == b).unwrap();
        let mut cylinder_pairs = Vec::new();
        let mut pointed_disk_curves = Vec::new();
        for c in &complement_components {
            if c.is_exterior_cylinder() {
                let (x, y) = (&c.boundary_to_n[0], &c.boundary_to_n[1]);
                let pair = if index(x) < index(y) { (x.clone(), y.clone()) } else { (y.clone(), x.clone()) };
                cylinder_pairs.push(pair);
            } else if c.is_pointed_disk() {
                pointed_disk_curves.push(c.boundary_to_n[0].clone());
            }
        }
        cylinder_pairs.sort_by_key(|p| index(&p.0));
        pointed_disk_curves.sort_by_key(index);
        Ok(SubsurfaceConfig {
            ambient,
            sub,
            boundary_curves,
            complement_components,
            cylinder_pairs,
            pointed_disk_curves,
            concrete,
        })
    }

    /// Number `l` of boundary curves.
    pub fn l(&self) -> usize {
        self.boundary_curves.len()
    }

    /// The boundary curves by label, for building twist words.
    pub fn registry(&self) -> Result<CurveRegistry> {
        let c = self.concrete_part()?;
        let mut reg = CurveRegistry::new(c.host.clone());
        for (name, curve) in self.boundary_curves.iter().zip(&c.boundary.components) {
            reg.insert(name, curve.clone())?;
        }
        Ok(reg)
    }

    /// A twist word over the boundary labels, keeping every letter so that
    /// trivial twists are tested rather than dropped.
    pub fn boundary_word(&self, text: &str) -> Result<TwistWord> {
        let reg = self.registry()?;
        let letters = parse_letters(text)?
            .into_iter()
            .map(|(n, e)| Ok((n.clone(), reg.get(&n)?.clone(), e)))
            .collect::<Result<Vec<_>>>()?;
        TwistWord::with_all_letters(reg.host().clone(), letters)
    }

    pub fn concrete_part(&self) -> Result<&Concrete> {
        self.concrete.as_ref().ok_or_else(|| Error::Precondition("config has no curves attached".into()))
    }

    /// Pants curves of `N` in the ambient surface.
    pub fn interior_pants_curves(&self) -> Result<Vec<Curve>> {
        let c = self.concrete_part()?;
        if !self.sub.has_pants_decomposition() {
            return Ok(Vec::new());
        }
        let piece: Surface = std::sync::Arc::new(c.n_piece.surface.clone());
        crate::cell_surface::pants_curves_on(&piece)?.iter().map(|x| c.n_piece.lift(x, &c.host)).collect()
    }
}

/// Labels `b1, b2, ...` of the curves of a multicurve.
pub fn boundary_label(i: usize) -> String {
    format!("b{}", i + 1)
}

/// Analyses the subsurface `N` cut out by `boundary`. Every curve has to
/// bound `N` exactly once and `N` may not contain boundary circles of `M`.
pub fn complement_analysis(m: &Surface, boundary: &MultiCurve, side: Side) -> Result<SubsurfaceConfig> {
    if boundary.components.iter().any(|c| !crate::curve_engine::same_host(c.host(), m)) {
        return Err(Error::HostMismatch);
    }
    let pieces = cut_along(boundary)?;
    let k = match side {
        Side::Component(k) if k < pieces.len() => k,
        Side::Component(k) => return Err(Error::Precondition(format!("no cut component {k}"))),
        Side::LeftOf(i) | Side::RightOf(i) => {
            let left = matches!(side, Side::LeftOf(_));
            let want = CutLabel::Curve { curve: i, left };
            pieces
                .iter()
                .position(|p| p.circle_labels.contains(&want))
                .ok_or_else(|| Error::Precondition(format!("no curve {i}")))?
        }
    };
    analyse(m, boundary, pieces, k)
}

/// Every cut component that is a subsurface bounded by all of `boundary`.
pub fn subsurfaces(m: &Surface, boundary: &MultiCurve) -> Result<Vec<SubsurfaceConfig>> {
    let pieces = cut_along(boundary)?;
    let mut out = Vec::new();
    for k in 0..pieces.len() {
        match analyse(m, boundary, pieces.clone(), k) {
            Ok(c) => out.push(c),
            Err(Error::Precondition(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

fn analyse(m: &Surface, boundary: &MultiCurve, mut pieces: Vec<CutComponent>, k: usize) -> Result<SubsurfaceConfig> {
    let n = pieces.remove(k);
    if n.circle_labels.iter().any(|l| !matches!(l, CutLabel::Curve { .. })) {
        return Err(Error::Precondition("N contains a boundary circle of M".into()));
    }
    let mut n_on_left = Vec::new();
    for i in 0..boundary.len() {
        let ls = n.labels_of_curve(i);
        let [CutLabel::Curve { left, .. }] = ls[..] else {
            return Err(Error::Precondition(format!("curve {i} bounds N {} times", ls.len())));
        };
        n_on_left.push(left);
    }
    let complement_components = pieces
        .iter()
        .map(|p| {
            let mut to_n = Vec::new();
            let mut to_m = 0;
            for l in &p.circle_labels {
                match *l {
                    CutLabel::Curve { curve, .. } => to_n.push(boundary_label(curve)),
                    CutLabel::Boundary { .. } => to_m += 1,
                    CutLabel::Mixed => unreachable!("disjoint curves give no mixed circles"),
                }
            }
            ComplementComponent { genus: p.spec.genus, punctures: p.punctures.len(), boundary_to_n: to_n, boundary_to_m: to_m }
        })
        .collect();
    let labels = (0..boundary.len()).map(boundary_label).collect();
    let concrete =
        Concrete { host: m.clone(), boundary: boundary.clone(), n_on_left, n_piece: n.clone(), complement_pieces: pieces };
    SubsurfaceConfig::assemble(m.spec(), n.spec, labels, complement_components, Some(concrete))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_bookkeeping() {
        // two pointed disks and an exterior cylinder around a genus-one N
        let c = SubsurfaceConfig::symbolic(
            SurfaceSpec::new(2, 0, 2),
            SurfaceSpec::new(1, 4, 0),
            vec![
                ComplementComponent::new(0, 1, &["a1"], 0),
                ComplementComponent::new(0, 1, &["a2"], 0),
                ComplementComponent::new(0, 0, &["b1'", "b1"], 0),
            ],
        )
        .unwrap();
        assert_eq!(c.pointed_disk_curves, vec!["a1", "a2"]);
        assert_eq!(c.cylinder_pairs, vec![("b1'".to_string(), "b1".to_string())]);
        let wrong = SubsurfaceConfig::symbolic(
            SurfaceSpec::new(2, 0, 2),
            SurfaceSpec::new(1, 1, 0),
            vec![ComplementComponent::new(0, 2, &["c"], 0)],
        );
        assert!(wrong.is_err());
    }
}
