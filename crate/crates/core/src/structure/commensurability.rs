use super::config::SubsurfaceConfig;
use super::theorems::{doubled_pantalon_type, is_marked_injective};
use crate::cell_surface::PantalonType;
use crate::curve_engine::{is_isotopic, same_host};
use crate::error::{Error, Result};
use serde::Serialize;

/// Statements about two subsurfaces `N`, `N'`:
/// `a` their groups are commensurable, `b` equal, `c` the subsurfaces are
/// isotopic, `d` `N` is isotopic to `N'` or to the closure of its complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommensurabilityReport {
    pub doubled: Option<PantalonType>,
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
    /// Index of the intersection in each group when commensurable but unequal.
    pub intersection_index: Option<u32>,
}

/// For each boundary curve of `n`, whether `n2` lies on the same side of the
/// matching boundary curve of `n2`; `None` if the boundaries are not
/// isotopic multicurves.
fn boundary_sides(n: &SubsurfaceConfig, n2: &SubsurfaceConfig) -> Result<Option<Vec<bool>>> {
    let (x, y) = (n.concrete_part()?, n2.concrete_part()?);
    if !same_host(&x.host, &y.host) {
        return Err(Error::HostMismatch);
    }
    if n.l() != n2.l() {
        return Ok(None);
    }
    let mut used = vec![false; n2.l()];
    let mut sides = Vec::new();
    for (i, a) in x.boundary.components.iter().enumerate() {
        let mut found = None;
        for (j, b) in y.boundary.components.iter().enumerate() {
            if !used[j] && is_isotopic(a, b, false)? {
                found = Some((j, is_isotopic(a, b, true)?));
                break;
            }
        }
        let Some((j, same_way)) = found else { return Ok(None) };
        used[j] = true;
        sides.push((x.n_on_left[i] == y.n_on_left[j]) == same_way);
    }
    Ok(Some(sides))
}

/// `N` and `N'` are isotopic.
pub fn subsurfaces_isotopic(n: &SubsurfaceConfig, n2: &SubsurfaceConfig) -> Result<bool> {
    if n.l() == 0 {
        return Ok(n2.l() == 0);
    }
    Ok(boundary_sides(n, n2)?.is_some_and(|s| s.iter().all(|&x| x)))
}

/// `N` is isotopic to the closure of the complement of `N'`.
pub fn isotopic_to_complement(n: &SubsurfaceConfig, n2: &SubsurfaceConfig) -> Result<bool> {
    let [rest] = &n2.complement_components[..] else { return Ok(false) };
    if rest.boundary_to_m > 0 || n.sub != rest.spec() {
        return Ok(false);
    }
    Ok(boundary_sides(n, n2)?.is_some_and(|s| s.iter().all(|&x| !x)))
}

fn check_inputs(n: &SubsurfaceConfig, n2: &SubsurfaceConfig) -> Result<()> {
    for (name, x) in [("N", n), ("N'", n2)] {
        if !is_marked_injective(x) {
            return Err(Error::Hypothesis(format!("{name} is not injective; see kernel_structure")));
        }
    }
    Ok(())
}

/// Decides statements `c` and `d` on the curves and derives `a` and `b`
/// from them according to whether `N` is half of a doubled pantalon.
pub fn commensurability_classify(n: &SubsurfaceConfig, n2: &SubsurfaceConfig) -> Result<CommensurabilityReport> {
    check_inputs(n, n2)?;
    for x in [n, n2] {
        if x.sub.is_annulus() && x.sub.puncture_count == 0 {
            return Err(Error::Precondition("empty annuli are handled by annulus_commensurability".into()));
        }
    }
    let c = subsurfaces_isotopic(n, n2)?;
    let d = c || isotopic_to_complement(n, n2)?;
    let doubled = doubled_pantalon_type(n);
    let (a, b) = match doubled {
        None => (c, c),
        Some(PantalonType::II | PantalonType::III) => (d, d),
        Some(PantalonType::I) => (d, c),
    };
    let intersection_index = (a && !b).then_some(2);
    Ok(CommensurabilityReport { doubled, a, b, c, d, intersection_index })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnnulusCase {
    /// `N'` is an annulus isotopic to `N`.
    IsotopicAnnulus,
    /// `N'` is a twice-punctured disk isotopic to a piece of the exterior
    /// of `N`.
    TwicePuncturedDisk,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnnulusReport {
    pub case: AnnulusCase,
    pub commensurable: bool,
}

/// Commensurability with the group of an annulus without punctures,
/// which is generated by one twist.
pub fn annulus_commensurability(n: &SubsurfaceConfig, n2: &SubsurfaceConfig) -> Result<AnnulusReport> {
    if !(n.sub.is_annulus() && n.sub.puncture_count == 0) {
        return Err(Error::Precondition("N must be an annulus without punctures".into()));
    }
    check_inputs(n, n2)?;
    let (x, y) = (n.concrete_part()?, n2.concrete_part()?);
    if !same_host(&x.host, &y.host) {
        return Err(Error::HostMismatch);
    }
    let core = &x.boundary.components[0];
    let case = if n2.sub.is_annulus() && n2.sub.puncture_count == 0 {
        if is_isotopic(core, &y.boundary.components[0], false)? {
            AnnulusCase::IsotopicAnnulus
        } else {
            AnnulusCase::None
        }
    } else if n2.sub.is_disk() && n2.sub.puncture_count == 2 {
        let rim = &y.boundary.components[0];
        let mut hit = false;
        for (k, b) in x.boundary.components.iter().enumerate() {
            let piece = n.complement_components.iter().find(|p| p.boundary_to_n.contains(&n.boundary_curves[k]));
            if piece.map(|p| p.spec()) != Some(n2.sub) || !is_isotopic(b, rim, false)? {
                continue;
            }
            // N' must sit on the far side of b from N
            let same_side = (x.n_on_left[k] == y.n_on_left[0]) == is_isotopic(b, rim, true)?;
            if !same_side {
                hit = true;
                break;
            }
        }
        if hit {
            AnnulusCase::TwicePuncturedDisk
        } else {
            AnnulusCase::None
        }
    } else {
        AnnulusCase::None
    };
    Ok(AnnulusReport { case, commensurable: case != AnnulusCase::None })
}
