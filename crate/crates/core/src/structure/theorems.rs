use super::config::SubsurfaceConfig;
use super::group::{CyclicOrder, GroupStructure};
use crate::cell_surface::{PantalonType, SurfaceSpec};
use crate::error::{Error, Result};
use serde::Serialize;

/// No exterior component is a disk without punctures.
pub fn is_essential_subsurface(c: &SubsurfaceConfig) -> bool {
    !c.complement_components.iter().any(|x| x.is_empty_disk())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "kebab-case")]
pub enum Injectivity {
    Injective,
    NotInjective(String),
}

impl Injectivity {
    pub fn is_injective(&self) -> bool {
        matches!(self, Injectivity::Injective)
    }
}

fn small_disk(c: &SubsurfaceConfig) -> bool {
    c.sub.is_disk() && c.sub.puncture_count <= 1
}

fn empty_annulus(s: SurfaceSpec) -> bool {
    s.is_annulus() && s.puncture_count == 0
}

/// Whether `M(N, Q) -> M(M, P)` is injective.
pub fn injectivity(c: &SubsurfaceConfig) -> Injectivity {
    if small_disk(c) {
        return Injectivity::Injective;
    }
    let disk = c.complement_components.iter().find(|x| x.is_empty_disk() || x.is_pointed_disk());
    if let Some(d) = disk {
        return Injectivity::NotInjective(format!(
            "{} bounds a disk with {} puncture(s) outside N",
            d.boundary_to_n[0], d.punctures
        ));
    }
    if !empty_annulus(c.sub) {
        if let Some((x, y)) = c.cylinder_pairs.first() {
            return Injectivity::NotInjective(format!("{x} and {y} cobound an exterior cylinder"));
        }
    }
    Injectivity::Injective
}

/// The stricter notion used for commensurability: `N` essential, and
/// disks carry at least two punctures besides the conditions above.
pub fn is_marked_injective(c: &SubsurfaceConfig) -> bool {
    is_essential_subsurface(c) && !(c.sub.is_disk() && c.sub.puncture_count < 2) && injectivity(c).is_injective()
}

/// Kernel of `M(N, Q) -> M(M, P)`. Generators are written as twist words
/// over the boundary labels.
pub fn kernel_structure(c: &SubsurfaceConfig) -> Result<GroupStructure> {
    if !is_essential_subsurface(c) {
        return Err(Error::Hypothesis("N is not essential".into()));
    }
    if small_disk(c) {
        return Ok(GroupStructure::Trivial);
    }
    if empty_annulus(c.sub) {
        // a twist along the core generates M(N); it dies iff a boundary
        // curve bounds a pointed disk
        return Ok(match c.pointed_disk_curves.first() {
            Some(a) => GroupStructure::free_abelian(vec![a.clone()]),
            None => GroupStructure::Trivial,
        });
    }
    let mut gens: Vec<String> = c.pointed_disk_curves.clone();
    gens.extend(c.cylinder_pairs.iter().map(|(b, b2)| format!("{b}^-1 {b2}")));
    Ok(GroupStructure::free_abelian(gens))
}

/// Boundary labels whose twists survive in `M(M, P)`.
pub fn non_kernel_boundary_twists(c: &SubsurfaceConfig) -> Vec<String> {
    // both boundary twists of an empty annulus are its core twist
    if empty_annulus(c.sub) && !c.pointed_disk_curves.is_empty() {
        return Vec::new();
    }
    c.boundary_curves
        .iter()
        .filter(|b| !c.pointed_disk_curves.contains(b))
        .filter(|b| !c.cylinder_pairs.iter().any(|(x, y)| x == *b || y == *b))
        .cloned()
        .collect()
}

fn boundary_twists(q: usize) -> GroupStructure {
    GroupStructure::free_abelian((1..=q).map(|i| format!("C{i}")).collect())
}

/// Centre of `M(M, P)`.
pub fn centre(spec: SurfaceSpec) -> GroupStructure {
    use GroupStructure as G;
    match (spec.genus, spec.boundary_count, spec.puncture_count) {
        // the whole group is trivial
        (0, 0, 0..=1) | (0, 1, 0..=1) => G::Trivial,
        (0, 0, 2) => G::FiniteCyclic(2),
        (0, 0, 3) => G::Trivial,
        // generated by the half-twist exchanging the punctures
        (0, 1, 2) => G::cyclic_by("sigma", CyclicOrder::Infinite),
        // one twist, whichever boundary circle it is taken along
        (0, 2, 0) => boundary_twists(1),
        (1, 0, 0..=2) => G::FiniteCyclic(2),
        (1, 1, 0) => G::cyclic_by("rho", CyclicOrder::Infinite),
        (2, 0, 0) => G::FiniteCyclic(2),
        (_, q, _) => boundary_twists(q),
    }
}

/// Relations tying a half-twist generator of the centre to boundary twists.
pub fn centre_relations(spec: SurfaceSpec) -> Vec<String> {
    match (spec.genus, spec.boundary_count, spec.puncture_count) {
        (0, 1, 2) => vec!["sigma^2 = C1".into()],
        (1, 1, 0) => vec!["rho^2 = C1".into(), "rho = (A B A)^2".into()],
        _ => Vec::new(),
    }
}

/// `M` obtained by gluing two copies of one pantalon along their boundaries,
/// with `N` one of them.
pub fn doubled_pantalon_type(c: &SubsurfaceConfig) -> Option<PantalonType> {
    let kind = PantalonType::of(c.sub)?;
    let [other] = &c.complement_components[..] else { return None };
    if other.boundary_to_m != 0 || PantalonType::of(other.spec()) != Some(kind) {
        return None;
    }
    let ambient = match kind {
        PantalonType::I => SurfaceSpec::new(0, 0, 4),
        PantalonType::II => SurfaceSpec::new(1, 0, 2),
        PantalonType::III => SurfaceSpec::new(2, 0, 0),
    };
    (c.ambient == ambient).then_some(kind)
}

#[cfg(test)]
mod tests {
    use super::super::config::ComplementComponent;
    use super::*;

    fn cfg(ambient: (usize, usize, usize), sub: (usize, usize, usize), comps: Vec<ComplementComponent>) -> SubsurfaceConfig {
        SubsurfaceConfig::symbolic(SurfaceSpec::new(ambient.0, ambient.1, ambient.2), SurfaceSpec::new(sub.0, sub.1, sub.2), comps)
            .unwrap()
    }

    #[test]
    fn annulus_twists_die_together() {
        let c = cfg((0, 0, 4), (0, 2, 0), vec![ComplementComponent::new(0, 1, &["b1"], 0), ComplementComponent::new(0, 3, &["b2"], 0)]);
        assert_eq!(kernel_structure(&c).unwrap().free_rank(), Some(1));
        assert!(non_kernel_boundary_twists(&c).is_empty());
    }

    #[test]
    fn named_non_injective_instances() {
        // twice-punctured disk in the twice-punctured sphere
        let a = cfg((0, 0, 2), (0, 1, 2), vec![ComplementComponent::new(0, 0, &["c"], 0)]);
        assert!(!injectivity(&a).is_injective());
        assert!(!is_essential_subsurface(&a));
        // punctured annulus in the punctured torus
        let b = cfg((1, 0, 1), (0, 2, 1), vec![ComplementComponent::new(0, 0, &["x", "y"], 0)]);
        assert!(!injectivity(&b).is_injective());
        assert_eq!(kernel_structure(&b).unwrap().free_rank(), Some(1));
    }

    #[test]
    fn small_disks_diverge() {
        let d = cfg((0, 0, 4), (0, 1, 1), vec![ComplementComponent::new(0, 3, &["c"], 0)]);
        assert!(injectivity(&d).is_injective());
        assert!(!is_marked_injective(&d));
    }

    #[test]
    fn doubled_types() {
        let i = cfg((0, 0, 4), (0, 1, 2), vec![ComplementComponent::new(0, 2, &["c"], 0)]);
        let ii = cfg((1, 0, 2), (0, 2, 1), vec![ComplementComponent::new(0, 1, &["x", "y"], 0)]);
        let iii = cfg((2, 0, 0), (0, 3, 0), vec![ComplementComponent::new(0, 0, &["x", "y", "z"], 0)]);
        assert_eq!(doubled_pantalon_type(&i), Some(PantalonType::I));
        assert_eq!(doubled_pantalon_type(&ii), Some(PantalonType::II));
        assert_eq!(doubled_pantalon_type(&iii), Some(PantalonType::III));
        let no = cfg((0, 0, 5), (0, 1, 2), vec![ComplementComponent::new(0, 3, &["c"], 0)]);
        assert_eq!(doubled_pantalon_type(&no), None);
    }
}
