use super::config::SubsurfaceConfig;
use super::group::{CyclicOrder, ExactSequenceDescriptor, GroupStructure as G};
use super::theorems::{centre, doubled_pantalon_type, is_marked_injective};
use crate::cell_surface::{PantalonType, SurfaceSpec};
use crate::error::{Error, Result};
use serde::Serialize;

pub const STAB: &str = "Stab(N)";
pub const CENTRALIZER: &str = "Z_G(H)";

fn stab() -> G {
    G::named(STAB)
}

/// The exchange of the two halves of a doubled pantalon, or the central
/// involution of the torus.
fn sigma() -> G {
    G::cyclic_by("sigma", CyclicOrder::Two)
}

fn require_injective(c: &SubsurfaceConfig) -> Result<()> {
    if !is_marked_injective(c) {
        return Err(Error::Hypothesis("N is not injective; see kernel_structure".into()));
    }
    Ok(())
}

fn empty_annulus(c: &SubsurfaceConfig) -> bool {
    c.sub.is_annulus() && c.sub.puncture_count == 0
}

fn complement_groups(c: &SubsurfaceConfig) -> Vec<G> {
    c.complement_components.iter().map(|x| G::mcg(x.spec())).collect()
}

/// `C_i C_i'^-1` for every boundary curve: the twist along it inside `N`
/// against the one inside the exterior.
fn gluing_kernel(c: &SubsurfaceConfig) -> G {
    G::free_abelian(c.boundary_curves.iter().map(|b| format!("C({b}) C'({b})^-1")).collect())
}

/// `(commensurator, normalizer)` of the geometric subgroup of `N`.
pub fn commensurator_normalizer(c: &SubsurfaceConfig) -> Result<(G, G)> {
    require_injective(c)?;
    Ok(match doubled_pantalon_type(c) {
        None => (stab(), stab()),
        Some(PantalonType::II | PantalonType::III) => {
            let g = G::product(vec![stab(), sigma()]);
            (g.clone(), g)
        }
        Some(PantalonType::I) => (G::semidirect(stab(), sigma(), "conjugation"), stab()),
    })
}

/// How `Stab(N)` is assembled from the mapping class groups of `N` and of
/// the pieces of its exterior.
pub fn stabilizer_sequence(c: &SubsurfaceConfig) -> Result<ExactSequenceDescriptor> {
    require_injective(c)?;
    if !empty_annulus(c) {
        let mut factors = vec![G::mcg(c.sub)];
        factors.extend(complement_groups(c));
        return ExactSequenceDescriptor::new(
            vec![gluing_kernel(c), G::product(factors), stab(), G::Symmetric(c.l())],
            vec!["", "phi", "tau"],
            false,
        );
    }
    let (b1, b2) = (&c.boundary_curves[0], &c.boundary_curves[1]);
    let core = G::free_abelian(vec![format!("C({b1}) C({b2})^-1")]);
    let comps = complement_groups(c);
    if c.ambient == SurfaceSpec::new(1, 0, 0) {
        let split = G::product(vec![G::mcg(c.sub), sigma()]);
        return ExactSequenceDescriptor::new(vec![split, stab()], vec!["iso"], true);
    }
    match comps.len() {
        1 => ExactSequenceDescriptor::new(
            vec![core, comps[0].clone(), stab(), G::Symmetric(2)],
            vec!["theta", "iota", "tau"],
            true,
        ),
        _ => ExactSequenceDescriptor::new(
            vec![core, G::product(comps), stab(), G::Symmetric(2)],
            vec!["", "iota", "tau"],
            false,
        ),
    }
}

fn check_piece(name: &str, s: SurfaceSpec, l: usize) -> Result<()> {
    if s.is_disk() && s.puncture_count < 2 {
        return Err(Error::Hypothesis(format!("{name} is a disk with fewer than two punctures")));
    }
    if s.is_annulus() && s.puncture_count < 1 {
        return Err(Error::Hypothesis(format!("{name} is an annulus without punctures")));
    }
    if l > s.boundary_count {
        return Err(Error::Hypothesis(format!("{name} has only {} boundary circles", s.boundary_count)));
    }
    Ok(())
}

/// Kernel of `M(N, Q) x M(N', Q') -> M(M, P)` when `N` and `N'` are glued
/// along `l` boundary circles.
pub fn pasting_kernel(n: SurfaceSpec, n2: SurfaceSpec, l: usize) -> Result<G> {
    if l == 0 {
        return Err(Error::Hypothesis("at least one curve must be glued".into()));
    }
    check_piece("N", n, l)?;
    check_piece("N'", n2, l)?;
    Ok(G::free_abelian((1..=l).map(|i| format!("(C{i},C{i}'^-1)")).collect()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "form", rename_all = "kebab-case")]
pub enum Centralizer {
    Group { group: G },
    Sequence {
        sequence: ExactSequenceDescriptor,
        /// The exterior factors alone, when they map isomorphically.
        #[serde(skip_serializing_if = "Option::is_none")]
        isomorphic_to: Option<G>,
    },
}

/// Centralizer of the geometric subgroup of `N`.
pub fn centralizer(c: &SubsurfaceConfig) -> Result<Centralizer> {
    require_injective(c)?;
    if empty_annulus(c) {
        return Ok(Centralizer::Group { group: stab() });
    }
    if matches!(doubled_pantalon_type(c), Some(PantalonType::II | PantalonType::III)) {
        return Ok(Centralizer::Group { group: G::product(vec![G::mcg(c.sub), sigma()]) });
    }
    let mut factors = vec![centre(c.sub)];
    factors.extend(complement_groups(c));
    let sequence = ExactSequenceDescriptor::new(
        vec![gluing_kernel(c), G::product(factors), G::named(CENTRALIZER)],
        vec!["", "phi"],
        true,
    )?;
    let s = c.sub;
    let centre_is_boundary =
        !(s.is_disk() && s.puncture_count < 3) && !(s.genus == 1 && s.boundary_count == 1 && s.puncture_count < 1);
    let isomorphic_to = centre_is_boundary.then(|| G::product(complement_groups(c)));
    Ok(Centralizer::Sequence { sequence, isomorphic_to })
}
