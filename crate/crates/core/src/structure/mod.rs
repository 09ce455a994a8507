//! Classification of geometric subgroups from subsurface data. Groups are
//! symbolic expressions; the stabilizer of a subsurface stays an opaque
//! named factor described through exact sequences.

mod commensurability;
mod config;
mod group;
mod report;
mod stabilizer;
mod theorems;

pub use commensurability::{
    annulus_commensurability, commensurability_classify, isotopic_to_complement, subsurfaces_isotopic, AnnulusCase,
    AnnulusReport, CommensurabilityReport,
};
pub use config::{boundary_label, complement_analysis, subsurfaces, ComplementComponent, Concrete, Side, SubsurfaceConfig};
pub use group::{CyclicOrder, ExactSequenceDescriptor, GroupStructure};
pub use report::classification_report;
pub use stabilizer::{
    centralizer, commensurator_normalizer, pasting_kernel, stabilizer_sequence, Centralizer, CENTRALIZER, STAB,
};
pub use theorems::{
    centre, centre_relations, doubled_pantalon_type, injectivity, is_essential_subsurface, is_marked_injective,
    kernel_structure, non_kernel_boundary_twists, Injectivity,
};
