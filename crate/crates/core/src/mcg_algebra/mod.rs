//! Mapping classes as words in Dehn twists, known through their action on
//! curves.

mod checks;
mod word;

pub use checks::{braid_relation_check, commutation_check, free_group_check, multitwist_injectivity, InjectivityVerdict};
pub use word::{parse_letters, Built, CurveRegistry, Letter, TwistWord};
