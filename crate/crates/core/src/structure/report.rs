use super::commensurability::{annulus_commensurability, commensurability_classify};
use super::config::SubsurfaceConfig;
use super::group::GroupStructure;
use super::stabilizer::{centralizer, commensurator_normalizer, stabilizer_sequence};
use super::theorems::{
    centre, centre_relations, doubled_pantalon_type, injectivity, is_essential_subsurface, is_marked_injective,
    kernel_structure,
};
use crate::error::Result;
use serde_json::{json, Value};

fn group_json(g: &GroupStructure) -> Value {
    serde_json::to_value(g).expect("group serializes")
}

/// Everything the structure layer says about `n`, compared with `other`
/// when given. Statements whose hypotheses fail are `null`.
pub fn classification_report(n: &SubsurfaceConfig, other: Option<&SubsurfaceConfig>) -> Result<Value> {
    let inj = injectivity(n);
    let kernel = if is_essential_subsurface(n) {
        let k = kernel_structure(n)?;
        let generators = match &k {
            GroupStructure::FreeAbelian { generators, .. } => generators.clone(),
            _ => Vec::new(),
        };
        json!({"rank": k.free_rank().unwrap_or(0), "generators": generators})
    } else {
        Value::Null
    };
    let marked = is_marked_injective(n);
    let commensurability = match other {
        Some(o) if marked && is_marked_injective(o) => {
            if n.sub.is_annulus() && n.sub.puncture_count == 0 {
                serde_json::to_value(annulus_commensurability(n, o)?).unwrap()
            } else if o.sub.is_annulus() && o.sub.puncture_count == 0 {
                Value::Null
            } else {
                serde_json::to_value(commensurability_classify(n, o)?).unwrap()
            }
        }
        _ => Value::Null,
    };
    let (commensurator, normalizer, stabilizer, central) = if marked {
        let (c, nn) = commensurator_normalizer(n)?;
        (
            group_json(&c),
            group_json(&nn),
            serde_json::to_value(stabilizer_sequence(n)?).unwrap(),
            serde_json::to_value(centralizer(n)?).unwrap(),
        )
    } else {
        (Value::Null, Value::Null, Value::Null, Value::Null)
    };
    Ok(json!({
        "ambient": n.ambient,
        "sub": n.sub,
        "essential": is_essential_subsurface(n),
        "injective": inj.is_injective(),
        "injectivity": inj,
        "marked_injective": marked,
        "kernel": kernel,
        "centre": group_json(&centre(n.sub)),
        "centre_relations": centre_relations(n.sub),
        "doubled": doubled_pantalon_type(n),
        "commensurability": commensurability,
        "commensurator": commensurator,
        "normalizer": normalizer,
        "stabilizer": stabilizer,
        "centralizer": central,
    }))
}
