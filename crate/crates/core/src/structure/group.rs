use crate::cell_surface::SurfaceSpec;
use crate::error::{Error, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CyclicOrder {
    Two,
    Infinite,
}

/// Symbolic group expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupStructure {
    Trivial,
    FiniteCyclic(u64),
    FreeAbelian { rank: usize, generators: Vec<String> },
    /// Mapping class group of a marked surface, or its pure subgroup.
    Mcg { spec: SurfaceSpec, pure: bool },
    Symmetric(usize),
    Product(Vec<GroupStructure>),
    Semidirect { normal: Box<GroupStructure>, acting: Box<GroupStructure>, label: String },
    /// Cyclic group generated by a named element.
    CyclicBy { generator: String, order: CyclicOrder },
    /// A group known only through the data that characterizes it.
    Named(String),
}

use GroupStructure as G;

impl GroupStructure {
    pub fn free_abelian(generators: Vec<String>) -> GroupStructure {
        G::FreeAbelian { rank: generators.len(), generators }
    }

    pub fn mcg(spec: SurfaceSpec) -> GroupStructure {
        G::Mcg { spec, pure: false }
    }

    pub fn cyclic_by(generator: &str, order: CyclicOrder) -> GroupStructure {
        G::CyclicBy { generator: generator.to_string(), order }
    }

    pub fn named(name: &str) -> GroupStructure {
        G::Named(name.to_string())
    }

    pub fn product(factors: Vec<GroupStructure>) -> GroupStructure {
        G::Product(factors)
    }

    pub fn semidirect(normal: GroupStructure, acting: GroupStructure, label: &str) -> GroupStructure {
        G::Semidirect { normal: Box::new(normal), acting: Box::new(acting), label: label.to_string() }
    }

    /// Flattens products, drops trivial factors and sorts the rest.
    pub fn canonical(&self) -> GroupStructure {
        match self {
            G::FreeAbelian { rank: 0, .. } | G::FiniteCyclic(1) | G::Symmetric(0) | G::Symmetric(1) => G::Trivial,
            G::Product(fs) => {
                let mut flat = Vec::new();
                for f in fs {
                    match f.canonical() {
                        G::Trivial => {}
                        G::Product(inner) => flat.extend(inner),
                        x => flat.push(x),
                    }
                }
                flat.sort();
                match flat.len() {
                    0 => G::Trivial,
                    1 => flat.pop().unwrap(),
                    _ => G::Product(flat),
                }
            }
            G::Semidirect { normal, acting, label } => {
                let (n, a) = (normal.canonical(), acting.canonical());
                if a == G::Trivial {
                    n
                } else {
                    G::Semidirect { normal: Box::new(n), acting: Box::new(a), label: label.clone() }
                }
            }
            x => x.clone(),
        }
    }

    /// Equality of canonical forms.
    pub fn equivalent(&self, other: &GroupStructure) -> bool {
        self.canonical() == other.canonical()
    }

    /// Rank of a free abelian group (0 for the trivial group).
    pub fn free_rank(&self) -> Option<usize> {
        match self.canonical() {
            G::Trivial => Some(0),
            G::FreeAbelian { rank, .. } => Some(rank),
            _ => None,
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            G::Trivial => json!({"type": "trivial"}),
            G::FiniteCyclic(n) => json!({"type": "cyclic-finite", "order": n}),
            G::FreeAbelian { rank, generators } => {
                json!({"type": "free-abelian", "rank": rank, "generators": generators})
            }
            G::Mcg { spec, pure } => json!({
                "type": "mcg",
                "genus": spec.genus,
                "boundary": spec.boundary_count,
                "punctures": spec.puncture_count,
                "pure": pure,
            }),
            G::Symmetric(n) => json!({"type": "symmetric", "degree": n}),
            G::Product(fs) => json!({"type": "product", "factors": fs.iter().map(|f| f.to_value()).collect::<Vec<_>>()}),
            G::Semidirect { normal, acting, label } => json!({
                "type": "semidirect",
                "normal": normal.to_value(),
                "acting": acting.to_value(),
                "label": label,
            }),
            G::CyclicBy { generator, order: CyclicOrder::Infinite } => {
                json!({"type": "cyclic-infinite", "generator": generator})
            }
            G::CyclicBy { generator, order: CyclicOrder::Two } => {
                json!({"type": "cyclic-order-two", "generator": generator})
            }
            G::Named(name) => json!({"type": "named", "name": name}),
        }
    }

    pub fn from_value(v: &Value) -> Result<GroupStructure> {
        let bad = || Error::Parse(format!("bad group expression {v}"));
        let int = |k: &str| v.get(k).and_then(Value::as_u64).ok_or_else(bad);
        let text = |k: &str| v.get(k).and_then(Value::as_str).map(str::to_string).ok_or_else(bad);
        let sub = |k: &str| v.get(k).ok_or_else(bad).and_then(GroupStructure::from_value);
        Ok(match v.get("type").and_then(Value::as_str).ok_or_else(bad)? {
            "trivial" => G::Trivial,
            "cyclic-finite" => G::FiniteCyclic(int("order")?),
            "free-abelian" => {
                let generators: Vec<String> = v
                    .get("generators")
                    .and_then(Value::as_array)
                    .ok_or_else(bad)?
                    .iter()
                    .map(|g| g.as_str().map(str::to_string).ok_or_else(bad))
                    .collect::<Result<_>>()?;
                let rank = int("rank")? as usize;
                if rank != generators.len() {
                    return Err(bad());
                }
                G::FreeAbelian { rank, generators }
            }
            "mcg" => G::Mcg {
                spec: SurfaceSpec::new(int("genus")? as usize, int("boundary")? as usize, int("punctures")? as usize),
                pure: v.get("pure").and_then(Value::as_bool).ok_or_else(bad)?,
            },
            "symmetric" => G::Symmetric(int("degree")? as usize),
            "product" => G::Product(
                v.get("factors")
                    .and_then(Value::as_array)
                    .ok_or_else(bad)?
                    .iter()
                    .map(GroupStructure::from_value)
                    .collect::<Result<_>>()?,
            ),
            "semidirect" => G::Semidirect {
                normal: Box::new(sub("normal")?),
                acting: Box::new(sub("acting")?),
                label: text("label")?,
            },
            "cyclic-infinite" => G::CyclicBy { generator: text("generator")?, order: CyclicOrder::Infinite },
            "cyclic-order-two" => G::CyclicBy { generator: text("generator")?, order: CyclicOrder::Two },
            "named" => G::Named(text("name")?),
            _ => return Err(bad()),
        })
    }
}

impl Serialize for GroupStructure {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_value().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupStructure {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        GroupStructure::from_value(&v).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            G::Trivial => write!(f, "1"),
            G::FiniteCyclic(n) => write!(f, "Z/{n}"),
            G::FreeAbelian { rank, .. } => write!(f, "Z^{rank}"),
            G::Mcg { spec, pure } => {
                let p = if *pure { "PM" } else { "M" };
                write!(f, "{p}({},{},{})", spec.genus, spec.boundary_count, spec.puncture_count)
            }
            G::Symmetric(n) => write!(f, "S_{n}"),
            G::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(" x "))
            }
            G::Semidirect { normal, acting, .. } => write!(f, "({normal} : {acting})"),
            G::CyclicBy { generator, .. } => write!(f, "<{generator}>"),
            G::Named(n) => write!(f, "{n}"),
        }
    }
}

/// `1 -> terms[0] -> ... -> terms[k]`, followed by `-> 1` when
/// `right_exact`. `maps[i]` labels the map out of `terms[i]` (empty when
/// unnamed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactSequenceDescriptor {
    pub terms: Vec<GroupStructure>,
    pub maps: Vec<String>,
    pub right_exact: bool,
}

impl ExactSequenceDescriptor {
    pub fn new(terms: Vec<GroupStructure>, maps: Vec<&str>, right_exact: bool) -> Result<ExactSequenceDescriptor> {
        let d = ExactSequenceDescriptor { terms, maps: maps.into_iter().map(str::to_string).collect(), right_exact };
        d.validate()?;
        Ok(d)
    }

    /// One label per map and a kernel whose rank matches its generators.
    pub fn validate(&self) -> Result<()> {
        if self.terms.is_empty() || self.maps.len() + 1 != self.terms.len() {
            return Err(Error::Precondition("sequence needs one map between consecutive terms".into()));
        }
        if let G::FreeAbelian { rank, generators } = &self.terms[0] {
            if *rank != generators.len() {
                return Err(Error::Precondition("kernel rank differs from its generator count".into()));
            }
        }
        Ok(())
    }

    /// The kernel term, i.e. the first one.
    pub fn kernel(&self) -> &GroupStructure {
        &self.terms[0]
    }
}

impl fmt::Display for ExactSequenceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1")?;
        for (i, t) in self.terms.iter().enumerate() {
            let label = if i == 0 { "" } else { self.maps[i - 1].as_str() };
            write!(f, " -{label}-> {t}")?;
        }
        if self.right_exact {
            write!(f, " --> 1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        let a = G::product(vec![
            G::free_abelian(vec![]),
            G::product(vec![G::named("Stab(N)"), G::FiniteCyclic(2)]),
        ]);
        let b = G::product(vec![G::FiniteCyclic(2), G::named("Stab(N)")]);
        assert!(a.equivalent(&b));
        assert_eq!(G::free_abelian(vec![]).canonical(), G::Trivial);
        assert!(!G::FiniteCyclic(2).equivalent(&G::cyclic_by("sigma", CyclicOrder::Two)));
    }

    #[test]
    fn json_round_trip() {
        let g = G::semidirect(
            G::product(vec![G::mcg(SurfaceSpec::new(1, 1, 0)), G::Symmetric(3)]),
            G::cyclic_by("sigma", CyclicOrder::Two),
            "exchange",
        );
        let v = serde_json::to_value(&g).unwrap();
        assert_eq!(serde_json::from_value::<GroupStructure>(v).unwrap(), g);
        assert_eq!(
            G::cyclic_by("rho", CyclicOrder::Infinite).to_value(),
            json!({"type": "cyclic-infinite", "generator": "rho"})
        );
    }
}
