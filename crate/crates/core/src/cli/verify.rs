//! Seeded property checks over curve-pair fixtures. A run is a function of
//! (property, trials, seed, fixtures) only.

use super::io::{curve_from, read_json, resolve, FIXTURES_VAR};
use super::CliError;
use crate::curve_engine::{dehn_twist, intersection_number, reduce_with_order, Curve, ReduceOrder};
use crate::error::Result;
use crate::fixtures::{commutation_pairs, twist_formula_pairs, CurvePair};
use crate::mcg_algebra::commutation_check;
use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use std::path::Path;

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_TRIALS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// `I(T_a^n(b), b) = |n| I(a,b)^2`.
    TwistFormula,
    /// Random bigon-removal orders reach the same crossing count.
    Confluence,
    /// `I(a,b) = I(b,a)`.
    Symmetry,
    /// `[A^j, B^k]` is trivial iff `I(a,b) = 0`.
    Commutation,
    /// Twisting preserves `I` with the twisting curve: `I(T_a^n(b), a) = I(b, a)`.
    Invariance,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationRun {
    pub property: Property,
    pub trials: usize,
    pub seed: u64,
    pub fixtures: String,
    pub passed: usize,
    pub failed: usize,
    /// First failing trial with its curves in full.
    pub counterexample: Option<Value>,
}

/// Pairs named by `selector`: `builtin`, or a JSON file holding
/// `[{"name": .., "a": curve, "b": curve}, ..]`. With `builtin`, a
/// `pairs.json` in the fixture directory takes precedence.
pub fn load_pairs(property: Property, selector: &str) -> std::result::Result<Vec<CurvePair>, CliError> {
    let file = if selector == "builtin" {
        std::env::var_os(FIXTURES_VAR).map(|d| Path::new(&d).join("pairs.json")).filter(|p| p.exists())
    } else {
        Some(resolve(Path::new(selector)))
    };
    let Some(file) = file else {
        return Ok(match property {
            Property::TwistFormula => twist_formula_pairs()?,
            _ => commutation_pairs()?,
        });
    };
    let v = read_json(&file)?;
    let items = v.as_array().ok_or_else(|| CliError::Malformed("pairs file must be a list".into()))?;
    let mut out = Vec::new();
    for (k, item) in items.iter().enumerate() {
        let field = |f: &str| item.get(f).ok_or_else(|| CliError::Malformed(format!("pair {k} lacks `{f}`")));
        let a = curve_from(field("a")?, None)?;
        let b = curve_from(field("b")?, Some(a.host()))?;
        let i = intersection_number(&a, &b)?;
        let name = item.get("name").and_then(Value::as_str).map_or_else(|| format!("pair {k}"), str::to_string);
        out.push(CurvePair { name, a, b, i });
    }
    if out.is_empty() {
        return Err(CliError::Malformed("pairs file is empty".into()));
    }
    Ok(out)
}

fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    let n = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        -n
    } else {
        n
    }
}

fn curve_value(c: &Curve) -> Value {
    serde_json::to_value(c.to_json()).expect("curves serialize")
}

/// One trial: `Ok(None)` on success, `Ok(Some(details))` on failure.
fn trial(property: Property, p: &CurvePair, rng: &mut ChaCha8Rng) -> Result<Option<Value>> {
    let base = || json!({"pair": p.name, "a": curve_value(&p.a), "b": curve_value(&p.b)});
    let fail = |mut v: Value, extra: Value| {
        if let (Some(m), Some(e)) = (v.as_object_mut(), extra.as_object()) {
            m.extend(e.clone());
        }
        Some(v)
    };
    Ok(match property {
        Property::TwistFormula => {
            let n = nonzero(rng, 3);
            let got = intersection_number(&dehn_twist(&p.b, &p.a, n)?, &p.b)?;
            let want = n.unsigned_abs() as usize * p.i * p.i;
            (got != want).then(|| fail(base(), json!({"n": n, "got": got, "expected": want}))).flatten()
        }
        Property::Confluence => {
            // lengthen b so that several bigons compete
            let n = nonzero(rng, 2);
            let b = dehn_twist(&p.b, &p.a, n)?;
            let order = rng.gen::<u64>();
            let (_, _, first) = reduce_with_order(&p.a, &b, ReduceOrder::First)?;
            let (ra, rb, random) = reduce_with_order(&p.a, &b, ReduceOrder::Random(order))?;
            // the reduced pair is in minimal position already
            let same = first == random && intersection_number(&ra, &rb)? == random;
            (!same).then(|| fail(base(), json!({"n": n, "order": order, "first": first, "random": random}))).flatten()
        }
        Property::Symmetry => {
            let (x, y) = (intersection_number(&p.a, &p.b)?, intersection_number(&p.b, &p.a)?);
            (x != y).then(|| fail(base(), json!({"ab": x, "ba": y}))).flatten()
        }
        Property::Commutation => {
            let (j, k) = (nonzero(rng, 2), nonzero(rng, 2));
            let (i, commutes) = commutation_check(&p.a, &p.b, j, k)?;
            (commutes != (i == 0)).then(|| fail(base(), json!({"j": j, "k": k, "i": i, "commutes": commutes}))).flatten()
        }
        Property::Invariance => {
            let n = nonzero(rng, 3);
            let got = intersection_number(&dehn_twist(&p.b, &p.a, n)?, &p.a)?;
            (got != p.i).then(|| fail(base(), json!({"n": n, "got": got, "expected": p.i}))).flatten()
        }
    })
}

pub fn run(property: Property, trials: usize, seed: u64, selector: &str) -> std::result::Result<VerificationRun, CliError> {
    let pairs = load_pairs(property, selector)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerificationRun {
        property,
        trials,
        seed,
        fixtures: selector.to_string(),
        passed: 0,
        failed: 0,
        counterexample: None,
    };
    for _ in 0..trials {
        let p = &pairs[rng.gen_range(0..pairs.len())];
        match trial(property, p, &mut rng)? {
            None => report.passed += 1,
            Some(v) => {
                report.failed += 1;
                report.counterexample.get_or_insert(v);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_repeat_exactly() {
        let a = serde_json::to_string(&run(Property::TwistFormula, 6, 7, "builtin").unwrap()).unwrap();
        let b = serde_json::to_string(&run(Property::TwistFormula, 6, 7, "builtin").unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"failed\":0"));
    }
}
