use super::CliError;
use crate::cell_surface::{hat_extend, make_surface, Surface, SurfaceJson, SurfaceSpec};
use crate::curve_engine::{Crossing, Curve, MultiCurve};
use crate::mcg_algebra::CurveRegistry;
use crate::structure::{complement_analysis, ComplementComponent, Side, SubsurfaceConfig};
use serde_json::Value;
use std::path::{Path, PathBuf};
use std::sync::Arc;

/// Environment variable naming a directory searched for relative input paths.
pub const FIXTURES_VAR: &str = "MCGKIT_FIXTURES";

fn malformed(m: impl Into<String>) -> CliError {
    CliError::Malformed(m.into())
}

/// `path` itself if it exists, otherwise the same name in the fixture
/// directory.
pub fn resolve(path: &Path) -> PathBuf {
    if path.exists() || path.is_absolute() {
        return path.to_path_buf();
    }
    match std::env::var_os(FIXTURES_VAR) {
        Some(dir) => Path::new(&dir).join(path),
        None => path.to_path_buf(),
    }
}

pub fn read_json(path: &Path) -> Result<Value, CliError> {
    let p = resolve(path);
    let text = std::fs::read_to_string(&p).map_err(|e| malformed(format!("{}: {e}", p.display())))?;
    serde_json::from_str(&text).map_err(|e| malformed(format!("{}: {e}", p.display())))
}

pub fn canonical(genus: usize, boundary: usize, punctures: usize, hat: bool) -> Surface {
    let s = make_surface(SurfaceSpec::new(genus, boundary, punctures));
    Arc::new(if hat { hat_extend(&s).0 } else { s })
}

/// A surface given inline or as `canonical:g,q,m`.
pub fn surface_from(v: &Value) -> Result<Surface, CliError> {
    if let Some(id) = v.as_str() {
        let spec = id.strip_prefix("canonical:").ok_or_else(|| malformed(format!("unknown surface id `{id}`")))?;
        let n: Vec<usize> = spec
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| malformed(format!("bad surface id `{id}`"))))
            .collect::<Result<_, _>>()?;
        let [g, q, m] = n[..] else { return Err(malformed(format!("bad surface id `{id}`"))) };
        return Ok(canonical(g, q, m, false));
    }
    let j: SurfaceJson = serde_json::from_value(v.clone()).map_err(|e| malformed(format!("surface: {e}")))?;
    Ok(Arc::new(crate::cell_surface::CellSurface::from_json(&j)?))
}

fn word_from(v: &Value) -> Result<Vec<Crossing>, CliError> {
    serde_json::from_value(v.clone()).map_err(|e| malformed(format!("word: {e}")))
}

/// A curve object `{"surface": .., "word": [..], "reduce": bool}`; the
/// surface may be omitted when `host` is given.
pub fn curve_from(v: &Value, host: Option<&Surface>) -> Result<Curve, CliError> {
    let s = match (v.get("surface"), host) {
        (Some(x), _) => surface_from(x)?,
        (None, Some(h)) => h.clone(),
        (None, None) => return Err(malformed("curve without a surface")),
    };
    let word = word_from(v.get("word").ok_or_else(|| malformed("curve without a word"))?)?;
    let c = Curve::new(s, word)?;
    Ok(if v.get("reduce").and_then(Value::as_bool) == Some(true) { c.simplify() } else { c })
}

pub fn curve_file(path: &Path) -> Result<Curve, CliError> {
    curve_from(&read_json(path)?, None)
}

/// `{"surface": .., "curves": {"A": [word], ...}}`.
pub fn registry_file(path: &Path) -> Result<CurveRegistry, CliError> {
    let v = read_json(path)?;
    let s = surface_from(v.get("surface").ok_or_else(|| malformed("registry without a surface"))?)?;
    let curves = v.get("curves").and_then(Value::as_object).ok_or_else(|| malformed("registry without curves"))?;
    let mut reg = CurveRegistry::new(s.clone());
    for (name, w) in curves {
        let c = Curve::new(s.clone(), word_from(w)?)?;
        reg.insert(name, c)?;
    }
    Ok(reg)
}

fn spec_from(v: &Value) -> Result<SurfaceSpec, CliError> {
    serde_json::from_value(v.clone()).map_err(|e| malformed(format!("surface spec: {e}")))
}

/// A symbolic config (with `complement_components`) or a concrete one:
/// `{"surface": .., "boundary": [[..], ..], "side": {"left_of": i}}`.
pub fn config_from(v: &Value, host: Option<&Surface>) -> Result<SubsurfaceConfig, CliError> {
    if let Some(cs) = v.get("complement_components") {
        let ambient = spec_from(v.get("ambient").ok_or_else(|| malformed("config without ambient"))?)?;
        let sub = spec_from(v.get("sub").ok_or_else(|| malformed("config without sub"))?)?;
        let comps: Vec<ComplementComponent> =
            serde_json::from_value(cs.clone()).map_err(|e| malformed(format!("complement: {e}")))?;
        return Ok(SubsurfaceConfig::symbolic(ambient, sub, comps)?);
    }
    let s = match (v.get("surface"), host) {
        (Some(x), _) => surface_from(x)?,
        (None, Some(h)) => h.clone(),
        (None, None) => return Err(malformed("config without a surface")),
    };
    let words = v.get("boundary").and_then(Value::as_array).ok_or_else(|| malformed("config without boundary"))?;
    let curves = words.iter().map(|w| Ok(Curve::new(s.clone(), word_from(w)?)?)).collect::<Result<Vec<_>, CliError>>()?;
    let side = match v.get("side") {
        None => Side::LeftOf(0),
        Some(x) => {
            let idx = |k: &str| x.get(k).and_then(Value::as_u64).map(|i| i as usize);
            if let Some(i) = idx("left_of") {
                Side::LeftOf(i)
            } else if let Some(i) = idx("right_of") {
                Side::RightOf(i)
            } else if let Some(i) = idx("component") {
                Side::Component(i)
            } else {
                return Err(malformed("side must be left_of, right_of or component"));
            }
        }
    };
    Ok(complement_analysis(&s, &MultiCurve::new(curves)?, side)?)
}
