use crate::cell_surface::Surface;
use crate::curve_engine::{same_host, dehn_twist, is_generic, is_isotopic, reference_system, Curve};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// Named curves on one host, the vocabulary of twist words.
#[derive(Debug, Clone)]
pub struct CurveRegistry {
    host: Surface,
    curves: BTreeMap<String, Curve>,
}

impl CurveRegistry {
    pub fn new(host: Surface) -> CurveRegistry {
        CurveRegistry { host, curves: BTreeMap::new() }
    }

    pub fn host(&self) -> &Surface {
        &self.host
    }

    /// Names are letters followed by letters, digits, `_` or `'`.
    pub fn insert(&mut self, name: &str, c: Curve) -> Result<()> {
        let mut chars = name.chars();
        let ok = chars.next().is_some_and(|x| x.is_alphabetic())
            && chars.all(|x| x.is_alphanumeric() || x == '_' || x == '\'');
        if !ok {
            return Err(Error::Parse(format!("bad curve name `{name}`")));
        }
        if !same_host(c.host(), &self.host) {
            return Err(Error::HostMismatch);
        }
        self.curves.insert(name.to_string(), c);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<&Curve> {
        self.curves.get(name).ok_or_else(|| Error::UnknownCurve(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.curves.keys().map(|s| s.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Curve)> {
        self.curves.iter().map(|(k, v)| (k.as_str(), v))
    }
}

#[derive(Debug, Clone)]
pub struct Letter {
    pub name: String,
    pub curve: Curve,
    pub exp: i64,
}

/// A product of Dehn twist powers. As a map the last letter acts first:
/// `A^2 B^-1` sends `c` to `A^2(B^-1(c))`.
#[derive(Debug, Clone)]
pub struct TwistWord {
    host: Surface,
    letters: Vec<Letter>,
}

/// A word together with the letters dropped while building it.
#[derive(Debug, Clone)]
pub struct Built {
    pub word: TwistWord,
    /// One message per dropped letter: twists along curves bounding a disk
    /// with at most one puncture are trivial.
    pub warnings: Vec<String>,
}

impl TwistWord {
    pub fn identity(host: Surface) -> TwistWord {
        TwistWord { host, letters: Vec::new() }
    }

    /// Word from `(curve, exponent)` letters; letters along non-generic
    /// curves are dropped with a warning, zero exponents are refused.
    pub fn from_letters(host: Surface, letters: Vec<(String, Curve, i64)>) -> Result<Built> {
        let mut out = Vec::new();
        let mut warnings = Vec::new();
        for (name, curve, exp) in letters {
            check_letter(&host, &name, &curve, exp)?;
            if is_generic(&curve)? {
                out.push(Letter { name, curve, exp });
            } else {
                warnings.push(format!("dropped {name}^{exp}: {name} bounds a disk with at most one puncture"));
            }
        }
        Ok(Built { word: TwistWord { host, letters: merge(out) }, warnings })
    }

    /// Like [`TwistWord::from_letters`] but keeps twists along non-generic
    /// curves, so that their triviality can be observed rather than assumed.
    pub fn with_all_letters(host: Surface, letters: Vec<(String, Curve, i64)>) -> Result<TwistWord> {
        let mut out = Vec::new();
        for (name, curve, exp) in letters {
            check_letter(&host, &name, &curve, exp)?;
            out.push(Letter { name, curve, exp });
        }
        Ok(TwistWord { host, letters: out })
    }

    pub fn new(registry: &CurveRegistry, letters: &[(&str, i64)]) -> Result<Built> {
        let resolved = letters
            .iter()
            .map(|&(n, e)| Ok((n.to_string(), registry.get(n)?.clone(), e)))
            .collect::<Result<Vec<_>>>()?;
        TwistWord::from_letters(registry.host().clone(), resolved)
    }

    /// Parses whitespace-separated `name^exp` letters; a bare name means
    /// exponent 1.
    pub fn parse(registry: &CurveRegistry, text: &str) -> Result<Built> {
        let letters = parse_letters(text)?;
        let refs: Vec<(&str, i64)> = letters.iter().map(|(n, e)| (n.as_str(), *e)).collect();
        TwistWord::new(registry, &refs)
    }

    pub fn host(&self) -> &Surface {
        &self.host
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> TwistWord {
        let letters = self.letters.iter().rev().map(|l| Letter { exp: -l.exp, ..l.clone() }).collect();
        TwistWord { host: self.host.clone(), letters }
    }

    /// The map `self ∘ other`.
    pub fn then_after(&self, other: &TwistWord) -> Result<TwistWord> {
        if !same_host(&self.host, &other.host) {
            return Err(Error::HostMismatch);
        }
        let letters = self.letters.iter().chain(&other.letters).cloned().collect();
        Ok(TwistWord { host: self.host.clone(), letters: merge(letters) })
    }

    pub fn pow(&self, n: i64) -> TwistWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::new();
        for _ in 0..n.unsigned_abs() {
            letters.extend(base.letters.iter().cloned());
        }
        TwistWord { host: self.host.clone(), letters: merge(letters) }
    }

    /// `x y x^-1 y^-1`.
    pub fn commutator(x: &TwistWord, y: &TwistWord) -> Result<TwistWord> {
        x.then_after(y)?.then_after(&x.inverse())?.then_after(&y.inverse())
    }

    /// Image of `c`, letters applied from the right.
    pub fn act(&self, c: &Curve) -> Result<Curve> {
        if !same_host(c.host(), &self.host) {
            return Err(Error::HostMismatch);
        }
        let mut x = c.simplify();
        for l in self.letters.iter().rev() {
            x = dehn_twist(&x, &l.curve, l.exp)?;
        }
        Ok(x)
    }

    /// This word with every letter moved to the capped surface of the
    /// host, where the reference curves live.
    fn lifted(&self) -> Result<TwistWord> {
        let r = reference_system(&self.host)?;
        let letters =
            self.letters.iter().map(|l| Ok(Letter { curve: r.lift(&l.curve)?, ..l.clone() })).collect::<Result<_>>()?;
        Ok(TwistWord { host: r.host.clone(), letters })
    }

    /// Images of the reference curves of the host.
    pub fn reference_images(&self) -> Result<Vec<Curve>> {
        let r = reference_system(&self.host)?;
        let w = self.lifted()?;
        r.curves.iter().map(|f| w.act(f)).collect()
    }

    /// Fixes every reference curve up to oriented isotopy. The reference
    /// curves live on the capped surface, into whose mapping class group
    /// that of the host injects, and there they determine a product of twists.
    pub fn is_identity(&self) -> Result<bool> {
        if self.letters.is_empty() {
            return Ok(true);
        }
        let r = reference_system(&self.host)?;
        let w = self.lifted()?;
        for f in &r.curves {
            if !is_isotopic(&w.act(f)?, f, true)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Same images of all reference curves as `other`.
    pub fn acts_like(&self, other: &TwistWord) -> Result<bool> {
        let a = self.reference_images()?;
        let b = other.reference_images()?;
        for (x, y) in a.iter().zip(&b) {
            if !is_isotopic(x, y, true)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn check_letter(host: &Surface, name: &str, curve: &Curve, exp: i64) -> Result<()> {
    if exp == 0 {
        return Err(Error::Precondition(format!("letter {name} has exponent 0")));
    }
    if !same_host(curve.host(), host) {
        return Err(Error::HostMismatch);
    }
    Ok(())
}

/// Joins neighbouring powers of the same twist.
fn merge(letters: Vec<Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if let Some(last) = out.last_mut() {
            if last.name == l.name && last.curve.word() == l.curve.word() {
                last.exp += l.exp;
                if last.exp == 0 {
                    out.pop();
                }
                continue;
            }
        }
        out.push(l);
    }
    out
}

/// `name^exp` tokens of the text syntax.
pub fn parse_letters(text: &str) -> Result<Vec<(String, i64)>> {
    text.split_whitespace()
        .map(|tok| {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (n, e.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?),
                None => (tok, 1),
            };
            if name.is_empty() {
                return Err(Error::Parse(format!("missing curve name in `{tok}`")));
            }
            if exp == 0 {
                return Err(Error::Precondition(format!("letter `{tok}` has exponent 0")));
            }
            Ok((name.to_string(), exp))
        })
        .collect()
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| format!("{}^{}", l.name, l.exp)).collect();
        write!(f, "{}", parts.join(" "))
    }
}
