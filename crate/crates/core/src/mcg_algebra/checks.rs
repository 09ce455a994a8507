use super::word::TwistWord;
use crate::curve_engine::{
    check_curve_system, find_dual_curve, intersection_number, is_generic, is_isotopic, reference_system, Curve,
    MultiCurve,
};
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::HashMap;

fn single(c: &Curve, name: &str, exp: i64) -> Result<TwistWord> {
    TwistWord::with_all_letters(c.host().clone(), vec![(name.to_string(), c.clone(), exp)])
}

fn require_generic(c: &Curve, name: &str) -> Result<()> {
    if !is_generic(c)? {
        return Err(Error::Precondition(format!("{name} is not generic")));
    }
    Ok(())
}

/// `(I(a,b), [A^j, B^k] is the identity)`.
pub fn commutation_check(a: &Curve, b: &Curve, j: i64, k: i64) -> Result<(usize, bool)> {
    if j == 0 || k == 0 {
        return Err(Error::Precondition("exponents must be nonzero".into()));
    }
    require_generic(a, "a")?;
    require_generic(b, "b")?;
    let i = intersection_number(a, b)?;
    let w = TwistWord::commutator(&single(a, "A", j)?, &single(b, "B", k)?)?;
    Ok((i, w.is_identity()?))
}

/// `ABA` and `BAB` agree on every reference curve; needs `I(a,b) = 1`.
pub fn braid_relation_check(a: &Curve, b: &Curve) -> Result<bool> {
    let i = intersection_number(a, b)?;
    if i != 1 {
        return Err(Error::Precondition(format!("braid relation needs I(a,b) = 1, got {i}")));
    }
    let (x, y) = (single(a, "A", 1)?, single(b, "B", 1)?);
    let aba = x.then_after(&y)?.then_after(&x)?;
    let bab = y.then_after(&x)?.then_after(&y)?;
    aba.acts_like(&bab)
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum InjectivityVerdict {
    /// The exponent vector is zero.
    Identity,
    /// `I(h(w), w) = |n_i| I(a_i, w)^2 > 0` for the product `h` of the
    /// twists; `w` lives on the capped surface.
    Witness {
        index: usize,
        #[serde(skip)]
        curve: Curve,
        crossings: usize,
        expected: usize,
    },
}

/// Certificate that `A_1^{n_1} ... A_p^{n_p}` is not the identity unless
/// every `n_i` vanishes, using a curve dual to one `a_i` with `n_i != 0`
/// on the capped surface.
pub fn multitwist_injectivity(system: &MultiCurve, exponents: &[i64]) -> Result<InjectivityVerdict> {
    if exponents.len() != system.len() {
        return Err(Error::Precondition(format!("{} exponents for {} curves", exponents.len(), system.len())));
    }
    for (i, a) in system.components.iter().enumerate() {
        require_generic(a, &format!("curve {i}"))?;
        for (j, b) in system.components.iter().enumerate().take(i) {
            if intersection_number(a, b)? > 0 {
                return Err(Error::Hypothesis(format!("curves {j} and {i} intersect")));
            }
            if is_isotopic(a, b, false)? {
                return Err(Error::Hypothesis(format!("curves {j} and {i} are isotopic")));
            }
        }
    }
    let Some(i) = exponents.iter().position(|&n| n != 0) else {
        return Ok(InjectivityVerdict::Identity);
    };
    let host = system.components[0].host().clone();
    let r = reference_system(&host)?;
    let lifted = MultiCurve::new(system.components.iter().map(|c| r.lift(c)).collect::<Result<_>>()?)?;
    check_curve_system(&lifted)?;
    let w = find_dual_curve(&lifted, i)?;
    let letters = lifted
        .components
        .iter()
        .zip(exponents)
        .enumerate()
        .filter(|x| *x.1 .1 != 0)
        .map(|(j, (c, &n))| (format!("A{}", j + 1), c.clone(), n))
        .collect();
    let h = TwistWord::with_all_letters(r.host.clone(), letters)?;
    let crossings = intersection_number(&h.act(&w)?, &w)?;
    let ai = intersection_number(&lifted.components[i], &w)?;
    let expected = exponents[i].unsigned_abs() as usize * ai * ai;
    Ok(InjectivityVerdict::Witness { index: i, curve: w, crossings, expected })
}

/// Reduced words in `A^±1, B^±1`, as sequences of `(letter, sign)`.
fn reduced_words(max_len: usize) -> Vec<Vec<(u8, i64)>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for x in [(0u8, 1i64), (0, -1), (1, 1), (1, -1)] {
                if w.last().is_some_and(|&(l, s): &(u8, i64)| l == x.0 && s == -x.1) {
                    continue;
                }
                let mut v: Vec<(u8, i64)> = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn free_reduce(w: Vec<(u8, i64)>) -> Vec<(u8, i64)> {
    let mut out: Vec<(u8, i64)> = Vec::new();
    for x in w {
        if out.last().is_some_and(|&(l, s)| l == x.0 && s == -x.1) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Looks for a nontrivial reduced word of length at most `max_len` in the
/// twists along `a` and `b` that acts trivially. Returns it in the text
/// syntax if one exists. Any such word is `u x` with `|u|, |x|` at most
/// half the length rounded up, so it suffices to compare the actions of
/// all short words.
pub fn free_group_check(a: &Curve, b: &Curve, max_len: usize) -> Result<Option<String>> {
    let (x, y) = (single(a, "A", 1)?, single(b, "B", 1)?);
    let half = max_len.div_ceil(2);
    let r = reference_system(a.host())?;
    let words = reduced_words(half);
    let mut images = Vec::with_capacity(words.len());
    let mut buckets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (k, w) in words.iter().enumerate() {
        let mut t = TwistWord::identity(a.host().clone());
        for &(l, s) in w {
            t = t.then_after(&if l == 0 { x.pow(s) } else { y.pow(s) })?;
        }
        let imgs = t.reference_images()?;
        // isotopy invariant used to bucket candidates
        let mut key = Vec::new();
        for im in &imgs {
            for f in &r.curves {
                key.push(intersection_number(im, f)?);
            }
        }
        buckets.entry(key).or_default().push(k);
        images.push(imgs);
    }
    for group in buckets.values() {
        for (p, &u) in group.iter().enumerate() {
            for &v in &group[..p] {
                let mut same = true;
                for (g, h) in images[u].iter().zip(&images[v]) {
                    if !is_isotopic(g, h, true)? {
                        same = false;
                        break;
                    }
                }
                if same {
                    let inv: Vec<(u8, i64)> = words[v].iter().rev().map(|&(l, s)| (l, -s)).collect();
                    let w = free_reduce(inv.into_iter().chain(words[u].iter().copied()).collect());
                    let text: Vec<String> =
                        w.iter().map(|&(l, s)| format!("{}^{s}", if l == 0 { "A" } else { "B" })).collect();
                    return Ok(Some(text.join(" ")));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_word_counts() {
        // 1 + 4 + 12 + 36
        assert_eq!(reduced_words(3).len(), 53);
        assert!(reduced_words(3).iter().all(|w| free_reduce(w.clone()) == *w));
    }
}
