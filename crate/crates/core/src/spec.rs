//! Text grammars for rings (`Z6`, `Z2xZ3`), ideals (`zero`, `full`,
//! `gen(...)`) and sweep families (`Z2..Z16,Z2xZ2..Z4xZ4`).

use crate::error::{Error, Result};
use crate::ring::{direct_product_all, make_zn, FiniteRing, Ideal};

/// Largest carrier accepted from a spec string.
pub const MAX_ORDER: usize = 1024;
const MAX_FACTORS: usize = 3;

/// A ring-spec string such as `Z8` or `Z2xZ2xZ2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    text: String,
    moduli: Vec<usize>,
}

impl RingSpec {
    pub fn parse(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::parse(text, "empty ring spec"));
        }
        if text.chars().any(char::is_whitespace) {
            return Err(Error::parse(text, "ring specs must not contain whitespace"));
        }
        let factors: Vec<&str> = text.split(['x', 'X']).collect();
        if factors.len() > MAX_FACTORS {
            return Err(Error::parse(text, format!("at most {MAX_FACTORS} factors")));
        }
        let moduli = factors
            .iter()
            .map(|f| parse_factor(f))
            .collect::<Result<Vec<_>>>()?;
        let order = moduli.iter().try_fold(1usize, |acc, &m| acc.checked_mul(m));
        match order {
            Some(o) if o <= MAX_ORDER => {}
            _ => return Err(Error::parse(text, format!("ring order exceeds {MAX_ORDER}"))),
        }
        Ok(RingSpec {
            text: text.to_string(),
            moduli,
        })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn moduli(&self) -> &[usize] {
        &self.moduli
    }

    /// Canonical spelling, e.g. `z2xz3` becomes `Z2xZ3`.
    pub fn canonical(&self) -> String {
        self.moduli
            .iter()
            .map(|m| format!("Z{m}"))
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn build(&self) -> Result<FiniteRing> {
        let factors = self
            .moduli
            .iter()
            .map(|&m| make_zn(m))
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<&FiniteRing> = factors.iter().collect();
        Ok(direct_product_all(&refs))
    }
}

fn parse_factor(f: &str) -> Result<usize> {
    let digits = f
        .strip_prefix('Z')
        .or_else(|| f.strip_prefix('z'))
        .ok_or_else(|| Error::parse(f, "expected `Z<n>`"))?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(f, "modulus must be a decimal integer"));
    }
    let n: usize = digits
        .parse()
        .map_err(|_| Error::parse(f, "modulus out of range"))?;
    if n < 2 {
        return Err(Error::parse(f, "modulus must be at least 2"));
    }
    Ok(n)
}

pub fn parse_ring(text: &str) -> Result<FiniteRing> {
    RingSpec::parse(text)?.build()
}

/// Parses `zero`, `full`, or `gen(e1,e2,...)` against the element labels of `ring`.
pub fn parse_ideal(ring: &FiniteRing, text: &str) -> Result<Ideal> {
    let t = text.trim();
    match t {
        "zero" => return Ok(Ideal::zero(ring)),
        "full" => return Ok(Ideal::full(ring)),
        _ => {}
    }
    let inner = t
        .strip_prefix("gen(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::parse(t, "expected `zero`, `full` or `gen(...)`"))?;
    let mut gens = Vec::new();
    for tok in split_top_level(inner)? {
        let tok: String = tok.chars().filter(|c| !c.is_whitespace()).collect();
        if tok.is_empty() {
            continue;
        }
        let e = ring
            .find_label(&tok)
            .ok_or_else(|| Error::parse(&tok, format!("not an element of {}", ring.spec_name())))?;
        gens.push(e);
    }
    Ok(ring.ideal_generated(&gens))
}

fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::parse(s, "unbalanced parentheses"));
                }
            }
            ',' if depth == 0 => {
                parts.push(&s[start..k]);
                start = k + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::parse(s, "unbalanced parentheses"));
    }
    parts.push(&s[start..]);
    Ok(parts)
}

/// Expands a comma-separated family into individual ring specs.
///
/// `A..B` ranges expand inclusively. For products the range runs over every
/// factor independently with non-decreasing moduli, so `Z2xZ2..Z4xZ4` yields
/// the six rings `Z_a x Z_b` with `2 <= a <= b <= 4`.
pub fn parse_family(text: &str) -> Result<Vec<String>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::parse(text, "empty family"));
    }
    let mut out = Vec::new();
    for item in text.split(',') {
        let item = item.trim();
        if item.is_empty() {
            return Err(Error::parse(text, "empty family entry"));
        }
        match item.split_once("..") {
            None => out.push(RingSpec::parse(item)?.canonical()),
            Some((lo, hi)) => {
                let lo = RingSpec::parse(lo)?;
                let hi = RingSpec::parse(hi)?;
                if lo.moduli.len() != hi.moduli.len() {
                    return Err(Error::parse(item, "range endpoints have different factor counts"));
                }
                if lo.moduli.iter().zip(&hi.moduli).any(|(a, b)| a > b) {
                    return Err(Error::parse(item, "range is empty"));
                }
                let mut tuples = Vec::new();
                expand(&lo.moduli, &hi.moduli, &mut Vec::new(), &mut tuples);
                for t in tuples {
                    let spec = t.iter().map(|m| format!("Z{m}")).collect::<Vec<_>>().join("x");
                    out.push(RingSpec::parse(&spec)?.canonical());
                }
            }
        }
    }
    Ok(out)
}

fn expand(lo: &[usize], hi: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let k = prefix.len();
    if k == lo.len() {
        out.push(prefix.clone());
        return;
    }
    let start = prefix.last().map_or(lo[k], |&p| lo[k].max(p));
    for m in start..=hi[k] {
        prefix.push(m);
        expand(lo, hi, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_specs() {
        assert_eq!(parse_ring("Z6").unwrap().order(), 6);
        assert_eq!(parse_ring("z6").unwrap().order(), 6);
        let r = parse_ring("Z2xZ2xZ2").unwrap();
        assert_eq!(r.order(), 8);
        assert_eq!(r.spec_name(), "Z2xZ2xZ2");
        for bad in ["", "Z1", "Z", "Q5", "Z2 xZ3", "Z2xZ2xZ2xZ2", "Z-3", "Z2x", "Z99999"] {
            assert!(parse_ring(bad).is_err(), "{bad:?} should fail");
        }
        match parse_ring("Z2xQ3") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "Q3"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn ideal_specs() {
        let z6 = parse_ring("Z6").unwrap();
        assert!(parse_ideal(&z6, "zero").unwrap().is_zero());
        assert!(parse_ideal(&z6, "full").unwrap().is_full());
        assert_eq!(parse_ideal(&z6, "gen(3)").unwrap().members().to_vec(), vec![0, 3]);
        assert!(parse_ideal(&z6, "gen(5)").unwrap().is_full());
        assert_eq!(parse_ideal(&z6, "gen(2,4)").unwrap().len(), 3);
        assert!(parse_ideal(&z6, "gen(7)").is_err());
        assert!(parse_ideal(&z6, "span(2)").is_err());

        let v = parse_ring("Z2xZ2").unwrap();
        let i = parse_ideal(&v, "gen((1,0))").unwrap();
        assert_eq!(i.labels(&v), vec!["(0,0)", "(1,0)"]);
        assert!(parse_ideal(&v, "gen((1,0),(0,1))").unwrap().is_full());
        assert!(parse_ideal(&v, "gen((1,0)").is_err());
    }

    #[test]
    fn families() {
        let f = parse_family("Z2..Z16").unwrap();
        assert_eq!(f.len(), 15);
        assert_eq!(f[0], "Z2");
        assert_eq!(f[14], "Z16");
        let p = parse_family("Z2xZ2..Z4xZ4").unwrap();
        assert_eq!(p, vec!["Z2xZ2", "Z2xZ3", "Z2xZ4", "Z3xZ3", "Z3xZ4", "Z4xZ4"]);
        let mixed = parse_family("Z2xZ2,Z2xZ3, z5").unwrap();
        assert_eq!(mixed, vec!["Z2xZ2", "Z2xZ3", "Z5"]);
        assert!(parse_family("").is_err());
        assert!(parse_family("Z5..Z3").is_err());
        assert!(parse_family("Z2..Z2xZ2").is_err());
        assert!(parse_family("Z2,,Z3").is_err());
    }
}
