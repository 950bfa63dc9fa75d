use super::{poly, prime, FieldError};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
    /// `modulus` is monic, low degree first.
    Extension { p: u64, modulus: Vec<u64> },
}

/// Characteristic classes used to key expected values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CharClass {
    Two,
    Three,
    Other,
}

impl CharClass {
    pub fn of(characteristic: u64) -> Self {
        match characteristic {
            2 => CharClass::Two,
            3 => CharClass::Three,
            _ => CharClass::Other,
        }
    }
}

impl fmt::Display for CharClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CharClass::Two => "char 2",
            CharClass::Three => "char 3",
            CharClass::Other => "char 0 or >= 5",
        })
    }
}

/// Conventional moduli for the small fields; otherwise the first monic
/// irreducible in counting order.
pub fn default_modulus(p: u64, k: usize) -> Vec<u64> {
    match (p, k) {
        (2, 2) => return vec![1, 1, 1],
        (2, 3) => return vec![1, 1, 0, 1],
        (3, 2) => return vec![1, 0, 1],
        _ => {}
    }
    let mut idx: u128 = 0;
    loop {
        let mut c = Vec::with_capacity(k + 1);
        let mut rest = idx;
        for _ in 0..k {
            c.push((rest % p as u128) as u64);
            rest /= p as u128;
        }
        c.push(1);
        if poly::is_irreducible(&c, p) {
            return c;
        }
        idx += 1;
    }
}

fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while q % p != 0 {
        p += 1;
    }
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl FieldSpec {
    /// Accepts `Q`, `GF(p)`, `GF(q)`, `GF(p^k)`, optionally followed by
    /// `:modulus` written in `x`.
    pub fn parse(text: &str) -> Result<Self, FieldError> {
        let bad = || FieldError::BadSpec(text.to_string());
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "Q" || t == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        let (head, modulus) = match t.split_once(':') {
            Some((h, m)) => (h, Some(m)),
            None => (t.as_str(), None),
        };
        let inner = head
            .strip_prefix("GF(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (p, k) = match inner.split_once('^') {
            Some((p, k)) => {
                let p: u64 = p.parse().map_err(|_| bad())?;
                let k: usize = k.parse().map_err(|_| bad())?;
                (p, k)
            }
            None => {
                let q: u64 = inner.parse().map_err(|_| bad())?;
                if prime::is_prime(q) {
                    (q, 1)
                } else {
                    prime_power(q).ok_or(FieldError::NotPrime(q))?
                }
            }
        };
        prime::check_prime(p)?;
        if !(1..=super::extension::MAX_DEGREE).contains(&k) {
            return Err(FieldError::DegreeOutOfRange(k));
        }
        match modulus {
            None if k == 1 => Ok(FieldSpec::Prime(p)),
            None => Ok(FieldSpec::Extension {
                p,
                modulus: default_modulus(p, k),
            }),
            Some(m) => {
                let m = poly::parse(m, 'x', p).ok_or_else(bad)?;
                if m.len() != k + 1 || m[k] != 1 {
                    return Err(FieldError::BadSpec(format!(
                        "{text}: modulus must be monic of degree {k}"
                    )));
                }
                if !poly::is_irreducible(&m, p) {
                    return Err(FieldError::Reducible(poly::render(&m, 'x')));
                }
                Ok(FieldSpec::Extension { p, modulus: m })
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
            FieldSpec::Extension { p, .. } => *p,
        }
    }

    pub fn char_class(&self) -> CharClass {
        CharClass::of(self.characteristic())
    }

    pub fn degree(&self) -> usize {
        match self {
            FieldSpec::Extension { modulus, .. } => modulus.len() - 1,
            _ => 1,
        }
    }

    pub fn order(&self) -> Option<u128> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(*p as u128),
            FieldSpec::Extension { p, modulus } => (*p as u128).checked_pow(modulus.len() as u32 - 1),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Extension { p, modulus } => {
                let k = modulus.len() - 1;
                if *modulus == default_modulus(*p, k) {
                    match self.order() {
                        Some(q) if matches!((p, k), (2, 2) | (2, 3) | (3, 2)) => write!(f, "GF({q})"),
                        _ => write!(f, "GF({p}^{k})"),
                    }
                } else {
                    write!(f, "GF({p}^{k}):{}", poly::render(modulus, 'x'))
                }
            }
        }
    }
}
