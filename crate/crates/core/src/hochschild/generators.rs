//! Text form of elements of `ℙ₂`, used to state candidate generators of `Ω³`.
//!
//! An element is a signed sum of terms `[c*] left | right [@k]`. `left` and
//! `right` are paths written as in presentations (`a*b^2`) or idempotents
//! `e<vertex>`. The summand is the unique one whose vertex pair matches
//! `(end(left), start(right))`; `@k` (1-based) picks it explicitly.

use super::FreeBimodule;
use crate::engine::Algebra;
use crate::fields::Field;
use crate::linalg::SparseVec;
use crate::presentation::Path;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeneratorError {
    #[error("malformed term `{0}`")]
    Syntax(String),
    #[error("unknown arrow or vertex `{0}`")]
    UnknownSymbol(String),
    #[error("`{0}` is not a path")]
    NonComposable(String),
    #[error("no summand matches `{0}`")]
    NoSummand(String),
    #[error("several summands match `{0}`; disambiguate with @k")]
    Ambiguous(String),
    #[error("bad coefficient `{0}`")]
    Coefficient(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorReport {
    pub generators: usize,
    /// Indices of generators with nonzero image under `d₂`.
    pub outside_kernel: Vec<usize>,
    pub closure_dim: usize,
    pub kernel_dim: usize,
}

impl GeneratorReport {
    pub fn generates(&self) -> bool {
        self.outside_kernel.is_empty() && self.closure_dim == self.kernel_dim
    }
}

fn split_terms(text: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut negative = false;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') {
            if !cur.trim().is_empty() {
                out.push((negative, cur.trim().to_string()));
                negative = false;
            }
            cur.clear();
            if ch == '-' {
                negative = !negative;
            }
            continue;
        }
        cur.push(ch);
    }
    if !cur.trim().is_empty() {
        out.push((negative, cur.trim().to_string()));
    }
    out
}

fn parse_side<F: Field>(alg: &Algebra<F>, text: &str) -> Result<Path, GeneratorError> {
    let q = alg.quiver();
    let text = text.trim();
    if let Some(v) = text.strip_prefix('e').and_then(|rest| q.vertex(rest)) {
        if q.arrow(text).is_none() {
            return Ok(Path::trivial(v));
        }
    }
    let mut arrows = Vec::new();
    for factor in text.split('*') {
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => (n.trim(), e.trim().parse::<usize>().map_err(|_| GeneratorError::Syntax(text.into()))?),
            None => (factor.trim(), 1),
        };
        let a = q.arrow(name).ok_or_else(|| GeneratorError::UnknownSymbol(name.into()))?;
        arrows.extend(std::iter::repeat(a).take(exp));
    }
    q.path(&arrows).ok_or_else(|| GeneratorError::NonComposable(text.into()))
}

/// Parses an element of `p2`, the free module built on the resolution relations.
pub fn parse_element<F: Field>(alg: &Algebra<F>, p2: &FreeBimodule, text: &str) -> Result<SparseVec<F::Elem>, GeneratorError> {
    let f = alg.field();
    let mut acc = vec![f.zero(); p2.dim()];
    for (negative, term) in split_terms(text) {
        let (body, index) = match term.split_once('@') {
            Some((b, k)) => {
                let k: usize = k.trim().parse().map_err(|_| GeneratorError::Syntax(term.clone()))?;
                if k == 0 || k > p2.summands().len() {
                    return Err(GeneratorError::NoSummand(term.clone()));
                }
                (b.trim(), Some(k - 1))
            }
            None => (term.as_str(), None),
        };
        let (left_text, right_text) = body.split_once('|').ok_or_else(|| GeneratorError::Syntax(term.clone()))?;
        let (coef, left_text) = match left_text.split_once('*') {
            Some((c, rest)) if c.trim().starts_with(|ch: char| ch.is_ascii_digit() || ch == '(') => {
                let c = c.trim().trim_start_matches('(').trim_end_matches(')');
                let v = f.parse(c).map_err(|_| GeneratorError::Coefficient(c.into()))?;
                (v, rest)
            }
            _ => (f.one(), left_text),
        };
        let left = parse_side(alg, left_text)?;
        let right = parse_side(alg, right_text)?;
        let pair = (left.end, right.start);
        let s = match index {
            Some(k) if p2.summands()[k] == pair => k,
            Some(_) => return Err(GeneratorError::NoSummand(term.clone())),
            None => {
                let mut hits = p2.summands().iter().enumerate().filter(|(_, &p)| p == pair);
                let Some((k, _)) = hits.next() else {
                    return Err(GeneratorError::NoSummand(term.clone()));
                };
                if hits.next().is_some() {
                    return Err(GeneratorError::Ambiguous(term.clone()));
                }
                k
            }
        };
        let coef = if negative { f.neg(&coef) } else { coef };
        let x = alg.element_of_path(&left);
        let y = alg.element_of_path(&right);
        for (i, c) in p2.tensor(alg, s, &x, &y) {
            f.add_mul_assign(&mut acc[i], &coef, &c);
        }
    }
    Ok(FreeBimodule::to_sparse(f, &acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_signed_terms() {
        let t = split_terms("-e1 | a*b + 2*a | b - (g+1)*b | e2");
        assert_eq!(t.len(), 3);
        assert!(t[0].0 && !t[1].0 && t[2].0);
        assert_eq!(t[2].1, "(g+1)*b | e2");
    }
}
