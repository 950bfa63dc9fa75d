//! Dense univariate polynomials over GF(p), coefficients stored low degree first.

pub(crate) type Poly = Vec<u64>;

pub(crate) fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y % p) % p;
        }
    }
    trim(out)
}

/// Quotient and remainder of `a` by nonzero `b`.
pub(crate) fn divrem(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(a.to_vec());
    let lead_inv = super::prime::inv_mod(*b.last().unwrap(), p).unwrap();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * lead_inv % p;
        q[shift] = c;
        for (i, y) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * y % p) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub(crate) fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
    divrem(&mul(a, b, p), m, p).1
}

pub(crate) fn powmod(a: &[u64], mut e: u64, m: &[u64], p: u64) -> Poly {
    let mut base = divrem(a, m, p).1;
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &base, m, p);
        }
        base = mulmod(&base, &base, m, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    a
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub(crate) fn invmod(a: &[u64], m: &[u64], p: u64) -> Option<Poly> {
    let (mut r0, mut r1) = (trim(m.to_vec()), divrem(a, m, p).1);
    let (mut t0, mut t1): (Poly, Poly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = super::prime::inv_mod(r0[0], p)?;
    Some(divrem(&mul(&t0, &[c], p), m, p).1)
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's criterion: `f` of degree k is irreducible iff `x^(p^k) = x mod f`
/// and `gcd(x^(p^(k/r)) - x, f) = 1` for every prime r dividing k.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    let k = f.len().saturating_sub(1);
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let frob = |times: usize| {
        let mut cur = x.clone();
        for _ in 0..times {
            cur = powmod(&cur, p, &f, p);
        }
        cur
    };
    if sub(&frob(k), &x, p) != Vec::<u64>::new() {
        return false;
    }
    prime_divisors(k)
        .into_iter()
        .all(|r| gcd(&sub(&frob(k / r), &x, p), &f, p).len() == 1)
}

/// Parses a polynomial in `var` with integer coefficients such as `x^3+x+1`.
pub(crate) fn parse(text: &str, var: char, p: u64) -> Option<Poly> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if (c == '+' || c == '-') && i > 0 {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);
    let mut out: Poly = Vec::new();
    for term in terms {
        let (neg, body) = match term.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, term.strip_prefix('+').unwrap_or(term)),
        };
        if body.is_empty() {
            return None;
        }
        let (coef, exp) = match body.find(var) {
            None => (super::prime::parse_mod(body, p)?, 0usize),
            Some(pos) => {
                let c = body[..pos].trim_end_matches('*');
                let c = if c.is_empty() { 1 } else { super::prime::parse_mod(c, p)? };
                let rest = &body[pos + var.len_utf8()..];
                let e = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')?.parse().ok()?
                };
                (c, e)
            }
        };
        if out.len() <= exp {
            out.resize(exp + 1, 0);
        }
        let c = if neg { (p - coef) % p } else { coef };
        out[exp] = (out[exp] + c) % p;
    }
    Some(trim(out))
}

pub(crate) fn render(a: &[u64], var: char) -> String {
    let mut parts = Vec::new();
    for (e, &c) in a.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let s = match (e, c) {
            (0, c) => c.to_string(),
            (1, 1) => var.to_string(),
            (1, c) => format!("{c}*{var}"),
            (e, 1) => format!("{var}^{e}"),
            (e, c) => format!("{c}*{var}^{e}"),
        };
        parts.push(s);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_irreducibles() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 1], 2));
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 5));
        assert!(is_irreducible(&[1, 1, 0, 1, 1, 0, 0, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn parse_render_roundtrip() {
        let f = parse("x^3+2x+1", 'x', 5).unwrap();
        assert_eq!(f, vec![1, 2, 0, 1]);
        assert_eq!(render(&f, 'x'), "x^3+2*x+1");
        assert_eq!(parse(&render(&f, 'x'), 'x', 5).unwrap(), f);
        assert_eq!(parse("-g", 'g', 3).unwrap(), vec![0, 2]);
    }

    #[test]
    fn inverse_mod() {
        let m = vec![1, 1, 0, 1];
        for a in 1u64..8 {
            let poly = trim((0..3).map(|i| (a >> i) & 1).collect());
            let inv = invmod(&poly, &m, 2).unwrap();
            assert_eq!(mulmod(&poly, &inv, &m, 2), vec![1]);
        }
    }
}
