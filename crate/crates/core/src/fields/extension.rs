use super::poly;
use super::{bad_literal, Field, FieldError, FieldSpec};
use rand::{Rng, RngCore};

pub const MAX_DEGREE: usize = 8;

/// GF(p^k) realised as GF(p)[g]/(m(g)) for a monic irreducible m of degree k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionField {
    p: u64,
    k: usize,
    /// Monic modulus, low degree first, length k + 1.
    modulus: Vec<u64>,
}

type Coeffs = [u32; MAX_DEGREE];

impl ExtensionField {
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Self, FieldError> {
        super::prime::check_prime(p)?;
        let modulus = poly::trim(modulus.into_iter().map(|c| c % p).collect());
        let k = modulus.len().saturating_sub(1);
        if !(1..=MAX_DEGREE).contains(&k) {
            return Err(FieldError::DegreeOutOfRange(k));
        }
        if modulus[k] != 1 || !poly::is_irreducible(&modulus, p) {
            return Err(FieldError::Reducible(poly::render(&modulus, 'x')));
        }
        Ok(ExtensionField { p, k, modulus })
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Self, FieldError> {
        match spec {
            FieldSpec::Extension { p, modulus } => Self::new(*p, modulus.clone()),
            other => Err(FieldError::BadSpec(other.to_string())),
        }
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    /// The residue class of `g`.
    pub fn generator(&self) -> Coeffs {
        let mut c = [0u32; MAX_DEGREE];
        if self.k == 1 {
            c[0] = ((self.p - self.modulus[0]) % self.p) as u32;
        } else {
            c[1] = 1;
        }
        c
    }

    fn to_poly(&self, a: &Coeffs) -> Vec<u64> {
        poly::trim(a[..self.k].iter().map(|&c| c as u64).collect())
    }

    fn from_poly(&self, a: &[u64]) -> Coeffs {
        let r = poly::divrem(a, &self.modulus, self.p).1;
        let mut c = [0u32; MAX_DEGREE];
        for (i, x) in r.iter().enumerate() {
            c[i] = *x as u32;
        }
        c
    }
}

impl Field for ExtensionField {
    type Elem = Coeffs;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Extension {
            p: self.p,
            modulus: self.modulus.clone(),
        }
    }
    fn zero(&self) -> Coeffs {
        [0; MAX_DEGREE]
    }
    fn one(&self) -> Coeffs {
        let mut c = [0; MAX_DEGREE];
        c[0] = 1;
        c
    }
    fn is_zero(&self, a: &Coeffs) -> bool {
        a.iter().all(|&c| c == 0)
    }
    fn add(&self, a: &Coeffs, b: &Coeffs) -> Coeffs {
        let mut c = [0; MAX_DEGREE];
        for i in 0..self.k {
            c[i] = ((a[i] as u64 + b[i] as u64) % self.p) as u32;
        }
        c
    }
    fn sub(&self, a: &Coeffs, b: &Coeffs) -> Coeffs {
        let mut c = [0; MAX_DEGREE];
        for i in 0..self.k {
            c[i] = ((a[i] as u64 + self.p - b[i] as u64) % self.p) as u32;
        }
        c
    }
    fn mul(&self, a: &Coeffs, b: &Coeffs) -> Coeffs {
        let (p, k) = (self.p, self.k);
        let mut t = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if a[i] == 0 {
                continue;
            }
            for j in 0..k {
                t[i + j] = (t[i + j] + a[i] as u64 * b[j] as u64) % p;
            }
        }
        for d in (k..2 * k - 1).rev() {
            let c = t[d];
            if c == 0 {
                continue;
            }
            for i in 0..k {
                t[d - k + i] = (t[d - k + i] + (p - c) * self.modulus[i]) % p;
            }
        }
        let mut out = [0; MAX_DEGREE];
        for i in 0..k {
            out[i] = t[i] as u32;
        }
        out
    }
    fn neg(&self, a: &Coeffs) -> Coeffs {
        let mut c = [0; MAX_DEGREE];
        for i in 0..self.k {
            c[i] = ((self.p - a[i] as u64) % self.p) as u32;
        }
        c
    }
    fn inv(&self, a: &Coeffs) -> Option<Coeffs> {
        if self.is_zero(a) {
            return None;
        }
        let inv = poly::invmod(&self.to_poly(a), &self.modulus, self.p)?;
        Some(self.from_poly(&inv))
    }
    fn from_i64(&self, n: i64) -> Coeffs {
        let mut c = [0; MAX_DEGREE];
        c[0] = n.rem_euclid(self.p as i64) as u32;
        c
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn order(&self) -> Option<u128> {
        (self.p as u128).checked_pow(self.k as u32)
    }
    fn element(&self, mut index: u64) -> Coeffs {
        let mut c = [0; MAX_DEGREE];
        for slot in c.iter_mut().take(self.k) {
            *slot = (index % self.p) as u32;
            index /= self.p;
        }
        c
    }
    fn random(&self, rng: &mut dyn RngCore) -> Coeffs {
        let mut c = [0; MAX_DEGREE];
        for slot in c.iter_mut().take(self.k) {
            *slot = rng.gen_range(0..self.p) as u32;
        }
        c
    }
    fn parse(&self, text: &str) -> Result<Coeffs, FieldError> {
        let t = text.trim();
        if let Some((n, d)) = t.split_once('/') {
            let n = self.parse(n)?;
            let d = self.parse(d)?;
            return self.div(&n, &d);
        }
        let pl = poly::parse(t, 'g', self.p).ok_or_else(|| bad_literal(self, text))?;
        Ok(self.from_poly(&pl))
    }
    fn render(&self, a: &Coeffs) -> String {
        poly::render(&self.to_poly(a), 'g')
    }
}
