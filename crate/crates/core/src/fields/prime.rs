use super::{bad_literal, Field, FieldError, FieldSpec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, RngCore};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<(), FieldError> {
    if p >= 1 << 31 {
        return Err(FieldError::PrimeTooLarge(p));
    }
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    Ok(())
}

/// Reduces an integer literal (of any size) modulo `p`.
pub(crate) fn parse_mod(text: &str, p: u64) -> Option<u64> {
    let n: BigInt = text.trim().parse().ok()?;
    n.mod_floor(&BigInt::from(p)).to_u64()
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    let e = (a as i64).extended_gcd(&(p as i64));
    Some(e.x.rem_euclid(p as i64) as u64)
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        check_prime(p)?;
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        inv_mod(*a, self.p)
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn order(&self) -> Option<u128> {
        Some(self.p as u128)
    }
    fn element(&self, index: u64) -> u64 {
        index % self.p
    }
    fn random(&self, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn parse(&self, text: &str) -> Result<u64, FieldError> {
        let t = text.trim();
        let int = |s: &str| parse_mod(s, self.p).ok_or_else(|| bad_literal(self, text));
        match t.split_once('/') {
            Some((n, d)) => {
                let d = int(d)?;
                let di = self.inv(&d).ok_or(FieldError::DivisionByZero)?;
                Ok(self.mul(&int(n)?, &di))
            }
            None => int(t),
        }
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}
