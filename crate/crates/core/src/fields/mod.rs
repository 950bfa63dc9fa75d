//! Exact scalar fields: the rationals, prime fields and small extension fields.

mod dynamic;
mod extension;
mod poly;
mod prime;
mod rational;
mod spec;

pub use dynamic::{arithmetic, AnyField, ArithOp, FieldElement};
pub use extension::ExtensionField;
pub use prime::PrimeField;
pub use rational::Rationals;
pub use spec::{CharClass, FieldSpec};

use rand::RngCore;
use std::fmt::Debug;
use std::hash::Hash;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("malformed field specification `{0}`")]
    BadSpec(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is not irreducible")]
    Reducible(String),
    #[error("extension degree {0} is outside 1..=8")]
    DegreeOutOfRange(usize),
    #[error("prime {0} is too large (must be below 2^31)")]
    PrimeTooLarge(u64),
    #[error("cannot parse `{text}` as an element of {field}")]
    BadLiteral { text: String, field: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields ({0} vs {1})")]
    SpecMismatch(String, String),
}

/// Arithmetic over a concrete field. Element values carry no field tag; the
/// field object supplies the context for every operation.
pub trait Field: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` for an infinite field.
    fn order(&self) -> Option<u128>;
    /// Enumerates a finite field by index in `0..order`. For the rationals this
    /// walks 0, 1, -1, 2, -2, ...
    fn element(&self, index: u64) -> Self::Elem;
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;
    fn parse(&self, text: &str) -> Result<Self::Elem, FieldError>;
    fn render(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        let bi = self.inv(b).ok_or(FieldError::DivisionByZero)?;
        Ok(self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `acc += c * x`
    fn add_mul_assign(&self, acc: &mut Self::Elem, c: &Self::Elem, x: &Self::Elem) {
        let t = self.mul(c, x);
        *acc = self.add(acc, &t);
    }
}

pub(crate) fn bad_literal<F: Field>(field: &F, text: &str) -> FieldError {
    FieldError::BadLiteral {
        text: text.to_string(),
        field: field.spec().to_string(),
    }
}

/// Runs `$body` with `$f` bound to the concrete field described by `$spec`.
/// The body must evaluate to a `Result` whose error type accepts `FieldError`.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {{
        match $crate::fields::AnyField::make($spec) {
            Err(e) => Err(e.into()),
            Ok($crate::fields::AnyField::Rationals($f)) => $body,
            Ok($crate::fields::AnyField::Prime($f)) => $body,
            Ok($crate::fields::AnyField::Extension($f)) => $body,
        }
    }};
}

#[cfg(test)]
mod laws {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn check_axioms<F: Field>(f: &F, seed: u64) {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let a = f.random(&mut rng);
        let b = f.random(&mut rng);
        let c = f.random(&mut rng);
        assert_eq!(f.add(&a, &b), f.add(&b, &a));
        assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        assert_eq!(
            f.mul(&a, &f.add(&b, &c)),
            f.add(&f.mul(&a, &b), &f.mul(&a, &c))
        );
        assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        assert_eq!(f.sub(&a, &b), f.add(&a, &f.neg(&b)));
        if !f.is_zero(&a) {
            let ai = f.inv(&a).unwrap();
            assert!(f.is_one(&f.mul(&a, &ai)));
        } else {
            assert!(f.inv(&a).is_none());
        }
        assert_eq!(f.parse(&f.render(&a)).unwrap(), a);
    }

    proptest! {
        #[test]
        fn rational_axioms(seed in any::<u64>()) {
            check_axioms(&Rationals, seed);
        }

        #[test]
        fn prime_axioms(seed in any::<u64>(), idx in 0usize..6) {
            let p = [2u64, 3, 5, 7, 101, 2147483647][idx];
            check_axioms(&PrimeField::new(p).unwrap(), seed);
        }

        #[test]
        fn extension_axioms(seed in any::<u64>(), idx in 0usize..6) {
            let spec = ["GF(4)", "GF(8)", "GF(9)", "GF(2^8)", "GF(5^3)", "GF(3^5)"][idx];
            let f = ExtensionField::from_spec(&FieldSpec::parse(spec).unwrap()).unwrap();
            check_axioms(&f, seed);
        }
    }

    #[test]
    fn frobenius_fixes_prime_subfield() {
        let f = ExtensionField::from_spec(&FieldSpec::parse("GF(9)").unwrap()).unwrap();
        for i in 0..9 {
            let a = f.element(i);
            let a3 = f.pow(&a, 3);
            let fixed = a3 == a;
            assert_eq!(fixed, i < 3, "element {i}");
        }
    }

    #[test]
    fn multiplicative_group_order() {
        for spec in ["GF(4)", "GF(8)", "GF(9)", "GF(16)", "GF(25)"] {
            let f = AnyField::make(&FieldSpec::parse(spec).unwrap()).unwrap();
            if let AnyField::Extension(f) = f {
                let q = f.order().unwrap() as u64;
                for i in 1..q {
                    let a = f.element(i);
                    assert!(f.is_one(&f.pow(&a, q - 1)), "{spec} element {i}");
                }
            }
        }
    }
}
