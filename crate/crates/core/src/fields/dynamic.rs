use super::{ExtensionField, Field, FieldError, FieldSpec, PrimeField, Rationals};
use num_rational::BigRational;

/// A field chosen at runtime.
#[derive(Debug, Clone)]
pub enum AnyField {
    Rationals(Rationals),
    Prime(PrimeField),
    Extension(ExtensionField),
}

impl AnyField {
    pub fn make(spec: &FieldSpec) -> Result<Self, FieldError> {
        Ok(match spec {
            FieldSpec::Rationals => AnyField::Rationals(Rationals),
            FieldSpec::Prime(p) => AnyField::Prime(PrimeField::new(*p)?),
            FieldSpec::Extension { .. } => AnyField::Extension(ExtensionField::from_spec(spec)?),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Value {
    Rational(BigRational),
    Prime(u64),
    Extension([u32; 8]),
}

/// A field element tagged with its field, for callers that only know the field
/// at runtime. Mixing elements of different fields is an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    spec: FieldSpec,
    value: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

fn apply<F: Field>(f: &F, a: &F::Elem, b: &F::Elem, op: ArithOp) -> Result<F::Elem, FieldError> {
    Ok(match op {
        ArithOp::Add => f.add(a, b),
        ArithOp::Sub => f.sub(a, b),
        ArithOp::Mul => f.mul(a, b),
        ArithOp::Div => f.div(a, b)?,
    })
}

impl FieldElement {
    pub fn parse(spec: &FieldSpec, text: &str) -> Result<Self, FieldError> {
        let value = match AnyField::make(spec)? {
            AnyField::Rationals(f) => Value::Rational(f.parse(text)?),
            AnyField::Prime(f) => Value::Prime(f.parse(text)?),
            AnyField::Extension(f) => Value::Extension(f.parse(text)?),
        };
        Ok(FieldElement { spec: spec.clone(), value })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn render(&self) -> String {
        match (AnyField::make(&self.spec), &self.value) {
            (Ok(AnyField::Rationals(f)), Value::Rational(v)) => f.render(v),
            (Ok(AnyField::Prime(f)), Value::Prime(v)) => f.render(v),
            (Ok(AnyField::Extension(f)), Value::Extension(v)) => f.render(v),
            _ => unreachable!("element constructed against its own spec"),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rational(v) => *v == Rationals.zero(),
            Value::Prime(v) => *v == 0,
            Value::Extension(v) => v.iter().all(|&c| c == 0),
        }
    }
}

/// Checked arithmetic on runtime-typed elements.
pub fn arithmetic(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement, FieldError> {
    if a.spec != b.spec {
        return Err(FieldError::SpecMismatch(a.spec.to_string(), b.spec.to_string()));
    }
    let value = match (AnyField::make(&a.spec)?, &a.value, &b.value) {
        (AnyField::Rationals(f), Value::Rational(x), Value::Rational(y)) => Value::Rational(apply(&f, x, y, op)?),
        (AnyField::Prime(f), Value::Prime(x), Value::Prime(y)) => Value::Prime(apply(&f, x, y, op)?),
        (AnyField::Extension(f), Value::Extension(x), Value::Extension(y)) => Value::Extension(apply(&f, x, y, op)?),
        _ => unreachable!("values match their spec"),
    };
    Ok(FieldElement { spec: a.spec.clone(), value })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatch_and_division() {
        let gf5 = FieldSpec::Prime(5);
        let gf7 = FieldSpec::Prime(7);
        let a = FieldElement::parse(&gf5, "3").unwrap();
        let b = FieldElement::parse(&gf7, "3").unwrap();
        assert!(matches!(arithmetic(&a, &b, ArithOp::Add), Err(FieldError::SpecMismatch(..))));
        let z = FieldElement::parse(&gf5, "0").unwrap();
        assert_eq!(arithmetic(&a, &z, ArithOp::Div), Err(FieldError::DivisionByZero));
        let q = arithmetic(&a, &a, ArithOp::Mul).unwrap();
        assert_eq!(q.render(), "4");
        let gf4 = FieldSpec::parse("GF(4)").unwrap();
        let g = FieldElement::parse(&gf4, "g").unwrap();
        let g2 = arithmetic(&g, &g, ArithOp::Mul).unwrap();
        assert_eq!(g2.render(), "g+1");
        let one = FieldElement::parse(&gf4, "1").unwrap();
        assert!(arithmetic(&arithmetic(&g2, &g, ArithOp::Add).unwrap(), &one, ArithOp::Add)
            .unwrap()
            .is_zero());
    }
}
