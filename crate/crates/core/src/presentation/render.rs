use super::{LinComb, Presentation, Quiver, Relation, Scalar};
use std::fmt::Write;

fn scalar(s: &Scalar, out: &mut String, nested: bool) {
    match s {
        Scalar::Lit(t) | Scalar::Param(t) => out.push_str(t),
        Scalar::Neg(x) => {
            out.push_str(if nested { "(-" } else { "-" });
            scalar(x, out, true);
            if nested {
                out.push(')');
            }
        }
        Scalar::Mul(xs) => {
            if nested {
                out.push('(');
            }
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    out.push('*');
                }
                scalar(x, out, true);
            }
            if nested {
                out.push(')');
            }
        }
        Scalar::Add(xs) => {
            out.push('(');
            for (i, x) in xs.iter().enumerate() {
                match (i, x) {
                    (0, _) => scalar(x, out, false),
                    (_, Scalar::Neg(inner)) => {
                        out.push_str(" - ");
                        scalar_in_sum(inner, out);
                    }
                    _ => {
                        out.push_str(" + ");
                        scalar_in_sum(x, out);
                    }
                }
            }
            out.push(')');
        }
    }
}

fn scalar_in_sum(s: &Scalar, out: &mut String) {
    match s {
        Scalar::Mul(_) => scalar(s, out, false),
        Scalar::Neg(_) => scalar(s, out, true),
        _ => scalar(s, out, true),
    }
}

fn lincomb(q: &Quiver, l: &LinComb, out: &mut String) {
    if l.terms.is_empty() {
        out.push('0');
        return;
    }
    for (i, t) in l.terms.iter().enumerate() {
        match (i, t.negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        for f in &t.factors {
            scalar(f, out, true);
            out.push('*');
        }
        out.push_str(&q.path_label(&t.path));
    }
}

fn relation(q: &Quiver, r: &Relation, out: &mut String) {
    out.push_str("  ");
    lincomb(q, &r.lhs, out);
    out.push_str(" = ");
    lincomb(q, &r.rhs, out);
    out.push('\n');
}

/// Renders a presentation in the `.qa` format accepted by [`super::parse`].
pub fn render(p: &Presentation) -> String {
    let mut out = String::new();
    write!(out, "algebra {}", p.name).unwrap();
    if !p.params.is_empty() {
        write!(out, " params {}", p.params.join(", ")).unwrap();
    }
    out.push('\n');
    for c in &p.constraints {
        let mut vals = Vec::new();
        for s in &c.excluded {
            let mut t = String::new();
            scalar(s, &mut t, false);
            vals.push(t);
        }
        writeln!(out, "field-constraints: {} not-in {{{}}}", c.param, vals.join(", ")).unwrap();
    }
    writeln!(out, "vertices: {}", p.quiver.vertices.join(", ")).unwrap();
    for a in &p.quiver.arrows {
        writeln!(
            out,
            "arrow {}: {} -> {}",
            a.label, p.quiver.vertices[a.source], p.quiver.vertices[a.target]
        )
        .unwrap();
    }
    out.push_str("relations:\n");
    for r in &p.relations {
        relation(&p.quiver, r, &mut out);
    }
    if let Some(rs) = &p.resolution_relations {
        out.push_str("resolution-relations:\n");
        for r in rs {
            relation(&p.quiver, r, &mut out);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{parse, Arrow, Path, Term};
    use super::*;
    use proptest::prelude::*;

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        let leaf = prop_oneof![
            (1u32..20).prop_map(|n| Scalar::Lit(n.to_string())),
            (1u32..9, 2u32..9).prop_map(|(a, b)| Scalar::Lit(format!("{a}/{b}"))),
            Just(Scalar::Lit("g".into())),
            (2u32..5).prop_map(|e| Scalar::Lit(format!("g^{e}"))),
            Just(Scalar::Param("lam".into())),
        ];
        leaf.prop_recursive(3, 12, 3, |inner| {
            prop_oneof![
                inner.clone().prop_map(|x| Scalar::Neg(Box::new(x))),
                proptest::collection::vec(inner.clone(), 2..4).prop_map(Scalar::Add),
                proptest::collection::vec(inner, 2..4).prop_map(Scalar::Mul),
            ]
        })
        .prop_filter("canonical nesting", |s| canonical(s))
    }

    /// Shapes the parser can produce: no Neg directly under Neg at the head
    /// of a sum, no Mul directly inside Mul, no Add inside Add.
    fn canonical(s: &Scalar) -> bool {
        match s {
            Scalar::Lit(_) | Scalar::Param(_) => true,
            Scalar::Neg(x) => canonical(x),
            Scalar::Mul(xs) => xs.iter().all(|x| !matches!(x, Scalar::Mul(_)) && canonical(x)),
            Scalar::Add(xs) => xs.iter().enumerate().all(|(i, x)| {
                !matches!(x, Scalar::Add(_))
                    && canonical(x)
                    && !(i > 0 && matches!(x, Scalar::Neg(inner) if matches!(**inner, Scalar::Neg(_))))
            }),
        }
    }

    fn quiver() -> Quiver {
        Quiver {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![
                Arrow { label: "a".into(), source: 0, target: 0 },
                Arrow { label: "s".into(), source: 0, target: 1 },
                Arrow { label: "c".into(), source: 1, target: 0 },
                Arrow { label: "b".into(), source: 1, target: 1 },
            ],
        }
    }

    fn arb_term() -> impl Strategy<Value = Term> {
        (any::<bool>(), proptest::collection::vec(arb_scalar(), 0..3)).prop_map(|(negative, factors)| Term {
            negative,
            factors,
            path: Path { start: 0, end: 0, arrows: vec![1, 3, 2] },
        })
    }

    proptest! {
        #[test]
        fn render_parse_roundtrip(lhs in proptest::collection::vec(arb_term(), 1..4),
                                  rhs in proptest::collection::vec(arb_term(), 0..3)) {
            let p = Presentation {
                name: "rt".into(),
                params: vec!["lam".into()],
                constraints: vec![],
                quiver: quiver(),
                relations: vec![Relation { lhs: LinComb { terms: lhs }, rhs: LinComb { terms: rhs } }],
                resolution_relations: None,
            };
            let text = render(&p);
            let back = parse(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
            prop_assert_eq!(back, p);
        }
    }

    #[test]
    fn renders_sections() {
        let text = "algebra x params lam\nfield-constraints: lam not-in {0, 1}\nvertices: 1, 2\narrow a: 1 -> 1\narrow s: 1 -> 2\narrow c: 2 -> 1\narrow b: 2 -> 2\nrelations:\n  a*a = s*c\n  lam*b*b = c*s\nresolution-relations:\n  a*a = s*c\n";
        let p = parse(text).unwrap();
        assert_eq!(render(&p), text);
    }
}
