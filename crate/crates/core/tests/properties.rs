mod common;

use hochcalc_core::engine::{Algebra, BuildOptions};
use hochcalc_core::fields::{Field, PrimeField, Rationals};
use hochcalc_core::hochschild::{self, Complex};
use hochcalc_core::oracle::{BarComplex, DEFAULT_GUARD};
use hochcalc_core::presentation::parse;
use proptest::prelude::*;
use std::collections::BTreeMap;

const NAMES: [&str; 4] = ["a", "b", "c", "d"];

/// A bound quiver: all paths of length `len` vanish, and some paths of length
/// two are identified or killed.
#[derive(Debug, Clone)]
struct Spec {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
    len: usize,
    extra: Vec<(usize, usize, bool)>,
}

impl Spec {
    fn paths(&self, len: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0..self.arrows.len()).map(|a| vec![a]).collect();
        for _ in 1..len {
            out = out
                .iter()
                .flat_map(|p| {
                    let end = self.arrows[*p.last().unwrap()].1;
                    (0..self.arrows.len()).filter(move |&b| self.arrows[b].0 == end).map(move |b| {
                        let mut q = p.clone();
                        q.push(b);
                        q
                    })
                })
                .collect();
        }
        out
    }

    fn word(&self, p: &[usize]) -> String {
        p.iter().map(|&a| NAMES[a]).collect::<Vec<_>>().join("*")
    }

    fn relations(&self) -> Vec<String> {
        let twos = self.paths(2);
        let mut rels = Vec::new();
        for &(i, j, kill) in &self.extra {
            let (Some(p), Some(q)) = (twos.get(i % twos.len().max(1)), twos.get(j % twos.len().max(1))) else {
                continue;
            };
            let same_ends = self.arrows[p[0]].0 == self.arrows[q[0]].0 && self.arrows[p[1]].1 == self.arrows[q[1]].1;
            if kill || p == q || !same_ends {
                rels.push(format!("{} = 0", self.word(p)));
            } else {
                rels.push(format!("{} = {}", self.word(p), self.word(q)));
            }
        }
        rels.extend(self.paths(self.len).iter().map(|p| format!("{} = 0", self.word(p))));
        rels.sort();
        rels.dedup();
        rels
    }

    fn text(&self, arrow_order: &[usize], relation_shift: usize) -> String {
        let mut s = String::from("algebra random\nvertices: ");
        s += &(1..=self.vertices).map(|v| v.to_string()).collect::<Vec<_>>().join(", ");
        s += "\n";
        for &a in arrow_order {
            let (x, y) = self.arrows[a];
            s += &format!("arrow {}: {} -> {}\n", NAMES[a], x + 1, y + 1);
        }
        let mut rels = self.relations();
        if !rels.is_empty() {
            let k = relation_shift % rels.len();
            rels.rotate_left(k);
            s += "relations:\n";
            for r in rels {
                s += &format!("  {r}\n");
            }
        }
        s
    }
}

fn arb_spec() -> impl Strategy<Value = Spec> {
    (1usize..=3)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec((0..n, 0..n), 1..=3),
                2usize..=3,
                proptest::collection::vec((0usize..8, 0usize..8, any::<bool>()), 0..=3),
            )
        })
        .prop_map(|(vertices, arrows, len, extra)| Spec {
            vertices,
            arrows,
            len,
            extra,
        })
}

fn build<F: Field>(f: F, text: &str) -> Algebra<F> {
    let p = parse(text).unwrap_or_else(|e| panic!("{e}\n{text}"));
    Algebra::build(f, &p, &BTreeMap::new(), BuildOptions { degree_cap: 16 }).unwrap_or_else(|e| panic!("{e}\n{text}"))
}

fn check_algebra<F: Field>(alg: &Algebra<F>) -> Result<[usize; 3], TestCaseError> {
    let f = alg.field();
    let c = Complex::new(alg);
    let d1 = c.d1_matrix();
    prop_assert!(d1.mul(f, &c.d2_matrix()).unwrap().is_zero(f));
    prop_assert!(c.delta1().mul(f, &c.delta0()).unwrap().is_zero(f));
    for mu in &alg.bound().relations {
        let image = d1.apply(f, &c.p1.to_dense(f, &hochschild::rho(alg, &c.p1, mu))).unwrap();
        prop_assert!(image.iter().all(|x| f.is_zero(x)));
    }

    let cartan = alg.cartan();
    prop_assert_eq!(cartan.iter().flatten().sum::<usize>(), alg.dim());
    let q = alg.quiver();
    let diagonal: usize = (0..q.vertices.len()).map(|i| cartan[i][i]).sum();
    let along_arrows: usize = q.arrows.iter().map(|a| cartan[a.source][a.target]).sum();
    let (hh, inter) = c.hh().map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(inter.hom_p0, diagonal);
    prop_assert_eq!(inter.hom_p1, along_arrows);
    prop_assert_eq!(hh.h0, alg.center().len());

    let d = alg.dim();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let xy = alg.mul(&alg.basis_element(x), &alg.basis_element(y));
                let yz = alg.mul(&alg.basis_element(y), &alg.basis_element(z));
                prop_assert_eq!(alg.mul(&xy, &alg.basis_element(z)), alg.mul(&alg.basis_element(x), &yz));
            }
        }
    }

    let bar = BarComplex::new(alg).hh(DEFAULT_GUARD).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(bar.hh, [Some(hh.h0), Some(hh.h1), Some(hh.h2)]);
    Ok([hh.h0, hh.h1, hh.h2])
}

fn check_permuted<F: Field>(f: F, spec: &Spec, order: &[usize], shift: usize) -> Result<(), TestCaseError> {
    let natural: Vec<usize> = (0..spec.arrows.len()).collect();
    let a = build(f.clone(), &spec.text(&natural, 0));
    prop_assume!(a.dim() <= 10);
    let hh = check_algebra(&a)?;
    let b = build(f, &spec.text(order, shift));
    prop_assert_eq!(a.cartan(), b.cartan());
    let (hb, _) = Complex::new(&b).hh().map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(hh, [hb.h0, hb.h1, hb.h2]);
    Ok(())
}

fn arb_case() -> impl Strategy<Value = (Spec, Vec<usize>, usize)> {
    arb_spec().prop_flat_map(|s| {
        let order = Just((0..s.arrows.len()).collect::<Vec<_>>()).prop_shuffle();
        (Just(s), order, 0usize..16)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_bound_quivers_over_gf2((spec, order, shift) in arb_case()) {
        check_permuted(PrimeField::new(2).unwrap(), &spec, &order, shift)?;
    }

    #[test]
    fn random_bound_quivers_over_gf3((spec, order, shift) in arb_case()) {
        check_permuted(PrimeField::new(3).unwrap(), &spec, &order, shift)?;
    }

    #[test]
    fn random_bound_quivers_over_rationals((spec, order, shift) in arb_case()) {
        check_permuted(Rationals, &spec, &order, shift)?;
    }

    #[test]
    fn first_differential_rank_matches_reference((spec, _order, _shift) in arb_case(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let natural: Vec<usize> = (0..spec.arrows.len()).collect();
        let alg = build(PrimeField::new(p).unwrap(), &spec.text(&natural, 0));
        prop_assume!(alg.dim() <= 10);
        let c = Complex::new(&alg);
        let m = c.d1_matrix();
        let rows: Vec<Vec<u64>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let rank = common::rank_mod_p(rows, p);
        prop_assert_eq!(rank + alg.dim(), c.p0.dim());
    }

    #[test]
    fn semisimple_products(n in 1usize..=4) {
        let labels: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
        let text = format!("algebra kn\nvertices: {}\n", labels.join(", "));
        let alg = build(PrimeField::new(3).unwrap(), &text);
        let hh = check_algebra(&alg)?;
        prop_assert_eq!(hh, common::semisimple_hh(n));
        let terms = hochschild::extend_resolution(&alg, 3, 1 << 20).unwrap();
        prop_assert_eq!(terms.len(), 2);
    }
}
