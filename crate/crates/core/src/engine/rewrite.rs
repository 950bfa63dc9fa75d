//! Noncommutative completion on paths with respect to the length-lexicographic
//! order, and the normal words of the resulting rewriting system.

use crate::fields::Field;
use crate::presentation::{poly_add_term, Path, Poly, Quiver};
use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("completion not certified: an overlap of length {length} exceeds the cap {cap}")]
    CapExceeded { cap: usize, length: usize },
    #[error("the quotient is infinite dimensional")]
    InfiniteDimensional,
    #[error("the quotient has more than {0} normal words")]
    TooLarge(usize),
}

/// `lhs -> rhs` with every path of `rhs` smaller than `lhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule<F: Field> {
    pub lhs: Path,
    pub rhs: Poly<F>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CompletionStats {
    pub overlaps_resolved: usize,
    pub max_overlap_length: usize,
    pub rules_discarded: usize,
}

#[derive(Debug, Clone)]
pub struct RewriteSystem<F: Field> {
    pub rules: Vec<Rule<F>>,
    lookup: HashMap<Vec<usize>, usize>,
    lengths: BTreeSet<usize>,
    pub stats: CompletionStats,
}

fn mul_right<F: Field>(p: &Poly<F>, s: &Path) -> Poly<F> {
    p.iter().map(|(w, c)| (w.concat(s).expect("composable"), c.clone())).collect()
}

fn mul_left<F: Field>(s: &Path, p: &Poly<F>) -> Poly<F> {
    p.iter().map(|(w, c)| (s.concat(w).expect("composable"), c.clone())).collect()
}

/// First (leftmost, shortest) occurrence of a leading word in `w`.
fn find_in(lookup: &HashMap<Vec<usize>, usize>, lengths: &BTreeSet<usize>, w: &[usize]) -> Option<(usize, usize)> {
    for start in 0..w.len() {
        for &l in lengths {
            if start + l > w.len() {
                break;
            }
            if let Some(&r) = lookup.get(&w[start..start + l]) {
                return Some((r, start));
            }
        }
    }
    None
}

fn reduce_with<'r, F: Field>(
    f: &F,
    q: &Quiver,
    p: &Poly<F>,
    find: impl Fn(&[usize]) -> Option<(&'r Rule<F>, usize)>,
) -> Poly<F> {
    let mut work = p.clone();
    let mut done = Poly::<F>::new();
    while let Some((w, c)) = work.pop_last() {
        match find(&w.arrows) {
            None => {
                done.insert(w, c);
            }
            Some((rule, pos)) => {
                let pre = q.subpath(&w, 0, pos);
                let post = q.subpath(&w, pos + rule.lhs.len(), w.len());
                for (m, d) in &rule.rhs {
                    let word = pre.concat(m).and_then(|x| x.concat(&post)).expect("composable");
                    poly_add_term(f, &mut work, word, f.mul(&c, d));
                }
            }
        }
    }
    done
}

impl<F: Field> RewriteSystem<F> {
    fn from_rules(rules: Vec<Rule<F>>, stats: CompletionStats) -> Self {
        let lookup = rules.iter().enumerate().map(|(i, r)| (r.lhs.arrows.clone(), i)).collect();
        let lengths = rules.iter().map(|r| r.lhs.len()).collect();
        RewriteSystem {
            rules,
            lookup,
            lengths,
            stats,
        }
    }

    fn find_reducer(&self, w: &[usize]) -> Option<(usize, usize)> {
        find_in(&self.lookup, &self.lengths, w)
    }

    pub fn is_normal(&self, w: &Path) -> bool {
        self.find_reducer(&w.arrows).is_none()
    }

    /// Normal form of `p`: rewrite the largest reducible term until none remain.
    pub fn reduce(&self, f: &F, q: &Quiver, p: &Poly<F>) -> Poly<F> {
        reduce_with(f, q, p, |w| {
            find_in(&self.lookup, &self.lengths, w).map(|(r, pos)| (&self.rules[r], pos))
        })
    }

    /// Enumerates the normal words, detecting an infinite set via a cycle in
    /// the automaton on windows of length `max_lhs - 1`.
    pub fn normal_words(&self, q: &Quiver, limit: usize) -> Result<Vec<Path>, RewriteError> {
        let m = self.lengths.iter().next_back().copied().unwrap_or(1);
        let window = m.saturating_sub(1).max(1);
        let mut out: Vec<Path> = (0..q.vertices.len()).map(Path::trivial).collect();
        let mut layer = out.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for w in &layer {
                for (a, arrow) in q.arrows.iter().enumerate() {
                    if arrow.source != w.end {
                        continue;
                    }
                    let mut arrows = w.arrows.clone();
                    arrows.push(a);
                    let is_reducible = self.lengths.iter().any(|&l| {
                        l <= arrows.len() && self.lookup.contains_key(&arrows[arrows.len() - l..])
                    });
                    if !is_reducible {
                        next.push(Path {
                            start: w.start,
                            end: arrow.target,
                            arrows,
                        });
                    }
                }
            }
            if let Some(first) = next.first() {
                if first.len() == window {
                    if self.window_graph_has_cycle(q, &next) {
                        return Err(RewriteError::InfiniteDimensional);
                    }
                }
            }
            out.extend(next.iter().cloned());
            if out.len() > limit {
                return Err(RewriteError::TooLarge(limit));
            }
            layer = next;
        }
        out.sort();
        Ok(out)
    }

    fn window_graph_has_cycle(&self, q: &Quiver, windows: &[Path]) -> bool {
        let index: HashMap<&[usize], usize> = windows.iter().enumerate().map(|(i, w)| (w.arrows.as_slice(), i)).collect();
        let mut succ = vec![Vec::new(); windows.len()];
        for (i, w) in windows.iter().enumerate() {
            for (a, arrow) in q.arrows.iter().enumerate() {
                if arrow.source != w.end {
                    continue;
                }
                let mut word = w.arrows.clone();
                word.push(a);
                if self.find_reducer(&word).is_some() {
                    continue;
                }
                if let Some(&j) = index.get(&word[1..]) {
                    succ[i].push(j);
                }
            }
        }
        // Iterative three-colour depth-first search.
        let mut colour = vec![0u8; windows.len()];
        for root in 0..windows.len() {
            if colour[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            colour[root] = 1;
            while let Some(&mut (v, ref mut k)) = stack.last_mut() {
                if *k < succ[v].len() {
                    let u = succ[v][*k];
                    *k += 1;
                    match colour[u] {
                        1 => return true,
                        0 => {
                            colour[u] = 1;
                            stack.push((u, 0));
                        }
                        _ => {}
                    }
                } else {
                    colour[v] = 2;
                    stack.pop();
                }
            }
        }
        false
    }
}

struct Completion<'a, F: Field> {
    f: &'a F,
    q: &'a Quiver,
    rules: Vec<Option<Rule<F>>>,
    lookup: HashMap<Vec<usize>, usize>,
    lengths: BTreeSet<usize>,
    pairs: BinaryHeap<Reverse<(usize, usize, usize, usize)>>,
    stats: CompletionStats,
}

impl<'a, F: Field> Completion<'a, F> {
    fn add(&mut self, p: Poly<F>, queue: &mut Vec<Poly<F>>) {
        let r = reduce_with(self.f, self.q, &p, |w| {
            find_in(&self.lookup, &self.lengths, w).map(|(r, pos)| (self.rules[r].as_ref().unwrap(), pos))
        });
        let Some((lt, lc)) = r.last_key_value().map(|(k, v)| (k.clone(), v.clone())) else {
            return;
        };
        let inv = self.f.inv(&lc).expect("nonzero leading coefficient");
        let mut rhs = Poly::<F>::new();
        for (w, c) in r.iter() {
            if *w != lt {
                rhs.insert(w.clone(), self.f.neg(&self.f.mul(c, &inv)));
            }
        }
        for i in 0..self.rules.len() {
            let hit = matches!(&self.rules[i], Some(rule) if rule.lhs.find(&lt).is_some());
            if hit {
                let old = self.rules[i].take().unwrap();
                self.lookup.remove(&old.lhs.arrows);
                let mut back = old.rhs.clone();
                for c in back.values_mut() {
                    *c = self.f.neg(c);
                }
                back.insert(old.lhs, self.f.one());
                queue.push(back);
                self.stats.rules_discarded += 1;
            }
        }
        let n = self.rules.len();
        self.lookup.insert(lt.arrows.clone(), n);
        self.rules.push(Some(Rule { lhs: lt, rhs }));
        self.lengths = self.lookup.keys().map(|k| k.len()).collect();
        for i in 0..=n {
            if self.rules[i].is_some() {
                self.push_overlaps(i, n);
                if i != n {
                    self.push_overlaps(n, i);
                }
            }
        }
    }

    fn push_overlaps(&mut self, i: usize, j: usize) {
        let a = &self.rules[i].as_ref().unwrap().lhs.arrows;
        let b = &self.rules[j].as_ref().unwrap().lhs.arrows;
        for k in 1..a.len().min(b.len()) {
            if a[a.len() - k..] == b[..k] {
                self.pairs.push(Reverse((a.len() + b.len() - k, i, j, k)));
            }
        }
    }

    fn s_poly(&self, i: usize, j: usize, k: usize) -> Poly<F> {
        let ri = self.rules[i].as_ref().unwrap();
        let rj = self.rules[j].as_ref().unwrap();
        let suffix = self.q.subpath(&rj.lhs, k, rj.lhs.len());
        let prefix = self.q.subpath(&ri.lhs, 0, ri.lhs.len() - k);
        let mut s = mul_right::<F>(&ri.rhs, &suffix);
        for (w, c) in mul_left::<F>(&prefix, &rj.rhs) {
            poly_add_term(self.f, &mut s, w, self.f.neg(&c));
        }
        s
    }
}

/// Completes `generators` to a reduced rewriting system, resolving every
/// overlap ambiguity up to length `cap`.
pub fn complete<F: Field>(f: &F, q: &Quiver, generators: &[Poly<F>], cap: usize) -> Result<RewriteSystem<F>, RewriteError> {
    let mut c = Completion {
        f,
        q,
        rules: Vec::new(),
        lookup: HashMap::new(),
        lengths: BTreeSet::new(),
        pairs: BinaryHeap::new(),
        stats: CompletionStats::default(),
    };
    let mut queue: Vec<Poly<F>> = generators.iter().rev().cloned().collect();
    loop {
        while let Some(p) = queue.pop() {
            c.add(p, &mut queue);
        }
        let Some(Reverse((len, i, j, k))) = c.pairs.pop() else {
            break;
        };
        if c.rules[i].is_none() || c.rules[j].is_none() {
            continue;
        }
        if len > cap {
            return Err(RewriteError::CapExceeded { cap, length: len });
        }
        c.stats.overlaps_resolved += 1;
        c.stats.max_overlap_length = c.stats.max_overlap_length.max(len);
        queue.push(c.s_poly(i, j, k));
    }
    let alive: Vec<Rule<F>> = c.rules.iter().flatten().cloned().collect();
    let mut sys = RewriteSystem::from_rules(alive, c.stats.clone());
    // Interreduce the right-hand sides so the system is the reduced one.
    let reduced: Vec<Rule<F>> = sys
        .rules
        .iter()
        .map(|r| Rule {
            lhs: r.lhs.clone(),
            rhs: sys.reduce(f, q, &r.rhs),
        })
        .collect();
    let mut reduced = reduced;
    reduced.sort_by(|a, b| a.lhs.cmp(&b.lhs));
    sys = RewriteSystem::from_rules(reduced, c.stats);
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{PrimeField, Rationals};
    use crate::presentation::parse;
    use std::collections::BTreeMap;

    fn system(text: &str) -> (Quiver, RewriteSystem<Rationals>) {
        let p = parse(text).unwrap();
        let b = p.bind(&Rationals, &BTreeMap::new()).unwrap();
        let sys = complete(&Rationals, &p.quiver, &b.relations, 16).unwrap();
        (p.quiver, sys)
    }

    #[test]
    fn truncated_polynomial_ring() {
        let (q, sys) = system("algebra t\nvertices: 1\narrow x: 1 -> 1\nrelations:\n  x^4 = 0\n");
        assert_eq!(sys.normal_words(&q, 100).unwrap().len(), 4);
    }

    #[test]
    fn commutative_square_needs_completion() {
        // k<x,y>/(xy - yx, x^2, y^2) has dimension 4.
        let (q, sys) = system(
            "algebra t\nvertices: 1\narrow x: 1 -> 1\narrow y: 1 -> 1\nrelations:\n  x*y = y*x\n  x^2 = 0\n  y^2 = 0\n",
        );
        assert_eq!(sys.normal_words(&q, 100).unwrap().len(), 4);
        assert!(sys.stats.overlaps_resolved > 0);
    }

    #[test]
    fn detects_infinite_quotient() {
        let (q, sys) = system("algebra t\nvertices: 1\narrow x: 1 -> 1\narrow y: 1 -> 1\nrelations:\n  x*y = 0\n");
        assert_eq!(sys.normal_words(&q, 1000), Err(RewriteError::InfiniteDimensional));
    }

    #[test]
    fn cap_is_enforced() {
        let p = parse("algebra t\nvertices: 1\narrow x: 1 -> 1\narrow y: 1 -> 1\nrelations:\n  x*y*x = y*y*y\n  x^5 = 0\n").unwrap();
        let b = p.bind(&Rationals, &BTreeMap::new()).unwrap();
        assert!(matches!(complete(&Rationals, &p.quiver, &b.relations, 3), Err(RewriteError::CapExceeded { .. })));
    }

    #[test]
    fn characteristic_changes_the_quotient() {
        // x^2 = 2 y^2 together with xy = yx = 0 and y^3 = 0.
        let text = "algebra t\nvertices: 1\narrow x: 1 -> 1\narrow y: 1 -> 1\nrelations:\n  x^2 = 2*y^2\n  x*y = 0\n  y*x = 0\n  y^3 = 0\n";
        let p = parse(text).unwrap();
        let f2 = PrimeField::new(2).unwrap();
        let b2 = p.bind(&f2, &BTreeMap::new()).unwrap();
        let s2 = complete(&f2, &p.quiver, &b2.relations, 16).unwrap();
        let b0 = p.bind(&Rationals, &BTreeMap::new()).unwrap();
        let s0 = complete(&Rationals, &p.quiver, &b0.relations, 16).unwrap();
        assert_eq!(s0.normal_words(&p.quiver, 100).unwrap().len(), 4);
        assert_eq!(s2.normal_words(&p.quiver, 100).unwrap().len(), 4);
        assert!(s2.rules.iter().any(|r| r.lhs.arrows == vec![0, 0] && r.rhs.is_empty()));
    }
}
