//! Breadth-first generation of layered terms, tracked by value.
//!
//! Two layered terms with the same value have the same extensions, so it is
//! enough to remember each value once together with the depth it first
//! appeared at.

use super::{Counterexample, Report};
use crate::category::Morphism;
use crate::diagram::Partition;
use crate::free_cat::{Finite, Layer};
use crate::presentations::{Presentation, Reading, Target};
use crate::transform::PartialMap;
use crate::with_finite;
use std::collections::{HashMap, HashSet};
use std::time::Instant;

pub const STATE_BUDGET: usize = 2_000_000;

pub(crate) fn is_genuine_element(target: Target, element: &str) -> bool {
    match target.reading() {
        Reading::Diagram(k) => Partition::parse(element).map(|a| k.contains(&a)).unwrap_or(false),
        Reading::Map(k, _) => PartialMap::parse(element).map(|f| k.contains(&f)).unwrap_or(false),
    }
}

/// All layers over `edges` whose input width is `w` and output width at most `cap`.
pub(crate) fn layers_from(p: &Presentation, w: usize, cap: usize) -> Vec<Layer> {
    let sig = p.signature();
    let mut out = Vec::new();
    for g in p.alphabet.tensor_edges() {
        let (a, b) = g.arity(sig);
        if a > w || w - a + b > cap {
            continue;
        }
        for left in 0..=w - a {
            out.push(Layer {
                left,
                gen: g,
                right: w - a - left,
                dom: a,
                cod: b,
            });
        }
    }
    out
}

fn search<I: Finite>(
    interp: &I,
    p: &Presentation,
    m: usize,
    n: usize,
    size_bound: usize,
    width: usize,
    report: &mut Report,
) {
    let wanted: HashSet<I::Mor> = match interp.homset(m, n) {
        Ok(h) => h.into_iter().collect(),
        Err(e) => {
            report.budget(e);
            return;
        }
    };
    let mut layer_cache: HashMap<usize, Vec<I::Mor>> = HashMap::new();
    for w in 0..=width {
        let vals = layers_from(p, w, width)
            .iter()
            .filter_map(|l| interp.layer(l).ok())
            .collect();
        layer_cache.insert(w, vals);
    }
    let start = I::Mor::identity(m);
    let mut seen: HashSet<I::Mor> = HashSet::from([start.clone()]);
    let mut reached: HashSet<I::Mor> = HashSet::new();
    if wanted.contains(&start) {
        reached.insert(start.clone());
    }
    let mut frontier = vec![start];
    let mut depth = 0;
    while reached.len() < wanted.len() && depth < size_bound && !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for v in &frontier {
            for x in &layer_cache[&v.cod()] {
                let y = v.then(x).expect("widths agree");
                if seen.insert(y.clone()) {
                    if wanted.contains(&y) {
                        reached.insert(y.clone());
                    }
                    next.push(y);
                }
            }
        }
        if seen.len() > STATE_BUDGET {
            report.budget(format!("more than {STATE_BUDGET} values at depth {depth}"));
            return;
        }
        frontier = next;
    }
    report.items = reached.len();
    report.note = Some(format!("{} of {} reached by size {}", reached.len(), wanted.len(), depth));
    if reached.len() < wanted.len() {
        let mut missing: Vec<&I::Mor> = wanted.iter().filter(|a| !reached.contains(*a)).collect();
        missing.sort_by_key(|a| a.to_string());
        report.fail(Counterexample::Unreached {
            target: p.target,
            element: missing[0].to_string(),
        });
    }
}

/// Every morphism of `hom(m, n)` is the value of a layered term over the edges
/// of `p` with at most `size_bound` layers, never wider than `width` (default
/// `max(m, n) + 2`).
pub fn check_surjectivity(p: &Presentation, m: usize, n: usize, size_bound: usize, width: Option<usize>) -> Report {
    let start = Instant::now();
    let width = width.unwrap_or(m.max(n) + 2);
    let mut r = Report::new(
        "surjectivity",
        format!("{} m={m} n={n} size={size_bound} width={width}", p.id),
    );
    with_finite!(p.target, |i| search(&i, p, m, n, size_bound, width, &mut r));
    r.timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn temperley_lieb_two_to_four() {
        let p = Presentation::by_id("TL-tensor").unwrap();
        let r = check_surjectivity(&p, 2, 4, 12, None);
        assert!(r.passed(), "{}", r.line());
        assert_eq!(r.items, 5);
    }

    #[test]
    fn injections_two_to_two() {
        let p = Presentation::by_id("I-tensor").unwrap();
        let r = check_surjectivity(&p, 2, 2, 10, None);
        assert!(r.passed(), "{}", r.line());
        assert_eq!(r.items, 7);
    }

    #[test]
    fn parity_makes_brauer_vacuous() {
        let p = Presentation::by_id("B-tensor").unwrap();
        let r = check_surjectivity(&p, 1, 2, 4, None);
        assert!(r.passed());
        assert_eq!(r.items, 0);
    }

    #[test]
    fn too_small_bound_fails_honestly() {
        let p = Presentation::by_id("P-tensor").unwrap();
        let r = check_surjectivity(&p, 2, 2, 1, None);
        assert_eq!(r.status, crate::verify::Status::Fail);
        assert!(r.counterexample.unwrap().recheck());
    }
}
