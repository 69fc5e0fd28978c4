//! Unit and shift identities of a scaffold, the hom-set grading, and
//! reconstruction by one-sided normal forms.

use super::{compare_sides, Counterexample, Report, Weighted};
use crate::free_cat::{evaluate_term, evaluate_word, Finite, Interpretation, Term, Word};
use crate::presentations::normal::DEFAULT_WORD_BUDGET;
use crate::presentations::scaffold::UnitReturn;
use crate::presentations::{normalize_one_sided, Presentation, PresentationError, Scaffold};
use crate::gen::Gen;
use crate::with_finite;
use std::fmt::Debug;
use std::time::Instant;

/// Whether `hom(m, n)` should be nonempty.
pub fn expected_nonempty(sc: &Scaffold, m: usize, n: usize) -> bool {
    match sc.unit_return {
        UnitReturn::Mu => m == 0 || n >= 1,
        _ => m.abs_diff(n) % sc.step() == 0,
    }
}

fn word(sc: &Scaffold, dom: usize, letters: Vec<Gen>) -> Word {
    Word::new(sc.sig, dom, letters).expect("scaffold words are well typed")
}

fn term_of(w: &Word) -> Weighted {
    Weighted::plain(w.to_term())
}

/// The identities a scaffold rests on, as pairs of words, at object `n`.
pub fn scaffold_identities(sc: &Scaffold, n: usize) -> Vec<(&'static str, Word, Word)> {
    let d = sc.step();
    let (l, r) = (Gen::Lambda(n), Gen::Rho(n));
    let mut out = vec![
        ("unit-retract", word(sc, n, vec![l, r]), Word::empty(sc.sig, n)),
        ("unit-return", word(sc, n + d, vec![r, l]), sc.w(n)),
    ];
    for x in sc.letters_at(n) {
        let lower = word(sc, n, vec![Gen::Lambda(n)]).then(&sc.plus_lower(&x)).expect("typed");
        out.push(("shift-lower", word(sc, n, vec![x, l]), lower));
        let upper = sc.plus_upper(&x).then(&word(sc, n + d, vec![r])).expect("typed");
        out.push(("shift-upper", word(sc, n + d, vec![r, x]), upper));
    }
    out
}

fn in_catalog(cat: &[(Word, Word)], a: &Word, b: &Word) -> bool {
    cat.iter().any(|(x, y)| (x == a && y == b) || (x == b && y == a))
}

fn run<I>(interp: &I, sc: &Scaffold, n_max: usize, report: &mut Report)
where
    I: Finite,
    I::Mor: super::DeltaScale,
{
    // Grading.
    for m in 0..=n_max {
        for n in 0..=n_max {
            let h = match interp.homset(m, n) {
                Ok(h) => h,
                Err(e) => {
                    report.budget(e);
                    continue;
                }
            };
            report.items += 1;
            let ok = !h.is_empty() == expected_nonempty(sc, m, n)
                && (sc.unit_return != UnitReturn::Mu || m != 0 || h.len() == 1);
            if !ok {
                report.fail(Counterexample::Grading {
                    scaffold: sc.id,
                    m,
                    n,
                });
            }
        }
    }
    // Unit and shift identities, and their presence in the catalog.
    let catalog: Option<Vec<(Word, Word)>> = Presentation::by_id(&format!("{}-category", sc.id))
        .ok()
        .and_then(|p| p.instances(n_max + sc.step()).ok())
        .map(|inst| {
            inst.into_iter()
                .filter_map(|r| Some((r.lhs.word?, r.rhs.word?)))
                .collect()
        });
    for n in sc.min_object..=n_max {
        for (name, a, b) in scaffold_identities(sc, n) {
            report.items += 1;
            let (x, y) = (term_of(&a), term_of(&b));
            if let Err(detail) = compare_sides(&x, &y, interp) {
                report.fail(Counterexample::Unequal {
                    target: sc.target,
                    linear: false,
                    lhs: x,
                    rhs: y,
                    detail: format!("{name}: {detail}"),
                });
            }
            if let Some(cat) = &catalog {
                if !in_catalog(cat, &a, &b) {
                    report.fail(Counterexample::NotInCatalog {
                        presentation: format!("{}-category", sc.id),
                        lhs: a.clone(),
                        rhs: b.clone(),
                    });
                }
            }
        }
    }
    // Empty domains absorb every edge.
    if sc.unit_return == UnitReturn::Mu {
        if let Ok(p) = Presentation::by_id(&format!("{}-tensor", sc.id)) {
            let sig = p.signature();
            let units = |k: usize| -> Term {
                Term::ten((0..k).map(|_| Term::gen(Gen::Ubar, sig).expect("edge")).collect())
            };
            for g in p.alphabet.tensor_edges() {
                let (a, b) = g.arity(sig);
                let lhs = Term::seq(vec![units(a), Term::gen(g, sig).expect("edge")]).expect("typed");
                let (x, y) = (Weighted::plain(lhs), Weighted::plain(units(b)));
                report.items += 1;
                if let Err(detail) = compare_sides(&x, &y, interp) {
                    report.fail(Counterexample::Unequal {
                        target: sc.target,
                        linear: false,
                        lhs: x,
                        rhs: y,
                        detail,
                    });
                }
            }
        }
    }
}

/// Grading, unit, unit-return and shift identities up to `n_max`.
pub fn check_scaffold(sc: &Scaffold, n_max: usize) -> Report {
    let start = Instant::now();
    let mut r = Report::new("scaffold", format!("{} n_max={n_max}", sc.id));
    with_finite!(sc.target, |i| run(&i, sc, n_max, &mut r));
    r.timed(start)
}

pub(crate) fn grading_fails(scaffold: &str, m: usize, n: usize) -> bool {
    let Some(sc) = Scaffold::by_id(scaffold) else {
        return false;
    };
    with_finite!(sc.target, |i| match i.homset(m, n) {
        Ok(h) =>
            !h.is_empty() != expected_nonempty(&sc, m, n)
                || (sc.unit_return == UnitReturn::Mu && m == 0 && h.len() != 1),
        Err(_) => false,
    })
}

pub(crate) fn catalog_lacks(presentation: &str, a: &Word, b: &Word) -> bool {
    let Ok(p) = Presentation::by_id(presentation) else {
        return false;
    };
    let top = (0..=a.len()).map(|k| a.object_at(k)).max().unwrap_or(0);
    match p.instances(top + 2) {
        Ok(inst) => {
            let cat: Vec<(Word, Word)> =
                inst.into_iter().filter_map(|r| Some((r.lhs.word?, r.rhs.word?))).collect();
            !in_catalog(&cat, a, b)
        }
        Err(_) => false,
    }
}

/// Graded words over the scaffold alphabet, ordered by length, domain and
/// letters, with objects at most `max_object`; counted exactly and unranked.
pub struct GradedWords {
    sc: Scaffold,
    max_object: usize,
    max_len: usize,
    /// `counts[len][obj]`: words of exactly `len` letters starting at `obj`.
    counts: Vec<Vec<u128>>,
}

impl GradedWords {
    pub fn new(sc: &Scaffold, max_object: usize, max_len: usize) -> GradedWords {
        let mut g = GradedWords {
            sc: sc.clone(),
            max_object,
            max_len,
            counts: Vec::new(),
        };
        g.counts.push(vec![1; max_object + 1]);
        for len in 1..=max_len {
            let row = (0..=max_object)
                .map(|o| g.edges(o).iter().map(|e| g.counts[len - 1][e.arity(sc.sig).1]).sum())
                .collect();
            g.counts.push(row);
        }
        g
    }

    fn edges(&self, obj: usize) -> Vec<Gen> {
        if obj < self.sc.min_object {
            return Vec::new();
        }
        let mut e: Vec<Gen> = self
            .sc
            .alphabet()
            .edges_from(obj)
            .into_iter()
            .filter(|g| g.arity(self.sc.sig).1 <= self.max_object)
            .collect();
        e.sort();
        e
    }

    fn doms(&self) -> std::ops::RangeInclusive<usize> {
        self.sc.min_object..=self.max_object
    }

    pub fn total(&self) -> u128 {
        (0..=self.max_len)
            .flat_map(|len| self.doms().map(move |d| (len, d)))
            .map(|(len, d)| self.counts[len][d])
            .sum()
    }

    pub fn nth(&self, mut k: u128) -> Option<Word> {
        for len in 0..=self.max_len {
            for dom in self.doms() {
                let c = self.counts[len][dom];
                if k >= c {
                    k -= c;
                    continue;
                }
                let mut letters = Vec::new();
                let mut obj = dom;
                for left in (0..len).rev() {
                    for e in self.edges(obj) {
                        let next = e.arity(self.sc.sig).1;
                        let c = self.counts[left][next];
                        if k < c {
                            letters.push(e);
                            obj = next;
                            break;
                        }
                        k -= c;
                    }
                }
                return Word::new(self.sc.sig, dom, letters).ok();
            }
        }
        None
    }

    /// `count` words at evenly spaced ranks.
    pub fn spread(&self, count: usize) -> Vec<Word> {
        let total = self.total();
        let count = (count as u128).min(total);
        (0..count).filter_map(|i| self.nth(i * total / count)).collect()
    }
}

fn default_max_object(sc: &Scaffold) -> usize {
    sc.min_object + if sc.step() == 1 { 4 } else { 6 }
}

fn normalize_each<I>(interp: &I, sc: &Scaffold, words: &[Word], report: &mut Report)
where
    I: Interpretation + Debug,
    I::Mor: Send + Sync + 'static,
{
    for w in words {
        report.items += 1;
        let nf = match normalize_one_sided(w, sc, interp, DEFAULT_WORD_BUDGET) {
            Ok(nf) => nf,
            Err(PresentationError::BudgetExceeded(b)) => {
                report.budget(format!("word search budget {b} exhausted on {w}"));
                continue;
            }
            Err(e) => {
                report.fail(Counterexample::Unequal {
                    target: sc.target,
                    linear: false,
                    lhs: term_of(w),
                    rhs: term_of(w),
                    detail: e.to_string(),
                });
                continue;
            }
        };
        let top = w.dom().max(w.cod());
        let core_ok = nf
            .core
            .letters()
            .iter()
            .all(|g| g.arity(sc.sig) == (top, top) && sc.letters.contains(&g.family()));
        let same = match (evaluate_word(w, interp), evaluate_term(&nf.word().to_term(), interp)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        };
        if !same || !core_ok {
            report.fail(Counterexample::Unequal {
                target: sc.target,
                linear: false,
                lhs: term_of(w),
                rhs: term_of(&nf.word()),
                detail: if core_ok {
                    "normal form changes the value".into()
                } else {
                    "core leaves the top alphabet".into()
                },
            });
        }
    }
}

/// One-sided normal forms of `count` graded words of length at most
/// `max_len` evaluate like the words they came from.
pub fn check_normalize(sc: &Scaffold, count: usize, max_len: usize) -> Report {
    let start = Instant::now();
    let max_object = default_max_object(sc);
    let space = GradedWords::new(sc, max_object, max_len);
    let words = space.spread(count);
    let mut r = Report::new(
        "normalize",
        format!("{} words={} max_len={max_len} max_object={max_object}", sc.id, words.len()),
    );
    r.note = Some(format!("{} words sampled from {}", words.len(), space.total()));
    with_finite!(sc.target, |i| normalize_each(&i, sc, &words, &mut r));
    r.timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_scaffold_small() {
        for sc in Scaffold::all() {
            let r = check_scaffold(&sc, 3);
            assert!(r.passed(), "{}", r.line());
        }
    }

    #[test]
    fn unranking_is_exhaustive() {
        let sc = Scaffold::by_id("TL").unwrap();
        let g = GradedWords::new(&sc, 4, 3);
        let all: Vec<Word> = (0..g.total()).map(|k| g.nth(k).unwrap()).collect();
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
        assert!(g.nth(g.total()).is_none());
        assert!(all.iter().all(|w| w.len() <= 3));
    }

    #[test]
    fn normal_forms_reconstruct_partitions() {
        let sc = Scaffold::by_id("P").unwrap();
        let r = check_normalize(&sc, 200, 5);
        assert!(r.passed(), "{}", r.line());
    }
}
