//! Bounded joinability: terms with equal values are connected by chains of
//! single relation applications.
//!
//! Rewriting never changes values (checked along the way), so a chain between
//! two members of a value class only passes through terms of that class. Each
//! class is searched breadth first from its least member, first inside the
//! enumerated terms and then, for members still missing, with a larger size cap.

use super::{Counterexample, Report, Weighted};
use crate::free_cat::rewrite::{word_neighbours, Canon, LayeredRule, PackedRule};
use crate::free_cat::{evaluate_layered, evaluate_word, Finite, Interpretation, Layered, Packed, Relation, Word, WordRelation};
use crate::presentations::{Level, Presentation};
use crate::with_finite;
use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::Hash;
use std::time::Instant;

use super::surjectivity::layers_from;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JoinBudget {
    /// Largest term (layers or letters) among the compared ones.
    pub word_size: usize,
    /// Longest rewrite chain searched from a class representative.
    pub depth: usize,
    /// Extra size allowed for intermediate terms.
    pub slack: usize,
    /// Widest cut (objects for words) allowed anywhere; default `max(m, n) + 2`.
    pub width: Option<usize>,
}

impl JoinBudget {
    pub fn new(word_size: usize, depth: usize) -> JoinBudget {
        JoinBudget {
            word_size,
            depth,
            slack: 2,
            width: None,
        }
    }
}

/// Canonical layered terms from `m` by size, widths capped.
pub fn enumerate_layered(p: &Presentation, m: usize, max_size: usize, width: usize) -> Vec<Layered> {
    let mut canon = Canon::new();
    let mut all: Vec<Layered> = vec![Layered::identity(m)];
    let mut seen: HashSet<Layered> = all.iter().cloned().collect();
    let mut frontier = all.clone();
    let mut cache: HashMap<usize, Vec<crate::free_cat::Layer>> = HashMap::new();
    for _ in 0..max_size {
        let mut next = Vec::new();
        for t in &frontier {
            let layers = cache.entry(t.cod()).or_insert_with(|| layers_from(p, t.cod(), width));
            for l in layers.iter() {
                let u = canon.canonical(&t.push(*l).expect("width agrees"));
                if seen.insert(u.clone()) {
                    next.push(u);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Words from `m` of length at most `max_len`, objects capped.
pub fn enumerate_words(p: &Presentation, m: usize, max_len: usize, max_object: usize) -> Vec<Word> {
    let sig = p.signature();
    let mut all = vec![Word::empty(sig, m)];
    let mut frontier = all.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in p.alphabet.edges_from(w.cod()) {
                if g.arity(sig).1 > max_object {
                    continue;
                }
                let mut letters = w.letters().to_vec();
                letters.push(g);
                next.push(Word::new(sig, m, letters).expect("edge starts at the codomain"));
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Outcome of searching one value class.
enum ClassResult<T> {
    Joined,
    Missing(T, T),
    Unsound(T, T),
}

/// Breadth-first search from `root`, stopping when every member is found.
fn search_class<T, M, N, V>(
    root: &T,
    members: &HashSet<T>,
    depth: usize,
    value: &M,
    mut neighbours: N,
    eval: V,
    nodes: &mut usize,
) -> ClassResult<T>
where
    T: Clone + Eq + Hash + Ord,
    M: PartialEq,
    N: FnMut(&T) -> Vec<T>,
    V: Fn(&T) -> Option<M>,
{
    let mut dist: HashMap<T, usize> = HashMap::from([(root.clone(), 0)]);
    let mut queue = VecDeque::from([root.clone()]);
    let mut found = 1;
    while let Some(t) = queue.pop_front() {
        if found == members.len() {
            break;
        }
        let d = dist[&t];
        if d == depth {
            continue;
        }
        for u in neighbours(&t) {
            if dist.contains_key(&u) {
                continue;
            }
            *nodes += 1;
            if eval(&u).as_ref() != Some(value) {
                return ClassResult::Unsound(t.clone(), u);
            }
            if members.contains(&u) {
                found += 1;
            }
            dist.insert(u.clone(), d + 1);
            queue.push_back(u);
        }
    }
    if found == members.len() {
        return ClassResult::Joined;
    }
    let mut missing: Vec<&T> = members.iter().filter(|x| !dist.contains_key(*x)).collect();
    missing.sort();
    ClassResult::Missing(root.clone(), missing[0].clone())
}

fn group<T: Clone, M: Eq + Hash>(items: impl Iterator<Item = (T, M)>) -> Vec<(M, Vec<T>)> {
    let mut by: HashMap<M, Vec<T>> = HashMap::new();
    for (t, v) in items {
        by.entry(v).or_default().push(t);
    }
    by.into_iter().filter(|(_, v)| v.len() > 1).collect()
}

/// Search every value class, with the size cap raised by the slack for
/// members the first pass missed.
fn join_groups<T, M, N, V, D>(
    groups: &[(M, Vec<T>)],
    b: JoinBudget,
    mut neighbours: N,
    eval: V,
    term: D,
    target: crate::presentations::Target,
    report: &mut Report,
) -> (usize, usize)
where
    T: Clone + Eq + Hash + Ord,
    M: PartialEq,
    N: FnMut(&T, usize) -> Vec<T>,
    V: Fn(&T) -> Option<M>,
    D: Fn(&T) -> crate::free_cat::Term,
{
    let mut nodes = 0usize;
    let mut joined = 0usize;
    for (value, members) in groups {
        let set: HashSet<T> = members.iter().cloned().collect();
        let root = members.iter().min().expect("nonempty group").clone();
        let mut outcome = ClassResult::Joined;
        for cap in [b.word_size, b.word_size + b.slack] {
            outcome = search_class(&root, &set, b.depth, value, |t| neighbours(t, cap), &eval, &mut nodes);
            if !matches!(outcome, ClassResult::Missing(..)) {
                break;
            }
        }
        match outcome {
            ClassResult::Joined => joined += 1,
            ClassResult::Missing(a, c) => {
                report.budget(format!("not joined within depth {}: {} ~ {}", b.depth, term(&a), term(&c)));
            }
            ClassResult::Unsound(a, c) => report.fail(Counterexample::Unequal {
                target,
                linear: false,
                lhs: Weighted::plain(term(&a)),
                rhs: Weighted::plain(term(&c)),
                detail: "one rewrite apart".into(),
            }),
        }
    }
    (joined, nodes)
}

fn tensor_search<I: Finite>(interp: &I, p: &Presentation, m: usize, n: usize, b: JoinBudget, report: &mut Report) {
    let width = b.width.unwrap_or(m.max(n) + 2);
    let rels: Vec<Relation> = match p.instances(0) {
        Ok(inst) => inst
            .iter()
            .map(|r| Relation {
                lhs: r.lhs.term.clone(),
                rhs: r.rhs.term.clone(),
            })
            .collect(),
        Err(e) => {
            report.status = super::Status::Fail;
            report.note = Some(e.to_string());
            return;
        }
    };
    let rules = LayeredRule::both_ways(&rels);
    let terms: Vec<Layered> = enumerate_layered(p, m, b.word_size, width)
        .into_iter()
        .filter(|t| t.cod() == n)
        .collect();
    report.items = terms.len();
    let valued: Vec<(Layered, I::Mor)> = terms
        .iter()
        .filter_map(|t| evaluate_layered(t, interp).ok().map(|v| (t.clone(), v)))
        .collect();
    let mut canon = Canon::new();
    let packed = PackedRule::all(&rules)
        .filter(|_| b.word_size + b.slack <= 8)
        .and_then(|pr| {
            let v: Option<Vec<(Packed, I::Mor)>> = valued
                .iter()
                .map(|(t, v)| Some((canon.canonical_packed(t.pack()?)?, v.clone())))
                .collect();
            Some((pr, v?))
        });
    let (joined, nodes) = match packed {
        Some((prules, pvalued)) => {
            let mut groups = group(pvalued.into_iter());
            groups.sort_by(|a, b| a.1.iter().min().cmp(&b.1.iter().min()));
            join_groups(
                &groups,
                b,
                |t, cap| canon.neighbours_packed(*t, &prules, cap, width),
                |t| evaluate_layered(&Layered::unpack(*t), interp).ok(),
                |t| Layered::unpack(*t).to_term(),
                p.target,
                report,
            )
        }
        None => {
            let mut groups = group(valued.into_iter());
            groups.sort_by(|a, b| a.1.iter().min().cmp(&b.1.iter().min()));
            join_groups(
                &groups,
                b,
                |t, cap| canon.neighbours(t, &rules, cap, width),
                |t| evaluate_layered(t, interp).ok(),
                |t| t.to_term(),
                p.target,
                report,
            )
        }
    };
    if report.note.is_none() {
        report.note = Some(format!("{} terms, {} classes joined, {} nodes visited", terms.len(), joined, nodes));
    }
}

/// Bounded joinability for a tensor presentation on `hom(m, n)`.
pub fn check_joinability(p: &Presentation, m: usize, n: usize, b: JoinBudget) -> Report {
    let start = Instant::now();
    let mut r = Report::new(
        "joinability",
        format!("{} m={m} n={n} size={} depth={}", p.id, b.word_size, b.depth),
    );
    if p.level != Level::Tensor || p.linear {
        r.status = super::Status::Fail;
        r.note = Some("needs a tensor presentation with finite semantics".into());
        return r;
    }
    with_finite!(p.target, |i| tensor_search(&i, p, m, n, b, &mut r));
    r.timed(start)
}

fn word_search<I: Interpretation>(interp: &I, p: &Presentation, m: usize, n: usize, b: JoinBudget, report: &mut Report) {
    let max_object = b.width.unwrap_or(m.max(n) + 2);
    let rels: Vec<WordRelation> = match p.instances(max_object) {
        Ok(inst) => inst
            .iter()
            .filter_map(|r| Some(WordRelation {
                lhs: r.lhs.word.clone()?,
                rhs: r.rhs.word.clone()?,
            }))
            .collect(),
        Err(e) => {
            report.status = super::Status::Fail;
            report.note = Some(e.to_string());
            return;
        }
    };
    let words: Vec<Word> = enumerate_words(p, m, b.word_size, max_object)
        .into_iter()
        .filter(|w| w.cod() == n)
        .collect();
    report.items = words.len();
    let valued = words
        .iter()
        .filter_map(|w| evaluate_word(w, interp).ok().map(|v| (w.clone(), v)));
    let mut groups = group(valued);
    groups.sort_by(|a, b| a.1.iter().min().cmp(&b.1.iter().min()));
    let cap_words = |w: &Word, cap: usize| -> Vec<Word> {
        word_neighbours(w, &rels)
            .into_iter()
            .filter(|u| u.len() <= cap && (0..=u.len()).all(|k| u.object_at(k) <= max_object))
            .collect()
    };
    let (_, nodes) = join_groups(
        &groups,
        b,
        cap_words,
        |w| evaluate_word(w, interp).ok(),
        |w| w.to_term(),
        p.target,
        report,
    );
    if report.note.is_none() {
        report.note = Some(format!("{} words, {} classes, {} nodes visited", words.len(), groups.len(), nodes));
    }
}

/// Bounded joinability for a monoid or category presentation on `hom(m, n)`.
pub fn check_word_joinability(p: &Presentation, m: usize, n: usize, b: JoinBudget) -> Report {
    let start = Instant::now();
    let mut r = Report::new(
        "joinability",
        format!("{} m={m} n={n} size={} depth={}", p.id, b.word_size, b.depth),
    );
    if p.level == Level::Tensor || p.linear {
        r.status = super::Status::Fail;
        r.note = Some("needs a word-level presentation with finite semantics".into());
        return r;
    }
    with_finite!(p.target, |i| word_search(&i, p, m, n, b, &mut r));
    r.timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Status;

    #[test]
    fn temperley_lieb_identity_class() {
        let p = Presentation::by_id("TL-tensor").unwrap();
        let r = check_joinability(&p, 1, 1, JoinBudget::new(4, 10));
        assert!(r.passed(), "{}", r.line());
    }

    #[test]
    fn zero_depth_reports_budget() {
        let p = Presentation::by_id("TL-tensor").unwrap();
        let r = check_joinability(&p, 0, 0, JoinBudget::new(2, 0));
        assert_eq!(r.status, Status::Budget, "{}", r.line());
    }

    #[test]
    fn partition_category_closed_loops() {
        let p = Presentation::by_id("P-category").unwrap();
        let r = check_word_joinability(&p, 0, 0, JoinBudget::new(4, 10));
        assert!(r.passed(), "{}", r.line());
    }
}
