//! Single applications of relations, for words and for tensor terms.
//!
//! A tensor relation side occurs in a term when some interchange-equivalent
//! layered form of the term contains the side's layers consecutively, all
//! framed by the same `ι_p ⊕ - ⊕ ι_q`. Identity sides occur at every cut.

use super::layered::{code_body, code_shape, code_shifted, Layered, Packed};
use rustc_hash::{FxHashMap, FxHashSet};
use super::term::{Term, Word};
use super::TermError;
use std::collections::{HashMap, HashSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

/// Where a side is matched: the layer (or cut) index and the left frame width.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Position {
    pub layer: usize,
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Relation {
    pub fn new(lhs: Term, rhs: Term) -> Result<Relation, TermError> {
        if (lhs.dom(), lhs.cod()) != (rhs.dom(), rhs.cod()) {
            return Err(TermError::Type {
                cod: lhs.cod(),
                dom: rhs.cod(),
            });
        }
        Ok(Relation { lhs, rhs })
    }

    pub fn sides(&self, dir: Direction) -> (&Term, &Term) {
        match dir {
            Direction::Forward => (&self.lhs, &self.rhs),
            Direction::Backward => (&self.rhs, &self.lhs),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordRelation {
    pub lhs: Word,
    pub rhs: Word,
}

impl WordRelation {
    pub fn new(lhs: Word, rhs: Word) -> Result<WordRelation, TermError> {
        if (lhs.dom(), lhs.cod()) != (rhs.dom(), rhs.cod()) {
            return Err(TermError::Type {
                cod: lhs.cod(),
                dom: rhs.cod(),
            });
        }
        Ok(WordRelation { lhs, rhs })
    }

    pub fn sides(&self, dir: Direction) -> (&Word, &Word) {
        match dir {
            Direction::Forward => (&self.lhs, &self.rhs),
            Direction::Backward => (&self.rhs, &self.lhs),
        }
    }
}

fn rewrite_at(t: &Layered, from: &Layered, to: &Layered, pos: Position) -> Option<Layered> {
    if from.size() == 0 {
        if pos.layer > t.size() || pos.offset + from.dom() > t.width_at(pos.layer) {
            return None;
        }
        return Some(t.splice(pos.layer, 0, to, pos.offset));
    }
    match t.framed_match(pos.layer, from) {
        Some(p) if p == pos.offset => Some(t.splice(pos.layer, from.size(), to, p)),
        _ => None,
    }
}

/// Apply one side of `rel` at `pos` of the layered form of `t`.
pub fn apply_relation(
    t: &Term,
    rel: &Relation,
    pos: Position,
    dir: Direction,
) -> Result<Term, TermError> {
    let (from, to) = rel.sides(dir);
    let lt = Layered::from_term(t);
    rewrite_at(&lt, &Layered::from_term(from), &Layered::from_term(to), pos)
        .map(|r| r.to_term())
        .ok_or(TermError::NoMatch)
}

/// Apply one side of `rel` to the letters starting at `at`.
pub fn apply_word_relation(
    w: &Word,
    rel: &WordRelation,
    at: usize,
    dir: Direction,
) -> Result<Word, TermError> {
    let (from, to) = rel.sides(dir);
    if at > w.len() || w.object_at(at) != from.dom() {
        return Err(TermError::NoMatch);
    }
    let len = from.len();
    if at + len > w.len() || w.letters()[at..at + len] != *from.letters() {
        return Err(TermError::NoMatch);
    }
    let mut letters = w.letters()[..at].to_vec();
    letters.extend_from_slice(to.letters());
    letters.extend_from_slice(&w.letters()[at + len..]);
    Word::new(w.sig(), w.dom(), letters)
}

/// All words one relation application away from `w`, in either direction.
pub fn word_neighbours(w: &Word, rels: &[WordRelation]) -> Vec<Word> {
    let mut out = HashSet::new();
    for rel in rels {
        for dir in [Direction::Forward, Direction::Backward] {
            let (from, _) = rel.sides(dir);
            if from.len() > w.len() {
                continue;
            }
            for at in 0..=w.len() - from.len() {
                if let Ok(r) = apply_word_relation(w, rel, at, dir) {
                    out.insert(r);
                }
            }
        }
    }
    let mut v: Vec<Word> = out.into_iter().collect();
    v.sort();
    v
}

/// A relation with both sides in layered form, ready for repeated matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayeredRule {
    pub from: Layered,
    pub to: Layered,
}

impl LayeredRule {
    /// Both orientations of every relation.
    pub fn both_ways(rels: &[Relation]) -> Vec<LayeredRule> {
        let mut out = Vec::new();
        for r in rels {
            for dir in [Direction::Forward, Direction::Backward] {
                let (a, b) = r.sides(dir);
                out.push(LayeredRule {
                    from: Layered::from_term(a),
                    to: Layered::from_term(b),
                });
            }
        }
        out
    }
}

/// A rule over packed layer codes.
#[derive(Clone, Debug)]
pub struct PackedRule {
    from: Vec<u16>,
    from_dom: usize,
    to: Vec<u16>,
}

impl PackedRule {
    /// `None` if a side does not pack.
    pub fn new(rule: &LayeredRule) -> Option<PackedRule> {
        Some(PackedRule {
            from: rule.from.pack()?.codes().collect(),
            from_dom: rule.from.dom(),
            to: rule.to.pack()?.codes().collect(),
        })
    }

    pub fn all(rules: &[LayeredRule]) -> Option<Vec<PackedRule>> {
        rules.iter().map(PackedRule::new).collect()
    }
}

fn widths(dom: usize, codes: &[u16]) -> Vec<usize> {
    let mut w = vec![dom];
    for &c in codes {
        let (_, a, b) = code_shape(c);
        w.push(w[w.len() - 1] - a + b);
    }
    w
}

/// Replace `len` codes at `k` by `to` shifted by `p`; `None` past the caps.
fn splice_codes(dom: usize, codes: &[u16], k: usize, len: usize, to: &[u16], p: usize, max_width: usize) -> Option<Packed> {
    let mut out = Vec::with_capacity(codes.len() - len + to.len());
    out.extend_from_slice(&codes[..k]);
    for &c in to {
        out.push(code_shifted(c, p)?);
    }
    out.extend_from_slice(&codes[k + len..]);
    if widths(dom, &out).into_iter().any(|w| w > max_width) {
        return None;
    }
    Packed::from_codes(dom, &out)
}

/// Canonical forms with their interchange classes, memoized.
#[derive(Default)]
pub struct Canon {
    packed: FxHashMap<Packed, Packed>,
    packed_classes: FxHashMap<Packed, Vec<Packed>>,
    canon_of: HashMap<Layered, Layered>,
    classes: HashMap<Layered, Vec<Layered>>,
}

impl Canon {
    pub fn new() -> Canon {
        Canon::default()
    }

    /// The packed canonical form, when the class packs.
    fn packed_canonical(&mut self, t: &Layered) -> Option<Packed> {
        self.canonical_packed(t.pack()?)
    }

    pub fn canonical(&mut self, t: &Layered) -> Layered {
        if let Some(c) = self.packed_canonical(t) {
            return Layered::unpack(c);
        }
        if let Some(c) = self.canon_of.get(t) {
            return c.clone();
        }
        let class = t.class();
        let c = class[0].clone();
        for m in &class {
            self.canon_of.insert(m.clone(), c.clone());
        }
        self.classes.insert(c.clone(), class);
        c
    }

    pub fn class(&mut self, t: &Layered) -> Vec<Layered> {
        if let Some(c) = self.packed_canonical(t) {
            return self.packed_classes[&c].iter().map(|p| Layered::unpack(*p)).collect();
        }
        let c = self.canonical(t);
        self.classes[&c].clone()
    }

    /// Packed canonical form of a packed term, if its class packs.
    pub fn canonical_packed(&mut self, p: Packed) -> Option<Packed> {
        if let Some(c) = self.packed.get(&p) {
            return Some(*c);
        }
        let class = p.class()?;
        let c = class[0];
        for m in &class {
            self.packed.insert(*m, c);
        }
        self.packed_classes.insert(c, class);
        Some(c)
    }

    /// [`Canon::neighbours`] on packed terms; results that do not pack are dropped,
    /// so callers keep `max_size` at eight or below.
    pub fn neighbours_packed(&mut self, t: Packed, rules: &[PackedRule], max_size: usize, max_width: usize) -> Vec<Packed> {
        let mut raw: FxHashSet<Packed> = FxHashSet::default();
        let Some(c) = self.canonical_packed(t) else {
            return Vec::new();
        };
        let class = self.packed_classes[&c].clone();
        let dom = t.dom();
        for rep in &class {
            let codes: Vec<u16> = rep.codes().collect();
            let w = widths(dom, &codes);
            for rule in rules {
                if codes.len() + rule.to.len() > max_size + rule.from.len() {
                    continue;
                }
                if rule.from.is_empty() {
                    for (k, &wk) in w.iter().enumerate() {
                        if wk < rule.from_dom {
                            continue;
                        }
                        for p in 0..=wk - rule.from_dom {
                            raw.extend(splice_codes(dom, &codes, k, 0, &rule.to, p, max_width));
                        }
                    }
                    continue;
                }
                let (f0_left, _, _) = code_shape(rule.from[0]);
                let len = rule.from.len();
                if len > codes.len() {
                    continue;
                }
                for k in 0..=codes.len() - len {
                    if code_body(codes[k]) != code_body(rule.from[0]) {
                        continue;
                    }
                    let (left, _, _) = code_shape(codes[k]);
                    let Some(p) = left.checked_sub(f0_left) else {
                        continue;
                    };
                    if w[k] < rule.from_dom + p {
                        continue;
                    }
                    let framed = (1..len).all(|j| code_shifted(rule.from[j], p) == Some(codes[k + j]));
                    if framed {
                        raw.extend(splice_codes(dom, &codes, k, len, &rule.to, p, max_width));
                    }
                }
            }
        }
        let mut out: Vec<Packed> = raw.into_iter().filter_map(|r| self.canonical_packed(r)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Canonical forms of every single rewrite of `t`, subject to the size and width caps.
    pub fn neighbours(
        &mut self,
        t: &Layered,
        rules: &[LayeredRule],
        max_size: usize,
        max_width: usize,
    ) -> Vec<Layered> {
        let mut raw: HashSet<Layered> = HashSet::new();
        let class = self.class(t);
        for rep in &class {
            for rule in rules {
                let grow = rule.to.size() as isize - rule.from.size() as isize;
                if rep.size() as isize + grow > max_size as isize {
                    continue;
                }
                if rule.from.size() == 0 {
                    for k in 0..=rep.size() {
                        let w = rep.width_at(k);
                        if w < rule.from.dom() {
                            continue;
                        }
                        for p in 0..=w - rule.from.dom() {
                            let r = rep.splice(k, 0, &rule.to, p);
                            if r.max_width() <= max_width {
                                raw.insert(r);
                            }
                        }
                    }
                } else {
                    for k in 0..rep.size() {
                        if let Some(p) = rep.framed_match(k, &rule.from) {
                            let r = rep.splice(k, rule.from.size(), &rule.to, p);
                            if r.max_width() <= max_width {
                                raw.insert(r);
                            }
                        }
                    }
                }
            }
        }
        let mut out: HashSet<Layered> = HashSet::new();
        for r in raw {
            out.insert(self.canonical(&r));
        }
        let mut v: Vec<Layered> = out.into_iter().collect();
        v.sort();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_cat::parse::parse_term;
    use crate::gen::{Gen, Signature};

    fn rel(a: &str, b: &str) -> Relation {
        Relation::new(parse_term(a).unwrap(), parse_term(b).unwrap()).unwrap()
    }

    #[test]
    fn square_of_crossing_inside_cube() {
        let s = Gen::Sigma(1, 2);
        let sig = Signature::UNIT;
        let w = Word::new(sig, 2, vec![s, s, s]).unwrap();
        let r = WordRelation::new(Word::new(sig, 2, vec![s, s]).unwrap(), Word::empty(sig, 2)).unwrap();
        let out = apply_word_relation(&w, &r, 0, Direction::Forward).unwrap();
        assert_eq!(out.letters(), &[s]);
        assert!(apply_word_relation(&w, &r, 2, Direction::Forward).is_err());
    }

    #[test]
    fn loop_removed_beside_crossing() {
        let t = parse_term("(Uu ; U) # X").unwrap();
        let r = rel("Uu ; U", "id[0]");
        let out = apply_relation(&t, &r, Position { layer: 0, offset: 0 }, Direction::Forward).unwrap();
        assert_eq!(out, parse_term("X").unwrap());
        assert_eq!(
            apply_relation(&t, &r, Position { layer: 1, offset: 0 }, Direction::Forward),
            Err(TermError::NoMatch)
        );
    }

    #[test]
    fn unit_pair_cancels_in_word() {
        let sig = Signature::UNIT;
        let (l, r) = (Gen::Lambda(1), Gen::Rho(1));
        let w = Word::new(sig, 1, vec![l, r, l]).unwrap();
        let rule = WordRelation::new(Word::new(sig, 1, vec![l, r]).unwrap(), Word::empty(sig, 1)).unwrap();
        let out = apply_word_relation(&w, &rule, 0, Direction::Forward).unwrap();
        assert_eq!(out.letters(), &[l]);
        // Backward: insert λρ at the end, where the object is 2, not 1.
        assert!(apply_word_relation(&w, &rule, 3, Direction::Backward).is_err());
        assert!(apply_word_relation(&w, &rule, 2, Direction::Backward).is_ok());
    }

    #[test]
    fn neighbours_see_through_interchange() {
        // X # X contains X ; X nowhere, but (X # id) ; ... after interchange still no.
        // (X # id[2]) ; (id[2] # X) ; (X # id[2]) has X;X on the left wires.
        let t = Layered::from_term(&parse_term("(X # id[2]) ; (id[2] # X) ; (X # id[2])").unwrap());
        let rules = LayeredRule::both_ways(&[rel("X ; X", "id[2]")]);
        let mut canon = Canon::new();
        let n = canon.neighbours(&t, &rules, 6, 4);
        let target = canon.canonical(&Layered::from_term(&parse_term("id[2] # X").unwrap()));
        assert!(n.contains(&target));
    }
}
