//! Partition diagrams: set partitions of `[m] ∪ [n]'`.
//!
//! Vertices are signed labels: `+i` is upper vertex `i`, `-j` is lower vertex `j'`.
//! Internally each vertex has a key (`+i -> i-1`, `-j -> m+j-1`) and a diagram is
//! stored as the block id of every key, numbered in order of first appearance.
//! That is the canonical block list, flattened.

use crate::category::{check_shape, Involutive, Morphism, ShapeMismatch};
use crate::gen::Gen;
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("label {0} is out of range")]
    OutOfRange(i64),
    #[error("label {0} appears more than once")]
    DuplicateLabel(i64),
    #[error("label {0} is not covered by any block")]
    IncompleteCover(i64),
    #[error("empty block")]
    EmptyBlock,
    #[error(transparent)]
    Shape(#[from] ShapeMismatch),
    #[error("{0} has no image in {1:?}")]
    NoDiagramImage(Gen, DiagramKind),
    #[error("bad generator {0}")]
    BadIndex(Gen),
    #[error("{kind:?}[{m},{n}] has about {size} elements, over the budget of {budget}")]
    BudgetExceeded {
        kind: DiagramKind,
        m: usize,
        n: usize,
        size: u128,
        budget: u128,
    },
    #[error("cannot read diagram: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagramKind {
    P,
    PlanarP,
    B,
    TL,
}

impl DiagramKind {
    /// Generators of `B` and `TL` come in pairs of points.
    pub fn step(self) -> usize {
        match self {
            DiagramKind::P | DiagramKind::PlanarP => 1,
            DiagramKind::B | DiagramKind::TL => 2,
        }
    }

    pub fn contains(self, a: &Partition) -> bool {
        let c = a.classify();
        match self {
            DiagramKind::P => true,
            DiagramKind::PlanarP => c.planar,
            DiagramKind::B => c.brauer,
            DiagramKind::TL => c.tl,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub planar: bool,
    pub brauer: bool,
    pub tl: bool,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    m: usize,
    n: usize,
    labels: Vec<u16>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu((0..n).collect())
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// Renumber block ids in order of first appearance.
fn renumber<T: Copy + Eq + std::hash::Hash>(raw: &[T]) -> Vec<u16> {
    let mut seen: Vec<T> = Vec::new();
    raw.iter()
        .map(|x| match seen.iter().position(|y| y == x) {
            Some(k) => k as u16,
            None => {
                seen.push(*x);
                (seen.len() - 1) as u16
            }
        })
        .collect()
}

impl Partition {
    pub fn make(m: usize, n: usize, blocks: &[Vec<i64>]) -> Result<Partition, DiagramError> {
        let mut raw = vec![usize::MAX; m + n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(DiagramError::EmptyBlock);
            }
            for &label in block {
                let key = Self::key_of(m, n, label).ok_or(DiagramError::OutOfRange(label))?;
                if raw[key] != usize::MAX {
                    return Err(DiagramError::DuplicateLabel(label));
                }
                raw[key] = b;
            }
        }
        if let Some(k) = raw.iter().position(|&b| b == usize::MAX) {
            return Err(DiagramError::IncompleteCover(Self::label_of(m, k)));
        }
        Ok(Partition {
            m,
            n,
            labels: renumber(&raw),
        })
    }

    fn key_of(m: usize, n: usize, label: i64) -> Option<usize> {
        if label > 0 && (label as usize) <= m {
            Some(label as usize - 1)
        } else if label < 0 && ((-label) as usize) <= n {
            Some(m + (-label) as usize - 1)
        } else {
            None
        }
    }

    fn label_of(m: usize, key: usize) -> i64 {
        if key < m {
            key as i64 + 1
        } else {
            -((key - m) as i64 + 1)
        }
    }

    pub(crate) fn from_raw(m: usize, n: usize, raw: &[u16]) -> Partition {
        Partition {
            m,
            n,
            labels: renumber(raw),
        }
    }

    pub fn identity(n: usize) -> Partition {
        let labels = (0..n as u16).chain(0..n as u16).collect();
        Partition { m: n, n, labels }
    }

    pub fn upper(&self) -> usize {
        self.m
    }

    pub fn lower(&self) -> usize {
        self.n
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().map(|&b| b as usize + 1).max().unwrap_or(0)
    }

    /// Blocks in canonical order, labels signed.
    pub fn blocks(&self) -> Vec<Vec<i64>> {
        self.key_blocks()
            .into_iter()
            .map(|b| b.into_iter().map(|k| Self::label_of(self.m, k)).collect())
            .collect()
    }

    fn key_blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (k, &b) in self.labels.iter().enumerate() {
            out[b as usize].push(k);
        }
        out
    }

    /// `self` followed by `next`, plus the number of components lying
    /// entirely in the middle row.
    pub fn compose(&self, next: &Partition) -> Result<(Partition, usize), ShapeMismatch> {
        check_shape(self.n, next.m)?;
        let (m, n, q) = (self.m, self.n, next.n);
        let mut dsu = Dsu::new(m + n + q);
        let mut link = |labels: &[u16], offset: usize| {
            let mut first = vec![usize::MAX; labels.len()];
            for (k, &b) in labels.iter().enumerate() {
                let node = offset + k;
                if first[b as usize] == usize::MAX {
                    first[b as usize] = node;
                } else {
                    dsu.union(first[b as usize], node);
                }
            }
        };
        link(&self.labels, 0);
        link(&next.labels, m);
        let outer: Vec<usize> = (0..m).chain(m + n..m + n + q).collect();
        let roots: Vec<usize> = outer.iter().map(|&v| dsu.find(v)).collect();
        let mut middle: Vec<usize> = (m..m + n).map(|v| dsu.find(v)).collect();
        middle.sort_unstable();
        middle.dedup();
        let floating = middle.iter().filter(|r| !roots.contains(r)).count();
        let labels = renumber(&roots);
        Ok((Partition { m, n: q, labels }, floating))
    }

    /// Place `other` to the right of `self`.
    pub fn tensor(&self, other: &Partition) -> Partition {
        let shift = self.block_count() as u16;
        let (a, b) = (&self.labels, &other.labels);
        let raw: Vec<u16> = a[..self.m]
            .iter()
            .copied()
            .chain(b[..other.m].iter().map(|&x| x + shift))
            .chain(a[self.m..].iter().copied())
            .chain(b[other.m..].iter().map(|&x| x + shift))
            .collect();
        Partition::from_raw(self.m + other.m, self.n + other.n, &raw)
    }

    /// Reflect in a horizontal axis.
    pub fn involute(&self) -> Partition {
        let raw: Vec<u16> = self.labels[self.m..]
            .iter()
            .chain(self.labels[..self.m].iter())
            .copied()
            .collect();
        Partition::from_raw(self.n, self.m, &raw)
    }

    /// Vertices in the boundary cycle `+1..+m, -n..-1`, as block ids.
    fn boundary_cycle(&self) -> Vec<u16> {
        let mut seq: Vec<u16> = self.labels[..self.m].to_vec();
        seq.extend(self.labels[self.m..].iter().rev());
        seq
    }

    fn noncrossing(&self) -> bool {
        let seq = self.boundary_cycle();
        let mut left = vec![0usize; self.block_count()];
        for &b in &seq {
            left[b as usize] += 1;
        }
        let mut started = vec![false; left.len()];
        let mut stack: Vec<u16> = Vec::new();
        for &b in &seq {
            if !started[b as usize] {
                started[b as usize] = true;
                stack.push(b);
            } else if stack.last() != Some(&b) {
                return false;
            }
            left[b as usize] -= 1;
            if left[b as usize] == 0 {
                stack.pop();
            }
        }
        true
    }

    pub fn classify(&self) -> Flags {
        let mut sizes = vec![0usize; self.block_count()];
        for &b in &self.labels {
            sizes[b as usize] += 1;
        }
        let brauer = sizes.iter().all(|&s| s == 2);
        let planar = self.noncrossing();
        Flags {
            planar,
            brauer,
            tl: planar && brauer,
        }
    }

    pub fn parse(text: &str) -> Result<Partition, DiagramError> {
        let err = |msg: &str| DiagramError::Parse(format!("{msg} in `{text}`"));
        let t = text.trim();
        let rest = t.strip_prefix("P[").ok_or_else(|| err("expected `P[`"))?;
        let close = rest.find(']').ok_or_else(|| err("missing `]`"))?;
        let dims: Vec<usize> = rest[..close]
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| err("bad dimensions"))?;
        if dims.len() != 2 {
            return Err(err("expected two dimensions"));
        }
        let body = rest[close + 1..].trim();
        let body = body
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .ok_or_else(|| err("expected `{ ... }`"))?;
        let mut blocks = Vec::new();
        let mut cur = body.trim();
        while !cur.is_empty() {
            let inner = cur.strip_prefix('{').ok_or_else(|| err("expected `{`"))?;
            let end = inner.find('}').ok_or_else(|| err("unclosed block"))?;
            let block: Vec<i64> = inner[..end]
                .split(',')
                .map(|s| s.trim().parse::<i64>())
                .collect::<Result<_, _>>()
                .map_err(|_| err("bad label"))?;
            blocks.push(block);
            cur = inner[end + 1..].trim_start();
        }
        Partition::make(dims[0], dims[1], &blocks)
    }

    pub fn generator(g: &Gen, kind: DiagramKind) -> Result<Partition, DiagramError> {
        g.check().map_err(|_| DiagramError::BadIndex(*g))?;
        let brauer_style = kind.step() == 2;
        let with = |n: usize, changed: &[usize], extra: Vec<Vec<i64>>| -> Partition {
            let mut blocks: Vec<Vec<i64>> = (1..=n as i64)
                .filter(|i| !changed.contains(&(*i as usize)))
                .map(|i| vec![i, -i])
                .collect();
            blocks.extend(extra);
            Partition::make(n, n, &blocks).expect("generator blocks")
        };
        let none = || DiagramError::NoDiagramImage(*g, kind);
        let p = match *g {
            Gen::Sigma(i, n) => {
                let (a, b) = (i as i64, i as i64 + 1);
                with(n, &[i, i + 1], vec![vec![a, -b], vec![b, -a]])
            }
            Gen::Eps(i, n) if !brauer_style => {
                let a = i as i64;
                with(n, &[i], vec![vec![a], vec![-a]])
            }
            Gen::Tau(i, n) => {
                let (a, b) = (i as i64, i as i64 + 1);
                if brauer_style {
                    with(n, &[i, i + 1], vec![vec![a, b], vec![-a, -b]])
                } else {
                    with(n, &[i, i + 1], vec![vec![a, b, -a, -b]])
                }
            }
            Gen::Lambda(n) | Gen::Rho(n) => {
                let d = kind.step();
                let mut blocks: Vec<Vec<i64>> = (1..=n as i64).map(|i| vec![i, -i]).collect();
                let sign = if matches!(g, Gen::Lambda(_)) { -1 } else { 1 };
                let fresh: Vec<i64> = (n + 1..=n + d).map(|v| sign * v as i64).collect();
                if brauer_style {
                    blocks.push(fresh);
                } else {
                    blocks.extend(fresh.into_iter().map(|v| vec![v]));
                }
                let (dom, cod) = if sign < 0 { (n, n + d) } else { (n + d, n) };
                Partition::make(dom, cod, &blocks).expect("unit blocks")
            }
            Gen::X => Partition::make(2, 2, &[vec![1, -2], vec![2, -1]]).unwrap(),
            Gen::D if !brauer_style => Partition::make(2, 2, &[vec![1, 2, -1, -2]]).unwrap(),
            Gen::U if brauer_style => Partition::make(2, 0, &[vec![1, 2]]).unwrap(),
            Gen::U => Partition::make(1, 0, &[vec![1]]).unwrap(),
            Gen::Ubar if brauer_style => Partition::make(0, 2, &[vec![-1, -2]]).unwrap(),
            Gen::Ubar => Partition::make(0, 1, &[vec![-1]]).unwrap(),
            _ => return Err(none()),
        };
        if !kind.contains(&p) {
            return Err(none());
        }
        Ok(p)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.m, self.n)
            .cmp(&(other.m, other.n))
            .then_with(|| self.key_blocks().cmp(&other.key_blocks()))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P[{},{}]{{ ", self.m, self.n)?;
        for block in self.blocks() {
            let inner: Vec<String> = block.iter().map(|l| l.to_string()).collect();
            write!(f, "{{{}}} ", inner.join(","))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Morphism for Partition {
    fn dom(&self) -> usize {
        self.m
    }
    fn cod(&self) -> usize {
        self.n
    }
    fn identity(n: usize) -> Self {
        Partition::identity(n)
    }
    fn beside(&self, other: &Self) -> Self {
        self.tensor(other)
    }
    fn then_counted(&self, next: &Self) -> Result<(Self, usize), ShapeMismatch> {
        self.compose(next)
    }
}

impl Involutive for Partition {
    fn star(&self) -> Self {
        self.involute()
    }
}

fn bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last.saturating_add(x));
        }
        row = next;
    }
    row[0]
}

pub const DEFAULT_BUDGET: u128 = 5_000_000;

/// Every diagram of the kind in `hom(m, n)`, each once, in canonical order.
pub fn enumerate_homset(kind: DiagramKind, m: usize, n: usize) -> Result<Vec<Partition>, DiagramError> {
    enumerate_with_budget(kind, m, n, DEFAULT_BUDGET)
}

pub fn enumerate_with_budget(
    kind: DiagramKind,
    m: usize,
    n: usize,
    budget: u128,
) -> Result<Vec<Partition>, DiagramError> {
    let total = m + n;
    let size = match kind {
        DiagramKind::P | DiagramKind::PlanarP => bell(total),
        DiagramKind::B if total % 2 == 1 => 0,
        DiagramKind::B => (1..total as u128).step_by(2).product(),
        DiagramKind::TL => catalan_bound(total),
    };
    if size > budget {
        return Err(DiagramError::BudgetExceeded {
            kind,
            m,
            n,
            size,
            budget,
        });
    }
    let mut out = match kind {
        DiagramKind::P => set_partitions(m, n),
        DiagramKind::PlanarP => set_partitions(m, n)
            .into_iter()
            .filter(|p| p.noncrossing())
            .collect(),
        DiagramKind::B => matchings(m, n),
        DiagramKind::TL => noncrossing_matchings(m, n),
    };
    out.sort();
    Ok(out)
}

fn catalan_bound(total: usize) -> u128 {
    if total % 2 == 1 {
        return 0;
    }
    let k = (total / 2) as u128;
    let mut c: u128 = 1;
    for i in 0..k {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

fn set_partitions(m: usize, n: usize) -> Vec<Partition> {
    let total = m + n;
    let mut out = Vec::new();
    let mut rgs = vec![0u16; total];
    fn go(k: usize, max: u16, rgs: &mut Vec<u16>, m: usize, n: usize, out: &mut Vec<Partition>) {
        if k == rgs.len() {
            out.push(Partition {
                m,
                n,
                labels: rgs.clone(),
            });
            return;
        }
        let top = if k == 0 { 0 } else { max + 1 };
        for b in 0..=top {
            rgs[k] = b;
            go(k + 1, max.max(b), rgs, m, n, out);
        }
    }
    if total == 0 {
        out.push(Partition {
            m,
            n,
            labels: vec![],
        });
    } else {
        go(0, 0, &mut rgs, m, n, &mut out);
    }
    out
}

fn matchings(m: usize, n: usize) -> Vec<Partition> {
    let total = m + n;
    let mut out = Vec::new();
    if total % 2 == 1 {
        return out;
    }
    fn go(raw: &mut Vec<usize>, next_id: usize, m: usize, n: usize, out: &mut Vec<Partition>) {
        let Some(a) = raw.iter().position(|&b| b == usize::MAX) else {
            let r: Vec<u16> = raw.iter().map(|&b| b as u16).collect();
            out.push(Partition::from_raw(m, n, &r));
            return;
        };
        raw[a] = next_id;
        for b in a + 1..raw.len() {
            if raw[b] == usize::MAX {
                raw[b] = next_id;
                go(raw, next_id + 1, m, n, out);
                raw[b] = usize::MAX;
            }
        }
        raw[a] = usize::MAX;
    }
    let mut raw = vec![usize::MAX; total];
    go(&mut raw, 0, m, n, &mut out);
    out
}

fn noncrossing_matchings(m: usize, n: usize) -> Vec<Partition> {
    let total = m + n;
    if total % 2 == 1 {
        return Vec::new();
    }
    // pairings of cycle positions 0..total with no interleaving
    fn pairings(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        let mut partner = lo + 1;
        while partner < hi {
            for inside in pairings(lo + 1, partner) {
                for outside in pairings(partner + 1, hi) {
                    let mut p = vec![(lo, partner)];
                    p.extend(inside.iter().copied());
                    p.extend(outside.iter().copied());
                    out.push(p);
                }
            }
            partner += 2;
        }
        out
    }
    let key = |pos: usize| if pos < m { pos } else { 2 * m + n - pos - 1 };
    pairings(0, total)
        .into_iter()
        .map(|pairs| {
            let mut raw = vec![0u16; total];
            for (b, (x, y)) in pairs.into_iter().enumerate() {
                raw[key(x)] = b as u16;
                raw[key(y)] = b as u16;
            }
            Partition::from_raw(m, n, &raw)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: usize, n: usize, blocks: &[&[i64]]) -> Partition {
        let b: Vec<Vec<i64>> = blocks.iter().map(|b| b.to_vec()).collect();
        Partition::make(m, n, &b).unwrap()
    }

    #[test]
    fn canonical_text() {
        assert_eq!(Partition::identity(2).to_string(), "P[2,2]{ {1,-1} {2,-2} }");
        assert_eq!(p(0, 0, &[]).to_string(), "P[0,0]{ }");
        let a = p(2, 2, &[&[-1], &[2, -2], &[1]]);
        assert_eq!(a.to_string(), "P[2,2]{ {1} {2,-2} {-1} }");
        assert_eq!(Partition::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn make_errors_name_label() {
        assert_eq!(
            Partition::make(1, 1, &[vec![1, 2]]),
            Err(DiagramError::OutOfRange(2))
        );
        assert_eq!(
            Partition::make(1, 1, &[vec![1, -1], vec![1]]),
            Err(DiagramError::DuplicateLabel(1))
        );
        assert_eq!(
            Partition::make(1, 1, &[vec![1]]),
            Err(DiagramError::IncompleteCover(-1))
        );
    }

    #[test]
    fn eps_squared_floats_once() {
        let e = p(1, 1, &[&[1], &[-1]]);
        let (r, k) = e.compose(&e).unwrap();
        assert_eq!((r, k), (e, 1));
    }

    #[test]
    fn unit_then_counit() {
        for kind in [DiagramKind::P, DiagramKind::B] {
            for n in 0..4 {
                let l = Partition::generator(&Gen::Lambda(n), kind).unwrap();
                let r = Partition::generator(&Gen::Rho(n), kind).unwrap();
                assert_eq!(l.compose(&r).unwrap(), (Partition::identity(n), 1));
                assert_eq!(l.involute(), r);
            }
        }
    }

    #[test]
    fn tensor_shifts() {
        let e = p(1, 1, &[&[1], &[-1]]);
        assert_eq!(e.tensor(&e), p(2, 2, &[&[1], &[2], &[-1], &[-2]]));
        assert_eq!(
            Partition::identity(2).tensor(&Partition::identity(3)),
            Partition::identity(5)
        );
    }

    #[test]
    fn crossing_is_not_planar() {
        let s = Partition::generator(&Gen::Sigma(1, 2), DiagramKind::P).unwrap();
        let f = s.classify();
        assert!(f.brauer && !f.planar);
        assert!(Partition::generator(&Gen::Sigma(1, 2), DiagramKind::TL).is_err());
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_homset(DiagramKind::P, 1, 1).unwrap().len(), 2);
        assert_eq!(enumerate_homset(DiagramKind::TL, 0, 6).unwrap().len(), 5);
        assert!(enumerate_homset(DiagramKind::B, 1, 2).unwrap().is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            enumerate_with_budget(DiagramKind::P, 5, 5, 1000),
            Err(DiagramError::BudgetExceeded { .. })
        ));
    }
}
