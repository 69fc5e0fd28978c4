//! Partial maps `[m] ⇀ [n]` and the subcategories PT, T, I, PO, O, OI.

use crate::category::{check_shape, Morphism, ShapeMismatch};
use crate::gen::Gen;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("{0} has no partial-map image")]
    NoImage(Gen),
    #[error("bad generator {0}")]
    BadIndex(Gen),
    #[error("point {0} out of range")]
    OutOfRange(usize),
    #[error("{kind:?}[{m},{n}] has about {size} elements, over the budget of {budget}")]
    BudgetExceeded {
        kind: MapKind,
        m: usize,
        n: usize,
        size: u128,
        budget: u128,
    },
    #[error("cannot read map: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    PT,
    T,
    I,
    PO,
    O,
    OI,
}

impl MapKind {
    pub fn contains(self, f: &PartialMap) -> bool {
        match self {
            MapKind::PT => true,
            MapKind::T => f.is_total(),
            MapKind::I => f.is_injective(),
            MapKind::PO => f.is_isotone(),
            MapKind::O => f.is_isotone() && f.is_total(),
            MapKind::OI => f.is_isotone() && f.is_injective(),
        }
    }
}

/// How `r[n]` acts: deleting the last point, or folding it onto point `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RhoStyle {
    Chop,
    Fold,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialMap {
    m: usize,
    n: usize,
    graph: Vec<Option<u16>>,
}

impl PartialMap {
    /// `images[x-1]` is the image of `x`, 1-based, or `None` when undefined.
    pub fn new(m: usize, n: usize, images: &[Option<usize>]) -> Result<PartialMap, MapError> {
        if images.len() != m {
            return Err(MapError::OutOfRange(images.len()));
        }
        let mut graph = Vec::with_capacity(m);
        for &y in images {
            match y {
                Some(v) if v == 0 || v > n => return Err(MapError::OutOfRange(v)),
                Some(v) => graph.push(Some((v - 1) as u16)),
                None => graph.push(None),
            }
        }
        Ok(PartialMap { m, n, graph })
    }

    pub fn identity(n: usize) -> PartialMap {
        PartialMap {
            m: n,
            n,
            graph: (0..n as u16).map(Some).collect(),
        }
    }

    pub fn empty(m: usize, n: usize) -> PartialMap {
        PartialMap {
            m,
            n,
            graph: vec![None; m],
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> Option<usize> {
        self.graph.get(x.wrapping_sub(1)).copied().flatten().map(|v| v as usize + 1)
    }

    pub fn images(&self) -> Vec<Option<usize>> {
        self.graph.iter().map(|y| y.map(|v| v as usize + 1)).collect()
    }

    pub fn compose(&self, next: &PartialMap) -> Result<PartialMap, ShapeMismatch> {
        check_shape(self.n, next.m)?;
        Ok(PartialMap {
            m: self.m,
            n: next.n,
            graph: self
                .graph
                .iter()
                .map(|y| y.and_then(|v| next.graph[v as usize]))
                .collect(),
        })
    }

    pub fn tensor(&self, other: &PartialMap) -> PartialMap {
        let shift = self.n as u16;
        PartialMap {
            m: self.m + other.m,
            n: self.n + other.n,
            graph: self
                .graph
                .iter()
                .copied()
                .chain(other.graph.iter().map(|y| y.map(|v| v + shift)))
                .collect(),
        }
    }

    pub fn is_total(&self) -> bool {
        self.graph.iter().all(Option::is_some)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.n];
        for v in self.graph.iter().flatten() {
            if std::mem::replace(&mut seen[*v as usize], true) {
                return false;
            }
        }
        true
    }

    pub fn is_isotone(&self) -> bool {
        let defined: Vec<u16> = self.graph.iter().flatten().copied().collect();
        defined.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn generator(g: &Gen, rho: RhoStyle) -> Result<PartialMap, MapError> {
        g.check().map_err(|_| MapError::BadIndex(*g))?;
        let ident = |n: usize| -> Vec<Option<usize>> { (1..=n).map(Some).collect() };
        let build = |m: usize, n: usize, images: Vec<Option<usize>>| {
            PartialMap::new(m, n, &images).expect("generator images")
        };
        Ok(match *g {
            Gen::Sigma(i, n) | Gen::SigmaInv(i, n) => {
                let mut im = ident(n);
                im.swap(i - 1, i);
                build(n, n, im)
            }
            Gen::Eps(i, n) => {
                let mut im = ident(n);
                im[i - 1] = None;
                build(n, n, im)
            }
            Gen::Mu(i, n) => {
                let mut im = ident(n);
                im[i] = Some(i);
                build(n, n, im)
            }
            Gen::Eta(i, n) => {
                let mut im = ident(n);
                im[i - 1] = Some(i + 1);
                build(n, n, im)
            }
            Gen::Lambda(n) => build(n, n + 1, ident(n)),
            Gen::Rho(n) => {
                let mut im = ident(n);
                im.push(match rho {
                    RhoStyle::Chop => None,
                    RhoStyle::Fold if n > 0 => Some(n),
                    RhoStyle::Fold => return Err(MapError::NoImage(*g)),
                });
                build(n + 1, n, im)
            }
            Gen::X | Gen::Xinv => build(2, 2, vec![Some(2), Some(1)]),
            Gen::V => build(2, 1, vec![Some(1), Some(1)]),
            Gen::U => PartialMap::empty(1, 0),
            Gen::Ubar => PartialMap::empty(0, 1),
            Gen::Tau(..) | Gen::D => return Err(MapError::NoImage(*g)),
        })
    }

    pub fn parse(text: &str) -> Result<PartialMap, MapError> {
        let err = |msg: &str| MapError::Parse(format!("{msg} in `{text}`"));
        let t = text.trim();
        let rest = t.strip_prefix("F[").ok_or_else(|| err("expected `F[`"))?;
        let close = rest.find(']').ok_or_else(|| err("missing `]`"))?;
        let dims: Vec<usize> = rest[..close]
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| err("bad dimensions"))?;
        if dims.len() != 2 {
            return Err(err("expected two dimensions"));
        }
        let (m, n) = (dims[0], dims[1]);
        let body = rest[close + 1..]
            .trim()
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .ok_or_else(|| err("expected `{ ... }`"))?;
        let mut images = vec![None; m];
        for pair in body.split_whitespace() {
            let (x, y) = pair.split_once(':').ok_or_else(|| err("expected `x:y`"))?;
            let x: usize = x.parse().map_err(|_| err("bad point"))?;
            let y: usize = y.parse().map_err(|_| err("bad point"))?;
            if x == 0 || x > m {
                return Err(MapError::OutOfRange(x));
            }
            images[x - 1] = Some(y);
        }
        PartialMap::new(m, n, &images)
    }
}

impl fmt::Display for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .graph
            .iter()
            .enumerate()
            .filter_map(|(x, y)| y.map(|v| format!("{}:{}", x + 1, v + 1)))
            .collect();
        write!(f, "F[{},{}]{{{}}}", self.m, self.n, pairs.join(" "))
    }
}

impl fmt::Debug for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Morphism for PartialMap {
    fn dom(&self) -> usize {
        self.m
    }
    fn cod(&self) -> usize {
        self.n
    }
    fn identity(n: usize) -> Self {
        PartialMap::identity(n)
    }
    fn beside(&self, other: &Self) -> Self {
        self.tensor(other)
    }
    fn then_counted(&self, next: &Self) -> Result<(Self, usize), ShapeMismatch> {
        self.compose(next).map(|r| (r, 0))
    }
}

pub const DEFAULT_BUDGET: u128 = 5_000_000;

pub fn enumerate_homset(kind: MapKind, m: usize, n: usize) -> Result<Vec<PartialMap>, MapError> {
    let size = (n as u128 + 1).checked_pow(m as u32).unwrap_or(u128::MAX);
    if size > DEFAULT_BUDGET {
        return Err(MapError::BudgetExceeded {
            kind,
            m,
            n,
            size,
            budget: DEFAULT_BUDGET,
        });
    }
    let mut out = Vec::new();
    let mut graph = vec![None; m];
    fn go(k: usize, graph: &mut Vec<Option<u16>>, n: usize, kind: MapKind, out: &mut Vec<PartialMap>) {
        if k == graph.len() {
            let f = PartialMap {
                m: graph.len(),
                n,
                graph: graph.clone(),
            };
            if kind.contains(&f) {
                out.push(f);
            }
            return;
        }
        for y in std::iter::once(None).chain((0..n as u16).map(Some)) {
            graph[k] = y;
            go(k + 1, graph, n, kind, out);
        }
    }
    go(0, &mut graph, n, kind, &mut out);
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_composition() {
        let a = PartialMap::new(4, 5, &[Some(2), Some(4), Some(2), Some(1)]).unwrap();
        let b = PartialMap::new(5, 3, &[None, Some(3), Some(3), Some(3), Some(2)]).unwrap();
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.to_string(), "F[4,3]{1:3 2:3 3:3}");
        assert_eq!(PartialMap::parse(&ab.to_string()).unwrap(), ab);
    }

    #[test]
    fn generator_images() {
        let mu = PartialMap::generator(&Gen::Mu(1, 2), RhoStyle::Chop).unwrap();
        assert_eq!(mu.images(), vec![Some(1), Some(1)]);
        let l = PartialMap::generator(&Gen::Lambda(2), RhoStyle::Chop).unwrap();
        assert_eq!(l.to_string(), "F[2,3]{1:1 2:2}");
        let f = PartialMap::generator(&Gen::Rho(2), RhoStyle::Fold).unwrap();
        assert_eq!(f.images(), vec![Some(1), Some(2), Some(2)]);
        let c = PartialMap::generator(&Gen::Rho(2), RhoStyle::Chop).unwrap();
        assert_eq!(c.images(), vec![Some(1), Some(2), None]);
        assert!(PartialMap::generator(&Gen::D, RhoStyle::Chop).is_err());
    }

    #[test]
    fn predicates() {
        let x = PartialMap::generator(&Gen::X, RhoStyle::Chop).unwrap();
        assert!(x.is_total() && x.is_injective() && !x.is_isotone());
        let v = PartialMap::generator(&Gen::V, RhoStyle::Chop).unwrap();
        assert!(v.is_total() && v.is_isotone() && !v.is_injective());
    }

    #[test]
    fn tensor_of_units() {
        let u = PartialMap::generator(&Gen::U, RhoStyle::Chop).unwrap();
        let ub = PartialMap::generator(&Gen::Ubar, RhoStyle::Chop).unwrap();
        assert_eq!(u.tensor(&ub), PartialMap::empty(1, 1));
        let ub_i = ub.tensor(&PartialMap::identity(1));
        assert_eq!(ub_i.images(), vec![Some(2)]);
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = [MapKind::PT, MapKind::T, MapKind::I, MapKind::PO, MapKind::O, MapKind::OI]
            .iter()
            .map(|&k| enumerate_homset(k, 2, 2).unwrap().len())
            .collect();
        assert_eq!(counts, vec![9, 4, 7, 8, 3, 6]);
        assert!(enumerate_homset(MapKind::T, 2, 0).unwrap().is_empty());
    }
}
