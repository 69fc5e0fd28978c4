//! Layered forms `X_1 ∘ ... ∘ X_k` with every `X_j = ι_p ⊕ x ⊕ ι_q`.
//!
//! Two layered forms denote the same morphism of the free tensor category
//! exactly when they are related by interchanging neighbouring layers whose
//! generators sit side by side. `canonical` picks the least member of that class.

use super::term::{Node, Term};
use crate::gen::Gen;
use rustc_hash::FxHashSet;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

/// A layered form of at most eight layers over nullary edges, one 16-bit code
/// per layer (`left:6 | edge:4 | dom:3 | cod:3`), first layer most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Packed {
    dom: u8,
    len: u8,
    key: u128,
}

const EDGES: [Gen; 6] = [Gen::X, Gen::Xinv, Gen::D, Gen::U, Gen::Ubar, Gen::V];
const MAX_PACKED: usize = 8;
const MAX_LEFT: usize = 63;

fn edge_code(g: Gen) -> Option<u16> {
    EDGES.iter().position(|&e| e == g).map(|i| i as u16)
}

/// Input width, input arity and output arity of a layer code, and its left offset.
pub(crate) fn code_shape(c: u16) -> (usize, usize, usize) {
    let d = Code::decode(c);
    (d.left, d.dom, d.cod)
}

/// The code with its left offset moved right by `p`, if it still fits.
pub(crate) fn code_shifted(c: u16, p: usize) -> Option<u16> {
    let d = Code::decode(c);
    Code { left: d.left + p, ..d }.encode()
}

/// The code without its left offset.
pub(crate) fn code_body(c: u16) -> u16 {
    c & 0x3ff
}

#[derive(Clone, Copy)]
struct Code {
    left: usize,
    edge: u16,
    dom: usize,
    cod: usize,
}

impl Code {
    fn encode(self) -> Option<u16> {
        (self.left <= MAX_LEFT && self.dom < 8 && self.cod < 8)
            .then(|| (self.left as u16) << 10 | self.edge << 6 | (self.dom as u16) << 3 | self.cod as u16)
    }

    fn decode(c: u16) -> Code {
        Code {
            left: (c >> 10) as usize,
            edge: (c >> 6) & 0xf,
            dom: ((c >> 3) & 7) as usize,
            cod: (c & 7) as usize,
        }
    }
}

impl Packed {
    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dom(&self) -> usize {
        self.dom as usize
    }

    /// Layer codes, first layer first.
    pub(crate) fn codes(&self) -> impl Iterator<Item = u16> + '_ {
        (0..self.len()).map(|j| self.code(j))
    }

    pub(crate) fn from_codes(dom: usize, codes: &[u16]) -> Option<Packed> {
        if codes.len() > MAX_PACKED {
            return None;
        }
        let key = codes
            .iter()
            .enumerate()
            .fold(0u128, |k, (j, &c)| k | (c as u128) << (16 * (MAX_PACKED - 1 - j)));
        Some(Packed {
            dom: u8::try_from(dom).ok()?,
            len: codes.len() as u8,
            key,
        })
    }

    fn code(&self, j: usize) -> u16 {
        (self.key >> (16 * (MAX_PACKED - 1 - j))) as u16
    }

    fn with(&self, j: usize, c: u16) -> Packed {
        let shift = 16 * (MAX_PACKED - 1 - j);
        Packed {
            key: (self.key & !(0xffffu128 << shift)) | (c as u128) << shift,
            ..*self
        }
    }

    /// Interchanges at `k`, as in [`Layered::swaps_at`]; `None` if a result
    /// does not fit the packing.
    fn swaps_at(&self, k: usize, out: &mut Vec<Packed>) -> Option<()> {
        let (a, b) = (Code::decode(self.code(k)), Code::decode(self.code(k + 1)));
        let mut emit = |first: Code, second: Code| -> Option<()> {
            let next = self.with(k, first.encode()?).with(k + 1, second.encode()?);
            if next != *self && !out.contains(&next) {
                out.push(next);
            }
            Some(())
        };
        if b.left >= a.left + a.cod {
            emit(Code { left: b.left - a.cod + a.dom, ..b }, a)?;
        }
        if b.left + b.dom <= a.left {
            emit(b, Code { left: a.left - b.dom + b.cod, ..a })?;
        }
        Some(())
    }

    /// The whole interchange class, sorted; `None` if some member does not fit.
    pub(crate) fn class(self) -> Option<Vec<Packed>> {
        let mut seen: FxHashSet<Packed> = FxHashSet::default();
        seen.insert(self);
        let mut queue = vec![self];
        let mut out = Vec::new();
        while let Some(t) = queue.pop() {
            for k in 0..(t.len as usize).saturating_sub(1) {
                out.clear();
                t.swaps_at(k, &mut out)?;
                for &s in &out {
                    if seen.insert(s) {
                        queue.push(s);
                    }
                }
            }
        }
        let mut v: Vec<Packed> = seen.into_iter().collect();
        v.sort_unstable();
        Some(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Layer {
    pub left: usize,
    pub gen: Gen,
    pub right: usize,
    pub dom: usize,
    pub cod: usize,
}

impl Layer {
    pub fn width_in(&self) -> usize {
        self.left + self.dom + self.right
    }

    pub fn width_out(&self) -> usize {
        self.left + self.cod + self.right
    }

    pub fn to_term(&self) -> Term {
        Term::whisker(
            self.left,
            Term::leaf(self.gen, self.dom, self.cod),
            self.right,
        )
    }

    fn shifted(&self, p: usize, q: usize) -> Layer {
        Layer {
            left: self.left + p,
            right: self.right + q,
            ..*self
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Layered {
    dom: usize,
    cod: usize,
    layers: Vec<Layer>,
}

impl Layered {
    pub fn identity(n: usize) -> Layered {
        Layered {
            dom: n,
            cod: n,
            layers: Vec::new(),
        }
    }

    /// Layers must chain: each output width equals the next input width.
    pub fn from_layers(dom: usize, layers: Vec<Layer>) -> Option<Layered> {
        let mut w = dom;
        for l in &layers {
            if l.width_in() != w {
                return None;
            }
            w = l.width_out();
        }
        Some(Layered {
            dom,
            cod: w,
            layers,
        })
    }

    pub fn from_term(t: &Term) -> Layered {
        fn collect(t: &Term, out: &mut Vec<Layer>, pl: usize, pr: usize) {
            match t.node() {
                Node::Id => {}
                Node::Gen(g) => out.push(Layer {
                    left: pl,
                    gen: *g,
                    right: pr,
                    dom: t.dom(),
                    cod: t.cod(),
                }),
                Node::Seq(parts) => parts.iter().for_each(|p| collect(p, out, pl, pr)),
                Node::Ten(parts) => {
                    for k in 0..parts.len() {
                        let left: usize = parts[..k].iter().map(Term::cod).sum();
                        let right: usize = parts[k + 1..].iter().map(Term::dom).sum();
                        collect(&parts[k], out, pl + left, pr + right);
                    }
                }
            }
        }
        let mut layers = Vec::new();
        collect(t, &mut layers, 0, 0);
        Layered {
            dom: t.dom(),
            cod: t.cod(),
            layers,
        }
    }

    pub fn to_term(&self) -> Term {
        if self.layers.is_empty() {
            return Term::id(self.dom);
        }
        Term::seq(self.layers.iter().map(Layer::to_term).collect()).expect("layers chain")
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn size(&self) -> usize {
        self.layers.len()
    }

    /// Width of the cut before layer `k` (`k = size()` is the codomain).
    pub fn width_at(&self, k: usize) -> usize {
        if k == 0 {
            self.dom
        } else {
            self.layers[k - 1].width_out()
        }
    }

    pub fn max_width(&self) -> usize {
        (0..=self.size()).map(|k| self.width_at(k)).max().unwrap_or(0)
    }

    /// Append one layer; `None` if the widths disagree.
    pub fn push(&self, l: Layer) -> Option<Layered> {
        if l.width_in() != self.cod {
            return None;
        }
        let mut layers = self.layers.clone();
        layers.push(l);
        Some(Layered {
            dom: self.dom,
            cod: l.width_out(),
            layers,
        })
    }

    /// The interchange moves available at position `k` (layers `k`, `k+1`).
    pub fn swaps_at(&self, k: usize) -> Vec<Layered> {
        let (a, b) = (self.layers[k], self.layers[k + 1]);
        let mut out = Vec::new();
        let mut emit = |first: Layer, second: Layer| {
            let mut layers = self.layers.clone();
            layers[k] = first;
            layers[k + 1] = second;
            let next = Layered {
                dom: self.dom,
                cod: self.cod,
                layers,
            };
            if next != *self && !out.contains(&next) {
                out.push(next);
            }
        };
        if b.left >= a.left + a.cod {
            let b2 = Layer {
                left: b.left - a.cod + a.dom,
                ..b
            };
            let a2 = Layer {
                right: a.right - b.dom + b.cod,
                ..a
            };
            emit(b2, a2);
        }
        if b.left + b.dom <= a.left {
            let b2 = Layer {
                right: b.right - a.cod + a.dom,
                ..b
            };
            let a2 = Layer {
                left: a.left - b.dom + b.cod,
                ..a
            };
            emit(b2, a2);
        }
        out
    }

    /// The compact code of this form, if it has at most eight layers over
    /// nullary edges of small arity.
    pub fn pack(&self) -> Option<Packed> {
        if self.layers.len() > MAX_PACKED {
            return None;
        }
        let mut key = 0u128;
        for (j, l) in self.layers.iter().enumerate() {
            let c = Code {
                left: l.left,
                edge: edge_code(l.gen)?,
                dom: l.dom,
                cod: l.cod,
            }
            .encode()?;
            key |= (c as u128) << (16 * (MAX_PACKED - 1 - j));
        }
        Some(Packed {
            dom: u8::try_from(self.dom).ok()?,
            len: self.layers.len() as u8,
            key,
        })
    }

    pub fn unpack(p: Packed) -> Layered {
        let mut w = p.dom as usize;
        let layers = (0..p.len as usize)
            .map(|j| {
                let c = Code::decode(p.code(j));
                let l = Layer {
                    left: c.left,
                    gen: EDGES[c.edge as usize],
                    right: w - c.left - c.dom,
                    dom: c.dom,
                    cod: c.cod,
                };
                w = w - c.dom + c.cod;
                l
            })
            .collect();
        Layered {
            dom: p.dom as usize,
            cod: w,
            layers,
        }
    }

    /// The interchange class in packed form when every member packs.
    pub fn packed_class(&self) -> Option<Vec<Packed>> {
        self.pack()?.class()
    }

    /// Every layered form reachable by interchanges, sorted (by packed code
    /// when the whole class packs).
    pub fn class(&self) -> Vec<Layered> {
        if let Some(v) = self.packed_class() {
            return v.into_iter().map(Layered::unpack).collect();
        }
        self.slow_class()
    }

    fn slow_class(&self) -> Vec<Layered> {
        let mut seen: BTreeSet<Layered> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.clone());
        queue.push_back(self.clone());
        while let Some(t) = queue.pop_front() {
            for k in 0..t.size().saturating_sub(1) {
                for s in t.swaps_at(k) {
                    if seen.insert(s.clone()) {
                        queue.push_back(s);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn canonical(&self) -> Layered {
        self.class().swap_remove(0)
    }

    /// Whether the layers `k..k+pattern.size()` are `pattern` framed by
    /// `ι_p ⊕ - ⊕ ι_q` for some `p`; returns that `p`.
    pub fn framed_match(&self, k: usize, pattern: &Layered) -> Option<usize> {
        let len = pattern.size();
        if len == 0 || k + len > self.size() {
            return None;
        }
        let first = self.layers[k];
        let p = first.left.checked_sub(pattern.layers[0].left)?;
        let q = first.right.checked_sub(pattern.layers[0].right)?;
        for j in 0..len {
            if self.layers[k + j] != pattern.layers[j].shifted(p, q) {
                return None;
            }
        }
        Some(p)
    }

    /// Replace `len` layers starting at `k` by `replacement` framed at offset `p`.
    pub fn splice(&self, k: usize, len: usize, replacement: &Layered, p: usize) -> Layered {
        let w = self.width_at(k);
        let q = w - p - replacement.dom;
        let mut layers = Vec::with_capacity(self.size() - len + replacement.size());
        layers.extend_from_slice(&self.layers[..k]);
        layers.extend(replacement.layers.iter().map(|l| l.shifted(p, q)));
        layers.extend_from_slice(&self.layers[k + len..]);
        Layered {
            dom: self.dom,
            cod: self.cod,
            layers,
        }
    }
}

impl fmt::Display for Layered {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_term())
    }
}

/// Rewrite a term as a composite of whiskered generators.
pub fn layerize(t: &Term) -> Term {
    Layered::from_term(t).to_term()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_cat::parse::parse_term;

    #[test]
    fn tensor_becomes_two_layers() {
        let t = parse_term("X # D").unwrap();
        assert_eq!(layerize(&t).to_string(), "(X # id[2]) ; (id[2] # D)");
    }

    #[test]
    fn identity_is_fixed() {
        let t = parse_term("id[3]").unwrap();
        assert_eq!(layerize(&t), t);
    }

    #[test]
    fn layerize_is_idempotent() {
        let t = parse_term("(X # (U ; Uu)) ; (D # id[1])").unwrap();
        let once = layerize(&t);
        assert_eq!(layerize(&once), once);
    }

    #[test]
    fn interchange_class_of_side_by_side_pair() {
        let t = Layered::from_term(&parse_term("X # D").unwrap());
        let class = t.class();
        assert_eq!(class.len(), 2);
        let other = Layered::from_term(&parse_term("(id[2] # D) ; (X # id[2])").unwrap());
        assert!(class.contains(&other));
        assert_eq!(t.canonical(), other.canonical());
    }

    #[test]
    fn cup_cap_orders() {
        // U ; Uu = U # Uu = Uu # U in any strict tensor category.
        let a = Layered::from_term(&parse_term("U # Uu").unwrap());
        let b = Layered::from_term(&parse_term("Uu # U").unwrap());
        let c = Layered::from_term(&parse_term("U ; Uu").unwrap());
        assert_eq!(a.canonical(), c.canonical());
        assert_eq!(a.canonical(), b.canonical());
        let loop_ = Layered::from_term(&parse_term("Uu ; U").unwrap());
        assert_eq!(loop_.class().len(), 1);
    }

    #[test]
    fn packed_class_matches_direct_search() {
        for text in [
            "X # D",
            "(U # Uu) ; (Uu # id[1])",
            "(X # id[1]) ; (id[1] # X) ; (U # U # U # Uu)",
            "(Uu # Uu # V) ; (D # id[1])",
        ] {
            let t = Layered::from_term(&parse_term(text).unwrap());
            let packed: BTreeSet<Layered> = t.class().into_iter().collect();
            let slow: BTreeSet<Layered> = t.slow_class().into_iter().collect();
            assert_eq!(packed, slow, "{text}");
            for m in &slow {
                assert_eq!(Layered::unpack(m.pack().unwrap()), *m);
            }
        }
    }

    #[test]
    fn framed_match_and_splice() {
        let t = Layered::from_term(&parse_term("(X # id[1]) ; (id[1] # X) ; (id[1] # X)").unwrap());
        let pat = Layered::from_term(&parse_term("X ; X").unwrap());
        assert_eq!(t.framed_match(1, &pat), Some(1));
        assert_eq!(t.framed_match(0, &pat), None);
        let r = t.splice(1, 2, &Layered::identity(2), 1);
        assert_eq!(r.to_term().to_string(), "X # id[1]");
    }
}
