use super::TermError;
use crate::gen::{Gen, Signature};
use std::fmt;

/// A path in the free category: generators composed left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    sig: Signature,
    dom: usize,
    cod: usize,
    letters: Vec<Gen>,
}

impl Word {
    pub fn empty(sig: Signature, n: usize) -> Word {
        Word {
            sig,
            dom: n,
            cod: n,
            letters: Vec::new(),
        }
    }

    pub fn new(sig: Signature, dom: usize, letters: Vec<Gen>) -> Result<Word, TermError> {
        let mut cod = dom;
        for g in &letters {
            g.check()?;
            let (a, b) = g.arity(sig);
            if a != cod {
                return Err(TermError::Type { cod, dom: a });
            }
            cod = b;
        }
        Ok(Word {
            sig,
            dom,
            cod,
            letters,
        })
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn letters(&self) -> &[Gen] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Object at the cut before letter `k` (`k = len()` is the codomain).
    pub fn object_at(&self, k: usize) -> usize {
        if k == 0 {
            self.dom
        } else {
            self.letters[k - 1].arity(self.sig).1
        }
    }

    pub fn then(&self, next: &Word) -> Result<Word, TermError> {
        if self.cod != next.dom {
            return Err(TermError::Type {
                cod: self.cod,
                dom: next.dom,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&next.letters);
        Ok(Word {
            sig: self.sig,
            dom: self.dom,
            cod: next.cod,
            letters,
        })
    }

    pub fn to_term(&self) -> Term {
        if self.letters.is_empty() {
            return Term::id(self.dom);
        }
        let parts = self
            .letters
            .iter()
            .map(|g| Term::gen(*g, self.sig).expect("word letters are valid"))
            .collect();
        Term::seq(parts).expect("word is composable")
    }

    /// Read a term that is a plain composite of generators.
    pub fn from_term(t: &Term, sig: Signature) -> Result<Word, TermError> {
        let mut letters = Vec::new();
        fn walk(t: &Term, out: &mut Vec<Gen>) -> Result<(), TermError> {
            match &t.node {
                Node::Id => Ok(()),
                Node::Gen(g) => {
                    out.push(*g);
                    Ok(())
                }
                Node::Seq(parts) => parts.iter().try_for_each(|p| walk(p, out)),
                Node::Ten(_) => Err(TermError::NotAWord(t.to_string())),
            }
        }
        walk(&t.normalize(), &mut letters)?;
        Word::new(sig, t.dom, letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "id[{}]", self.dom);
        }
        let parts: Vec<String> = self.letters.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(" ; "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Id,
    Gen(Gen),
    Seq(Vec<Term>),
    Ten(Vec<Term>),
}

/// An element of the free tensor category: identities and generators closed
/// under composition and tensor, with dom/cod cached at every node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    node: Node,
    dom: usize,
    cod: usize,
}

impl Term {
    pub fn id(n: usize) -> Term {
        Term {
            node: Node::Id,
            dom: n,
            cod: n,
        }
    }

    pub fn gen(g: Gen, sig: Signature) -> Result<Term, TermError> {
        g.check()?;
        let (dom, cod) = g.arity(sig);
        Ok(Term {
            node: Node::Gen(g),
            dom,
            cod,
        })
    }

    /// A generator leaf with arities already known.
    pub(crate) fn leaf(g: Gen, dom: usize, cod: usize) -> Term {
        Term {
            node: Node::Gen(g),
            dom,
            cod,
        }
    }

    /// Composite in diagrammatic order; nested composites are spliced in.
    pub fn seq(parts: Vec<Term>) -> Result<Term, TermError> {
        let mut flat: Vec<Term> = Vec::new();
        for p in parts {
            match p.node {
                Node::Seq(inner) => flat.extend(inner),
                _ => flat.push(p),
            }
        }
        for w in flat.windows(2) {
            if w[0].cod != w[1].dom {
                return Err(TermError::Type {
                    cod: w[0].cod,
                    dom: w[1].dom,
                });
            }
        }
        match flat.len() {
            0 => Err(TermError::EmptyComposite),
            1 => Ok(flat.pop().unwrap()),
            _ => Ok(Term {
                dom: flat[0].dom,
                cod: flat[flat.len() - 1].cod,
                node: Node::Seq(flat),
            }),
        }
    }

    pub fn ten(parts: Vec<Term>) -> Term {
        let mut flat: Vec<Term> = Vec::new();
        for p in parts {
            match p.node {
                Node::Ten(inner) => flat.extend(inner),
                _ => flat.push(p),
            }
        }
        match flat.len() {
            0 => Term::id(0),
            1 => flat.pop().unwrap(),
            _ => Term {
                dom: flat.iter().map(|t| t.dom).sum(),
                cod: flat.iter().map(|t| t.cod).sum(),
                node: Node::Ten(flat),
            },
        }
    }

    /// `ι_p ⊕ x ⊕ ι_q`, leaving out empty identities.
    pub fn whisker(p: usize, x: Term, q: usize) -> Term {
        let mut parts = Vec::new();
        if p > 0 {
            parts.push(Term::id(p));
        }
        parts.push(x);
        if q > 0 {
            parts.push(Term::id(q));
        }
        Term::ten(parts)
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn node(&self) -> &Node {
        &self.node
    }

    pub fn is_identity(&self) -> bool {
        matches!(self.node, Node::Id)
    }

    /// Number of generator occurrences.
    pub fn size(&self) -> usize {
        match &self.node {
            Node::Id => 0,
            Node::Gen(_) => 1,
            Node::Seq(p) | Node::Ten(p) => p.iter().map(Term::size).sum(),
        }
    }

    pub fn generators(&self) -> Vec<Gen> {
        match &self.node {
            Node::Id => vec![],
            Node::Gen(g) => vec![*g],
            Node::Seq(p) | Node::Ten(p) => p.iter().flat_map(Term::generators).collect(),
        }
    }

    /// Strict-axiom normal form: associativity flattened, `ι_0` tensor units and
    /// identity factors of composites removed, adjacent identities in a tensor merged.
    pub fn normalize(&self) -> Term {
        match &self.node {
            Node::Id | Node::Gen(_) => self.clone(),
            Node::Seq(parts) => {
                let kept: Vec<Term> = parts
                    .iter()
                    .map(Term::normalize)
                    .filter(|t| !t.is_identity())
                    .collect();
                if kept.is_empty() {
                    Term::id(self.dom)
                } else {
                    Term::seq(kept).expect("normalizing keeps types")
                }
            }
            Node::Ten(parts) => {
                let mut out: Vec<Term> = Vec::new();
                let flat = Term::ten(parts.iter().map(Term::normalize).collect());
                let items = match flat.node {
                    Node::Ten(items) => items,
                    other => {
                        return Term {
                            node: other,
                            dom: flat.dom,
                            cod: flat.cod,
                        }
                    }
                };
                for t in items {
                    if t.is_identity() {
                        if t.dom == 0 {
                            continue;
                        }
                        if let Some(last) = out.last_mut() {
                            if last.is_identity() {
                                *last = Term::id(last.dom + t.dom);
                                continue;
                            }
                        }
                    }
                    out.push(t);
                }
                Term::ten(out)
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            Node::Id => write!(f, "id[{}]", self.dom),
            Node::Gen(g) => write!(f, "{g}"),
            Node::Seq(parts) => {
                for (k, p) in parts.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" ; ")?;
                    }
                    match p.node {
                        Node::Ten(_) => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
            Node::Ten(parts) => {
                for (k, p) in parts.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" # ")?;
                    }
                    match p.node {
                        Node::Seq(_) => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
        }
    }
}
