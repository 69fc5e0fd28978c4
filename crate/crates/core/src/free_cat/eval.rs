//! Structural evaluation of words and terms in a target tensor category.

use super::layered::{Layer, Layered};
use super::term::{Node, Term, Word};
use crate::category::{Morphism, ShapeMismatch};
use crate::diagram::{self, DiagramKind, Partition};
use crate::gen::{Gen, Signature};
use crate::linear::LinComb;
use crate::transform::{self, MapKind, PartialMap, RhoStyle};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("no image assigned to {0}")]
    Unassigned(Gen),
    #[error("{gen} is used as {used:?} but its image has arity {image:?}")]
    Arity {
        gen: Gen,
        used: (usize, usize),
        image: (usize, usize),
    },
    #[error(transparent)]
    Shape(#[from] ShapeMismatch),
}

/// A target category together with an image for each generator.
pub trait Interpretation {
    type Mor: Morphism;

    fn signature(&self) -> Signature;

    fn image(&self, g: &Gen) -> Result<Self::Mor, EvalError>;

    fn layer(&self, l: &Layer) -> Result<Self::Mor, EvalError> {
        let x = self.image(&l.gen)?;
        if (x.dom(), x.cod()) != (l.dom, l.cod) {
            return Err(EvalError::Arity {
                gen: l.gen,
                used: (l.dom, l.cod),
                image: (x.dom(), x.cod()),
            });
        }
        Ok(Self::Mor::identity(l.left)
            .beside(&x)
            .beside(&Self::Mor::identity(l.right)))
    }
}

/// Interpretations whose hom-sets can be listed.
pub trait Finite: Interpretation {
    fn homset(&self, m: usize, n: usize) -> Result<Vec<Self::Mor>, String>;
}

pub fn evaluate_term<I: Interpretation>(t: &Term, interp: &I) -> Result<I::Mor, EvalError> {
    match t.node() {
        Node::Id => Ok(I::Mor::identity(t.dom())),
        Node::Gen(g) => {
            let x = interp.image(g)?;
            if (x.dom(), x.cod()) != (t.dom(), t.cod()) {
                return Err(EvalError::Arity {
                    gen: *g,
                    used: (t.dom(), t.cod()),
                    image: (x.dom(), x.cod()),
                });
            }
            Ok(x)
        }
        Node::Seq(parts) => {
            let mut acc = evaluate_term(&parts[0], interp)?;
            for p in &parts[1..] {
                acc = acc.then(&evaluate_term(p, interp)?)?;
            }
            Ok(acc)
        }
        Node::Ten(parts) => {
            let mut acc = I::Mor::identity(0);
            for p in parts {
                acc = acc.beside(&evaluate_term(p, interp)?);
            }
            Ok(acc)
        }
    }
}

pub fn evaluate_word<I: Interpretation>(w: &Word, interp: &I) -> Result<I::Mor, EvalError> {
    let mut acc = I::Mor::identity(w.dom());
    for g in w.letters() {
        acc = acc.then(&interp.image(g)?)?;
    }
    Ok(acc)
}

pub fn evaluate_layered<I: Interpretation>(t: &Layered, interp: &I) -> Result<I::Mor, EvalError> {
    let mut acc = I::Mor::identity(t.dom());
    for l in t.layers() {
        acc = acc.then(&interp.layer(l)?)?;
    }
    Ok(acc)
}

/// Generators read as partitions of the given kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagramSemantics {
    pub kind: DiagramKind,
}

impl Interpretation for DiagramSemantics {
    type Mor = Partition;

    fn signature(&self) -> Signature {
        Signature {
            step: self.kind.step(),
        }
    }

    fn image(&self, g: &Gen) -> Result<Partition, EvalError> {
        Partition::generator(g, self.kind).map_err(|_| EvalError::Unassigned(*g))
    }
}

impl Finite for DiagramSemantics {
    fn homset(&self, m: usize, n: usize) -> Result<Vec<Partition>, String> {
        diagram::enumerate_homset(self.kind, m, n).map_err(|e| e.to_string())
    }
}

/// Generators read as basis diagrams of the δ-linear category.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearSemantics {
    pub kind: DiagramKind,
}

impl Interpretation for LinearSemantics {
    type Mor = LinComb;

    fn signature(&self) -> Signature {
        Signature {
            step: self.kind.step(),
        }
    }

    fn image(&self, g: &Gen) -> Result<LinComb, EvalError> {
        Partition::generator(g, self.kind)
            .map(LinComb::basis)
            .map_err(|_| EvalError::Unassigned(*g))
    }
}

/// Generators read as partial maps, keeping only images in `kind`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapSemantics {
    pub rho: RhoStyle,
    pub kind: MapKind,
}

impl Interpretation for MapSemantics {
    type Mor = PartialMap;

    fn signature(&self) -> Signature {
        Signature::UNIT
    }

    fn image(&self, g: &Gen) -> Result<PartialMap, EvalError> {
        match PartialMap::generator(g, self.rho) {
            Ok(f) if self.kind.contains(&f) => Ok(f),
            _ => Err(EvalError::Unassigned(*g)),
        }
    }
}

impl Finite for MapSemantics {
    fn homset(&self, m: usize, n: usize) -> Result<Vec<PartialMap>, String> {
        transform::enumerate_homset(self.kind, m, n).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_cat::parse::parse_term;

    const P: DiagramSemantics = DiagramSemantics {
        kind: DiagramKind::P,
    };

    #[test]
    fn empty_word_is_identity() {
        let w = Word::empty(Signature::UNIT, 3);
        assert_eq!(evaluate_word(&w, &P).unwrap(), Partition::identity(3));
    }

    #[test]
    fn crossing_squares_to_identity() {
        let w = Word::new(Signature::UNIT, 2, vec![Gen::Sigma(1, 2), Gen::Sigma(1, 2)]).unwrap();
        assert_eq!(evaluate_word(&w, &P).unwrap(), Partition::identity(2));
    }

    #[test]
    fn snake_with_d_is_identity() {
        let t = parse_term("(id[1] # Uu) ; D ; (id[1] # U)").unwrap();
        assert_eq!(evaluate_term(&t, &P).unwrap(), Partition::identity(1));
    }

    #[test]
    fn cup_cap_is_isolated_pair() {
        let t = parse_term("U # Uu").unwrap();
        let eps = Partition::make(1, 1, &[vec![1], vec![-1]]).unwrap();
        assert_eq!(evaluate_term(&t, &P).unwrap(), eps);
        let t = parse_term("Uu ; U ; U # Uu").unwrap_err();
        assert!(matches!(t, super::super::TermError::Type { .. }));
    }

    #[test]
    fn layered_agrees_with_tree() {
        let t = parse_term("(X # (U ; Uu)) ; (D # id[1])").unwrap();
        let l = Layered::from_term(&t);
        assert_eq!(
            evaluate_layered(&l, &P).unwrap(),
            evaluate_term(&t, &P).unwrap()
        );
    }

    #[test]
    fn missing_image_is_reported() {
        let tl = DiagramSemantics {
            kind: DiagramKind::TL,
        };
        let t = parse_term("X").unwrap();
        assert_eq!(evaluate_term(&t, &tl), Err(EvalError::Unassigned(Gen::X)));
    }
}
