//! Free categories over graded digraphs and free tensor categories of terms.

pub mod eval;
pub mod layered;
pub mod parse;
pub mod rewrite;
pub mod term;

pub use eval::{
    evaluate_layered, evaluate_term, evaluate_word, DiagramSemantics, EvalError, Finite,
    Interpretation, LinearSemantics, MapSemantics,
};
pub use layered::{layerize, Layer, Layered, Packed};
pub use parse::{parse_term, parse_term_in, print_term};
pub use rewrite::{
    apply_relation, apply_word_relation, Direction, PackedRule, Position, Relation, WordRelation,
};
pub use term::{Node, Term, Word};

use crate::gen::{Family, Gen, GenError, Signature};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum TermError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("type error: codomain {cod} composed with domain {dom}")]
    Type { cod: usize, dom: usize },
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error("not a plain composite of generators: {0}")]
    NotAWord(String),
    #[error("empty composite")]
    EmptyComposite,
    #[error("relation side does not occur at the given position")]
    NoMatch,
}

/// Edge schemas over the objects `min_object, min_object + 1, ...`.
///
/// Indexed families contribute their letters at each object, `l`/`r` connect
/// `n` and `n + step`, and nullary families are the fixed-arity tensor edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDigraph {
    pub sig: Signature,
    pub families: Vec<Family>,
    pub min_object: usize,
}

impl GradedDigraph {
    pub fn new(sig: Signature, families: &[Family], min_object: usize) -> Self {
        GradedDigraph {
            sig,
            families: families.to_vec(),
            min_object,
        }
    }

    pub fn has(&self, f: Family) -> bool {
        self.families.contains(&f)
    }

    /// Whether `g` is an instantiated edge of this digraph.
    pub fn contains(&self, g: &Gen) -> bool {
        if !self.has(g.family()) || g.check().is_err() {
            return false;
        }
        match *g {
            Gen::Lambda(n) | Gen::Rho(n) => n >= self.min_object,
            _ if g.index().is_some() => g.arity(self.sig).0 >= self.min_object,
            _ => true,
        }
    }

    /// Edges with source `n`, in a fixed order.
    pub fn edges_from(&self, n: usize) -> Vec<Gen> {
        let d = self.sig.step;
        let mut out = Vec::new();
        for &f in &self.families {
            match f {
                Family::Lambda => {
                    if n >= self.min_object {
                        out.push(Gen::Lambda(n));
                    }
                }
                Family::Rho => {
                    if n >= d + self.min_object {
                        out.push(Gen::Rho(n - d));
                    }
                }
                _ => {
                    if let Some(g) = f.nullary() {
                        if g.arity(self.sig).0 == n {
                            out.push(g);
                        }
                    } else if n >= self.min_object {
                        out.extend(f.letters(n));
                    }
                }
            }
        }
        out
    }

    /// The tensor edges (nullary families) of this digraph.
    pub fn tensor_edges(&self) -> Vec<Gen> {
        self.families.iter().filter_map(|f| f.nullary()).collect()
    }

    /// Letters of the endo-hom alphabet at `n` (indexed families only).
    pub fn monoid_letters(&self, n: usize) -> Vec<Gen> {
        if n < self.min_object {
            return Vec::new();
        }
        self.families
            .iter()
            .flat_map(|f| f.letters(n))
            .collect()
    }
}
