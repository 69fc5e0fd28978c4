//! Catalogued presentations, the hat map into tensor terms, and one-sided
//! normal forms over the scaffold of units `λ_n`, `ρ_n`.

pub mod catalog;
pub mod hat;
pub mod normal;
pub mod scaffold;
pub mod schema;
pub mod target;

pub use hat::hat_map;
pub use normal::{
    lambda_word, monoid_word_for, normalize_one_sided, rho_word, to_endo_left, to_endo_right,
    Normalized, OneSided,
};
pub use scaffold::Scaffold;
pub use schema::{IndexRule, RelationInstance, Schema, SchemaError, Side, Substitution};
pub use target::{Reading, Target};

use crate::free_cat::GradedDigraph;
use crate::gen::{Family, Gen, Signature};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("unknown presentation `{0}`")]
    UnknownPresentation(String),
    #[error("{gen} is not an edge of {category}")]
    UnknownEdge { category: String, gen: Gen },
    #[error("no unit path from {from} to {to} with step {step}")]
    BadGrading { from: usize, to: usize, step: usize },
    #[error("could not descend {0}")]
    DescendFailure(String),
    #[error("search budget of {0} elements exhausted")]
    BudgetExceeded(usize),
    #[error(transparent)]
    Schema(#[from] SchemaError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Level {
    /// Relations among the letters of each endo-hom `n -> n`.
    Monoid,
    /// Monoid relations plus those involving `l` and `r`.
    Category,
    /// Relations among tensor terms of fixed arity.
    Tensor,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Monoid => "monoid",
            Level::Category => "category",
            Level::Tensor => "tensor",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub id: &'static str,
    pub level: Level,
    pub alphabet: GradedDigraph,
    pub schemas: Vec<Schema>,
    /// Family renamings applied before alphabet filtering.
    pub subst: Vec<Substitution>,
    pub target: Target,
    /// Relations hold with powers of δ in the linear category.
    pub linear: bool,
}

use Family::*;

const PV_LETTERS: [Family; 5] = [Sigma, SigmaInv, Eps, Mu, Eta];
const IB_LETTERS: [Family; 3] = [Sigma, SigmaInv, Eps];
const V_LETTERS: [Family; 4] = [Sigma, SigmaInv, Mu, Eta];

fn with_units(fs: &[Family]) -> Vec<Family> {
    let mut v = fs.to_vec();
    v.extend([Lambda, Rho]);
    v
}

fn concat(parts: Vec<Vec<Schema>>) -> Vec<Schema> {
    parts.into_iter().flatten().collect()
}

fn word_level(
    id: &'static str,
    level: Level,
    sig: Signature,
    letters: &[Family],
    min: usize,
    schemas: Vec<Schema>,
    target: Target,
) -> Presentation {
    let fams = if level == Level::Category {
        with_units(letters)
    } else {
        letters.to_vec()
    };
    Presentation {
        id,
        level,
        alphabet: GradedDigraph::new(sig, &fams, min),
        schemas,
        subst: Vec::new(),
        target,
        linear: false,
    }
}

fn tensor_level(id: &'static str, sig: Signature, edges: &[Family], schemas: Vec<Schema>, target: Target) -> Presentation {
    Presentation {
        id,
        level: Level::Tensor,
        alphabet: GradedDigraph::new(sig, edges, 0),
        schemas,
        subst: Vec::new(),
        target,
        linear: false,
    }
}

fn linear(mut p: Presentation) -> Presentation {
    p.linear = true;
    p
}

fn registry() -> Vec<Presentation> {
    use catalog::*;
    use Level::{Category, Monoid};
    let unit = Signature::UNIT;
    let pair = Signature::PAIR;
    let pt_subst = vec![(SigmaInv, Sigma)];
    let mut v = vec![
        word_level("P-monoid", Monoid, unit, &[Sigma, Eps, Tau], 0, partition_monoid(false), Target::P),
        word_level(
            "P-category",
            Category,
            unit,
            &[Sigma, Eps, Tau],
            0,
            concat(vec![partition_monoid(false), partition_category(false)]),
            Target::P,
        ),
        tensor_level("P-tensor", unit, &[X, D, U, Ubar], partition_tensor(false), Target::P),
        word_level("B-monoid", Monoid, pair, &[Sigma, Tau], 0, brauer_monoid(false), Target::B),
        word_level(
            "B-category",
            Category,
            pair,
            &[Sigma, Tau],
            0,
            concat(vec![brauer_monoid(false), brauer_category(false)]),
            Target::B,
        ),
        tensor_level("B-tensor", pair, &[X, U, Ubar], brauer_tensor(false), Target::B),
        word_level("TL-monoid", Monoid, pair, &[Tau], 0, tl_monoid(false), Target::TL),
        word_level(
            "TL-category",
            Category,
            pair,
            &[Tau],
            0,
            concat(vec![tl_monoid(false), tl_category(false)]),
            Target::TL,
        ),
        tensor_level("TL-tensor", pair, &[U, Ubar], tl_tensor(false), Target::TL),
        linear(word_level(
            "P-linear-category",
            Category,
            unit,
            &[Sigma, Eps, Tau],
            0,
            concat(vec![partition_monoid(true), partition_category(true)]),
            Target::P,
        )),
        linear(tensor_level("P-linear-tensor", unit, &[X, D, U, Ubar], partition_tensor(true), Target::P)),
        linear(word_level(
            "B-linear-category",
            Category,
            pair,
            &[Sigma, Tau],
            0,
            concat(vec![brauer_monoid(true), brauer_category(true)]),
            Target::B,
        )),
        linear(tensor_level("B-linear-tensor", pair, &[X, U, Ubar], brauer_tensor(true), Target::B)),
        linear(word_level(
            "TL-linear-category",
            Category,
            pair,
            &[Tau],
            0,
            concat(vec![tl_monoid(true), tl_category(true)]),
            Target::TL,
        )),
        linear(tensor_level("TL-linear-tensor", pair, &[U, Ubar], tl_tensor(true), Target::TL)),
        word_level("PV-monoid", Monoid, unit, &PV_LETTERS, 0, partial_vine_monoid(), Target::ShadowPV),
        word_level(
            "PV-category",
            Category,
            unit,
            &PV_LETTERS,
            0,
            concat(vec![partial_vine_monoid(), partial_vine_category()]),
            Target::ShadowPV,
        ),
        tensor_level("PV-tensor", unit, &[X, Xinv, V, U, Ubar], partial_vine_tensor(), Target::ShadowPV),
        word_level("IB-monoid", Monoid, unit, &IB_LETTERS, 0, partial_braid_monoid(), Target::ShadowIB),
        word_level(
            "IB-category",
            Category,
            unit,
            &IB_LETTERS,
            0,
            concat(vec![partial_braid_monoid(), partial_braid_category()]),
            Target::ShadowIB,
        ),
        tensor_level("IB-tensor", unit, &[X, Xinv, U, Ubar], partial_braid_tensor(), Target::ShadowIB),
        word_level("V-monoid", Monoid, unit, &V_LETTERS, 1, vine_monoid(), Target::ShadowV),
        word_level(
            "V-category",
            Category,
            unit,
            &V_LETTERS,
            1,
            concat(vec![vine_monoid(), vine_category()]),
            Target::ShadowV,
        ),
        tensor_level("V-tensor", unit, &[X, Xinv, V, Ubar], vine_tensor(), Target::ShadowV),
    ];
    let mut pt = word_level(
        "PT-category",
        Category,
        unit,
        &[Sigma, Eps, Mu, Eta],
        0,
        concat(vec![partial_vine_monoid(), partial_vine_category(), square_kernel()]),
        Target::PT,
    );
    pt.subst = pt_subst.clone();
    let mut i = word_level(
        "I-category",
        Category,
        unit,
        &[Sigma, Eps],
        0,
        concat(vec![partial_braid_monoid(), partial_braid_category(), square_kernel()]),
        Target::I,
    );
    i.subst = pt_subst.clone();
    let mut t = word_level(
        "T-category",
        Category,
        unit,
        &[Sigma, Mu, Eta],
        1,
        concat(vec![vine_monoid(), vine_category(), square_kernel()]),
        Target::T,
    );
    t.subst = pt_subst;
    v.extend([
        pt,
        tensor_level("PT-tensor", unit, &[X, V, U, Ubar], pt_tensor(), Target::PT),
        i,
        tensor_level("I-tensor", unit, &[X, U, Ubar], i_tensor(), Target::I),
        t,
        tensor_level("T-tensor", unit, &[X, V, Ubar], t_tensor(), Target::T),
        word_level("PO-monoid", Monoid, unit, &[Eps, Mu, Eta], 0, partial_vine_monoid(), Target::PO),
        tensor_level("PO-tensor", unit, &[V, U, Ubar], po_tensor(), Target::PO),
        word_level("O-monoid", Monoid, unit, &[Mu, Eta], 1, partial_vine_monoid(), Target::O),
        tensor_level("O-tensor", unit, &[V, Ubar], o_tensor(), Target::O),
        tensor_level("OI-tensor", unit, &[U, Ubar], oi_tensor(), Target::OI),
    ]);
    v
}

impl Presentation {
    /// Every registered presentation, in catalog order.
    pub fn all() -> Vec<Presentation> {
        registry()
    }

    pub fn ids() -> Vec<&'static str> {
        registry().iter().map(|p| p.id).collect()
    }

    pub fn by_id(id: &str) -> Result<Presentation, PresentationError> {
        registry()
            .into_iter()
            .find(|p| p.id.eq_ignore_ascii_case(id))
            .ok_or_else(|| PresentationError::UnknownPresentation(id.to_string()))
    }

    /// Tensor presentations whose targets have enumerable hom-sets, without δ.
    pub fn finite_tensor() -> Vec<Presentation> {
        registry()
            .into_iter()
            .filter(|p| p.level == Level::Tensor && !p.linear)
            .collect()
    }

    pub fn signature(&self) -> Signature {
        self.alphabet.sig
    }

    /// All relation instances at objects `min_object..=n_max` (tensor
    /// relations have fixed arity and ignore `n_max`).
    pub fn instances(&self, n_max: usize) -> Result<Vec<RelationInstance>, SchemaError> {
        let mut out = Vec::new();
        if self.level == Level::Tensor {
            for s in &self.schemas {
                out.extend(s.instantiate(0, &self.alphabet, &self.subst)?);
            }
            return Ok(out);
        }
        for n in self.alphabet.min_object..=n_max {
            for s in &self.schemas {
                for inst in s.instantiate(n, &self.alphabet, &self.subst)? {
                    let dup = out.iter().any(|o: &RelationInstance| {
                        (o.lhs == inst.lhs && o.rhs == inst.rhs) || (o.lhs == inst.rhs && o.rhs == inst.lhs)
                    });
                    if !dup {
                        out.push(inst);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Catalog dump, one relation per line.
    pub fn dump(&self, n_max: usize) -> Result<String, SchemaError> {
        let mut s = String::new();
        for inst in self.instances(n_max)? {
            s.push_str(&inst.dump_line());
            s.push('\n');
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_catalog_instantiates() {
        for p in Presentation::all() {
            let inst = p.instances(4).unwrap_or_else(|e| panic!("{}: {e}", p.id));
            assert!(!inst.is_empty(), "{} has no relations", p.id);
            for r in &inst {
                assert_eq!(
                    (r.lhs.term.dom(), r.lhs.term.cod()),
                    (r.rhs.term.dom(), r.rhs.term.cod()),
                    "{}",
                    r.dump_line()
                );
            }
        }
    }

    #[test]
    fn ids_are_unique_and_resolve() {
        let ids = Presentation::ids();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        assert_eq!(Presentation::by_id("b-tensor").unwrap().id, "B-tensor");
        assert!(Presentation::by_id("Q-tensor").is_err());
    }

    #[test]
    fn unit_relation_at_zero() {
        let p = Presentation::by_id("P-category").unwrap();
        let dump = p.dump(1).unwrap();
        assert!(dump.contains("P8 0 - - : l[0] ; r[0] == id[0]"), "{dump}");
        assert!(dump.contains("P8 0 - - : r[0] ; l[0] == e[1,1]"), "{dump}");
    }

    #[test]
    fn square_kernel_joins_transformation_catalogs() {
        let p = Presentation::by_id("PT-category").unwrap();
        let inst = p.instances(3).unwrap();
        assert!(inst
            .iter()
            .any(|r| r.lhs.to_string() == "s[1,2] ; s[1,2]" && r.rhs.to_string() == "id[2]"));
        assert!(inst
            .iter()
            .all(|r| r.lhs.term.generators().iter().all(|g| g.family() != SigmaInv)));
    }
}
