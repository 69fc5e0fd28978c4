//! Bounded checks with line-oriented reports.
//!
//! Every failing report carries a counterexample that can be re-evaluated on
//! its own with [`Counterexample::recheck`].

pub mod axioms;
pub mod counts;
pub mod joinability;
pub mod normal_forms;
pub mod scaffold;
pub mod soundness;
pub mod surjectivity;

pub use axioms::{check_axioms, check_linear_interchange, Law};
pub use counts::{check_counts, expected_count};
pub use joinability::{check_joinability, check_word_joinability, JoinBudget};
pub use normal_forms::{check_hat, check_oi_normal_form, oi_word};
pub use scaffold::{check_normalize, check_scaffold};
pub use soundness::{check_relations, check_shadow, check_soundness};
pub use surjectivity::check_surjectivity;

use crate::category::Morphism;
use crate::diagram::Partition;
use crate::free_cat::{evaluate_term, Interpretation, Term, Word};
use crate::linear::{Coeff, LinComb};
use crate::presentations::Target;
use crate::transform::PartialMap;
use crate::with_interpretation;
use std::fmt;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Budget,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Budget => "BUDGET",
        })
    }
}

/// A term multiplied by a power of δ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weighted {
    pub delta: u32,
    pub term: Term,
}

impl Weighted {
    pub fn plain(term: Term) -> Weighted {
        Weighted { delta: 0, term }
    }
}

impl fmt::Display for Weighted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.delta {
            0 => write!(f, "{}", self.term),
            1 => write!(f, "d*({})", self.term),
            k => write!(f, "d^{k}*({})", self.term),
        }
    }
}

/// Morphisms that can absorb a power of δ (only the linear ones can for `k > 0`).
pub trait DeltaScale: Morphism {
    fn times_delta(&self, k: u32) -> Option<Self>;
}

impl DeltaScale for Partition {
    fn times_delta(&self, k: u32) -> Option<Self> {
        (k == 0).then(|| self.clone())
    }
}

impl DeltaScale for PartialMap {
    fn times_delta(&self, k: u32) -> Option<Self> {
        (k == 0).then(|| self.clone())
    }
}

impl DeltaScale for LinComb {
    fn times_delta(&self, k: u32) -> Option<Self> {
        Some(self.scale(&Coeff::delta_pow(k as usize)))
    }
}

pub(crate) fn weighted_value<I>(w: &Weighted, interp: &I) -> Result<I::Mor, String>
where
    I: Interpretation,
    I::Mor: DeltaScale,
{
    let v = evaluate_term(&w.term, interp).map_err(|e| e.to_string())?;
    v.times_delta(w.delta)
        .ok_or_else(|| format!("a power of d has no meaning in {}", w.term))
}

/// Outcome of comparing two sides: `Ok(())` when equal, else both renderings.
pub(crate) fn compare_sides<I>(a: &Weighted, b: &Weighted, interp: &I) -> Result<(), String>
where
    I: Interpretation,
    I::Mor: DeltaScale,
{
    match (weighted_value(a, interp), weighted_value(b, interp)) {
        (Ok(x), Ok(y)) if x == y => Ok(()),
        (Ok(x), Ok(y)) => Err(format!("{x} vs {y}")),
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

/// Evidence attached to a failing report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// Two sides that should agree but evaluate differently.
    Unequal {
        target: Target,
        linear: bool,
        lhs: Weighted,
        rhs: Weighted,
        detail: String,
    },
    /// A morphism of the target that no generated term reached.
    Unreached { target: Target, element: String },
    /// Two terms with equal value that rewriting did not connect.
    Unjoined { target: Target, lhs: Term, rhs: Term },
    /// A law failing at concrete morphisms.
    Law { target: Target, law: Law, args: Vec<String> },
    /// An enumerated hom-set of the wrong size.
    Count {
        target: Target,
        m: usize,
        n: usize,
        enumerated: usize,
        expected: u128,
    },
    /// A hom-set whose emptiness disagrees with the grading of a scaffold.
    Grading { scaffold: &'static str, m: usize, n: usize },
    /// An identity that holds but is missing from a relation catalog.
    NotInCatalog { presentation: String, lhs: Word, rhs: Word },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Unequal { lhs, rhs, detail, .. } => write!(f, "{lhs} =/= {rhs} ({detail})"),
            Counterexample::Unreached { element, .. } => write!(f, "unreached {element}"),
            Counterexample::Unjoined { lhs, rhs, .. } => write!(f, "not joined: {lhs} ~ {rhs}"),
            Counterexample::Law { law, args, .. } => write!(f, "{law} fails at {}", args.join(", ")),
            Counterexample::Count {
                m, n, enumerated, expected, ..
            } => write!(f, "hom({m},{n}) has {enumerated}, expected {expected}"),
            Counterexample::Grading { scaffold, m, n } => write!(f, "{scaffold} grading wrong at hom({m},{n})"),
            Counterexample::NotInCatalog { presentation, lhs, rhs } => {
                write!(f, "{lhs} == {rhs} missing from {presentation}")
            }
        }
    }
}

impl Counterexample {
    /// Re-evaluate from scratch; `true` when the failure is genuine.
    pub fn recheck(&self) -> bool {
        match self {
            Counterexample::Unequal {
                target,
                linear,
                lhs,
                rhs,
                ..
            } => with_interpretation!(target, *linear, |i| compare_sides(lhs, rhs, &i).is_err()),
            Counterexample::Unreached { target, element } => surjectivity::is_genuine_element(*target, element),
            Counterexample::Unjoined { target, lhs, rhs } => {
                let (a, b) = (Weighted::plain(lhs.clone()), Weighted::plain(rhs.clone()));
                with_interpretation!(target, false, |i| compare_sides(&a, &b, &i).is_ok())
            }
            Counterexample::Law { target, law, args } => axioms::law_fails(*target, *law, args),
            Counterexample::Count {
                target, m, n, expected, ..
            } => counts::recount(*target, *m, *n) != Some(*expected),
            Counterexample::Grading { scaffold, m, n } => scaffold::grading_fails(scaffold, *m, *n),
            Counterexample::NotInCatalog { presentation, lhs, rhs } => {
                scaffold::catalog_lacks(presentation, lhs, rhs)
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub check: String,
    pub params: String,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub note: Option<String>,
    pub items: usize,
    pub elapsed: Duration,
}

impl Report {
    pub(crate) fn new(check: &str, params: String) -> Report {
        Report {
            check: check.to_string(),
            params,
            status: Status::Pass,
            counterexample: None,
            note: None,
            items: 0,
            elapsed: Duration::ZERO,
        }
    }

    pub(crate) fn fail(&mut self, c: Counterexample) {
        self.status = Status::Fail;
        if self.counterexample.is_none() {
            self.counterexample = Some(c);
        }
    }

    pub(crate) fn budget(&mut self, note: String) {
        if self.status == Status::Pass {
            self.status = Status::Budget;
            self.note = Some(note);
        }
    }

    pub(crate) fn timed(mut self, start: Instant) -> Report {
        self.elapsed = start.elapsed();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `PASS|FAIL|BUDGET <check-id> <params> [counterexample: ...]`.
    pub fn line(&self) -> String {
        let mut s = format!("{} {} {}", self.status, self.check, self.params);
        if let Some(c) = &self.counterexample {
            s.push_str(&format!(" [counterexample: {c}]"));
        } else if let Some(n) = &self.note {
            s.push_str(&format!(" [{n}]"));
        }
        s
    }

    /// The report line followed by its statistics.
    pub fn plain(&self) -> String {
        format!(
            "{}\n  items checked: {}, time: {:.3}s",
            self.line(),
            self.items,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Merge reports of one suite into a single verdict: any failure fails, any
/// budget exhaustion otherwise reports budget.
pub fn overall(reports: &[Report]) -> Status {
    if reports.iter().any(|r| r.status == Status::Fail) {
        Status::Fail
    } else if reports.iter().any(|r| r.status == Status::Budget) {
        Status::Budget
    } else {
        Status::Pass
    }
}
