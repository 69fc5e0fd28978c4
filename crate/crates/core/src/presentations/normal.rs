//! Unit paths, the maps into endo-homs, and one-sided normal forms
//! `w ∼ λ_{m,n} s` (`m <= n`) or `w ∼ t ρ_{m,n}` (`m > n`).

use super::scaffold::Scaffold;
use super::PresentationError;
use crate::category::Morphism;
use crate::free_cat::{evaluate_word, EvalError, Interpretation, Word};
use crate::gen::{Gen, Signature};
use std::any::Any;
use std::collections::{HashMap, VecDeque};
use std::fmt::Debug;
use std::sync::{Arc, Mutex, OnceLock};

fn grading(from: usize, to: usize, step: usize) -> PresentationError {
    PresentationError::BadGrading { from, to, step }
}

/// `λ_{m,n} = λ_m λ_{m+d} ... λ_{n-d}`.
pub fn lambda_word(sig: Signature, m: usize, n: usize) -> Result<Word, PresentationError> {
    let d = sig.step;
    if m > n || (n - m) % d != 0 {
        return Err(grading(m, n, d));
    }
    let letters = (m..n).step_by(d).map(Gen::Lambda).collect();
    Ok(Word::new(sig, m, letters).expect("unit path is well typed"))
}

/// `ρ_{n,m} = ρ_{n-d} ρ_{n-2d} ... ρ_m`.
pub fn rho_word(sig: Signature, n: usize, m: usize) -> Result<Word, PresentationError> {
    let d = sig.step;
    if m > n || (n - m) % d != 0 {
        return Err(grading(n, m, d));
    }
    let letters = (m..n).step_by(d).rev().map(Gen::Rho).collect();
    Ok(Word::new(sig, n, letters).expect("unit path is well typed"))
}

fn eval<I: Interpretation>(w: &Word, interp: &I) -> Result<I::Mor, PresentationError> {
    evaluate_word(w, interp).map_err(|e: EvalError| PresentationError::DescendFailure(e.to_string()))
}

/// `a ↦ ρ̄_{n,m} a` for `a: m -> n` with `m <= n`.
pub fn to_endo_right<I: Interpretation>(a: &I::Mor, interp: &I) -> Result<I::Mor, PresentationError> {
    let (m, n) = (a.dom(), a.cod());
    let r = eval(&rho_word(interp.signature(), n, m)?, interp)?;
    Ok(r.then(a).expect("graded shapes agree"))
}

/// `a ↦ a λ̄_{m,n}` for `a: n -> m` with `m <= n`.
pub fn to_endo_left<I: Interpretation>(a: &I::Mor, interp: &I) -> Result<I::Mor, PresentationError> {
    let (n, m) = (a.dom(), a.cod());
    let l = eval(&lambda_word(interp.signature(), m, n)?, interp)?;
    Ok(a.then(&l).expect("graded shapes agree"))
}

type Table<M> = HashMap<M, Word>;

fn memo() -> &'static Mutex<HashMap<String, Arc<dyn Any + Send + Sync>>> {
    static MEMO: OnceLock<Mutex<HashMap<String, Arc<dyn Any + Send + Sync>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shortest words over `letters` (all in the endo-hom of `n`) for every
/// reachable element, found breadth first.
fn word_table<I>(interp: &I, letters: &[Gen], n: usize, budget: usize) -> Result<Arc<Table<I::Mor>>, PresentationError>
where
    I: Interpretation + Debug,
    I::Mor: Send + Sync + 'static,
{
    let key = format!("{interp:?}|{letters:?}|{n}");
    if let Some(t) = memo().lock().expect("memo lock").get(&key) {
        if let Ok(t) = Arc::clone(t).downcast::<Table<I::Mor>>() {
            return Ok(t);
        }
    }
    let sig = interp.signature();
    let images: Vec<(Gen, I::Mor)> = letters
        .iter()
        .filter_map(|g| interp.image(g).ok().map(|x| (*g, x)))
        .collect();
    let mut table: Table<I::Mor> = HashMap::new();
    let start = I::Mor::identity(n);
    table.insert(start.clone(), Word::empty(sig, n));
    let mut queue = VecDeque::from([start]);
    while let Some(a) = queue.pop_front() {
        for (g, x) in &images {
            let b = a.then(x).expect("endo letters compose");
            if !table.contains_key(&b) {
                if table.len() >= budget {
                    return Err(PresentationError::BudgetExceeded(budget));
                }
                let mut w = table[&a].letters().to_vec();
                w.push(*g);
                table.insert(b.clone(), Word::new(sig, n, w).expect("endo word"));
                queue.push_back(b);
            }
        }
    }
    let t = Arc::new(table);
    memo()
        .lock()
        .expect("memo lock")
        .insert(key, t.clone() as Arc<dyn Any + Send + Sync>);
    Ok(t)
}

pub const DEFAULT_WORD_BUDGET: usize = 500_000;

/// A word over `letters` evaluating to `element`, an endomorphism of `n`.
pub fn monoid_word_for<I>(
    element: &I::Mor,
    interp: &I,
    letters: &[Gen],
    budget: usize,
) -> Result<Word, PresentationError>
where
    I: Interpretation + Debug,
    I::Mor: Send + Sync + 'static,
{
    let n = element.dom();
    let table = word_table(interp, letters, n, budget)?;
    table
        .get(element)
        .cloned()
        .ok_or_else(|| PresentationError::DescendFailure(element.to_string()))
}

/// Which unit path the normal form uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OneSided {
    /// `λ_{m,n} · core`, core in `X_n*`.
    LeftLambda,
    /// `core · ρ_{m,n}`, core in `X_m*`.
    RightRho,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub side: OneSided,
    pub core: Word,
    pub units: Word,
    pub trace: Vec<String>,
}

impl Normalized {
    /// The normal form as a single word.
    pub fn word(&self) -> Word {
        match self.side {
            OneSided::LeftLambda => self.units.then(&self.core),
            OneSided::RightRho => self.core.then(&self.units),
        }
        .expect("normal form is composable")
    }
}

enum State {
    /// prefix ∼ λ_{m,q} s
    Left { q: usize, s: Word },
    /// prefix ∼ t ρ_{m,q}, with m > q
    Right { q: usize, t: Word },
}

/// Rewrite `w` into one-sided form, letter by letter.
///
/// Letters of `X` are pushed through `ρ` with `x⁺`; `λ` is absorbed with
/// `x₊` or by `ρλ = w`; a `ρ` after `λ s` is removed by replacing `λ s ρ` with
/// a word found from its value.
pub fn normalize_one_sided<I>(w: &Word, scaffold: &Scaffold, interp: &I, budget: usize) -> Result<Normalized, PresentationError>
where
    I: Interpretation + Debug,
    I::Mor: Send + Sync + 'static,
{
    let sig = scaffold.sig;
    let d = scaffold.step();
    let m = w.dom();
    let cat = |a: &Word, b: &Word| a.then(b).expect("normal form pieces compose");
    let mut trace = Vec::new();
    let mut state = State::Left {
        q: m,
        s: Word::empty(sig, m),
    };
    for x in w.letters() {
        state = match (state, *x) {
            (State::Left { q, s }, Gen::Lambda(_)) => {
                let lifted = scaffold.plus_lower_word(&s);
                trace.push(format!("{s} ; l[{q}] -> l[{q}] ; {lifted}"));
                State::Left { q: q + d, s: lifted }
            }
            (State::Right { q, t }, Gen::Lambda(_)) => {
                let wq = scaffold.w(q);
                trace.push(format!("r[{q}] ; l[{q}] -> {wq}"));
                let k = (m - q - d) / d;
                let moved = scaffold.plus_upper_word(&wq, k);
                if k > 0 {
                    trace.push(format!("push {wq} left through {k} unit(s): {moved}"));
                }
                let t = cat(&t, &moved);
                if q + d == m {
                    State::Left { q: m, s: t }
                } else {
                    State::Right { q: q + d, t }
                }
            }
            (State::Left { q, s }, Gen::Rho(_)) if q == m => {
                trace.push(format!("start right form at r[{}]", q - d));
                State::Right { q: q - d, t: s }
            }
            (State::Left { q, s }, Gen::Rho(_)) => {
                let p = q - d;
                let inner = Word::new(sig, p, vec![Gen::Lambda(p)])
                    .and_then(|l| l.then(&s))
                    .and_then(|ls| ls.then(&Word::new(sig, q, vec![Gen::Rho(p)])?))
                    .expect("descend word is well typed");
                let value = eval(&inner, interp)?;
                let u = monoid_word_for(&value, interp, &scaffold.letters_at(p), budget)?;
                trace.push(format!("{inner} -> {u}"));
                State::Left { q: p, s: u }
            }
            (State::Right { q, t }, Gen::Rho(_)) => State::Right { q: q - d, t },
            (State::Left { q, s }, g) => {
                let x = Word::new(sig, q, vec![g]).map_err(|e| PresentationError::DescendFailure(e.to_string()))?;
                State::Left { q, s: cat(&s, &x) }
            }
            (State::Right { q, t }, g) => {
                let x = Word::new(sig, q, vec![g]).map_err(|e| PresentationError::DescendFailure(e.to_string()))?;
                let k = (m - q) / d;
                let moved = scaffold.plus_upper_word(&x, k);
                trace.push(format!("r-path ; {x} -> {moved} ; r-path"));
                State::Right { q, t: cat(&t, &moved) }
            }
        };
    }
    Ok(match state {
        State::Left { q, s } => Normalized {
            side: OneSided::LeftLambda,
            units: lambda_word(sig, m, q)?,
            core: s,
            trace,
        },
        State::Right { q, t } => Normalized {
            side: OneSided::RightRho,
            units: rho_word(sig, m, q)?,
            core: t,
            trace,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{DiagramKind, Partition};
    use crate::free_cat::DiagramSemantics;

    const P: DiagramSemantics = DiagramSemantics { kind: DiagramKind::P };

    #[test]
    fn unit_paths() {
        let l = lambda_word(Signature::UNIT, 1, 3).unwrap();
        assert_eq!(l.to_string(), "l[1] ; l[2]");
        assert!(lambda_word(Signature::UNIT, 2, 2).unwrap().is_empty());
        assert_eq!(rho_word(Signature::PAIR, 4, 0).unwrap().to_string(), "r[2] ; r[0]");
        assert!(lambda_word(Signature::PAIR, 0, 3).is_err());
    }

    #[test]
    fn endo_maps_of_units() {
        let ubar = Partition::make(0, 1, &[vec![-1]]).unwrap();
        let eps = Partition::make(1, 1, &[vec![1], vec![-1]]).unwrap();
        assert_eq!(to_endo_right(&ubar, &P).unwrap(), eps);
        let u = Partition::make(1, 0, &[vec![1]]).unwrap();
        assert_eq!(to_endo_left(&u, &P).unwrap(), eps);
        assert_eq!(to_endo_right(&Partition::identity(2), &P).unwrap(), Partition::identity(2));
    }

    #[test]
    fn breadth_first_words() {
        let letters = vec![Gen::Sigma(1, 2), Gen::Eps(1, 2), Gen::Eps(2, 2), Gen::Tau(1, 2)];
        let e = evaluate_word(&Word::new(Signature::UNIT, 2, vec![Gen::Eps(1, 2)]).unwrap(), &P).unwrap();
        let w = monoid_word_for(&e, &P, &letters, 1000).unwrap();
        assert_eq!(w.to_string(), "e[1,2]");
        let id = monoid_word_for(&Partition::identity(2), &P, &letters, 1000).unwrap();
        assert!(id.is_empty());
        let all = Partition::make(2, 2, &[vec![1, 2, -1, -2]]).unwrap();
        let w = monoid_word_for(&all, &P, &letters, 1000).unwrap();
        assert_eq!(evaluate_word(&w, &P).unwrap(), all);
    }

    #[test]
    fn descend_through_singleton() {
        let sc = Scaffold::by_id("P").unwrap();
        let w = Word::new(Signature::UNIT, 0, vec![Gen::Lambda(0), Gen::Eps(1, 1), Gen::Rho(0)]).unwrap();
        let nf = normalize_one_sided(&w, &sc, &P, 1000).unwrap();
        assert_eq!(nf.side, OneSided::LeftLambda);
        assert!(nf.core.is_empty());
        assert_eq!(evaluate_word(&nf.word(), &P).unwrap(), Partition::identity(0));
    }

    #[test]
    fn right_form_pushes_letters() {
        let sc = Scaffold::by_id("P").unwrap();
        let w = Word::new(
            Signature::UNIT,
            3,
            vec![Gen::Rho(2), Gen::Sigma(1, 2), Gen::Lambda(2), Gen::Rho(2), Gen::Rho(1)],
        )
        .unwrap();
        let nf = normalize_one_sided(&w, &sc, &P, 10_000).unwrap();
        assert_eq!(nf.side, OneSided::RightRho);
        assert_eq!(nf.core.dom(), 3);
        assert!(nf.core.letters().iter().all(|g| g.arity(Signature::UNIT) == (3, 3)));
        assert_eq!(evaluate_word(&nf.word(), &P).unwrap(), evaluate_word(&w, &P).unwrap());
    }
}
