//! The hat map: each generator of a category presentation as a layered term
//! over the edges of the matching tensor presentation.

use super::{Presentation, PresentationError, Reading};
use crate::free_cat::Term;
use crate::gen::{Gen, Signature};
use crate::transform::RhoStyle;

fn edge(g: Gen, sig: Signature) -> Term {
    Term::gen(g, sig).expect("nullary edges always type-check")
}

fn pair(a: Gen, b: Gen, sig: Signature) -> Term {
    Term::ten(vec![edge(a, sig), edge(b, sig)])
}

/// The tensor term `ŵ` for one edge `g` of the category presentation `p`.
pub fn hat_map(p: &Presentation, g: &Gen) -> Result<Term, PresentationError> {
    if !p.alphabet.contains(g) {
        return Err(PresentationError::UnknownEdge {
            category: p.id.to_string(),
            gen: *g,
        });
    }
    let sig = p.signature();
    let folds = matches!(p.target.reading(), Reading::Map(_, RhoStyle::Fold));
    let partition_like = matches!(p.target.reading(), Reading::Diagram(k) if k.step() == 1);
    let t = match *g {
        Gen::Sigma(i, n) => Term::whisker(i - 1, edge(Gen::X, sig), n - i - 1),
        Gen::SigmaInv(i, n) => Term::whisker(i - 1, edge(Gen::Xinv, sig), n - i - 1),
        Gen::Eps(i, n) => Term::whisker(i - 1, pair(Gen::U, Gen::Ubar, sig), n - i),
        Gen::Tau(i, n) if partition_like => Term::whisker(i - 1, edge(Gen::D, sig), n - i - 1),
        Gen::Tau(i, n) => Term::whisker(i - 1, pair(Gen::U, Gen::Ubar, sig), n - i - 1),
        Gen::Mu(i, n) => Term::whisker(i - 1, pair(Gen::V, Gen::Ubar, sig), n - i - 1),
        Gen::Eta(i, n) => Term::whisker(i - 1, pair(Gen::Ubar, Gen::V, sig), n - i - 1),
        Gen::Lambda(n) => Term::ten(vec![Term::id(n), edge(Gen::Ubar, sig)]),
        Gen::Rho(n) if folds => Term::ten(vec![Term::id(n - 1), edge(Gen::V, sig)]),
        Gen::Rho(n) => Term::ten(vec![Term::id(n), edge(Gen::U, sig)]),
        _ => {
            return Err(PresentationError::UnknownEdge {
                category: p.id.to_string(),
                gen: *g,
            })
        }
    };
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_cat::{evaluate_term, evaluate_word, DiagramSemantics, Word};
    use crate::diagram::DiagramKind;

    #[test]
    fn crossing_is_whiskered() {
        let p = Presentation::by_id("P-category").unwrap();
        let t = hat_map(&p, &Gen::Sigma(2, 4)).unwrap();
        assert_eq!(t.to_string(), "id[1] # X # id[1]");
        let e = hat_map(&p, &Gen::Eps(1, 1)).unwrap();
        assert_eq!(e.to_string(), "U # Uu");
    }

    #[test]
    fn fold_units_use_merge() {
        let v = Presentation::by_id("T-category").unwrap();
        assert_eq!(hat_map(&v, &Gen::Rho(3)).unwrap().to_string(), "id[2] # V");
        assert!(hat_map(&v, &Gen::Rho(0)).is_err());
    }

    #[test]
    fn brauer_cap_cup_matches_generator() {
        let p = Presentation::by_id("B-category").unwrap();
        let sem = DiagramSemantics { kind: DiagramKind::B };
        for g in [Gen::Tau(1, 3), Gen::Tau(2, 3), Gen::Lambda(1), Gen::Rho(0)] {
            let w = Word::new(Signature::PAIR, g.arity(Signature::PAIR).0, vec![g]).unwrap();
            assert_eq!(
                evaluate_term(&hat_map(&p, &g).unwrap(), &sem).unwrap(),
                evaluate_word(&w, &sem).unwrap()
            );
        }
    }
}
