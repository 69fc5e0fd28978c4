//! The normal form of order-preserving partial injections, and the hat map
//! from category words to tensor terms.

use super::{Counterexample, Report, Weighted};
use crate::category::Morphism;
use crate::free_cat::{evaluate_term, Interpretation, MapSemantics, Term, Word};
use crate::gen::{Gen, Signature};
use crate::presentations::{hat_map, Level, Presentation, Target};
use crate::transform::{enumerate_homset, MapKind, PartialMap, RhoStyle};
use crate::with_interpretation;
use std::time::Instant;

/// `Ū^{⊕p0} ⊕ U^{⊕q0} ⊕ id ⊕ Ū^{⊕p1} ⊕ U^{⊕q1} ⊕ id ⊕ ...` read off the
/// increasing defined pairs of `f`; between consecutive matched points the
/// skipped sources are cut with `U` and the skipped targets created with `Ū`.
pub fn oi_word(f: &PartialMap) -> Term {
    let sig = Signature::UNIT;
    let (m, n) = f.dims();
    let edge = |g: Gen| Term::gen(g, sig).expect("nullary edge");
    let mut parts = Vec::new();
    let (mut src, mut tgt) = (0, 0);
    let mut pairs: Vec<(usize, usize)> = (1..=m).filter_map(|x| f.apply(x).map(|y| (x, y))).collect();
    pairs.push((m + 1, n + 1));
    for (k, &(x, y)) in pairs.iter().enumerate() {
        parts.extend((src + 1..x).map(|_| edge(Gen::U)));
        parts.extend((tgt + 1..y).map(|_| edge(Gen::Ubar)));
        if k + 1 < pairs.len() {
            parts.push(Term::id(1));
        }
        (src, tgt) = (x, y);
    }
    Term::ten(parts)
}

/// Every `f` in `OI(m, n)` with `m, n <= max` is the value of [`oi_word`].
pub fn check_oi_normal_form(max: usize) -> Report {
    let start = Instant::now();
    let mut r = Report::new("oi-normal-form", format!("max={max}"));
    let interp = MapSemantics {
        rho: RhoStyle::Chop,
        kind: MapKind::OI,
    };
    for m in 0..=max {
        for n in 0..=max {
            let maps = match enumerate_homset(MapKind::OI, m, n) {
                Ok(h) => h,
                Err(e) => {
                    r.budget(e.to_string());
                    continue;
                }
            };
            for f in maps {
                r.items += 1;
                let t = oi_word(&f);
                if evaluate_term(&t, &interp).ok().as_ref() != Some(&f) {
                    r.fail(Counterexample::Unreached {
                        target: Target::OI,
                        element: f.to_string(),
                    });
                }
            }
        }
    }
    r.timed(start)
}

fn hat_dfs<I: Interpretation>(
    interp: &I,
    p: &Presentation,
    word: &mut Vec<Gen>,
    values: (I::Mor, I::Mor),
    start: usize,
    left: usize,
    max_object: usize,
    r: &mut Report,
) {
    r.items += 1;
    if values.0 != values.1 {
        let w = Word::new(p.signature(), start, word.clone()).expect("typed");
        let hats: Vec<Term> = word.iter().map(|g| hat_map(p, g).expect("edge")).collect();
        r.fail(Counterexample::Unequal {
            target: p.target,
            linear: p.linear,
            lhs: Weighted::plain(w.to_term()),
            rhs: Weighted::plain(Term::seq(hats).expect("typed")),
            detail: format!("{} vs {}", values.0, values.1),
        });
        return;
    }
    if left == 0 || r.counterexample.is_some() {
        return;
    }
    let sig = p.signature();
    let here = values.0.cod();
    for g in p.alphabet.edges_from(here) {
        if g.arity(sig).1 > max_object {
            continue;
        }
        let (Ok(direct), Ok(hat)) = (interp.image(&g), hat_map(p, &g)) else {
            continue;
        };
        let Ok(via) = evaluate_term(&hat, interp) else {
            continue;
        };
        let next = (values.0.then(&direct).expect("typed"), values.1.then(&via).expect("typed"));
        word.push(g);
        hat_dfs(interp, p, word, next, start, left - 1, max_object, r);
        word.pop();
    }
}

/// For a category presentation, every word of length at most `max_len` with
/// objects at most `max_object` has the same value as its hat image.
pub fn check_hat(p: &Presentation, max_len: usize, max_object: usize) -> Report {
    let start = Instant::now();
    let mut r = Report::new("hat", format!("{} max_len={max_len} max_object={max_object}", p.id));
    if p.level == Level::Tensor {
        r.status = super::Status::Fail;
        r.note = Some("needs a monoid or category presentation".into());
        return r;
    }
    for m in p.alphabet.min_object..=max_object {
        with_interpretation!(p.target, p.linear, |i| {
            let id = Morphism::identity(m);
            hat_dfs(&i, p, &mut Vec::new(), (Clone::clone(&id), id), m, max_len, max_object, &mut r)
        });
    }
    r.timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oi_words_by_hand() {
        let f = PartialMap::new(3, 2, &[None, Some(2), None]).unwrap();
        assert_eq!(oi_word(&f).to_string(), "U # Uu # id[1] # U");
        assert_eq!(oi_word(&PartialMap::identity(0)).to_string(), "id[0]");
    }

    #[test]
    fn oi_normal_form_small() {
        let r = check_oi_normal_form(3);
        assert!(r.passed(), "{}", r.line());
        let total: u128 = (0..=3)
            .flat_map(|m| (0..=3).map(move |n| crate::verify::expected_count(Target::OI, m, n)))
            .sum();
        assert_eq!(r.items as u128, total);
    }

    #[test]
    fn hat_on_small_categories() {
        for id in ["P-category", "B-linear-category", "T-category", "PO-monoid"] {
            let p = Presentation::by_id(id).unwrap();
            let r = check_hat(&p, 4, 3);
            assert!(r.passed(), "{}", r.line());
        }
    }
}
