//! Both sides of every relation instance evaluate to the same morphism.

use super::{compare_sides, Counterexample, Report, Weighted};
use crate::presentations::{Presentation, RelationInstance, Target};
use crate::with_interpretation;
use std::time::Instant;

fn weighted(s: &crate::presentations::Side) -> Weighted {
    Weighted {
        delta: s.delta,
        term: s.term.clone(),
    }
}

/// Evaluate an explicit list of relations in `target`.
pub fn check_relations(check: &str, params: String, target: Target, linear: bool, rels: &[RelationInstance]) -> Report {
    let start = Instant::now();
    let mut report = Report::new(check, params);
    with_interpretation!(target, linear, |interp| {
        for r in rels {
            report.items += 1;
            let (a, b) = (weighted(&r.lhs), weighted(&r.rhs));
            if let Err(detail) = compare_sides(&a, &b, &interp) {
                report.fail(Counterexample::Unequal {
                    target,
                    linear,
                    lhs: a,
                    rhs: b,
                    detail: format!("{}: {detail}", r.id),
                });
            }
        }
    });
    report.timed(start)
}

/// Every instance of `p` with objects up to `n_max`.
pub fn check_soundness(p: &Presentation, n_max: usize) -> Report {
    let params = format!("{} n_max={}", p.id, n_max);
    match p.instances(n_max) {
        Ok(rels) => check_relations("soundness", params, p.target, p.linear, &rels),
        Err(e) => {
            let mut r = Report::new("soundness", params);
            r.status = super::Status::Fail;
            r.note = Some(e.to_string());
            r
        }
    }
}

/// The braid and vine catalogs read through their endpoint maps.
pub fn check_shadow(p: &Presentation, n_max: usize) -> Report {
    let mut r = check_soundness(p, n_max);
    r.check = "shadow".to_string();
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_cat::parse_term;
    use crate::presentations::Side;

    #[test]
    fn partition_tensor_relations_hold() {
        let p = Presentation::by_id("P-tensor").unwrap();
        let r = check_soundness(&p, 0);
        assert!(r.passed(), "{}", r.line());
        assert!(r.items >= 10);
    }

    #[test]
    fn corrupted_relation_is_caught() {
        let side = |s: &str| Side {
            delta: 0,
            word: None,
            term: parse_term(s).unwrap(),
        };
        let bad = RelationInstance {
            id: "bad".into(),
            n: None,
            i: None,
            j: None,
            lhs: side("X ; X"),
            rhs: side("X"),
        };
        let r = check_relations("soundness", "bad".into(), Target::P, false, &[bad]);
        assert_eq!(r.status, crate::verify::Status::Fail);
        assert!(r.counterexample.as_ref().unwrap().recheck());
        assert!(r.line().starts_with("FAIL soundness bad [counterexample: X ; X =/= X"));
    }

    #[test]
    fn vine_catalog_under_total_maps() {
        let p = Presentation::by_id("V-tensor").unwrap();
        assert!(check_soundness(&p, 5).passed());
    }
}
