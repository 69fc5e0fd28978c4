//! Catalog-wide checks at small bounds.

use diagcat::diagram::DiagramKind;
use diagcat::presentations::{Level, Presentation, Scaffold, Target};
use diagcat::verify::{self, JoinBudget, Report, Status};

fn shadow(t: Target) -> bool {
    matches!(t, Target::ShadowPV | Target::ShadowIB | Target::ShadowV)
}

fn assert_pass(r: &Report) {
    assert!(r.passed(), "{}", r.line());
}

#[test]
fn every_presentation_sound_at_small_rank() {
    for p in Presentation::all() {
        let r = if shadow(p.target) {
            verify::check_shadow(&p, 3)
        } else {
            verify::check_soundness(&p, 3)
        };
        assert_pass(&r);
        assert!(r.items > 0, "{} checked nothing", p.id);
    }
}

#[test]
fn dumps_are_deterministic() {
    for id in Presentation::ids() {
        let p = Presentation::by_id(id).unwrap();
        let a = p.dump(3).unwrap();
        let b = Presentation::by_id(id).unwrap().dump(3).unwrap();
        assert_eq!(a, b, "{id}");
    }
}

#[test]
fn hat_map_preserves_values() {
    for p in Presentation::all() {
        if p.level == Level::Tensor || shadow(p.target) {
            continue;
        }
        assert_pass(&verify::check_hat(&p, 3, 3));
    }
}

#[test]
fn category_words_join() {
    for id in ["P-category", "B-category", "TL-category", "I-category"] {
        let p = Presentation::by_id(id).unwrap();
        for (m, n) in [(1, 1), (2, 1), (2, 2)] {
            let r = verify::check_word_joinability(&p, m, n, JoinBudget::new(3, 8));
            assert_ne!(r.status, Status::Fail, "{}", r.line());
        }
    }
}

#[test]
fn surjectivity_is_monotone_in_size() {
    let p = Presentation::by_id("TL-tensor").unwrap();
    for (m, n) in [(0, 2), (2, 2), (1, 3)] {
        let small = verify::check_surjectivity(&p, m, n, 6, None);
        let large = verify::check_surjectivity(&p, m, n, 10, None);
        if small.passed() {
            assert_pass(&large);
        }
        assert_ne!(large.status, Status::Fail, "{}", large.line());
    }
}

#[test]
fn joinability_is_monotone_in_depth() {
    let p = Presentation::by_id("B-tensor").unwrap();
    for (m, n) in [(1, 1), (2, 0), (2, 2)] {
        let shallow = verify::check_joinability(&p, m, n, JoinBudget::new(4, 2));
        let deep = verify::check_joinability(&p, m, n, JoinBudget::new(4, 8));
        assert_ne!(shallow.status, Status::Fail, "{}", shallow.line());
        if shallow.passed() {
            assert_pass(&deep);
        }
    }
}

#[test]
fn scaffolds_hold_at_small_rank() {
    for sc in Scaffold::all() {
        assert_pass(&verify::check_scaffold(&sc, 3));
    }
}

#[test]
fn linear_interchange_smoke() {
    for kind in [DiagramKind::P, DiagramKind::B, DiagramKind::TL] {
        let a = verify::check_linear_interchange(kind, 7, 50);
        let b = verify::check_linear_interchange(kind, 7, 50);
        assert_pass(&a);
        assert_eq!(a.line(), b.line());
    }
}
