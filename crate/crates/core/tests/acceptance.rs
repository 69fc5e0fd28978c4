//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! A criterion fails when any of its reports is not PASS (budget exhaustion
//! counts as failure here) or when it runs past its time limit.

use diagcat::diagram::Partition;
use diagcat::presentations::{Level, Presentation, Scaffold, Target};
use diagcat::verify::axioms::AxiomScale;
use diagcat::verify::{self, JoinBudget, Report, Status};
use std::process::ExitCode;
use std::time::{Duration, Instant};

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_reports(reports: Vec<Report>) -> Outcome {
    let items: usize = reports.iter().map(|r| r.items).sum();
    match reports.iter().find(|r| r.status != Status::Pass) {
        Some(bad) => Outcome {
            ok: false,
            detail: bad.line(),
        },
        None => Outcome {
            ok: true,
            detail: format!("{} reports, {} items", reports.len(), items),
        },
    }
}

fn figure_one() -> Outcome {
    let upper = Partition::make(
        6,
        8,
        &[vec![1, 4], vec![2, 3, -4, -5], vec![5, 6], vec![-1, -2, -6], vec![-3], vec![-7, -8]],
    )
    .expect("upper diagram");
    let lower = Partition::make(
        8,
        7,
        &[
            vec![1, 2],
            vec![3, 4, -1],
            vec![5, -4, -5],
            vec![8, -6, -7],
            vec![6],
            vec![7],
            vec![-2],
            vec![-3],
        ],
    )
    .expect("lower diagram");
    let expected = Partition::make(
        6,
        7,
        &[vec![1, 4], vec![2, 3, -1, -4, -5], vec![5, 6], vec![-2], vec![-3], vec![-6, -7]],
    )
    .expect("product diagram");
    let (got, floating) = upper.compose(&lower).expect("shapes agree");
    Outcome {
        ok: got == expected && floating == 1,
        detail: format!("{got} floating={floating}"),
    }
}

fn plain_catalogs() -> Vec<Presentation> {
    Presentation::all()
        .into_iter()
        .filter(|p| !p.linear && !matches!(p.target, Target::ShadowPV | Target::ShadowIB | Target::ShadowV))
        .collect()
}

fn soundness() -> Outcome {
    from_reports(plain_catalogs().iter().map(|p| verify::check_soundness(p, 6)).collect())
}

fn linear_soundness() -> Outcome {
    let ps = Presentation::all().into_iter().filter(|p| p.linear);
    from_reports(ps.map(|p| verify::check_soundness(&p, 5)).collect())
}

fn shadow_soundness() -> Outcome {
    let ps = Presentation::all()
        .into_iter()
        .filter(|p| matches!(p.target, Target::ShadowPV | Target::ShadowIB | Target::ShadowV));
    from_reports(ps.map(|p| verify::check_shadow(&p, 5)).collect())
}

fn counts() -> Outcome {
    let mut reports = Vec::new();
    let mut sweep = |t: Target, keep: &dyn Fn(usize, usize) -> bool, bound: usize| {
        for m in 0..=bound {
            for n in 0..=bound {
                if keep(m, n) {
                    reports.push(verify::check_counts(t, m, n));
                }
            }
        }
    };
    sweep(Target::P, &|m, n| m + n <= 8, 8);
    sweep(Target::B, &|m, n| m + n <= 10 && (m + n) % 2 == 0, 10);
    sweep(Target::TL, &|m, n| m + n <= 16 && (m + n) % 2 == 0, 16);
    for t in [Target::PT, Target::T, Target::I, Target::PO, Target::O, Target::OI] {
        sweep(t, &|_, _| true, 4);
    }
    let spot = [
        (Target::P, 2, 2, 15),
        (Target::P, 3, 3, 203),
        (Target::B, 3, 3, 15),
        (Target::TL, 4, 4, 14),
        (Target::PT, 2, 2, 9),
        (Target::T, 2, 2, 4),
        (Target::I, 2, 2, 7),
        (Target::PO, 2, 2, 8),
        (Target::O, 2, 2, 3),
        (Target::OI, 2, 2, 6),
    ];
    let mut out = from_reports(reports);
    for (t, m, n, want) in spot {
        let r = verify::check_counts(t, m, n);
        if r.items != want {
            out = Outcome {
                ok: false,
                detail: format!("{t} hom({m},{n}) has {} not {want}", r.items),
            };
        }
    }
    out
}

fn tensor_catalogs() -> Vec<Presentation> {
    plain_catalogs().into_iter().filter(|p| p.level == Level::Tensor).collect()
}

fn surjectivity() -> Outcome {
    let mut reports = Vec::new();
    for p in tensor_catalogs() {
        let bound = if matches!(p.target, Target::TL | Target::OI) { 4 } else { 3 };
        for m in 0..=bound {
            for n in 0..=bound {
                reports.push(verify::check_surjectivity(&p, m, n, 16, None));
            }
        }
    }
    from_reports(reports)
}

fn joinability() -> Outcome {
    let mut reports = Vec::new();
    for p in tensor_catalogs() {
        for m in 0..=2 {
            for n in 0..=2 {
                reports.push(verify::check_joinability(&p, m, n, JoinBudget::new(6, 12)));
            }
        }
    }
    from_reports(reports)
}

fn scaffolds() -> Outcome {
    let mut reports = Vec::new();
    for sc in Scaffold::all() {
        reports.push(verify::check_scaffold(&sc, 5));
        reports.push(verify::check_normalize(&sc, 1000, 6));
    }
    from_reports(reports)
}

fn axioms() -> Outcome {
    let reports: Vec<Report> = Target::ALL
        .into_iter()
        .filter(|t| !matches!(t, Target::ShadowPV | Target::ShadowIB | Target::ShadowV))
        .map(|t| verify::check_axioms(t, AxiomScale::DEFAULT))
        .collect();
    from_reports(reports)
}

fn oi_normal_form() -> Outcome {
    from_reports(vec![verify::check_oi_normal_form(5)])
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 10] = [
        ("1 figure-one-composite", Duration::from_millis(1), figure_one),
        ("2 relation-soundness", Duration::from_secs(10), soundness),
        ("3 linear-soundness", Duration::from_secs(10), linear_soundness),
        ("4 shadow-soundness", Duration::from_secs(10), shadow_soundness),
        ("5 hom-set-counts", Duration::from_secs(30), counts),
        ("6 surjectivity", Duration::from_secs(120), surjectivity),
        ("7 bounded-joinability", Duration::from_secs(300), joinability),
        ("8 scaffold-suite", Duration::from_secs(120), scaffolds),
        ("9 axiom-suite", Duration::from_secs(60), axioms),
        ("10 oi-normal-form", Duration::from_secs(5), oi_normal_form),
    ];
    let only: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, limit, run) in criteria {
        if !only.is_empty() && !only.iter().any(|o| name.contains(o.as_str())) {
            continue;
        }
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let ok = out.ok && took <= limit;
        if !ok {
            failed += 1;
        }
        println!(
            "{} {name} ({:.3}s, limit {}s) {}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            limit.as_secs_f64(),
            out.detail
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
