//! Run a handful of bounded checks and print their report lines.

use diagcat::presentations::{Presentation, Scaffold, Target};
use diagcat::verify::{self, JoinBudget};

fn main() {
    let tl = Presentation::by_id("TL-tensor").expect("registered");
    let reports = vec![
        verify::check_soundness(&tl, 4),
        verify::check_counts(Target::TL, 3, 3),
        verify::check_surjectivity(&tl, 2, 2, 8, None),
        verify::check_joinability(&tl, 1, 1, JoinBudget::new(4, 8)),
        verify::check_scaffold(&Scaffold::by_id("TL").expect("scaffold"), 4),
        verify::check_oi_normal_form(3),
        verify::check_hat(&Presentation::by_id("TL-category").expect("registered"), 3, 3),
    ];
    for r in &reports {
        println!("{}", r.line());
    }
    println!("overall: {}", verify::overall(&reports));
}
