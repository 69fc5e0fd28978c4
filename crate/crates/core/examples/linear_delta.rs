//! Linear combinations of diagrams, where each floating component costs a
//! factor of the loop parameter.

use diagcat::diagram::Partition;
use diagcat::linear::{Coeff, LinComb};
use num_rational::BigRational;

fn main() {
    // the cap-cup on two strands squares to a loop times itself
    let e = Partition::make(2, 2, &[vec![1, 2], vec![-1, -2]]).expect("cap-cup");
    let e2 = LinComb::basis(e.clone()).star_compose(&LinComb::basis(e.clone())).expect("2 -> 2");
    println!("e ; e = {e2}");

    let x = Partition::make(2, 2, &[vec![1, -2], vec![2, -1]]).expect("crossing");
    let sum = LinComb::basis(Partition::identity(2))
        .add(&LinComb::term(Coeff::int(-2), x))
        .expect("same shape");
    let sq = sum.star_compose(&sum).expect("2 -> 2");
    println!("(1 - 2x)^2 = {sq}");

    let cap_cup = LinComb::basis(e);
    let prod = cap_cup.star_compose(&sum).and_then(|p| p.star_compose(&cap_cup)).expect("2 -> 2");
    println!("e ; (1 - 2x) ; e = {prod}");
    for d in [-1, 0, 2] {
        let at = prod.at(&BigRational::from_integer(d.into()));
        let rendered: Vec<String> = at.iter().map(|(p, c)| format!("{c}*{p}")).collect();
        let shown = if rendered.is_empty() { "0".to_string() } else { rendered.join(" + ") };
        println!("  at delta = {d}: {shown}");
    }
}
