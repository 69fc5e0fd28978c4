//! Parse a string diagram term, put it in layers and evaluate it in every
//! category whose generators it uses.

use diagcat::free_cat::{evaluate_term, parse_term_in, Layered, Term};
use diagcat::presentations::Target;
use diagcat::with_interpretation;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "(Uu # X) ; (id[1] # U # id[1]) ; X".to_string());
    for target in [Target::P, Target::B, Target::TL, Target::PT, Target::I, Target::OI] {
        let term: Term = match parse_term_in(&text, target.signature()) {
            Ok(t) => t,
            Err(e) => {
                println!("{target}: {e}");
                continue;
            }
        };
        let layered = Layered::from_term(&term);
        let value = with_interpretation!(target, false, |i| evaluate_term(&term, &i).map(|v| v.to_string()));
        println!("{target}: {}", value.unwrap_or_else(|e| e.to_string()));
        println!("  layered   {layered}");
        println!("  canonical {} ({} in class)", layered.canonical(), layered.class().len());
    }
}
