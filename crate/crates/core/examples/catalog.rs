//! List the registered presentations, then print the relations of one.

use diagcat::presentations::Presentation;

fn main() {
    let id = std::env::args().nth(1).unwrap_or_else(|| "TL-tensor".to_string());
    for p in Presentation::all() {
        println!("{:<22} {:?} {}", p.id, p.level, p.target);
    }
    let p = Presentation::by_id(&id).expect("registered presentation");
    println!("\n{id}:");
    print!("{}", p.dump(3).expect("instances at rank 3"));
}
