//! One-sided normal forms of scaffold words and the normal form of
//! order-preserving partial injections.

use diagcat::free_cat::{evaluate_word, parse_term_in, DiagramSemantics, Word};
use diagcat::diagram::DiagramKind;
use diagcat::presentations::{normalize_one_sided, Scaffold};
use diagcat::transform::{enumerate_homset, MapKind};
use diagcat::verify::oi_word;

fn main() {
    let sc = Scaffold::by_id("P").expect("partition scaffold");
    let interp = DiagramSemantics { kind: DiagramKind::P };
    for text in ["r[2] ; s[1,2] ; l[2] ; r[2] ; r[1]", "l[0] ; e[1,1] ; r[0]"] {
        let t = parse_term_in(text, sc.sig).expect("scaffold word");
        let w = Word::from_term(&t, sc.sig).expect("a word");
        let nf = normalize_one_sided(&w, &sc, &interp, 100_000).expect("within budget");
        println!("{w}\n  -> {} ({:?})", nf.word(), nf.side);
        assert_eq!(evaluate_word(&nf.word(), &interp).ok(), evaluate_word(&w, &interp).ok());
    }
    println!();
    for f in enumerate_homset(MapKind::OI, 3, 2).expect("small hom-set") {
        println!("{f:<16} {}", oi_word(&f));
    }
}
