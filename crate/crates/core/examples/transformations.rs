//! Partial maps between finite ordinals and the subcategories they form.

use diagcat::transform::{enumerate_homset, MapKind, PartialMap};

fn main() {
    let f = PartialMap::new(3, 2, &[Some(1), None, Some(2)]).expect("valid images");
    let g = PartialMap::new(2, 2, &[Some(2), Some(2)]).expect("valid images");
    let fg = f.compose(&g).expect("2 meets 2");
    println!("f = {f}, g = {g}");
    println!("f ; g = {fg}");
    println!("f # g = {}", f.tensor(&g));
    let kinds = [MapKind::PT, MapKind::T, MapKind::I, MapKind::PO, MapKind::O, MapKind::OI];
    for kind in kinds {
        let member: Vec<&str> = [("f", &f), ("g", &g), ("f;g", &fg)]
            .iter()
            .filter(|(_, h)| kind.contains(h))
            .map(|(name, _)| *name)
            .collect();
        let sizes: Vec<usize> = (0..=3).map(|n| enumerate_homset(kind, 3, n).map_or(0, |h| h.len())).collect();
        println!("{kind:?}: holds {member:?}, |hom(3, 0..=3)| = {sizes:?}");
    }
}
