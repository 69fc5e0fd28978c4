//! Stack two partition diagrams and count the components lost in the middle.

use diagcat::diagram::{DiagramKind, Partition};

fn main() {
    let upper = Partition::make(
        6,
        8,
        &[vec![1, 4], vec![2, 3, -4, -5], vec![5, 6], vec![-1, -2, -6], vec![-3], vec![-7, -8]],
    )
    .expect("upper diagram");
    let lower = Partition::make(
        8,
        7,
        &[vec![1, 2], vec![3, 4, -1], vec![5, -4, -5], vec![8, -6, -7], vec![6], vec![7], vec![-2], vec![-3]],
    )
    .expect("lower diagram");
    let (product, floating) = upper.compose(&lower).expect("8 points meet 8 points");
    println!("upper    {upper}");
    println!("lower    {lower}");
    println!("product  {product}");
    println!("floating {floating}");
    println!("adjoint  {}", product.involute());
    for kind in [DiagramKind::P, DiagramKind::B, DiagramKind::TL] {
        println!("{kind:?} contains product: {}", kind.contains(&product));
    }
}
