//! Property tests for the algebraic invariants, each against a direct oracle.

use diagcat::category::Morphism;
use diagcat::diagram::{enumerate_homset, DiagramKind, Partition};
use diagcat::free_cat::{evaluate_layered, evaluate_term, parse_term_in, DiagramSemantics, Layer, Layered};
use diagcat::gen::{Gen, Signature};
use diagcat::linear::{Coeff, LinComb};
use diagcat::presentations::{RelationInstance, Side, Target};
use diagcat::transform::{self, MapKind, PartialMap};
use diagcat::verify::check_relations;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::sample::select;

fn from_labels(m: usize, n: usize, labels: &[usize]) -> Partition {
    let mut blocks: Vec<Vec<i64>> = vec![Vec::new(); m + n];
    for (k, &l) in labels.iter().enumerate() {
        let point = if k < m { k as i64 + 1 } else { -((k - m) as i64 + 1) };
        blocks[l].push(point);
    }
    blocks.retain(|b| !b.is_empty());
    Partition::make(m, n, &blocks).expect("every point labelled once")
}

fn labels(points: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..points.max(1), points)
}

fn partition(m: usize, n: usize) -> impl Strategy<Value = Partition> {
    labels(m + n).prop_map(move |l| from_labels(m, n, &l))
}

/// Three composable partitions `m -> n -> q -> r`.
fn chain3() -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (0..4usize, 0..4usize, 0..4usize, 0..4usize)
        .prop_flat_map(|(m, n, q, r)| (partition(m, n), partition(n, q), partition(q, r)))
}

/// Composition by explicit graph search on the stacked vertex set.
fn naive_compose(a: &Partition, b: &Partition) -> (Partition, usize) {
    let (m, n, q) = (a.upper(), a.lower(), b.lower());
    // vertices: upper of a = 0..m, middle = m..m+n, lower of b = m+n..m+n+q
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let vertex_a = |p: i64| if p > 0 { p as usize - 1 } else { m + (-p) as usize - 1 };
    let vertex_b = |p: i64| if p > 0 { m + p as usize - 1 } else { m + n + (-p) as usize - 1 };
    for block in a.blocks() {
        for w in block.windows(2) {
            edges.push((vertex_a(w[0]), vertex_a(w[1])));
        }
    }
    for block in b.blocks() {
        for w in block.windows(2) {
            edges.push((vertex_b(w[0]), vertex_b(w[1])));
        }
    }
    let total = m + n + q;
    let mut comp: Vec<usize> = (0..total).collect();
    loop {
        let mut changed = false;
        for &(x, y) in &edges {
            let c = comp[x].min(comp[y]);
            if comp[x] != c || comp[y] != c {
                comp[x] = c;
                comp[y] = c;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut floating = 0;
    let mut blocks: Vec<Vec<i64>> = Vec::new();
    let mut roots: Vec<usize> = comp.clone();
    roots.sort();
    roots.dedup();
    for root in roots {
        let members: Vec<usize> = (0..total).filter(|&v| comp[v] == root).collect();
        let outer: Vec<i64> = members
            .iter()
            .filter_map(|&v| {
                if v < m {
                    Some(v as i64 + 1)
                } else if v >= m + n {
                    Some(-((v - m - n) as i64 + 1))
                } else {
                    None
                }
            })
            .collect();
        if outer.is_empty() {
            floating += 1;
        } else {
            blocks.push(outer);
        }
    }
    (Partition::make(m, q, &blocks).expect("oracle blocks"), floating)
}

fn sampled(kind: DiagramKind, m: usize, n: usize) -> BoxedStrategy<Partition> {
    let h = enumerate_homset(kind, m, n).expect("small hom-set");
    if h.is_empty() {
        Just(Partition::identity(0)).boxed()
    } else {
        select(h).boxed()
    }
}

fn map(kind: MapKind, m: usize, n: usize) -> BoxedStrategy<PartialMap> {
    let h = transform::enumerate_homset(kind, m, n).expect("small hom-set");
    if h.is_empty() {
        Just(PartialMap::identity(0)).boxed()
    } else {
        select(h).boxed()
    }
}

const EDGES: [Gen; 4] = [Gen::X, Gen::D, Gen::U, Gen::Ubar];

/// A layered term over the partition edges, from `dom`, of `len` layers.
fn layered(dom: usize, choices: &[(usize, usize)]) -> Layered {
    let sig = Signature::UNIT;
    let mut t = Layered::identity(dom);
    for &(e, pos) in choices {
        let g = EDGES[e % EDGES.len()];
        let (a, b) = g.arity(sig);
        let w = t.cod();
        if a > w || w - a + b > 5 {
            continue;
        }
        let left = pos % (w - a + 1);
        let layer = Layer {
            left,
            gen: g,
            right: w - a - left,
            dom: a,
            cod: b,
        };
        t = t.push(layer).expect("widths agree");
    }
    t
}

fn layered_strategy() -> impl Strategy<Value = Layered> {
    (0..4usize, prop::collection::vec((0..4usize, 0..6usize), 0..7)).prop_map(|(d, c)| layered(d, &c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn composition_matches_graph_search((a, b, _) in chain3()) {
        prop_assert_eq!(a.compose(&b).unwrap(), naive_compose(&a, &b));
    }

    #[test]
    fn composition_is_associative_with_additive_floating((a, b, c) in chain3()) {
        let (ab, m_ab) = a.compose(&b).unwrap();
        let (bc, m_bc) = b.compose(&c).unwrap();
        let (ab_c, m_ab_c) = ab.compose(&c).unwrap();
        let (a_bc, m_a_bc) = a.compose(&bc).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert_eq!(m_ab + m_ab_c, m_bc + m_a_bc);
    }

    #[test]
    fn identities_are_neutral(a in (0..4usize, 0..4usize).prop_flat_map(|(m, n)| partition(m, n))) {
        let left = Partition::identity(a.upper()).compose(&a).unwrap();
        let right = a.compose(&Partition::identity(a.lower())).unwrap();
        prop_assert_eq!(left, (a.clone(), 0));
        prop_assert_eq!(right, (a, 0));
    }

    #[test]
    fn involution_is_regular_antihomomorphism((a, b, _) in chain3()) {
        prop_assert_eq!(a.involute().involute(), a.clone());
        let (ab, _) = a.compose(&b).unwrap();
        let (rev, _) = b.involute().compose(&a.involute()).unwrap();
        prop_assert_eq!(ab.involute(), rev);
        let (aa, _) = a.compose(&a.involute()).unwrap();
        prop_assert_eq!(aa.compose(&a).unwrap().0, a);
    }

    #[test]
    fn interchange_with_floating_sum(
        (a, b, c, d) in (0..3usize, 0..3usize, 0..3usize, 0..3usize, 0..3usize, 0..3usize)
            .prop_flat_map(|(m1, n1, q1, m2, n2, q2)| {
                (partition(m1, n1), partition(n1, q1), partition(m2, n2), partition(n2, q2))
            })
    ) {
        let (ab, k1) = a.compose(&b).unwrap();
        let (cd, k2) = c.compose(&d).unwrap();
        let (rhs, k) = a.tensor(&c).compose(&b.tensor(&d)).unwrap();
        prop_assert_eq!(ab.tensor(&cd), rhs);
        prop_assert_eq!(k1 + k2, k);
    }

    #[test]
    fn brauer_and_planar_closed(
        (kind, a, b) in (prop_oneof![Just(DiagramKind::B), Just(DiagramKind::TL)], 0..4usize, 0..4usize, 0..4usize)
            .prop_flat_map(|(kind, m, n, q)| {
                let n = if (m + n) % 2 == 1 { n + 1 } else { n };
                let q = if (n + q) % 2 == 1 { q + 1 } else { q };
                (Just(kind), sampled(kind, m, n), sampled(kind, n, q))
            })
    ) {
        let (ab, _) = a.compose(&b).unwrap();
        prop_assert!(kind.contains(&ab));
        prop_assert!(kind.contains(&a.tensor(&b)));
        prop_assert!(kind.contains(&a.involute()));
    }

    #[test]
    fn partial_maps_compose_pointwise(
        (kind, f, g) in (select(vec![MapKind::PT, MapKind::T, MapKind::I, MapKind::PO, MapKind::O, MapKind::OI]), 0..4usize, 1..4usize, 1..4usize)
            .prop_flat_map(|(kind, m, n, q)| (Just(kind), map(kind, m, n), map(kind, n, q)))
    ) {
        let h = f.then(&g).unwrap();
        for x in 1..=f.dims().0 {
            prop_assert_eq!(h.apply(x), f.apply(x).and_then(|y| g.apply(y)));
        }
        prop_assert!(kind.contains(&h));
        prop_assert!(kind.contains(&f.tensor(&g)));
    }

    #[test]
    fn linear_product_of_basis_elements((a, b, _) in chain3(), delta in -3i64..4) {
        let (ab, k) = a.compose(&b).unwrap();
        let prod = LinComb::basis(a.clone()).star_compose(&LinComb::basis(b.clone())).unwrap();
        prop_assert_eq!(&prod, &LinComb::term(Coeff::delta_pow(k), ab.clone()));
        let at = prod.at(&BigRational::from_integer(delta.into()));
        let expected = BigRational::from_integer(delta.pow(k as u32).into());
        prop_assert_eq!(at.get(&ab).cloned().unwrap_or_default(), expected);
    }

    #[test]
    fn linear_composition_distributes(
        (a, x, b, c) in (0..4usize, 0..4usize, 0..4usize, 0..4usize)
            .prop_flat_map(|(m, n, q, r)| (partition(m, n), partition(m, n), partition(n, q), partition(q, r)))
    ) {
        let sum = LinComb::basis(a.clone()).add(&LinComb::term(Coeff::int(3), x.clone())).unwrap();
        let right = LinComb::basis(b.clone()).star_compose(&LinComb::basis(c.clone())).unwrap();
        let lhs = sum.star_compose(&right).unwrap();
        let rhs = LinComb::basis(a).star_compose(&right).unwrap()
            .add(&LinComb::term(Coeff::int(3), x).star_compose(&right).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn printed_terms_parse_back(t in layered_strategy()) {
        let text = t.to_term().to_string();
        let back = parse_term_in(&text, Signature::UNIT).unwrap();
        prop_assert_eq!(Layered::from_term(&back), t);
    }

    #[test]
    fn interchange_class_shares_canonical_form_and_value(t in layered_strategy()) {
        let interp = DiagramSemantics { kind: DiagramKind::P };
        let c = t.canonical();
        let v = evaluate_layered(&t, &interp).unwrap();
        for member in t.class() {
            prop_assert_eq!(member.canonical(), c.clone());
            prop_assert_eq!(evaluate_layered(&member, &interp).unwrap(), v.clone());
        }
    }

    #[test]
    fn failing_reports_recheck(s in layered_strategy(), k in 0..8usize, shift in 1..6usize) {
        prop_assume!(!s.layers().is_empty());
        // the same term with one layer slid sideways: same shape, maybe another value
        let mut layers = s.layers().to_vec();
        let k = k % layers.len();
        let slack = layers[k].left + layers[k].right;
        layers[k].left = (layers[k].left + shift) % (slack + 1);
        layers[k].right = slack - layers[k].left;
        let t = Layered::from_layers(s.dom(), layers).unwrap();
        let side = |x: &Layered| Side { delta: 0, word: None, term: x.to_term() };
        let rel = RelationInstance { id: "probe".into(), n: None, i: None, j: None, lhs: side(&s), rhs: side(&t) };
        let r = check_relations("probe", String::new(), Target::P, false, &[rel]);
        let interp = DiagramSemantics { kind: DiagramKind::P };
        let equal = evaluate_term(&s.to_term(), &interp).unwrap() == evaluate_term(&t.to_term(), &interp).unwrap();
        prop_assert_eq!(r.passed(), equal);
        if let Some(c) = r.counterexample {
            prop_assert!(c.recheck());
        }
    }
}
