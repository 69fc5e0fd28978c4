//! Tensor-category laws, the whiskering lemmas, regular-* laws and floating
//! additivity, checked over every tuple of morphisms within a scale.

use super::{Counterexample, Report};
use crate::category::{Involutive, Morphism};
use crate::diagram::{self, DiagramKind, Partition};
use crate::free_cat::Finite;
use crate::linear::{Coeff, LinComb};
use crate::presentations::{Reading, Target};
use crate::transform::PartialMap;
use crate::with_finite;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    Assoc,
    Unit,
    TensorAssoc,
    TensorUnit,
    IdentitySum,
    Interchange,
    /// `br(a) = 0`: `a ⊕ (b ∘ c) = (a ⊕ b) ∘ c`.
    WhiskerCod,
    /// `bd(a) = 0`: `a ⊕ (b ∘ c) = b ∘ (a ⊕ c)`.
    WhiskerDom,
    /// `bd(c) = 0`: `(a ∘ b) ⊕ c = a ∘ (b ⊕ c)`.
    TrailDom,
    /// `br(c) = 0`: `(a ∘ b) ⊕ c = (a ⊕ c) ∘ b`.
    TrailCod,
    /// `br(a) = bd(b) = 0`: `a ∘ b = a ⊕ b = b ⊕ a`.
    Scalars,
    Regular,
    StarAntihom,
    StarInvolution,
    StarTensor,
    FloatingAdditivity,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::Assoc => "associativity",
            Law::Unit => "identity",
            Law::TensorAssoc => "tensor-associativity",
            Law::TensorUnit => "tensor-unit",
            Law::IdentitySum => "identity-sum",
            Law::Interchange => "interchange",
            Law::WhiskerCod => "whisker-codomain-zero",
            Law::WhiskerDom => "whisker-domain-zero",
            Law::TrailDom => "trail-domain-zero",
            Law::TrailCod => "trail-codomain-zero",
            Law::Scalars => "zero-boundary-commute",
            Law::Regular => "regular",
            Law::StarAntihom => "star-antihomomorphism",
            Law::StarInvolution => "star-involution",
            Law::StarTensor => "star-tensor",
            Law::FloatingAdditivity => "floating-additivity",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy)]
enum Obj {
    Var(usize),
    Zero,
}

use Obj::{Var, Zero};

impl Law {
    pub const TENSOR: [Law; 11] = [
        Law::Assoc,
        Law::Unit,
        Law::TensorAssoc,
        Law::TensorUnit,
        Law::IdentitySum,
        Law::Interchange,
        Law::WhiskerCod,
        Law::WhiskerDom,
        Law::TrailDom,
        Law::TrailCod,
        Law::Scalars,
    ];
    pub const STAR: [Law; 4] = [Law::Regular, Law::StarAntihom, Law::StarInvolution, Law::StarTensor];

    /// Number of object variables and the (dom, cod) of each argument.
    fn shape(self) -> (usize, Vec<(Obj, Obj)>) {
        match self {
            Law::Assoc | Law::FloatingAdditivity => (4, vec![(Var(0), Var(1)), (Var(1), Var(2)), (Var(2), Var(3))]),
            Law::Unit | Law::TensorUnit | Law::Regular | Law::StarInvolution => (2, vec![(Var(0), Var(1))]),
            Law::TensorAssoc => (6, vec![(Var(0), Var(1)), (Var(2), Var(3)), (Var(4), Var(5))]),
            Law::IdentitySum => (2, vec![]),
            Law::Interchange => (
                6,
                vec![(Var(0), Var(1)), (Var(1), Var(2)), (Var(3), Var(4)), (Var(4), Var(5))],
            ),
            Law::WhiskerCod => (4, vec![(Var(0), Zero), (Var(1), Var(2)), (Var(2), Var(3))]),
            Law::WhiskerDom => (4, vec![(Zero, Var(0)), (Var(1), Var(2)), (Var(2), Var(3))]),
            Law::TrailDom => (4, vec![(Var(0), Var(1)), (Var(1), Var(2)), (Zero, Var(3))]),
            Law::TrailCod => (4, vec![(Var(0), Var(1)), (Var(1), Var(2)), (Var(3), Zero)]),
            Law::Scalars => (2, vec![(Var(0), Zero), (Zero, Var(1))]),
            Law::StarAntihom => (3, vec![(Var(0), Var(1)), (Var(1), Var(2))]),
            Law::StarTensor => (4, vec![(Var(0), Var(1)), (Var(2), Var(3))]),
        }
    }
}

fn then<M: Morphism>(a: &M, b: &M) -> M {
    a.then(b).expect("law arguments are composable")
}

/// Whether a law without the involution holds at `args`; `vars` are the objects.
pub(crate) fn holds<M: Morphism>(law: Law, vars: &[usize], args: &[M]) -> bool {
    match law {
        Law::Assoc => {
            let (a, b, c) = (&args[0], &args[1], &args[2]);
            then(&then(a, b), c) == then(a, &then(b, c))
        }
        Law::Unit => {
            let a = &args[0];
            then(&M::identity(a.dom()), a) == *a && then(a, &M::identity(a.cod())) == *a
        }
        Law::TensorAssoc => {
            let (a, b, c) = (&args[0], &args[1], &args[2]);
            a.beside(&b.beside(c)) == a.beside(b).beside(c)
        }
        Law::TensorUnit => {
            let a = &args[0];
            a.beside(&M::identity(0)) == *a && M::identity(0).beside(a) == *a
        }
        Law::IdentitySum => M::identity(vars[0]).beside(&M::identity(vars[1])) == M::identity(vars[0] + vars[1]),
        Law::Interchange => {
            let (a, b, c, d) = (&args[0], &args[1], &args[2], &args[3]);
            then(a, b).beside(&then(c, d)) == then(&a.beside(c), &b.beside(d))
        }
        Law::WhiskerCod => {
            let (a, b, c) = (&args[0], &args[1], &args[2]);
            a.beside(&then(b, c)) == then(&a.beside(b), c)
        }
        Law::WhiskerDom => {
            let (a, b, c) = (&args[0], &args[1], &args[2]);
            a.beside(&then(b, c)) == then(b, &a.beside(c))
        }
        Law::TrailDom => {
            let (a, b, c) = (&args[0], &args[1], &args[2]);
            then(a, b).beside(c) == then(a, &b.beside(c))
        }
        Law::TrailCod => {
            let (a, b, c) = (&args[0], &args[1], &args[2]);
            then(a, b).beside(c) == then(&a.beside(c), b)
        }
        Law::Scalars => {
            let (a, b) = (&args[0], &args[1]);
            let ab = then(a, b);
            ab == a.beside(b) && ab == b.beside(a)
        }
        Law::FloatingAdditivity => {
            let (a, b, c) = (&args[0], &args[1], &args[2]);
            let (ab, k1) = a.then_counted(b).expect("composable");
            let (_, k2) = ab.then_counted(c).expect("composable");
            let (bc, k3) = b.then_counted(c).expect("composable");
            let (_, k4) = a.then_counted(&bc).expect("composable");
            k1 + k2 == k3 + k4
        }
        Law::Regular | Law::StarAntihom | Law::StarInvolution | Law::StarTensor => true,
    }
}

pub(crate) fn holds_star<M: Involutive>(law: Law, vars: &[usize], args: &[M]) -> bool {
    match law {
        Law::Regular => {
            let a = &args[0];
            then(&then(a, &a.star()), a) == *a
        }
        Law::StarAntihom => {
            let (a, b) = (&args[0], &args[1]);
            then(a, b).star() == then(&b.star(), &a.star())
        }
        Law::StarInvolution => args[0].star().star() == args[0],
        Law::StarTensor => {
            let (a, b) = (&args[0], &args[1]);
            a.beside(b).star() == a.star().beside(&b.star())
        }
        _ => holds(law, vars, args),
    }
}

/// Bounds on the objects a law is quantified over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomScale {
    pub max_object: usize,
    /// Bound on the sum of all object variables of one law instance.
    pub max_total: usize,
}

impl AxiomScale {
    pub const DEFAULT: AxiomScale = AxiomScale {
        max_object: 3,
        max_total: 9,
    };
}

fn object_tuples(k: usize, scale: AxiomScale) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for t in &out {
            let used: usize = t.iter().sum();
            for v in 0..=scale.max_object {
                if used + v <= scale.max_total {
                    let mut u = t.clone();
                    u.push(v);
                    next.push(u);
                }
            }
        }
        out = next;
    }
    out
}

/// Run `law` over every instance, calling `test(vars, args)`; returns the
/// number of instances and the first failing one.
pub(crate) fn sweep<M: Morphism>(
    law: Law,
    scale: AxiomScale,
    homset: &mut dyn FnMut(usize, usize) -> Vec<M>,
    test: &dyn Fn(&[usize], &[M]) -> bool,
) -> (usize, Option<Vec<M>>) {
    let (k, shape) = law.shape();
    let mut count = 0;
    for vars in object_tuples(k, scale) {
        let obj = |o: Obj| match o {
            Var(i) => vars[i],
            Zero => 0,
        };
        let sets: Vec<Vec<M>> = shape.iter().map(|&(a, b)| homset(obj(a), obj(b))).collect();
        if sets.iter().any(Vec::is_empty) {
            continue;
        }
        let mut idx = vec![0usize; sets.len()];
        'tuples: loop {
            let args: Vec<M> = idx.iter().zip(&sets).map(|(&i, s)| s[i].clone()).collect();
            count += 1;
            if !test(&vars, &args) {
                return (count, Some(args));
            }
            let mut pos = sets.len();
            loop {
                if pos == 0 {
                    break 'tuples;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < sets[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
    (count, None)
}

fn cached<I: Finite>(interp: &I) -> impl FnMut(usize, usize) -> Vec<I::Mor> + '_ {
    let mut cache: HashMap<(usize, usize), Vec<I::Mor>> = HashMap::new();
    move |m, n| {
        cache
            .entry((m, n))
            .or_insert_with(|| interp.homset(m, n).unwrap_or_default())
            .clone()
    }
}

fn run<I: Finite>(interp: &I, target: Target, scale: AxiomScale, report: &mut Report) {
    let mut hs = cached(interp);
    for law in Law::TENSOR {
        let (c, bad) = sweep(law, scale, &mut hs, &|v: &[usize], a: &[I::Mor]| holds(law, v, a));
        report.items += c;
        if let Some(args) = bad {
            report.fail(Counterexample::Law {
                target,
                law,
                args: args.iter().map(|a| a.to_string()).collect(),
            });
        }
    }
}

fn run_diagram(kind: DiagramKind, target: Target, scale: AxiomScale, report: &mut Report) {
    let mut hs = |m, n| diagram::enumerate_homset(kind, m, n).unwrap_or_default();
    let mut laws = Law::STAR.to_vec();
    laws.push(Law::FloatingAdditivity);
    for law in laws {
        let (c, bad) = sweep(law, scale, &mut hs, &|v: &[usize], a: &[Partition]| holds_star(law, v, a));
        report.items += c;
        if let Some(args) = bad {
            report.fail(Counterexample::Law {
                target,
                law,
                args: args.iter().map(|a| a.to_string()).collect(),
            });
        }
    }
}

/// Every applicable law over all morphism tuples within `scale`.
pub fn check_axioms(target: Target, scale: AxiomScale) -> Report {
    let start = Instant::now();
    let mut r = Report::new(
        "axioms",
        format!("{target} max_object={} max_total={}", scale.max_object, scale.max_total),
    );
    with_finite!(target, |i| run(&i, target, scale, &mut r));
    if let Reading::Diagram(kind) = target.reading() {
        run_diagram(kind, target, scale, &mut r);
    }
    r.timed(start)
}

/// Re-evaluate a reported law failure from its serialized arguments.
pub(crate) fn law_fails(target: Target, law: Law, args: &[String]) -> bool {
    fn vars_of<M: Morphism>(law: Law, args: &[M]) -> Vec<usize> {
        match law {
            Law::IdentitySum => vec![],
            _ => args.iter().flat_map(|a| [a.dom(), a.cod()]).collect(),
        }
    }
    match target.reading() {
        Reading::Diagram(_) => {
            let parsed: Option<Vec<Partition>> = args.iter().map(|s| Partition::parse(s).ok()).collect();
            parsed.is_some_and(|a| !holds_star(law, &vars_of(law, &a), &a))
        }
        Reading::Map(..) => {
            let parsed: Option<Vec<PartialMap>> = args.iter().map(|s| PartialMap::parse(s).ok()).collect();
            parsed.is_some_and(|a| !holds(law, &vars_of(law, &a), &a))
        }
    }
}

fn random_sum(rng: &mut StdRng, pool: &[Partition]) -> LinComb {
    let mut out = LinComb::zero(pool[0].upper(), pool[0].lower());
    for _ in 0..2 {
        let a = pool[rng.gen_range(0..pool.len())].clone();
        let c = Coeff::from_coeffs(
            (0..2)
                .map(|_| num_rational::BigRational::from_integer(rng.gen_range(-3i64..=3).into()))
                .collect(),
        );
        out = out.add(&LinComb::term(c, a)).expect("same shape");
    }
    out
}

/// Interchange for δ-linear combinations on random two-term sums.
pub fn check_linear_interchange(kind: DiagramKind, seed: u64, trials: usize) -> Report {
    let start = Instant::now();
    let mut r = Report::new("axioms", format!("linear-interchange {kind:?} seed={seed} trials={trials}"));
    let mut rng = StdRng::seed_from_u64(seed);
    let homs: Vec<Vec<Partition>> = [(1, 1), (1, 2), (2, 1), (2, 2)]
        .iter()
        .map(|&(m, n)| diagram::enumerate_homset(kind, m, n).unwrap_or_default())
        .collect();
    let pick = |rng: &mut StdRng, m: usize, n: usize| -> Option<LinComb> {
        let pool = &homs[(m - 1) * 2 + (n - 1)];
        (!pool.is_empty()).then(|| random_sum(rng, pool))
    };
    for _ in 0..trials {
        let dims: Vec<usize> = (0..6).map(|_| rng.gen_range(1..=2)).collect();
        let (Some(a), Some(b), Some(c), Some(d)) = (
            pick(&mut rng, dims[0], dims[1]),
            pick(&mut rng, dims[1], dims[2]),
            pick(&mut rng, dims[3], dims[4]),
            pick(&mut rng, dims[4], dims[5]),
        ) else {
            continue;
        };
        r.items += 1;
        let lhs = a.star_compose(&b).unwrap().star_tensor(&c.star_compose(&d).unwrap());
        let rhs = a.star_tensor(&c).star_compose(&b.star_tensor(&d)).unwrap();
        if lhs != rhs {
            r.status = super::Status::Fail;
            r.note = Some(format!("{a} | {b} | {c} | {d}"));
            break;
        }
    }
    r.timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::ShapeMismatch;

    #[test]
    fn small_partition_scale() {
        let r = check_axioms(
            Target::P,
            AxiomScale {
                max_object: 2,
                max_total: 5,
            },
        );
        assert!(r.passed(), "{}", r.line());
    }

    #[test]
    fn maps_obey_tensor_laws() {
        let r = check_axioms(
            Target::PT,
            AxiomScale {
                max_object: 2,
                max_total: 6,
            },
        );
        assert!(r.passed(), "{}", r.line());
    }

    #[test]
    fn linear_interchange_random() {
        let r = check_linear_interchange(DiagramKind::P, 7, 200);
        assert!(r.passed(), "{}", r.line());
    }

    /// Composition that cuts every path through the middle row.
    #[derive(Clone, PartialEq, Eq, Hash, Debug)]
    struct Cut(Partition);

    impl fmt::Display for Cut {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            self.0.fmt(f)
        }
    }

    impl Morphism for Cut {
        fn dom(&self) -> usize {
            self.0.upper()
        }
        fn cod(&self) -> usize {
            self.0.lower()
        }
        fn identity(n: usize) -> Self {
            Cut(Partition::identity(n))
        }
        fn beside(&self, other: &Self) -> Self {
            Cut(self.0.tensor(&other.0))
        }
        fn then_counted(&self, next: &Self) -> Result<(Self, usize), ShapeMismatch> {
            let mut blocks: Vec<Vec<i64>> = Vec::new();
            for b in self.0.blocks() {
                let up: Vec<i64> = b.into_iter().filter(|&v| v > 0).collect();
                if !up.is_empty() {
                    blocks.push(up);
                }
            }
            for b in next.0.blocks() {
                let down: Vec<i64> = b.into_iter().filter(|&v| v < 0).collect();
                if !down.is_empty() {
                    blocks.push(down);
                }
            }
            Ok((Cut(Partition::make(self.dom(), next.cod(), &blocks).unwrap()), 0))
        }
    }

    #[test]
    fn broken_composition_fails_identity() {
        let mut hs = |m, n| {
            diagram::enumerate_homset(DiagramKind::P, m, n)
                .unwrap()
                .into_iter()
                .map(Cut)
                .collect::<Vec<_>>()
        };
        let (_, bad) = sweep(Law::Unit, AxiomScale::DEFAULT, &mut hs, &|v: &[usize], a: &[Cut]| {
            holds(Law::Unit, v, a)
        });
        assert!(bad.is_some());
    }
}
