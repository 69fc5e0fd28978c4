//! Hom-set sizes against closed forms and direct recursions.

use super::{Counterexample, Report};
use crate::presentations::Target;
use crate::with_finite;
use crate::free_cat::Finite;
use std::time::Instant;

fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// Bell numbers from the Bell triangle.
pub fn bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

/// `(2k - 1)!!` for `n = 2k` points, zero for odd `n`.
pub fn perfect_matchings(n: usize) -> u128 {
    if n % 2 == 1 {
        return 0;
    }
    (1..n as u128).step_by(2).product()
}

pub fn catalan_of_points(n: usize) -> u128 {
    if n % 2 == 1 {
        return 0;
    }
    let k = (n / 2) as u128;
    binom(2 * k, k) / (k + 1)
}

/// Partial maps `[m] -> [n]` whose defined images form a weakly (or strictly)
/// increasing sequence, counted point by point.
fn isotone(m: usize, n: usize, total: bool, injective: bool) -> u128 {
    // ways[v] = number of ways to place the remaining points with all images >= v
    fn go(points: usize, low: usize, n: usize, total: bool, injective: bool) -> u128 {
        if points == 0 {
            return 1;
        }
        let mut c = 0;
        if !total {
            c += go(points - 1, low, n, total, injective);
        }
        for v in low..=n {
            let next = if injective { v + 1 } else { v };
            c += go(points - 1, next, n, total, injective);
        }
        c
    }
    go(m, 1, n, total, injective)
}

/// The expected size of `hom(m, n)` in `target`.
pub fn expected_count(target: Target, m: usize, n: usize) -> u128 {
    let (mm, nn) = (m as u128, n as u128);
    match target {
        Target::P => bell(m + n),
        Target::B => perfect_matchings(m + n),
        Target::TL => catalan_of_points(m + n),
        Target::PT | Target::ShadowPV => (nn + 1).pow(m as u32),
        Target::T | Target::ShadowV => nn.pow(m as u32),
        Target::I | Target::ShadowIB => (0..=mm.min(nn))
            .map(|k| binom(mm, k) * binom(nn, k) * (1..=k).product::<u128>())
            .sum(),
        Target::PO => isotone(m, n, false, false),
        Target::O => isotone(m, n, true, false),
        Target::OI => isotone(m, n, false, true),
    }
}

pub(crate) fn recount(target: Target, m: usize, n: usize) -> Option<u128> {
    with_finite!(target, |i| i.homset(m, n).ok().map(|h| h.len() as u128))
}

pub fn check_counts(target: Target, m: usize, n: usize) -> Report {
    let start = Instant::now();
    let mut r = Report::new("counts", format!("{target} m={m} n={n}"));
    let expected = expected_count(target, m, n);
    match recount(target, m, n) {
        Some(c) => {
            r.items = c as usize;
            if c != expected {
                r.fail(Counterexample::Count {
                    target,
                    m,
                    n,
                    enumerated: c as usize,
                    expected,
                });
            }
        }
        None => r.budget("enumeration budget exceeded".into()),
    }
    r.timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_values() {
        assert_eq!(bell(4), 15);
        assert_eq!(bell(6), 203);
        assert_eq!(perfect_matchings(6), 15);
        assert_eq!(catalan_of_points(8), 14);
        assert_eq!(expected_count(Target::PT, 2, 2), 9);
        assert_eq!(expected_count(Target::T, 2, 2), 4);
        assert_eq!(expected_count(Target::T, 0, 0), 1);
        assert_eq!(expected_count(Target::I, 2, 2), 7);
        assert_eq!(expected_count(Target::PO, 2, 2), 8);
        assert_eq!(expected_count(Target::O, 2, 2), 3);
        assert_eq!(expected_count(Target::OI, 2, 2), 6);
        assert_eq!(expected_count(Target::O, 2, 0), 0);
    }

    #[test]
    fn enumerators_agree_small() {
        for t in Target::ALL {
            for m in 0..=3 {
                for n in 0..=3 {
                    let r = check_counts(t, m, n);
                    assert!(r.passed(), "{}", r.line());
                }
            }
        }
    }
}
