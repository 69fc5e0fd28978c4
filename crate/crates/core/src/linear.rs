//! Linear combinations of diagrams with coefficients in `ℚ[δ]`.
//!
//! The product of two basis diagrams is `δ^k · αβ` where `k` counts the
//! components that close off in the middle row.

use crate::category::{check_shape, Involutive, Morphism, ShapeMismatch};
use crate::diagram::{DiagramError, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in `δ`; entry `k` is the coefficient of `δ^k`. No trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Coeff(Vec<BigRational>);

impl Coeff {
    pub fn zero() -> Coeff {
        Coeff(Vec::new())
    }

    pub fn int(c: i64) -> Coeff {
        Coeff(vec![BigRational::from_integer(BigInt::from(c))]).trimmed()
    }

    pub fn rational(c: BigRational) -> Coeff {
        Coeff(vec![c]).trimmed()
    }

    /// `δ^k`
    pub fn delta_pow(k: usize) -> Coeff {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = BigRational::one();
        Coeff(v)
    }

    pub fn from_coeffs(c: Vec<BigRational>) -> Coeff {
        Coeff(c).trimmed()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    fn trimmed(mut self) -> Coeff {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        let len = self.0.len().max(other.0.len());
        let z = BigRational::zero();
        Coeff(
            (0..len)
                .map(|k| self.0.get(k).unwrap_or(&z) + other.0.get(k).unwrap_or(&z))
                .collect(),
        )
        .trimmed()
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        if self.is_zero() || other.is_zero() {
            return Coeff::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Coeff(out).trimmed()
    }

    /// Specialize `δ` to a rational value.
    pub fn at(&self, delta: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * delta + c)
    }

    fn term_count(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn parse(text: &str) -> Result<Coeff, DiagramError> {
        let err = || DiagramError::Parse(format!("bad coefficient `{text}`"));
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .map(str::to_string)
            .unwrap_or(t);
        if t.is_empty() {
            return Err(err());
        }
        let mut out = Coeff::zero();
        let mut chunks = Vec::new();
        let mut start = 0;
        let bytes = t.as_bytes();
        for k in 1..bytes.len() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'^' && bytes[k - 1] != b'(' {
                chunks.push(&t[start..k]);
                start = k;
            }
        }
        chunks.push(&t[start..]);
        for chunk in chunks {
            let (sign, body) = match chunk.as_bytes()[0] {
                b'+' => (1, &chunk[1..]),
                b'-' => (-1, &chunk[1..]),
                _ => (1, chunk),
            };
            let (num, power) = match body.find('d') {
                Some(k) => {
                    let p = match body[k + 1..].strip_prefix('^') {
                        Some(e) => e.parse::<usize>().map_err(|_| err())?,
                        None if k + 1 == body.len() => 1,
                        None => return Err(err()),
                    };
                    (body[..k].trim_matches(|c| c == '(' || c == ')'), p)
                }
                None => (body, 0),
            };
            let c: BigRational = if num.is_empty() {
                BigRational::one()
            } else {
                num.parse().map_err(|_| err())?
            };
            let c = if sign < 0 { -c } else { c };
            out = out.add(&Coeff::rational(c).mul(&Coeff::delta_pow(power)));
        }
        Ok(out)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let body = match k {
                0 => a.to_string(),
                _ => {
                    let var = if k == 1 { "d".to_string() } else { format!("d^{k}") };
                    if a.is_one() {
                        var
                    } else if a.is_integer() {
                        format!("{a}{var}")
                    } else {
                        format!("({a}){var}")
                    }
                }
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, "+{body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinComb {
    m: usize,
    n: usize,
    terms: BTreeMap<Partition, Coeff>,
}

impl LinComb {
    pub fn zero(m: usize, n: usize) -> LinComb {
        LinComb {
            m,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(a: Partition) -> LinComb {
        LinComb::term(Coeff::int(1), a)
    }

    pub fn term(c: Coeff, a: Partition) -> LinComb {
        let mut out = LinComb::zero(a.upper(), a.lower());
        if !c.is_zero() {
            out.terms.insert(a, c);
        }
        out
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some((k, α))` when the combination is exactly `δ^k α`.
    pub fn as_monomial(&self) -> Option<(usize, &Partition)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (a, c) = self.terms.iter().next().unwrap();
        let k = c.0.len() - 1;
        (c.term_count() == 1 && c.0[k].is_one()).then_some((k, a))
    }

    fn accumulate(&mut self, a: Partition, c: Coeff) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(a) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &LinComb) -> Result<LinComb, ShapeMismatch> {
        check_shape(self.m, other.m)?;
        check_shape(self.n, other.n)?;
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.accumulate(a.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> LinComb {
        let mut out = LinComb::zero(self.m, self.n);
        for (a, x) in &self.terms {
            out.accumulate(a.clone(), x.mul(c));
        }
        out
    }

    pub fn star_compose(&self, next: &LinComb) -> Result<LinComb, ShapeMismatch> {
        check_shape(self.n, next.m)?;
        let mut out = LinComb::zero(self.m, next.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &next.terms {
                let (ab, k) = a.compose(b)?;
                out.accumulate(ab, ca.mul(cb).mul(&Coeff::delta_pow(k)));
            }
        }
        Ok(out)
    }

    pub fn star_tensor(&self, other: &LinComb) -> LinComb {
        let mut out = LinComb::zero(self.m + other.m, self.n + other.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.accumulate(a.tensor(b), ca.mul(cb));
            }
        }
        out
    }

    pub fn star_involute(&self) -> LinComb {
        let mut out = LinComb::zero(self.n, self.m);
        for (a, c) in &self.terms {
            out.accumulate(a.involute(), c.clone());
        }
        out
    }

    /// Specialize `δ` and return the numeric coefficients.
    pub fn at(&self, delta: &BigRational) -> BTreeMap<Partition, BigRational> {
        self.terms
            .iter()
            .map(|(a, c)| (a.clone(), c.at(delta)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn parse(text: &str) -> Result<LinComb, DiagramError> {
        let err = || DiagramError::Parse(format!("bad linear combination `{text}`"));
        let mut out: Option<LinComb> = None;
        let mut rest = text.trim();
        while !rest.is_empty() {
            let star = rest.find("*P[").ok_or_else(err)?;
            let coeff = Coeff::parse(&rest[..star])?;
            let after = &rest[star + 1..];
            let brace = after.find('{').ok_or_else(err)?;
            let mut depth = 0;
            let mut end = None;
            for (k, ch) in after[brace..].char_indices() {
                match ch {
                    '{' => depth += 1,
                    '}' => {
                        depth -= 1;
                        if depth == 0 {
                            end = Some(brace + k + 1);
                            break;
                        }
                    }
                    _ => {}
                }
            }
            let end = end.ok_or_else(err)?;
            let diagram = Partition::parse(&after[..end])?;
            let piece = LinComb::term(coeff, diagram.clone());
            out = Some(match out {
                None => piece,
                Some(acc) => acc.add(&piece).map_err(|_| err())?,
            });
            rest = after[end..].trim_start();
            if let Some(r) = rest.strip_prefix('+') {
                rest = r.trim_start();
            } else if !rest.is_empty() {
                return Err(err());
            }
        }
        out.ok_or_else(err)
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0*P[{},{}]{{ }}", self.m, self.n);
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, c)| {
                let cs = c.to_string();
                if c.term_count() > 1 {
                    format!("({cs})*{a}")
                } else {
                    format!("{cs}*{a}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Morphism for LinComb {
    fn dom(&self) -> usize {
        self.m
    }
    fn cod(&self) -> usize {
        self.n
    }
    fn identity(n: usize) -> Self {
        LinComb::basis(Partition::identity(n))
    }
    fn beside(&self, other: &Self) -> Self {
        self.star_tensor(other)
    }
    fn then_counted(&self, next: &Self) -> Result<(Self, usize), ShapeMismatch> {
        self.star_compose(next).map(|r| (r, 0))
    }
}

impl Involutive for LinComb {
    fn star(&self) -> Self {
        self.star_involute()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eps() -> Partition {
        Partition::make(1, 1, &[vec![1], vec![-1]]).unwrap()
    }

    #[test]
    fn eps_squared_is_delta_eps() {
        let e = LinComb::basis(eps());
        assert_eq!(
            e.star_compose(&e).unwrap(),
            LinComb::term(Coeff::delta_pow(1), eps())
        );
    }

    #[test]
    fn text_form_matches_reference_layout() {
        let id = LinComb::basis(Partition::identity(1));
        let e = LinComb::basis(eps());
        let s = id.add(&e).unwrap();
        let sq = s.star_compose(&s).unwrap();
        assert_eq!(sq.to_string(), "(2+d)*P[1,1]{ {1} {-1} } + 1*P[1,1]{ {1,-1} }");
        assert_eq!(LinComb::parse(&sq.to_string()).unwrap(), sq);
    }

    #[test]
    fn coeff_text_round_trip() {
        for text in ["0", "1", "d", "2+d", "-1+3d^2", "1/2-d", "(1/3)d^4"] {
            let c = Coeff::parse(text).unwrap();
            assert_eq!(Coeff::parse(&c.to_string()).unwrap(), c, "{text}");
        }
        assert_eq!(Coeff::parse("2+d").unwrap().to_string(), "2+d");
    }

    #[test]
    fn specialization() {
        let c = Coeff::parse("2+d").unwrap();
        let three = BigRational::from_integer(3.into());
        assert_eq!(c.at(&three), BigRational::from_integer(5.into()));
    }

    #[test]
    fn cancellation_removes_terms() {
        let e = LinComb::basis(eps());
        let neg = e.scale(&Coeff::int(-1));
        assert!(e.add(&neg).unwrap().is_empty());
    }
}
