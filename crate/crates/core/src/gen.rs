//! Generator symbols shared by every semantics.
//!
//! Indexed families (`s`, `si`, `e`, `t`, `m`, `h`) live in one endo-hom `n -> n`;
//! `l[n]` and `r[n]` move between objects `n` and `n + d`; the nullary names are
//! the edges of the tensor alphabets.

use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    Sigma(usize, usize),
    SigmaInv(usize, usize),
    Eps(usize, usize),
    Tau(usize, usize),
    Mu(usize, usize),
    Eta(usize, usize),
    Lambda(usize),
    Rho(usize),
    X,
    Xinv,
    D,
    U,
    Ubar,
    V,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("index out of range in {0}")]
    BadIndex(String),
    #[error("unknown generator name `{0}`")]
    UnknownName(String),
    #[error("generator `{name}` expects {expected} index argument(s), got {got}")]
    Arity {
        name: String,
        expected: usize,
        got: usize,
    },
}

/// Grading data that fixes the arity of `l`, `r`, `U` and `Uu`.
///
/// `step` is the `d` of the one-sided units: `l[n]: n -> n+d`, and the cup/cap
/// edges `U: d -> 0`, `Uu: 0 -> d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub step: usize,
}

impl Signature {
    pub const UNIT: Signature = Signature { step: 1 };
    pub const PAIR: Signature = Signature { step: 2 };
}

impl Default for Signature {
    fn default() -> Self {
        Signature::UNIT
    }
}

/// Generator families, used for alphabets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Sigma,
    SigmaInv,
    Eps,
    Tau,
    Mu,
    Eta,
    Lambda,
    Rho,
    X,
    Xinv,
    D,
    U,
    Ubar,
    V,
}

impl Family {
    /// The letters of this family living in the endo-hom of `n` (indexed families only).
    pub fn letters(self, n: usize) -> Vec<Gen> {
        let top = match self {
            Family::Eps => n,
            _ => n.saturating_sub(1),
        };
        (1..=top)
            .filter_map(|i| self.indexed(i, n))
            .collect()
    }

    pub fn indexed(self, i: usize, n: usize) -> Option<Gen> {
        Some(match self {
            Family::Sigma => Gen::Sigma(i, n),
            Family::SigmaInv => Gen::SigmaInv(i, n),
            Family::Eps => Gen::Eps(i, n),
            Family::Tau => Gen::Tau(i, n),
            Family::Mu => Gen::Mu(i, n),
            Family::Eta => Gen::Eta(i, n),
            _ => return None,
        })
    }

    pub fn nullary(self) -> Option<Gen> {
        Some(match self {
            Family::X => Gen::X,
            Family::Xinv => Gen::Xinv,
            Family::D => Gen::D,
            Family::U => Gen::U,
            Family::Ubar => Gen::Ubar,
            Family::V => Gen::V,
            _ => return None,
        })
    }
}

impl Gen {
    pub fn family(&self) -> Family {
        match self {
            Gen::Sigma(..) => Family::Sigma,
            Gen::SigmaInv(..) => Family::SigmaInv,
            Gen::Eps(..) => Family::Eps,
            Gen::Tau(..) => Family::Tau,
            Gen::Mu(..) => Family::Mu,
            Gen::Eta(..) => Family::Eta,
            Gen::Lambda(_) => Family::Lambda,
            Gen::Rho(_) => Family::Rho,
            Gen::X => Family::X,
            Gen::Xinv => Family::Xinv,
            Gen::D => Family::D,
            Gen::U => Family::U,
            Gen::Ubar => Family::Ubar,
            Gen::V => Family::V,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Gen::Sigma(..) => "s",
            Gen::SigmaInv(..) => "si",
            Gen::Eps(..) => "e",
            Gen::Tau(..) => "t",
            Gen::Mu(..) => "m",
            Gen::Eta(..) => "h",
            Gen::Lambda(_) => "l",
            Gen::Rho(_) => "r",
            Gen::X => "X",
            Gen::Xinv => "Xi",
            Gen::D => "D",
            Gen::U => "U",
            Gen::Ubar => "Uu",
            Gen::V => "V",
        }
    }

    /// Build from a grammar name and its bracket arguments.
    pub fn from_parts(name: &str, args: &[usize]) -> Result<Gen, GenError> {
        let want = |k: usize| -> Result<(), GenError> {
            if args.len() == k {
                Ok(())
            } else {
                Err(GenError::Arity {
                    name: name.to_string(),
                    expected: k,
                    got: args.len(),
                })
            }
        };
        let g = match name {
            "s" | "si" | "e" | "t" | "m" | "h" => {
                want(2)?;
                let (i, n) = (args[0], args[1]);
                match name {
                    "s" => Gen::Sigma(i, n),
                    "si" => Gen::SigmaInv(i, n),
                    "e" => Gen::Eps(i, n),
                    "t" => Gen::Tau(i, n),
                    "m" => Gen::Mu(i, n),
                    _ => Gen::Eta(i, n),
                }
            }
            "l" | "r" => {
                want(1)?;
                if name == "l" {
                    Gen::Lambda(args[0])
                } else {
                    Gen::Rho(args[0])
                }
            }
            "X" | "Xi" | "D" | "U" | "Uu" | "V" => {
                want(0)?;
                match name {
                    "X" => Gen::X,
                    "Xi" => Gen::Xinv,
                    "D" => Gen::D,
                    "U" => Gen::U,
                    "Uu" => Gen::Ubar,
                    _ => Gen::V,
                }
            }
            _ => return Err(GenError::UnknownName(name.to_string())),
        };
        g.check()?;
        Ok(g)
    }

    /// Index ranges: `1 <= i < n` for the crossing-like families, `1 <= i <= n` for `e`.
    pub fn check(&self) -> Result<(), GenError> {
        let ok = match *self {
            Gen::Sigma(i, n) | Gen::SigmaInv(i, n) | Gen::Tau(i, n) | Gen::Mu(i, n) | Gen::Eta(i, n) => {
                i >= 1 && i < n
            }
            Gen::Eps(i, n) => i >= 1 && i <= n,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(GenError::BadIndex(self.to_string()))
        }
    }

    pub fn arity(&self, sig: Signature) -> (usize, usize) {
        let d = sig.step;
        match *self {
            Gen::Sigma(_, n)
            | Gen::SigmaInv(_, n)
            | Gen::Eps(_, n)
            | Gen::Tau(_, n)
            | Gen::Mu(_, n)
            | Gen::Eta(_, n) => (n, n),
            Gen::Lambda(n) => (n, n + d),
            Gen::Rho(n) => (n + d, n),
            Gen::X | Gen::Xinv | Gen::D => (2, 2),
            Gen::V => (2, 1),
            Gen::U => (d, 0),
            Gen::Ubar => (0, d),
        }
    }

    /// Same letter one object up, `θ_{i;n} -> θ_{i;n+k}`.
    pub fn lifted(&self, k: usize) -> Gen {
        match *self {
            Gen::Sigma(i, n) => Gen::Sigma(i, n + k),
            Gen::SigmaInv(i, n) => Gen::SigmaInv(i, n + k),
            Gen::Eps(i, n) => Gen::Eps(i, n + k),
            Gen::Tau(i, n) => Gen::Tau(i, n + k),
            Gen::Mu(i, n) => Gen::Mu(i, n + k),
            Gen::Eta(i, n) => Gen::Eta(i, n + k),
            Gen::Lambda(n) => Gen::Lambda(n + k),
            Gen::Rho(n) => Gen::Rho(n + k),
            g => g,
        }
    }

    pub fn index(&self) -> Option<usize> {
        match *self {
            Gen::Sigma(i, _)
            | Gen::SigmaInv(i, _)
            | Gen::Eps(i, _)
            | Gen::Tau(i, _)
            | Gen::Mu(i, _)
            | Gen::Eta(i, _) => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gen::Sigma(i, n)
            | Gen::SigmaInv(i, n)
            | Gen::Eps(i, n)
            | Gen::Tau(i, n)
            | Gen::Mu(i, n)
            | Gen::Eta(i, n) => write!(f, "{}[{},{}]", self.name(), i, n),
            Gen::Lambda(n) | Gen::Rho(n) => write!(f, "{}[{}]", self.name(), n),
            _ => f.write_str(self.name()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for g in [
            Gen::Sigma(1, 3),
            Gen::SigmaInv(2, 3),
            Gen::Eps(3, 3),
            Gen::Tau(1, 2),
            Gen::Mu(1, 2),
            Gen::Eta(1, 2),
            Gen::Lambda(0),
            Gen::Rho(4),
            Gen::X,
            Gen::Xinv,
            Gen::D,
            Gen::U,
            Gen::Ubar,
            Gen::V,
        ] {
            let text = g.to_string();
            let (name, args) = match text.find('[') {
                Some(k) => (
                    &text[..k],
                    text[k + 1..text.len() - 1]
                        .split(',')
                        .map(|a| a.parse().unwrap())
                        .collect::<Vec<usize>>(),
                ),
                None => (&text[..], vec![]),
            };
            assert_eq!(Gen::from_parts(name, &args).unwrap(), g);
        }
    }

    #[test]
    fn index_ranges() {
        assert!(Gen::Sigma(1, 1).check().is_err());
        assert!(Gen::Sigma(0, 3).check().is_err());
        assert!(Gen::Eps(1, 1).check().is_ok());
        assert!(Gen::Eps(2, 1).check().is_err());
    }

    #[test]
    fn step_controls_units() {
        assert_eq!(Gen::Lambda(3).arity(Signature::PAIR), (3, 5));
        assert_eq!(Gen::U.arity(Signature::PAIR), (2, 0));
        assert_eq!(Gen::Ubar.arity(Signature::UNIT), (0, 1));
    }
}
