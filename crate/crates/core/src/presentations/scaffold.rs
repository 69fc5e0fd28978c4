//! Units `λ_n: n -> n+d`, `ρ_n: n+d -> n`, the word `w_n = ρ_n λ_n`, and the
//! shifts `x ↦ x₊` (`x λ_n = λ_n x₊`) and `x ↦ x⁺` (`ρ_n x = x⁺ ρ_n`).

use super::Target;
use crate::free_cat::{GradedDigraph, Word};
use crate::gen::{Family, Gen, Signature};

/// Which letter `ρ_n λ_n` equals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitReturn {
    /// `ε_{n+1;n+1}`.
    Eps,
    /// `τ_{n+1;n+2}`.
    Tau,
    /// `μ_{n;n+1}`; also makes `θ_{n-1;n}⁺ = μ_{n;n+1} θ_{n-1;n+1}`.
    Mu,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scaffold {
    pub id: &'static str,
    pub target: Target,
    pub sig: Signature,
    pub min_object: usize,
    pub letters: Vec<Family>,
    pub unit_return: UnitReturn,
}

impl Scaffold {
    pub fn all() -> Vec<Scaffold> {
        use Family::*;
        let mk = |id, target, step, min_object, letters: &[Family], unit_return| Scaffold {
            id,
            target,
            sig: Signature { step },
            min_object,
            letters: letters.to_vec(),
            unit_return,
        };
        vec![
            mk("P", Target::P, 1, 0, &[Sigma, Eps, Tau], UnitReturn::Eps),
            mk("B", Target::B, 2, 0, &[Sigma, Tau], UnitReturn::Tau),
            mk("TL", Target::TL, 2, 0, &[Tau], UnitReturn::Tau),
            mk("PV", Target::ShadowPV, 1, 0, &[Sigma, SigmaInv, Eps, Mu, Eta], UnitReturn::Eps),
            mk("IB", Target::ShadowIB, 1, 0, &[Sigma, SigmaInv, Eps], UnitReturn::Eps),
            mk("V", Target::ShadowV, 1, 1, &[Sigma, SigmaInv, Mu, Eta], UnitReturn::Mu),
            mk("PT", Target::PT, 1, 0, &[Sigma, Eps, Mu, Eta], UnitReturn::Eps),
            mk("I", Target::I, 1, 0, &[Sigma, Eps], UnitReturn::Eps),
            mk("T", Target::T, 1, 1, &[Sigma, Mu, Eta], UnitReturn::Mu),
            mk("PO", Target::PO, 1, 0, &[Eps, Mu, Eta], UnitReturn::Eps),
            mk("O", Target::O, 1, 1, &[Mu, Eta], UnitReturn::Mu),
        ]
    }

    pub fn by_id(id: &str) -> Option<Scaffold> {
        Scaffold::all().into_iter().find(|s| s.id.eq_ignore_ascii_case(id))
    }

    pub fn step(&self) -> usize {
        self.sig.step
    }

    /// Letters plus the unit families.
    pub fn alphabet(&self) -> GradedDigraph {
        let mut fams = self.letters.clone();
        fams.extend([Family::Lambda, Family::Rho]);
        GradedDigraph::new(self.sig, &fams, self.min_object)
    }

    /// The endo-hom alphabet `X_n`.
    pub fn letters_at(&self, n: usize) -> Vec<Gen> {
        self.alphabet().monoid_letters(n)
    }

    pub fn lambda(&self, n: usize) -> Gen {
        Gen::Lambda(n)
    }

    pub fn rho(&self, n: usize) -> Gen {
        Gen::Rho(n)
    }

    /// `w_n`, a word in `X_{n+d}`.
    pub fn w(&self, n: usize) -> Word {
        let g = match self.unit_return {
            UnitReturn::Eps => Gen::Eps(n + 1, n + 1),
            UnitReturn::Tau => Gen::Tau(n + 1, n + 2),
            UnitReturn::Mu => Gen::Mu(n, n + 1),
        };
        Word::new(self.sig, n + self.step(), vec![g]).expect("unit return letter is well typed")
    }

    /// `x₊` for `x ∈ X_n`: the same letter at `n + d`.
    pub fn plus_lower(&self, x: &Gen) -> Word {
        let y = x.lifted(self.step());
        Word::new(self.sig, y.arity(self.sig).0, vec![y]).expect("lifted letter is well typed")
    }

    /// `x⁺` for `x ∈ X_n`, a word in `X_{n+d}`.
    pub fn plus_upper(&self, x: &Gen) -> Word {
        let y = x.lifted(self.step());
        let n = x.arity(self.sig).0;
        let letters = match (self.unit_return, x.index()) {
            (UnitReturn::Mu, Some(i)) if i + 1 == n => vec![Gen::Mu(n, n + 1), y],
            _ => vec![y],
        };
        Word::new(self.sig, n + self.step(), letters).expect("lifted letters are well typed")
    }

    /// `x^{+k}`, applied letter by letter.
    pub fn plus_upper_word(&self, w: &Word, k: usize) -> Word {
        let mut cur = w.clone();
        for _ in 0..k {
            let mut letters = Vec::new();
            for x in cur.letters() {
                letters.extend_from_slice(self.plus_upper(x).letters());
            }
            cur = Word::new(self.sig, cur.dom() + self.step(), letters).expect("shift preserves typing");
        }
        cur
    }

    /// `s₊`, applied letter by letter.
    pub fn plus_lower_word(&self, w: &Word) -> Word {
        let letters = w.letters().iter().map(|x| x.lifted(self.step())).collect();
        Word::new(self.sig, w.dom() + self.step(), letters).expect("shift preserves typing")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vine_top_letter_gains_merge() {
        let v = Scaffold::by_id("V").unwrap();
        assert_eq!(v.plus_upper(&Gen::Sigma(2, 3)).to_string(), "m[3,4] ; s[2,4]");
        assert_eq!(v.plus_upper(&Gen::Sigma(1, 3)).to_string(), "s[1,4]");
        assert_eq!(v.w(2).to_string(), "m[2,3]");
    }

    #[test]
    fn brauer_shift_by_two() {
        let b = Scaffold::by_id("B").unwrap();
        assert_eq!(b.plus_lower(&Gen::Tau(1, 2)).to_string(), "t[1,4]");
        assert_eq!(b.w(0).to_string(), "t[1,2]");
        assert_eq!(b.letters_at(1), Vec::<Gen>::new());
    }
}
