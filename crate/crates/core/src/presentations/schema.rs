//! Relation schemas: templates with symbolic indices, instantiated on demand.
//!
//! Word templates are space-separated letters. `s_i`, `e_i+1`, `m_n-1` name
//! indexed letters at the current object `n`; a suffix `@+k` moves the letter
//! to object `n + k`. `l` and `r` are `λ_n` and `ρ_n` (again with `@+k`),
//! `1` is the empty word, and `$` stands for each family in the schema's list.
//! A side may start with `d` to multiply it by δ. Sides of a chain are
//! separated by `==`.

use crate::free_cat::{parse_term_in, GradedDigraph, Term, TermError, Word};
use crate::gen::{Family, Gen, Signature};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SchemaError {
    #[error("malformed template `{0}`")]
    Template(String),
    #[error("relation {id} is ill-typed: {source}")]
    Typing { id: String, source: TermError },
    #[error("relation {id} has sides of different type")]
    Sides { id: String },
}

/// Which index pairs a schema ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexRule {
    /// No letter index; one instance per object.
    Once,
    /// A single index `i`.
    Single,
    /// Every pair `i, j`.
    Pairs,
    /// `|i - j| > 1`.
    Far,
    /// `|i - j| = 1`.
    Adjacent,
    /// `j ∉ {i, i+1}`.
    OffPair,
    /// `j ∈ {i, i+1}`.
    OnPair,
    /// `i <= n - 2`.
    BelowTop,
}

impl IndexRule {
    fn uses_j(self) -> bool {
        matches!(
            self,
            IndexRule::Pairs
                | IndexRule::Far
                | IndexRule::Adjacent
                | IndexRule::OffPair
                | IndexRule::OnPair
        )
    }

    fn admits(self, n: usize, i: usize, j: usize) -> bool {
        let d = i.abs_diff(j);
        match self {
            IndexRule::Once | IndexRule::Single | IndexRule::Pairs => true,
            IndexRule::Far => d > 1,
            IndexRule::Adjacent => d == 1,
            IndexRule::OffPair => j != i && j != i + 1,
            IndexRule::OnPair => j == i || j == i + 1,
            IndexRule::BelowTop => i + 2 <= n,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Base {
    I,
    J,
    N,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Letter {
        fam: Option<Family>,
        base: Base,
        off: i64,
        obj: i64,
    },
    Lambda(i64),
    Rho(i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct SideTemplate {
    delta: u32,
    toks: Vec<Tok>,
}

fn parse_signed(s: &str) -> Option<i64> {
    match s.strip_prefix('+') {
        Some(rest) => rest.parse().ok(),
        None => s.parse().ok(),
    }
}

fn parse_tok(tok: &str) -> Option<Tok> {
    let (body, obj) = match tok.split_once('@') {
        Some((b, o)) => (b, parse_signed(o)?),
        None => (tok, 0),
    };
    match body {
        "l" => return Some(Tok::Lambda(obj)),
        "r" => return Some(Tok::Rho(obj)),
        _ => {}
    }
    let (name, idx) = body.split_once('_')?;
    let fam = match name {
        "s" => Some(Family::Sigma),
        "si" => Some(Family::SigmaInv),
        "e" => Some(Family::Eps),
        "t" => Some(Family::Tau),
        "m" => Some(Family::Mu),
        "h" => Some(Family::Eta),
        "$" => None,
        _ => return None,
    };
    let base = match &idx[..1] {
        "i" => Base::I,
        "j" => Base::J,
        "n" => Base::N,
        _ => return None,
    };
    let off = if idx.len() > 1 { parse_signed(&idx[1..])? } else { 0 };
    Some(Tok::Letter { fam, base, off, obj })
}

fn parse_side(text: &str) -> Option<SideTemplate> {
    let mut words: Vec<&str> = text.split_whitespace().collect();
    let mut delta = 0;
    while words.first() == Some(&"d") {
        delta += 1;
        words.remove(0);
    }
    if words == ["1"] {
        return Some(SideTemplate {
            delta,
            toks: Vec::new(),
        });
    }
    let toks = words.iter().map(|w| parse_tok(w)).collect::<Option<Vec<_>>>()?;
    if toks.is_empty() {
        return None;
    }
    Some(SideTemplate { delta, toks })
}

/// Replace stand-alone `I` by `id[1]` in a tensor template.
fn expand_unit(text: &str) -> String {
    let chars: Vec<char> = text.chars().collect();
    let mut out = String::new();
    for (k, &c) in chars.iter().enumerate() {
        let isolated = |x: Option<&char>| x.map_or(true, |c| !c.is_alphanumeric() && *c != '[');
        if c == 'I' && isolated(k.checked_sub(1).and_then(|p| chars.get(p))) && isolated(chars.get(k + 1)) {
            out.push_str("id[1]");
        } else {
            out.push(c);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Body {
    Words(Vec<SideTemplate>),
    Terms(Vec<(u32, String)>),
}

/// One line of a catalog: an identifier, a chain of sides, an index rule and
/// the families substituted for `$`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schema {
    pub id: &'static str,
    pub text: &'static str,
    pub rule: IndexRule,
    pub families: Vec<Family>,
    body: Body,
}

impl Schema {
    pub fn word(id: &'static str, rule: IndexRule, families: &[Family], text: &'static str) -> Schema {
        let sides = text
            .split("==")
            .map(|s| parse_side(s).unwrap_or_else(|| panic!("bad template `{text}`")))
            .collect();
        Schema {
            id,
            text,
            rule,
            families: families.to_vec(),
            body: Body::Words(sides),
        }
    }

    pub fn tensor(id: &'static str, text: &'static str) -> Schema {
        let sides = text
            .split("==")
            .map(|s| {
                let s = s.trim();
                match s.strip_prefix("d ") {
                    Some(rest) => (1, expand_unit(rest.trim())),
                    None => (0, expand_unit(s)),
                }
            })
            .collect();
        Schema {
            id,
            text,
            rule: IndexRule::Once,
            families: Vec::new(),
            body: Body::Terms(sides),
        }
    }

    pub fn is_tensor(&self) -> bool {
        matches!(self.body, Body::Terms(_))
    }

    /// Families named explicitly in the template.
    pub fn mentions(&self, f: Family) -> bool {
        match &self.body {
            Body::Words(sides) => {
                self.families.contains(&f)
                    || sides.iter().flat_map(|s| &s.toks).any(|t| match t {
                        Tok::Letter { fam, .. } => *fam == Some(f),
                        Tok::Lambda(_) => f == Family::Lambda,
                        Tok::Rho(_) => f == Family::Rho,
                    })
            }
            Body::Terms(_) => false,
        }
    }
}

/// A side of an instantiated relation: `δ^delta` times a word or term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Side {
    pub delta: u32,
    pub word: Option<Word>,
    pub term: Term,
}

impl Side {
    fn of_word(delta: u32, w: Word) -> Side {
        Side {
            delta,
            term: w.to_term(),
            word: Some(w),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = match &self.word {
            Some(w) => w.to_string(),
            None => self.term.to_string(),
        };
        match self.delta {
            0 => f.write_str(&body),
            1 => write!(f, "d*({body})"),
            k => write!(f, "d^{k}*({body})"),
        }
    }
}

/// A concrete relation with the parameters it was instantiated at.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationInstance {
    pub id: String,
    pub n: Option<usize>,
    pub i: Option<usize>,
    pub j: Option<usize>,
    pub lhs: Side,
    pub rhs: Side,
}

impl RelationInstance {
    pub fn dump_line(&self) -> String {
        let show = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        format!(
            "{} {} {} {} : {} == {}",
            self.id,
            show(self.n),
            show(self.i),
            show(self.j),
            self.lhs,
            self.rhs
        )
    }
}

/// Rewriting of one family into another, applied before alphabet filtering.
pub type Substitution = (Family, Family);

fn substitute(g: Gen, subst: &[Substitution]) -> Gen {
    for &(from, to) in subst {
        if g.family() == from {
            if let Some(h) = g.index().and_then(|i| to.indexed(i, g.arity(Signature::UNIT).0)) {
                return h;
            }
        }
    }
    g
}

fn resolve(
    t: &Tok,
    n: usize,
    i: usize,
    j: usize,
    theta: Option<Family>,
) -> Option<Gen> {
    let obj = |off: i64| -> Option<usize> { usize::try_from(n as i64 + off).ok() };
    match *t {
        Tok::Lambda(o) => Some(Gen::Lambda(obj(o)?)),
        Tok::Rho(o) => Some(Gen::Rho(obj(o)?)),
        Tok::Letter { fam, base, off, obj: o } => {
            let fam = fam.or(theta)?;
            let b = match base {
                Base::I => i,
                Base::J => j,
                Base::N => n,
            };
            let idx = usize::try_from(b as i64 + off).ok()?;
            let g = fam.indexed(idx, obj(o)?)?;
            g.check().ok().map(|_| g)
        }
    }
}

impl Schema {
    /// Instances at object `n` whose letters all lie in `alphabet`.
    ///
    /// Chain sides using letters outside the alphabet are dropped before the
    /// remaining sides are paired consecutively.
    pub fn instantiate(
        &self,
        n: usize,
        alphabet: &GradedDigraph,
        subst: &[Substitution],
    ) -> Result<Vec<RelationInstance>, SchemaError> {
        let sig = alphabet.sig;
        let sides = match &self.body {
            Body::Words(s) => s,
            Body::Terms(_) => return self.instantiate_tensor(alphabet),
        };
        let thetas: Vec<Option<Family>> = if self.families.is_empty() {
            vec![None]
        } else {
            self.families.iter().map(|f| Some(*f)).collect()
        };
        let idx_range: Vec<usize> = if self.rule == IndexRule::Once {
            vec![0]
        } else {
            (1..=n + 2).collect()
        };
        let j_range: Vec<usize> = if self.rule.uses_j() {
            idx_range.clone()
        } else {
            vec![0]
        };
        let mut out: Vec<RelationInstance> = Vec::new();
        for &theta in &thetas {
            if let Some(f) = theta {
                if !alphabet.has(f) && !subst.iter().any(|(from, to)| *from == f && alphabet.has(*to)) {
                    continue;
                }
            }
            for &i in &idx_range {
                for &j in &j_range {
                    if self.rule != IndexRule::Once && !self.rule.admits(n, i, j) {
                        continue;
                    }
                    // Resolve every side; a side with an out-of-range letter
                    // makes the whole instance meaningless.
                    let mut letters: Vec<(u32, Vec<Gen>)> = Vec::new();
                    let mut meaningful = true;
                    for s in sides {
                        let mut gs = Vec::new();
                        for t in &s.toks {
                            match resolve(t, n, i, j, theta) {
                                Some(g) => gs.push(substitute(g, subst)),
                                None => {
                                    meaningful = false;
                                    break;
                                }
                            }
                        }
                        if !meaningful {
                            break;
                        }
                        letters.push((s.delta, gs));
                    }
                    if !meaningful {
                        continue;
                    }
                    let kept: Vec<(u32, Vec<Gen>)> = letters
                        .into_iter()
                        .filter(|(_, gs)| gs.iter().all(|g| alphabet.contains(g)))
                        .collect();
                    let Some(dom) = kept
                        .iter()
                        .find_map(|(_, gs)| gs.first().map(|g| g.arity(sig).0))
                    else {
                        continue;
                    };
                    let mut words = Vec::new();
                    for (delta, gs) in kept {
                        let w = Word::new(sig, dom, gs).map_err(|e| SchemaError::Typing {
                            id: self.id.to_string(),
                            source: e,
                        })?;
                        words.push((delta, w));
                    }
                    for pair in words.windows(2) {
                        let (a, b) = (&pair[0], &pair[1]);
                        if a.1.cod() != b.1.cod() {
                            return Err(SchemaError::Sides {
                                id: self.id.to_string(),
                            });
                        }
                        if a == b {
                            continue;
                        }
                        let inst = RelationInstance {
                            id: self.id.to_string(),
                            n: Some(n),
                            i: (self.rule != IndexRule::Once).then_some(i),
                            j: self.rule.uses_j().then_some(j),
                            lhs: Side::of_word(a.0, a.1.clone()),
                            rhs: Side::of_word(b.0, b.1.clone()),
                        };
                        let dup = out.iter().any(|o| {
                            (o.lhs == inst.lhs && o.rhs == inst.rhs)
                                || (o.lhs == inst.rhs && o.rhs == inst.lhs)
                        });
                        if !dup {
                            out.push(inst);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn instantiate_tensor(&self, alphabet: &GradedDigraph) -> Result<Vec<RelationInstance>, SchemaError> {
        let Body::Terms(sides) = &self.body else {
            unreachable!()
        };
        let typing = |e| SchemaError::Typing {
            id: self.id.to_string(),
            source: e,
        };
        let mut terms = Vec::new();
        for (delta, text) in sides {
            let t = parse_term_in(text, alphabet.sig).map_err(typing)?;
            if t.generators().iter().all(|g| alphabet.contains(g)) {
                terms.push((*delta, t));
            }
        }
        let mut out = Vec::new();
        for pair in terms.windows(2) {
            let ((da, a), (db, b)) = (&pair[0], &pair[1]);
            if (a.dom(), a.cod()) != (b.dom(), b.cod()) {
                return Err(SchemaError::Sides {
                    id: self.id.to_string(),
                });
            }
            out.push(RelationInstance {
                id: self.id.to_string(),
                n: None,
                i: None,
                j: None,
                lhs: Side {
                    delta: *da,
                    word: None,
                    term: a.clone(),
                },
                rhs: Side {
                    delta: *db,
                    word: None,
                    term: b.clone(),
                },
            });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p_alphabet() -> GradedDigraph {
        GradedDigraph::new(
            Signature::UNIT,
            &[Family::Sigma, Family::Eps, Family::Tau, Family::Lambda, Family::Rho],
            0,
        )
    }

    #[test]
    fn far_commutation_instances() {
        let s = Schema::word("P4", IndexRule::Far, &[], "s_i s_j == s_j s_i");
        let inst = s.instantiate(4, &p_alphabet(), &[]).unwrap();
        // Only {1,3} at n = 4 (each unordered pair once).
        assert_eq!(inst.len(), 1);
        assert_eq!(inst[0].dump_line(), "P4 4 1 3 : s[1,4] ; s[3,4] == s[3,4] ; s[1,4]");
    }

    #[test]
    fn chain_becomes_consecutive_pairs() {
        let s = Schema::word("P1", IndexRule::Single, &[], "t_i t_i == t_i == t_i s_i == s_i t_i");
        let inst = s.instantiate(2, &p_alphabet(), &[]).unwrap();
        assert_eq!(inst.len(), 3);
    }

    #[test]
    fn placeholder_and_object_shift() {
        let s = Schema::word("P9", IndexRule::Single, &[Family::Sigma, Family::Eps], "$_i l == l $_i@+1");
        let inst = s.instantiate(1, &p_alphabet(), &[]).unwrap();
        // σ needs n >= 2, so only ε_{1;1}.
        assert_eq!(inst.len(), 1);
        assert_eq!(inst[0].dump_line(), "P9 1 1 - : e[1,1] ; l[1] == l[1] ; e[1,2]");
    }

    #[test]
    fn units_and_delta() {
        let s = Schema::word("P8", IndexRule::Once, &[], "l r == d 1");
        let inst = s.instantiate(2, &p_alphabet(), &[]).unwrap();
        assert_eq!(inst[0].dump_line(), "P8 2 - - : l[2] ; r[2] == d*(id[2])");
    }

    #[test]
    fn filtered_chain_skips_missing_letters() {
        let po = GradedDigraph::new(Signature::UNIT, &[Family::Eps, Family::Mu, Family::Eta], 0);
        let s = Schema::word("PV2", IndexRule::Single, &[], "m_i == m_i m_i == h_i m_i == s_i m_i == h_i s_i");
        let inst = s.instantiate(2, &po, &[]).unwrap();
        assert_eq!(inst.len(), 2);
        assert!(inst.iter().all(|r| !r.lhs.term.to_string().contains('s')));
    }

    #[test]
    fn tensor_templates_expand_unit() {
        assert_eq!(expand_unit("(I # Uu) ; X"), "(id[1] # Uu) ; X");
        let a = GradedDigraph::new(Signature::UNIT, &[Family::X, Family::U, Family::Ubar, Family::D], 0);
        let s = Schema::tensor("P6'", "(I # Uu) ; D ; (I # U) == I");
        let inst = s.instantiate(0, &a, &[]).unwrap();
        assert_eq!(inst.len(), 1);
        assert_eq!(inst[0].rhs.term.to_string(), "id[1]");
    }

    #[test]
    fn inverse_letters_collapse_under_substitution() {
        let a = GradedDigraph::new(Signature::UNIT, &[Family::Sigma], 0);
        let s = Schema::word("PV1", IndexRule::Single, &[], "s_i si_i == si_i s_i == 1");
        let inst = s
            .instantiate(2, &a, &[(Family::SigmaInv, Family::Sigma)])
            .unwrap();
        // Both chain links become σσ = ι; the duplicate is dropped.
        assert_eq!(inst.len(), 1);
    }
}
