//! Named target categories and dispatch onto the concrete interpretations.

use crate::diagram::DiagramKind;
use crate::gen::Signature;
use crate::transform::{MapKind, RhoStyle};
use std::fmt;
use std::str::FromStr;

/// The category a presentation is read in. The three `Shadow*` targets read
/// braid and vine symbols through their endpoints, landing in `PT`, `I` and `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    P,
    B,
    TL,
    PT,
    T,
    I,
    PO,
    O,
    OI,
    ShadowPV,
    ShadowIB,
    ShadowV,
}

/// How generators of a target are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    Diagram(DiagramKind),
    Map(MapKind, RhoStyle),
}

impl Target {
    pub const ALL: [Target; 12] = [
        Target::P,
        Target::B,
        Target::TL,
        Target::PT,
        Target::T,
        Target::I,
        Target::PO,
        Target::O,
        Target::OI,
        Target::ShadowPV,
        Target::ShadowIB,
        Target::ShadowV,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::P => "P",
            Target::B => "B",
            Target::TL => "TL",
            Target::PT => "PT",
            Target::T => "T",
            Target::I => "I",
            Target::PO => "PO",
            Target::O => "O",
            Target::OI => "OI",
            Target::ShadowPV => "shadow-PV",
            Target::ShadowIB => "shadow-IB",
            Target::ShadowV => "shadow-V",
        }
    }

    pub fn reading(self) -> Reading {
        use RhoStyle::{Chop, Fold};
        match self {
            Target::P => Reading::Diagram(DiagramKind::P),
            Target::B => Reading::Diagram(DiagramKind::B),
            Target::TL => Reading::Diagram(DiagramKind::TL),
            Target::PT | Target::ShadowPV => Reading::Map(MapKind::PT, Chop),
            Target::I | Target::ShadowIB => Reading::Map(MapKind::I, Chop),
            Target::T | Target::ShadowV => Reading::Map(MapKind::T, Fold),
            Target::PO => Reading::Map(MapKind::PO, Chop),
            Target::O => Reading::Map(MapKind::O, Fold),
            Target::OI => Reading::Map(MapKind::OI, Chop),
        }
    }

    pub fn signature(self) -> Signature {
        match self.reading() {
            Reading::Diagram(k) => Signature { step: k.step() },
            Reading::Map(..) => Signature::UNIT,
        }
    }

    pub fn is_diagram(self) -> bool {
        matches!(self.reading(), Reading::Diagram(_))
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Target, String> {
        Target::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown category `{s}`"))
    }
}

/// Run `$body` with `$i` bound to the interpretation for `$target`.
/// With `$linear` set, diagram targets use the δ-linear reading.
#[macro_export]
macro_rules! with_interpretation {
    ($target:expr, $linear:expr, |$i:ident| $body:expr) => {{
        use $crate::free_cat::{DiagramSemantics, LinearSemantics, MapSemantics};
        use $crate::presentations::Reading;
        match ($target.reading(), $linear) {
            (Reading::Diagram(kind), false) => {
                let $i = DiagramSemantics { kind };
                $body
            }
            (Reading::Diagram(kind), true) => {
                let $i = LinearSemantics { kind };
                $body
            }
            (Reading::Map(kind, rho), _) => {
                let $i = MapSemantics { rho, kind };
                $body
            }
        }
    }};
}

/// Like `with_interpretation!` but only for readings with enumerable hom-sets.
#[macro_export]
macro_rules! with_finite {
    ($target:expr, |$i:ident| $body:expr) => {{
        use $crate::free_cat::{DiagramSemantics, MapSemantics};
        use $crate::presentations::Reading;
        match $target.reading() {
            Reading::Diagram(kind) => {
                let $i = DiagramSemantics { kind };
                $body
            }
            Reading::Map(kind, rho) => {
                let $i = MapSemantics { rho, kind };
                $body
            }
        }
    }};
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse_back() {
        for t in Target::ALL {
            assert_eq!(t.name().parse::<Target>().unwrap(), t);
        }
        assert!("Q".parse::<Target>().is_err());
    }

    #[test]
    fn brauer_like_targets_have_step_two() {
        assert_eq!(Target::B.signature().step, 2);
        assert_eq!(Target::TL.signature().step, 2);
        assert_eq!(Target::P.signature().step, 1);
        assert_eq!(Target::ShadowV.signature().step, 1);
    }
}
