//! Relation tables, transcribed once and shared by every level that uses them.

use super::schema::{IndexRule::*, Schema};
use crate::gen::Family::{self, *};

const W: fn(&'static str, super::schema::IndexRule, &[Family], &'static str) -> Schema = Schema::word;
const T: fn(&'static str, &'static str) -> Schema = Schema::tensor;

/// Partition monoids; with `linear`, ε² = δε.
pub fn partition_monoid(linear: bool) -> Vec<Schema> {
    let mut v = vec![W("P1", Single, &[], "s_i s_i == 1")];
    if linear {
        v.push(W("P1", Single, &[], "e_i e_i == d e_i"));
    } else {
        v.push(W("P1", Single, &[], "e_i e_i == e_i"));
    }
    v.extend([
        W("P1", Single, &[], "t_i t_i == t_i == t_i s_i == s_i t_i"),
        W("P2", Single, &[], "s_i e_i == e_i+1 s_i"),
        W("P2", Single, &[], "e_i e_i+1 s_i == e_i e_i+1"),
        W("P3", Pairs, &[], "e_i e_j == e_j e_i"),
        W("P3", Pairs, &[], "t_i t_j == t_j t_i"),
        W("P4", Far, &[], "s_i s_j == s_j s_i"),
        W("P4", Far, &[], "s_i t_j == t_j s_i"),
        W("P5", Adjacent, &[], "s_i s_j s_i == s_j s_i s_j"),
        W("P5", Adjacent, &[], "s_i t_j s_i == s_j t_i s_j"),
        W("P6", OffPair, &[], "s_i e_j == e_j s_i"),
        W("P6", OffPair, &[], "t_i e_j == e_j t_i"),
        W("P7", OnPair, &[], "t_i e_j t_i == t_i"),
        W("P7", OnPair, &[], "e_j t_i e_j == e_j"),
    ]);
    v
}

pub fn partition_category(linear: bool) -> Vec<Schema> {
    vec![
        if linear {
            W("P8", Once, &[], "l r == d 1")
        } else {
            W("P8", Once, &[], "l r == 1")
        },
        W("P8", Once, &[], "r l == e_n+1@+1"),
        W("P9", Single, &[Sigma, Eps, Tau], "$_i l == l $_i@+1"),
        W("P9", Single, &[Sigma, Eps, Tau], "r $_i == $_i@+1 r"),
    ]
}

pub fn partition_tensor(linear: bool) -> Vec<Schema> {
    vec![
        T("P1'", "X ; X == id[2]"),
        if linear {
            T("P1'", "Uu ; U == d id[0]")
        } else {
            T("P1'", "Uu ; U == id[0]")
        },
        T("P2'", "D ; D == D == D ; X == X ; D"),
        T("P2'", "(D # I) ; (I # D) == (I # D) ; (D # I)"),
        T("P3'", "(X # I) ; (I # X) ; (X # I) == (I # X) ; (X # I) ; (I # X)"),
        T("P4'", "(X # I) ; (I # D) ; (X # I) == (I # X) ; (D # I) ; (I # X)"),
        T("P5'", "X ; (I # U) == U # I"),
        T("P5'", "(I # Uu) ; X == Uu # I"),
        T("P6'", "(I # Uu) ; D ; (I # U) == I"),
        T("P6'", "D ; (I # U # Uu) ; D == D"),
    ]
}

/// Brauer monoids; with `linear`, τ² = δτ.
pub fn brauer_monoid(linear: bool) -> Vec<Schema> {
    let mut v = vec![W("B1", Single, &[], "s_i s_i == 1")];
    if linear {
        v.push(W("B1", Single, &[], "t_i t_i == d t_i"));
        v.push(W("B1", Single, &[], "t_i == t_i s_i == s_i t_i"));
    } else {
        v.push(W("B1", Single, &[], "t_i t_i == t_i == t_i s_i == s_i t_i"));
    }
    v.extend([
        W("B2", Far, &[], "s_i s_j == s_j s_i"),
        W("B2", Far, &[], "t_i t_j == t_j t_i"),
        W("B2", Far, &[], "s_i t_j == t_j s_i"),
        W("B3", Adjacent, &[], "s_i s_j s_i == s_j s_i s_j"),
        W("B3", Adjacent, &[], "s_i t_j s_i == s_j t_i s_j"),
        W("B3", Adjacent, &[], "t_i s_j t_i == t_i"),
    ]);
    v
}

pub fn brauer_category(linear: bool) -> Vec<Schema> {
    vec![
        if linear {
            W("B4", Once, &[], "l r == d 1")
        } else {
            W("B4", Once, &[], "l r == 1")
        },
        W("B4", Once, &[], "r l == t_n+1@+2"),
        W("B5", Single, &[Sigma, Tau], "$_i l == l $_i@+2"),
        W("B5", Single, &[Sigma, Tau], "r $_i == $_i@+2 r"),
    ]
}

pub fn brauer_tensor(linear: bool) -> Vec<Schema> {
    vec![
        T("B1'", "X ; X == id[2]"),
        if linear {
            T("B1'", "Uu ; U == d id[0]")
        } else {
            T("B1'", "Uu ; U == id[0]")
        },
        T("B1'", "X ; U == U"),
        T("B1'", "Uu ; X == Uu"),
        T("B2'", "(X # I) ; (I # X) ; (X # I) == (I # X) ; (X # I) ; (I # X)"),
        T("B3'", "(I # Uu) ; (U # I) == I == (Uu # I) ; (I # U)"),
        T("B4'", "(X # I) ; (I # U) == (I # X) ; (U # I)"),
        T("B4'", "(Uu # I) ; (I # X) == (I # Uu) ; (X # I)"),
    ]
}

pub fn tl_monoid(linear: bool) -> Vec<Schema> {
    vec![
        if linear {
            W("TL1", Single, &[], "t_i t_i == d t_i")
        } else {
            W("TL1", Single, &[], "t_i t_i == t_i")
        },
        W("TL1", Far, &[], "t_i t_j == t_j t_i"),
        W("TL1", Adjacent, &[], "t_i t_j t_i == t_i"),
    ]
}

pub fn tl_category(linear: bool) -> Vec<Schema> {
    vec![
        if linear {
            W("TL2", Once, &[], "l r == d 1")
        } else {
            W("TL2", Once, &[], "l r == 1")
        },
        W("TL2", Once, &[], "r l == t_n+1@+2"),
        W("TL2", Single, &[Tau], "$_i l == l $_i@+2"),
        W("TL2", Single, &[Tau], "r $_i == $_i@+2 r"),
    ]
}

pub fn tl_tensor(linear: bool) -> Vec<Schema> {
    vec![
        if linear {
            T("TL'", "Uu ; U == d id[0]")
        } else {
            T("TL'", "Uu ; U == id[0]")
        },
        T("TL'", "(I # Uu) ; (U # I) == I == (Uu # I) ; (I # U)"),
    ]
}

/// Partial vine monoids. Filtered by alphabet, the same table serves the
/// isotone monoids.
pub fn partial_vine_monoid() -> Vec<Schema> {
    vec![
        W("PV1", Single, &[], "s_i si_i == si_i s_i == 1"),
        W("PV1", Single, &[], "e_i e_i == e_i"),
        W("PV1", Pairs, &[], "e_i e_j == e_j e_i"),
        W("PV2", Single, &[], "m_i == m_i m_i == h_i m_i == s_i m_i == h_i s_i"),
        W("PV2", Single, &[], "h_i == h_i h_i == m_i h_i == s_i h_i == m_i s_i"),
        W("PV3", Single, &[], "m_i m_i+1 == m_i s_i+1"),
        W("PV3", Single, &[], "m_i h_i+1 == m_i"),
        W("PV3", Single, &[], "h_i+1 h_i == h_i+1 s_i"),
        W("PV3", Single, &[], "h_i+1 m_i == h_i+1"),
        W("PV4", Single, &[], "m_i+1 m_i == m_i m_i+1 m_i == m_i+1 m_i m_i+1"),
        W("PV4", Single, &[], "h_i h_i+1 == h_i h_i+1 h_i == h_i+1 h_i h_i+1"),
        W("PV5", Single, &[], "m_i e_i+1 == m_i"),
        W("PV5", Single, &[], "e_i+1 m_i == e_i+1"),
        W("PV5", Single, &[], "h_i e_i == h_i"),
        W("PV5", Single, &[], "e_i h_i == e_i"),
        W("PV6", Single, &[], "m_i+1 s_i == s_i s_i+1 m_i m_i+1"),
        W("PV6", Single, &[], "h_i s_i+1 == s_i+1 s_i h_i+1 h_i"),
        W("PV7", Single, &[], "s_i e_i == e_i+1 s_i"),
        W("PV7", Single, &[], "s_i e_i+1 == e_i s_i"),
        W("PV7", Single, &[], "s_i s_i e_i == e_i"),
        W("PV8", Single, &[], "s_i e_i e_i+1 == e_i e_i+1 == m_i e_i == h_i e_i+1"),
        W("PV9", Far, &[], "s_i s_j == s_j s_i"),
        W("PV9", Far, &[], "m_i m_j == m_j m_i"),
        W("PV9", Far, &[], "h_i h_j == h_j h_i"),
        W("PV10", Far, &[], "s_i m_j == m_j s_i"),
        W("PV10", Far, &[], "s_i h_j == h_j s_i"),
        W("PV11", Adjacent, &[], "s_i s_j s_i == s_j s_i s_j"),
        W("PV12", OffPair, &[], "m_i h_j == h_j m_i"),
        W("PV12", OffPair, &[], "s_i e_j == e_j s_i"),
        W("PV13", OffPair, &[], "m_i e_j == e_j m_i"),
        W("PV13", OffPair, &[], "h_i e_j == e_j h_i"),
    ]
}

pub fn partial_vine_category() -> Vec<Schema> {
    let th = &[Sigma, SigmaInv, Eps, Mu, Eta];
    vec![
        W("PV14", Once, &[], "l r == 1"),
        W("PV14", Once, &[], "r l == e_n+1@+1"),
        W("PV15", Single, th, "$_i l == l $_i@+1"),
        W("PV15", Single, th, "r $_i == $_i@+1 r"),
    ]
}

pub fn partial_vine_tensor() -> Vec<Schema> {
    vec![
        T("PV1'", "X ; Xi == Xi ; X == id[2]"),
        T("PV1'", "Uu ; U == id[0]"),
        T("PV2'", "X ; V == V"),
        T("PV2'", "V ; U == U # U"),
        T("PV2'", "(V # I) ; V == (I # V) ; V"),
        T("PV2'", "(I # Uu) ; V == I"),
        T("PV3'", "(X # I) ; (I # X) ; (X # I) == (I # X) ; (X # I) ; (I # X)"),
        T("PV4'", "X ; (U # I) == I # U"),
        T("PV4'", "X ; (I # U) == U # I"),
        T("PV5'", "(Uu # I) ; X == I # Uu"),
        T("PV5'", "(I # Uu) ; X == Uu # I"),
        T("PV6'", "(I # V) ; X == (X # I) ; (I # X) ; (V # I)"),
        T("PV6'", "(V # I) ; X == (I # X) ; (X # I) ; (I # V)"),
    ]
}

pub fn partial_braid_monoid() -> Vec<Schema> {
    vec![
        W("IB1", Single, &[], "s_i si_i == si_i s_i == 1"),
        W("IB1", Single, &[], "e_i e_i == e_i"),
        W("IB1", Pairs, &[], "e_i e_j == e_j e_i"),
        W("IB1", OffPair, &[], "s_i e_j == e_j s_i"),
        W("IB2", Single, &[], "s_i e_i == e_i+1 s_i"),
        W("IB2", Single, &[], "s_i e_i+1 == e_i s_i"),
        W("IB2", Single, &[], "s_i s_i e_i == e_i"),
        W("IB2", Single, &[], "s_i e_i e_i+1 == e_i e_i+1"),
        W("IB3", Far, &[], "s_i s_j == s_j s_i"),
        W("IB3", Adjacent, &[], "s_i s_j s_i == s_j s_i s_j"),
    ]
}

pub fn partial_braid_category() -> Vec<Schema> {
    let th = &[Sigma, SigmaInv, Eps];
    vec![
        W("IB4", Once, &[], "l r == 1"),
        W("IB4", Once, &[], "r l == e_n+1@+1"),
        W("IB5", Single, th, "$_i l == l $_i@+1"),
        W("IB5", Single, th, "r $_i == $_i@+1 r"),
    ]
}

pub fn partial_braid_tensor() -> Vec<Schema> {
    vec![
        T("IB1'", "X ; Xi == Xi ; X == id[2]"),
        T("IB1'", "Uu ; U == id[0]"),
        T("IB2'", "(X # I) ; (I # X) ; (X # I) == (I # X) ; (X # I) ; (I # X)"),
        T("IB3'", "X ; (U # I) == I # U"),
        T("IB3'", "X ; (I # U) == U # I"),
        T("IB3'", "(Uu # I) ; X == I # Uu"),
        T("IB3'", "(I # Uu) ; X == Uu # I"),
    ]
}

pub fn vine_monoid() -> Vec<Schema> {
    vec![
        W("V1", Single, &[], "s_i si_i == si_i s_i == 1"),
        W("V2", Single, &[], "m_i == m_i m_i == h_i m_i == s_i m_i == h_i s_i"),
        W("V2", Single, &[], "h_i == h_i h_i == m_i h_i == s_i h_i == m_i s_i"),
        W("V3", Single, &[], "m_i m_i+1 == m_i s_i+1"),
        W("V3", Single, &[], "h_i+1 h_i == h_i+1 s_i"),
        W("V3", Single, &[], "m_i h_i+1 == m_i"),
        W("V3", Single, &[], "h_i+1 m_i == h_i+1"),
        W("V4", Single, &[], "m_i+1 m_i == m_i m_i+1 m_i == m_i+1 m_i m_i+1"),
        W("V4", Single, &[], "h_i h_i+1 == h_i h_i+1 h_i == h_i+1 h_i h_i+1"),
        W("V5", Single, &[], "m_i+1 s_i == s_i s_i+1 m_i m_i+1"),
        W("V5", Single, &[], "h_i s_i+1 == s_i+1 s_i h_i+1 h_i"),
        W("V6", Far, &[], "s_i s_j == s_j s_i"),
        W("V6", Far, &[], "m_i m_j == m_j m_i"),
        W("V6", Far, &[], "h_i h_j == h_j h_i"),
        W("V7", Far, &[], "s_i m_j == m_j s_i"),
        W("V7", Far, &[], "s_i h_j == h_j s_i"),
        W("V8", Adjacent, &[], "s_i s_j s_i == s_j s_i s_j"),
        W("V9", OffPair, &[], "m_i h_j == h_j m_i"),
    ]
}

pub fn vine_category() -> Vec<Schema> {
    let th = &[Sigma, SigmaInv, Mu, Eta];
    vec![
        W("V10", Once, &[], "l r == 1"),
        W("V10", Once, &[], "r l == m_n@+1"),
        W("V11", Single, th, "$_i l == l $_i@+1"),
        W("V12", BelowTop, th, "r $_i == $_i@+1 r"),
        W("V13", Once, th, "r $_n-1 == m_n@+1 $_n-1@+1 r"),
    ]
}

pub fn vine_tensor() -> Vec<Schema> {
    vec![
        T("V1'", "X ; Xi == Xi ; X == id[2]"),
        T("V1'", "X ; V == V"),
        T("V2'", "(V # I) ; V == (I # V) ; V"),
        T("V2'", "(I # Uu) ; V == I"),
        T("V3'", "(X # I) ; (I # X) ; (X # I) == (I # X) ; (X # I) ; (I # X)"),
        T("V4'", "(Uu # I) ; X == I # Uu"),
        T("V4'", "(I # Uu) ; X == Uu # I"),
        T("V5'", "(I # V) ; X == (X # I) ; (I # X) ; (V # I)"),
        T("V5'", "(V # I) ; X == (I # X) ; (X # I) ; (I # V)"),
    ]
}

/// The kernel relation σ² = ι that turns braids and vines into transformations.
pub fn square_kernel() -> Vec<Schema> {
    vec![W("K", Single, &[], "s_i s_i == 1")]
}

pub fn pt_tensor() -> Vec<Schema> {
    vec![
        T("PT'", "X ; X == id[2]"),
        T("PT'", "(X # I) ; (I # X) ; (X # I) == (I # X) ; (X # I) ; (I # X)"),
        T("PT'", "Uu ; U == id[0]"),
        T("PT'", "X ; V == V"),
        T("PT'", "V ; U == U # U"),
        T("PT'", "(V # I) ; V == (I # V) ; V"),
        T("PT'", "(I # Uu) ; V == I"),
        T("PT'", "X ; (U # I) == I # U"),
        T("PT'", "(Uu # I) ; X == I # Uu"),
        T("PT'", "(I # V) ; X == (X # I) ; (I # X) ; (V # I)"),
    ]
}

pub fn i_tensor() -> Vec<Schema> {
    vec![
        T("I'", "X ; X == id[2]"),
        T("I'", "(X # I) ; (I # X) ; (X # I) == (I # X) ; (X # I) ; (I # X)"),
        T("I'", "Uu ; U == id[0]"),
        T("I'", "X ; (U # I) == I # U"),
        T("I'", "(Uu # I) ; X == I # Uu"),
    ]
}

pub fn t_tensor() -> Vec<Schema> {
    vec![
        T("T'", "X ; X == id[2]"),
        T("T'", "(X # I) ; (I # X) ; (X # I) == (I # X) ; (X # I) ; (I # X)"),
        T("T'", "X ; V == V"),
        T("T'", "(V # I) ; V == (I # V) ; V"),
        T("T'", "(I # Uu) ; V == I"),
        T("T'", "(Uu # I) ; X == I # Uu"),
        T("T'", "(I # V) ; X == (X # I) ; (I # X) ; (V # I)"),
    ]
}

pub fn po_tensor() -> Vec<Schema> {
    vec![
        T("PO'", "Uu ; U == id[0]"),
        T("PO'", "V ; U == U # U"),
        T("PO'", "(V # I) ; V == (I # V) ; V"),
        T("PO'", "(I # Uu) ; V == I == (Uu # I) ; V"),
    ]
}

pub fn o_tensor() -> Vec<Schema> {
    vec![
        T("O'", "(V # I) ; V == (I # V) ; V"),
        T("O'", "(I # Uu) ; V == I == (Uu # I) ; V"),
    ]
}

pub fn oi_tensor() -> Vec<Schema> {
    vec![T("OI'", "Uu ; U == id[0]")]
}
