//! ASCII generator names and their Unicode / LaTeX renderings.

pub const H: &str = "h";
pub const X: &str = "x";
pub const TH: &str = "th";
pub const XINV: &str = "xinv";
pub const DX: &str = "dx";
pub const DTH: &str = "dth";
pub const D2X: &str = "d2x";
pub const D2TH: &str = "d2th";
pub const W: &str = "w";
pub const U: &str = "u";
pub const A: &str = "a";
pub const B: &str = "b";
pub const G: &str = "g";
pub const DT: &str = "dT";
pub const AINV: &str = "ainv";
pub const DTINV: &str = "dTinv";
pub const PHI: &str = "phi";
pub const Y: &str = "y";
pub const PX: &str = "px";
pub const PTH: &str = "pth";

pub(crate) const BUILTIN: [&str; 20] = [
    H, D2TH, D2X, DTH, DX, W, U, TH, XINV, X, G, B, DT, DTINV, A, AINV, PHI, Y, PX, PTH,
];

/// (ascii, unicode, latex)
const TABLE: [(&str, &str, &str); 20] = [
    (H, "h", "h"),
    (X, "x", "x"),
    (TH, "θ", "\\theta"),
    (XINV, "x⁻¹", "x^{-1}"),
    (DX, "dx", "{\\sf d}x"),
    (DTH, "dθ", "{\\sf d}\\theta"),
    (D2X, "d²x", "{\\sf d}^2x"),
    (D2TH, "d²θ", "{\\sf d}^2\\theta"),
    (W, "w", "w"),
    (U, "u", "u"),
    (A, "a", "a"),
    (B, "β", "\\beta"),
    (G, "γ", "\\gamma"),
    (DT, "d", "d"),
    (AINV, "a⁻¹", "a^{-1}"),
    (DTINV, "d⁻¹", "d^{-1}"),
    (PHI, "φ", "\\varphi"),
    (Y, "y", "y"),
    (PX, "∂x", "\\partial_x"),
    (PTH, "∂θ", "\\partial_\\theta"),
];

pub fn unicode(ascii: &str) -> &str {
    TABLE
        .iter()
        .find(|(a, _, _)| *a == ascii)
        .map_or(ascii, |(_, u, _)| u)
}

pub fn latex(ascii: &str) -> &str {
    TABLE
        .iter()
        .find(|(a, _, _)| *a == ascii)
        .map_or(ascii, |(_, _, l)| l)
}

/// Maps a Unicode spelling (or extra ASCII alias) to the canonical name.
pub fn from_alias(token: &str) -> Option<&'static str> {
    let aliases: [(&str, &str); 7] = [
        ("theta", TH),
        ("beta", B),
        ("gamma", G),
        ("varphi", PHI),
        ("d²θ", D2TH),
        ("∂θ", PTH),
        ("∂x", PX),
    ];
    if let Some((_, a)) = aliases.iter().find(|(k, _)| *k == token) {
        return Some(a);
    }
    TABLE
        .iter()
        .find(|(a, u, _)| *u == token && *a != *u)
        .map(|(a, _, _)| *a)
}
