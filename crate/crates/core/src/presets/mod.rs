//! Factory for the built-in algebras.

mod contraction;
mod tables;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::expr::parse_poly;
use crate::freealg::{Alphabet, DImage, GeneratorInfo, Sym, Word};
use crate::names::*;
use crate::rewrite::{orient, Presentation, QBinding, RewriteRule, TermOrder};

pub use contraction::{verify_contraction, ContractionCoefficients};
use tables::*;

/// Names accepted by [`build`], in catalogue order.
pub const PRESETS: [&str; 13] = [
    "q_plane",
    "h_plane",
    "qjh_calculus",
    "hj_calculus",
    "weyl_q",
    "weyl",
    "cartan_q",
    "cartan",
    "glhj",
    "glhj_inv",
    "dual_plane",
    "coaction_plane",
    "coaction_dual",
];

pub fn build(name: &str) -> Result<Presentation> {
    match name {
        "q_plane" => q_plane(),
        "h_plane" => h_plane(),
        "qjh_calculus" => qjh_calculus(),
        "hj_calculus" => hj_calculus(),
        "weyl_q" => weyl_q(),
        "weyl" => weyl(),
        "cartan_q" => crate::calculus::cartan_preset(true),
        "cartan" => crate::calculus::cartan_preset(false),
        "glhj" => crate::supergroup::glhj(),
        "glhj_inv" => crate::supergroup::glhj_inv(),
        "dual_plane" => crate::supergroup::dual_plane(),
        "coaction_plane" => crate::supergroup::coaction_plane(),
        "coaction_dual" => crate::supergroup::coaction_dual(),
        other => Err(Error::UnknownPreset(other.to_string())),
    }
}

/// Specializes q in every rule; see [`Presentation::specialize`].
pub fn specialize(p: &Presentation, q0: &BigRational) -> Result<Presentation> {
    p.specialize(q0)
}

pub(crate) fn word(spec: &str) -> Word {
    spec.split_whitespace().map(Sym::new).collect()
}

/// Rule from a space-separated lhs and an expression for the rhs.
pub(crate) struct RuleSpec<'a> {
    pub lhs: &'a str,
    pub rhs: &'a str,
    pub tag: &'a str,
}

pub(crate) const fn r<'a>(lhs: &'a str, rhs: &'a str, tag: &'a str) -> RuleSpec<'a> {
    RuleSpec { lhs, rhs, tag }
}

pub(crate) fn make_rules(
    specs: &[RuleSpec<'_>],
    alphabet: &Alphabet,
    order: &TermOrder,
) -> Result<Vec<RewriteRule>> {
    specs
        .iter()
        .map(|s| {
            let rhs = parse_poly(s.rhs, Some(alphabet))?;
            orient(word(s.lhs), rhs, order, s.tag)
        })
        .collect()
}

pub(crate) fn assemble(
    name: &str,
    alphabet: Alphabet,
    specs: &[RuleSpec<'_>],
    order: TermOrder,
    q: QBinding,
) -> Result<Presentation> {
    let rules = make_rules(specs, &alphabet, &order)?;
    Presentation::new(name, alphabet, rules, order, q)
}

pub(crate) fn q_one() -> QBinding {
    QBinding::Value(BigRational::from_integer(1.into()))
}

/// x(0), θ(1), h(declared 2, weight 1).
pub(crate) fn plane_generators() -> Vec<GeneratorInfo> {
    vec![
        GeneratorInfo::new(H, 2).with_weight(1).nilpotent(3),
        GeneratorInfo::new(TH, 1).nilpotent(3),
        GeneratorInfo::new(X, 0),
    ]
}

/// Plane generators plus first and second differentials.
pub(crate) fn calculus_generators() -> Vec<GeneratorInfo> {
    let mut g = vec![
        GeneratorInfo::new(H, 2).with_weight(1).nilpotent(3).d(DImage::Zero),
        GeneratorInfo::new(TH, 1).nilpotent(3).d(DImage::Gen(Sym::new(DTH))),
        GeneratorInfo::new(X, 0).d(DImage::Gen(Sym::new(DX))),
    ];
    g.extend([
        GeneratorInfo::new(DX, 1).nilpotent(3).d(DImage::Gen(Sym::new(D2X))),
        GeneratorInfo::new(DTH, 2).d(DImage::Gen(Sym::new(D2TH))),
        GeneratorInfo::new(D2X, 2).d(DImage::Zero),
        GeneratorInfo::new(D2TH, 0).d(DImage::Zero),
    ]);
    g
}

pub(crate) fn calculus_order() -> TermOrder {
    TermOrder::new(
        &[
            (H, 1),
            (X, 1),
            (TH, 2),
            (DX, 1),
            (DTH, 2),
            (D2X, 1),
            (D2TH, 2),
        ],
        &[H, D2TH, D2X, DTH, DX, TH, X],
    )
}

fn plane_order() -> TermOrder {
    TermOrder::new(&[(H, 1), (TH, 2), (X, 1)], &[H, TH, X])
}

pub fn q_plane() -> Result<Presentation> {
    let alphabet = Alphabet::new(vec![
        GeneratorInfo::new(TH, 1).nilpotent(3),
        GeneratorInfo::new(X, 0),
    ]);
    let order = TermOrder::new(&[(TH, 1), (X, 1)], &[TH, X]);
    assemble("q_plane", alphabet, Q_PLANE, order, QBinding::Symbolic)
}

pub fn h_plane() -> Result<Presentation> {
    let alphabet = Alphabet::new(plane_generators());
    assemble("h_plane", alphabet, H_PLANE, plane_order(), q_one())
}

pub fn qjh_calculus() -> Result<Presentation> {
    let alphabet = Alphabet::new(calculus_generators());
    assemble(
        "qjh_calculus",
        alphabet,
        QJH_CALCULUS,
        calculus_order(),
        QBinding::Symbolic,
    )
}

pub fn hj_calculus() -> Result<Presentation> {
    let alphabet = Alphabet::new(calculus_generators());
    assemble("hj_calculus", alphabet, HJ_CALCULUS, calculus_order(), q_one())
}

fn weyl_generators() -> Vec<GeneratorInfo> {
    let mut g = plane_generators();
    g.extend([GeneratorInfo::new(PX, 0), GeneratorInfo::new(PTH, 2).nilpotent(3)]);
    g
}

fn weyl_order() -> TermOrder {
    TermOrder::new(
        &[(H, 1), (TH, 2), (X, 1), (PTH, 1), (PX, 2)],
        &[H, TH, X, PTH, PX],
    )
}

/// Coordinates and partial derivatives with the q-dependent relations.
pub fn weyl_q() -> Result<Presentation> {
    let alphabet = Alphabet::new(weyl_generators());
    assemble("weyl_q", alphabet, WEYL_Q, weyl_order(), QBinding::Symbolic)
}

/// The Weyl algebra on x, θ, ∂x, ∂θ at q = 1.
pub fn weyl() -> Result<Presentation> {
    let alphabet = Alphabet::new(weyl_generators());
    assemble("weyl", alphabet, WEYL, weyl_order(), q_one())
}
