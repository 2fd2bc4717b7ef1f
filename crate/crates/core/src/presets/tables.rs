//! Relation tables. Each entry is `lhs word -> rhs expression` with a tag
//! naming the family of relations it belongs to.

use super::{r, RuleSpec};

pub(crate) const Q_PLANE: &[RuleSpec<'static>] = &[
    r("x th", "q*th*x", "q-plane"),
    r("th th th", "0", "q-plane"),
];

pub(crate) const H_PLANE: &[RuleSpec<'static>] = &[
    r("x th", "th*x + h*x*x", "plane"),
    r("th th th", "0", "plane"),
    r("h h h", "0", "plane"),
];

pub(crate) const QJH_CALCULUS: &[RuleSpec<'static>] = &[
    r("x th", "q*th*x + h*x*x", "plane"),
    r("th th th", "0", "plane"),
    r("h h h", "0", "plane"),
    r("x h", "h*x", "plane-h"),
    r("th h", "q*j*h*th", "plane-h"),
    r("dx h", "j*h*dx", "diff1-h"),
    r("dth h", "q*j^2*h*dth", "diff1-h"),
    r("d2x h", "j^2*h*d2x", "diff2-h"),
    r("d2th h", "q*h*d2th", "diff2-h"),
    r("x dx", "j^2*dx*x", "coord-diff1"),
    r("x dth", "q*dth*x + (j^2 - 1)*dx*th + j*h*dx*x", "coord-diff1"),
    r("th dx", "j*q^-1*dx*th - j^2*q^-1*h*dx*x", "coord-diff1"),
    r("th dth", "j*dth*th", "coord-diff1"),
    r("x d2x", "j^2*d2x*x", "coord-diff2"),
    r("x d2th", "q*d2th*x + (j^2 - 1)*d2x*th + j^2*h*d2x*x", "coord-diff2"),
    r("th d2x", "q^-1*d2x*th - j^2*q^-1*h*d2x*x", "coord-diff2"),
    r("th d2th", "d2th*th", "coord-diff2"),
    r("dx dth", "q*j*dth*dx + j^2*h*dx*dx", "diff1-diff1"),
    r("dx d2x", "j*d2x*dx", "diff1-diff2"),
    r("dx d2th", "q*d2th*dx + (j - j^2)*d2x*dth + j^2*h*d2x*dx", "diff1-diff2"),
    r("dth d2x", "j^2*q^-1*d2x*dth - j^2*q^-1*h*d2x*dx", "diff1-diff2"),
    r("dth d2th", "d2th*dth", "diff1-diff2"),
    r("d2x d2th", "q*j^2*d2th*d2x + j*h*d2x*d2x", "diff2-diff2"),
    r("dx dx dx", "0", "diff1-cube"),
];

/// The q -> 1 lists, transcribed independently of [`QJH_CALCULUS`].
pub(crate) const HJ_CALCULUS: &[RuleSpec<'static>] = &[
    r("x th", "th*x + h*x*x", "plane"),
    r("th th th", "0", "plane"),
    r("h h h", "0", "plane"),
    r("x h", "h*x", "plane-h"),
    r("th h", "j*h*th", "plane-h"),
    r("dx h", "j*h*dx", "diff1-h"),
    r("dth h", "j^2*h*dth", "diff1-h"),
    r("d2x h", "j^2*h*d2x", "diff2-h"),
    r("d2th h", "h*d2th", "diff2-h"),
    r("x dx", "j^2*dx*x", "coord-diff1"),
    r("x dth", "dth*x + (j^2 - 1)*dx*th + j*h*dx*x", "coord-diff1"),
    r("th dx", "j*dx*th - j^2*h*dx*x", "coord-diff1"),
    r("th dth", "j*dth*th", "coord-diff1"),
    r("x d2x", "j^2*d2x*x", "coord-diff2"),
    r("x d2th", "d2th*x + (j^2 - 1)*d2x*th + j^2*h*d2x*x", "coord-diff2"),
    r("th d2x", "d2x*th - j^2*h*d2x*x", "coord-diff2"),
    r("th d2th", "d2th*th", "coord-diff2"),
    r("dx dth", "j*dth*dx + j^2*h*dx*dx", "diff1-diff1"),
    r("dx d2x", "j*d2x*dx", "diff1-diff2"),
    r("dx d2th", "d2th*dx + (j - j^2)*d2x*dth + j^2*h*d2x*dx", "diff1-diff2"),
    r("dth d2x", "j^2*d2x*dth - j^2*h*d2x*dx", "diff1-diff2"),
    r("dth d2th", "d2th*dth", "diff1-diff2"),
    r("d2x d2th", "j^2*d2th*d2x + j*h*d2x*d2x", "diff2-diff2"),
    r("dx dx dx", "0", "diff1-cube"),
];

pub(crate) const WEYL_Q: &[RuleSpec<'static>] = &[
    r("x th", "q*th*x + h*x*x", "plane"),
    r("th th th", "0", "plane"),
    r("h h h", "0", "plane"),
    r("x h", "h*x", "plane-h"),
    r("th h", "q*j*h*th", "plane-h"),
    r("px x", "1 + j^2*x*px + (j^2 - 1)*th*pth + h*x*pth", "coord-partial"),
    r("pth x", "q*x*pth", "coord-partial"),
    r("px th", "j^2*q^-1*th*px - j^2*q^-1*h*x*px", "coord-partial"),
    r("pth th", "1 + j^2*th*pth", "coord-partial"),
    r("px pth", "j*q*pth*px", "partial-partial"),
    r("pth pth pth", "0", "partial-partial"),
    r("px h", "h*px", "partial-h"),
    r("pth h", "j^2*q^-1*h*pth", "partial-h"),
];

pub(crate) const WEYL: &[RuleSpec<'static>] = &[
    r("x th", "th*x + h*x*x", "plane"),
    r("th th th", "0", "plane"),
    r("h h h", "0", "plane"),
    r("x h", "h*x", "plane-h"),
    r("th h", "j*h*th", "plane-h"),
    r("px x", "1 + j^2*x*px + (j^2 - 1)*th*pth + h*x*pth", "coord-partial"),
    r("pth x", "x*pth", "coord-partial"),
    r("px th", "j^2*th*px - j^2*h*x*px", "coord-partial"),
    r("pth th", "1 + j^2*th*pth", "coord-partial"),
    r("px pth", "j*pth*px", "partial-partial"),
    r("pth pth pth", "0", "partial-partial"),
    r("px h", "h*px", "partial-h"),
    r("pth h", "j^2*h*pth", "partial-h"),
];
