//! Exterior differential, partial derivatives, Cartan–Maurer forms and the
//! replay suites for the differential calculus.

use std::collections::HashMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::expr::parse_poly;
use crate::freealg::{Alphabet, DImage, GeneratorInfo, Poly, Sym, Word};
use crate::names::*;
use crate::presets::{self, word};
use crate::report::Report;
use crate::rewrite::{localize, orient, Presentation, QBinding, Reducer, RewriteRule, TermOrder};
use crate::scalar::Scalar;

/// Names accepted by [`replay`].
pub const SUITES: [&str; 8] = [
    "thm3_2",
    "thm3_4",
    "lemma3_5",
    "cor3_6",
    "iterated_leibniz",
    "partials",
    "weyl",
    "cartan",
];

/// Binds q in a coefficient the way `pres` binds it.
pub(crate) fn bind(pres: &Presentation, c: Scalar) -> Result<Scalar> {
    match &pres.q {
        QBinding::Symbolic => Ok(c),
        QBinding::Value(v) => Ok(c.specialize_q(v)?),
    }
}

fn s(src: &str) -> Scalar {
    src.parse().expect("valid scalar literal")
}

/// d on the free algebra, without reduction.
pub fn d_raw(p: &Poly, alphabet: &Alphabet) -> Result<Poly> {
    let mut out = Poly::zero();
    for (w, c) in p.terms() {
        let mut prefix_factor = Scalar::one();
        for i in 0..w.len() {
            let info = alphabet.info(w[i])?;
            let image = match &info.d_image {
                None => {
                    return Err(Error::NotClosedUnderD {
                        generator: w[i].name().to_string(),
                    })
                }
                Some(DImage::Zero) => None,
                Some(DImage::Gen(g)) => Some(Poly::gen(*g)),
                Some(DImage::Poly(q)) => Some(q.clone()),
            };
            if let Some(img) = image {
                let term = img.sandwich(&w[..i], &w[i + 1..]);
                out.add_scaled(&term, &(c * &prefix_factor));
            }
            prefix_factor = &prefix_factor * &info.d_passage;
        }
    }
    Ok(out)
}

/// Graded Leibniz d followed by reduction; the input is reduced first.
pub fn apply_d(p: &Poly, pres: &Presentation) -> Result<Poly> {
    let mut red = Reducer::new(pres);
    d_reduced(p, pres, &mut red)
}

fn d_reduced(p: &Poly, pres: &Presentation, red: &mut Reducer<'_>) -> Result<Poly> {
    let nf = red.reduce(p)?;
    let raw = d_raw(&nf, &pres.alphabet)?;
    red.reduce(&raw)
}

/// Effective weight of a homogeneous polynomial (None for zero or mixed).
fn omega(p: &Poly, alphabet: &Alphabet) -> Result<Option<i64>> {
    Ok(alphabet.poly_grade(p)?.map(|g| g.value() as i64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Theta,
}

impl Axis {
    pub fn generator(self) -> &'static str {
        match self {
            Axis::X => PX,
            Axis::Theta => PTH,
        }
    }
}

/// Recursive ∂x, ∂θ on words whose letters are coordinates, h or first
/// differentials.
pub struct Partials<'a> {
    pres: &'a Presentation,
    red: Reducer<'a>,
    memo: HashMap<Word, (Poly, Poly)>,
    c: PartialCoefficients,
}

struct PartialCoefficients {
    j: Scalar,
    j2: Scalar,
    j2m1: Scalar,
    q: Scalar,
    j2_qinv: Scalar,
    j2_qinv_neg: Scalar,
    qinv: Scalar,
    j_qinv: Scalar,
    q_j2: Scalar,
    j2mj: Scalar,
    neg_j2: Scalar,
}

impl<'a> Partials<'a> {
    pub fn new(pres: &'a Presentation) -> Result<Self> {
        let b = |src: &str| bind(pres, s(src));
        let c = PartialCoefficients {
            j: b("j")?,
            j2: b("j^2")?,
            j2m1: b("j^2 - 1")?,
            q: b("q")?,
            j2_qinv: b("j^2*q^-1")?,
            j2_qinv_neg: b("-j^2*q^-1")?,
            qinv: b("q^-1")?,
            j_qinv: b("j*q^-1")?,
            q_j2: b("q*j^2")?,
            j2mj: b("j^2 - j")?,
            neg_j2: b("-j^2")?,
        };
        Ok(Partials {
            pres,
            red: Reducer::new(pres),
            memo: HashMap::new(),
            c,
        })
    }

    /// (∂x w, ∂θ w) for a word, reduced; the word itself need not be normal.
    pub fn word(&mut self, w: &[Sym]) -> Result<(Poly, Poly)> {
        if w.is_empty() {
            return Ok((Poly::zero(), Poly::zero()));
        }
        if let Some(r) = self.memo.get(w) {
            return Ok(r.clone());
        }
        let (g, m) = (w[0], &w[1..]);
        let (px, pt) = self.word(m)?;
        let rest = Poly::word(m.to_vec());
        let left = |names: &str, p: &Poly| -> Poly { &Poly::word(word(names)) * p };
        let c = &self.c;
        let (dx_, dt_) = match g.name() {
            X => {
                let mut ax = rest.clone();
                ax.add_scaled(&left(X, &px), &c.j2);
                ax.add_scaled(&left(TH, &pt), &c.j2m1);
                ax.add_scaled(&left("h x", &pt), &Scalar::one());
                (ax, left(X, &pt).scale(&c.q))
            }
            TH => {
                let mut ax = left(TH, &px).scale(&c.j2_qinv);
                ax.add_scaled(&left("h x", &px), &c.j2_qinv_neg);
                let mut at = rest.clone();
                at.add_scaled(&left(TH, &pt), &c.j2);
                (ax, at)
            }
            H => (
                left(H, &px),
                left(H, &pt).scale(&(&c.j2 * &c.qinv)),
            ),
            DX => {
                let mut ax = left(DX, &px).scale(&c.j);
                ax.add_scaled(&left("h dx", &pt), &c.neg_j2);
                (ax, left(DX, &pt).scale(&c.q_j2))
            }
            DTH => {
                let mut ax = left(DTH, &px).scale(&c.qinv);
                ax.add_scaled(&left("h dx", &px), &c.j_qinv);
                let mut at = left(DX, &px).scale(&c.j2mj);
                at.add_scaled(&left(DTH, &pt), &c.j2);
                (ax, at)
            }
            other => return Err(Error::UnsupportedLeading(other.to_string())),
        };
        let out = (self.red.reduce(&dx_)?, self.red.reduce(&dt_)?);
        self.memo.insert(w.to_vec(), out.clone());
        Ok(out)
    }

    /// ∂ along `axis` of a polynomial taken as is (no prior reduction).
    pub fn raw(&mut self, axis: Axis, p: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        for (w, c) in p.terms() {
            let (px, pt) = self.word(w)?;
            out.add_scaled(if axis == Axis::X { &px } else { &pt }, c);
        }
        Ok(out)
    }

    /// ∂ along `axis` of the normal form of `p`.
    pub fn apply(&mut self, axis: Axis, p: &Poly) -> Result<Poly> {
        let nf = self.red.reduce(p)?;
        self.raw(axis, &nf)
    }

    pub fn reduce(&mut self, p: &Poly) -> Result<Poly> {
        self.red.reduce(p)
    }

    pub fn presentation(&self) -> &'a Presentation {
        self.pres
    }
}

/// ∂x or ∂θ of `p` in `pres` (normally `qjh_calculus` or `hj_calculus`).
pub fn apply_partial(axis: Axis, p: &Poly, pres: &Presentation) -> Result<Poly> {
    Partials::new(pres)?.apply(axis, p)
}

/// Monomials hᵃθᵇxᶜ with a, b ≤ 2 and c ≤ `max_x`.
pub fn plane_basis(max_x: usize) -> Vec<Poly> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..=max_x {
                let mut w = vec![Sym::new(H); a];
                w.extend(vec![Sym::new(TH); b]);
                w.extend(vec![Sym::new(X); c]);
                out.push(Poly::word(w));
            }
        }
    }
    out
}

fn show(p: &Poly, pres: &Presentation) -> String {
    crate::format::poly_text(p, Some(&pres.order), false)
}

/// Checks d p = dx·∂x p + dθ·∂θ p for each polynomial.
pub fn verify_df_decomposition(polys: &[Poly], pres: &Presentation) -> Result<Report> {
    let mut report = Report::new("df_decomposition");
    let mut parts = Partials::new(pres)?;
    let mut red = Reducer::new(pres);
    for p in polys {
        let lhs = d_reduced(p, pres, &mut red)?;
        let ax = parts.apply(Axis::X, p)?;
        let at = parts.apply(Axis::Theta, p)?;
        let rhs = red.reduce(&(&(&Poly::gen(Sym::new(DX)) * &ax) + &(&Poly::gen(Sym::new(DTH)) * &at)))?;
        let diff = &lhs - &rhs;
        report.record(
            format!("d({})", show(p, pres)),
            (!diff.is_zero()).then(|| show(&diff, pres)),
        );
    }
    Ok(report)
}

fn relations_tagged(pres: &Presentation, tags: &[&str]) -> Vec<(String, Poly)> {
    pres.rules()
        .iter()
        .filter(|r| tags.contains(&r.provenance.as_str()))
        .map(|r| (format!("{} [{}]", r, r.provenance), r.relation()))
        .collect()
}

/// nf(d(L − R)) = 0 for every relation with one of the given tags.
fn replay_d(suite: &str, pres: &Presentation, tags: &[&str]) -> Result<Report> {
    let mut report = Report::new(suite);
    let mut red = Reducer::new(pres);
    for (name, rel) in relations_tagged(pres, tags) {
        let raw = d_raw(&rel, &pres.alphabet)?;
        let out = red.reduce(&raw)?;
        report.record(format!("d: {name}"), (!out.is_zero()).then(|| show(&out, pres)));
    }
    Ok(report)
}

/// Words of length 1 and 2 over the given generator names.
fn short_words(names: &[&str]) -> Vec<Poly> {
    let mut out: Vec<Poly> = names.iter().map(|n| Poly::word(word(n))).collect();
    for a in names {
        for b in names {
            out.push(Poly::word(word(&format!("{a} {b}"))));
        }
    }
    out
}

/// d(d(αβ)) = d²α·β + (j^α̂ + j^(α̂+1)) dα·dβ + j^(2α̂) α·d²β, with both
/// sides obtained by iterating the first-order Leibniz rule and then reduced.
pub fn iterated_leibniz(pairs: &[(Poly, Poly)], pres: &Presentation) -> Result<Report> {
    let mut report = Report::new("iterated_leibniz");
    let mut red = Reducer::new(pres);
    let d = |p: &Poly| d_raw(p, &pres.alphabet);
    for (a, b) in pairs {
        let Some(wa) = omega(a, &pres.alphabet)? else {
            continue;
        };
        let lhs = red.reduce(&d(&d(&(a * b))?)?)?;
        let (da, db) = (d(a)?, d(b)?);
        let mixed = &Scalar::j_pow(wa) + &Scalar::j_pow(wa + 1);
        let mut rhs = &d(&da)? * b;
        rhs.add_scaled(&(&da * &db), &mixed);
        rhs.add_scaled(&(a * &d(&db)?), &Scalar::j_pow(2 * wa));
        let diff = &lhs - &red.reduce(&rhs)?;
        report.record(
            format!("({})({})", show(a, pres), show(b, pres)),
            (!diff.is_zero()).then(|| show(&diff, pres)),
        );
    }
    Ok(report)
}

fn calculus_pairs() -> Vec<(Poly, Poly)> {
    let ws = short_words(&[H, TH, X, DX, DTH]);
    let mut out = Vec::new();
    for a in &ws {
        for b in ws.iter().take(10) {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

/// Left-multiplication identities of the recursion, `(axis, leading letters,
/// right-hand side)` in terms of m, ∂x m (`Dx`) and ∂θ m (`Dt`).
pub const OPERATOR_IDENTITIES: [(Axis, &str, &str); 8] = [
    (Axis::X, "x", "m + j^2*x*Dx + (j^2 - 1)*th*Dt + h*x*Dt"),
    (Axis::Theta, "x", "q*x*Dt"),
    (Axis::X, "th", "j^2*q^-1*(th - h*x)*Dx"),
    (Axis::Theta, "th", "m + j^2*th*Dt"),
    (Axis::X, "dx", "j*dx*Dx - j^2*h*dx*Dt"),
    (Axis::X, "dth", "q^-1*dth*Dx + q^-1*j*h*dx*Dx"),
    (Axis::Theta, "dx", "q*j^2*dx*Dt"),
    (Axis::Theta, "dth", "(j^2 - j)*dx*Dx + j^2*dth*Dt"),
];

/// Substitutes the placeholders m, Dx, Dt of an identity's right-hand side.
fn instantiate(src: &str, m: &Poly, dx: &Poly, dt: &Poly, pres: &Presentation) -> Result<Poly> {
    let e = crate::expr::parse(src)?;
    let raw = crate::expr::eval(&e, None)?;
    let mut out = Poly::zero();
    for (w, c) in raw.terms() {
        let mut acc = Poly::constant(bind(pres, c.clone())?);
        for g in w {
            let f = match g.name() {
                "m" => m.clone(),
                "Dx" => dx.clone(),
                "Dt" => dt.clone(),
                _ => Poly::gen(*g),
            };
            acc = &acc * &f;
        }
        out = out + acc;
    }
    Ok(out)
}

/// Operator identities for ∂x, ∂θ on the plane basis: the commutation rules
/// with coordinates and first differentials, ∂x∂θ = jq ∂θ∂x, ∂θ³ = 0 and the
/// decomposition d = dx·∂x + dθ·∂θ.
pub fn verify_partials(pres: &Presentation) -> Result<Report> {
    let mut report = Report::new("partials");
    let mut parts = Partials::new(pres)?;
    let jq = bind(pres, s("j*q"))?;
    for m in plane_basis(6) {
        let label = show(&m, pres);
        let ax = parts.apply(Axis::X, &m)?;
        let at = parts.apply(Axis::Theta, &m)?;
        for (axis, lead, rhs) in OPERATOR_IDENTITIES {
            let lhs = parts.apply(axis, &(&Poly::word(word(lead)) * &m))?;
            let want = instantiate(rhs, &m, &ax, &at, pres)?;
            let diff = parts.reduce(&(&lhs - &want))?;
            report.record(
                format!("{:?}·{lead} = {rhs} on {label}", axis),
                (!diff.is_zero()).then(|| show(&diff, pres)),
            );
        }
        let xt = parts.apply(Axis::X, &at)?;
        let tx = parts.apply(Axis::Theta, &ax)?;
        let diff = &xt - &tx.scale(&jq);
        report.record(
            format!("∂x∂θ = jq ∂θ∂x on {label}"),
            (!diff.is_zero()).then(|| show(&diff, pres)),
        );
        let tt = parts.apply(Axis::Theta, &at)?;
        let ttt = parts.apply(Axis::Theta, &tt)?;
        report.record(
            format!("∂θ³ = 0 on {label}"),
            (!ttt.is_zero()).then(|| show(&ttt, pres)),
        );
    }
    report.merge(verify_df_decomposition(&plane_basis(6), pres)?);
    Ok(report)
}

/// Whether the recursion gives the same result on both sides of every
/// relation among h, x, θ, dx, dθ (multiplied on the right by short words).
pub fn partials_well_defined(pres: &Presentation) -> Result<Report> {
    let mut report = Report::new("partials_well_defined");
    let mut parts = Partials::new(pres)?;
    let probes = short_words(&[H, TH, X]);
    let letters = [H, TH, X, DX, DTH];
    for r in pres.rules() {
        if !r.lhs.iter().all(|g| letters.contains(&g.name()))
            || r.rhs.symbols().iter().any(|g| !letters.contains(&g.name()))
        {
            continue;
        }
        for axis in [Axis::X, Axis::Theta] {
            let mut bad = None;
            for m in std::iter::once(Poly::one()).chain(probes.iter().cloned()) {
                let rel = &r.relation() * &m;
                let out = parts.raw(axis, &rel)?;
                let out = parts.reduce(&out)?;
                if !out.is_zero() {
                    bad = Some(format!("on ({})·{}: {}", r, show(&m, pres), show(&out, pres)));
                    break;
                }
            }
            report.record(format!("{:?} respects {} [{}]", axis, r, r.provenance), bad);
        }
    }
    Ok(report)
}

/// Reducing ∂·m in the Weyl preset and dropping operator-tailed words must
/// agree with the recursion.
pub fn weyl_cross_check(weyl: &Presentation, calculus: &Presentation) -> Result<Report> {
    let mut report = Report::new("weyl");
    let mut parts = Partials::new(calculus)?;
    let mut red = Reducer::new(weyl);
    let ops = [Sym::new(PX), Sym::new(PTH)];
    for m in plane_basis(6) {
        for axis in [Axis::X, Axis::Theta] {
            let nf = red.reduce(&(&Poly::gen(Sym::new(axis.generator())) * &m))?;
            let mut act = Poly::zero();
            for (w, c) in nf.terms() {
                if !w.iter().any(|g| ops.contains(g)) {
                    act.add_term(w.clone(), c.clone());
                }
            }
            let want = parts.apply(axis, &m)?;
            let diff = &act - &want;
            report.record(
                format!("{:?} on {}", axis, show(&m, calculus)),
                (!diff.is_zero()).then(|| show(&diff, calculus)),
            );
        }
    }
    Ok(report)
}

fn cartan_order() -> TermOrder {
    TermOrder::new(
        &[
            (H, 1),
            (X, 1),
            (XINV, 1),
            (TH, 2),
            (DX, 1),
            (DTH, 4),
            (D2X, 1),
            (D2TH, 4),
            (W, 2),
            (U, 5),
        ],
        &[H, D2TH, D2X, DTH, DX, W, U, TH, XINV, X],
    )
}

/// The differential calculus localized at x, with the Cartan–Maurer forms
/// w, u as defined symbols.
pub fn cartan_preset(symbolic_q: bool) -> Result<Presentation> {
    let base = if symbolic_q {
        presets::qjh_calculus()?
    } else {
        presets::hj_calculus()?
    };
    let name = if symbolic_q { "cartan_q" } else { "cartan" };
    let order = cartan_order();
    let alphabet = base.alphabet.extend(vec![
        GeneratorInfo::new(XINV, 0),
        GeneratorInfo::new(W, 1),
        GeneratorInfo::new(U, 2),
    ]);
    let (x, xinv) = (Sym::new(X), Sym::new(XINV));
    let mut rules: Vec<RewriteRule> = base.rules().to_vec();
    rules.push(orient(vec![x, xinv], Poly::one(), &order, "inverse")?);
    rules.push(orient(vec![xinv, x], Poly::one(), &order, "inverse")?);
    let define = |lhs: &str, rhs: &str| -> Result<RewriteRule> {
        orient(word(lhs), parse_poly(rhs, Some(&alphabet))?, &order, "cartan-form")
    };
    rules.push(define(W, "dx*xinv")?);
    rules.push(define(U, "dth*xinv - dx*xinv*th*xinv")?);
    let mut pres = Presentation::new_unchecked(name, alphabet.clone(), rules, order, base.q.clone());
    for g in [H, DX, D2X, TH, DTH, D2TH] {
        let r = localize(&pres, [x, Sym::new(g)], (x, xinv), "inverse-passage")?;
        pres = pres.with_rules(vec![r]);
    }
    let dxinv = pres.normal_form(&parse_poly("-xinv*dx*xinv", Some(&alphabet))?)?;
    let gens = alphabet
        .generators()
        .iter()
        .cloned()
        .map(|g| {
            if g.name == xinv {
                g.d(DImage::Poly(dxinv.clone()))
            } else {
                g
            }
        })
        .collect();
    Presentation::new(
        name,
        Alphabet::new(gens),
        pres.rules().to_vec(),
        pres.order.clone(),
        pres.q.clone(),
    )
}

/// w = dx·x⁻¹ and u = dθ·x⁻¹ − dx·x⁻¹θx⁻¹ in normal form.
pub fn cartan_forms(pres: &Presentation) -> Result<(Poly, Poly)> {
    let mut red = Reducer::new(pres);
    Ok((
        red.reduce(&Poly::gen(Sym::new(W)))?,
        red.reduce(&Poly::gen(Sym::new(U)))?,
    ))
}

/// Cartan–Maurer relations with symbolic q, as `lhs - rhs` expressions.
pub const CARTAN_RELATIONS: [(&str, &str); 16] = [
    ("forms-h", "u*h - q*j^2*h*u"),
    ("forms-h", "w*h - j*h*w"),
    ("coord-forms", "x*w - j^2*w*x"),
    ("coord-forms", "x*u - q*u*x"),
    ("coord-forms", "th*w - j*w*th"),
    ("coord-forms", "th*u - q*j*u*th - q*h*u*x"),
    ("forms-diff1", "w*dx - j*dx*w"),
    ("forms-diff1", "u*dx - q^-1*dx*u"),
    ("forms-diff1", "w*dth - j*dth*w - (1 - j)*th*xinv*dx*w"),
    ("forms-diff1", "u*dth - q^-1*dth*u - q^-1*((1 - j)*th*xinv - h)*dx*u"),
    ("forms-diff2", "w*d2x - j^2*d2x*w"),
    ("forms-diff2", "u*d2x - q^-1*d2x*u"),
    ("forms-diff2", "w*d2th - (j - j^2)*q^-1*d2x*u - d2th*w"),
    ("forms-diff2", "u*d2th - q^-1*d2th*u - ((j - j^2)*xinv*th - q^-1*j^2*h)*d2x*u"),
    ("forms-forms", "w*u - u*w"),
    ("forms-forms", "w*w*w"),
];

/// The q = 1 lists for the same relations, transcribed as printed.
pub const CARTAN_RELATIONS_Q1: [(&str, &str); 14] = [
    ("coord-forms", "x*w - j^2*w*x"),
    ("coord-forms", "x*u - u*x"),
    ("coord-forms", "th*w - j*w*th"),
    ("coord-forms", "th*u - j*u*th - h*u*x"),
    ("forms-diff1", "w*dx - j*dx*w"),
    ("forms-diff1", "u*dx - dx*u"),
    ("forms-diff1", "w*dth - j*dth*w - (1 - j)*th*xinv*dx*w"),
    ("forms-diff1", "u*dth - dth*u + h*dx*u - ((1 - j)*th*xinv - h)*dx*u"),
    ("forms-diff2", "w*d2x - j^2*d2x*w"),
    ("forms-diff2", "u*d2x - d2x*u"),
    ("forms-diff2", "w*d2th - (j - j^2)*d2x*u - d2th*w"),
    ("forms-diff2", "u*d2th - d2th*u - ((j - j^2)*xinv*th - j^2*h)*d2x*u"),
    ("forms-forms", "w*u - u*w"),
    ("forms-forms", "w*w*w"),
];

fn check_relations(
    report: &mut Report,
    pres: &Presentation,
    rels: &[(&str, &str)],
    prefix: &str,
) -> Result<()> {
    let mut red = Reducer::new(pres);
    for (tag, src) in rels {
        let p = parse_poly(src, Some(&pres.alphabet))?;
        let out = red.reduce(&p)?;
        report.record(
            format!("{prefix}{src} = 0 [{tag}]"),
            (!out.is_zero()).then(|| show(&out, pres)),
        );
    }
    Ok(())
}

/// Cartan–Maurer relations and closure, with symbolic q; the q = 1 lists are
/// checked in the q = 1 localized calculus.
pub fn cartan_verify() -> Result<Report> {
    let mut report = Report::new("cartan");
    let pres = cartan_preset(true)?;
    check_relations(&mut report, &pres, &CARTAN_RELATIONS, "")?;
    let mut red = Reducer::new(&pres);
    for g in [W, U] {
        let p = Poly::gen(Sym::new(g));
        let dd = d_reduced(&d_reduced(&p, &pres, &mut red)?, &pres, &mut red)?;
        report.record(
            format!("d(d({g})) = 0"),
            (!dd.is_zero()).then(|| show(&dd, &pres)),
        );
    }
    let q1 = cartan_preset(false)?;
    check_relations(&mut report, &q1, &CARTAN_RELATIONS_Q1, "q=1: ")?;
    Ok(report)
}

/// Runs a named suite.
pub fn replay(name: &str) -> Result<Report> {
    let qjh = presets::qjh_calculus()?;
    match name {
        "thm3_2" => replay_d(name, &qjh, &["plane", "plane-h"]),
        "thm3_4" => replay_d(name, &qjh, &["coord-diff1", "diff1-h"]),
        "lemma3_5" => replay_d(name, &qjh, &["coord-diff2", "diff1-diff1", "diff2-h"]),
        "cor3_6" => replay_d(name, &qjh, &["diff1-diff2", "diff2-diff2", "diff1-cube"]),
        "iterated_leibniz" => iterated_leibniz(&calculus_pairs(), &qjh),
        "partials" => {
            let mut r = verify_partials(&qjh)?;
            r.suite = name.to_string();
            r.merge(verify_partials(&presets::hj_calculus()?)?);
            Ok(r)
        }
        "weyl" => {
            let mut r = weyl_cross_check(&presets::weyl_q()?, &qjh)?;
            r.merge(weyl_cross_check(&presets::weyl()?, &presets::hj_calculus()?)?);
            Ok(r)
        }
        "cartan" => cartan_verify(),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(src: &str) -> Poly {
        parse_poly(src, None).unwrap()
    }

    #[test]
    fn d_of_generators_and_h_passage() {
        let pres = presets::qjh_calculus().unwrap();
        assert_eq!(apply_d(&p("x"), &pres).unwrap(), p("dx"));
        assert_eq!(apply_d(&p("x*h"), &pres).unwrap(), p("j*h*dx"));
        assert!(apply_d(&p("x*th - q*th*x - h*x^2"), &pres).unwrap().is_zero());
        let ddd = apply_d(&apply_d(&apply_d(&p("x + th + x*th"), &pres).unwrap(), &pres).unwrap(), &pres).unwrap();
        assert!(ddd.is_zero());
        assert_eq!(apply_d(&apply_d(&p("x"), &pres).unwrap(), &pres).unwrap(), p("d2x"));
    }

    #[test]
    fn partial_examples() {
        let pres = presets::qjh_calculus().unwrap();
        assert_eq!(apply_partial(Axis::Theta, &p("th"), &pres).unwrap(), Poly::one());
        assert!(apply_partial(Axis::X, &p("th"), &pres).unwrap().is_zero());
        assert_eq!(apply_partial(Axis::X, &p("x*x"), &pres).unwrap(), p("(1 + j^2)*x"));
    }

    #[test]
    fn unsupported_leading() {
        let pres = presets::qjh_calculus().unwrap();
        let err = apply_partial(Axis::X, &p("d2x"), &pres).unwrap_err();
        assert_eq!(err, Error::UnsupportedLeading("d2x".into()));
    }
}
