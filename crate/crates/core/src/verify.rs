//! Named verification suites, including the ones that span several modules.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::calculus::{self, apply_d};
use crate::error::{Error, Result};
use crate::format::poly_text;
use crate::freealg::{Poly, Sym};
use crate::names::*;
use crate::presets::{self, PRESETS};
use crate::report::Report;
use crate::rewrite::Presentation;
use crate::scalar::Scalar;
use crate::supergroup;

/// Every suite accepted by [`run`], besides `all`.
pub const SUITES: [&str; 16] = [
    "integrity",
    "confluence",
    "contraction",
    "tower",
    "thm3_2",
    "thm3_4",
    "lemma3_5",
    "cor3_6",
    "iterated_leibniz",
    "specialization",
    "partials",
    "weyl",
    "cartan",
    "comodule",
    "inverse",
    "sdet",
];

/// Presets whose critical pairs are all expected to join.
pub const CONFLUENT: [&str; 3] = ["h_plane", "hj_calculus", "qjh_calculus"];

/// Seed of the random polynomials in the `tower` suite.
pub const TOWER_SEED: u64 = 0x005e_edd3;

pub fn run(name: &str) -> Result<Report> {
    match name {
        "all" => {
            let mut all = Report::new("all");
            for s in SUITES {
                all.merge(run(s)?);
            }
            Ok(all)
        }
        "integrity" => integrity(),
        "confluence" => confluence(),
        "contraction" => presets::verify_contraction(),
        "tower" => tower(),
        "specialization" => specialization(),
        "comodule" | "inverse" | "sdet" => supergroup::check(name),
        other if calculus::SUITES.contains(&other) => calculus::replay(other),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

/// Homogeneity, decreasing rules and a well-founded order for every preset.
pub fn integrity() -> Result<Report> {
    let mut report = Report::new("integrity");
    for name in PRESETS {
        let p = presets::build(name)?;
        let hom = p.check_homogeneity();
        report.record(
            format!("{name}: rules are grade-homogeneous"),
            (!hom.is_empty()).then(|| format!("{hom:?}")),
        );
        let term = p.check_termination();
        report.record(
            format!("{name}: every rule decreases"),
            (!term.passed()).then(|| format!("{:?}", term.violations)),
        );
        report.record(
            format!("{name}: all weights are positive"),
            (!term.well_founded).then(|| {
                let neg: Vec<_> = p
                    .order
                    .weights()
                    .iter()
                    .filter(|(_, w)| **w <= 0)
                    .map(|(s, w)| format!("{s}={w}"))
                    .collect();
                neg.join(", ")
            }),
        );
    }
    Ok(report)
}

pub fn confluence() -> Result<Report> {
    let mut report = Report::new("confluence");
    for name in CONFLUENT {
        let census = presets::build(name)?.census()?;
        report.record(
            format!("{name}: {} critical pairs all join", census.pairs),
            (!census.passed()).then(|| {
                let shown: Vec<_> = census
                    .non_joinable
                    .iter()
                    .map(|w| format!("{}: {}", w.overlap, w.residue))
                    .collect();
                format!("{} non-joinable; {}", census.non_joinable.len(), shown.join("; "))
            }),
        );
        if name == "qjh_calculus" {
            report.record(
                "qjh_calculus: more than 50 critical pairs",
                (census.pairs <= 50).then(|| census.pairs.to_string()),
            );
        }
    }
    Ok(report)
}

/// Random polynomial with up to four terms, words of length 1 to 5 over
/// `gens` and small integer coefficients.
pub fn random_poly(rng: &mut impl Rng, gens: &[&str]) -> Poly {
    let mut p = Poly::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let len = rng.gen_range(1..=5);
        let w = (0..len)
            .map(|_| Sym::new(gens[rng.gen_range(0..gens.len())]))
            .collect();
        let c = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
        p.add_term(w, Scalar::from_int(c));
    }
    p
}

/// Polynomials used by the `tower` suite.
pub fn tower_polys() -> Vec<Poly> {
    let mut rng = ChaCha8Rng::seed_from_u64(TOWER_SEED);
    let gens = [H, X, TH, DX, DTH, D2X, D2TH];
    (0..100).map(|_| random_poly(&mut rng, &gens)).collect()
}

/// d³ = 0 on random polynomials, d²x as a nonzero generator, and the
/// iterated Leibniz rule.
pub fn tower() -> Result<Report> {
    let mut report = Report::new("tower");
    let pres = presets::qjh_calculus()?;
    for (i, p) in tower_polys().iter().enumerate() {
        let d3 = apply_d(&apply_d(&apply_d(p, &pres)?, &pres)?, &pres)?;
        report.record(
            format!("d^3 = 0 on random polynomial {i}"),
            (!d3.is_zero()).then(|| poly_text(&d3, Some(&pres.order), false)),
        );
    }
    let x = Poly::gen(Sym::new(X));
    let dd = apply_d(&apply_d(&x, &pres)?, &pres)?;
    report.record(
        "d(d(x)) = d2x",
        (dd != Poly::gen(Sym::new(D2X))).then(|| poly_text(&dd, None, false)),
    );
    report.merge(calculus::replay("iterated_leibniz")?);
    Ok(report)
}

fn compare_rules(report: &mut Report, label: &str, got: &Presentation, want: &Presentation) {
    report.record(
        format!("{label}: same number of rules"),
        (got.rules().len() != want.rules().len())
            .then(|| format!("{} vs {}", got.rules().len(), want.rules().len())),
    );
    for r in want.rules() {
        let witness = match got.rule_for(&r.lhs) {
            None => Some("no rule with this left-hand side".to_string()),
            Some(g) if g.rhs != r.rhs => Some(format!("got {g}")),
            Some(_) => None,
        };
        report.record(format!("{label}: {r}"), witness);
    }
}

/// Each q-dependent preset at q = 1 against its q = 1 counterpart.
pub fn specialization() -> Result<Report> {
    let mut report = Report::new("specialization");
    let one = BigRational::from_integer(1.into());
    let pairs: [(&str, &str); 3] = [
        ("qjh_calculus", "hj_calculus"),
        ("weyl_q", "weyl"),
        ("cartan_q", "cartan"),
    ];
    for (symbolic, at_one) in pairs {
        let got = presets::specialize(&presets::build(symbolic)?, &one)?;
        let want = presets::build(at_one)?;
        compare_rules(&mut report, &format!("{symbolic} at q = 1"), &got, &want);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn failing(r: &Report) -> Vec<String> {
        r.failures().map(|c| c.name.clone()).collect()
    }

    #[test]
    fn only_the_localized_supergroup_has_nonpositive_weights() {
        let r = integrity().unwrap();
        assert_eq!(r.checks.len(), 3 * PRESETS.len());
        assert_eq!(failing(&r), ["glhj_inv: all weights are positive"]);
    }

    #[test]
    fn census_counts_are_frozen() {
        let counts: Vec<_> = CONFLUENT
            .iter()
            .map(|n| {
                let c = presets::build(n).unwrap().census().unwrap();
                (c.pairs, c.non_joinable.len())
            })
            .collect();
        assert_eq!(counts, [(5, 1), (59, 9), (59, 9)]);
    }

    #[test]
    fn specialization_matches_rule_for_rule() {
        assert!(specialization().unwrap().passed());
    }

    #[test]
    fn tower_failures_are_frozen() {
        let r = tower().unwrap();
        let bad: Vec<_> = failing(&r)
            .iter()
            .filter_map(|n| n.strip_prefix("d^3 = 0 on random polynomial "))
            .map(|i| i.parse::<usize>().unwrap())
            .collect();
        assert_eq!(bad.len(), failing(&r).len());
        assert_eq!(bad, [4, 6, 20, 26, 37, 44, 53, 62, 63, 66, 77, 79, 83]);
    }

    #[test]
    fn tower_polys_are_reproducible() {
        assert_eq!(tower_polys(), tower_polys());
        assert!(tower_polys().iter().all(|p| p.degree() <= 5));
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(matches!(run("nope"), Err(Error::UnknownSuite(_))));
    }
}
