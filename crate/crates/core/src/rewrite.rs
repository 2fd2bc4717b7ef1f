//! Oriented rewrite systems over the free algebra: term order, normal forms,
//! termination and critical-pair checks.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::format::{poly_text, word_text};
use crate::freealg::{Alphabet, DImage, Poly, Sym, Word};
use crate::scalar::Scalar;

/// Default cap on rule applications per reduction.
pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

static STEP_BUDGET: AtomicUsize = AtomicUsize::new(DEFAULT_STEP_BUDGET);

/// Budget used by [`Reducer::new`] from now on, process-wide.
pub fn set_step_budget(budget: usize) {
    STEP_BUDGET.store(budget, AtomicOrdering::Relaxed);
}

pub fn step_budget() -> usize {
    STEP_BUDGET.load(AtomicOrdering::Relaxed)
}

/// Weighted lexicographic order: total weight first, then left-to-right
/// comparison by precedence rank (a proper prefix is smaller).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    weights: BTreeMap<Sym, i64>,
    precedence: Vec<Sym>,
    rank: HashMap<Sym, usize>,
}

impl TermOrder {
    /// `precedence` lists generators from smallest to largest.
    pub fn new(weights: &[(&str, i64)], precedence: &[&str]) -> Self {
        TermOrder::from_syms(
            weights.iter().map(|(n, w)| (Sym::new(n), *w)).collect(),
            precedence.iter().map(|n| Sym::new(n)).collect(),
        )
    }

    pub fn from_syms(weights: BTreeMap<Sym, i64>, precedence: Vec<Sym>) -> Self {
        let rank = precedence.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        TermOrder {
            weights,
            precedence,
            rank,
        }
    }

    pub fn weights(&self) -> &BTreeMap<Sym, i64> {
        &self.weights
    }

    pub fn precedence(&self) -> &[Sym] {
        &self.precedence
    }

    pub fn weight_of(&self, s: Sym) -> i64 {
        self.weights.get(&s).copied().unwrap_or(1)
    }

    pub fn word_weight(&self, w: &[Sym]) -> i64 {
        w.iter().map(|&s| self.weight_of(s)).sum()
    }

    fn rank_of(&self, s: Sym) -> (usize, Sym) {
        (self.rank.get(&s).copied().unwrap_or(usize::MAX), s)
    }

    pub fn cmp_words(&self, a: &[Sym], b: &[Sym]) -> Ordering {
        self.word_weight(a)
            .cmp(&self.word_weight(b))
            .then_with(|| {
                for (x, y) in a.iter().zip(b) {
                    let c = self.rank_of(*x).cmp(&self.rank_of(*y));
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                a.len().cmp(&b.len())
            })
    }

    /// True when every weight is positive, which makes the order well-founded.
    pub fn is_well_founded(&self) -> bool {
        self.weights.values().all(|&w| w > 0)
    }
}

/// `lhs -> rhs`, with a tag naming the relation it encodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Poly,
    pub provenance: String,
}

impl RewriteRule {
    pub fn relation(&self) -> Poly {
        &Poly::word(self.lhs.clone()) - &self.rhs
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {}",
            word_text(&self.lhs),
            poly_text(&self.rhs, None, false)
        )
    }
}

/// Builds a rule, refusing it unless every rhs word is below `lhs`.
pub fn orient(lhs: Word, rhs: Poly, order: &TermOrder, provenance: &str) -> Result<RewriteRule> {
    if lhs.is_empty() {
        return Err(Error::InvalidPreset("empty rule left-hand side".into()));
    }
    if let Some((w, _)) = rhs
        .terms()
        .find(|(w, _)| order.cmp_words(w, &lhs) != Ordering::Less)
    {
        return Err(Error::NotDecreasing {
            lhs: word_text(&lhs),
            rhs_word: word_text(w),
        });
    }
    Ok(RewriteRule {
        lhs,
        rhs,
        provenance: provenance.to_string(),
    })
}

/// Binding of the deformation parameter q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QBinding {
    Symbolic,
    Value(BigRational),
}

/// A named algebra: generators, oriented relations and the term order.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub alphabet: Alphabet,
    rules: Vec<RewriteRule>,
    pub order: TermOrder,
    pub q: QBinding,
    by_first: HashMap<Sym, Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminationReport {
    pub violations: Vec<(String, String, String)>,
    pub well_founded: bool,
}

impl TerminationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub rules: (usize, usize),
    pub overlap: Word,
    pub left: Poly,
    pub right: Poly,
    pub joinable: bool,
}

impl Presentation {
    /// Builds and validates: every symbol known, every rule decreasing and
    /// grade-homogeneous, every declared nilpotency backed by a rule.
    pub fn new(
        name: &str,
        alphabet: Alphabet,
        rules: Vec<RewriteRule>,
        order: TermOrder,
        q: QBinding,
    ) -> Result<Self> {
        let p = Presentation::new_unchecked(name, alphabet, rules, order, q);
        p.validate()?;
        Ok(p)
    }

    pub fn new_unchecked(
        name: &str,
        alphabet: Alphabet,
        rules: Vec<RewriteRule>,
        order: TermOrder,
        q: QBinding,
    ) -> Self {
        let mut p = Presentation {
            name: name.to_string(),
            alphabet,
            rules: Vec::new(),
            order,
            q,
            by_first: HashMap::new(),
        };
        p.set_rules(rules);
        p
    }

    fn set_rules(&mut self, rules: Vec<RewriteRule>) {
        self.by_first.clear();
        for (i, r) in rules.iter().enumerate() {
            self.by_first.entry(r.lhs[0]).or_default().push(i);
        }
        self.rules = rules;
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    /// Copy without the rules for which `drop` returns true.
    pub fn without_rules(&self, drop: impl Fn(&RewriteRule) -> bool) -> Presentation {
        let mut p = self.clone();
        p.set_rules(self.rules.iter().filter(|r| !drop(r)).cloned().collect());
        p
    }

    /// Copy with extra rules appended (not validated).
    pub fn with_rules(&self, extra: Vec<RewriteRule>) -> Presentation {
        let mut p = self.clone();
        let mut rules = self.rules.clone();
        rules.extend(extra);
        p.set_rules(rules);
        p
    }

    pub fn rule_for(&self, lhs: &[Sym]) -> Option<&RewriteRule> {
        self.rules.iter().find(|r| r.lhs == lhs)
    }

    pub fn validate(&self) -> Result<()> {
        for r in &self.rules {
            for &s in &r.lhs {
                self.alphabet.info(s)?;
            }
            self.alphabet.check_poly(&r.rhs)?;
        }
        for g in self.alphabet.generators() {
            if let Some(DImage::Poly(p)) = &g.d_image {
                self.alphabet.check_poly(p)?;
            }
            if let Some(DImage::Gen(s)) = &g.d_image {
                self.alphabet.info(*s)?;
            }
            if let Some(n) = g.nilpotency {
                let lhs = vec![g.name; n as usize];
                if !self.rules.iter().any(|r| r.lhs == lhs && r.rhs.is_zero()) {
                    return Err(Error::InvalidPreset(format!(
                        "nilpotency {n} of {} has no rule",
                        g.name
                    )));
                }
            }
        }
        if let Some((lhs, _, w)) = self.check_termination().violations.into_iter().next() {
            return Err(Error::NotDecreasing { lhs, rhs_word: w });
        }
        if let Some((lhs, detail)) = self.check_homogeneity().into_iter().next() {
            return Err(Error::NotHomogeneous { lhs, detail });
        }
        Ok(())
    }

    /// Every rule strictly decreasing; violations as (lhs, provenance, rhs word).
    pub fn check_termination(&self) -> TerminationReport {
        let mut violations = Vec::new();
        for r in &self.rules {
            for (w, _) in r.rhs.terms() {
                if self.order.cmp_words(w, &r.lhs) != Ordering::Less {
                    violations.push((word_text(&r.lhs), r.provenance.clone(), word_text(w)));
                }
            }
        }
        TerminationReport {
            violations,
            well_founded: self.order.is_well_founded(),
        }
    }

    /// Rules whose two sides differ in grade, as (lhs, detail).
    pub fn check_homogeneity(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for r in &self.rules {
            let Ok(g) = self.alphabet.word_grade(&r.lhs) else {
                out.push((word_text(&r.lhs), "unknown generator".into()));
                continue;
            };
            for (w, _) in r.rhs.terms() {
                match self.alphabet.word_grade(w) {
                    Ok(gw) if gw == g => {}
                    Ok(gw) => out.push((
                        word_text(&r.lhs),
                        format!("{} has grade {gw}, lhs has grade {g}", word_text(w)),
                    )),
                    Err(e) => out.push((word_text(&r.lhs), e.to_string())),
                }
            }
        }
        out
    }

    /// Leftmost match: (position, rule index).
    pub fn find_redex(&self, w: &[Sym]) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            if let Some(cands) = self.by_first.get(&w[pos]) {
                for &i in cands {
                    if w[pos..].starts_with(&self.rules[i].lhs) {
                        return Some((pos, i));
                    }
                }
            }
        }
        None
    }

    pub fn is_normal(&self, w: &[Sym]) -> bool {
        self.find_redex(w).is_none()
    }

    pub fn normal_form(&self, p: &Poly) -> Result<Poly> {
        Reducer::new(self).reduce(p)
    }

    /// Specializes q in every coefficient; a pole names the offending rule.
    pub fn specialize(&self, q0: &BigRational) -> Result<Presentation> {
        let mut rules = Vec::with_capacity(self.rules.len());
        for r in &self.rules {
            let rhs = r
                .rhs
                .try_map_coeffs(|c| c.specialize_q(q0))
                .map_err(|e| Error::RulePole {
                    rule: format!("{} ({})", r, r.provenance),
                    source: e,
                })?;
            rules.push(RewriteRule {
                lhs: r.lhs.clone(),
                rhs,
                provenance: r.provenance.clone(),
            });
        }
        let mut gens = Vec::new();
        for g in self.alphabet.generators() {
            let mut g = g.clone();
            g.d_passage = g.d_passage.specialize_q(q0).map_err(|e| Error::RulePole {
                rule: format!("d passage of {}", g.name),
                source: e,
            })?;
            if let Some(DImage::Poly(p)) = &g.d_image {
                let sp = p
                    .try_map_coeffs(|c| c.specialize_q(q0))
                    .map_err(|e| Error::RulePole {
                        rule: format!("d image of {}", g.name),
                        source: e,
                    })?;
                g.d_image = Some(DImage::Poly(sp));
            }
            gens.push(g);
        }
        Ok(Presentation::new_unchecked(
            &self.name,
            Alphabet::new(gens),
            rules,
            self.order.clone(),
            QBinding::Value(q0.clone()),
        ))
    }

    /// Overlaps and inclusions of every pair of left-hand sides, each reduced
    /// along both rules.
    pub fn critical_pairs(&self) -> Result<Vec<CriticalPair>> {
        let mut red = Reducer::new(self);
        let mut out = Vec::new();
        for (i, r1) in self.rules.iter().enumerate() {
            for (k, r2) in self.rules.iter().enumerate() {
                let (l1, l2) = (&r1.lhs, &r2.lhs);
                for ov in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - ov..] != l2[..ov] {
                        continue;
                    }
                    let mut overlap = l1.clone();
                    overlap.extend_from_slice(&l2[ov..]);
                    let left = r1.rhs.sandwich(&[], &l2[ov..]);
                    let right = r2.rhs.sandwich(&l1[..l1.len() - ov], &[]);
                    out.push(red.pair((i, k), overlap, &left, &right)?);
                }
                if i != k && l2.len() <= l1.len() {
                    for pos in 0..=(l1.len() - l2.len()) {
                        if l1[pos..pos + l2.len()] == l2[..] && !(l1 == l2 && i > k) {
                            let left = r1.rhs.clone();
                            let right = r2.rhs.sandwich(&l1[..pos], &l1[pos + l2.len()..]);
                            out.push(red.pair((i, k), l1.clone(), &left, &right)?);
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// A non-joinable critical pair in a census.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PairWitness {
    pub overlap: String,
    pub rules: (String, String),
    pub residue: String,
}

/// Critical-pair counts of one presentation.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Census {
    pub preset: String,
    pub pairs: usize,
    pub joinable: usize,
    pub non_joinable: Vec<PairWitness>,
}

impl Census {
    pub fn passed(&self) -> bool {
        self.non_joinable.is_empty()
    }
}

impl Presentation {
    pub fn census(&self) -> Result<Census> {
        let pairs = self.critical_pairs()?;
        let mut non_joinable = Vec::new();
        for c in &pairs {
            if !c.joinable {
                let residue = self.normal_form(&(&c.left - &c.right))?;
                non_joinable.push(PairWitness {
                    overlap: word_text(&c.overlap),
                    rules: (self.rules[c.rules.0].to_string(), self.rules[c.rules.1].to_string()),
                    residue: poly_text(&residue, Some(&self.order), false),
                });
            }
        }
        Ok(Census {
            preset: self.name.clone(),
            pairs: pairs.len(),
            joinable: pairs.len() - non_joinable.len(),
            non_joinable,
        })
    }
}

/// Normal-form engine with a per-word memo table.
pub struct Reducer<'a> {
    pres: &'a Presentation,
    cache: HashMap<Word, Poly>,
    steps: usize,
    budget: usize,
}

impl<'a> Reducer<'a> {
    pub fn new(pres: &'a Presentation) -> Self {
        Reducer::with_budget(pres, step_budget())
    }

    pub fn with_budget(pres: &'a Presentation, budget: usize) -> Self {
        Reducer {
            pres,
            cache: HashMap::new(),
            steps: 0,
            budget,
        }
    }

    pub fn presentation(&self) -> &'a Presentation {
        self.pres
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn reduce(&mut self, p: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        for (w, c) in p.terms() {
            let nf = self.reduce_word(w)?;
            out.add_scaled(&nf, c);
        }
        Ok(out)
    }

    pub fn reduce_word(&mut self, w: &[Sym]) -> Result<Poly> {
        if let Some(p) = self.cache.get(w) {
            return Ok(p.clone());
        }
        let result = match self.pres.find_redex(w) {
            None => Poly::word(w.to_vec()),
            Some((pos, ri)) => {
                self.steps += 1;
                if self.steps > self.budget {
                    return Err(Error::BudgetExceeded {
                        budget: self.budget,
                        word: word_text(w),
                    });
                }
                let rule = &self.pres.rules[ri];
                let (prefix, suffix) = (&w[..pos], &w[pos + rule.lhs.len()..]);
                let mut out = Poly::zero();
                for (rw, c) in rule.rhs.terms() {
                    let mut nw = Vec::with_capacity(prefix.len() + rw.len() + suffix.len());
                    nw.extend_from_slice(prefix);
                    nw.extend_from_slice(rw);
                    nw.extend_from_slice(suffix);
                    let sub = self.reduce_word(&nw)?;
                    out.add_scaled(&sub, c);
                }
                out
            }
        };
        self.cache.insert(w.to_vec(), result.clone());
        Ok(result)
    }

    /// Normal form of a product of two polynomials.
    pub fn mul(&mut self, a: &Poly, b: &Poly) -> Result<Poly> {
        self.reduce(&(a * b))
    }

    fn pair(
        &mut self,
        rules: (usize, usize),
        overlap: Word,
        left: &Poly,
        right: &Poly,
    ) -> Result<CriticalPair> {
        let left = self.reduce(left)?;
        let right = self.reduce(right)?;
        let joinable = left == right;
        Ok(CriticalPair {
            rules,
            overlap,
            left,
            right,
            joinable,
        })
    }
}

/// Passage rule for an adjoined inverse `tinv` of `t` past a generator g,
/// derived from the existing rule with left-hand side `t·g` or `g·t` by
/// multiplying with `tinv` on both sides. The derived rule rewrites
/// whichever of `tinv·g`, `g·tinv` is larger in the term order. When the
/// result mentions that word again it is resolved by substitution until a
/// fixed point is reached. The rule is checked by multiplying back with t
/// on the side where it cancels.
pub fn localize(
    pres: &Presentation,
    lhs: [Sym; 2],
    inverse: (Sym, Sym),
    provenance: &str,
) -> Result<RewriteRule> {
    let (rule, back) = derive_passage(pres, lhs, inverse, provenance)?;
    if !back.is_zero() {
        return Err(Error::InvalidPreset(format!(
            "derived rule {rule} fails to multiply back by {}: defect {back}",
            inverse.0.name()
        )));
    }
    Ok(rule)
}

/// As [`localize`], but returns the multiply-back defect instead of
/// rejecting a rule whose defect is nonzero.
pub fn derive_passage(
    pres: &Presentation,
    lhs: [Sym; 2],
    (t, tinv): (Sym, Sym),
    provenance: &str,
) -> Result<(RewriteRule, Poly)> {
    let rule = pres.rule_for(&lhs).ok_or_else(|| {
        Error::InvalidPreset(format!("no rule {} to localize", word_text(&lhs)))
    })?;
    let t_first = lhs[0] == t;
    let (g, lead) = if t_first {
        (lhs[1], vec![lhs[1], t])
    } else {
        (lhs[0], vec![t, lhs[0]])
    };
    let c = rule.rhs.coeff(&lead);
    if c.is_zero() {
        return Err(Error::InvalidPreset(format!(
            "rule {rule} has no {} term",
            word_text(&lead)
        )));
    }
    let ci = c.inv()?;
    let mut rest = rule.rhs.clone();
    rest.add_term(lead, -c.clone());
    let sandwiched = rest.sandwich(&[tinv], &[tinv]);
    let inv_left = vec![tinv, g];
    let inv_right = vec![g, tinv];
    let left_is_lhs = pres.order.cmp_words(&inv_left, &inv_right).is_gt();
    let (target, other) = if left_is_lhs {
        (inv_left, inv_right)
    } else {
        (inv_right, inv_left)
    };
    // t·g = c·g·t + rest gives tinv·g = c⁻¹(g·tinv − tinv·rest·tinv)
    // and g·tinv = c·tinv·g + tinv·rest·tinv; g·t = c·t·g + rest swaps
    // the two shapes.
    let k = if t_first == left_is_lhs { ci } else { c };
    let head = Poly::word(other).scale(&k);
    let raw = if t_first == left_is_lhs {
        &head - &sandwiched.scale(&k)
    } else {
        &head + &sandwiched
    };
    let mut rhs = head;
    for _ in 0..16 {
        let trial = pres.with_rules(vec![RewriteRule {
            lhs: target.clone(),
            rhs: rhs.clone(),
            provenance: provenance.to_string(),
        }]);
        let next = Reducer::new(&trial).reduce(&raw)?;
        if next == rhs {
            let derived = orient(target, rhs, &pres.order, provenance)?;
            let product = if left_is_lhs {
                &Poly::gen(t) * &derived.rhs
            } else {
                &derived.rhs * &Poly::gen(t)
            };
            let back = Reducer::new(&trial).reduce(&product)?;
            return Ok((derived, &back - &Poly::gen(g)));
        }
        rhs = next;
    }
    Err(Error::InvalidPreset(format!(
        "passage of {} past {} does not stabilize",
        tinv.name(),
        g.name()
    )))
}

/// Scalar-linear combination helper used by the suites: `Σ c_i * p_i`.
pub fn lin(terms: &[(Scalar, &Poly)]) -> Poly {
    let mut out = Poly::zero();
    for (c, p) in terms {
        if !c.is_zero() {
            out.add_scaled(p, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::GeneratorInfo;

    fn w(names: &[&str]) -> Word {
        names.iter().map(|n| Sym::new(n)).collect()
    }

    fn plane_order() -> TermOrder {
        TermOrder::new(&[("h", 1), ("th", 2), ("x", 1)], &["h", "th", "x"])
    }

    fn plane_alphabet() -> Alphabet {
        Alphabet::new(vec![
            GeneratorInfo::new("h", 2).with_weight(1).nilpotent(3),
            GeneratorInfo::new("th", 1).nilpotent(3),
            GeneratorInfo::new("x", 0),
        ])
    }

    fn contraction_rhs() -> Poly {
        &Poly::names(&["th", "x"]).scale(&Scalar::q()) + &Poly::names(&["h", "x", "x"])
    }

    #[test]
    fn orientation() {
        let o = plane_order();
        assert!(orient(w(&["x", "th"]), contraction_rhs(), &o, "xθ").is_ok());
        assert!(orient(w(&["th", "th", "th"]), Poly::zero(), &o, "θ³").is_ok());
        let qinv = Scalar::q_pow(-1);
        let reversed = &Poly::names(&["x", "th"]).scale(&qinv)
            - &Poly::names(&["h", "x", "x"]).scale(&qinv);
        match orient(w(&["th", "x"]), reversed, &o, "bad") {
            Err(Error::NotDecreasing { rhs_word, .. }) => assert_eq!(rhs_word, "x*th"),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn order_is_total_on_distinct_words() {
        let o = plane_order();
        let words = [w(&["x"]), w(&["h", "x"]), w(&["x", "h"]), w(&["th"]), w(&[])];
        for a in &words {
            for b in &words {
                assert_eq!(o.cmp_words(a, b) == Ordering::Equal, a == b);
                assert_eq!(o.cmp_words(a, b), o.cmp_words(b, a).reverse());
            }
        }
    }

    #[test]
    fn single_rule_without_nilpotency_has_no_overlaps() {
        let o = plane_order();
        let r = orient(w(&["x", "th"]), contraction_rhs(), &o, "xθ").unwrap();
        let alpha = Alphabet::new(vec![
            GeneratorInfo::new("h", 2).with_weight(1),
            GeneratorInfo::new("th", 1),
            GeneratorInfo::new("x", 0),
        ]);
        let p = Presentation::new("one", alpha, vec![r], o, QBinding::Symbolic).unwrap();
        assert!(p.critical_pairs().unwrap().is_empty());
    }

    #[test]
    fn nilpotency_without_rule_is_rejected() {
        let o = plane_order();
        let err = Presentation::new("bad", plane_alphabet(), vec![], o, QBinding::Symbolic);
        assert!(matches!(err, Err(Error::InvalidPreset(_))));
    }

    #[test]
    fn heavier_rhs_fails_termination_with_witness() {
        let o = plane_order();
        let bad = RewriteRule {
            lhs: w(&["x", "h"]),
            rhs: Poly::names(&["th", "th"]),
            provenance: "synthetic".into(),
        };
        let p = Presentation::new_unchecked(
            "bad",
            plane_alphabet(),
            vec![bad],
            o,
            QBinding::Symbolic,
        );
        let rep = p.check_termination();
        assert!(!rep.passed());
        assert_eq!(rep.violations[0].2, "th*th");
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // a -> b, b -> a is not decreasing, so build it unchecked
        let alpha = Alphabet::new(vec![GeneratorInfo::new("x", 0), GeneratorInfo::new("y", 0)]);
        let rules = vec![
            RewriteRule {
                lhs: w(&["x"]),
                rhs: Poly::names(&["y"]),
                provenance: "loop".into(),
            },
            RewriteRule {
                lhs: w(&["y"]),
                rhs: Poly::names(&["x", "x"]),
                provenance: "loop".into(),
            },
        ];
        let o = TermOrder::new(&[("x", 1), ("y", 1)], &["x", "y"]);
        let p = Presentation::new_unchecked("loop", alpha, rules, o, QBinding::Symbolic);
        let mut r = Reducer::with_budget(&p, 50);
        assert!(matches!(
            r.reduce(&Poly::names(&["x"])),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
