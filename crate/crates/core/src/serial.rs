//! Preset JSON: export and import of a [`Presentation`].
//!
//! ```json
//! { "name": "...",
//!   "generators": [{"name", "grade", "weight", "nilpotency"?, "d_image"?, "d_passage"?}],
//!   "rules": [{"lhs": [..], "rhs": [{"coeff": "j*q^-1", "word": [..]}], "ref": "..."}],
//!   "order": {"weights": {"x": 1, ..}, "precedence": [..]},
//!   "q": "symbolic" | "1" }
//! ```

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{parse_poly, parse_scalar};
use crate::format::poly_text;
use crate::freealg::{Alphabet, DImage, GeneratorInfo, Grade, Poly, Sym};
use crate::rewrite::{Presentation, QBinding, RewriteRule, TermOrder};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresetJson {
    pub name: String,
    pub generators: Vec<GeneratorJson>,
    pub rules: Vec<RuleJson>,
    pub order: OrderJson,
    pub q: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub name: String,
    pub grade: u8,
    pub weight: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilpotency: Option<u32>,
    /// A generator name, "zero", or an expression.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_image: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_passage: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleJson {
    pub lhs: Vec<String>,
    pub rhs: Vec<TermJson>,
    #[serde(rename = "ref")]
    pub reference: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub word: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderJson {
    pub weights: BTreeMap<String, i64>,
    pub precedence: Vec<String>,
}

fn names(w: &[Sym]) -> Vec<String> {
    w.iter().map(|s| s.name().to_string()).collect()
}

fn d_image_text(d: &DImage) -> String {
    match d {
        DImage::Zero => "zero".to_string(),
        DImage::Gen(s) => s.name().to_string(),
        DImage::Poly(p) => poly_text(p, None, false),
    }
}

impl PresetJson {
    pub fn from_presentation(p: &Presentation) -> Self {
        let generators = p
            .alphabet
            .generators()
            .iter()
            .map(|g| GeneratorJson {
                name: g.name.name().to_string(),
                grade: g.declared_grade.value(),
                weight: g.weight.value(),
                nilpotency: g.nilpotency,
                d_image: g.d_image.as_ref().map(d_image_text),
                d_passage: (g.d_passage != crate::scalar::Scalar::j_pow(g.weight.value() as i64))
                    .then(|| g.d_passage.to_string()),
            })
            .collect();
        let rules = p
            .rules()
            .iter()
            .map(|r| RuleJson {
                lhs: names(&r.lhs),
                rhs: r
                    .rhs
                    .terms()
                    .map(|(w, c)| TermJson {
                        coeff: c.to_string(),
                        word: names(w),
                    })
                    .collect(),
                reference: r.provenance.clone(),
            })
            .collect();
        let order = OrderJson {
            weights: p
                .order
                .weights()
                .iter()
                .map(|(s, w)| (s.name().to_string(), *w))
                .collect(),
            precedence: names(p.order.precedence()),
        };
        let q = match &p.q {
            QBinding::Symbolic => "symbolic".to_string(),
            QBinding::Value(v) => v.to_string(),
        };
        PresetJson {
            name: p.name.clone(),
            generators,
            rules,
            order,
            q,
        }
    }

    /// Rebuilds and validates the presentation.
    pub fn to_presentation(&self) -> Result<Presentation> {
        let mut gens = Vec::new();
        for g in &self.generators {
            let mut info = GeneratorInfo::new(&g.name, g.grade as i64).with_weight(g.weight as i64);
            info.declared_grade = Grade::new(g.grade as i64);
            info.nilpotency = g.nilpotency;
            if let Some(p) = &g.d_passage {
                info.d_passage = parse_scalar(p)?;
            }
            gens.push(info);
        }
        let bare = Alphabet::new(gens.clone());
        for (info, g) in gens.iter_mut().zip(&self.generators) {
            info.d_image = match g.d_image.as_deref() {
                None => None,
                Some("zero") => Some(DImage::Zero),
                Some(src) if bare.contains(Sym::new(src)) => Some(DImage::Gen(Sym::new(src))),
                Some(src) => Some(DImage::Poly(parse_poly(src, Some(&bare))?)),
            };
        }
        let alphabet = Alphabet::new(gens);
        let mut rules = Vec::new();
        for r in &self.rules {
            let mut rhs = Poly::zero();
            for t in &r.rhs {
                let word = t
                    .word
                    .iter()
                    .map(|n| alphabet.lookup(n))
                    .collect::<Result<Vec<_>>>()?;
                rhs.add_term(word, parse_scalar(&t.coeff)?);
            }
            let lhs = r
                .lhs
                .iter()
                .map(|n| alphabet.lookup(n))
                .collect::<Result<Vec<_>>>()?;
            rules.push(RewriteRule {
                lhs,
                rhs,
                provenance: r.reference.clone(),
            });
        }
        let order = TermOrder::from_syms(
            self.order
                .weights
                .iter()
                .map(|(n, w)| (Sym::new(n), *w))
                .collect(),
            self.order.precedence.iter().map(|n| Sym::new(n)).collect(),
        );
        let q = match self.q.as_str() {
            "symbolic" => QBinding::Symbolic,
            v => QBinding::Value(
                v.parse::<BigRational>()
                    .map_err(|_| Error::InvalidPreset(format!("bad q value {v:?}")))?,
            ),
        };
        Presentation::new(&self.name, alphabet, rules, order, q)
    }
}

pub fn export(p: &Presentation) -> String {
    serde_json::to_string_pretty(&PresetJson::from_presentation(p)).expect("preset serializes")
}

pub fn import(src: &str) -> Result<Presentation> {
    let json: PresetJson =
        serde_json::from_str(src).map_err(|e| Error::InvalidPreset(e.to_string()))?;
    json.to_presentation()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::{build, PRESETS};

    #[test]
    fn every_preset_round_trips_bit_exactly() {
        for name in PRESETS {
            let p = build(name).unwrap();
            let text = export(&p);
            let back = import(&text).unwrap();
            assert_eq!(export(&back), text, "{name}");
            assert_eq!(back.rules(), p.rules(), "{name}");
            assert_eq!(back.alphabet, p.alphabet, "{name}");
            assert_eq!(back.order, p.order, "{name}");
            assert_eq!(back.q, p.q, "{name}");
        }
    }

    #[test]
    fn import_rejects_unknown_generator_in_rule() {
        let mut json = PresetJson::from_presentation(&build("h_plane").unwrap());
        json.rules[0].lhs[0] = "zz".into();
        assert!(json.to_presentation().is_err());
    }
}
