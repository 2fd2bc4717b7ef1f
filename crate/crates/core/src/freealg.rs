//! Free Z3-graded associative algebra: generators, words, polynomials and
//! substitution homomorphisms.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Interned generator name.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sym(u32);

struct Interner {
    names: Vec<&'static str>,
    index: HashMap<&'static str, u32>,
}

fn interner() -> &'static RwLock<Interner> {
    static INTERNER: OnceLock<RwLock<Interner>> = OnceLock::new();
    INTERNER.get_or_init(|| {
        let mut i = Interner {
            names: Vec::new(),
            index: HashMap::new(),
        };
        // fixed ids for the built-in alphabet keep map iteration stable
        for name in crate::names::BUILTIN {
            let id = i.names.len() as u32;
            i.names.push(name);
            i.index.insert(name, id);
        }
        RwLock::new(i)
    })
}

impl Sym {
    pub fn new(name: &str) -> Sym {
        if let Some(&id) = interner().read().unwrap().index.get(name) {
            return Sym(id);
        }
        let mut w = interner().write().unwrap();
        if let Some(&id) = w.index.get(name) {
            return Sym(id);
        }
        let leaked: &'static str = Box::leak(name.to_string().into_boxed_str());
        let id = w.names.len() as u32;
        w.names.push(leaked);
        w.index.insert(leaked, id);
        Sym(id)
    }

    pub fn name(self) -> &'static str {
        interner().read().unwrap().names[self.0 as usize]
    }
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Element of Z3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grade(u8);

impl Grade {
    pub const ZERO: Grade = Grade(0);

    pub fn new(g: i64) -> Grade {
        Grade(g.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl Add for Grade {
    type Output = Grade;
    fn add(self, o: Grade) -> Grade {
        Grade((self.0 + o.0) % 3)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Image of a generator under the exterior differential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DImage {
    Zero,
    Gen(Sym),
    Poly(Poly),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorInfo {
    pub name: Sym,
    /// Grade as stated for the symbol; informational only.
    pub declared_grade: Grade,
    /// Exponent contributed to j-commutation factors and homogeneity checks.
    pub weight: Grade,
    pub nilpotency: Option<u32>,
    pub d_image: Option<DImage>,
    /// Factor picked up when d moves past this generator.
    pub d_passage: Scalar,
}

impl GeneratorInfo {
    /// Generator whose effective weight equals its declared grade.
    pub fn new(name: &str, grade: i64) -> Self {
        GeneratorInfo {
            name: Sym::new(name),
            declared_grade: Grade::new(grade),
            weight: Grade::new(grade),
            nilpotency: None,
            d_image: None,
            d_passage: Scalar::j_pow(grade),
        }
    }

    pub fn with_weight(mut self, weight: i64) -> Self {
        self.weight = Grade::new(weight);
        self.d_passage = Scalar::j_pow(weight);
        self
    }

    pub fn nilpotent(mut self, n: u32) -> Self {
        self.nilpotency = Some(n);
        self
    }

    pub fn d(mut self, image: DImage) -> Self {
        self.d_image = Some(image);
        self
    }
}

/// Ordered generator table of one presentation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    gens: Vec<GeneratorInfo>,
    index: HashMap<Sym, usize>,
}

impl Alphabet {
    pub fn new(gens: Vec<GeneratorInfo>) -> Self {
        let index = gens.iter().enumerate().map(|(i, g)| (g.name, i)).collect();
        Alphabet { gens, index }
    }

    pub fn generators(&self) -> &[GeneratorInfo] {
        &self.gens
    }

    pub fn get(&self, s: Sym) -> Option<&GeneratorInfo> {
        self.index.get(&s).map(|&i| &self.gens[i])
    }

    pub fn info(&self, s: Sym) -> Result<&GeneratorInfo> {
        self.get(s)
            .ok_or_else(|| Error::UnknownGenerator(s.name().to_string()))
    }

    pub fn contains(&self, s: Sym) -> bool {
        self.index.contains_key(&s)
    }

    pub fn lookup(&self, name: &str) -> Result<Sym> {
        let s = Sym::new(name);
        if self.contains(s) {
            Ok(s)
        } else {
            Err(Error::UnknownGenerator(name.to_string()))
        }
    }

    /// Sum of effective weights mod 3.
    pub fn word_grade(&self, w: &[Sym]) -> Result<Grade> {
        w.iter()
            .try_fold(Grade::ZERO, |acc, &s| Ok(acc + self.info(s)?.weight))
    }

    /// The common grade of all support words, `None` for inhomogeneous
    /// polynomials, `Some(None)`-like zero handled as `Ok(None)`.
    pub fn poly_grade(&self, p: &Poly) -> Result<Option<Grade>> {
        let mut grade = None;
        for w in p.terms.keys() {
            let g = self.word_grade(w)?;
            match grade {
                None => grade = Some(g),
                Some(g0) if g0 != g => return Ok(None),
                _ => {}
            }
        }
        Ok(grade)
    }

    pub fn check_poly(&self, p: &Poly) -> Result<()> {
        for w in p.terms.keys() {
            for &s in w {
                self.info(s)?;
            }
        }
        Ok(())
    }

    pub fn extend(&self, more: Vec<GeneratorInfo>) -> Alphabet {
        let mut gens = self.gens.clone();
        for g in more {
            if !self.contains(g.name) {
                gens.push(g);
            }
        }
        Alphabet::new(gens)
    }
}

pub type Word = Vec<Sym>;

/// Finite linear combination of words; zero coefficients never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Word, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::term(c, Vec::new())
    }

    pub fn term(c: Scalar, w: Word) -> Self {
        let mut p = Poly::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> Self {
        Poly::term(Scalar::one(), w)
    }

    pub fn gen(s: Sym) -> Self {
        Poly::word(vec![s])
    }

    /// Word built from generator names.
    pub fn names(names: &[&str]) -> Self {
        Poly::word(names.iter().map(|n| Sym::new(n)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &[Sym]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Poly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn try_map_coeffs<E>(
        &self,
        mut f: impl FnMut(&Scalar) -> std::result::Result<Scalar, E>,
    ) -> std::result::Result<Poly, E> {
        let mut out = Poly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Maximum word length in the support.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Product with the word `left` on the left and `right` on the right.
    pub fn sandwich(&self, left: &[Sym], right: &[Sym]) -> Poly {
        let mut out = Poly::zero();
        for (w, c) in &self.terms {
            let mut nw = Vec::with_capacity(left.len() + w.len() + right.len());
            nw.extend_from_slice(left);
            nw.extend_from_slice(w);
            nw.extend_from_slice(right);
            out.add_term(nw, c.clone());
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        (0..n).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Generators occurring anywhere in the support.
    pub fn symbols(&self) -> Vec<Sym> {
        let mut v: Vec<Sym> = self.terms.keys().flatten().copied().collect();
        v.sort();
        v.dedup();
        v
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::format::poly_text(self, None, false))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::format::poly_text(self, None, false))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, o: Poly) -> Poly {
        for (w, c) in o.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for &Poly {
    type Output = Poly;
    /// Concatenation product; no reduction.
    fn mul(self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = Vec::with_capacity(w1.len() + w2.len());
                w.extend_from_slice(w1);
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

impl Mul<&Scalar> for &Poly {
    type Output = Poly;
    fn mul(self, c: &Scalar) -> Poly {
        self.scale(c)
    }
}

impl From<Scalar> for Poly {
    fn from(c: Scalar) -> Poly {
        Poly::constant(c)
    }
}

/// Product of polynomials checked against one alphabet.
pub fn poly_mul(alphabet: &Alphabet, p: &Poly, r: &Poly) -> Result<Poly> {
    alphabet.check_poly(p)?;
    alphabet.check_poly(r)?;
    Ok(p * r)
}

/// Generator-to-polynomial substitution extended multiplicatively.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedHom {
    images: BTreeMap<Sym, Poly>,
}

impl GradedHom {
    pub fn new() -> Self {
        GradedHom::default()
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        let mut h = GradedHom::new();
        for g in alphabet.generators() {
            h.images.insert(g.name, Poly::gen(g.name));
        }
        h
    }

    pub fn set(&mut self, s: Sym, image: Poly) -> &mut Self {
        self.images.insert(s, image);
        self
    }

    pub fn with(mut self, name: &str, image: Poly) -> Self {
        self.images.insert(Sym::new(name), image);
        self
    }

    pub fn image(&self, s: Sym) -> Option<&Poly> {
        self.images.get(&s)
    }

    pub fn images(&self) -> impl Iterator<Item = (&Sym, &Poly)> {
        self.images.iter()
    }

    pub fn apply_word(&self, w: &[Sym]) -> Result<Poly> {
        let mut acc = Poly::one();
        for &s in w {
            let img = self
                .images
                .get(&s)
                .ok_or_else(|| Error::MissingImage(s.name().to_string()))?;
            acc = &acc * img;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.apply_word(w)?, c);
        }
        Ok(out)
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &GradedHom) -> Result<GradedHom> {
        let mut out = GradedHom::new();
        for (s, img) in &inner.images {
            out.images.insert(*s, self.apply(img)?);
        }
        Ok(out)
    }

    /// Every image is homogeneous of the source generator's effective weight
    /// (zero images are accepted).
    pub fn check_grading(&self, source: &Alphabet, target: &Alphabet) -> Result<()> {
        for (s, img) in &self.images {
            let want = source.info(*s)?.weight;
            let got = target.poly_grade(img)?;
            if !img.is_zero() && got != Some(want) {
                return Err(Error::NotHomogeneous {
                    lhs: s.name().to_string(),
                    detail: format!("image {img} does not have grade {want}"),
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane() -> Alphabet {
        Alphabet::new(vec![
            GeneratorInfo::new("h", 2).with_weight(1),
            GeneratorInfo::new("th", 1),
            GeneratorInfo::new("x", 0),
            GeneratorInfo::new("dth", 2),
        ])
    }

    #[test]
    fn grades() {
        let a = plane();
        assert_eq!(a.word_grade(&[]).unwrap(), Grade::new(0));
        assert_eq!(a.word_grade(&[Sym::new("dth")]).unwrap(), Grade::new(2));
        let hxx = [Sym::new("h"), Sym::new("x"), Sym::new("x")];
        assert_eq!(a.word_grade(&hxx).unwrap(), Grade::new(1));
        assert!(matches!(
            a.word_grade(&[Sym::new("nope")]),
            Err(Error::UnknownGenerator(_))
        ));
        // declared grade of h is kept but not used
        assert_eq!(a.get(Sym::new("h")).unwrap().declared_grade, Grade::new(2));
    }

    #[test]
    fn products_are_unreduced_concatenations() {
        let x = Poly::names(&["x"]);
        let th = Poly::names(&["th"]);
        assert_eq!(&x * &th, Poly::names(&["x", "th"]));
        let p = &(&x + &th) * &th;
        assert_eq!(p, &Poly::names(&["x", "th"]) + &Poly::names(&["th", "th"]));
        let hx = Poly::names(&["h", "x"]);
        assert_eq!(&hx * &x, Poly::names(&["h", "x", "x"]));
        let bad = Poly::names(&["y"]);
        assert!(poly_mul(&plane(), &x, &bad).is_err());
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let x = Poly::names(&["x"]);
        assert!((&x - &x).is_zero());
        assert_eq!((&x - &x).len(), 0);
    }

    #[test]
    fn hom_application() {
        let a = plane();
        let id = GradedHom::identity(&a);
        let p = &Poly::names(&["x", "th"]) + &Poly::names(&["h", "x", "x"]).scale(&Scalar::q());
        assert_eq!(id.apply(&p).unwrap(), p);

        let coact = GradedHom::new().with(
            "x",
            &Poly::names(&["a", "x"]) + &Poly::names(&["b", "th"]),
        );
        let sq = coact.apply(&Poly::names(&["x", "x"])).unwrap();
        assert_eq!(sq.len(), 4);

        let missing = GradedHom::new();
        assert!(matches!(
            missing.apply(&Poly::names(&["x"])),
            Err(Error::MissingImage(_))
        ));
    }
}
