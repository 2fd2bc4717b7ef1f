//! Exact coefficients: rational functions in `q` over the cyclotomic field Q(j).
//!
//! Every value is kept in a canonical reduced form (monic denominator, coprime
//! numerator), so structural equality is value equality. `q` stays an
//! indeterminate; numeric values of `q` are only reached through
//! [`CycloRational::specialize_q`], which reports poles exactly.

mod cyclo;
mod qpoly;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use cyclo::Cyclo;
pub use qpoly::QPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("invalid scalar `{text}`: {reason}")]
    Parse { text: String, reason: String },
}

/// An element of Q(j)(q) in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloRational {
    num: QPoly,
    den: QPoly,
}

pub type Scalar = CycloRational;

impl CycloRational {
    /// Canonical form of `num / den`.
    pub fn from_fraction(num: QPoly, den: QPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(CycloRational::zero());
        }
        if den.is_constant() {
            let inv = den.constant_term().inv().expect("nonzero");
            return Ok(CycloRational {
                num: num.scale(&inv),
                den: QPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let (lc, den) = den.monic();
        let inv = lc.inv().expect("nonzero");
        Ok(CycloRational {
            num: num.scale(&inv),
            den,
        })
    }

    pub fn from_poly(num: QPoly) -> Self {
        CycloRational {
            num,
            den: QPoly::one(),
        }
    }

    pub fn from_cyclo(c: Cyclo) -> Self {
        CycloRational::from_poly(QPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        CycloRational::from_cyclo(Cyclo::from_int(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        CycloRational::from_cyclo(Cyclo::from_rational(r))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        CycloRational::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn q() -> Self {
        CycloRational::from_poly(QPoly::q())
    }

    pub fn j() -> Self {
        CycloRational::from_cyclo(Cyclo::j())
    }

    /// `j^k`, any integer k.
    pub fn j_pow(k: i64) -> Self {
        CycloRational::from_cyclo(Cyclo::j_pow(k))
    }

    /// `q^k`, any integer k.
    pub fn q_pow(k: i64) -> Self {
        let m = QPoly::monomial(Cyclo::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            CycloRational::from_poly(m)
        } else {
            CycloRational {
                num: QPoly::one(),
                den: m,
            }
        }
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    /// True when the value does not depend on q.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The Q(j) value of a q-free scalar.
    pub fn as_cyclo(&self) -> Option<Cyclo> {
        self.is_constant().then(|| self.num.constant_term())
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        CycloRational::from_fraction(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i64) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = CycloRational::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Value at `q = q0`, keeping j symbolic.
    pub fn specialize_q(&self, q0: &BigRational) -> Result<Self, ScalarError> {
        let d = self.den.eval_rational(q0);
        if d.is_zero() {
            return Err(ScalarError::Pole(fmt_big_rational(q0)));
        }
        let n = self.num.eval_rational(q0);
        Ok(CycloRational::from_cyclo(
            &n * &d.inv().expect("nonzero denominator"),
        ))
    }

    /// `Some((negative, magnitude))` when the value prints as a single signed
    /// factor such as `-j^2*q^-1`; `None` for sums.
    pub fn split_sign(&self) -> Option<(bool, CycloRational)> {
        if self.den.coeffs().len() != self.den.q_valuation() + 1 {
            return None;
        }
        let nz: Vec<&Cyclo> = self.num.coeffs().iter().filter(|c| !c.is_zero()).collect();
        if nz.len() != 1 || !nz[0].is_monomial() {
            return None;
        }
        if nz[0].is_negative_monomial() {
            Some((true, -self))
        } else {
            Some((false, self.clone()))
        }
    }

    pub(crate) fn format(&self, unicode: bool) -> String {
        format_scalar(self, unicode)
    }
}

fn fmt_big_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Terms `(coefficient, exponent of q)` of a numerator over `q^shift`.
fn q_terms(p: &QPoly, shift: i64) -> Vec<(Cyclo, i64)> {
    p.coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (c.clone(), k as i64 - shift))
        .collect()
}

fn fmt_q_power(k: i64, unicode: bool) -> String {
    match (k, unicode) {
        (1, _) => "q".to_string(),
        (-1, true) => "q⁻¹".to_string(),
        (_, true) => format!("q^{k}"),
        (_, false) => format!("q^{k}"),
    }
}

fn fmt_q_sum(terms: &[(Cyclo, i64)], unicode: bool) -> String {
    let mut out = String::new();
    for (c, k) in terms {
        let (neg, mag) = if c.is_monomial() && c.is_negative_monomial() {
            (true, -c)
        } else {
            (false, c.clone())
        };
        let cs = cyclo::fmt_cyclo(&mag, unicode);
        let body = if *k == 0 {
            if mag.is_monomial() || terms.len() == 1 {
                cs
            } else {
                format!("({cs})")
            }
        } else {
            let qp = fmt_q_power(*k, unicode);
            if mag.is_one() {
                qp
            } else if mag.is_monomial() {
                format!("{cs}*{qp}")
            } else {
                format!("({cs})*{qp}")
            }
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn format_scalar(s: &CycloRational, unicode: bool) -> String {
    let dv = s.den.q_valuation();
    if s.den.coeffs().len() == dv + 1 {
        // denominator is q^dv
        return fmt_q_sum(&q_terms(&s.num, dv as i64), unicode);
    }
    let n = fmt_q_sum(&q_terms(&s.num, 0), unicode);
    let d = fmt_q_sum(&q_terms(&s.den, 0), unicode);
    format!("({n})/({d})")
}

impl Zero for CycloRational {
    fn zero() -> Self {
        CycloRational {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for CycloRational {
    fn one() -> Self {
        CycloRational::from_int(1)
    }
}

impl Add for &CycloRational {
    type Output = CycloRational;
    fn add(self, o: &CycloRational) -> CycloRational {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return CycloRational::from_poly(&self.num + &o.num);
            }
            return CycloRational::from_fraction(&self.num + &o.num, self.den.clone())
                .expect("nonzero denominator");
        }
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        CycloRational::from_fraction(num, &self.den * &o.den).expect("nonzero denominator")
    }
}

impl Add for CycloRational {
    type Output = CycloRational;
    fn add(self, o: CycloRational) -> CycloRational {
        &self + &o
    }
}

impl AddAssign<&CycloRational> for CycloRational {
    fn add_assign(&mut self, o: &CycloRational) {
        *self = &*self + o;
    }
}

impl Neg for &CycloRational {
    type Output = CycloRational;
    fn neg(self) -> CycloRational {
        CycloRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for CycloRational {
    type Output = CycloRational;
    fn neg(self) -> CycloRational {
        -&self
    }
}

impl Sub for &CycloRational {
    type Output = CycloRational;
    fn sub(self, o: &CycloRational) -> CycloRational {
        self + &(-o)
    }
}

impl Sub for CycloRational {
    type Output = CycloRational;
    fn sub(self, o: CycloRational) -> CycloRational {
        &self - &o
    }
}

impl Mul for &CycloRational {
    type Output = CycloRational;
    fn mul(self, o: &CycloRational) -> CycloRational {
        if self.is_zero() || o.is_zero() {
            return CycloRational::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return CycloRational::from_poly(&self.num * &o.num);
        }
        CycloRational::from_fraction(&self.num * &o.num, &self.den * &o.den)
            .expect("nonzero denominator")
    }
}

impl Mul for CycloRational {
    type Output = CycloRational;
    fn mul(self, o: CycloRational) -> CycloRational {
        &self * &o
    }
}

impl Div for &CycloRational {
    type Output = Result<CycloRational, ScalarError>;
    fn div(self, o: &CycloRational) -> Self::Output {
        #[allow(clippy::suspicious_arithmetic_impl)]
        Ok(self * &o.inv()?)
    }
}

impl fmt::Display for CycloRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_scalar(self, false))
    }
}

impl FromStr for CycloRational {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::expr::parse_scalar(s).map_err(|e| ScalarError::Parse {
            text: s.to_string(),
            reason: e.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm1() -> CycloRational {
        &CycloRational::q() - &CycloRational::one()
    }

    #[test]
    fn minimal_polynomial_reduces_to_zero() {
        let j = CycloRational::j();
        let s = &(&(&j * &j) + &j) + &CycloRational::one();
        assert!(s.is_zero());
        assert_eq!(&j * &j, -&(&j + &CycloRational::one()));
    }

    #[test]
    fn polynomial_cancellation() {
        let q = CycloRational::q();
        let num = &(&q * &q) - &CycloRational::one();
        let r = (&num / &qm1()).unwrap();
        assert_eq!(r, &q + &CycloRational::one());
        assert!(r.denom().is_one());
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(
            CycloRational::from_fraction(QPoly::one(), QPoly::zero()),
            Err(ScalarError::DivisionByZero)
        );
        assert!(CycloRational::zero().inv().is_err());
    }

    #[test]
    fn specialization() {
        let one = BigRational::one();
        let qj = &CycloRational::q() * &CycloRational::j();
        assert_eq!(qj.specialize_q(&one).unwrap(), CycloRational::j());
        let pole = qm1().inv().unwrap();
        assert!(matches!(pole.specialize_q(&one), Err(ScalarError::Pole(_))));
        let jqinv = &CycloRational::j() * &CycloRational::q_pow(-1);
        assert_eq!(jqinv.specialize_q(&one).unwrap(), CycloRational::j());
    }

    #[test]
    fn display() {
        let jqinv = &CycloRational::j_pow(2) * &CycloRational::q_pow(-1);
        assert_eq!(jqinv.to_string(), "j^2*q^-1");
        assert_eq!((-&CycloRational::j()).to_string(), "-j");
        let hq = qm1().inv().unwrap();
        assert_eq!(hq.to_string(), "(1)/(q - 1)");
        assert_eq!((&CycloRational::q() * &CycloRational::j()).to_string(), "j*q");
    }
}
