//! The cyclotomic field Q(j), j a primitive cube root of unity.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `re + im*j` with exact rational parts, reduced with `j^2 = -1 - j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclo {
    pub re: BigRational,
    pub im: BigRational,
}

impl Cyclo {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Cyclo { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Cyclo::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_rational(r: BigRational) -> Self {
        Cyclo::new(r, BigRational::zero())
    }

    pub fn j() -> Self {
        Cyclo::new(BigRational::zero(), BigRational::one())
    }

    /// `j^k` for any integer k.
    pub fn j_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Cyclo::one(),
            1 => Cyclo::j(),
            _ => Cyclo::new(-BigRational::one(), -BigRational::one()),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    /// Galois conjugate, sending j to j^2.
    pub fn conj(&self) -> Self {
        // a + b j^2 = (a - b) - b j
        Cyclo::new(&self.re - &self.im, -self.im.clone())
    }

    /// Field norm a^2 - ab + b^2, zero only for zero.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re - &self.re * &self.im + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(Cyclo::new(c.re / &n, c.im / &n))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclo::new(&self.re * r, &self.im * r)
    }

    /// Coordinates `(c0, c1, c2)` of `c0 + c1 j + c2 j^2` with the fewest
    /// nonzero entries (ties: smallest total absolute value). Used for printing.
    pub fn sparse_coords(&self) -> [BigRational; 3] {
        let base = [self.re.clone(), self.im.clone(), BigRational::zero()];
        let shifts = [BigRational::zero(), -self.re.clone(), -self.im.clone()];
        let mut best: Option<([BigRational; 3], usize, BigRational)> = None;
        for t in shifts.iter() {
            let cand = [&base[0] + t, &base[1] + t, &base[2] + t];
            let nz = cand.iter().filter(|c| !c.is_zero()).count();
            let weight = cand
                .iter()
                .fold(BigRational::zero(), |acc, c| acc + c.abs());
            let better = match &best {
                None => true,
                Some((_, bnz, bw)) => nz < *bnz || (nz == *bnz && weight < *bw),
            };
            if better {
                best = Some((cand, nz, weight));
            }
        }
        best.expect("three candidates").0
    }

    /// True when the value is `±r * j^k` for a single power k.
    pub fn is_monomial(&self) -> bool {
        self.sparse_coords().iter().filter(|c| !c.is_zero()).count() <= 1
    }

    /// Sign of a monomial value (negative when its single rational factor is).
    pub fn is_negative_monomial(&self) -> bool {
        let c = self.sparse_coords();
        let nz: Vec<_> = c.iter().filter(|c| !c.is_zero()).collect();
        nz.len() == 1 && nz[0].is_negative()
    }
}

impl Zero for Cyclo {
    fn zero() -> Self {
        Cyclo::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Cyclo {
    fn one() -> Self {
        Cyclo::new(BigRational::one(), BigRational::zero())
    }
}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, o: &Cyclo) -> Cyclo {
        Cyclo::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, o: Cyclo) -> Cyclo {
        &self + &o
    }
}

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, o: &Cyclo) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, o: &Cyclo) -> Cyclo {
        Cyclo::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, o: Cyclo) -> Cyclo {
        &self - &o
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, o: &Cyclo) -> Cyclo {
        // (a + bj)(c + dj) = ac + (ad + bc) j + bd j^2,  j^2 = -1 - j
        if self.im.is_zero() {
            return o.scale(&self.re);
        }
        if o.im.is_zero() {
            return self.scale(&o.re);
        }
        let bd = &self.im * &o.im;
        Cyclo::new(
            &self.re * &o.re - &bd,
            &self.re * &o.im + &self.im * &o.re - bd,
        )
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, o: Cyclo) -> Cyclo {
        &self * &o
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Formats `c0 + c1 j + c2 j^2` as a sum, highest power of j first.
pub(crate) fn fmt_cyclo(c: &Cyclo, unicode: bool) -> String {
    let coords = c.sparse_coords();
    let mut out = String::new();
    for k in [2usize, 1, 0] {
        let r = &coords[k];
        if r.is_zero() {
            continue;
        }
        let neg = r.is_negative();
        let mag = r.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let jpart = match (k, unicode) {
            (0, _) => String::new(),
            (1, _) => "j".to_string(),
            (_, true) => "j²".to_string(),
            (_, false) => "j^2".to_string(),
        };
        if jpart.is_empty() {
            out.push_str(&fmt_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&jpart);
        } else {
            out.push_str(&fmt_rational(&mag));
            out.push('*');
            out.push_str(&jpart);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_cyclo(self, false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn minimal_polynomial_vanishes() {
        let j = Cyclo::j();
        let j2 = &j * &j;
        assert_eq!(&(&Cyclo::one() + &j) + &j2, Cyclo::zero());
        assert_eq!(j2, Cyclo::new(rat(-1, 1), rat(-1, 1)));
        assert_eq!(&j2 * &j, Cyclo::one());
        let jp1 = &j + &Cyclo::one();
        assert_eq!(&jp1 * &jp1, j);
    }

    #[test]
    fn inverse() {
        let x = Cyclo::new(rat(3, 2), rat(-5, 7));
        assert_eq!(&x * &x.inv().unwrap(), Cyclo::one());
        assert!(Cyclo::zero().inv().is_none());
    }

    #[test]
    fn printing_prefers_sparse_forms() {
        assert_eq!(Cyclo::j_pow(2).to_string(), "j^2");
        assert_eq!((Cyclo::j_pow(2) - Cyclo::one()).to_string(), "j^2 - 1");
        assert_eq!((Cyclo::j() - Cyclo::j_pow(2)).to_string(), "-j^2 + j");
        assert_eq!((-Cyclo::j_pow(2)).to_string(), "-j^2");
        assert_eq!(Cyclo::from_int(0).to_string(), "0");
    }
}
