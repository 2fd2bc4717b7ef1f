//! Dense univariate polynomials in q over Q(j).

use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclo::Cyclo;

/// Coefficients stored lowest degree first, never with a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPoly {
    coeffs: Vec<Cyclo>,
}

impl QPoly {
    pub fn from_coeffs(mut coeffs: Vec<Cyclo>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn constant(c: Cyclo) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: Cyclo, k: usize) -> Self {
        let mut coeffs = vec![Cyclo::zero(); k];
        coeffs.push(c);
        QPoly::from_coeffs(coeffs)
    }

    pub fn q() -> Self {
        QPoly::monomial(Cyclo::one(), 1)
    }

    pub fn coeffs(&self) -> &[Cyclo] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Cyclo> {
        self.coeffs.last()
    }

    /// Constant coefficient (zero for the zero polynomial).
    pub fn constant_term(&self) -> Cyclo {
        self.coeffs.first().cloned().unwrap_or_else(Cyclo::zero)
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> (Cyclo, QPoly) {
        match self.leading() {
            None => (Cyclo::one(), QPoly::zero()),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                (lc.clone(), self.scale(&inv))
            }
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![Cyclo::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[i + k] = &rem[i + k] - &t;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (QPoly::from_coeffs(quot), QPoly::from_coeffs(rem))
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic().1
    }

    pub fn eval(&self, x: &Cyclo) -> Cyclo {
        let mut acc = Cyclo::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> Cyclo {
        self.eval(&Cyclo::from_rational(x.clone()))
    }

    /// Largest k with q^k dividing self.
    pub fn q_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Drops the lowest k coefficients, i.e. divides by q^k (caller ensures exactness).
    pub fn shift_down(&self, k: usize) -> QPoly {
        QPoly::from_coeffs(self.coeffs[k.min(self.coeffs.len())..].to_vec())
    }
}

impl Zero for QPoly {
    fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for QPoly {
    fn one() -> Self {
        QPoly::constant(Cyclo::one())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let zero = Cyclo::zero();
        QPoly::from_coeffs(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).unwrap_or(&zero);
                    let b = o.coeffs.get(i).unwrap_or(&zero);
                    a + b
                })
                .collect(),
        )
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, o: QPoly) -> QPoly {
        &self + &o
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        self + &(-o)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        if self.coeffs.len() == 1 {
            return o.scale(&self.coeffs[0]);
        }
        if o.coeffs.len() == 1 {
            return self.scale(&o.coeffs[0]);
        }
        let mut out = vec![Cyclo::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (k, b) in o.coeffs.iter().enumerate() {
                out[i + k] += &(a * b);
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, o: QPoly) -> QPoly {
        &self * &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_coeffs(cs.iter().map(|&c| Cyclo::from_int(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (q^2 - 1) = (q - 1)(q + 1)
        let (quo, rem) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1]));
        assert_eq!(quo, p(&[1, 1]));
        assert!(rem.is_zero());
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[2, 2])), p(&[1, 1]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[-1, 1])), QPoly::one());
    }

    #[test]
    fn gcd_over_cyclotomic_coefficients() {
        // (q - j)(q + 2) and (q - j) q
        let qmj = QPoly::from_coeffs(vec![-Cyclo::j(), Cyclo::one()]);
        let a = &qmj * &p(&[2, 1]);
        let b = &qmj * &QPoly::q();
        assert_eq!(a.gcd(&b), qmj);
    }
}
