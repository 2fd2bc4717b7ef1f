//! Replays the contraction from the q-superplane calculus to the (q,j,h)
//! calculus: the coefficient equations and the change of generators.

use num_traits::Zero;

use crate::error::Result;
use crate::expr::parse_poly;
use crate::freealg::{GradedHom, Poly};
use crate::report::Report;
use crate::scalar::Scalar;

/// Coefficients of the ansatz relating coordinates and differentials on the
/// q-superplane: x dx = A dx x, x dθ = F11 dθ x + F12 dx θ,
/// θ dx = F21 dx θ + F22 dθ x, θ dθ = B dθ θ, and dx dθ = F dθ dx.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionCoefficients {
    pub a: Scalar,
    pub b: Scalar,
    pub f11: Scalar,
    pub f12: Scalar,
    pub f21: Scalar,
    pub f22: Scalar,
    pub f: Scalar,
}

fn s(src: &str) -> Scalar {
    src.parse().expect("valid scalar literal")
}

impl ContractionCoefficients {
    pub fn solved() -> Self {
        ContractionCoefficients {
            a: s("j^2"),
            b: s("j"),
            f11: s("q"),
            f12: s("j^2 - 1"),
            f21: s("j*q^-1"),
            f22: Scalar::zero(),
            f: s("q*j"),
        }
    }

    pub fn k1(&self) -> Scalar {
        let (j2, q) = (s("j^2"), Scalar::q());
        &(&(&self.b * &j2) * &q) - &(&(&(&self.f22 * &j2) * &q) + &self.f11)
    }

    pub fn k2(&self) -> Scalar {
        let (j, j2, q) = (Scalar::j(), s("j^2"), Scalar::q());
        &(&self.b * &j) - &(&(&(&self.f21 * &j2) * &q) + &self.f12)
    }

    pub fn k3(&self) -> Scalar {
        let (j, j2, q) = (Scalar::j(), s("j^2"), Scalar::q());
        let plus = &(&self.b * &j2) + &(&(&self.a * &j2) * &q);
        let minus = &(&(&self.f21 * &q) + &(&self.f22 * &q))
            + &(&(&self.f11 * &j) + &(&self.f12 * &j));
        &plus - &minus
    }
}

fn record_eq(report: &mut Report, name: &str, got: Scalar, want: Scalar) {
    let diff = &got - &want;
    report.record(
        name,
        (!diff.is_zero()).then(|| format!("got {got}, expected {want}")),
    );
}

/// Coefficient identities, the root condition on B, and the substitution of
/// θ' = θ + h/(q−1) x (and its differentials) into the ansatz, reduced in
/// the (q,j,h) calculus.
pub fn verify_contraction() -> Result<Report> {
    let mut report = Report::new("contraction");
    let c = ContractionCoefficients::solved();
    let (j, q) = (Scalar::j(), Scalar::q());
    let one = s("1");
    let inv_qm1 = s("1/(q - 1)");

    record_eq(&mut report, "F11 = q(1 + j F22)", c.f11.clone(), &q * &(&one + &(&j * &c.f22)));
    record_eq(&mut report, "F12 = qj F21 - 1", c.f12.clone(), &(&(&q * &j) * &c.f21) - &one);
    record_eq(&mut report, "K1 = 0", c.k1(), Scalar::zero());
    record_eq(&mut report, "K2 = 0", c.k2(), Scalar::zero());
    record_eq(&mut report, "K3 = 0", c.k3(), Scalar::zero());
    for (label, b) in [("B = j", c.b.clone()), ("B = 1", one.clone())] {
        let root = &(&one + &(&j * &b)) + &(&s("j^2") * &(&b * &b));
        record_eq(&mut report, &format!("1 + jB + j^2B^2 = 0 for {label}"), root, Scalar::zero());
    }
    let xdth_h = &inv_qm1 * &(&(&(&c.f11 * &j) + &(&c.f12 * &j)) - &(&c.a * &j));
    record_eq(&mut report, "h dx x coefficient of x dθ is j", xdth_h, j.clone());
    let thdx_h = &inv_qm1 * &(&(&(&c.f21 * &j) + &(&c.f22 * &j)) - &c.a);
    record_eq(&mut report, "h dx x coefficient of θ dx is -j^2/q", thdx_h, s("-j^2*q^-1"));
    let from_d = &(&(&(&q * &j) * &inv_qm1) * &(&(&(&c.f21 * &j) + &(&c.f22 * &j)) - &c.a))
        + &(&j * &(&c.a + &one));
    record_eq(&mut report, "d of the plane relation gives h dx x coefficient j", from_d, j.clone());
    let fj = &c.f * &j;
    record_eq(&mut report, "dθ dx term vanishes at F = qj", &(&q * &s("j^2")) - &fj, Scalar::zero());
    let dxdx = &(&inv_qm1 * &(&one - &(&c.f * &s("j^2")))) + &one;
    record_eq(&mut report, "dx dx term vanishes at F = qj", dxdx, Scalar::zero());
    record_eq(
        &mut report,
        "h dx dx coefficient of dx dθ is j^2",
        &inv_qm1 * &(&fj - &s("j^2")),
        s("j^2"),
    );

    let pres = super::qjh_calculus()?;
    let alphabet = &pres.alphabet;
    let prime = GradedHom::new()
        .with("x", parse_poly("x", Some(alphabet))?)
        .with("th", parse_poly("th + 1/(q - 1)*h*x", Some(alphabet))?)
        .with("dx", parse_poly("dx", Some(alphabet))?)
        .with("dth", parse_poly("dth + j/(q - 1)*h*dx", Some(alphabet))?)
        .with("d2x", parse_poly("d2x", Some(alphabet))?)
        .with("d2th", parse_poly("d2th + j^2/(q - 1)*h*d2x", Some(alphabet))?)
        .with("h", parse_poly("h", Some(alphabet))?);
    let coeff = |x: &Scalar| Poly::constant(x.clone());
    let w = |src: &str| parse_poly(src, Some(alphabet)).expect("ansatz word parses");
    let ansatz: [(&str, Poly); 5] = [
        ("x dx = A dx x", &w("x*dx") - &(&coeff(&c.a) * &w("dx*x"))),
        (
            "x dθ = F11 dθ x + F12 dx θ",
            &(&w("x*dth") - &(&coeff(&c.f11) * &w("dth*x"))) - &(&coeff(&c.f12) * &w("dx*th")),
        ),
        (
            "θ dx = F21 dx θ + F22 dθ x",
            &(&w("th*dx") - &(&coeff(&c.f21) * &w("dx*th"))) - &(&coeff(&c.f22) * &w("dth*x")),
        ),
        ("θ dθ = B dθ θ", &w("th*dth") - &(&coeff(&c.b) * &w("dth*th"))),
        ("dx dθ = F dθ dx", &w("dx*dth") - &(&coeff(&c.f) * &w("dth*dx"))),
    ];
    for (label, rel) in ansatz {
        let out = pres.normal_form(&prime.apply(&rel)?)?;
        report.record(
            format!("substituted {label} reduces to 0"),
            (!out.is_zero()).then(|| crate::format::poly_text(&out, Some(&pres.order), false)),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_expands_to_q_minus_q() {
        let c = ContractionCoefficients::solved();
        assert!(c.k1().is_zero());
        let bj2q = &(&c.b * &s("j^2")) * &Scalar::q();
        assert_eq!(bj2q, Scalar::q());
    }
}
