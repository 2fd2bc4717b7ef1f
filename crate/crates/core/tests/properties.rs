use proptest::prelude::*;

use z3calc_core::calculus::apply_d;
use z3calc_core::expr::{parse_poly, parse_scalar};
use z3calc_core::format::poly_text;
use z3calc_core::names::*;
use z3calc_core::presets;
use z3calc_core::{Poly, Scalar, Sym};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, -4i64..=4, -3i64..=3, 0i64..=3, -2i64..=2).prop_map(|(a, b, c, d, e)| {
        let num = Scalar::from_int(a) + Scalar::from_int(b) * Scalar::j() + Scalar::from_int(c) * Scalar::q();
        let den = Scalar::q_pow(d) + Scalar::from_int(e) * Scalar::j();
        (&num / &den).unwrap()
    })
}

fn word(gens: &'static [&'static str], max_len: usize) -> impl Strategy<Value = Vec<Sym>> {
    prop::collection::vec(prop::sample::select(gens), 1..=max_len)
        .prop_map(|w| w.into_iter().map(Sym::new).collect())
}

fn poly(gens: &'static [&'static str], max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((word(gens, max_len), -5i64..=5), 1..=4).prop_map(|terms| {
        let mut p = Poly::zero();
        for (w, c) in terms {
            p.add_term(w, Scalar::from_int(c) * Scalar::j_pow(c));
        }
        p
    })
}

const CALCULUS: &[&str] = &[H, X, TH, DX, DTH, D2X, D2TH];
const ENTRIES: &[&str] = &[H, A, B, G, DT];

/// Every word of `p` contains h at least twice.
fn in_h2_sector(p: &Poly) -> bool {
    p.terms()
        .all(|(w, _)| w.iter().filter(|s| s.name() == H).count() >= 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Scalar::from_int(0));
        if a != Scalar::from_int(0) {
            prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::from_int(1));
        }
    }

    #[test]
    fn scalar_print_parse_round_trip(a in scalar()) {
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(p in poly(CALCULUS, 5), r in poly(CALCULUS, 5), c in scalar()) {
        let pres = presets::qjh_calculus().unwrap();
        let nf = |x: &Poly| pres.normal_form(x).unwrap();
        let np = nf(&p);
        prop_assert_eq!(nf(&np), np.clone());
        prop_assert_eq!(nf(&(&p + &r.scale(&c))), &np + &nf(&r).scale(&c));
    }

    #[test]
    fn normal_form_preserves_grade(w in word(ENTRIES, 5)) {
        let pres = presets::build("glhj").unwrap();
        let g = pres.alphabet.word_grade(&w).unwrap();
        let nf = pres.normal_form(&Poly::word(w)).unwrap();
        for (v, _) in nf.terms() {
            prop_assert_eq!(pres.alphabet.word_grade(v).unwrap(), g);
        }
    }

    #[test]
    fn print_parse_round_trip_of_normal_forms(p in poly(CALCULUS, 4)) {
        let pres = presets::qjh_calculus().unwrap();
        let nf = pres.normal_form(&p).unwrap();
        let text = poly_text(&nf, Some(&pres.order), false);
        prop_assert_eq!(parse_poly(&text, Some(&pres.alphabet)).unwrap(), nf);
    }

    #[test]
    fn d_cubed_leaves_only_h2_residues(p in poly(CALCULUS, 5)) {
        let pres = presets::qjh_calculus().unwrap();
        let d = |x: &Poly| apply_d(x, &pres).unwrap();
        let d3 = d(&d(&d(&p)));
        prop_assert!(in_h2_sector(&d3), "{}", d3);
    }

    #[test]
    fn d_commutes_with_normal_form_up_to_h2(p in poly(CALCULUS, 4)) {
        let pres = presets::qjh_calculus().unwrap();
        let nf = pres.normal_form(&p).unwrap();
        let diff = apply_d(&p, &pres).unwrap() - apply_d(&nf, &pres).unwrap();
        prop_assert!(in_h2_sector(&diff), "{}", diff);
    }
}
