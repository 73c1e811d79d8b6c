//! Multivariate polynomials over a [`Field`](crate::scalar::Field), monomial
//! orders, ring maps and element-level Frobenius powers.

mod map;
mod monomial;
mod parse;
mod poly;

pub use map::{CoefficientAction, RingMap};
pub use monomial::{monomials_of_degree, Monomial, MonomialOrder};
pub use poly::{PolyRing, Polynomial, Ring, RingExt};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::scalar::Field;
    use proptest::prelude::*;

    fn ring(p: u64, params: &[&str], vars: &[&str]) -> Ring {
        PolyRing::new(Field::with_params(p, params.to_vec()).unwrap(), vars.to_vec(), MonomialOrder::GrevLex)
            .unwrap()
    }

    #[test]
    fn names_must_be_distinct() {
        let f = Field::with_params(2, ["u"]).unwrap();
        assert!(matches!(PolyRing::new(f.clone(), ["x", "x"], MonomialOrder::Lex), Err(Error::NameClash(_))));
        assert!(matches!(PolyRing::new(f, ["x", "u"], MonomialOrder::Lex), Err(Error::NameClash(_))));
    }

    #[test]
    fn mul_examples() {
        let r = ring(2, &[], &["x", "y"]);
        let f = r.parse("x+y").unwrap();
        assert_eq!(&f * &f, r.parse("x^2+y^2").unwrap());
        assert_eq!(&f * &r.one(), f);
        assert!((&f * &r.zero()).is_zero());

        let r = ring(2, &["u"], &["x", "y"]);
        let f = r.parse("x+u*y").unwrap();
        // expand: x^2 + 2uxy + u^2y^2, cross term vanishes in char 2
        assert_eq!(&f * &f, r.parse("x^2+u^2*y^2").unwrap());

        let other = ring(3, &[], &["x", "y"]);
        assert_eq!(f.try_mul(&other.var(0)), Err(Error::RingMismatch));
    }

    #[test]
    fn frobenius_power_examples() {
        let r = ring(2, &[], &["x", "y"]);
        assert_eq!(r.parse("x+y").unwrap().frobenius_power(1).unwrap(), r.parse("x^2+y^2").unwrap());
        for e in 0..4 {
            assert_eq!(r.var(0).frobenius_power(e).unwrap(), r.var(0).pow(1 << e));
        }
        let r = ring(2, &["u"], &["x", "y"]);
        let f = r.parse("x^2+u*y^2").unwrap();
        let expected = r.parse("x^4+u^2*y^4").unwrap();
        assert_eq!(f.frobenius_power(1).unwrap(), expected);
        assert_eq!(&f * &f, expected);
    }

    #[test]
    fn frobenius_overflow_is_an_error() {
        let r = ring(3, &[], &["x"]);
        assert_eq!(r.var(0).frobenius_power(40), Err(Error::ExponentOverflow));
    }

    #[test]
    fn parse_and_display() {
        let r = ring(2, &["u", "v"], &["x", "y", "z"]);
        let f = r.parse("v^-1").err();
        assert!(f.is_some());
        let f = r.parse("u^2/v^3*x^3*y + y*z").unwrap();
        assert_eq!(f.to_string(), "u^2/v^3*x^3*y + y*z");
        assert_eq!(r.parse(&f.to_string()).unwrap(), f);
        assert!(matches!(r.parse("x/y"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("w"), Err(Error::UnknownIdentifier(_))));
        assert!(matches!(r.parse("x/0"), Err(Error::DivisionByZero)));
        let r5 = ring(5, &[], &["x"]);
        assert_eq!(r5.parse("-x").unwrap(), r5.parse("4*x").unwrap());
        assert_eq!(r5.parse("x - 7").unwrap().to_string(), "x + 3");
    }

    #[test]
    fn derivative_in_char_two() {
        let r = ring(2, &[], &["x", "y", "z"]);
        let f = r.parse("x^2+y^3+z^5").unwrap();
        assert!(f.derivative(0).is_zero());
        assert_eq!(f.derivative(1), r.parse("y^2").unwrap());
        assert_eq!(f.derivative(2), r.parse("z^4").unwrap());
    }

    #[test]
    fn exact_division() {
        let r = ring(3, &[], &["x", "y"]);
        let g = r.parse("x+2*y").unwrap();
        let h = r.parse("x^2*y+y^3+1").unwrap();
        assert_eq!((&g * &h).exact_div(&g), Some(h));
        assert_eq!(r.parse("x").unwrap().exact_div(&r.parse("y").unwrap()), None);
    }

    #[test]
    fn ring_map_examples() {
        let src = ring(2, &[], &["X", "Y"]);
        let tgt = ring(2, &[], &["x", "y", "z"]);
        let map = RingMap::new(&src, &tgt, vec![tgt.parse("x*y").unwrap(), tgt.parse("z^2").unwrap()]).unwrap();
        assert_eq!(map.apply(&src.parse("X*Y").unwrap()).unwrap(), tgt.parse("x*y*z^2").unwrap());

        let line = ring(2, &[], &["x"]);
        let frob = RingMap::frobenius(&line, 1).unwrap();
        let f = line.parse("x+1").unwrap();
        assert_eq!(frob.apply(&f).unwrap(), f.frobenius_power(1).unwrap());

        assert!(matches!(map.apply(&tgt.var(0)), Err(Error::RingMismatch)));
        assert!(RingMap::new(&src, &tgt, vec![tgt.var(0)]).is_err());
    }

    #[test]
    fn veronese_relation_vanishes_before_reduction_in_monomials() {
        // a -> xy, b -> xz, c -> y^2, d -> yz: ad + bc = xy*yz + xz*y^2 = 2xy^2z = 0 in char 2
        let src = ring(2, &["u", "v"], &["a", "b", "c", "d", "e"]);
        let tgt = ring(2, &["u", "v"], &["x", "y", "z"]);
        let images = ["x*y", "x*z", "y^2", "y*z", "z^2"].iter().map(|s| tgt.parse(s).unwrap()).collect();
        let map = RingMap::new(&src, &tgt, images).unwrap();
        assert!(map.apply(&src.parse("a*d+b*c").unwrap()).unwrap().is_zero());
    }

    fn arb_poly(r: Ring, max_deg: u32) -> impl Strategy<Value = Polynomial> {
        let n = r.nvars();
        let p = r.field().characteristic();
        proptest::collection::vec((proptest::collection::vec(0..=max_deg, n), 0..p), 0..6).prop_map(
            move |terms| {
                let field = r.field().clone();
                Polynomial::from_terms(
                    &r,
                    terms
                        .into_iter()
                        .filter(|(e, _)| e.iter().sum::<u32>() <= max_deg)
                        .map(|(e, c)| (Monomial::new(e), field.from_int(c as i64)))
                        .collect(),
                )
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn frobenius_is_additive(f in arb_poly(ring(3, &[], &["x", "y", "z"]), 4),
                                 g in arb_poly(ring(3, &[], &["x", "y", "z"]), 4),
                                 e in 0u32..3) {
            let lhs = (&f + &g).frobenius_power(e).unwrap();
            let rhs = &f.frobenius_power(e).unwrap() + &g.frobenius_power(e).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn frobenius_matches_iteration_and_multiplication(f in arb_poly(ring(2, &[], &["x", "y", "z"]), 4), e in 0u32..3) {
            let direct = f.frobenius_power(e).unwrap();
            let mut iterated = f.clone();
            for _ in 0..e { iterated = iterated.frobenius_power(1).unwrap(); }
            prop_assert_eq!(&direct, &iterated);
            prop_assert_eq!(&direct, &f.pow(1 << e));
        }

        #[test]
        fn ring_maps_are_homomorphisms(f in arb_poly(ring(5, &[], &["a", "b"]), 3),
                                       g in arb_poly(ring(5, &[], &["a", "b"]), 3),
                                       h1 in arb_poly(ring(5, &[], &["x", "y", "z"]), 2),
                                       h2 in arb_poly(ring(5, &[], &["x", "y", "z"]), 2)) {
            let target = h1.ring().clone();
            let map = RingMap::new(f.ring(), &target, vec![h1, h2]).unwrap();
            let fg_sum = map.apply(&(&f + &g)).unwrap();
            prop_assert_eq!(fg_sum, &map.apply(&f).unwrap() + &map.apply(&g).unwrap());
            let fg_prod = map.apply(&(&f * &g)).unwrap();
            prop_assert_eq!(fg_prod, &map.apply(&f).unwrap() * &map.apply(&g).unwrap());
        }
    }
}
