//! Property-based invariants: ring axioms of the Laurent-scalar
//! coefficients, polynomial shift/decomposition laws, bracket structure,
//! action parity, and parser/renderer round-trips.

use hvsuper::algebra::{bracket_basis, generators_in_window, Parity};
use hvsuper::expr::{self, Value};
use hvsuper::omega::{act, OmegaParams, SuperVector};
use hvsuper::poly::{BiPoly, UniPoly};
use hvsuper::scalar::{Rat, Scalar};
use num_traits::Zero;
use proptest::prelude::*;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn arb_nonzero_rat() -> impl Strategy<Value = Rat> {
    arb_rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec(((-4i64..=4), arb_rat()), 0..4).prop_map(|ts| {
        ts.into_iter().fold(Scalar::zero(), |acc, (k, c)| {
            &acc + &Scalar::monomial(k, c)
        })
    })
}

fn arb_unipoly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(((0u32..4), arb_scalar()), 0..4).prop_map(|ts| {
        ts.into_iter()
            .fold(UniPoly::zero(), |acc, (d, c)| &acc + &UniPoly::term(d, c))
    })
}

fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0u32..4), (0u32..4), arb_scalar()), 0..5).prop_map(|ts| {
        ts.into_iter().fold(BiPoly::zero(), |acc, (i, j, c)| {
            &acc + &BiPoly::term(i, j, c)
        })
    })
}

fn arb_monic() -> impl Strategy<Value = UniPoly> {
    (1u32..3, prop::collection::vec(arb_rat(), 3)).prop_map(|(deg, cs)| {
        let mut g = UniPoly::term(deg, Scalar::one());
        for (d, c) in cs.into_iter().take(deg as usize).enumerate() {
            g = &g + &UniPoly::term(d as u32, Scalar::from_rat(c));
        }
        g
    })
}

proptest! {
    /// Scalars form a commutative ring: associativity and distributivity.
    #[test]
    fn scalar_ring_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    /// Evaluation at a nonzero rational is a ring homomorphism.
    #[test]
    fn scalar_eval_homomorphism(a in arb_scalar(), b in arb_scalar(), t in arb_nonzero_rat()) {
        let ev = |s: &Scalar| s.eval(&t).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
    }

    /// Canonical form is stable: a + 0 and a·1 re-normalize to a itself.
    #[test]
    fn scalar_canonical_idempotent(a in arb_scalar()) {
        prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        prop_assert_eq!(&a * &Scalar::one(), a);
    }

    /// Shifts in the first variable compose additively.
    #[test]
    fn shift_u_composes(f in arb_bipoly(), a in arb_rat(), b in arb_rat()) {
        prop_assert_eq!(f.shift_u(&a).shift_u(&b), f.shift_u(&(&a + &b)));
        prop_assert_eq!(f.shift_u(&Rat::zero()), f);
    }

    /// The u-coefficient decomposition reconstructs the polynomial.
    #[test]
    fn u_coefficients_reconstruct(f in arb_bipoly()) {
        let coeffs = f.u_coefficients();
        let rebuilt = BiPoly::from_u_coefficients(&coeffs);
        prop_assert_eq!(rebuilt, f);
    }

    /// Exact division and remainder agree: g | f iff rem_v(f, g) = 0, and
    /// the division witness satisfies f = g·q + r.
    #[test]
    fn division_consistency(f in arb_bipoly(), g in arb_monic()) {
        let divides = f.divisible_v(&g).unwrap();
        let r = f.rem_v(&g).unwrap();
        prop_assert_eq!(divides, r.is_zero());
        if let Some(q) = f.div_v_exact(&g).unwrap() {
            prop_assert_eq!(&q * &g.to_bipoly_v(), f);
        }
    }

    /// A bracket of basis elements is a scalar multiple of one basis
    /// element (no central terms), and super-antisymmetry holds.
    #[test]
    fn bracket_structure(ai in 0usize..26, bi in 0usize..26) {
        let gens = generators_in_window(6);
        let (a, b) = (&gens[ai], &gens[bi]);
        let ab = bracket_basis(a, b);
        prop_assert!(ab.len() <= 1);
        let ba = bracket_basis(b, a);
        let flip = a.parity() == Parity::Odd && b.parity() == Parity::Odd;
        let residual = if flip { &ab - &ba } else { &ab + &ba };
        prop_assert!(residual.is_zero());
    }

    /// Even generators preserve the two components; odd generators swap
    /// them.
    #[test]
    fn action_parity(gi in 0usize..26, f in arb_bipoly(), beta in arb_unipoly()) {
        prop_assume!(beta.is_lambda_free());
        let p = OmegaParams::new(beta).unwrap();
        let gens = generators_in_window(6);
        let g = &gens[gi];
        let from_even = act(g, &SuperVector::even(f.clone()), &p);
        let from_odd = act(g, &SuperVector::odd(f), &p);
        match g.parity() {
            Parity::Even => {
                prop_assert!(from_even.odd.is_zero());
                prop_assert!(from_odd.even.is_zero());
            }
            Parity::Odd => {
                prop_assert!(from_even.even.is_zero());
                prop_assert!(from_odd.odd.is_zero());
            }
        }
    }

    /// parse ∘ render is the identity on scalars.
    #[test]
    fn round_trip_scalar(s in arb_scalar()) {
        let text = expr::render_value(&Value::Scalar(s.clone()), false);
        let back = expr::parse_value(&text).unwrap();
        prop_assert_eq!(back, Value::Scalar(s));
    }

    /// parse ∘ render is the identity on supervectors (up to the sector
    /// coercion of constants).
    #[test]
    fn round_trip_supervector(e in arb_bipoly(), o in arb_bipoly()) {
        let v = SuperVector::new(e, o);
        let text = expr::render_value(&Value::Super(v.clone()), false);
        let back = expr::parse_value(&text).unwrap().into_supervector().unwrap();
        prop_assert_eq!(back, v);
    }

    /// Rendering in unicode mode round-trips too.
    #[test]
    fn round_trip_unicode(s in arb_scalar()) {
        let text = expr::render_value(&Value::Scalar(s.clone()), true);
        let back = expr::parse_value(&text).unwrap();
        prop_assert_eq!(back, Value::Scalar(s));
    }

    /// The parser never panics, whatever the input.
    #[test]
    fn parser_never_panics(src in "\\PC*") {
        let _ = expr::parse_value(&src);
    }

    /// Token-soup inputs (likelier to reach deep parser states) never
    /// panic either.
    #[test]
    fn parser_never_panics_token_soup(parts in prop::collection::vec(
        prop::sample::select(vec![
            "L", "H", "G", "Q", "[", "]", "(", ")", "^", "*", "+", "-", "/",
            "x", "y", "s", "t", "even", "odd", ":", "|", ",", "1", "2", "1/2",
            "3/2", " ", "λ",
        ]),
        0..16,
    )) {
        let src = parts.concat();
        let _ = expr::parse_value(&src);
    }
}
