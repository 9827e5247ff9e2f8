//! The weighting functor: quotients of `Ω′(λ,β)` (the rank-2 module read
//! as polynomials in `(L₀,H₀)`) by the maximal ideals generated by
//! `L₀+n+ε+α₁` and `H₀+α₂`, the intermediate-series modules `A(a,b,c)`,
//! and the isomorphism `𝒲(Ω′(λ,β)) ≅ A(β(−α₂)−1, −α₂, −α₁−ε)` after the
//! rescaling `v̂_n⁺ = λⁿ v_n⁺`, `v̂_q⁻ = λ^{q−½} v_q⁻`.

use crate::algebra::{generators_in_window, AlgebraElement, GenKind, Generator, Parity};
use crate::omega::{act, OmegaParams, SuperVector};
use crate::poly::BiPoly;
use crate::scalar::{HalfInt, Rat, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("lattice point is not on the ℤ+ε lattice")]
    LatticeMismatch,
    #[error("epsilon must be 0 or 1/2")]
    BadEpsilon,
    #[error("+ vectors carry integer indices, − vectors strict half-integer indices")]
    SignIndexMismatch,
}

/// Parameters of the weighting construction: the shift `α = (α₁,α₂)` and
/// the lattice offset `ε ∈ {0, ½}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightParams {
    pub alpha1: Rat,
    pub alpha2: Rat,
    epsilon: HalfInt,
}

impl WeightParams {
    pub fn new(alpha1: Rat, alpha2: Rat, epsilon: HalfInt) -> Result<Self, WeightError> {
        if !epsilon.is_zero() && epsilon != HalfInt::from_doubled(1) {
            return Err(WeightError::BadEpsilon);
        }
        Ok(WeightParams {
            alpha1,
            alpha2,
            epsilon,
        })
    }

    pub fn epsilon(&self) -> &HalfInt {
        &self.epsilon
    }
}

/// Parameters of an intermediate-series module `A(a,b,c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AModuleParams {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

/// `A(a,b,c)` is reducible exactly for `(a,b) = (−1,0)` with `c ∈ ℤ` or
/// `(a,b) = (−½,0)` with `c ∈ ℤ+½`.
pub fn a_is_reducible(q: &AModuleParams) -> bool {
    if !q.b.is_zero() {
        return false;
    }
    let half_lattice = (&q.c + &Rat::new(1.into(), 2.into())).is_integer();
    (q.a == -Rat::one() && q.c.is_integer())
        || (q.a == -Rat::new(1.into(), 2.into()) && half_lattice)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn admits(&self, index: &HalfInt) -> bool {
        match self {
            Sign::Plus => index.is_integer(),
            Sign::Minus => index.is_strict_half(),
        }
    }
}

/// Finite linear combination of the basis vectors `v_n⁺` (integer `n`) and
/// `v_q⁻` (strict half-integer `q`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightVector {
    terms: BTreeMap<(Sign, HalfInt), Scalar>,
}

impl WeightVector {
    pub fn zero() -> Self {
        WeightVector::default()
    }

    pub fn basis(sign: Sign, index: HalfInt) -> Result<Self, WeightError> {
        WeightVector::term(sign, index, Scalar::one())
    }

    pub fn term(sign: Sign, index: HalfInt, coef: Scalar) -> Result<Self, WeightError> {
        if !sign.admits(&index) {
            return Err(WeightError::SignIndexMismatch);
        }
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert((sign, index), coef);
        }
        Ok(WeightVector { terms })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Sign, HalfInt), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, sign: Sign, index: &HalfInt) -> Scalar {
        self.terms
            .get(&(sign, index.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> WeightVector {
        if c.is_zero() {
            return WeightVector::zero();
        }
        WeightVector {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Multiply each term by a λ-power depending on its basis vector:
    /// `λ^k` with `k = n` on `v_n⁺` and `k = q − ½` on `v_q⁻`. Used for
    /// the hat-basis rescaling.
    pub fn rescale(&self, scale: impl Fn(Sign, &HalfInt) -> BigInt) -> WeightVector {
        WeightVector {
            terms: self
                .terms
                .iter()
                .map(|((s, i), c)| ((*s, i.clone()), c.shift_lambda(&scale(*s, i))))
                .collect(),
        }
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        let mut terms = self.terms.clone();
        for (k, v) in &rhs.terms {
            let entry = terms.entry(k.clone()).or_insert_with(Scalar::zero);
            *entry = &*entry + v;
        }
        terms.retain(|_, v| !v.is_zero());
        WeightVector { terms }
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        self + &(-rhs)
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

fn eval_at_point(f: &BiPoly, point: &Rat, w: &WeightParams) -> Scalar {
    let l0 = -(point + &w.alpha1);
    let h0 = -&w.alpha2;
    f.eval_v(&h0).eval_rat(&l0)
}

/// Residue of `f(L₀,H₀)` modulo the maximal ideal at lattice point
/// `n_eps`: evaluate at `L₀ := −(n_eps+α₁)`, `H₀ := −α₂`.
pub fn weight_reduce(f: &BiPoly, n_eps: &HalfInt, w: &WeightParams) -> Result<Scalar, WeightError> {
    if (&-w.epsilon() + n_eps).is_strict_half() {
        return Err(WeightError::LatticeMismatch);
    }
    Ok(eval_at_point(f, &n_eps.to_rat(), w))
}

/// Act by a single generator on a basis vector of `𝒲(Ω′(λ,β))`: apply the
/// rank-2 module action to the generator `1_0̄` or `1_1̄` and reduce each
/// component at its shifted lattice point. The even family lives on
/// `ℤ+ε`, the odd family on `ℤ+ε+½`.
pub fn weighted_act(
    g: &Generator,
    sign: Sign,
    index: &HalfInt,
    w: &WeightParams,
    p: &OmegaParams,
) -> Result<WeightVector, WeightError> {
    if !sign.admits(index) {
        return Err(WeightError::SignIndexMismatch);
    }
    let one = match sign {
        Sign::Plus => SuperVector::even(BiPoly::one()),
        Sign::Minus => SuperVector::odd(BiPoly::one()),
    };
    let out = act(g, &one, p);
    let out_index = index + g.index();
    let mut result = WeightVector::zero();
    for (component, out_sign) in [(&out.even, Sign::Plus), (&out.odd, Sign::Minus)] {
        if component.is_zero() {
            continue;
        }
        debug_assert!(out_sign.admits(&out_index));
        let point = &out_index.to_rat() + &w.epsilon().to_rat();
        let coef = eval_at_point(component, &point, w);
        result = &result + &WeightVector::term(out_sign, out_index.clone(), coef)?;
    }
    Ok(result)
}

/// Linear extension of [`weighted_act`] to algebra elements and vectors.
pub fn weighted_act_elem(
    e: &AlgebraElement,
    v: &WeightVector,
    w: &WeightParams,
    p: &OmegaParams,
) -> Result<WeightVector, WeightError> {
    let mut out = WeightVector::zero();
    for (g, c) in e.iter() {
        for ((sign, index), vc) in v.iter() {
            let img = weighted_act(g, *sign, index, w, p)?;
            out = &out + &img.scale(&(c * vc));
        }
    }
    Ok(out)
}

/// The `A(a,b,c)` action table, extended linearly. Every basis vector maps
/// to a rational multiple of a single basis vector.
pub fn a_module_act(g: &Generator, v: &WeightVector, q: &AModuleParams) -> WeightVector {
    let half = Rat::new(1.into(), 2.into());
    let two = Rat::from_integer(2.into());
    let mut out = WeightVector::zero();
    for ((sign, index), vc) in v.iter() {
        let idx = index.to_rat();
        let gi = g.index().to_rat();
        let new_index = index + g.index();
        let (coef, new_sign) = match (g.kind(), *sign) {
            (GenKind::L, s) => {
                let slope = match s {
                    Sign::Plus => q.a.clone(),
                    Sign::Minus => &q.a + &half,
                };
                (&(&q.c - &idx) + &(&gi * &slope), s)
            }
            (GenKind::H, s) => (q.b.clone(), s),
            (GenKind::G, Sign::Minus) => (
                &(&q.c - &idx) + &(&(&two * &gi) * &(&q.a + &half)),
                Sign::Plus,
            ),
            (GenKind::G, Sign::Plus) => (Rat::one(), Sign::Minus),
            (GenKind::Q, Sign::Minus) => (q.b.clone(), Sign::Plus),
            (GenKind::Q, Sign::Plus) => (Rat::zero(), Sign::Minus),
        };
        let term = WeightVector::term(new_sign, new_index, Scalar::from_rat(coef))
            .expect("parity of index shift matches sign flip");
        out = &out + &term.scale(vc);
    }
    out
}

/// The `A(a,b,c)` parameters matched by `𝒲(Ω′(λ,β))` at `(α, ε)`:
/// `a = β(−α₂)−1`, `b = −α₂`, `c = −α₁−ε`.
pub fn matched_a_params(w: &WeightParams, p: &OmegaParams) -> AModuleParams {
    let b = -&w.alpha2;
    let beta_at = p
        .beta()
        .eval_rat(&b)
        .as_rat()
        .expect("β is λ-free");
    AModuleParams {
        a: &beta_at - &Rat::one(),
        b,
        c: &-&w.alpha1 - &w.epsilon().to_rat(),
    }
}

fn hat_scale(sign: Sign, index: &HalfInt) -> BigInt {
    // v̂_n⁺ = λⁿ v_n⁺, v̂_q⁻ = λ^{q−½} v_q⁻
    match sign {
        Sign::Plus => index.doubled() / 2,
        Sign::Minus => (index.doubled() - BigInt::one()) / 2,
    }
}

/// Rescale the image of `v_(sign,index)` under `weighted_act` to the hat
/// basis: multiply by `λ^{scale(in) − scale(out)}` termwise.
pub fn hat_rescaled(v: &WeightVector, sign: Sign, index: &HalfInt) -> WeightVector {
    let in_scale = hat_scale(sign, index);
    v.rescale(|s, i| &in_scale - hat_scale(s, i))
}

/// Exact check of the isomorphism `𝒲(Ω′(λ,β)) ≅ A(β(−α₂)−1, −α₂, −α₁−ε)`
/// over all generators and basis indices with doubled values in
/// `[-window, window]`. Also insists the rescaled coefficients are λ-free.
pub fn verify_theorem64(w: &WeightParams, p: &OmegaParams, window: i64) -> bool {
    let q = matched_a_params(w, p);
    let basis: Vec<(Sign, HalfInt)> = (-window..=window)
        .map(|d| {
            let idx = HalfInt::from_doubled(d);
            let sign = if idx.is_integer() { Sign::Plus } else { Sign::Minus };
            (sign, idx)
        })
        .collect();
    for g in generators_in_window(window) {
        for (sign, index) in &basis {
            let Ok(raw) = weighted_act(&g, *sign, index, w, p) else {
                return false;
            };
            let lhs = hat_rescaled(&raw, *sign, index);
            if lhs.iter().any(|(_, c)| !c.is_rational()) {
                return false;
            }
            let v = WeightVector::basis(*sign, index.clone()).expect("lattice-matched");
            if lhs != a_module_act(&g, &v, &q) {
                return false;
            }
        }
    }
    true
}

/// Sampled functoriality check: the weighted action respects brackets,
/// `[X,Y]·v = X·(Y·v) − (−1)^{|X||Y|} Y·(X·v)`.
pub fn verify_weighted_brackets(w: &WeightParams, p: &OmegaParams, window: i64) -> bool {
    let gens = generators_in_window(window);
    let basis: Vec<WeightVector> = (-window..=window)
        .map(|d| {
            let idx = HalfInt::from_doubled(d);
            let sign = if idx.is_integer() { Sign::Plus } else { Sign::Minus };
            WeightVector::basis(sign, idx).expect("lattice-matched")
        })
        .collect();
    for x in &gens {
        for y in &gens {
            let br = crate::algebra::bracket_basis(x, y);
            for v in &basis {
                let Ok(yv) = weighted_act_elem(&AlgebraElement::basis(y.clone()), v, w, p)
                else {
                    return false;
                };
                let Ok(xyv) = weighted_act_elem(&AlgebraElement::basis(x.clone()), &yv, w, p)
                else {
                    return false;
                };
                let Ok(xv) = weighted_act_elem(&AlgebraElement::basis(x.clone()), v, w, p)
                else {
                    return false;
                };
                let Ok(yxv) = weighted_act_elem(&AlgebraElement::basis(y.clone()), &xv, w, p)
                else {
                    return false;
                };
                let Ok(brv) = weighted_act_elem(&br, v, w, p) else {
                    return false;
                };
                let sign_flip = x.parity() == Parity::Odd && y.parity() == Parity::Odd;
                let commutator = if sign_flip { &xyv + &yxv } else { &xyv - &yxv };
                if brv != commutator {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::UniPoly;
    use crate::sample;
    use crate::scalar::{rat, rint};

    fn wp(a1: i64, a2: i64) -> WeightParams {
        WeightParams::new(rint(a1), rint(a2), HalfInt::zero()).unwrap()
    }

    fn beta_y() -> OmegaParams {
        OmegaParams::new(UniPoly::var()).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let u = BiPoly::var_u();
        let v = BiPoly::var_v();
        assert_eq!(
            weight_reduce(&u, &HalfInt::zero(), &wp(0, 0)).unwrap(),
            Scalar::zero()
        );
        assert_eq!(
            weight_reduce(&v, &HalfInt::zero(), &wp(0, 3)).unwrap(),
            Scalar::from_int(-3)
        );
        assert_eq!(
            weight_reduce(&(&u * &v), &HalfInt::from_int(1), &wp(1, 2)).unwrap(),
            Scalar::from_int(4)
        );
        assert_eq!(
            weight_reduce(&u, &HalfInt::from_doubled(1), &wp(0, 0)),
            Err(WeightError::LatticeMismatch)
        );
        // ε=½ shifts the admitted lattice
        let whalf = WeightParams::new(rint(0), rint(0), HalfInt::from_doubled(1)).unwrap();
        assert!(weight_reduce(&u, &HalfInt::from_doubled(1), &whalf).is_ok());
        assert!(weight_reduce(&u, &HalfInt::zero(), &whalf).is_err());
    }

    #[test]
    fn bad_epsilon_rejected() {
        assert_eq!(
            WeightParams::new(rint(0), rint(0), HalfInt::from_int(1)),
            Err(WeightError::BadEpsilon)
        );
        assert_eq!(
            WeightParams::new(rint(0), rint(0), HalfInt::from_doubled(3)),
            Err(WeightError::BadEpsilon)
        );
    }

    #[test]
    fn weighted_act_examples() {
        let w = wp(0, 0);
        let p = beta_y();
        // L_m v_n⁺ = λᵐ(−α₁−n+m(β(−α₂)−1)) v_{n+m}⁺; here β(0)=0 → −3+2·(−1)
        let out = weighted_act(
            &Generator::even(GenKind::L, 2),
            Sign::Plus,
            &HalfInt::from_int(3),
            &w,
            &p,
        )
        .unwrap();
        assert_eq!(
            out.coeff(Sign::Plus, &HalfInt::from_int(5)),
            Scalar::monomial(2, rint(-5))
        );

        // H_m v_q⁻ = −α₂ λᵐ v_{q+m}⁻
        let w2 = wp(1, 2);
        let out = weighted_act(
            &Generator::even(GenKind::H, 1),
            Sign::Minus,
            &HalfInt::from_doubled(1),
            &w2,
            &p,
        )
        .unwrap();
        assert_eq!(
            out.coeff(Sign::Minus, &HalfInt::from_doubled(3)),
            Scalar::monomial(1, rint(-2))
        );

        // Q_p v_n⁺ = 0
        let out = weighted_act(
            &Generator::odd(GenKind::Q, 1),
            Sign::Plus,
            &HalfInt::zero(),
            &w,
            &p,
        )
        .unwrap();
        assert!(out.is_zero());

        // lattice mismatch
        assert_eq!(
            weighted_act(
                &Generator::even(GenKind::L, 0),
                Sign::Plus,
                &HalfInt::from_doubled(1),
                &w,
                &p
            ),
            Err(WeightError::SignIndexMismatch)
        );
    }

    #[test]
    fn a_module_examples() {
        let q = AModuleParams {
            a: rint(-1),
            b: rint(0),
            c: rint(0),
        };
        // L₂ v₁⁺ = (0−1+2·(−1)) v₃⁺ = −3 v₃⁺
        let v1 = WeightVector::basis(Sign::Plus, HalfInt::from_int(1)).unwrap();
        let out = a_module_act(&Generator::even(GenKind::L, 2), &v1, &q);
        assert_eq!(
            out.coeff(Sign::Plus, &HalfInt::from_int(3)),
            Scalar::from_int(-3)
        );

        // H₅ v_{1/2}⁻ = 0 when b=0
        let vh = WeightVector::basis(Sign::Minus, HalfInt::from_doubled(1)).unwrap();
        assert!(a_module_act(&Generator::even(GenKind::H, 5), &vh, &q).is_zero());

        // G_{1/2} v₀⁺ = v_{1/2}⁻
        let v0 = WeightVector::basis(Sign::Plus, HalfInt::zero()).unwrap();
        let out = a_module_act(&Generator::odd(GenKind::G, 1), &v0, &q);
        assert_eq!(
            out.coeff(Sign::Minus, &HalfInt::from_doubled(1)),
            Scalar::one()
        );

        // Q_p v_n⁺ = 0
        assert!(a_module_act(&Generator::odd(GenKind::Q, 3), &v0, &q).is_zero());
    }

    #[test]
    fn reducibility_table() {
        let p = |a: Rat, b: Rat, c: Rat| AModuleParams { a, b, c };
        assert!(a_is_reducible(&p(rint(-1), rint(0), rint(5))));
        assert!(a_is_reducible(&p(rat(-1, 2), rint(0), rat(3, 2))));
        assert!(!a_is_reducible(&p(rint(-1), rint(1), rint(0))));
        assert!(!a_is_reducible(&p(rint(-1), rint(0), rat(1, 2))));
        assert!(!a_is_reducible(&p(rat(-1, 2), rint(0), rint(1))));
    }

    #[test]
    fn theorem_isomorphism_examples() {
        // α=(0,0), β=y → A(−1, 0, 0)
        assert!(verify_theorem64(&wp(0, 0), &beta_y(), 4));
        // α=(1,2), β=y² → A(3, −2, −1)
        let beta2 = &UniPoly::var() * &UniPoly::var();
        let p2 = OmegaParams::new(beta2).unwrap();
        let q = matched_a_params(&wp(1, 2), &p2);
        assert_eq!(q.a, rint(3));
        assert_eq!(q.b, rint(-2));
        assert_eq!(q.c, rint(-1));
        assert!(verify_theorem64(&wp(1, 2), &p2, 4));
        // ε=½ lattice
        let whalf = WeightParams::new(rat(1, 3), rint(1), HalfInt::from_doubled(1)).unwrap();
        assert!(verify_theorem64(&whalf, &beta_y(), 4));
        // random parameters
        let mut rng = sample::rng_from_seed(31);
        for _ in 0..3 {
            let w = WeightParams::new(
                sample::rand_rat(&mut rng),
                sample::rand_rat(&mut rng),
                HalfInt::zero(),
            )
            .unwrap();
            let p = sample::rand_params(&mut rng, 3);
            assert!(verify_theorem64(&w, &p, 4));
        }
    }

    #[test]
    fn weighted_action_respects_brackets() {
        assert!(verify_weighted_brackets(&wp(1, 2), &beta_y(), 3));
        let whalf = WeightParams::new(rat(1, 2), rint(1), HalfInt::from_doubled(1)).unwrap();
        assert!(verify_weighted_brackets(&whalf, &beta_y(), 3));
    }

    #[test]
    fn index_shift_and_sign_flip() {
        let w = wp(1, 2);
        let p = beta_y();
        for g in generators_in_window(4) {
            for d in -4i64..=4 {
                let idx = HalfInt::from_doubled(d);
                let sign = if idx.is_integer() { Sign::Plus } else { Sign::Minus };
                let out = weighted_act(&g, sign, &idx, &w, &p).unwrap();
                for ((s, i), _) in out.iter() {
                    assert_eq!(i, &(&idx + g.index()));
                    let flipped = g.parity() == Parity::Odd;
                    assert_eq!(*s != sign, flipped);
                }
            }
        }
    }
}
