//! Submodule lattice of `Ω(λ,β)`: the families `R_g` and `S_g`, membership
//! and randomized closure search, quotient modules `Φ(λ,β,b)`, the
//! `R_{g'}/R_g ≅ Φ(λ,β,b)` intertwiner check and composition series.

use crate::algebra::{generators_in_window, GenKind, Generator};
use crate::omega::{act, OmegaParams, SuperVector};
use crate::poly::{BiPoly, PolyError, UniPoly};
use crate::sample;
use crate::scalar::{Rat, Scalar};
use num_traits::Zero;
use rand_chacha::ChaCha8Rng;
use std::ops::{Add, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("g must be nonzero")]
    ZeroG,
    #[error("g must be monic")]
    NotMonic,
    #[error("g must have λ-free rational coefficients")]
    NotLambdaFree,
    #[error("composition series requires a nonempty root list")]
    EmptyRoots,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubmoduleKind {
    /// `R_g = g(y)ℂ[x,y] ⊕ g(t)ℂ[s,t]`
    R,
    /// `S_g = g(y)(xℂ[x,y]+yℂ[x,y]) ⊕ g(t)ℂ[s,t]`
    S,
}

/// One of the two submodule families, determined by a monic λ-free `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmoduleSpec {
    kind: SubmoduleKind,
    g: UniPoly,
}

impl SubmoduleSpec {
    pub fn new(kind: SubmoduleKind, g: UniPoly) -> Result<Self, StructureError> {
        if g.is_zero() {
            return Err(StructureError::ZeroG);
        }
        if !g.is_lambda_free() {
            return Err(StructureError::NotLambdaFree);
        }
        if !g.is_monic() {
            return Err(StructureError::NotMonic);
        }
        Ok(SubmoduleSpec { kind, g })
    }

    pub fn kind(&self) -> SubmoduleKind {
        self.kind
    }

    pub fn g(&self) -> &UniPoly {
        &self.g
    }

    /// Maximal submodules are exactly the `R_g` with `deg g = 1`.
    pub fn is_maximal(&self) -> bool {
        self.kind == SubmoduleKind::R && self.g.degree() == Some(1)
    }
}

/// Membership test. `S`-membership uses the constant-coefficient criterion:
/// the even quotient must have zero coefficient at `x⁰y⁰`.
pub fn member(v: &SuperVector, spec: &SubmoduleSpec) -> bool {
    let Ok(Some(even_q)) = v.even.div_v_exact(spec.g()) else {
        return false;
    };
    let Ok(Some(_)) = v.odd.div_v_exact(spec.g()) else {
        return false;
    };
    match spec.kind() {
        SubmoduleKind::R => true,
        SubmoduleKind::S => even_q.coeff(0, 0).is_zero(),
    }
}

/// A random element of the submodule, component degrees ≤ `max_deg`.
pub fn random_member(spec: &SubmoduleSpec, rng: &mut ChaCha8Rng, max_deg: u32) -> SuperVector {
    let gv = spec.g().to_bipoly_v();
    let odd = &gv * &sample::rand_bipoly(rng, max_deg);
    let even = match spec.kind() {
        SubmoduleKind::R => &gv * &sample::rand_bipoly(rng, max_deg),
        SubmoduleKind::S => {
            let a = sample::rand_bipoly(rng, max_deg);
            let b = sample::rand_bipoly(rng, max_deg);
            &gv * &(&(&BiPoly::var_u() * &a) + &(&BiPoly::var_v() * &b))
        }
    };
    SuperVector::new(even, odd)
}

/// Bounded randomized closure search. Returns the first `(generator,
/// member)` pair whose image leaves the submodule, or `None` when the
/// searched set is closed. The deterministic `(L₁, (g·x, 0))` candidate is
/// tried first: it is the witness the classification predicts for `S_g`
/// with `β(0) ≠ 0`.
pub fn closure_witness(
    spec: &SubmoduleSpec,
    p: &OmegaParams,
    window: i64,
    samples: usize,
    seed: u64,
) -> Option<(Generator, SuperVector)> {
    let gens = generators_in_window(window);
    let l1 = Generator::even(GenKind::L, 1);
    let det = SuperVector::new(
        &spec.g().to_bipoly_v() * &BiPoly::var_u(),
        BiPoly::zero(),
    );
    let mut candidates = vec![det];
    let mut rng = sample::rng_from_seed(seed);
    for _ in 0..samples {
        candidates.push(random_member(spec, &mut rng, 3));
    }
    for v in &candidates {
        if !member(&act(&l1, v, p), spec) {
            return Some((l1, v.clone()));
        }
        for gen in &gens {
            if !member(&act(gen, v, p), spec) {
                return Some((gen.clone(), v.clone()));
            }
        }
    }
    None
}

/// Parameters of the quotient `Φ(λ,β,b) = Ω(λ,β)/R_{y-b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiParams {
    pub beta: UniPoly,
    pub b: Rat,
}

impl PhiParams {
    pub fn new(beta: UniPoly, b: Rat) -> Result<Self, StructureError> {
        if !beta.is_lambda_free() {
            return Err(StructureError::NotLambdaFree);
        }
        Ok(PhiParams { beta, b })
    }

    /// `β(b)` as a rational.
    pub fn beta_at_b(&self) -> Rat {
        self.beta
            .eval_rat(&self.b)
            .as_rat()
            .expect("β is λ-free")
    }
}

/// Quotient vector: `ℂ[x] ⊕ ℂ[s]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PhiVector {
    pub even: UniPoly,
    pub odd: UniPoly,
}

impl PhiVector {
    pub fn zero() -> Self {
        PhiVector::default()
    }

    pub fn even(p: UniPoly) -> Self {
        PhiVector {
            even: p,
            odd: UniPoly::zero(),
        }
    }

    pub fn odd(p: UniPoly) -> Self {
        PhiVector {
            even: UniPoly::zero(),
            odd: p,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> PhiVector {
        PhiVector {
            even: self.even.scale(c),
            odd: self.odd.scale(c),
        }
    }
}

impl Add for &PhiVector {
    type Output = PhiVector;
    fn add(self, rhs: &PhiVector) -> PhiVector {
        PhiVector {
            even: &self.even + &rhs.even,
            odd: &self.odd + &rhs.odd,
        }
    }
}

impl Sub for &PhiVector {
    type Output = PhiVector;
    fn sub(self, rhs: &PhiVector) -> PhiVector {
        PhiVector {
            even: &self.even - &rhs.even,
            odd: &self.odd - &rhs.odd,
        }
    }
}

impl Neg for &PhiVector {
    type Output = PhiVector;
    fn neg(self) -> PhiVector {
        PhiVector {
            even: -&self.even,
            odd: -&self.odd,
        }
    }
}

fn lambda_exp_of(g: &Generator, half: i64) -> num_bigint::BigInt {
    (g.index().doubled() + half) / 2
}

/// Action on `Φ(λ,β,b)`: the one-variable specialization of the `Ω` action
/// with `y` and `t` frozen at `b`.
pub fn phi_act(g: &Generator, f: &PhiVector, q: &PhiParams) -> PhiVector {
    let idx = g.index().to_rat();
    let beta_b = q.beta_at_b();
    let half = Rat::new(1.into(), 2.into());
    match g.kind() {
        GenKind::L => {
            let lam = Scalar::lambda_pow(lambda_exp_of(g, 0));
            let even_mult = &UniPoly::var()
                + &UniPoly::constant(Scalar::from_rat(&idx * &beta_b));
            let odd_mult = &UniPoly::var()
                + &UniPoly::constant(Scalar::from_rat(&idx * &(&beta_b + &half)));
            PhiVector {
                even: (&even_mult * &f.even.shift(&idx)).scale(&lam),
                odd: (&odd_mult * &f.odd.shift(&idx)).scale(&lam),
            }
        }
        GenKind::H => {
            let lam = Scalar::lambda_pow(lambda_exp_of(g, 0));
            let c = Scalar::from_rat(q.b.clone());
            PhiVector {
                even: f.even.shift(&idx).scale(&(&lam * &c)),
                odd: f.odd.shift(&idx).scale(&(&lam * &c)),
            }
        }
        GenKind::G => {
            let lam_lo = Scalar::lambda_pow(lambda_exp_of(g, -1));
            let lam_hi = Scalar::lambda_pow(lambda_exp_of(g, 1));
            let two_p_beta = &idx * &Rat::from_integer(2.into()) * &beta_b;
            let mult = &UniPoly::var() + &UniPoly::constant(Scalar::from_rat(two_p_beta));
            PhiVector {
                even: (&mult * &f.odd.shift(&idx)).scale(&lam_hi),
                odd: f.even.shift(&idx).scale(&lam_lo),
            }
        }
        GenKind::Q => {
            let lam_hi = Scalar::lambda_pow(lambda_exp_of(g, 1));
            let c = Scalar::from_rat(q.b.clone());
            PhiVector {
                even: f.odd.shift(&idx).scale(&(&lam_hi * &c)),
                odd: UniPoly::zero(),
            }
        }
    }
}

/// `Φ(λ,β,b)` is irreducible iff `β(b) ≠ 0` or `b ≠ 0`.
pub fn phi_is_irreducible(q: &PhiParams) -> bool {
    !q.beta_at_b().is_zero() || !q.b.is_zero()
}

/// Quotient representative modulo `R_g`: componentwise remainder, leaving
/// `deg_v < deg g` in both components.
pub fn reduce_mod_r(v: &SuperVector, g: &UniPoly) -> Result<SuperVector, PolyError> {
    Ok(SuperVector::new(v.even.rem_v(g)?, v.odd.rem_v(g)?))
}

/// Embed a `Φ`-vector along `ψ: f(x) ↦ g'(y)f(x), f(s) ↦ g'(t)f(s)`.
pub fn psi_embed(f: &PhiVector, gprime: &UniPoly) -> SuperVector {
    let gv = gprime.to_bipoly_v();
    SuperVector::new(
        &gv * &f.even.to_bipoly_u(),
        &gv * &f.odd.to_bipoly_u(),
    )
}

/// Check that `ψ` intertwines the `Φ(λ,β,b)` action with the `Ω` action
/// modulo `R_g`, `g = (y-b)·g'`, on seeded random vectors.
pub fn lemma44_verify(
    gprime: &UniPoly,
    q: &PhiParams,
    window: i64,
    samples: usize,
    seed: u64,
) -> Result<bool, StructureError> {
    if !gprime.is_lambda_free() {
        return Err(StructureError::NotLambdaFree);
    }
    if gprime.is_zero() {
        return Err(StructureError::ZeroG);
    }
    let g = &UniPoly::linear(&q.b) * gprime;
    let r_g = SubmoduleSpec::new(SubmoduleKind::R, g)?;
    let p = OmegaParams::new(q.beta.clone()).expect("λ-free β");
    let gens = generators_in_window(window);
    let mut rng = sample::rng_from_seed(seed);
    for _ in 0..samples {
        let f = PhiVector {
            even: sample::rand_unipoly(&mut rng, 3),
            odd: sample::rand_unipoly(&mut rng, 3),
        };
        let psi_f = psi_embed(&f, gprime);
        for x in &gens {
            let lhs = act(x, &psi_f, &p);
            let rhs = psi_embed(&phi_act(x, &f, q), gprime);
            if !member(&(&lhs - &rhs), &r_g) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Composition series data for `Ω(λ,β)/R_g`, `g = Π (y-αᵢ)^{mᵢ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    /// Factors `[Φ(λ,β,α₁), Φ(λ,β,α₂), …]` in nested order, multiplicities
    /// expanded.
    pub factors: Vec<PhiParams>,
    /// `2 · deg g`, the rank of the quotient as a free `ℂ[L₀]`-module.
    pub quotient_rank: u32,
}

/// Build the decomposition series of `Ω(λ,β)/R_g` from the factored form
/// of `g`.
pub fn composition_series(
    roots: &[(Rat, u32)],
    p: &OmegaParams,
) -> Result<SeriesReport, StructureError> {
    if roots.is_empty() || roots.iter().all(|(_, m)| *m == 0) {
        return Err(StructureError::EmptyRoots);
    }
    let mut factors = Vec::new();
    for (alpha, mult) in roots {
        for _ in 0..*mult {
            factors.push(PhiParams::new(p.beta().clone(), alpha.clone())?);
        }
    }
    let deg = factors.len() as u32;
    Ok(SeriesReport {
        factors,
        quotient_rank: 2 * deg,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint};

    fn beta_y() -> OmegaParams {
        OmegaParams::new(UniPoly::var()).unwrap()
    }

    fn r_spec(g: UniPoly) -> SubmoduleSpec {
        SubmoduleSpec::new(SubmoduleKind::R, g).unwrap()
    }

    fn s_spec(g: UniPoly) -> SubmoduleSpec {
        SubmoduleSpec::new(SubmoduleKind::S, g).unwrap()
    }

    #[test]
    fn membership_examples() {
        let ym1 = UniPoly::linear(&rint(1));
        let v = SuperVector::even(&ym1.to_bipoly_v() * &BiPoly::var_u());
        assert!(member(&v, &r_spec(ym1.clone())));
        assert!(!member(&SuperVector::even(BiPoly::var_u()), &r_spec(ym1)));

        let s1 = s_spec(UniPoly::one());
        assert!(!member(&SuperVector::even(BiPoly::one()), &s1));
        assert!(member(&SuperVector::even(BiPoly::var_v()), &s1));
        assert!(member(&SuperVector::even(BiPoly::var_u()), &s1));
    }

    #[test]
    fn closure_contracts() {
        let ym1 = UniPoly::linear(&rint(1));
        // R_{y-1} closed for β=y
        assert!(closure_witness(&r_spec(ym1), &beta_y(), 4, 10, 11).is_none());
        // S_1 closed when β(0)=0
        assert!(closure_witness(&s_spec(UniPoly::one()), &beta_y(), 4, 10, 11).is_none());
        // S_1 has a witness for β=1+y
        let beta1y = OmegaParams::new(&UniPoly::one() + &UniPoly::var()).unwrap();
        let w = closure_witness(&s_spec(UniPoly::one()), &beta1y, 4, 10, 11);
        assert!(w.is_some());
        // the deterministic witness is L₁ on (x, 0)
        let (gen, v) = w.unwrap();
        assert_eq!(gen, Generator::even(GenKind::L, 1));
        assert_eq!(v, SuperVector::even(BiPoly::var_u()));
    }

    #[test]
    fn nesting_of_specs() {
        // S_g ⊆ R_g ⊆ R_ĝ for ĝ | g
        let ghat = UniPoly::linear(&rint(1));
        let g = &ghat * &UniPoly::linear(&rint(2));
        let mut rng = sample::rng_from_seed(3);
        for _ in 0..20 {
            let s = random_member(&s_spec(g.clone()), &mut rng, 3);
            assert!(member(&s, &r_spec(g.clone())));
            let r = random_member(&r_spec(g.clone()), &mut rng, 3);
            assert!(member(&r, &r_spec(ghat.clone())));
        }
    }

    #[test]
    fn phi_action_examples() {
        // β=y, b=2: L₁·1 = λ(x+2)
        let q = PhiParams::new(UniPoly::var(), rint(2)).unwrap();
        let out = phi_act(
            &Generator::even(GenKind::L, 1),
            &PhiVector::even(UniPoly::one()),
            &q,
        );
        let expect = PhiVector::even(
            (&UniPoly::var() + &UniPoly::constant(Scalar::from_int(2)))
                .scale(&Scalar::lambda_pow(1)),
        );
        assert_eq!(out, expect);

        // b=0: Q_{1/2}·(odd: s) = 0
        let q0 = PhiParams::new(UniPoly::var(), rint(0)).unwrap();
        let out = phi_act(
            &Generator::odd(GenKind::Q, 1),
            &PhiVector::odd(UniPoly::var()),
            &q0,
        );
        assert!(out.is_zero());

        // β=y, b=1: G_{1/2}·(odd: 1) = λ(x+1)
        let q1 = PhiParams::new(UniPoly::var(), rint(1)).unwrap();
        let out = phi_act(
            &Generator::odd(GenKind::G, 1),
            &PhiVector::odd(UniPoly::one()),
            &q1,
        );
        let expect = PhiVector::even(
            (&UniPoly::var() + &UniPoly::one()).scale(&Scalar::lambda_pow(1)),
        );
        assert_eq!(out, expect);
    }

    #[test]
    fn irreducibility_predicate() {
        assert!(!phi_is_irreducible(
            &PhiParams::new(UniPoly::var(), rint(0)).unwrap()
        ));
        assert!(phi_is_irreducible(
            &PhiParams::new(UniPoly::var(), rint(3)).unwrap()
        ));
        assert!(phi_is_irreducible(
            &PhiParams::new(&UniPoly::one() + &UniPoly::var(), rint(0)).unwrap()
        ));
    }

    #[test]
    fn reduce_examples() {
        let ym1 = UniPoly::linear(&rint(1));
        let v = SuperVector::even(&(&BiPoly::var_v() * &BiPoly::var_v()) * &BiPoly::var_u());
        assert_eq!(
            reduce_mod_r(&v, &ym1).unwrap(),
            SuperVector::even(BiPoly::var_u())
        );

        let v2 = &UniPoly::var() * &UniPoly::var();
        let t3 = SuperVector::odd(
            &(&BiPoly::var_v() * &BiPoly::var_v()) * &BiPoly::var_v(),
        );
        assert!(reduce_mod_r(&t3, &v2).unwrap().is_zero());

        let mix = SuperVector::new(
            &BiPoly::var_u() + &BiPoly::var_v(),
            &BiPoly::var_u() * &BiPoly::var_v(),
        );
        assert_eq!(
            reduce_mod_r(&mix, &UniPoly::var()).unwrap(),
            SuperVector::even(BiPoly::var_u())
        );
    }

    #[test]
    fn quotient_action_well_defined() {
        // act then reduce equals phi_act on representatives, for R_{y-b}
        let b = rint(2);
        let g = UniPoly::linear(&b);
        let p = beta_y();
        let q = PhiParams::new(p.beta().clone(), b.clone()).unwrap();
        let mut rng = sample::rng_from_seed(5);
        for _ in 0..10 {
            let f = PhiVector {
                even: sample::rand_unipoly(&mut rng, 3),
                odd: sample::rand_unipoly(&mut rng, 3),
            };
            let lift = psi_embed(&f, &UniPoly::one());
            for gen in generators_in_window(4) {
                let via_omega = reduce_mod_r(&act(&gen, &lift, &p), &g).unwrap();
                let via_phi = psi_embed(&phi_act(&gen, &f, &q), &UniPoly::one());
                assert_eq!(via_omega, via_phi, "mismatch at {gen}");
            }
        }
    }

    #[test]
    fn lemma44_examples() {
        // g' = 1 is the quotient identification
        let q = PhiParams::new(UniPoly::var(), rint(2)).unwrap();
        assert!(lemma44_verify(&UniPoly::one(), &q, 4, 10, 13).unwrap());
        // g' = y-1, b=2, β=y
        let gp = UniPoly::linear(&rint(1));
        assert!(lemma44_verify(&gp, &q, 4, 10, 13).unwrap());
        // g' = y, b=0, β=1+y
        let q2 = PhiParams::new(&UniPoly::one() + &UniPoly::var(), rint(0)).unwrap();
        assert!(lemma44_verify(&UniPoly::var(), &q2, 4, 10, 13).unwrap());
    }

    #[test]
    fn reducible_phi_has_closed_subspace() {
        // β(b)=b=0: x·ℂ[x] ⊕ ℂ[s] is closed under phi_act
        let q = PhiParams::new(UniPoly::var(), rint(0)).unwrap();
        assert!(!phi_is_irreducible(&q));
        let mut rng = sample::rng_from_seed(17);
        for _ in 0..20 {
            let f = PhiVector {
                even: &UniPoly::var() * &sample::rand_unipoly(&mut rng, 3),
                odd: sample::rand_unipoly(&mut rng, 3),
            };
            for gen in generators_in_window(4) {
                let out = phi_act(&gen, &f, &q);
                // even part must stay in x·ℂ[x]
                assert!(out.even.coeff(0).is_zero(), "constant leak at {gen}");
            }
        }
    }

    #[test]
    fn series_examples() {
        let p = beta_y();
        let s = composition_series(&[(rint(1), 1), (rint(2), 1)], &p).unwrap();
        assert_eq!(s.factors.len(), 2);
        assert_eq!(s.quotient_rank, 4);
        assert_eq!(s.factors[0].b, rint(1));
        assert_eq!(s.factors[1].b, rint(2));

        let s2 = composition_series(&[(rint(0), 2)], &p).unwrap();
        assert_eq!(s2.factors.len(), 2);
        assert_eq!(s2.quotient_rank, 4);

        let s3 = composition_series(&[(rint(1), 1), (rint(2), 2)], &p).unwrap();
        assert_eq!(s3.factors.len(), 3);
        assert_eq!(s3.quotient_rank, 6);

        assert_eq!(
            composition_series(&[], &p),
            Err(StructureError::EmptyRoots)
        );
        let _ = rat(1, 2);
    }
}
