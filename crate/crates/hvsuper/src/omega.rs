//! The rank-2 free module `Ω(λ,β) = ℂ[x,y] ⊕ ℂ[s,t]`: generator actions,
//! composed words, module-axiom checks, the operator identities
//! `X L₀ⁱ = (L₀ + idx)ⁱ X` and `X H₀ⁱ = H₀ⁱ X`, and the parameter
//! isomorphism test.

use crate::algebra::{bracket_basis, AlgebraElement, GenKind, Generator, Parity};
use crate::poly::{BiPoly, UniPoly};
use crate::scalar::{Rat, Scalar};
use num_bigint::BigInt;
use num_traits::One;
use std::ops::{Add, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OmegaError {
    #[error("β must have λ-free rational coefficients")]
    BetaNotRational,
    #[error("power {got} exceeds the configured bound {bound}")]
    BoundExceeded { got: u32, bound: u32 },
}

/// Module element: even component in `(x,y)`, odd component in `(s,t)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SuperVector {
    pub even: BiPoly,
    pub odd: BiPoly,
}

impl SuperVector {
    pub fn zero() -> Self {
        SuperVector::default()
    }

    pub fn even(p: BiPoly) -> Self {
        SuperVector {
            even: p,
            odd: BiPoly::zero(),
        }
    }

    pub fn odd(p: BiPoly) -> Self {
        SuperVector {
            even: BiPoly::zero(),
            odd: p,
        }
    }

    pub fn new(even: BiPoly, odd: BiPoly) -> Self {
        SuperVector { even, odd }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> SuperVector {
        SuperVector {
            even: self.even.scale(c),
            odd: self.odd.scale(c),
        }
    }
}

impl Add for &SuperVector {
    type Output = SuperVector;
    fn add(self, rhs: &SuperVector) -> SuperVector {
        SuperVector {
            even: &self.even + &rhs.even,
            odd: &self.odd + &rhs.odd,
        }
    }
}

impl Sub for &SuperVector {
    type Output = SuperVector;
    fn sub(self, rhs: &SuperVector) -> SuperVector {
        SuperVector {
            even: &self.even - &rhs.even,
            odd: &self.odd - &rhs.odd,
        }
    }
}

impl Neg for &SuperVector {
    type Output = SuperVector;
    fn neg(self) -> SuperVector {
        SuperVector {
            even: -&self.even,
            odd: -&self.odd,
        }
    }
}

/// How λ is interpreted when comparing module parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LambdaDescriptor {
    /// λ is the formal unit of the scalar ring.
    Formal,
    /// λ specialized to a nonzero rational.
    Value(Rat),
}

/// Module parameters: the polynomial `β(y)` with λ-free rational
/// coefficients. λ itself is the formal unit of every [`Scalar`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaParams {
    beta: UniPoly,
}

impl OmegaParams {
    pub fn new(beta: UniPoly) -> Result<Self, OmegaError> {
        if beta.is_lambda_free() {
            Ok(OmegaParams { beta })
        } else {
            Err(OmegaError::BetaNotRational)
        }
    }

    pub fn beta(&self) -> &UniPoly {
        &self.beta
    }

    /// `β(0)`, the coefficient driving the submodule case split.
    pub fn beta0(&self) -> Rat {
        self.beta
            .coeff(0)
            .as_rat()
            .expect("β coefficients are rational")
    }
}

/// λ-exponent of `λ^{p-1/2}` / `λ^{p+1/2}` style factors; `half` is ±1 in
/// doubled units.
fn lambda_exp(g: &Generator, half: i64) -> BigInt {
    (g.index().doubled() + half) / 2
}

/// `(u + q(v)) · f`, with the `u` part done by re-keying instead of a
/// general product.
fn affine_mul(f: &BiPoly, q: &BiPoly) -> BiPoly {
    f.mul_affine_u(q)
}

/// The action formulas applied to pre-shifted components: `se` and `so` are
/// `v.even` and `v.odd` with `u := u + idx(g)` already substituted.
fn act_shifted(g: &Generator, se: &BiPoly, so: &BiPoly, p: &OmegaParams) -> SuperVector {
    let idx = g.index().to_rat();
    match g.kind() {
        GenKind::L => {
            // λ^m (x + mβ(y)) f(x+m,y)  and  λ^m (s + m(β(t)+1/2)) f(s+m,t)
            let lam = Scalar::lambda_pow(lambda_exp(g, 0));
            let beta_m = p.beta().to_bipoly_v().scale(&Scalar::from_rat(idx.clone()));
            let half = Rat::new(1.into(), 2.into());
            let beta_m_half = &beta_m + &BiPoly::constant(Scalar::from_rat(&idx * &half));
            SuperVector {
                even: affine_mul(se, &beta_m).scale(&lam),
                odd: affine_mul(so, &beta_m_half).scale(&lam),
            }
        }
        GenKind::H => {
            // λ^m y f(x+m,y)  and  λ^m t f(s+m,t)
            let lam = Scalar::lambda_pow(lambda_exp(g, 0));
            SuperVector {
                even: se.times_v().scale(&lam),
                odd: so.times_v().scale(&lam),
            }
        }
        GenKind::G => {
            // even → odd: λ^{p-1/2} f(s+p,t)
            // odd → even: λ^{p+1/2} (x + 2pβ(y)) f(x+p,y)
            let lam_lo = Scalar::lambda_pow(lambda_exp(g, -1));
            let lam_hi = Scalar::lambda_pow(lambda_exp(g, 1));
            let two_p = Scalar::from_rat(&idx * &Rat::from_integer(2.into()));
            let beta_2p = p.beta().to_bipoly_v().scale(&two_p);
            SuperVector {
                even: affine_mul(so, &beta_2p).scale(&lam_hi),
                odd: se.scale(&lam_lo),
            }
        }
        GenKind::Q => {
            // kills the even part; odd → even: λ^{p+1/2} y f(x+p,y)
            let lam_hi = Scalar::lambda_pow(lambda_exp(g, 1));
            SuperVector {
                even: so.times_v().scale(&lam_hi),
                odd: BiPoly::zero(),
            }
        }
    }
}

/// Action of a basis generator, Eqs. for `Ω(λ,β)`. Even generators preserve
/// components, odd generators swap them.
pub fn act(g: &Generator, v: &SuperVector, p: &OmegaParams) -> SuperVector {
    if v.is_zero() {
        return SuperVector::zero();
    }
    let idx = g.index().to_rat();
    act_shifted(g, &v.even.shift_u(&idx), &v.odd.shift_u(&idx), p)
}

/// Action of many generators on one vector, sharing the `u`-shift work:
/// generators with equal indices (`L_m`/`H_m`, `G_p`/`Q_p`) reuse the same
/// shifted components. Agrees with [`act`] entrywise.
pub fn act_table(gens: &[Generator], v: &SuperVector, p: &OmegaParams) -> Vec<SuperVector> {
    let mut cache: std::collections::HashMap<BigInt, (BiPoly, BiPoly)> =
        std::collections::HashMap::new();
    gens.iter()
        .map(|g| {
            if v.is_zero() {
                return SuperVector::zero();
            }
            let (se, so) = &*cache
                .entry(g.index().doubled().clone())
                .or_insert_with(|| {
                    let idx = g.index().to_rat();
                    (v.even.shift_u(&idx), v.odd.shift_u(&idx))
                });
            act_shifted(g, se, so, p)
        })
        .collect()
}

/// Linear extension of [`act`] to algebra elements.
pub fn act_elem(e: &AlgebraElement, v: &SuperVector, p: &OmegaParams) -> SuperVector {
    let mut out = SuperVector::zero();
    for (g, c) in e.iter() {
        out = &out + &act(g, v, p).scale(c);
    }
    out
}

/// Right-to-left composition: `act_word([a, b], v) = a·(b·v)`.
pub fn act_word(word: &[AlgebraElement], v: &SuperVector, p: &OmegaParams) -> SuperVector {
    word.iter()
        .rev()
        .fold(v.clone(), |acc, e| act_elem(e, &acc, p))
}

/// Module axiom `a(bv) - (-1)^{|a||b|} b(av) = [a,b]v` on a single vector.
pub fn verify_bracket_on(
    a: &Generator,
    b: &Generator,
    v: &SuperVector,
    p: &OmegaParams,
) -> bool {
    let lhs = act_elem(&bracket_basis(a, b), v, p);
    let ab = act(a, &act(b, v, p), p);
    let ba = act(b, &act(a, v, p), p);
    let rhs = if a.parity() == Parity::Odd && b.parity() == Parity::Odd {
        &ab + &ba
    } else {
        &ab - &ba
    };
    lhs == rhs
}

pub const LEMMA_POWER_BOUND: u32 = 4;

/// `X L₀ⁱ = (L₀ + idx(X))ⁱ X` and `X H₀ⁱ = H₀ⁱ X`, checked on one vector by
/// expanding the binomial on the right-hand side.
pub fn verify_operator_identity(
    x: &Generator,
    i: u32,
    v: &SuperVector,
    p: &OmegaParams,
) -> Result<bool, OmegaError> {
    if i > LEMMA_POWER_BOUND {
        return Err(OmegaError::BoundExceeded {
            got: i,
            bound: LEMMA_POWER_BOUND,
        });
    }
    let l0 = Generator::even(GenKind::L, 0);
    let h0 = Generator::even(GenKind::H, 0);

    // lhs = X · L₀ⁱ v
    let mut l0iv = v.clone();
    for _ in 0..i {
        l0iv = act(&l0, &l0iv, p);
    }
    let lhs = act(x, &l0iv, p);

    // rhs = Σ_j C(i,j) idx^{i-j} L₀ʲ (X v)
    let xv = act(x, v, p);
    let idx = x.index().to_rat();
    let mut rhs = SuperVector::zero();
    let mut binom = Rat::one();
    let mut pow_cache = xv.clone();
    for j in 0..=i {
        let c = if j == 0 {
            // C(i,0) idx^i
            let mut ip = Rat::one();
            for _ in 0..i {
                ip *= &idx;
            }
            ip
        } else {
            binom = binom.clone() * Rat::from_integer((i - j + 1).into())
                / Rat::from_integer(j.into());
            let mut ip = Rat::one();
            for _ in 0..(i - j) {
                ip *= &idx;
            }
            &binom * &ip
        };
        rhs = &rhs + &pow_cache.scale(&Scalar::from_rat(c));
        pow_cache = act(&l0, &pow_cache, p);
    }
    if lhs != rhs {
        return Ok(false);
    }

    // X H₀ⁱ v = H₀ⁱ X v
    let mut h0iv = v.clone();
    for _ in 0..i {
        h0iv = act(&h0, &h0iv, p);
    }
    let mut h0ixv = act(x, v, p);
    for _ in 0..i {
        h0ixv = act(&h0, &h0ixv, p);
    }
    Ok(act(x, &h0iv, p) == h0ixv)
}

/// Theorem-level isomorphism test: `Ω(λ,β) ≅ Ω(λ′,β′)` iff both λ
/// descriptors and β polynomials coincide.
pub fn params_isomorphic(
    p1: &OmegaParams,
    p2: &OmegaParams,
    lam1: &LambdaDescriptor,
    lam2: &LambdaDescriptor,
) -> bool {
    lam1 == lam2 && p1.beta() == p2.beta()
}
