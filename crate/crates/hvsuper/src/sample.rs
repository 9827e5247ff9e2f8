//! Seeded random generation of rationals, polynomials and module vectors,
//! shared by the randomized verification routines and the CLI `verify`
//! suites. All searches take an explicit seed so runs are reproducible.

use crate::omega::{OmegaParams, SuperVector};
use crate::poly::{BiPoly, UniPoly};
use crate::scalar::{Rat, Scalar};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Fixed default seed so CI runs are byte-reproducible.
pub const DEFAULT_SEED: u64 = 1729;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small random rational with denominator in 1..=3.
pub fn rand_rat(rng: &mut ChaCha8Rng) -> Rat {
    let n = rng.gen_range(-4i64..=4);
    let d = rng.gen_range(1i64..=3);
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rand_nonzero_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let r = rand_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Random λ-free univariate polynomial of degree ≤ `max_deg` (possibly zero).
pub fn rand_unipoly(rng: &mut ChaCha8Rng, max_deg: u32) -> UniPoly {
    let mut out = UniPoly::zero();
    for d in 0..=max_deg {
        if rng.gen_bool(0.6) {
            out = &out + &UniPoly::term(d, Scalar::from_rat(rand_rat(rng)));
        }
    }
    out
}

/// Random monic λ-free polynomial of exactly degree `deg`.
pub fn rand_monic(rng: &mut ChaCha8Rng, deg: u32) -> UniPoly {
    let mut out = UniPoly::term(deg, Scalar::one());
    for d in 0..deg {
        out = &out + &UniPoly::term(d, Scalar::from_rat(rand_rat(rng)));
    }
    out
}

/// Random bivariate polynomial with λ-free rational coefficients and both
/// degrees ≤ `max_deg`.
pub fn rand_bipoly(rng: &mut ChaCha8Rng, max_deg: u32) -> BiPoly {
    let mut out = BiPoly::zero();
    for i in 0..=max_deg {
        for j in 0..=max_deg {
            if rng.gen_bool(0.4) {
                out = &out + &BiPoly::term(i, j, Scalar::from_rat(rand_rat(rng)));
            }
        }
    }
    out
}

/// Random nonzero bivariate polynomial.
pub fn rand_nonzero_bipoly(rng: &mut ChaCha8Rng, max_deg: u32) -> BiPoly {
    loop {
        let p = rand_bipoly(rng, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn rand_supervector(rng: &mut ChaCha8Rng, max_deg: u32) -> SuperVector {
    SuperVector::new(rand_bipoly(rng, max_deg), rand_bipoly(rng, max_deg))
}

/// Random module parameters with `deg β ≤ max_deg`.
pub fn rand_params(rng: &mut ChaCha8Rng, max_deg: u32) -> OmegaParams {
    OmegaParams::new(rand_unipoly(rng, max_deg)).expect("λ-free by construction")
}

/// Random β with a prescribed constant term (`β(0) = beta0`).
pub fn rand_params_with_beta0(rng: &mut ChaCha8Rng, max_deg: u32, beta0: Rat) -> OmegaParams {
    let mut b = rand_unipoly(rng, max_deg);
    b = &(&b - &UniPoly::constant(b.coeff(0))) + &UniPoly::constant(Scalar::from_rat(beta0));
    OmegaParams::new(b).expect("λ-free by construction")
}
