//! Module families over four distinguished subalgebras: `hv = ⟨L,H⟩`
//! (an ordinary Lie algebra acting on a single `ℂ[x,y]`), `ns = ⟨L,G⟩`
//! (with `β` fixed to `y`), `fv = ⟨L,Q⟩` and `hc = ⟨H,Q⟩`. Each family
//! restricts the `Ω(λ,β)` action to its admitted generators; quotients,
//! filtrations and the `R_{g'}/R_g ≅ Φ` identifications restrict likewise.

use crate::algebra::{generators_in_window, GenKind, Generator};
use crate::omega::{act, OmegaParams, SuperVector};
use crate::poly::{BiPoly, UniPoly};
use crate::sample;
use crate::scalar::Rat;
use crate::structure::{
    member, phi_act, psi_embed, PhiParams, PhiVector, StructureError, SubmoduleKind,
    SubmoduleSpec,
};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubalgebraError {
    #[error("generator {0} is not admitted by the {1} family")]
    Inadmissible(Generator, SubalgebraId),
    #[error("the {0} family requires a β polynomial")]
    BetaRequired(SubalgebraId),
    #[error("the {0} family carries no free β")]
    BetaForbidden(SubalgebraId),
    #[error("submodule membership is classified only for hv and ns, not {0}")]
    UnsupportedFamily(SubalgebraId),
    #[error("the hv family acts on a single polynomial, not a supervector")]
    WrongCarrier,
    #[error("filtration depth must be at least 1")]
    ZeroDepth,
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubalgebraId {
    Hv,
    Ns,
    Fv,
    Hc,
}

impl SubalgebraId {
    pub fn admits(&self, kind: GenKind) -> bool {
        matches!(
            (self, kind),
            (SubalgebraId::Hv, GenKind::L | GenKind::H)
                | (SubalgebraId::Ns, GenKind::L | GenKind::G)
                | (SubalgebraId::Fv, GenKind::L | GenKind::Q)
                | (SubalgebraId::Hc, GenKind::H | GenKind::Q)
        )
    }

    pub fn admitted_kinds(&self) -> [GenKind; 2] {
        match self {
            SubalgebraId::Hv => [GenKind::L, GenKind::H],
            SubalgebraId::Ns => [GenKind::L, GenKind::G],
            SubalgebraId::Fv => [GenKind::L, GenKind::Q],
            SubalgebraId::Hc => [GenKind::H, GenKind::Q],
        }
    }

    /// Admitted generators with doubled index in `[-window, window]`.
    pub fn generators_in_window(&self, window: i64) -> Vec<Generator> {
        generators_in_window(window)
            .into_iter()
            .filter(|g| self.admits(g.kind()))
            .collect()
    }
}

impl std::fmt::Display for SubalgebraId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SubalgebraId::Hv => "hv",
            SubalgebraId::Ns => "ns",
            SubalgebraId::Fv => "fv",
            SubalgebraId::Hc => "hc",
        })
    }
}

/// A family member: which subalgebra, plus `β` where the family has one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubModuleFamily {
    subalg: SubalgebraId,
    beta: Option<UniPoly>,
}

impl SubModuleFamily {
    pub fn new(subalg: SubalgebraId, beta: Option<UniPoly>) -> Result<Self, SubalgebraError> {
        match subalg {
            SubalgebraId::Hv | SubalgebraId::Fv => {
                if beta.is_none() {
                    return Err(SubalgebraError::BetaRequired(subalg));
                }
            }
            SubalgebraId::Ns | SubalgebraId::Hc => {
                if beta.is_some() {
                    return Err(SubalgebraError::BetaForbidden(subalg));
                }
            }
        }
        if let Some(b) = &beta {
            if !b.is_lambda_free() {
                return Err(SubalgebraError::Structure(StructureError::NotLambdaFree));
            }
        }
        Ok(SubModuleFamily { subalg, beta })
    }

    pub fn subalg(&self) -> SubalgebraId {
        self.subalg
    }

    /// The `β` the restricted action runs with: the supplied one for hv/fv,
    /// `y` for ns, and `0` for hc (whose generators never read it).
    pub fn effective_beta(&self) -> UniPoly {
        match self.subalg {
            SubalgebraId::Hv | SubalgebraId::Fv => self.beta.clone().expect("checked in new"),
            SubalgebraId::Ns => UniPoly::var(),
            SubalgebraId::Hc => UniPoly::zero(),
        }
    }

    pub fn effective_params(&self) -> OmegaParams {
        OmegaParams::new(self.effective_beta()).expect("λ-free by construction")
    }

    fn check_admits(&self, g: &Generator) -> Result<(), SubalgebraError> {
        if self.subalg.admits(g.kind()) {
            Ok(())
        } else {
            Err(SubalgebraError::Inadmissible(g.clone(), self.subalg))
        }
    }
}

/// Carrier of a family module: hv acts on one polynomial, the super
/// families on a supervector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyVector {
    Plain(BiPoly),
    Super(SuperVector),
}

/// Restricted action. For hv the single polynomial is the even component
/// of the `Ω` action; for ns/fv/hc the action is the `Ω` action verbatim.
pub fn sub_act(
    fam: &SubModuleFamily,
    g: &Generator,
    v: &FamilyVector,
) -> Result<FamilyVector, SubalgebraError> {
    fam.check_admits(g)?;
    let p = fam.effective_params();
    match (fam.subalg, v) {
        (SubalgebraId::Hv, FamilyVector::Plain(f)) => Ok(FamilyVector::Plain(
            act(g, &SuperVector::even(f.clone()), &p).even,
        )),
        (SubalgebraId::Hv, FamilyVector::Super(_)) => Err(SubalgebraError::WrongCarrier),
        (_, FamilyVector::Plain(_)) => Err(SubalgebraError::WrongCarrier),
        (_, FamilyVector::Super(sv)) => Ok(FamilyVector::Super(act(g, sv, &p))),
    }
}

/// Sampled check that the family action is the restriction of the `Ω`
/// action to admitted generators.
pub fn restriction_consistency(fam: &SubModuleFamily, samples: usize, seed: u64) -> bool {
    let p = fam.effective_params();
    let gens = fam.subalg.generators_in_window(4);
    let mut rng = sample::rng_from_seed(seed);
    for _ in 0..samples {
        let sv = sample::rand_supervector(&mut rng, 3);
        for g in &gens {
            let full = act(g, &sv, &p);
            let restricted = match fam.subalg {
                SubalgebraId::Hv => {
                    let even_in = FamilyVector::Plain(sv.even.clone());
                    match sub_act(fam, g, &even_in) {
                        Ok(FamilyVector::Plain(out)) => SuperVector::even(out),
                        _ => return false,
                    }
                }
                _ => match sub_act(fam, g, &FamilyVector::Super(sv.clone())) {
                    Ok(FamilyVector::Super(out)) => out,
                    _ => return false,
                },
            };
            let matches = match fam.subalg {
                // hv sees only the even component
                SubalgebraId::Hv => full.even == restricted.even,
                _ => full == restricted,
            };
            if !matches {
                return false;
            }
        }
    }
    true
}

/// Submodule membership for the classified families (hv, ns only).
pub fn sub_member(
    fam: &SubModuleFamily,
    v: &FamilyVector,
    spec: &SubmoduleSpec,
) -> Result<bool, SubalgebraError> {
    match (fam.subalg, v) {
        (SubalgebraId::Hv, FamilyVector::Plain(f)) => {
            Ok(member(&SuperVector::even(f.clone()), spec))
        }
        (SubalgebraId::Hv, FamilyVector::Super(_)) => Err(SubalgebraError::WrongCarrier),
        (SubalgebraId::Ns, FamilyVector::Super(sv)) => Ok(member(sv, spec)),
        (SubalgebraId::Ns, FamilyVector::Plain(_)) => Err(SubalgebraError::WrongCarrier),
        _ => Err(SubalgebraError::UnsupportedFamily(fam.subalg)),
    }
}

/// Quotient action `Φ_hv / Φ_ns / Φ_fv / Φ_hc` at parameter `b`: the
/// one-variable quotient action restricted to admitted generators. The hv
/// quotient lives on the even component alone.
pub fn sub_quotient_act(
    fam: &SubModuleFamily,
    g: &Generator,
    f: &PhiVector,
    b: &Rat,
) -> Result<PhiVector, SubalgebraError> {
    fam.check_admits(g)?;
    let q = PhiParams::new(fam.effective_beta(), b.clone())?;
    if fam.subalg == SubalgebraId::Hv && !f.odd.is_zero() {
        return Err(SubalgebraError::WrongCarrier);
    }
    Ok(phi_act(g, f, &q))
}

/// Irreducibility of `Φ_ns(λ,b)`: exactly `b ≠ 0`.
pub fn phi_ns_is_irreducible(b: &Rat) -> bool {
    !b.is_zero()
}

/// Irreducibility of `Φ_hv(λ,β,b)`: `β(b) ≠ 0` or `b ≠ 0`.
pub fn phi_hv_is_irreducible(beta: &UniPoly, b: &Rat) -> bool {
    !beta.eval_rat(b).is_zero() || !b.is_zero()
}

/// Sampled check of the submodule filtration of fv/hc modules: each layer
/// `(y-α)ⁱℂ[x,y] ⊕ (t-α)ⁱℂ[s,t]`, `i ≤ depth`, is closed under the
/// admitted generators.
pub fn filtration_check(
    fam: &SubModuleFamily,
    alpha: &Rat,
    depth: u32,
    samples: usize,
    seed: u64,
) -> Result<bool, SubalgebraError> {
    if !matches!(fam.subalg, SubalgebraId::Fv | SubalgebraId::Hc) {
        return Err(SubalgebraError::UnsupportedFamily(fam.subalg));
    }
    if depth == 0 {
        return Err(SubalgebraError::ZeroDepth);
    }
    let p = fam.effective_params();
    let gens = fam.subalg.generators_in_window(4);
    let mut rng = sample::rng_from_seed(seed);
    let lin = UniPoly::linear(alpha);
    let mut g_i = UniPoly::one();
    for _ in 1..=depth {
        g_i = &g_i * &lin;
        let layer = SubmoduleSpec::new(SubmoduleKind::R, g_i.clone())?;
        let gv = g_i.to_bipoly_v();
        for _ in 0..samples {
            let v = SuperVector::new(
                &gv * &sample::rand_bipoly(&mut rng, 3),
                &gv * &sample::rand_bipoly(&mut rng, 3),
            );
            for x in &gens {
                if !member(&act(x, &v, &p), &layer) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Sampled intertwining check for the family quotient identifications
/// `R_{g'}/R_g ≅ Φ_fam(…,b)`, `g = (y-b)·g'`, `ψ` = multiply by
/// `g'(y)`/`g'(t)`.
pub fn sub_lemma_iso_verify(
    fam: &SubModuleFamily,
    gprime: &UniPoly,
    b: &Rat,
    samples: usize,
    seed: u64,
) -> Result<bool, SubalgebraError> {
    if gprime.is_zero() {
        return Err(SubalgebraError::Structure(StructureError::ZeroG));
    }
    if !gprime.is_lambda_free() {
        return Err(SubalgebraError::Structure(StructureError::NotLambdaFree));
    }
    let g = &UniPoly::linear(b) * gprime;
    let r_g = SubmoduleSpec::new(SubmoduleKind::R, g)?;
    let p = fam.effective_params();
    let gens = fam.subalg.generators_in_window(4);
    let mut rng = sample::rng_from_seed(seed);
    for _ in 0..samples {
        let f = PhiVector {
            even: sample::rand_unipoly(&mut rng, 3),
            odd: if fam.subalg == SubalgebraId::Hv {
                UniPoly::zero()
            } else {
                sample::rand_unipoly(&mut rng, 3)
            },
        };
        let psi_f = psi_embed(&f, gprime);
        for x in &gens {
            let lhs = act(x, &psi_f, &p);
            let rhs = psi_embed(&sub_quotient_act(fam, x, &f, b)?, gprime);
            if !member(&(&lhs - &rhs), &r_g) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
