//! Command-line front end: parse expressions, dispatch to the engine
//! modules, and emit text or JSON reports. Exit codes: 0 success/verified,
//! 1 verification failure, 2 usage or parse error.

use crate::algebra::{
    bracket_basis, generators_in_window, jacobi_residual, AlgebraElement, Generator, Parity,
};
use crate::expr::{self, ParseError, Value};
use crate::omega::{
    act_elem, verify_bracket_on, verify_operator_identity, OmegaParams, SuperVector,
};
use crate::poly::{BiPoly, UniPoly};
use crate::sample;
use crate::scalar::{HalfInt, Rat};
use crate::structure::{
    closure_witness, composition_series, lemma44_verify, member, phi_act, phi_is_irreducible,
    PhiParams, PhiVector, SubmoduleKind, SubmoduleSpec,
};
use crate::subalgebras::{
    filtration_check, restriction_consistency, sub_act, sub_lemma_iso_verify, sub_member,
    sub_quotient_act, FamilyVector, SubModuleFamily, SubalgebraId,
};
use crate::weighting::{
    a_is_reducible, matched_a_params, verify_theorem64, verify_weighted_brackets, WeightParams,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt::Write as _;

#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: msg.into(),
        }
    }

    fn failed(msg: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: msg.into(),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::usage(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "hvs",
    about = "Exact computations in the N=1 super Heisenberg-Virasoro algebra and its polynomial modules",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Render λ as `λ` instead of ASCII `L`
    #[arg(long, global = true)]
    unicode: bool,
    /// Value of λ: `formal` (default) or a rational like `2` or `-1/3`
    #[arg(long, global = true, default_value = "formal")]
    lambda: String,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = sample::DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    R,
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Hv,
    Ns,
    Fv,
    Hc,
}

impl From<FamilyArg> for SubalgebraId {
    fn from(f: FamilyArg) -> SubalgebraId {
        match f {
            FamilyArg::Hv => SubalgebraId::Hv,
            FamilyArg::Ns => SubalgebraId::Ns,
            FamilyArg::Fv => SubalgebraId::Fv,
            FamilyArg::Hc => SubalgebraId::Hc,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Relations,
    Jacobi,
    Lemma32,
    Submodule,
    Subalgebra,
    Weighting,
}

#[derive(Args, Debug)]
struct BetaOpt {
    /// Module parameter β as a polynomial in y
    #[arg(long)]
    beta: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a bracket expression like "[G[1/2],G[3/2]]"
    Bracket { expr: String },
    /// Act by an algebra element on a module vector
    Act {
        elem: String,
        vector: String,
        #[command(flatten)]
        beta: BetaOpt,
        /// Restrict to a subalgebra family
        #[arg(long)]
        subalgebra: Option<FamilyArg>,
    },
    /// Test membership of a vector in R_g or S_g
    Member {
        vector: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Monic polynomial g in y
        #[arg(long)]
        g: String,
        #[arg(long)]
        subalgebra: Option<FamilyArg>,
    },
    /// Search for a closure violation of R_g or S_g
    Closure {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        g: String,
        #[command(flatten)]
        beta: BetaOpt,
        #[arg(long, default_value_t = 4)]
        window: i64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Composition series of Ω(λ,β)/R_g from the roots of g
    Series {
        /// Roots of g as `alpha:multiplicity` pairs, e.g. "1:1,2:2"
        #[arg(long)]
        roots: String,
        #[command(flatten)]
        beta: BetaOpt,
    },
    /// Act by a generator on the quotient Φ(λ,β,b)
    PhiAct {
        gen: String,
        vector: String,
        #[command(flatten)]
        beta: BetaOpt,
        #[arg(long)]
        b: String,
        #[arg(long)]
        subalgebra: Option<FamilyArg>,
    },
    /// Match the weighting of Ω′(λ,β) against an A(a,b,c) module
    Weight {
        #[arg(long)]
        alpha1: String,
        #[arg(long)]
        alpha2: String,
        /// Lattice offset: 0 or 1/2
        #[arg(long, default_value = "0")]
        eps: String,
        #[command(flatten)]
        beta: BetaOpt,
        #[arg(long, default_value_t = 4)]
        window: i64,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        beta: BetaOpt,
        #[arg(long, default_value_t = 4)]
        window: i64,
        #[arg(long)]
        subalgebra: Option<FamilyArg>,
    },
    /// Parse an expression and echo its canonical form
    Parse { expr: String },
}

// ---------------------------------------------------------------------------
// argument helpers

fn parse_rat(src: &str) -> Result<Rat, CliError> {
    let s = src.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let mut parts = body.splitn(2, '/');
    let num: BigInt = parts
        .next()
        .unwrap_or("")
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("not a rational: `{src}`")))?;
    let den: BigInt = match parts.next() {
        Some(d) => d
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("not a rational: `{src}`")))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(CliError::usage(format!("zero denominator in `{src}`")));
    }
    let r = Rat::new(num, den);
    Ok(if neg { -r } else { r })
}

/// Parse a polynomial in a single variable (`y` for β and g; `x`/`s` for
/// quotient vectors).
fn parse_unipoly_in(src: &str, var: char) -> Result<UniPoly, CliError> {
    let value = expr::parse_value(src)?;
    let p = match (value, var) {
        (Value::Scalar(s), _) => BiPoly::constant(s),
        (Value::Even(p), 'x' | 'y') => p,
        (Value::Odd(p), 's' | 't') => p,
        _ => {
            return Err(CliError::usage(format!(
                "expected a polynomial in `{var}`"
            )))
        }
    };
    let on_u = var == 'x' || var == 's';
    let mut out = UniPoly::zero();
    for ((i, j), c) in p.iter() {
        let (keep, other) = if on_u { (*i, *j) } else { (*j, *i) };
        if other != 0 {
            return Err(CliError::usage(format!(
                "expected a polynomial in `{var}` only"
            )));
        }
        out = &out + &UniPoly::term(keep, c.clone());
    }
    Ok(out)
}

fn parse_beta(opt: &BetaOpt) -> Result<UniPoly, CliError> {
    match &opt.beta {
        Some(src) => parse_unipoly_in(src, 'y'),
        None => Err(CliError::usage("--beta is required here")),
    }
}

fn omega_params(opt: &BetaOpt) -> Result<OmegaParams, CliError> {
    OmegaParams::new(parse_beta(opt)?)
        .map_err(|e| CliError::usage(e.to_string()))
}

fn parse_phivector(src: &str) -> Result<PhiVector, CliError> {
    let sv = expr::parse_value(src)?
        .into_supervector()
        .map_err(CliError::from)?;
    let even = bipoly_to_unipoly(&sv.even).ok_or_else(|| {
        CliError::usage("quotient vectors are one-variable: even part must use x only")
    })?;
    let odd = bipoly_to_unipoly(&sv.odd).ok_or_else(|| {
        CliError::usage("quotient vectors are one-variable: odd part must use s only")
    })?;
    Ok(PhiVector { even, odd })
}

fn bipoly_to_unipoly(p: &BiPoly) -> Option<UniPoly> {
    let mut out = UniPoly::zero();
    for ((i, j), c) in p.iter() {
        if *j != 0 {
            return None;
        }
        out = &out + &UniPoly::term(*i, c.clone());
    }
    Some(out)
}

fn parse_single_generator(src: &str) -> Result<Generator, CliError> {
    let a = expr::parse_value(src)?.into_algebra()?;
    let mut it = a.iter();
    match (it.next(), it.next()) {
        (Some((g, c)), None) if c.is_one() => Ok(g.clone()),
        _ => Err(CliError::usage("expected a single generator like L[1] or G[1/2]")),
    }
}

fn family(
    arg: FamilyArg,
    beta: &BetaOpt,
) -> Result<SubModuleFamily, CliError> {
    let id: SubalgebraId = arg.into();
    let beta_poly = match id {
        SubalgebraId::Hv | SubalgebraId::Fv => Some(parse_beta(beta)?),
        SubalgebraId::Ns | SubalgebraId::Hc => {
            if beta.beta.is_some() {
                return Err(CliError::usage(format!(
                    "the {id} family carries no free β"
                )));
            }
            None
        }
    };
    SubModuleFamily::new(id, beta_poly).map_err(|e| CliError::usage(e.to_string()))
}

fn submodule_spec(kind: KindArg, g_src: &str) -> Result<SubmoduleSpec, CliError> {
    let g = parse_unipoly_in(g_src, 'y')?;
    let kind = match kind {
        KindArg::R => SubmoduleKind::R,
        KindArg::S => SubmoduleKind::S,
    };
    SubmoduleSpec::new(kind, g).map_err(|e| CliError::usage(e.to_string()))
}

enum LambdaArg {
    Formal,
    Value(Rat),
}

fn parse_lambda(src: &str) -> Result<LambdaArg, CliError> {
    if src == "formal" {
        return Ok(LambdaArg::Formal);
    }
    let r = parse_rat(src)?;
    if r.is_zero() {
        return Err(CliError::usage("λ must be nonzero"));
    }
    Ok(LambdaArg::Value(r))
}

struct Output {
    json: bool,
    unicode: bool,
    lambda: LambdaArg,
}

impl Output {
    fn value(&self, v: &Value) -> Result<String, CliError> {
        let v = match &self.lambda {
            LambdaArg::Formal => v.clone(),
            LambdaArg::Value(r) => v
                .eval_lambda(r)
                .map_err(|e| CliError::usage(e.to_string()))?,
        };
        Ok(if self.json {
            expr::value_json(&v, self.unicode).to_string()
        } else {
            expr::render_value(&v, self.unicode)
        })
    }

    fn phivector(&self, v: &PhiVector) -> Result<String, CliError> {
        // quotient vectors embed as one-variable supervectors
        let sv = SuperVector::new(v.even.to_bipoly_u(), v.odd.to_bipoly_u());
        self.value(&Value::Super(sv))
    }

    fn bool_report(&self, label: &str, ok: bool) -> String {
        if self.json {
            serde_json::json!({ label: ok }).to_string()
        } else {
            format!("{label}: {ok}")
        }
    }
}

// ---------------------------------------------------------------------------
// dispatch

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap prints help/version with code 0 via its own machinery
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(report) => {
            println!("{report}");
            0
        }
        Err(e) => {
            eprintln!("{}", e.message);
            e.code
        }
    }
}

fn execute(cli: Cli) -> Result<String, CliError> {
    let out = Output {
        json: cli.json,
        unicode: cli.unicode,
        lambda: parse_lambda(&cli.lambda)?,
    };
    let seed = cli.seed;
    match cli.command {
        Command::Bracket { expr: src } => {
            let v = expr::parse_value(&src)?;
            let a = v.into_algebra()?;
            out.value(&Value::Algebra(a))
        }
        Command::Parse { expr: src } => {
            let v = expr::parse_value(&src)?;
            out.value(&v)
        }
        Command::Act {
            elem,
            vector,
            beta,
            subalgebra,
        } => {
            let e = expr::parse_value(&elem)?.into_algebra()?;
            match subalgebra {
                None => {
                    let p = omega_params(&beta)?;
                    let v = expr::parse_value(&vector)?.into_supervector()?;
                    out.value(&Value::Super(act_elem(&e, &v, &p)))
                }
                Some(f) => {
                    let fam = family(f, &beta)?;
                    let carrier = match expr::parse_value(&vector)? {
                        Value::Even(p) if fam.subalg() == SubalgebraId::Hv => {
                            FamilyVector::Plain(p)
                        }
                        Value::Scalar(s) if fam.subalg() == SubalgebraId::Hv => {
                            FamilyVector::Plain(BiPoly::constant(s))
                        }
                        v => FamilyVector::Super(v.into_supervector()?),
                    };
                    let mut acc: Option<FamilyVector> = None;
                    for (g, c) in e.iter() {
                        let img = sub_act(&fam, g, &carrier)
                            .map_err(|e| CliError::usage(e.to_string()))?;
                        let scaled = match img {
                            FamilyVector::Plain(p) => FamilyVector::Plain(p.scale(c)),
                            FamilyVector::Super(v) => FamilyVector::Super(v.scale(c)),
                        };
                        acc = Some(match (acc, scaled) {
                            (None, v) => v,
                            (Some(FamilyVector::Plain(a)), FamilyVector::Plain(b)) => {
                                FamilyVector::Plain(&a + &b)
                            }
                            (Some(FamilyVector::Super(a)), FamilyVector::Super(b)) => {
                                FamilyVector::Super(&a + &b)
                            }
                            _ => unreachable!("carrier shape is fixed per family"),
                        });
                    }
                    match acc.unwrap_or(FamilyVector::Super(SuperVector::zero())) {
                        FamilyVector::Plain(p) => out.value(&Value::Even(p)),
                        FamilyVector::Super(v) => out.value(&Value::Super(v)),
                    }
                }
            }
        }
        Command::Member {
            vector,
            kind,
            g,
            subalgebra,
        } => {
            let spec = submodule_spec(kind, &g)?;
            let is_member = match subalgebra {
                None | Some(FamilyArg::Ns) => {
                    let v = expr::parse_value(&vector)?.into_supervector()?;
                    match subalgebra {
                        None => member(&v, &spec),
                        Some(f) => {
                            let fam = family(f, &BetaOpt { beta: None })?;
                            sub_member(&fam, &FamilyVector::Super(v), &spec)
                                .map_err(|e| CliError::usage(e.to_string()))?
                        }

                    }
                }
                Some(FamilyArg::Hv) => {
                    let p = match expr::parse_value(&vector)? {
                        Value::Even(p) => p,
                        Value::Scalar(s) => BiPoly::constant(s),
                        _ => {
                            return Err(CliError::usage(
                                "hv vectors are single polynomials in x, y",
                            ))
                        }
                    };
                    // β is irrelevant to membership; any hv family works
                    let fam = SubModuleFamily::new(SubalgebraId::Hv, Some(UniPoly::var()))
                        .expect("valid family");
                    sub_member(&fam, &FamilyVector::Plain(p), &spec)
                        .map_err(|e| CliError::usage(e.to_string()))?
                }
                Some(f) => {
                    return Err(CliError::usage(format!(
                        "membership is classified only for hv and ns, not {}",
                        SubalgebraId::from(f)
                    )))
                }
            };
            Ok(out.bool_report("member", is_member))
        }
        Command::Closure {
            kind,
            g,
            beta,
            window,
            samples,
        } => {
            let spec = submodule_spec(kind, &g)?;
            let p = omega_params(&beta)?;
            match closure_witness(&spec, &p, window, samples, seed) {
                Some((gen, v)) => {
                    if out.json {
                        Ok(serde_json::json!({
                            "closed": false,
                            "generator": expr::algebra_json(
                                &AlgebraElement::basis(gen.clone()), out.unicode),
                            "vector": expr::super_json(&v, out.unicode),
                        })
                        .to_string())
                    } else {
                        Ok(format!(
                            "witness: {} acting on {} leaves the submodule",
                            gen,
                            expr::render_super(&v, out.unicode)
                        ))
                    }
                }
                None => Ok(out.bool_report("closed", true)),
            }
        }
        Command::Series { roots, beta } => {
            let p = omega_params(&beta)?;
            let mut parsed = Vec::new();
            for part in roots.split(',') {
                let mut halves = part.splitn(2, ':');
                let alpha = parse_rat(halves.next().unwrap_or(""))?;
                let mult: u32 = halves
                    .next()
                    .unwrap_or("1")
                    .trim()
                    .parse()
                    .map_err(|_| CliError::usage(format!("bad multiplicity in `{part}`")))?;
                parsed.push((alpha, mult));
            }
            let report = composition_series(&parsed, &p)
                .map_err(|e| CliError::usage(e.to_string()))?;
            if out.json {
                Ok(serde_json::json!({
                    "quotient_rank": report.quotient_rank,
                    "factors": report
                        .factors
                        .iter()
                        .map(|f| serde_json::json!({
                            "b": rat_display(&f.b),
                            "irreducible": phi_is_irreducible(f),
                        }))
                        .collect::<Vec<_>>(),
                })
                .to_string())
            } else {
                let mut s = format!("quotient rank: {}\n", report.quotient_rank);
                for (i, f) in report.factors.iter().enumerate() {
                    let _ = writeln!(
                        s,
                        "factor {}: Phi(b = {}){}",
                        i + 1,
                        rat_display(&f.b),
                        if phi_is_irreducible(f) {
                            ""
                        } else {
                            " (reducible)"
                        }
                    );
                }
                Ok(s.trim_end().to_string())
            }
        }
        Command::PhiAct {
            gen,
            vector,
            beta,
            b,
            subalgebra,
        } => {
            let g = parse_single_generator(&gen)?;
            let f = parse_phivector(&vector)?;
            let b = parse_rat(&b)?;
            match subalgebra {
                None => {
                    let q = PhiParams::new(parse_beta(&beta)?, b)
                        .map_err(|e| CliError::usage(e.to_string()))?;
                    out.phivector(&phi_act(&g, &f, &q))
                }
                Some(farg) => {
                    let fam = family(farg, &beta)?;
                    let img = sub_quotient_act(&fam, &g, &f, &b)
                        .map_err(|e| CliError::usage(e.to_string()))?;
                    out.phivector(&img)
                }
            }
        }
        Command::Weight {
            alpha1,
            alpha2,
            eps,
            beta,
            window,
        } => {
            let epsilon = match eps.trim() {
                "0" => HalfInt::zero(),
                "1/2" => HalfInt::from_doubled(1),
                other => {
                    return Err(CliError::usage(format!(
                        "--eps must be 0 or 1/2, got `{other}`"
                    )))
                }
            };
            let w = WeightParams::new(parse_rat(&alpha1)?, parse_rat(&alpha2)?, epsilon)
                .map_err(|e| CliError::usage(e.to_string()))?;
            let p = omega_params(&beta)?;
            let q = matched_a_params(&w, &p);
            let iso = verify_theorem64(&w, &p, window);
            let functorial = verify_weighted_brackets(&w, &p, window.min(3));
            let report = if out.json {
                serde_json::json!({
                    "a": rat_display(&q.a),
                    "b": rat_display(&q.b),
                    "c": rat_display(&q.c),
                    "reducible": a_is_reducible(&q),
                    "isomorphism_verified": iso,
                    "brackets_verified": functorial,
                })
                .to_string()
            } else {
                format!(
                    "A(a, b, c) = A({}, {}, {})\nreducible: {}\nisomorphism verified: {}\nbracket functoriality: {}",
                    rat_display(&q.a),
                    rat_display(&q.b),
                    rat_display(&q.c),
                    a_is_reducible(&q),
                    iso,
                    functorial
                )
            };
            if iso && functorial {
                Ok(report)
            } else {
                Err(CliError::failed(report))
            }
        }
        Command::Verify {
            suite,
            beta,
            window,
            subalgebra,
        } => run_suite(suite, &beta, window, seed, subalgebra, &out),
    }
}

fn rat_display(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

// ---------------------------------------------------------------------------
// verification suites

fn suite_betas(beta: &BetaOpt, seed: u64, n: usize) -> Result<Vec<OmegaParams>, CliError> {
    match &beta.beta {
        Some(_) => Ok(vec![omega_params(beta)?]),
        None => {
            let mut rng = sample::rng_from_seed(seed ^ 0x5eed);
            Ok((0..n).map(|_| sample::rand_params(&mut rng, 3)).collect())
        }
    }
}

fn run_suite(
    suite: SuiteArg,
    beta: &BetaOpt,
    window: i64,
    seed: u64,
    subalgebra: Option<FamilyArg>,
    out: &Output,
) -> Result<String, CliError> {
    let mut report = String::new();
    let mut ok = true;
    let check = |line: &mut String, label: &str, pass: bool, counter: Option<String>| {
        let _ = writeln!(
            line,
            "{} {}",
            if pass { "PASS" } else { "FAIL" },
            label
        );
        if let (false, Some(c)) = (pass, counter) {
            let _ = writeln!(line, "  counterexample: {c}");
        }
        pass
    };
    match suite {
        SuiteArg::Relations => {
            let gens = generators_in_window(window);
            // super-antisymmetry, exhaustive over the window
            let mut pass = true;
            let mut counter = None;
            'anti: for a in &gens {
                for b in &gens {
                    let flip = a.parity() == Parity::Odd && b.parity() == Parity::Odd;
                    let ba = bracket_basis(b, a);
                    let ab = bracket_basis(a, b);
                    let residual = if flip { &ab - &ba } else { &ab + &ba };
                    if !residual.is_zero() {
                        pass = false;
                        counter = Some(format!("[{a}, {b}]"));
                        break 'anti;
                    }
                }
            }
            ok &= check(&mut report, "super-antisymmetry (exhaustive)", pass, counter);

            // module axiom on random vectors
            let mut pass = true;
            let mut counter = None;
            let mut rng = sample::rng_from_seed(seed);
            'rel: for p in suite_betas(beta, seed, 3)? {
                for _ in 0..5 {
                    let v = sample::rand_supervector(&mut rng, 3);
                    for a in &gens {
                        for b in &gens {
                            if !verify_bracket_on(a, b, &v, &p) {
                                pass = false;
                                counter = Some(format!(
                                    "[{a}, {b}] on {}",
                                    expr::render_super(&v, out.unicode)
                                ));
                                break 'rel;
                            }
                        }
                    }
                }
            }
            ok &= check(&mut report, "bracket-action compatibility (sampled)", pass, counter);
        }
        SuiteArg::Jacobi => {
            let gens = generators_in_window(window);
            let mut pass = true;
            let mut counter = None;
            'jac: for a in &gens {
                for b in &gens {
                    for c in &gens {
                        if !jacobi_residual(a, b, c).is_zero() {
                            pass = false;
                            counter = Some(format!("({a}, {b}, {c})"));
                            break 'jac;
                        }
                    }
                }
            }
            ok &= check(&mut report, "graded Jacobi identity (exhaustive)", pass, counter);
        }
        SuiteArg::Lemma32 => {
            let mut pass = true;
            let mut counter = None;
            let mut rng = sample::rng_from_seed(seed);
            'lem: for p in suite_betas(beta, seed, 3)? {
                for _ in 0..5 {
                    let v = sample::rand_supervector(&mut rng, 2);
                    for x in generators_in_window(window) {
                        for i in 0..=3u32 {
                            match verify_operator_identity(&x, i, &v, &p) {
                                Ok(true) => {}
                                _ => {
                                    pass = false;
                                    counter = Some(format!("{x} with exponent {i}"));
                                    break 'lem;
                                }
                            }
                        }
                    }
                }
            }
            ok &= check(&mut report, "operator shift identities", pass, counter);
        }
        SuiteArg::Submodule => {
            let mut rng = sample::rng_from_seed(seed);
            // R_g closed for random monic g, both β(0)=0 and β(0)≠0
            let mut pass = true;
            let mut counter = None;
            for i in 0..6 {
                let g = sample::rand_monic(&mut rng, 1 + (i % 3));
                let p = if i % 2 == 0 {
                    sample::rand_params_with_beta0(&mut rng, 3, Rat::zero())
                } else {
                    let b0 = sample::rand_nonzero_rat(&mut rng);
                    sample::rand_params_with_beta0(&mut rng, 3, b0)
                };
                let spec = SubmoduleSpec::new(SubmoduleKind::R, g).expect("monic");
                if let Some((gen, v)) = closure_witness(&spec, &p, window, 5, seed + i as u64) {
                    pass = false;
                    counter = Some(format!(
                        "{gen} on {}",
                        expr::render_super(&v, out.unicode)
                    ));
                    break;
                }
            }
            ok &= check(&mut report, "R_g closure", pass, counter);

            // S_g closed iff β(0)=0; witness expected otherwise
            let mut pass = true;
            let mut counter = None;
            for i in 0..4 {
                let g = sample::rand_monic(&mut rng, 1 + (i % 2));
                let p0 = sample::rand_params_with_beta0(&mut rng, 3, Rat::zero());
                let spec = SubmoduleSpec::new(SubmoduleKind::S, g).expect("monic");
                if let Some((gen, v)) = closure_witness(&spec, &p0, window, 5, seed + i as u64) {
                    pass = false;
                    counter = Some(format!(
                        "β(0)=0 but {gen} escapes on {}",
                        expr::render_super(&v, out.unicode)
                    ));
                    break;
                }
                let b0 = sample::rand_nonzero_rat(&mut rng);
                let p1 = sample::rand_params_with_beta0(&mut rng, 3, b0);
                if closure_witness(&spec, &p1, window, 5, seed + i as u64).is_none() {
                    pass = false;
                    counter = Some("β(0)≠0 yet no witness found".into());
                    break;
                }
            }
            ok &= check(&mut report, "S_g closure iff β(0)=0", pass, counter);

            // quotient identification R_{g'}/R_g ≅ Φ(λ,β,b)
            let mut pass = true;
            for i in 0..4 {
                let gp = sample::rand_monic(&mut rng, i % 3);
                let b = sample::rand_rat(&mut rng);
                let p = sample::rand_params(&mut rng, 3);
                let q = PhiParams::new(p.beta().clone(), b).expect("λ-free");
                if !lemma44_verify(&gp, &q, window, 10, seed + i as u64)
                    .unwrap_or(false)
                {
                    pass = false;
                    break;
                }
            }
            ok &= check(&mut report, "quotient intertwining", pass, None);
        }
        SuiteArg::Subalgebra => {
            let families: Vec<SubModuleFamily> = match subalgebra {
                Some(f) => vec![family(f, beta)?],
                None => {
                    let mut rng = sample::rng_from_seed(seed ^ 0xfa);
                    vec![
                        SubModuleFamily::new(
                            SubalgebraId::Hv,
                            Some(sample::rand_unipoly(&mut rng, 3)),
                        )
                        .expect("valid"),
                        SubModuleFamily::new(SubalgebraId::Ns, None).expect("valid"),
                        SubModuleFamily::new(
                            SubalgebraId::Fv,
                            Some(sample::rand_unipoly(&mut rng, 3)),
                        )
                        .expect("valid"),
                        SubModuleFamily::new(SubalgebraId::Hc, None).expect("valid"),
                    ]
                }
            };
            let mut rng = sample::rng_from_seed(seed);
            for fam in &families {
                let id = fam.subalg();
                ok &= check(
                    &mut report,
                    &format!("{id} restriction consistency"),
                    restriction_consistency(fam, 10, seed),
                    None,
                );
                if matches!(id, SubalgebraId::Fv | SubalgebraId::Hc) {
                    let alpha = sample::rand_rat(&mut rng);
                    ok &= check(
                        &mut report,
                        &format!("{id} filtration (α = {})", rat_display(&alpha)),
                        filtration_check(fam, &alpha, 3, 5, seed).unwrap_or(false),
                        None,
                    );
                }
                let gp = sample::rand_monic(&mut rng, 1);
                let b = sample::rand_rat(&mut rng);
                ok &= check(
                    &mut report,
                    &format!("{id} quotient intertwining"),
                    sub_lemma_iso_verify(fam, &gp, &b, 10, seed).unwrap_or(false),
                    None,
                );
            }
        }
        SuiteArg::Weighting => {
            let mut rng = sample::rng_from_seed(seed);
            let mut pass = true;
            let mut counter = None;
            for eps_doubled in [0i64, 1] {
                for _ in 0..3 {
                    let w = WeightParams::new(
                        sample::rand_rat(&mut rng),
                        sample::rand_rat(&mut rng),
                        HalfInt::from_doubled(eps_doubled),
                    )
                    .expect("ε ∈ {0, ½}");
                    let p = match &beta.beta {
                        Some(_) => omega_params(beta)?,
                        None => sample::rand_params(&mut rng, 3),
                    };
                    if !verify_theorem64(&w, &p, window) {
                        pass = false;
                        counter = Some(format!(
                            "α = ({}, {}), ε = {}",
                            rat_display(&w.alpha1),
                            rat_display(&w.alpha2),
                            w.epsilon()
                        ));
                        break;
                    }
                    if !verify_weighted_brackets(&w, &p, window.min(3)) {
                        pass = false;
                        counter = Some("bracket functoriality".into());
                        break;
                    }
                }
            }
            ok &= check(&mut report, "weighting isomorphism and functoriality", pass, counter);
        }
    }
    let report = report.trim_end().to_string();
    if ok {
        Ok(report)
    } else {
        Err(CliError::failed(report))
    }
}
