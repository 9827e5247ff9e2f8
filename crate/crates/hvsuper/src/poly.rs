//! Sparse exact bivariate polynomials over [`Scalar`].
//!
//! One abstract variable pair `(u, v)` backs both `(x, y)` and `(s, t)`;
//! the parity of the surrounding module component decides how a value is
//! rendered. [`UniPoly`] is the single-variable companion used for `β(y)`,
//! `g(y)` and the coefficient decompositions.

use crate::scalar::{Rat, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("divisor must be monic")]
    NonMonic,
    #[error("divisor must have degree >= 1")]
    ZeroDegree,
    #[error("leading coefficient is not a unit of the scalar ring")]
    NonUnitLead,
}

/// Sparse polynomial in the single designated variable `v`, coefficients in
/// the Laurent scalar ring.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, Scalar>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c);
        }
        UniPoly { coeffs }
    }

    /// The variable itself.
    pub fn var() -> Self {
        UniPoly::term(1, Scalar::one())
    }

    /// `c · v^d`.
    pub fn term(d: u32, c: Scalar) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(d, c);
        }
        UniPoly { coeffs }
    }

    /// Build from rational coefficients, lowest degree first.
    pub fn from_rats(cs: &[Rat]) -> Self {
        let mut out = UniPoly::zero();
        for (d, c) in cs.iter().enumerate() {
            out.insert(d as u32, Scalar::from_rat(c.clone()));
        }
        out
    }

    /// `v - b`.
    pub fn linear(b: &Rat) -> Self {
        &UniPoly::var() - &UniPoly::constant(Scalar::from_rat(b.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.values().next_back()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(|c| c.is_one()).unwrap_or(false)
    }

    /// True when every coefficient is a λ-free rational.
    pub fn is_lambda_free(&self) -> bool {
        self.coeffs.values().all(|c| c.is_rational())
    }

    pub fn coeff(&self, d: u32) -> Scalar {
        self.coeffs.get(&d).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&u32, &Scalar)> {
        self.coeffs.iter()
    }

    fn insert(&mut self, d: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(d) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_owned(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        let mut out = UniPoly::zero();
        for (d, a) in &self.coeffs {
            out.insert(*d, a * c);
        }
        out
    }

    /// Evaluate at a rational point; the result is a scalar.
    pub fn eval_rat(&self, at: &Rat) -> Scalar {
        let mut acc = Scalar::zero();
        let mut pow = Rat::one();
        let mut prev = 0u32;
        for (d, c) in &self.coeffs {
            for _ in prev..*d {
                pow *= at;
            }
            prev = *d;
            acc += &c.scale(&pow);
        }
        acc
    }

    /// Division with remainder; the divisor's leading coefficient must be a
    /// unit (for the λ-free rational `g` used throughout, it always is).
    pub fn div_rem(&self, g: &UniPoly) -> Result<(UniPoly, UniPoly), PolyError> {
        let gdeg = g.degree().ok_or(PolyError::ZeroDivisor)?;
        let lead_inv = g
            .leading()
            .unwrap()
            .invert()
            .map_err(|_| PolyError::NonUnitLead)?;
        let mut rem = self.clone();
        let mut quot = UniPoly::zero();
        while let Some(rdeg) = rem.degree() {
            if rdeg < gdeg {
                break;
            }
            let c = &rem.leading().unwrap().clone() * &lead_inv;
            let shift = rdeg - gdeg;
            let step = UniPoly::term(shift, c);
            quot = &quot + &step;
            rem = &rem - &(&step * g);
        }
        Ok((quot, rem))
    }

    /// Embed as a polynomial in the second variable of a [`BiPoly`].
    pub fn to_bipoly_v(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (d, c) in &self.coeffs {
            out.insert(0, *d, c.clone());
        }
        out
    }

    /// Embed as a polynomial in the first variable of a [`BiPoly`].
    pub fn to_bipoly_u(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (d, c) in &self.coeffs {
            out.insert(*d, 0, c.clone());
        }
        out
    }

    /// Substitute `v := v + h`.
    pub fn shift(&self, h: &Rat) -> UniPoly {
        if h.is_zero() {
            return self.clone();
        }
        let Some(max_d) = self.degree() else {
            return UniPoly::zero();
        };
        let factors = binomial_shift_factors(max_d, h);
        let mut out = UniPoly::zero();
        for (d, c) in &self.coeffs {
            out.insert(*d, c.clone());
            let row = &factors[*d as usize];
            for k in 0..*d {
                out.insert(k, c.scale(&row[k as usize]));
            }
        }
        out
    }
}

/// `rows[i][k] = C(i,k)·h^{i−k}` for `k < i ≤ max_deg` — the sub-leading
/// coefficients of `(u+h)^i` — built with integer Pascal rows and cached
/// powers of `h` (no rational division).
fn binomial_shift_factors(max_deg: u32, h: &Rat) -> Vec<Vec<Rat>> {
    let n = max_deg as usize;
    let mut hpow: Vec<Rat> = Vec::with_capacity(n + 1);
    hpow.push(Rat::one());
    for _ in 0..n {
        let next = hpow.last().unwrap() * h;
        hpow.push(next);
    }
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n + 1);
    rows.push(Vec::new());
    let mut pascal: Vec<BigInt> = vec![BigInt::one()];
    for i in 1..=n {
        let mut next_row = vec![BigInt::one()];
        for k in 1..i {
            next_row.push(&pascal[k - 1] + &pascal[k]);
        }
        next_row.push(BigInt::one());
        rows.push(
            (0..i)
                .map(|k| Rat::from_integer(next_row[k].clone()) * &hpow[i - k])
                .collect(),
        );
        pascal = next_row;
    }
    rows
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.insert(*d, c.clone());
        }
        out
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.insert(*d, -c);
        }
        out
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (da, ca) in &self.coeffs {
            for (db, cb) in &rhs.coeffs {
                out.insert(da + db, ca * cb);
            }
        }
        out
    }
}

/// Sparse bivariate polynomial over [`Scalar`]. No zero coefficients are
/// stored; equality is structural on this canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        BiPoly::term(0, 0, c)
    }

    /// First variable (`x` or `s`).
    pub fn var_u() -> Self {
        BiPoly::term(1, 0, Scalar::one())
    }

    /// Second variable (`y` or `t`).
    pub fn var_v() -> Self {
        BiPoly::term(0, 1, Scalar::one())
    }

    /// `c · u^i v^j`.
    pub fn term(i: u32, j: u32, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Scalar {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn deg_u(&self) -> Option<u32> {
        self.terms.keys().map(|(i, _)| *i).max()
    }

    pub fn deg_v(&self) -> Option<u32> {
        self.terms.keys().map(|(_, j)| *j).max()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    fn insert(&mut self, i: u32, j: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_owned(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        // keys are unchanged and already sorted; products of nonzero
        // scalars are nonzero in ℚ[λ,λ⁻¹]
        BiPoly {
            terms: self.terms.iter().map(|(k, a)| (*k, a * c)).collect(),
        }
    }

    /// Substitute `u := u + h`; `v` is untouched. Uses the synthetic Taylor
    /// shift (repeated Horner division by `u − h`) on a dense grid:
    /// `deg_u·(deg_u+1)/2` in-place multiply-adds, no binomial bookkeeping.
    pub fn shift_u(&self, h: &Rat) -> BiPoly {
        if h.is_zero() {
            return self.clone();
        }
        let (Some(du), Some(dv)) = (self.deg_u(), self.deg_v()) else {
            return BiPoly::zero();
        };
        let mut acc = DenseGrid::new(du, dv);
        for ((i, j), c) in &self.terms {
            acc.add(*i, *j, c.clone());
        }
        let d = du as usize;
        for k in 0..d {
            for i in (k..d).rev() {
                // row i += h · row i+1
                for j in 0..=dv {
                    let (lo, hi) = acc.mul_add_pair(i, j);
                    if let Some(src) = hi {
                        lo.add_scaled(src, h);
                    }
                }
            }
        }
        acc.into_poly()
    }

    /// `(u + q(v))·f` in one dense pass: the `u` part is a pure re-keying
    /// and `q` must not involve `u`.
    pub fn mul_affine_u(&self, q: &BiPoly) -> BiPoly {
        debug_assert!(q.deg_u().unwrap_or(0) == 0);
        let (Some(fu), Some(fv)) = (self.deg_u(), self.deg_v()) else {
            return BiPoly::zero();
        };
        let qv = q.deg_v().unwrap_or(0);
        let mut acc = DenseGrid::new(fu + 1, fv + qv);
        for ((i, j), c) in &self.terms {
            acc.add(i + 1, *j, c.clone());
            for ((_, jq), cq) in &q.terms {
                acc.add_mul(*i, j + jq, c, cq);
            }
        }
        acc.into_poly()
    }

    /// Multiply by the first variable: a pure re-keying of the term map,
    /// with no coefficient arithmetic.
    pub fn times_u(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + 1, j), c.clone()))
                .collect(),
        }
    }

    /// Multiply by the second variable (same re-keying trick).
    pub fn times_v(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i, j + 1), c.clone()))
                .collect(),
        }
    }

    /// The decomposition `f = Σ uⁱ·fᵢ(v)` as the list `[f₀, …, f_k]`.
    /// The trailing entry is nonzero unless `f = 0` (empty list).
    pub fn u_coefficients(&self) -> Vec<UniPoly> {
        let Some(top) = self.deg_u() else {
            return Vec::new();
        };
        let mut out = vec![UniPoly::zero(); top as usize + 1];
        for ((i, j), c) in &self.terms {
            out[*i as usize].insert(*j, c.clone());
        }
        out
    }

    /// Inverse of [`BiPoly::u_coefficients`].
    pub fn from_u_coefficients(coeffs: &[UniPoly]) -> BiPoly {
        let mut out = BiPoly::zero();
        for (i, f) in coeffs.iter().enumerate() {
            for (j, c) in f.iter() {
                out.insert(i as u32, *j, c.clone());
            }
        }
        out
    }

    /// Specialize the second variable to a rational point.
    pub fn eval_v(&self, b: &Rat) -> UniPoly {
        let mut out = UniPoly::zero();
        for ((i, j), c) in &self.terms {
            let mut pow = Rat::one();
            for _ in 0..*j {
                pow *= b;
            }
            out.insert(*i, c.scale(&pow));
        }
        out
    }

    /// Remainder of every `u`-coefficient modulo the monic `g(v)` with
    /// `deg g ≥ 1`; the result satisfies `deg_v < deg g`.
    pub fn rem_v(&self, g: &UniPoly) -> Result<BiPoly, PolyError> {
        match g.degree() {
            None => return Err(PolyError::ZeroDivisor),
            Some(0) => return Err(PolyError::ZeroDegree),
            Some(_) => {}
        }
        if !g.is_monic() {
            return Err(PolyError::NonMonic);
        }
        let coeffs: Result<Vec<UniPoly>, PolyError> = self
            .u_coefficients()
            .iter()
            .map(|f| f.div_rem(g).map(|(_, r)| r))
            .collect();
        Ok(BiPoly::from_u_coefficients(&coeffs?))
    }

    /// Exact quotient by `g(v)` applied to every `u`-coefficient, or `None`
    /// when some coefficient is not divisible.
    pub fn div_v_exact(&self, g: &UniPoly) -> Result<Option<BiPoly>, PolyError> {
        if g.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        let mut quots = Vec::new();
        for f in self.u_coefficients() {
            let (q, r) = f.div_rem(g)?;
            if !r.is_zero() {
                return Ok(None);
            }
            quots.push(q);
        }
        Ok(Some(BiPoly::from_u_coefficients(&quots)))
    }

    /// True iff `g(v)` divides every `u`-coefficient exactly.
    pub fn divisible_v(&self, g: &UniPoly) -> Result<bool, PolyError> {
        Ok(self.div_v_exact(g)?.is_some())
    }

}

/// Dense accumulation grid for low-degree shifts and products; avoids the
/// per-collision `BTreeMap` traffic of repeated sparse inserts and collects
/// into the canonical sparse map once at the end.
struct DenseGrid {
    cols: usize,
    cells: Vec<Scalar>,
}

impl DenseGrid {
    fn new(max_i: u32, max_j: u32) -> Self {
        let cols = max_j as usize + 1;
        DenseGrid {
            cols,
            cells: vec![Scalar::zero(); (max_i as usize + 1) * cols],
        }
    }

    fn add(&mut self, i: u32, j: u32, c: Scalar) {
        self.cells[i as usize * self.cols + j as usize].add_owned(c);
    }

    /// `cell(i,j) += a·b` without an intermediate scalar.
    fn add_mul(&mut self, i: u32, j: u32, a: &Scalar, b: &Scalar) {
        self.cells[i as usize * self.cols + j as usize].add_mul(a, b);
    }

    /// Borrow cell `(i, j)` mutably together with cell `(i+1, j)`, the
    /// source of a Horner multiply-add.
    fn mul_add_pair(&mut self, i: usize, j: u32) -> (&mut Scalar, Option<&Scalar>) {
        let cols = self.cols;
        let hi_idx = (i + 1) * cols + j as usize;
        let (left, right) = self.cells.split_at_mut(hi_idx);
        let hi = &right[0];
        let lo = &mut left[i * cols + j as usize];
        (lo, if hi.is_zero() { None } else { Some(hi) })
    }

    fn into_poly(self) -> BiPoly {
        let cols = self.cols;
        let terms = self
            .cells
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| (((idx / cols) as u32, (idx % cols) as u32), c))
            .collect();
        BiPoly { terms }
    }
}

/// Two-pointer merge of the sorted term maps; `neg` negates the right-hand
/// side. Builds the result in ascending key order without tree re-inserts.
fn merge_combine(a: &BiPoly, b: &BiPoly, neg: bool) -> BiPoly {
    let mut out = BTreeMap::new();
    let mut ia = a.terms.iter().peekable();
    let mut ib = b.terms.iter().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (Some((ka, _)), Some((kb, _))) => {
                if ka < kb {
                    let (k, c) = ia.next().unwrap();
                    out.insert(*k, c.clone());
                } else if kb < ka {
                    let (k, c) = ib.next().unwrap();
                    out.insert(*k, if neg { -c } else { c.clone() });
                } else {
                    let (k, ca) = ia.next().unwrap();
                    let (_, cb) = ib.next().unwrap();
                    let sum = if neg { ca - cb } else { ca + cb };
                    if !sum.is_zero() {
                        out.insert(*k, sum);
                    }
                }
            }
            (Some(_), None) => {
                let (k, c) = ia.next().unwrap();
                out.insert(*k, c.clone());
            }
            (None, Some(_)) => {
                let (k, c) = ib.next().unwrap();
                out.insert(*k, if neg { -c } else { c.clone() });
            }
            (None, None) => break,
        }
    }
    BiPoly { terms: out }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        merge_combine(self, rhs, false)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        merge_combine(self, rhs, true)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i, j), -c))
                .collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let (Some(au), Some(av)) = (self.deg_u(), self.deg_v()) else {
            return BiPoly::zero();
        };
        let (Some(bu), Some(bv)) = (rhs.deg_u(), rhs.deg_v()) else {
            return BiPoly::zero();
        };
        let (du, dv) = (au + bu, av + bv);
        if (du as u64 + 1) * (dv as u64 + 1) <= 4096 {
            let mut acc = DenseGrid::new(du, dv);
            for ((ia, ja), ca) in &self.terms {
                for ((ib, jb), cb) in &rhs.terms {
                    acc.add_mul(ia + ib, ja + jb, ca, cb);
                }
            }
            return acc.into_poly();
        }
        let mut out = BiPoly::zero();
        for ((ia, ja), ca) in &self.terms {
            for ((ib, jb), cb) in &rhs.terms {
                out.insert(ia + ib, ja + jb, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint};

    fn u() -> BiPoly {
        BiPoly::var_u()
    }

    fn v() -> BiPoly {
        BiPoly::var_v()
    }

    #[test]
    fn shift_u_binomial() {
        let f = &u() * &u();
        let shifted = f.shift_u(&rint(1));
        let expect = &(&f + &u().scale(&Scalar::from_int(2))) + &BiPoly::one();
        assert_eq!(shifted, expect);
    }

    #[test]
    fn shift_u_ignores_v() {
        let f = &(&v() * &v()) * &v();
        assert_eq!(f.shift_u(&rint(-7)), f);
    }

    #[test]
    fn shift_u_half() {
        let f = &u() * &v();
        let expect = &f + &v().scale(&Scalar::from_rat(rat(1, 2)));
        assert_eq!(f.shift_u(&rat(1, 2)), expect);
    }

    #[test]
    fn variable_products_and_affine() {
        let f = &(&(&u() * &u()) * &v()) + &u().scale(&Scalar::from_rat(rat(1, 2)));
        assert_eq!(f.times_u(), &u() * &f);
        assert_eq!(f.times_v(), &v() * &f);
        let q = &v().scale(&Scalar::from_int(3)) + &BiPoly::constant(Scalar::from_rat(rat(-1, 2)));
        assert_eq!(f.mul_affine_u(&q), &(&u() + &q) * &f);
        assert_eq!(BiPoly::zero().mul_affine_u(&q), BiPoly::zero());
        assert_eq!(f.mul_affine_u(&BiPoly::zero()), f.times_u());
    }

    #[test]
    fn u_coefficient_decomposition() {
        // u²v + 3 → [3, 0, v]
        let f = &(&(&u() * &u()) * &v()) + &BiPoly::constant(Scalar::from_int(3));
        let cs = f.u_coefficients();
        assert_eq!(
            cs,
            vec![
                UniPoly::constant(Scalar::from_int(3)),
                UniPoly::zero(),
                UniPoly::var()
            ]
        );
        assert_eq!(BiPoly::from_u_coefficients(&cs), f);

        assert!(BiPoly::zero().u_coefficients().is_empty());

        // u(v²+1) → [0, v²+1]
        let g = &u() * &(&(&v() * &v()) + &BiPoly::one());
        assert_eq!(
            g.u_coefficients(),
            vec![UniPoly::zero(), &(&UniPoly::var() * &UniPoly::var()) + &UniPoly::one()]
        );
    }

    #[test]
    fn divisibility() {
        let vm1 = UniPoly::linear(&rint(1));
        let f = &vm1.to_bipoly_v() * &(&(&u() * &u()) * &u());
        assert!(f.divisible_v(&vm1).unwrap());
        assert!(!u().divisible_v(&vm1).unwrap());

        let v2 = &UniPoly::var() * &UniPoly::var();
        let f2 = &(&(&(&v() * &v()) * &v()) * &u()) + &(&v() * &v());
        assert!(f2.divisible_v(&v2).unwrap());

        assert_eq!(u().divisible_v(&UniPoly::zero()), Err(PolyError::ZeroDivisor));
    }

    #[test]
    fn remainder_v() {
        let vm1 = UniPoly::linear(&rint(1));
        assert_eq!((&v() * &v()).rem_v(&vm1).unwrap(), BiPoly::one());

        let v2 = &UniPoly::var() * &UniPoly::var();
        let f = &(&u() * &(&v() * &v())) + &v();
        assert_eq!(f.rem_v(&v2).unwrap(), v());

        let g = UniPoly::linear(&rint(5));
        let f3 = u().scale(&Scalar::from_int(3));
        assert_eq!(f3.rem_v(&g).unwrap(), f3);

        assert_eq!(f3.rem_v(&UniPoly::one()), Err(PolyError::ZeroDegree));
        let non_monic = UniPoly::term(1, Scalar::from_int(2));
        assert_eq!(f3.rem_v(&non_monic), Err(PolyError::NonMonic));
    }

    #[test]
    fn rem_witness() {
        // f - rem is divisible by g
        let g = &UniPoly::linear(&rint(2)) * &UniPoly::linear(&rint(-1));
        let f = &(&(&u() * &v()) * &(&v() * &v())) + &(&u() * &u());
        let r = f.rem_v(&g).unwrap();
        assert!((&f - &r).divisible_v(&g).unwrap());
        assert!(r.deg_v().unwrap_or(0) < 2);
    }
}
