//! The N=1 Heisenberg-Virasoro superalgebra: basis generators `L_m`, `H_m`,
//! `G_p`, `Q_p`, the bracket table, bilinear extension and the graded
//! Jacobi residual.

use crate::scalar::{HalfInt, Rat, Scalar};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("{kind} requires {expected} index, got {index}")]
    IndexParity {
        kind: GenKind,
        expected: &'static str,
        index: String,
    },
}

/// Generator kind. The ordering (`L < H < G < Q`) is the canonical
/// printing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    L,
    H,
    G,
    Q,
}

impl GenKind {
    pub fn is_even(self) -> bool {
        matches!(self, GenKind::L | GenKind::H)
    }

    /// Even kinds carry integer indices, odd kinds strict half-integers.
    pub fn admits(self, index: &HalfInt) -> bool {
        if self.is_even() {
            index.is_integer()
        } else {
            index.is_strict_half()
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            GenKind::L => 'L',
            GenKind::H => 'H',
            GenKind::G => 'G',
            GenKind::Q => 'Q',
        };
        write!(f, "{}", c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Parity classification of a general element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityClass {
    Even,
    Odd,
    Mixed,
}

/// A basis generator of the superalgebra.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    kind: GenKind,
    index: HalfInt,
}

impl Generator {
    pub fn new(kind: GenKind, index: HalfInt) -> Result<Self, AlgebraError> {
        if kind.admits(&index) {
            Ok(Generator { kind, index })
        } else {
            Err(AlgebraError::IndexParity {
                kind,
                expected: if kind.is_even() {
                    "an integer"
                } else {
                    "a strict half-integer"
                },
                index: index.to_string(),
            })
        }
    }

    /// `L_m` or `H_m`.
    pub fn even(kind: GenKind, m: i64) -> Self {
        Generator::new(kind, HalfInt::from_int(m)).unwrap()
    }

    /// `G_{d/2}` or `Q_{d/2}` from the doubled index `d` (must be odd).
    pub fn odd(kind: GenKind, doubled: i64) -> Self {
        Generator::new(kind, HalfInt::from_doubled(doubled)).unwrap()
    }

    pub fn kind(&self) -> GenKind {
        self.kind
    }

    pub fn index(&self) -> &HalfInt {
        &self.index
    }

    pub fn parity(&self) -> Parity {
        if self.kind.is_even() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.kind, self.index)
    }
}

/// Finite Scalar-linear combination of basis generators, kept in canonical
/// form (no zero coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Generator, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn basis(g: Generator) -> Self {
        AlgebraElement::term(g, Scalar::one())
    }

    pub fn term(g: Generator, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(g, c);
        }
        AlgebraElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, g: Generator, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (g, a) in &self.terms {
            out.insert(g.clone(), a * c);
        }
        out
    }

    /// Uniform parity of the support, or `Mixed`.
    pub fn parity(&self) -> ParityClass {
        let mut seen: Option<Parity> = None;
        for g in self.terms.keys() {
            match (seen, g.parity()) {
                (None, p) => seen = Some(p),
                (Some(p), q) if p == q => {}
                _ => return ParityClass::Mixed,
            }
        }
        match seen {
            // zero is even by convention
            Some(Parity::Even) | None => ParityClass::Even,
            Some(Parity::Odd) => ParityClass::Odd,
        }
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.insert(g.clone(), c.clone());
        }
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.insert(g.clone(), -c);
        }
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect(),
        }
    }
}

/// Bracket of two basis generators per the defining table. Orderings not in
/// the table are filled by super-antisymmetry `[b,a] = -(-1)^{|a||b|}[a,b]`.
pub fn bracket_basis(a: &Generator, b: &Generator) -> AlgebraElement {
    use GenKind::*;
    let sum = a.index() + b.index();
    let am = a.index().to_rat();
    let bm = b.index().to_rat();
    let half = Rat::new(1.into(), 2.into());
    match (a.kind(), b.kind()) {
        // [L_m, L_n] = (m - n) L_{m+n}
        (L, L) => scaled(L, sum, &am - &bm),
        // [L_m, H_n] = -n H_{m+n}
        (L, H) => scaled(H, sum, -&bm),
        (H, L) => scaled(H, sum, am),
        // [L_m, G_p] = (m/2 - p) G_{m+p}
        (L, G) => scaled(G, sum, &am * &half - &bm),
        (G, L) => scaled(G, sum, &am - &bm * &half),
        // [L_m, Q_p] = -(m/2 + p) Q_{m+p}
        (L, Q) => scaled(Q, sum, -(&am * &half + &bm)),
        (Q, L) => scaled(Q, sum, &bm * &half + &am),
        // [H_m, G_p] = m Q_{m+p}
        (H, G) => scaled(Q, sum, am),
        (G, H) => scaled(Q, sum, -bm),
        // [G_p, G_q] = 2 L_{p+q}  (symmetric: [G_q, G_p] carries no sign flip)
        (G, G) => scaled(L, sum, Rat::from_integer(2.into())),
        // [G_p, Q_q] = H_{p+q}, and [Q_q, G_p] = +H_{p+q}
        (G, Q) | (Q, G) => scaled(H, sum, Rat::from_integer(1.into())),
        (H, H) | (H, Q) | (Q, H) | (Q, Q) => AlgebraElement::zero(),
    }
}

fn scaled(kind: GenKind, index: HalfInt, c: Rat) -> AlgebraElement {
    if c.is_zero() {
        return AlgebraElement::zero();
    }
    AlgebraElement::term(
        Generator::new(kind, index).expect("bracket table preserves index parity"),
        Scalar::from_rat(c),
    )
}

/// Bilinear extension of the bracket table. Signs for mixed-parity inputs
/// are applied per homogeneous component, which bilinearity already does.
pub fn bracket(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (ga, ca) in a.iter() {
        for (gb, cb) in b.iter() {
            let br = bracket_basis(ga, gb);
            out = &out + &br.scale(&(ca * cb));
        }
    }
    out
}

/// Graded Jacobi residual
/// `(-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]] + (-1)^{|c||b|}[c,[a,b]]`,
/// which must vanish identically.
pub fn jacobi_residual(a: &Generator, b: &Generator, c: &Generator) -> AlgebraElement {
    let ea = AlgebraElement::basis(a.clone());
    let eb = AlgebraElement::basis(b.clone());
    let ec = AlgebraElement::basis(c.clone());
    let sgn = |x: &Generator, y: &Generator| {
        if x.parity() == Parity::Odd && y.parity() == Parity::Odd {
            -1i64
        } else {
            1
        }
    };
    let t1 = bracket(&ea, &bracket(&eb, &ec)).scale(&Scalar::from_int(sgn(a, c)));
    let t2 = bracket(&eb, &bracket(&ec, &ea)).scale(&Scalar::from_int(sgn(b, a)));
    let t3 = bracket(&ec, &bracket(&ea, &eb)).scale(&Scalar::from_int(sgn(c, b)));
    &(&t1 + &t2) + &t3
}

/// All basis generators whose doubled index lies in `[-window, window]`.
pub fn generators_in_window(window: i64) -> Vec<Generator> {
    let mut out = Vec::new();
    for kind in [GenKind::L, GenKind::H, GenKind::G, GenKind::Q] {
        for d in -window..=window {
            let idx = HalfInt::from_doubled(d);
            if kind.admits(&idx) {
                out.push(Generator::new(kind, idx).unwrap());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn l(m: i64) -> Generator {
        Generator::even(GenKind::L, m)
    }
    fn h(m: i64) -> Generator {
        Generator::even(GenKind::H, m)
    }
    fn g(d: i64) -> Generator {
        Generator::odd(GenKind::G, d)
    }
    fn q(d: i64) -> Generator {
        Generator::odd(GenKind::Q, d)
    }

    #[test]
    fn bracket_table_examples() {
        // [L2, L3] = -L5
        assert_eq!(
            bracket_basis(&l(2), &l(3)),
            AlgebraElement::term(l(5), Scalar::from_int(-1))
        );
        // [G_{1/2}, G_{3/2}] = 2 L2
        assert_eq!(
            bracket_basis(&g(1), &g(3)),
            AlgebraElement::term(l(2), Scalar::from_int(2))
        );
        // [H2, Q_{1/2}] = 0
        assert!(bracket_basis(&h(2), &q(1)).is_zero());
        // [L1, Q_{1/2}] = -Q_{3/2}
        assert_eq!(
            bracket_basis(&l(1), &q(1)),
            AlgebraElement::term(q(3), Scalar::from_int(-1))
        );
        // [L1, G_{1/2}] = 0 since m/2 - p = 0
        assert!(bracket_basis(&l(1), &g(1)).is_zero());
        // [H1, G_{1/2}] = Q_{3/2}
        assert_eq!(
            bracket_basis(&h(1), &g(1)),
            AlgebraElement::term(q(3), Scalar::from_int(1))
        );
    }

    #[test]
    fn super_antisymmetry_window() {
        for a in generators_in_window(6) {
            for b in generators_in_window(6) {
                let sign = if a.parity() == Parity::Odd && b.parity() == Parity::Odd {
                    1
                } else {
                    -1
                };
                let lhs = bracket_basis(&b, &a);
                let rhs = bracket_basis(&a, &b).scale(&Scalar::from_int(sign));
                assert_eq!(lhs, rhs, "antisymmetry failed for {a}, {b}");
            }
        }
    }

    #[test]
    fn h0_is_central() {
        let h0 = h(0);
        for x in generators_in_window(6) {
            assert!(bracket_basis(&h0, &x).is_zero(), "[H0, {x}] != 0");
            assert!(bracket_basis(&x, &h0).is_zero(), "[{x}, H0] != 0");
        }
    }

    #[test]
    fn jacobi_examples() {
        assert!(jacobi_residual(&l(1), &l(2), &l(3)).is_zero());
        assert!(jacobi_residual(&g(1), &g(1), &l(1)).is_zero());
        assert!(jacobi_residual(&h(1), &g(1), &q(-1)).is_zero());
    }

    #[test]
    fn parity_classification() {
        assert_eq!(
            AlgebraElement::basis(l(3)).parity(),
            ParityClass::Even
        );
        assert_eq!(AlgebraElement::basis(q(1)).parity(), ParityClass::Odd);
        let mixed = &AlgebraElement::basis(l(1)) + &AlgebraElement::basis(g(1));
        assert_eq!(mixed.parity(), ParityClass::Mixed);
    }

    #[test]
    fn index_parity_enforced() {
        assert!(Generator::new(GenKind::G, HalfInt::from_int(1)).is_err());
        assert!(Generator::new(GenKind::L, HalfInt::from_doubled(3)).is_err());
    }

    #[test]
    fn half_coefficient_bracket() {
        // [L1, G_{3/2}] = (1/2 - 3/2) G_{5/2} = -G_{5/2}
        assert_eq!(
            bracket_basis(&l(1), &g(3)),
            AlgebraElement::term(g(5), Scalar::from_rat(rat(-1, 1)))
        );
    }
}
