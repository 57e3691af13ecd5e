//! Sparse multivariate polynomials over the rationals.
//!
//! A [`Poly`] lives in a [`Ring`]: an ordered list of variable names, each
//! with a positive integer weight. The cohomology ring uses `a`, `b`, `g`
//! (for alpha, beta, gamma) with weights 1, 2, 3; the auxiliary ring used by
//! the tridiagonal identities uses `z`, `a`, `b`, `s`, all of weight 1.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose order is
//! graded lexicographic, so two polynomials are equal iff their maps are.

mod linalg;
mod matrix;
mod modp;
mod quad;
mod text;

pub use linalg::{rref, rref_with_order, solve, Solution};
pub use matrix::{
    det_cofactor, det_poly_matrix, det_with, determinant_registry, Bareiss, Cofactor, DeterminantStrategy,
    PolyMatrix,
};
pub use modp::{det_mod_p, is_prime, mod_inv, mod_pow, next_prime, rat_mod, reduce_mod_p, ModPoly};
pub use quad::QuadExt;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Variable names and weights of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, u32)>) -> Arc<Ring> {
        let (names, weights) = vars.into_iter().map(|(n, w)| (n.into(), w)).unzip();
        Arc::new(Ring { names, weights })
    }

    /// `Q[a, b, g]` with weights 1, 2, 3.
    pub fn canonical() -> Arc<Ring> {
        static RING: OnceLock<Arc<Ring>> = OnceLock::new();
        RING.get_or_init(|| Ring::new([("a", 1), ("b", 2), ("g", 3)])).clone()
    }

    /// `Q[z, a, b, s]`, unweighted.
    pub fn auxiliary() -> Arc<Ring> {
        static RING: OnceLock<Arc<Ring>> = OnceLock::new();
        RING.get_or_init(|| Ring::new([("z", 1), ("a", 1), ("b", 1), ("s", 1)])).clone()
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// All monomials of weighted degree `d`, in ascending monomial order.
    pub fn monomials_of_weight(&self, d: u32) -> Vec<Monomial> {
        fn go(w: &[u32], left: u32, acc: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            let i = acc.len();
            if i == w.len() {
                if left == 0 {
                    out.push(Monomial(acc.clone()));
                }
                return;
            }
            for e in 0..=left / w[i] {
                acc.push(e);
                go(w, left - e * w[i], acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.weights, d, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn require(&self, name: &str) -> usize {
        self.index_of(name).unwrap_or_else(|| panic!("variable '{name}' not in ring {:?}", self.names))
    }
}

/// Exponent vector aligned with the variables of a ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Monomial)
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.0[var]
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with exact rational coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Operation selector for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Ring-checked arithmetic on two polynomials.
pub fn poly_arith(op: ArithOp, a: &Poly, b: &Poly) -> Result<Poly> {
    a.check_ring(b)?;
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    })
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Poly {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Poly {
        Poly::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Poly {
        let mut p = Poly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn var(ring: &Arc<Ring>, name: &str) -> Poly {
        let idx = ring.require(name);
        let mut exps = vec![0; ring.nvars()];
        exps[idx] = 1;
        Poly::monomial(ring, Monomial(exps), Rational::one())
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Rational) -> Poly {
        assert_eq!(m.0.len(), ring.nvars(), "monomial arity");
        let mut p = Poly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Build from `(coefficient, exponents)` pairs; like terms are combined.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Rational, Vec<u32>)>) -> Poly {
        let mut p = Poly::zero(ring);
        for (c, e) in terms {
            assert_eq!(e.len(), ring.nvars(), "monomial arity");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff_of(&self, exps: &[u32]) -> Rational {
        self.coeff(&Monomial(exps.to_vec()))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() == 0)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.ring.nvars()))
    }

    /// `Some(d)` if every term has weighted degree `d` (zero counts as degree 0).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let w = self.ring.weights();
        let mut degs = self.terms.keys().map(|m| m.weighted_degree(w));
        match degs.next() {
            None => Some(0),
            Some(d) => degs.all(|e| e == d).then_some(d),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// Highest exponent of `var` occurring in any term.
    pub fn degree_in(&self, var: &str) -> u32 {
        let i = self.ring.require(var);
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// True if `var` occurs in some term.
    pub fn involves(&self, var: &str) -> bool {
        self.degree_in(var) > 0
    }

    pub fn check_ring(&self, other: &Poly) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{:?} vs {:?}", self.ring.names, other.ring.names)))
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn scale_int(&self, c: i64) -> Poly {
        self.scale(&int(c))
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Division with remainder by repeated cancellation of leading terms.
    ///
    /// Terms of the running remainder whose monomial is not divisible by the
    /// leading monomial of `d` are moved to the remainder, so for univariate
    /// input this is ordinary long division.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        self.check_ring(d)?;
        let (lm, lc) = d.leading_term().ok_or_else(|| Error::InexactDivision("division by zero".into()))?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut q = Poly::zero(&self.ring);
        let mut rem = Poly::zero(&self.ring);
        let mut work = self.clone();
        while let Some((m, c)) = work.terms.pop_last() {
            match m.div(&lm) {
                Some(qm) => {
                    let qc = &c / &lc;
                    // leading terms cancel; subtract the rest of d * (qc qm)
                    for (dm, dc) in d.terms.iter().rev().skip(1) {
                        work.add_term(dm.mul(&qm), -(dc * &qc));
                    }
                    q.add_term(qm, qc);
                }
                None => rem.add_term(m, c),
            }
        }
        Ok((q, rem))
    }

    /// Exact quotient `self / d`; errors if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(format!("({self}) / ({d})")))
        }
    }

    /// Substitute polynomials (in the same ring) for the named variables.
    /// Unassigned variables pass through.
    pub fn specialize(&self, assignment: &[(&str, Poly)]) -> Poly {
        self.specialize_into(&self.ring.clone(), assignment).expect("same-ring specialization")
    }

    /// Substitute for the named variables and land in `target`. Variables that
    /// are not assigned must exist in `target` under the same name.
    pub fn specialize_into(&self, target: &Arc<Ring>, assignment: &[(&str, Poly)]) -> Result<Poly> {
        let n = self.ring.nvars();
        let mut images: Vec<Poly> = Vec::with_capacity(n);
        for (i, name) in self.ring.names.iter().enumerate() {
            if let Some((_, v)) = assignment.iter().find(|(v, _)| v == name) {
                if !same_ring(v.ring(), target) {
                    return Err(Error::RingMismatch(format!("value for '{name}' is not in the target ring")));
                }
                images.push(v.clone());
            } else if target.index_of(name).is_some() {
                images.push(Poly::var(target, name));
            } else {
                return Err(Error::RingMismatch(format!(
                    "variable '{}' (#{i}) has no image in {:?}",
                    name, target.names
                )));
            }
        }
        for (name, _) in assignment {
            if self.ring.index_of(name).is_none() {
                return Err(Error::RingMismatch(format!("unknown variable '{name}'")));
            }
        }
        // cache powers per variable
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(target), p.clone()]).collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Evaluate with all variables assigned rational values.
    pub fn eval(&self, values: &[(&str, Rational)]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = &self.ring.names[i];
                let v =
                    values.iter().find(|(n, _)| n == name).unwrap_or_else(|| panic!("no value for '{name}'"));
                t *= num_traits::pow(v.1.clone(), e as usize);
            }
            acc += t;
        }
        acc
    }

    /// Coefficients of a polynomial in `var` alone, lowest degree first.
    pub fn univariate_coeffs(&self, var: &str) -> Result<Vec<Rational>> {
        let idx = self.ring.require(var);
        let mut out = vec![Rational::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(i, &e)| i != idx && e != 0) {
                return Err(Error::Precondition(format!("polynomial involves variables other than '{var}'")));
            }
            out[m.0[idx] as usize] = c.clone();
        }
        if self.is_zero() {
            out.clear();
        }
        Ok(out)
    }

    /// Build `sum c_i var^i`.
    pub fn from_univariate(ring: &Arc<Ring>, var: &str, coeffs: &[Rational]) -> Poly {
        let idx = ring.require(var);
        let mut p = Poly::zero(ring);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; ring.nvars()];
            e[idx] = i as u32;
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Largest absolute numerator, for reporting coefficient growth.
    pub fn max_abs_numerator(&self) -> BigInt {
        self.terms.values().map(|c| c.numer().abs()).max().unwrap_or_else(BigInt::zero)
    }
}

/// Coefficients `M_j` of `beta^j alpha^(K-2j)` in a homogeneous polynomial of
/// weighted degree `K` over the canonical ring. Terms involving gamma are
/// ignored; the list has length `K/2 + 1`.
pub fn extract_m_coeffs(w: &Poly, k_degree: u32) -> Result<Vec<Rational>> {
    let ring = w.ring();
    let (ia, ib, ig) = (ring.require("a"), ring.require("b"), ring.require("g"));
    match w.homogeneous_degree() {
        Some(d) if d == k_degree || w.is_zero() => {}
        _ => return Err(Error::NotHomogeneous),
    }
    let mut out = vec![Rational::zero(); k_degree as usize / 2 + 1];
    for (m, c) in w.terms() {
        if m.0[ig] != 0 {
            continue;
        }
        let j = m.0[ib] as usize;
        debug_assert_eq!(m.0[ia] as usize + 2 * j, k_degree as usize);
        out[j] = c.clone();
    }
    Ok(out)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs).expect("add");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs).expect("sub");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs).expect("mul");
        let (small, large) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &small.terms {
            for (n, d) in &large.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Minimal commutative-ring interface used by the division-free determinant.
pub trait CommRing: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
}

impl CommRing for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(&self.ring)
    }
    fn one_like(&self) -> Self {
        Poly::one(&self.ring)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// Canonical-ring shorthands.
pub mod canon {
    use super::*;

    pub fn alpha() -> Poly {
        Poly::var(&Ring::canonical(), "a")
    }
    pub fn beta() -> Poly {
        Poly::var(&Ring::canonical(), "b")
    }
    pub fn gamma() -> Poly {
        Poly::var(&Ring::canonical(), "g")
    }
    pub fn konst(c: Rational) -> Poly {
        Poly::constant(&Ring::canonical(), c)
    }
    /// `c * a^i b^j g^k`
    pub fn mono(c: i64, i: u32, j: u32, k: u32) -> Poly {
        Poly::monomial(&Ring::canonical(), Monomial(vec![i, j, k]), int(c))
    }
}

#[cfg(test)]
mod tests {
    use super::canon::*;
    use super::*;

    #[test]
    fn weighted_monomial_counts() {
        let ring = Ring::canonical();
        // alpha^6, alpha^4 beta, alpha^2 beta^2, beta^3, alpha^3 gamma, alpha beta gamma, gamma^2
        assert_eq!(ring.monomials_of_weight(6).len(), 7);
        assert_eq!(ring.monomials_of_weight(0), vec![Monomial::one(3)]);
        assert!(ring.monomials_of_weight(9).iter().all(|m| m.weighted_degree(ring.weights()) == 9));
    }

    #[test]
    fn products_and_identity() {
        assert_eq!(&alpha() * &alpha(), mono(1, 2, 0, 0));
        let p = mono(1, 2, 0, 0) - beta();
        assert_eq!(&p * &Poly::one(&Ring::canonical()), p);
    }

    #[test]
    fn difference_of_squares_matches_termwise_expansion() {
        let a = alpha();
        let b = beta();
        let got = (&a - &b) * (&a + &b);
        // expand by hand: a*a + a*b - b*a - b*b
        let mut expected = Poly::zero(&Ring::canonical());
        for (x, sx) in [(&a, 1), (&b, -1)] {
            for (y, sy) in [(&a, 1), (&b, 1)] {
                expected = &expected + &(x * y).scale_int(sx * sy);
            }
        }
        assert_eq!(got, expected);
        assert_eq!(got, mono(1, 2, 0, 0) - mono(1, 0, 2, 0));
    }

    #[test]
    fn homogeneity_adds_under_multiplication() {
        let p = mono(1, 2, 0, 0) - beta();
        let q = mono(3, 3, 0, 0) + mono(1, 0, 0, 1);
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert_eq!(q.homogeneous_degree(), Some(3));
        assert_eq!((&p * &q).homogeneous_degree(), Some(5));
        assert_eq!((&p + &q).homogeneous_degree(), None);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let x = Poly::var(&Ring::auxiliary(), "z");
        assert!(matches!(poly_arith(ArithOp::Add, &alpha(), &x), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn specialize_examples() {
        let p = (mono(1, 2, 0, 0) - beta()).scale(&rat(1, 8));
        let at = p.specialize(&[("a", Poly::one(&Ring::canonical())), ("b", Poly::one(&Ring::canonical()))]);
        assert!(at.is_zero());
        let unchanged = p.specialize(&[("g", Poly::zero(&Ring::canonical()))]);
        assert_eq!(unchanged, p);
        let beta_only = p.specialize(&[("a", Poly::one(&Ring::canonical()))]);
        assert_eq!(beta_only, (Poly::one(&Ring::canonical()) - beta()).scale(&rat(1, 8)));
    }

    #[test]
    fn extract_m_examples() {
        let w = mono(1, 4, 0, 0) + mono(3, 2, 1, 0) + mono(1, 1, 0, 1);
        assert_eq!(extract_m_coeffs(&w, 4).unwrap(), vec![int(1), int(3), int(0)]);
        let w = mono(1, 2, 0, 0) - beta();
        assert_eq!(extract_m_coeffs(&w, 2).unwrap(), vec![int(1), int(-1)]);
        let w = mono(1, 0, 3, 0);
        assert_eq!(extract_m_coeffs(&w, 6).unwrap(), vec![int(0), int(0), int(0), int(1)]);
        let bad = mono(1, 2, 0, 0) + beta() + alpha();
        assert_eq!(extract_m_coeffs(&bad, 2), Err(Error::NotHomogeneous));
    }

    #[test]
    fn exact_division_and_remainder() {
        let a = alpha();
        let b = beta();
        let f = &a + &b;
        let g = &a - &b.scale_int(2);
        let prod = &f * &g;
        assert_eq!(prod.div_exact(&f).unwrap(), g);
        assert!(matches!(
            (&prod + &Poly::one(&Ring::canonical())).div_exact(&f),
            Err(Error::InexactDivision(_))
        ));
        // univariate long division: (b^2 + 1) = (b - 1)(b + 1) + 2
        let (q, r) = (&b * &b + Poly::one(&Ring::canonical()))
            .div_rem(&(&b - &Poly::one(&Ring::canonical())))
            .unwrap();
        assert_eq!(q, &b + &Poly::one(&Ring::canonical()));
        assert_eq!(r, konst(int(2)));
    }

    #[test]
    fn specialize_into_other_ring() {
        let aux = Ring::auxiliary();
        let p = Poly::var(&aux, "b").pow(2);
        let image = (Poly::one(&Ring::canonical()) - beta()).scale(&rat(1, 4));
        let got = p.specialize_into(&Ring::canonical(), &[("b", image.clone())]);
        // z, a, s have no image in the canonical ring
        assert!(got.is_err());
        let b_ring = Ring::new([("b", 1)]);
        let q = Poly::var(&b_ring, "b").pow(2);
        let got = q.specialize_into(&Ring::canonical(), &[("b", image.clone())]).unwrap();
        assert_eq!(got, image.pow(2));
    }
}
