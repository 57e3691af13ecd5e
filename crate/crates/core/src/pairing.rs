//! Intersection numbers of top-degree classes on the moduli space.
//!
//! Two engines sit behind [`PairingEngine`]. The quotient engine works in
//! `Q[alpha, beta, gamma] / I_g` for the two genera whose relation ideals are
//! known explicitly, doing linear algebra one weighted degree at a time. The
//! closed-form engine evaluates Thaddeus' formula for any genus.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::certify::top_residue;
use crate::chern::binomial;
use crate::error::{Error, Result};
use crate::poly::{canon::mono, rref_with_order, solve, Monomial, Poly, Rational, Ring, Solution};

/// Generators of the relation ideal `I_g`.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealPresentation {
    pub g: u32,
    pub generators: Vec<(String, Poly)>,
}

fn poly_of(terms: &[(i64, u32, u32, u32)]) -> Poly {
    terms.iter().fold(Poly::zero(&Ring::canonical()), |acc, &(c, i, j, k)| acc + mono(c, i, j, k))
}

impl IdealPresentation {
    pub fn for_genus(g: u32) -> Result<IdealPresentation> {
        let generators = match g {
            3 => vec![
                ("zeta3", poly_of(&[(1, 3, 0, 0), (5, 1, 1, 0), (4, 0, 0, 1)])),
                ("eta4", poly_of(&[(1, 4, 0, 0), (2, 2, 1, 0), (-3, 0, 2, 0)])),
                ("eta5", poly_of(&[(2, 5, 0, 0), (7, 3, 1, 0)])),
            ],
            4 => vec![
                ("zeta4", poly_of(&[(1, 4, 0, 0), (14, 2, 1, 0), (9, 0, 2, 0), (16, 1, 0, 1)])),
                (
                    "zeta5",
                    poly_of(&[(1, 5, 0, 0), (30, 3, 1, 0), (89, 1, 2, 0), (40, 2, 0, 1), (88, 0, 1, 1)]),
                ),
                (
                    "zeta6",
                    poly_of(&[
                        (1, 6, 0, 0),
                        (55, 4, 1, 0),
                        (439, 2, 2, 0),
                        (225, 0, 3, 0),
                        (80, 3, 0, 1),
                        (688, 1, 1, 1),
                        (160, 0, 0, 2),
                    ]),
                ),
            ],
            _ => return Err(Error::EngineUnavailable(format!("no relation ideal available for g = {g}"))),
        };
        Ok(IdealPresentation {
            g,
            generators: generators.into_iter().map(|(n, p)| (n.to_string(), p)).collect(),
        })
    }

    pub fn top_degree(&self) -> u32 {
        3 * self.g - 3
    }

    fn generator_degree(p: &Poly) -> u32 {
        p.homogeneous_degree().expect("generators are homogeneous")
    }
}

/// The quotient in one weighted degree: the span of the ideal in reduced
/// echelon form, and the monomials left over as a basis of the quotient.
#[derive(Debug, Clone)]
struct DegreePiece {
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    echelon: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    basis: Vec<usize>,
}

impl DegreePiece {
    fn build(ideal: &IdealPresentation, d: u32) -> DegreePiece {
        let ring = Ring::canonical();
        let monomials = ring.monomials_of_weight(d);
        let index: BTreeMap<Monomial, usize> =
            monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for (_, gen) in &ideal.generators {
            let gd = IdealPresentation::generator_degree(gen);
            if gd > d {
                continue;
            }
            for m in ring.monomials_of_weight(d - gd) {
                let prod = gen * &Poly::monomial(&ring, m, Rational::one());
                let mut row = vec![Rational::zero(); monomials.len()];
                for (mm, c) in prod.terms() {
                    row[index[mm]] = c.clone();
                }
                rows.push(row);
            }
        }
        // Pivot on the largest monomials first so the quotient basis is made
        // of the smallest ones.
        let order: Vec<usize> = (0..monomials.len()).rev().collect();
        let pivots = rref_with_order(&mut rows, &order);
        let basis = (0..monomials.len()).filter(|c| !pivots.contains(c)).collect();
        DegreePiece { monomials, index, echelon: rows, pivots, basis }
    }

    fn coordinates(&self, p: &Poly) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.monomials.len()];
        for (m, c) in p.terms() {
            v[self.index[m]] = c.clone();
        }
        for (row, &col) in self.echelon.iter().zip(&self.pivots) {
            if v[col].is_zero() {
                continue;
            }
            let f = v[col].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis.iter().map(|&i| v[i].clone()).collect()
    }
}

/// Normal form of a class: coordinates on the quotient basis in its degree.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalForm {
    pub degree: u32,
    pub basis: Vec<Monomial>,
    pub coords: Vec<Rational>,
}

impl NormalForm {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn to_poly(&self) -> Poly {
        let ring = Ring::canonical();
        self.basis
            .iter()
            .zip(&self.coords)
            .fold(Poly::zero(&ring), |acc, (m, c)| acc + Poly::monomial(&ring, m.clone(), c.clone()))
    }
}

/// `Q[alpha, beta, gamma] / I_g` graded piece by piece up to the top degree.
#[derive(Debug, Clone)]
pub struct QuotientEngine {
    ideal: IdealPresentation,
    pieces: Vec<DegreePiece>,
    lambda: Option<Rational>,
}

impl QuotientEngine {
    /// Unnormalised engine.
    pub fn new(g: u32) -> Result<QuotientEngine> {
        let ideal = IdealPresentation::for_genus(g)?;
        let pieces = (0..=ideal.top_degree()).map(|d| DegreePiece::build(&ideal, d)).collect();
        let engine = QuotientEngine { ideal, pieces, lambda: None };
        let top = engine.dimension(engine.top_degree());
        if top != 1 {
            return Err(Error::Identity(format!("top-degree quotient has dimension {top}")));
        }
        Ok(engine)
    }

    /// The default normalisation: for `g = 3`, the class `P_2` with `r = 1`
    /// pairs to 1. Other genera stay unnormalised.
    pub fn standard(g: u32) -> Result<QuotientEngine> {
        let mut e = QuotientEngine::new(g)?;
        if g == 3 {
            let p2 = crate::porteous::virtual_class(1, 2)?.poly;
            e.normalize_by(&p2, &Rational::one())?;
        }
        Ok(e)
    }

    /// Shared normalised engine per genus.
    pub fn shared(g: u32) -> Result<Arc<QuotientEngine>> {
        static G3: OnceLock<Arc<QuotientEngine>> = OnceLock::new();
        static G4: OnceLock<Arc<QuotientEngine>> = OnceLock::new();
        let cell = match g {
            3 => &G3,
            4 => &G4,
            _ => return QuotientEngine::new(g).map(Arc::new),
        };
        if let Some(e) = cell.get() {
            return Ok(e.clone());
        }
        let e = Arc::new(QuotientEngine::standard(g)?);
        Ok(cell.get_or_init(|| e).clone())
    }

    pub fn g(&self) -> u32 {
        self.ideal.g
    }

    pub fn ideal(&self) -> &IdealPresentation {
        &self.ideal
    }

    pub fn top_degree(&self) -> u32 {
        self.ideal.top_degree()
    }

    pub fn dimension(&self, d: u32) -> usize {
        self.pieces.get(d as usize).map_or(0, |p| p.basis.len())
    }

    pub fn lambda(&self) -> Option<&Rational> {
        self.lambda.as_ref()
    }

    /// Fixes the scale so that `class` pairs to `value`.
    pub fn normalize_by(&mut self, class: &Poly, value: &Rational) -> Result<()> {
        let t = self.top_coordinate(class)?;
        if t.is_zero() {
            return Err(Error::Precondition("normalising class vanishes in top degree".into()));
        }
        self.lambda = Some(value / t);
        Ok(())
    }

    pub fn reduce_in_quotient(&self, p: &Poly) -> Result<NormalForm> {
        let d = if p.is_zero() { 0 } else { p.homogeneous_degree().ok_or(Error::NotHomogeneous)? };
        if d > self.top_degree() {
            return Err(Error::Degree(format!("degree {d} above top degree {}", self.top_degree())));
        }
        let piece = &self.pieces[d as usize];
        Ok(NormalForm {
            degree: d,
            basis: piece.basis.iter().map(|&i| piece.monomials[i].clone()).collect(),
            coords: piece.coordinates(p),
        })
    }

    pub fn contains(&self, p: &Poly) -> Result<bool> {
        Ok(self.reduce_in_quotient(p)?.is_zero())
    }

    /// Coordinate of a top-degree class on the one-dimensional top piece.
    pub fn top_coordinate(&self, p: &Poly) -> Result<Rational> {
        if !p.is_zero() && p.homogeneous_degree() != Some(self.top_degree()) {
            return Err(Error::Degree(format!("class is not of top degree {}", self.top_degree())));
        }
        let piece = &self.pieces[self.top_degree() as usize];
        Ok(piece.coordinates(p).pop().unwrap_or_else(Rational::zero))
    }

    /// Normalised pairing of a top-degree class.
    pub fn pair_class(&self, p: &Poly) -> Result<Rational> {
        let lambda = self.lambda.as_ref().ok_or_else(|| {
            Error::EngineUnavailable(format!(
                "g = {} quotient engine has no normalisation; only ratios are defined",
                self.g()
            ))
        })?;
        Ok(lambda * self.top_coordinate(p)?)
    }

    /// `pairing(p) / pairing(q)`, defined without a normalisation.
    pub fn ratio(&self, p: &Poly, q: &Poly) -> Result<Rational> {
        let tq = self.top_coordinate(q)?;
        if tq.is_zero() {
            return Err(Error::Precondition("denominator class pairs to zero".into()));
        }
        Ok(self.top_coordinate(p)? / tq)
    }

    /// Writes `p = sum c_i * gen_i` with homogeneous `c_i`, checking that the
    /// coefficients are unique.
    pub fn express_in_ideal(&self, p: &Poly) -> Result<Expression> {
        let d = p.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        let ring = Ring::canonical();
        let targets = ring.monomials_of_weight(d);
        let index: BTreeMap<&Monomial, usize> = targets.iter().enumerate().map(|(i, m)| (m, i)).collect();
        // unknowns: one per (generator, multiplier monomial)
        let mut unknowns = Vec::new();
        for (gi, (_, gen)) in self.ideal.generators.iter().enumerate() {
            let gd = IdealPresentation::generator_degree(gen);
            if gd <= d {
                for m in ring.monomials_of_weight(d - gd) {
                    unknowns.push((gi, m));
                }
            }
        }
        let mut a = vec![vec![Rational::zero(); unknowns.len()]; targets.len()];
        for (col, (gi, m)) in unknowns.iter().enumerate() {
            let prod = &self.ideal.generators[*gi].1 * &Poly::monomial(&ring, m.clone(), Rational::one());
            for (mm, c) in prod.terms() {
                a[index[mm]][col] = c.clone();
            }
        }
        let mut b = vec![Rational::zero(); targets.len()];
        for (m, c) in p.terms() {
            b[index[m]] = c.clone();
        }
        match solve(&a, &b, unknowns.len()) {
            Solution::Inconsistent => Err(Error::NotInIdeal(format!("{p}"))),
            Solution::Solved { x, kernel_dim } => {
                let mut coeffs = vec![Poly::zero(&ring); self.ideal.generators.len()];
                for ((gi, m), c) in unknowns.iter().zip(x) {
                    coeffs[*gi] = &coeffs[*gi] + &Poly::monomial(&ring, m.clone(), c);
                }
                let names = self.ideal.generators.iter().map(|(n, _)| n.clone()).collect();
                Ok(Expression { names, coeffs, unique: kernel_dim == 0 })
            }
        }
    }
}

/// `p = sum coeffs[i] * generator[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Expression {
    pub names: Vec<String>,
    pub coeffs: Vec<Poly>,
    pub unique: bool,
}

/// Bernoulli numbers `B_0..B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = vec![Rational::one()];
    for m in 1..=n {
        let s = (0..m).fold(Rational::zero(), |acc, k| {
            acc + Rational::from_integer(binomial(m as u64 + 1, k as u64)) * &b[k]
        });
        b.push(-s / Rational::from_integer(BigInt::from(m + 1)));
    }
    b
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn check_top(m: u64, n: u64, p: u64, g: u64) -> Result<()> {
    if m + 2 * n + 3 * p != 3 * g - 3 {
        return Err(Error::Degree(format!(
            "m+2n+3p = {} but top degree is {}",
            m + 2 * n + 3 * p,
            3 * g - 3
        )));
    }
    Ok(())
}

/// Thaddeus' closed form for `(alpha^m beta^n gamma^p)` in genus `g`:
/// `(-1)^{p-g} g! m! / ((g-p)! q!) 2^{2g-2-p} (2^q - 2) B_q` with
/// `q = m + p - g + 1`, and zero when `q < 0` or `p > g`.
pub fn thaddeus_value(m: u64, n: u64, p: u64, g: u64) -> Result<Rational> {
    check_top(m, n, p, g)?;
    let q = m as i64 + p as i64 - g as i64 + 1;
    if q < 0 || p > g {
        return Ok(Rational::zero());
    }
    let q = q as u64;
    let b_q = bernoulli(q as usize).pop().expect("B_q");
    let num = (factorial(g) * factorial(m) * ((BigInt::one() << q as usize) - 2)) << (2 * g - 2 - p) as usize;
    let den = factorial(g - p) * factorial(q);
    let mut v = Rational::new(num, den) * b_q;
    if (p + g) % 2 == 1 {
        v = -v;
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairingValue {
    pub m: u64,
    pub n: u64,
    pub p: u64,
    #[serde(serialize_with = "crate::ser::rational")]
    pub value: Rational,
    pub engine: String,
}

pub trait PairingEngine: Send + Sync {
    fn name(&self) -> &'static str;
    fn pair(&self, m: u64, n: u64, p: u64, g: u64) -> Result<Rational>;
}

/// Normal-form engine for `g = 3, 4`.
pub struct Quotient;

impl PairingEngine for Quotient {
    fn name(&self) -> &'static str {
        "quotient"
    }

    fn pair(&self, m: u64, n: u64, p: u64, g: u64) -> Result<Rational> {
        check_top(m, n, p, g)?;
        let engine = QuotientEngine::shared(g as u32)?;
        engine.pair_class(&mono(1, m as u32, n as u32, p as u32))
    }
}

pub struct Thaddeus;

impl PairingEngine for Thaddeus {
    fn name(&self) -> &'static str {
        "thaddeus"
    }

    fn pair(&self, m: u64, n: u64, p: u64, g: u64) -> Result<Rational> {
        thaddeus_value(m, n, p, g)
    }
}

/// Placeholder registered when the closed form is switched off.
pub struct Unconfigured(pub &'static str);

impl PairingEngine for Unconfigured {
    fn name(&self) -> &'static str {
        self.0
    }

    fn pair(&self, _m: u64, _n: u64, _p: u64, _g: u64) -> Result<Rational> {
        Err(Error::EngineUnavailable(format!("engine '{}' is not configured", self.0)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    pub thaddeus: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { thaddeus: true }
    }
}

pub fn pairing_registry(config: EngineConfig) -> Vec<Box<dyn PairingEngine>> {
    let thaddeus: Box<dyn PairingEngine> =
        if config.thaddeus { Box::new(Thaddeus) } else { Box::new(Unconfigured("thaddeus")) };
    vec![Box::new(Quotient), thaddeus]
}

pub fn pairing_engine(name: &str, config: EngineConfig) -> Result<Box<dyn PairingEngine>> {
    pairing_registry(config)
        .into_iter()
        .find(|e| e.name() == name)
        .ok_or_else(|| Error::UnknownStrategy { kind: "pairing engine", name: name.to_string() })
}

pub fn quotient_pair(g: u32, m: u64, n: u64, p: u64) -> Result<PairingValue> {
    Ok(PairingValue { m, n, p, value: Quotient.pair(m, n, p, g as u64)?, engine: "quotient".into() })
}

pub fn thaddeus_pair(m: u64, n: u64, p: u64, g: u64, config: EngineConfig) -> Result<PairingValue> {
    let engine = pairing_engine("thaddeus", config)?;
    Ok(PairingValue { m, n, p, value: engine.pair(m, n, p, g)?, engine: "thaddeus".into() })
}

/// Sum of coefficient times pairing over the monomials of a top-degree class.
pub fn evaluate_class(p: &Poly, g: u64, engine: &dyn PairingEngine) -> Result<Rational> {
    if !p.is_zero() && p.homogeneous_degree() != Some(3 * g as u32 - 3) {
        return Err(Error::Degree(format!("class is not of top degree {}", 3 * g - 3)));
    }
    p.terms().try_fold(Rational::zero(), |acc, (m, c)| {
        let v = engine.pair(m.exp(0) as u64, m.exp(1) as u64, m.exp(2) as u64, g)?;
        Ok(acc + c * v)
    })
}

/// `alpha^e P_k`, the top-degree multiple of the class in genus `g`.
pub fn top_multiple(r: u32, k: u32, g: u64) -> Result<Poly> {
    let vc = crate::porteous::virtual_class(r, k)?;
    let e = crate::certify::excess(r, k, g);
    if e < 0 {
        return Err(Error::Degree(format!("class degree {} exceeds {}", vc.degree(), 3 * g - 3)));
    }
    Ok(mono(1, e as u32, 0, 0) * vc.poly)
}

/// Every top monomial `(m, n, p)` in genus `g`.
pub fn top_monomials(g: u64) -> Vec<(u64, u64, u64)> {
    Ring::canonical()
        .monomials_of_weight(3 * g as u32 - 3)
        .into_iter()
        .rev()
        .map(|m| (m.exp(0) as u64, m.exp(1) as u64, m.exp(2) as u64))
        .collect()
}

/// True if `value` is an integer congruent to the residue class assigned to
/// `(m, n, p)` mod the odd prime `g`.
pub fn satisfies_residue_law(value: &Rational, m: u64, n: u64, p: u64, g: u64) -> Result<bool> {
    if !value.is_integer() {
        return Ok(false);
    }
    let expected = top_residue(m, n, p, g)?;
    let v = value.to_integer();
    Ok(num_integer::Integer::mod_floor(&(v - BigInt::from(expected)), &BigInt::from(g)).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::chern_table_full;
    use crate::poly::{int, rat};

    fn parse(s: &str) -> Poly {
        Poly::parse(&Ring::canonical(), s).unwrap()
    }

    #[test]
    fn generator_degrees_and_top_dimension() {
        for (g, degs) in [(3, [3, 4, 5]), (4, [4, 5, 6])] {
            let ideal = IdealPresentation::for_genus(g).unwrap();
            let got: Vec<u32> =
                ideal.generators.iter().map(|(_, p)| p.homogeneous_degree().unwrap()).collect();
            assert_eq!(got, degs);
            let e = QuotientEngine::new(g).unwrap();
            assert_eq!(e.dimension(3 * g - 3), 1);
        }
        assert!(IdealPresentation::for_genus(5).is_err());
    }

    #[test]
    fn membership() {
        let e3 = QuotientEngine::shared(3).unwrap();
        let e4 = QuotientEngine::shared(4).unwrap();
        let c6 = chern_table_full(3, 6).get(6);
        let c8 = chern_table_full(4, 9).get(8);
        assert!(e3.contains(&c6).unwrap());
        assert!(e4.contains(&c8).unwrap());
        assert!(!e4.contains(&c6).unwrap());
        // membership persists up to the top degree
        assert!(e4.contains(&chern_table_full(4, 9).get(9)).unwrap());
        assert!(matches!(e3.reduce_in_quotient(&mono(1, 7, 0, 0)), Err(Error::Degree(_))));
    }

    #[test]
    fn printed_decompositions() {
        let e3 = QuotientEngine::shared(3).unwrap();
        let c6 = chern_table_full(3, 6).get(6).scale_int(46080);
        let x = e3.express_in_ideal(&c6).unwrap();
        assert!(x.unique);
        assert_eq!(x.coeffs[0], parse("-80*a^3 + 32*a*b + 160*g"));
        assert_eq!(x.coeffs[1], parse("17*a^2 + 75*b"));
        assert_eq!(x.coeffs[2], parse("32*a"));

        let e4 = QuotientEngine::shared(4).unwrap();
        let c8 = chern_table_full(4, 8).get(8).scale_int(256 * 40320);
        let x = e4.express_in_ideal(&c8).unwrap();
        assert!(x.unique);
        assert_eq!(x.coeffs[0], parse("70*a^4 + 1820*a^2*b + 3150*b^2 + 2020*a*g"));
        assert_eq!(x.coeffs[1], parse("-56*a^3 + -412*a*b + -308*g"));
        assert_eq!(x.coeffs[2], parse("-13*a^2 + -77*b"));

        let z3 = e3.ideal().generators[0].1.clone();
        let x = e3.express_in_ideal(&(&z3 * &mono(1, 1, 0, 0))).unwrap();
        assert_eq!(x.coeffs[0], mono(1, 1, 0, 0));
        assert!(x.coeffs[1].is_zero() && x.coeffs[2].is_zero());
        assert!(matches!(e4.express_in_ideal(&chern_table_full(3, 6).get(6)), Err(Error::NotInIdeal(_))));
    }

    #[test]
    fn genus_three_pairings() {
        let table = [
            ((6, 0, 0), 224),
            ((4, 1, 0), -64),
            ((2, 2, 0), 32),
            ((0, 3, 0), 0),
            ((3, 0, 1), 24),
            ((1, 1, 1), -24),
            ((0, 0, 2), 24),
        ];
        for ((m, n, p), v) in table {
            let q = quotient_pair(3, m, n, p).unwrap().value;
            assert_eq!(q, int(v), "({m},{n},{p})");
            assert_eq!(thaddeus_value(m, n, p, 3).unwrap(), int(v));
            assert!(satisfies_residue_law(&q, m, n, p, 3).unwrap());
        }
        assert_eq!(top_monomials(3).len(), 7);
        let p2 = crate::porteous::virtual_class(1, 2).unwrap().poly;
        assert_eq!(evaluate_class(&p2, 3, &Quotient).unwrap(), int(1));
    }

    #[test]
    fn genus_four_is_ratio_only() {
        let e4 = QuotientEngine::shared(4).unwrap();
        assert!(e4.lambda().is_none());
        assert!(matches!(quotient_pair(4, 9, 0, 0), Err(Error::EngineUnavailable(_))));
        let a9 = mono(1, 9, 0, 0);
        let g3 = mono(1, 0, 0, 3);
        let ratio = e4.ratio(&g3, &a9).unwrap();
        assert_eq!(ratio, thaddeus_value(0, 0, 3, 4).unwrap() / thaddeus_value(9, 0, 0, 4).unwrap());
    }

    #[test]
    fn closed_form_values() {
        let t = Thaddeus;
        let cases = [(1, 1, 2, 1), (1, 2, 3, 1), (1, 3, 5, 1), (1, 4, 8, 13), (1, 5, 11, 23)];
        for (r, k, g, v) in cases {
            let class = top_multiple(r, k, g).unwrap();
            assert_eq!(evaluate_class(&class, g, &t).unwrap(), int(v), "(r,k,g) = ({r},{k},{g})");
        }
    }

    #[test]
    fn closed_form_congruences() {
        for g in [3u64, 5, 7, 11, 13] {
            for (m, n, p) in top_monomials(g) {
                let v = thaddeus_value(m, n, p, g).unwrap();
                assert!(satisfies_residue_law(&v, m, n, p, g).unwrap(), "g={g} ({m},{n},{p}) -> {v}");
            }
        }
    }

    #[test]
    fn bernoulli_numbers() {
        let b = bernoulli(8);
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[8], rat(-1, 30));
        assert!(b[7].is_zero());
    }

    #[test]
    fn registry() {
        let off = EngineConfig { thaddeus: false };
        assert!(matches!(thaddeus_pair(6, 0, 0, 3, off), Err(Error::EngineUnavailable(_))));
        assert_eq!(thaddeus_pair(6, 0, 0, 3, EngineConfig::default()).unwrap().value, int(224));
        assert!(pairing_engine("nope", off).is_err());
        assert!(matches!(Quotient.pair(1, 1, 1, 5), Err(Error::Degree(_))));
    }
}
