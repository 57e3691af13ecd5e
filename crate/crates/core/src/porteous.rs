//! The degeneracy-locus determinant `P_k` and its structural checks.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::chern::{chern_table_alpha0, chern_table_full, chern_table_gamma0, ChernTable, Variant};
use crate::error::{Error, Result};
use crate::poly::{
    canon, det_mod_p, det_poly_matrix, int, is_prime, rat_mod, Poly, PolyMatrix, Rational, Ring,
};

/// `P_k` together with the Hankel matrix it is the determinant of.
#[derive(Debug, Clone)]
pub struct VirtualClass {
    pub r: u32,
    pub k: u32,
    pub matrix: PolyMatrix,
    pub poly: Poly,
}

impl VirtualClass {
    /// Weighted degree `k(k + 2r - 1)`.
    pub fn degree(&self) -> u32 {
        class_degree(self.r, self.k)
    }
}

pub fn class_degree(r: u32, k: u32) -> u32 {
    k * (k + 2 * r - 1)
}

/// Matrix with entry `(i, j)` equal to `c_{k+2r-1-i+j}` taken from `table`.
pub fn porteous_matrix(table: &ChernTable, k: u32) -> PolyMatrix {
    let r = table.r() as i64;
    let k = k as i64;
    PolyMatrix::from_fn(&Ring::canonical(), k as usize, k as usize, |i, j| {
        table.get(k + 2 * r - 1 - i as i64 + j as i64)
    })
}

fn table_bound(r: u32, k: u32) -> usize {
    (2 * k + 2 * r - 2) as usize
}

pub fn virtual_class(r: u32, k: u32) -> Result<VirtualClass> {
    if r == 0 || k == 0 {
        return Err(Error::Precondition("r and k must be positive".into()));
    }
    let table = chern_table_full(r, table_bound(r, k));
    let matrix = porteous_matrix(&table, k);
    let poly = det_poly_matrix(&matrix)?;
    Ok(VirtualClass { r, k, matrix, poly })
}

/// `P_k(alpha, beta, 0)`.
pub fn pk_gamma0(r: u32, k: u32) -> Result<Poly> {
    let table = chern_table_gamma0(r, table_bound(r, k));
    det_poly_matrix(&porteous_matrix(&table, k))
}

/// `P_k(1, beta, 0)`, a polynomial in `b` alone, memoised per `(r, k)`.
///
/// Because `P_k` is homogeneous, this determines `P_k(alpha, beta, 0)`:
/// the coefficient of `beta^j` here is that of `beta^j alpha^{K-2j}`.
pub fn pk_beta(r: u32, k: u32) -> Result<Poly> {
    type Cache = RwLock<HashMap<(u32, u32), Poly>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().expect("pk cache poisoned").get(&(r, k)) {
        return Ok(p.clone());
    }
    let p = compute_pk_beta(r, k)?;
    cache.write().expect("pk cache poisoned").insert((r, k), p.clone());
    Ok(p)
}

pub fn compute_pk_beta(r: u32, k: u32) -> Result<Poly> {
    if r == 0 || k == 0 {
        return Err(Error::Precondition("r and k must be positive".into()));
    }
    let ring = Ring::canonical();
    let one = [("a", Poly::one(&ring))];
    let table = chern_table_gamma0(r, table_bound(r, k)).specialize(&one, Variant::Gamma0);
    det_poly_matrix(&porteous_matrix(&table, k))
}

/// `P_k(0, beta, 0)`.
pub fn pk_alpha0(r: u32, k: u32) -> Result<Poly> {
    let table = chern_table_alpha0(r, table_bound(r, k));
    det_poly_matrix(&porteous_matrix(&table, k))
}

/// Roots `1/m^2` for odd `m`, keyed by `m`, with their multiplicities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactorizationReport {
    pub r: u32,
    pub k: u32,
    #[serde(serialize_with = "crate::ser::rational")]
    pub c: Rational,
    pub verified: bool,
    pub multiplicities: BTreeMap<u32, u32>,
}

impl FactorizationReport {
    /// Multiplicity of the root `1/m^2`.
    pub fn multiplicity(&self, m: u32) -> u32 {
        self.multiplicities.get(&m).copied().unwrap_or(0)
    }
}

/// Expected root multiplicities of `P_k(1, beta, 0)`.
pub fn predicted_roots(r: u32, k: u32) -> BTreeMap<u32, u32> {
    let mut roots = BTreeMap::new();
    for i in 1..=r {
        roots.insert(2 * i - 1, k);
    }
    for i in 1..k {
        roots.insert(2 * r + 2 * i - 1, k - i);
    }
    roots
}

/// Divides `P_k(1, beta, 0)` by the predicted product of linear factors and
/// checks that a non-zero constant remains.
pub fn verify_factorization(r: u32, k: u32) -> Result<FactorizationReport> {
    let pk = pk_beta(r, k)?;
    let ring = Ring::canonical();
    let multiplicities = predicted_roots(r, k);
    let product = multiplicities.iter().fold(Poly::one(&ring), |acc, (&m, &e)| {
        let root = Rational::new(BigInt::one(), BigInt::from(m) * BigInt::from(m));
        acc * (canon::beta() - canon::konst(root)).pow(e)
    });
    let (q, rem) = pk.div_rem(&product)?;
    if !rem.is_zero() {
        return Err(Error::Factorization(format!("P_{k}(1,b,0) for r={r} leaves remainder {rem}")));
    }
    if !q.is_constant() || q.is_zero() {
        return Err(Error::Factorization(format!(
            "quotient {q} for r={r}, k={k} is not a non-zero constant"
        )));
    }
    Ok(FactorizationReport { r, k, c: q.constant_term(), verified: true, multiplicities })
}

fn check_prime(p: u64) -> Result<()> {
    if p % 2 == 1 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

/// `c_{2m}(0, 4, 0)` as an exact rational.
pub fn tilde_c_at4(r: u32, m: u32) -> Rational {
    chern_table_alpha0(r, 2 * m as usize).get(2 * m as i64).eval(&[("b", int(4))])
}

/// The block `A_{u,v}` at `beta = 4`: entry `(i, j)` is `c~_{2(u-i+j)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct HankelBlock {
    pub u: u32,
    pub v: u32,
    pub r: u32,
    pub entries: Vec<Vec<Rational>>,
}

impl HankelBlock {
    pub fn new(u: u32, v: u32, r: u32) -> Result<HankelBlock> {
        if !(u >= v && v >= r) {
            return Err(Error::Precondition(format!("need u >= v >= r, got u={u}, v={v}, r={r}")));
        }
        let size = (u - v + 1) as usize;
        let entries =
            (0..size).map(|i| (0..size).map(|j| tilde_c_at4(r, u + j as u32 - i as u32)).collect()).collect();
        Ok(HankelBlock { u, v, r, entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn det_mod_p(&self, p: u64) -> Result<u64> {
        let rows = self
            .entries
            .iter()
            .map(|row| row.iter().map(|x| rat_mod(x, p)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(det_mod_p(rows, p))
    }
}

fn check_hankel_prime(u: u32, v: u32, r: u32, p: u64) -> Result<()> {
    check_prime(p)?;
    if !(u >= v && v >= r) {
        return Err(Error::Precondition(format!("need u >= v >= r, got u={u}, v={v}, r={r}")));
    }
    let bound = (2 * u - v).max(2 * r + 2 * u - 2 * v - 1) as u64;
    if p <= bound {
        return Err(Error::Precondition(format!("need p > {bound}, got {p}")));
    }
    Ok(())
}

pub fn hankel_det_mod_p(u: u32, v: u32, r: u32, p: u64) -> Result<u64> {
    check_hankel_prime(u, v, r, p)?;
    HankelBlock::new(u, v, r)?.det_mod_p(p)
}

/// `s_lambda(1, ..., 1)` in `n` variables by the hook-content formula.
pub fn schur_at_ones(lambda: &[u32], n: u32) -> BigInt {
    let conj: Vec<u32> = (0..lambda.first().copied().unwrap_or(0))
        .map(|j| lambda.iter().filter(|&&l| l > j).count() as u32)
        .collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            let content = n as i64 + j as i64 - i as i64;
            if content == 0 {
                return BigInt::zero();
            }
            num *= BigInt::from(content);
            let hook = (row - j) + (conj[j as usize] - i as u32) - 1;
            den *= BigInt::from(hook);
        }
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Rectangular Schur value attached to `A_{u,v}`: shape `(u-v+1)^u` in
/// `(p + 2r - 1)/2` variables, reduced mod `p`.
pub fn schur_ones(u: u32, v: u32, r: u32, p: u64) -> Result<u64> {
    check_hankel_prime(u, v, r, p)?;
    let n = ((p + 2 * r as u64 - 1) / 2) as u32;
    let lambda = vec![u - v + 1; u as usize];
    rat_mod(&Rational::from_integer(schur_at_ones(&lambda, n)), p)
}

/// Sign relating `det A_{u,v}` to its Schur value mod `p`, observed on the
/// tested grid: `(-1)^{u(u-v+1)}`.
pub fn hankel_sign(u: u32, v: u32) -> i8 {
    if (u * (u - v + 1)).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Alpha0Report {
    pub r: u32,
    pub k: u32,
    pub p: u64,
    /// `P_k(0, 4, 0) mod p`.
    pub value: u64,
    /// The two diagonal blocks `(u, v)` of the parity split.
    pub blocks: [(u32, u32); 2],
    pub block_product: u64,
    /// `value = sign * block_product`.
    pub sign: i8,
}

/// The two Hankel blocks that `P_k(0, 4, 0)` splits into after separating
/// even and odd indices.
pub fn alpha0_blocks(r: u32, k: u32) -> [(u32, u32); 2] {
    if k % 2 == 1 {
        let u = (k + 2 * r - 1) / 2;
        [(u, r), (u, r + 1)]
    } else {
        [((k + 2 * r) / 2, r + 1), ((k + 2 * r - 2) / 2, r)]
    }
}

/// Sign of the row and column permutation separating even from odd indices
/// in the `k x k` matrix, observed as `value = block_sign(k) * block_product`.
pub fn block_sign(k: u32) -> i8 {
    if k % 4 == 2 {
        -1
    } else {
        1
    }
}

fn block_det(u: u32, v: u32, r: u32, p: u64) -> Result<u64> {
    if v > u {
        // empty block
        return Ok(1);
    }
    HankelBlock::new(u, v, r)?.det_mod_p(p)
}

/// `P_k(0, 4, 0) mod p`, checked against the product of its Hankel blocks.
pub fn pk_alpha0_beta4_mod_p(r: u32, k: u32, p: u64) -> Result<Alpha0Report> {
    check_prime(p)?;
    if p <= (k + 2 * r - 2) as u64 {
        return Err(Error::Precondition(format!("need p > k+2r-2 = {}", k + 2 * r - 2)));
    }
    let kk = k as i64;
    let ri = r as i64;
    let rows = (0..kk)
        .map(|i| {
            (0..kk)
                .map(|j| {
                    let n = kk + 2 * ri - 1 - i + j;
                    if n % 2 == 1 {
                        Ok(0)
                    } else {
                        rat_mod(&tilde_c_at4(r, (n / 2) as u32), p)
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let value = det_mod_p(rows, p);
    let blocks = alpha0_blocks(r, k);
    let block_product = blocks.iter().try_fold(1u64, |acc, &(u, v)| {
        block_det(u, v, r, p).map(|d| ((acc as u128 * d as u128) % p as u128) as u64)
    })?;
    let sign = if value == block_product {
        1
    } else if (value + block_product).is_multiple_of(p) {
        -1
    } else {
        return Err(Error::Identity(format!(
            "P_{k}(0,4,0) = {value} but block product = {block_product} mod {p} (r={r})"
        )));
    };
    Ok(Alpha0Report { r, k, p, value, blocks, block_product, sign })
}

/// One row of the Hankel/Schur sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HankelRecord {
    pub u: u32,
    pub v: u32,
    pub r: u32,
    pub p: u64,
    pub det: u64,
    pub schur: u64,
    /// `det = sign * schur`, or 0 if neither sign fits.
    pub sign: i8,
}

impl HankelRecord {
    /// Number of variables `(p + 2r - 1)/2` of the Schur value.
    pub fn schur_vars(&self) -> u64 {
        (self.p + 2 * self.r as u64 - 1) / 2
    }
}

/// All admissible `(u, v, r, p)` with `u <= u_max`, `r <= r_max`, `p <= p_max`.
pub fn hankel_sweep(u_max: u32, r_max: u32, p_max: u64) -> Result<Vec<HankelRecord>> {
    let mut cells = Vec::new();
    for r in 1..=r_max {
        for u in r..=u_max {
            for v in r..=u {
                for p in (3..=p_max).filter(|&p| is_prime(p)) {
                    if check_hankel_prime(u, v, r, p).is_ok() {
                        cells.push((u, v, r, p));
                    }
                }
            }
        }
    }
    cells
        .par_iter()
        .map(|&(u, v, r, p)| {
            let det = hankel_det_mod_p(u, v, r, p)?;
            let schur = schur_ones(u, v, r, p)?;
            let sign = if det == schur {
                1
            } else if (det + schur) % p == 0 {
                -1
            } else {
                0
            };
            Ok(HankelRecord { u, v, r, p, det, schur, sign })
        })
        .collect()
}

/// Leading `beta` coefficient of `P_k(1, beta, 0)` and `P_k(0, 1, 0)`.
pub fn leading_coefficients(r: u32, k: u32) -> Result<(Rational, Rational)> {
    let pb = pk_beta(r, k)?;
    let d = class_degree(r, k) / 2;
    let lead = pb.coeff_of(&[0, d, 0]);
    let a0 = pk_alpha0(r, k)?.coeff_of(&[0, d, 0]);
    Ok((lead, a0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::canon::*;
    use crate::poly::rat;

    #[test]
    fn small_classes() {
        let p1 = virtual_class(1, 1).unwrap();
        assert_eq!(p1.poly, (mono(1, 2, 0, 0) - beta()).scale(&rat(1, 8)));
        let p2 = virtual_class(1, 2).unwrap();
        let t = chern_table_full(1, 4);
        assert_eq!(p2.matrix.get(0, 0), &t.get(3));
        assert_eq!(p2.matrix.get(0, 1), &t.get(4));
        assert_eq!(p2.matrix.get(1, 0), &t.get(2));
        assert_eq!(p2.poly, &t.get(3) * &t.get(3) - &t.get(2) * &t.get(4));
        assert_eq!(p2.poly.homogeneous_degree(), Some(6));
        let q = virtual_class(2, 1).unwrap();
        assert_eq!(q.poly, chern_table_full(2, 4).get(4));
        assert_eq!(q.degree(), 4);
    }

    #[test]
    fn homogeneity_and_hankel_shape() {
        for r in 1..=3 {
            for k in 1..=4 {
                let vc = virtual_class(r, k).unwrap();
                assert_eq!(vc.poly.homogeneous_degree(), Some(class_degree(r, k)), "r={r} k={k}");
                let n = k as usize;
                for i in 1..n {
                    for j in 1..n {
                        assert_eq!(vc.matrix.get(i, j), vc.matrix.get(i - 1, j - 1));
                    }
                }
            }
        }
    }

    #[test]
    fn gamma0_slice_matches_full_determinant() {
        for (r, k) in [(1, 3), (2, 2), (3, 2)] {
            let full = virtual_class(r, k).unwrap().poly;
            let zero = Poly::zero(&Ring::canonical());
            assert_eq!(full.specialize(&[("g", zero)]), pk_gamma0(r, k).unwrap());
            let one = Poly::one(&Ring::canonical());
            assert_eq!(pk_gamma0(r, k).unwrap().specialize(&[("a", one)]), pk_beta(r, k).unwrap());
        }
    }

    #[test]
    fn pk_beta_degrees() {
        assert_eq!(pk_beta(1, 1).unwrap(), (Poly::one(&Ring::canonical()) - beta()).scale(&rat(1, 8)));
        for (r, k) in [(1, 1), (1, 2), (2, 2), (3, 4), (1, 7)] {
            let pb = pk_beta(r, k).unwrap();
            assert_eq!(pb.degree_in("b"), class_degree(r, k) / 2);
            assert!(!pb.involves("a") && !pb.involves("g"));
            let (lead, a0) = leading_coefficients(r, k).unwrap();
            assert_eq!(lead, a0);
            assert!(!lead.is_zero());
        }
    }

    #[test]
    fn factorization_examples() {
        let f = verify_factorization(1, 1).unwrap();
        assert_eq!(f.c, rat(-1, 8));
        let f = verify_factorization(1, 2).unwrap();
        assert_eq!((f.multiplicity(1), f.multiplicity(3)), (2, 1));
        let f = verify_factorization(2, 3).unwrap();
        assert_eq!(
            (f.multiplicity(1), f.multiplicity(3), f.multiplicity(5), f.multiplicity(7)),
            (3, 3, 2, 1)
        );
        for r in 1..=3 {
            for k in 1..=5 {
                let f = verify_factorization(r, k).unwrap();
                assert!(f.verified && !f.c.is_zero());
            }
        }
    }

    #[test]
    fn schur_hook_content() {
        assert_eq!(schur_at_ones(&[1], 7), BigInt::from(7));
        assert_eq!(schur_at_ones(&[2, 2], 3), BigInt::from(6));
        assert_eq!(schur_at_ones(&[1, 1, 1], 2), BigInt::zero());
        // s_(2)(1^n) = C(n+1, 2)
        assert_eq!(schur_at_ones(&[2], 5), BigInt::from(15));
    }

    #[test]
    fn hankel_examples() {
        // c~_2(4) = -1/2 for r = 1
        assert_eq!(hankel_det_mod_p(1, 1, 1, 5).unwrap(), 2);
        assert_ne!(hankel_det_mod_p(2, 1, 1, 7).unwrap(), 0);
        let d = hankel_det_mod_p(2, 1, 1, 7).unwrap();
        let s = schur_ones(2, 1, 1, 7).unwrap();
        assert!(d == s || (d + s).is_multiple_of(7));
        assert!(hankel_det_mod_p(1, 2, 1, 5).is_err());
        assert!(hankel_det_mod_p(3, 1, 1, 5).is_err());
        assert!(matches!(hankel_det_mod_p(1, 1, 1, 15), Err(Error::NotOddPrime(15))));
    }

    #[test]
    fn hankel_sweep_signs() {
        // The determinant vanishes exactly when the Schur shape has more rows
        // than variables; the bound on p alone does not exclude this.
        let mut vanishing = 0;
        for rec in hankel_sweep(6, 3, 47).unwrap() {
            let too_tall = rec.schur_vars() < rec.u as u64;
            assert_eq!(rec.det == 0, too_tall, "{rec:?}");
            if too_tall {
                vanishing += 1;
                assert_eq!(rec.schur, 0);
            } else {
                assert_eq!(rec.sign, hankel_sign(rec.u, rec.v), "{rec:?}");
            }
        }
        assert!(vanishing > 0);
        assert_eq!(hankel_det_mod_p(4, 4, 1, 5).unwrap(), 0);
    }

    #[test]
    fn alpha0_examples() {
        let rep = pk_alpha0_beta4_mod_p(1, 1, 5).unwrap();
        assert_eq!(rep.value, 2);
        assert_eq!(rat_mod(&rat(-1, 2), 5).unwrap(), 2);
        let rep = pk_alpha0_beta4_mod_p(1, 2, 5).unwrap();
        assert_ne!(rep.value, 0);
        for r in 1..=3 {
            for k in 1..=5 {
                for p in [11u64, 13, 17] {
                    let rep = pk_alpha0_beta4_mod_p(r, k, p).unwrap();
                    assert_ne!(rep.value, 0);
                    assert_eq!(rep.sign, block_sign(k), "r={r} k={k} p={p}");
                }
            }
        }
        assert!(pk_alpha0_beta4_mod_p(2, 4, 5).is_err());
    }
}
