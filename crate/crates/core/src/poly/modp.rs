//! Prime-field arithmetic and reduction of rational polynomials mod p.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{Monomial, Poly, Rational, Ring};
use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `p`; `None` if `a ≡ 0`.
pub fn mod_inv(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    (a != 0).then(|| mod_pow(a, p - 2, p))
}

/// Deterministic Miller-Rabin; the first twelve primes as bases decide every
/// 64-bit input.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime `>= n`.
pub fn next_prime(n: u64) -> u64 {
    let mut m = n.max(2);
    while !is_prime(m) {
        m += 1;
    }
    m
}

pub(crate) fn require_odd_prime(p: u64) -> Result<()> {
    if p % 2 == 1 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

/// Image of a rational in `F_p`.
pub fn rat_mod(q: &Rational, p: u64) -> Result<u64> {
    let den = bigint_mod(q.denom(), p);
    let inv = mod_inv(den, p).ok_or(Error::DenominatorDivisible(p))?;
    Ok(mul_mod(bigint_mod(q.numer(), p), inv, p))
}

/// Polynomial with coefficients in `F_p`, same sparse layout as [`Poly`].
#[derive(Clone, PartialEq, Eq)]
pub struct ModPoly {
    modulus: u64,
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, u64>,
}

impl fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModPoly[{}]({self})", self.modulus)
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.ring.names();
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (name, &e) in names.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl ModPoly {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &u64)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, exps: &[u32]) -> u64 {
        self.terms.get(&Monomial(exps.to_vec())).copied().unwrap_or(0)
    }

    /// Univariate polynomial `sum c_i var^i` over `F_p`.
    pub fn from_univariate(ring: &Arc<Ring>, var: &str, p: u64, coeffs: &[u64]) -> ModPoly {
        let idx = ring.require(var);
        let mut terms = BTreeMap::new();
        for (i, &c) in coeffs.iter().enumerate() {
            let c = c % p;
            if c != 0 {
                let mut e = vec![0; ring.nvars()];
                e[idx] = i as u32;
                terms.insert(Monomial(e), c);
            }
        }
        ModPoly { modulus: p, ring: ring.clone(), terms }
    }

    /// Evaluate at residues; variables missing from `values` evaluate to 0.
    pub fn eval(&self, values: &[(&str, u64)]) -> u64 {
        let p = self.modulus;
        let names = self.ring.names();
        self.terms.iter().fold(0, |acc, (m, &c)| {
            let t = m.0.iter().enumerate().fold(c, |t, (i, &e)| {
                if e == 0 {
                    return t;
                }
                let v = values.iter().find(|(n, _)| *n == names[i]).map_or(0, |(_, v)| *v);
                mul_mod(t, mod_pow(v, e as u64, p), p)
            });
            (acc + t) % p
        })
    }
}

/// Coefficient-wise reduction; denominators are inverted in `F_p`.
pub fn reduce_mod_p(poly: &Poly, p: u64) -> Result<ModPoly> {
    require_odd_prime(p)?;
    let mut terms = BTreeMap::new();
    for (m, c) in poly.terms() {
        let r = rat_mod(c, p)?;
        if r != 0 {
            terms.insert(m.clone(), r);
        }
    }
    Ok(ModPoly { modulus: p, ring: poly.ring().clone(), terms })
}

/// Determinant of a square matrix over `F_p` by Gaussian elimination.
pub fn det_mod_p(mut a: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = a.len();
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_multiple_of(p)) else {
            return 0;
        };
        if piv != k {
            a.swap(piv, k);
            det = (p - det) % p;
        }
        let pivot = a[k][k] % p;
        det = mul_mod(det, pivot, p);
        let inv = mod_inv(pivot, p).expect("non-zero pivot");
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest {
            let f = mul_mod(row[k] % p, inv, p);
            if f == 0 {
                continue;
            }
            for (x, &y) in row[k..].iter_mut().zip(&pivot_row[k..]) {
                let sub = mul_mod(f, y % p, p);
                *x = (*x % p + p - sub) % p;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{canon::*, rat};

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial_division(n), "n = {n}");
        }
        // strong pseudoprimes to several small bases
        for n in [2047u64, 1373653, 25326001, 3215031751, 3825123056546413051] {
            assert!(!is_prime(n), "{n}");
        }
        assert!(is_prime(18446744073709551557));
    }

    #[test]
    fn next_prime_examples() {
        assert_eq!(next_prime(0), 2);
        assert_eq!(next_prime(34), 37);
        assert_eq!(next_prime(37), 37);
    }

    #[test]
    fn reduction_examples() {
        let p = mono(1, 2, 0, 0) - beta();
        let r = reduce_mod_p(&p, 3).unwrap();
        assert_eq!(r.coeff_of(&[2, 0, 0]), 1);
        assert_eq!(r.coeff_of(&[0, 1, 0]), 2);
        let half = alpha().scale(&rat(1, 2));
        assert_eq!(reduce_mod_p(&half, 5).unwrap().coeff_of(&[1, 0, 0]), 3);
        assert_eq!(reduce_mod_p(&alpha().scale(&rat(1, 5)), 5), Err(Error::DenominatorDivisible(5)));
        assert_eq!(reduce_mod_p(&p, 9), Err(Error::NotOddPrime(9)));
        assert_eq!(reduce_mod_p(&p, 2), Err(Error::NotOddPrime(2)));
    }

    #[test]
    fn det_mod_p_small() {
        assert_eq!(det_mod_p(vec![vec![0, 1], vec![1, 0]], 7), 6);
        assert_eq!(det_mod_p(vec![vec![2, 3], vec![4, 6]], 7), 0);
        assert_eq!(det_mod_p(vec![vec![3]], 5), 3);
    }
}
