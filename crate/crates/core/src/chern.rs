//! Chern classes `c_n(F - E)` as polynomials in alpha, beta, gamma.
//!
//! Three recurrences are provided: the five-term relation valid in the full
//! ring, the three-term relation at gamma = 0, and the two-term relation at
//! alpha = gamma = 0. Each table is seeded only with `c_0 = 1`; the first few
//! entries come out of the recurrence itself by treating `c_n` as zero for
//! negative `n`.
//!
//! An independent route through the Chern character is kept as an oracle.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{canon, int, rat, rat_mod, CommRing, Poly, QuadExt, Rational, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Full,
    Gamma0,
    Alpha0,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Full => "full",
            Variant::Gamma0 => "gamma0",
            Variant::Alpha0 => "alpha0",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Variant::Full),
            "gamma0" => Ok(Variant::Gamma0),
            "alpha0" => Ok(Variant::Alpha0),
            other => Err(Error::UnknownStrategy { kind: "chern variant", name: other.to_string() }),
        }
    }
}

/// `c_0 .. c_N` for a fixed `r`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChernTable {
    r: u32,
    variant: Variant,
    entries: Vec<Poly>,
}

/// The alpha = gamma = 0 sequence, univariate in beta.
pub type TildeCSeq = ChernTable;

impl ChernTable {
    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Largest index held.
    pub fn max_index(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    /// `c_n`, zero for negative `n`.
    pub fn get(&self, n: i64) -> Poly {
        if n < 0 {
            return Poly::zero(&Ring::canonical());
        }
        self.entries
            .get(n as usize)
            .cloned()
            .unwrap_or_else(|| panic!("c_{n} beyond table bound {}", self.max_index()))
    }

    /// Entrywise substitution.
    pub fn specialize(&self, assignment: &[(&str, Poly)], variant: Variant) -> ChernTable {
        ChernTable {
            r: self.r,
            variant,
            entries: self.entries.iter().map(|c| c.specialize(assignment)).collect(),
        }
    }
}

fn quarter_disc() -> Poly {
    // (alpha^2 - beta) / 4
    (canon::mono(1, 2, 0, 0) - canon::beta()).scale(&rat(1, 4))
}

fn next_full(r: i64, c: &[Poly]) -> Poly {
    let ring = Ring::canonical();
    let m = c.len() as i64;
    let n = m - 4;
    let at = |i: i64| -> Poly {
        if i < 0 {
            Poly::zero(&ring)
        } else {
            c[i as usize].clone()
        }
    };
    let a = canon::alpha();
    let q = quarter_disc();
    let a2 = canon::mono(1, 2, 0, 0);
    let t1 = a.scale_int(2 * n + 6 - r) * at(m - 1);
    let t2 = (a2.scale_int(n + 2 - r) + q.scale_int(2 * n + 5 - 2 * r)) * at(m - 2);
    let t3 = ((&a * &q).scale_int(2 * n + 3 - 3 * r) + canon::gamma().scale(&rat(1, 2))) * at(m - 3);
    let t4 = (&q * &q).scale_int(n + 1 - 2 * r) * at(m - 4);
    (t1 + t2 + t3 + t4).scale(&rat(-1, m))
}

fn next_gamma0(r: i64, c: &[Poly]) -> Poly {
    let ring = Ring::canonical();
    let m = c.len() as i64;
    let n = m - 2;
    let at = |i: i64| -> Poly {
        if i < 0 {
            Poly::zero(&ring)
        } else {
            c[i as usize].clone()
        }
    };
    let t1 = canon::alpha().scale_int(n + 1 - r) * at(m - 1);
    let t2 = quarter_disc().scale_int(n + 1 - 2 * r) * at(m - 2);
    (t1 + t2).scale(&rat(-1, m))
}

fn next_alpha0(r: i64, c: &[Poly]) -> Poly {
    let m = c.len() as i64;
    let n = m - 2;
    if n < 0 {
        return Poly::zero(&Ring::canonical());
    }
    // (n + 2) c_{n+2} = (beta / 4)(n + 1 - 2r) c_n
    (canon::beta() * &c[n as usize]).scale(&rat(n + 1 - 2 * r, 4 * m))
}

fn extend(r: u32, variant: Variant, entries: &mut Vec<Poly>, upto: usize) {
    if entries.is_empty() {
        entries.push(Poly::one(&Ring::canonical()));
    }
    let step = match variant {
        Variant::Full => next_full,
        Variant::Gamma0 => next_gamma0,
        Variant::Alpha0 => next_alpha0,
    };
    while entries.len() <= upto {
        let next = step(r as i64, entries);
        entries.push(next);
    }
}

type CacheMap = HashMap<(u32, Variant), Vec<Poly>>;

fn cache() -> &'static RwLock<CacheMap> {
    static CACHE: OnceLock<RwLock<CacheMap>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Memoised table `c_0..c_n`; concurrent readers share the cache.
pub fn chern_table(r: u32, n: usize, variant: Variant) -> ChernTable {
    assert!(r >= 1, "r must be positive");
    {
        let guard = cache().read().expect("chern cache poisoned");
        if let Some(v) = guard.get(&(r, variant)) {
            if v.len() > n {
                return ChernTable { r, variant, entries: v[..=n].to_vec() };
            }
        }
    }
    let mut guard = cache().write().expect("chern cache poisoned");
    let v = guard.entry((r, variant)).or_default();
    extend(r, variant, v, n);
    ChernTable { r, variant, entries: v[..=n].to_vec() }
}

/// Uncached table, straight from the recurrence.
pub fn compute_table(r: u32, n: usize, variant: Variant) -> ChernTable {
    let mut entries = Vec::new();
    extend(r, variant, &mut entries, n);
    ChernTable { r, variant, entries }
}

pub fn chern_table_full(r: u32, n: usize) -> ChernTable {
    chern_table(r, n, Variant::Full)
}

pub fn chern_table_gamma0(r: u32, n: usize) -> ChernTable {
    chern_table(r, n, Variant::Gamma0)
}

pub fn chern_table_alpha0(r: u32, n: usize) -> TildeCSeq {
    chern_table(r, n, Variant::Alpha0)
}

/// Odd double factorial `(2r-1)(2r-3)...1`.
fn odd_double_factorial(r: u32) -> BigInt {
    (1..=r).fold(BigInt::one(), |acc, i| acc * BigInt::from(2 * i - 1))
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Product form of `c_{2n}(0, beta, 0)` for `n >= r`.
pub fn tilde_c_closed_form(n: u32, r: u32) -> Result<Poly> {
    if n < r {
        return Err(Error::Precondition(format!("closed form needs n >= r (n={n}, r={r})")));
    }
    let falling: BigInt = (0..r).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i));
    let pow2 = BigInt::one() << (2 * n - r) as usize;
    let central = factorial(2 * n - 2 * r) / (factorial(n - r) * factorial(n - r));
    let mut c = Rational::new(odd_double_factorial(r) * central, pow2 * falling);
    if r % 2 == 1 {
        c = -c;
    }
    // (beta/4)^n
    c /= Rational::from_integer(BigInt::from(4).pow(n));
    Ok(canon::konst(c) * canon::beta().pow(n))
}

fn check_lemma_prime(n: u32, r: u32, p: u64) -> Result<()> {
    crate::poly::is_prime(p).then_some(()).filter(|_| p % 2 == 1).ok_or(Error::NotOddPrime(p))?;
    if p <= (2 * r as u64 - 1).max(n as u64) {
        return Err(Error::Precondition(format!("need p > max(2r-1, n): p={p}, r={r}, n={n}")));
    }
    Ok(())
}

/// `c_{2n}(0, 4, 0) mod p`.
pub fn tilde_c_mod_p(n: u32, r: u32, p: u64) -> Result<u64> {
    check_lemma_prime(n, r, p)?;
    let c = chern_table_alpha0(r, 2 * n as usize).get(2 * n as i64);
    let v = c.eval(&[("b", int(4))]);
    rat_mod(&v, p)
}

/// `binomial((p + 2r - 1)/2, n) mod p`.
pub fn binomial_e(p: u64, r: u32, n: u32) -> Result<u64> {
    check_lemma_prime(n, r, p)?;
    let top = (p + 2 * r as u64 - 1) / 2;
    rat_mod(&Rational::from_integer(binomial(top, n as u64)), p)
}

/// `c_{2n}(0, 4, 0) = (-1)^n binomial((p + 2r - 1)/2, n)` in `F_p`.
pub fn binomial_congruence_holds(n: u32, r: u32, p: u64) -> Result<bool> {
    let lhs = tilde_c_mod_p(n, r, p)?;
    let e = binomial_e(p, r, n)?;
    let rhs = if n.is_multiple_of(2) { e } else { (p - e) % p };
    Ok(lhs == rhs)
}

/// `c_n(alpha, alpha^2, 0)` vanishes. The statement lives on the `gamma = 0` slice.
pub fn vanishes_on_discriminant(table: &ChernTable, n: i64) -> bool {
    let ring = Ring::canonical();
    let sq = canon::mono(1, 2, 0, 0);
    table.get(n).specialize(&[("b", sq), ("g", Poly::zero(&ring))]).is_zero()
}

/// `(1 / (2^{2r} (2r)!)) prod_{i=1}^{r} (1 - (2i-1)^2 beta)`.
pub fn c2r_product(r: u32) -> Poly {
    let ring = Ring::canonical();
    let scale = Rational::new(BigInt::one(), (BigInt::one() << (2 * r) as usize) * factorial(2 * r));
    (1..=r as i64).fold(Poly::constant(&ring, scale), |acc, i| {
        acc * (Poly::one(&ring) - canon::beta().scale_int((2 * i - 1) * (2 * i - 1)))
    })
}

/// `ch_n(F - E)` for `n >= 1`, computed with a formal square root of beta
/// and the conjugate-symmetrisation `x + x(s -> -s)`.
pub fn chern_character(r: u32, n: u32) -> Result<Poly> {
    assert!(n >= 1);
    let beta = canon::beta();
    let alpha = canon::alpha();
    let gamma = canon::gamma();
    let s = QuadExt::sqrt(&beta);
    let base = QuadExt::from_base(alpha.clone(), &beta).ring_sub(&s);
    let x_n = base.pow(n);
    let x_prev = base.pow(n - 1);
    let n_fact = Rational::from_integer(factorial(n));
    let prev_fact = Rational::from_integer(factorial(n - 1));

    // Every term multiplied by beta^2 so the formal inverses of s and beta
    // become polynomial: alpha/s + 2 gamma/s^3 = s (alpha beta + 2 gamma) / beta^2.
    let beta2 = &beta * &beta;
    let t1 = x_n.scale_base(&(&beta2 * &canon::konst(int(2 * r as i64 - 1) / &n_fact)));
    let inner = &(&alpha * &beta) + &gamma.scale_int(2);
    let t2 = x_n.ring_mul(&s).scale_base(&inner.scale(&(Rational::one() / &n_fact)));
    let t3 = x_prev.scale_base(&(&beta * &gamma).scale(&(int(2) / &prev_fact)));
    let total = t1.ring_sub(&t2).ring_sub(&t3);
    let symmetric = total.symmetrize();
    let cleared = symmetric
        .div_exact(&beta2)
        .map_err(|_| Error::SqrtContamination(format!("ch_{n} keeps a pole in beta")))?;
    Ok(cleared.scale(&Rational::new(BigInt::one(), BigInt::one() << (n + 1) as usize)))
}

/// Chern classes from the Chern character via `c(t) = exp(sum (-1)^{n-1} (n-1)! ch_n t^n)`,
/// i.e. `n c_n = sum_{i=1}^{n} i l_i c_{n-i}`.
pub fn chern_oracle_via_charclasses(r: u32, n: usize) -> Result<ChernTable> {
    let ring = Ring::canonical();
    let mut logs = vec![Poly::zero(&ring)];
    for i in 1..=n as u32 {
        let ch = chern_character(r, i)?;
        let sign = if i % 2 == 1 { 1 } else { -1 };
        let coeff = Rational::from_integer(factorial(i - 1) * BigInt::from(sign));
        logs.push(ch.scale(&coeff));
    }
    let mut c = vec![Poly::one(&ring)];
    for m in 1..=n {
        let mut acc = Poly::zero(&ring);
        for i in 1..=m {
            acc = acc + (&logs[i] * &c[m - i]).scale_int(i as i64);
        }
        c.push(acc.scale(&rat(1, m as i64)));
    }
    Ok(ChernTable { r, variant: Variant::Full, entries: c })
}

/// True if every coefficient denominator of `c_n` divides `2^n n!`.
pub fn denominators_bounded(c_n: &Poly, n: u32) -> bool {
    let bound = (BigInt::one() << n as usize) * factorial(n);
    use num_integer::Integer;
    c_n.terms().all(|(_, q)| bound.is_multiple_of(q.denom()))
}
