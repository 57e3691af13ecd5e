//! Canonical text form: `num/den*a^i*b^j*g^k` terms, largest monomial first,
//! joined by ` + `. Exponent 1 is written bare, zero exponents are omitted
//! and the zero polynomial prints as `0`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::{Monomial, Poly, Rational, Ring};
use crate::error::{Error, Result};

pub(crate) fn fmt_rational(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names = self.ring().names();
        let mut first = true;
        for (m, c) in self.terms().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            f.write_str(&fmt_rational(c))?;
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

fn parse_rational(tok: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad coefficient '{tok}'"));
    match tok.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(tok.trim()).map_err(|_| bad())?)),
    }
}

impl Poly {
    /// Parse the canonical text form (also accepts terms without a leading
    /// coefficient and integers without a denominator).
    pub fn parse(ring: &Arc<Ring>, s: &str) -> Result<Poly> {
        let s = s.trim();
        let mut out = Poly::zero(ring);
        if s == "0" {
            return Ok(out);
        }
        for term in s.split(" + ") {
            let mut coeff = Rational::one();
            let mut exps = vec![0u32; ring.nvars()];
            for (i, factor) in term.trim().split('*').enumerate() {
                let factor = factor.trim();
                let starts_numeric = factor.chars().next().is_some_and(|ch| ch.is_ascii_digit() || ch == '-');
                if i == 0 && starts_numeric {
                    coeff = parse_rational(factor)?;
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in '{factor}'")))?,
                    ),
                    None => (factor, 1),
                };
                let idx =
                    ring.index_of(name).ok_or_else(|| Error::Parse(format!("unknown variable '{name}'")))?;
                exps[idx] += e;
            }
            out.add_term(Monomial(exps), coeff);
        }
        Ok(out)
    }
}
