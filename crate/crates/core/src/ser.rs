//! Serde helpers: exact numbers travel as decimal strings.

use num_bigint::BigInt;
use serde::Serializer;

use crate::poly::Rational;

pub fn rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

pub fn bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(BigInt::to_string))
}
