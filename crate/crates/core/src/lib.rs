//! Exact computation and certification of virtual classes of rank-2
//! Brill-Noether loci.

pub mod appendix;
pub mod certify;
pub mod chern;
pub mod error;
pub mod pairing;
pub mod poly;
pub mod porteous;
pub(crate) mod ser;
pub mod suites;

pub use error::{Error, Result};
