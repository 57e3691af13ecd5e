use super::{CommRing, Poly};
use crate::error::{Error, Result};

/// Element `even + s * odd` of `R[s]/(s^2 - radicand)`.
///
/// The square root is kept formal: products fold `s^2` back into the
/// radicand, and [`QuadExt::conjugate`] sends `s` to `-s`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadExt {
    pub even: Poly,
    pub odd: Poly,
    radicand: Poly,
}

impl QuadExt {
    pub fn new(even: Poly, odd: Poly, radicand: &Poly) -> QuadExt {
        QuadExt { even, odd, radicand: radicand.clone() }
    }

    pub fn from_base(x: Poly, radicand: &Poly) -> QuadExt {
        let zero = Poly::zero(x.ring());
        QuadExt::new(x, zero, radicand)
    }

    /// The formal square root itself.
    pub fn sqrt(radicand: &Poly) -> QuadExt {
        let ring = radicand.ring();
        QuadExt::new(Poly::zero(ring), Poly::one(ring), radicand)
    }

    pub fn radicand(&self) -> &Poly {
        &self.radicand
    }

    pub fn conjugate(&self) -> QuadExt {
        QuadExt::new(self.even.clone(), -&self.odd, &self.radicand)
    }

    /// `x + conjugate(x)`, which lies in the base ring.
    pub fn symmetrize(&self) -> Poly {
        self.even.scale_int(2)
    }

    /// The base-ring value, failing if an `s` term survives.
    pub fn into_base(self) -> Result<Poly> {
        if self.odd.is_zero() {
            Ok(self.even)
        } else {
            Err(Error::SqrtContamination(format!("odd part {} remains", self.odd)))
        }
    }

    pub fn scale_base(&self, c: &Poly) -> QuadExt {
        QuadExt::new(&self.even * c, &self.odd * c, &self.radicand)
    }

    pub fn pow(&self, mut e: u32) -> QuadExt {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = CommRing::ring_mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = CommRing::ring_mul(&base, &base);
            }
        }
        acc
    }
}

impl CommRing for QuadExt {
    fn zero_like(&self) -> Self {
        QuadExt::from_base(Poly::zero(self.even.ring()), &self.radicand)
    }

    fn one_like(&self) -> Self {
        QuadExt::from_base(Poly::one(self.even.ring()), &self.radicand)
    }

    fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    fn ring_add(&self, o: &Self) -> Self {
        QuadExt::new(&self.even + &o.even, &self.odd + &o.odd, &self.radicand)
    }

    fn ring_sub(&self, o: &Self) -> Self {
        QuadExt::new(&self.even - &o.even, &self.odd - &o.odd, &self.radicand)
    }

    fn ring_mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.radicand, o.radicand);
        let even = &(&self.even * &o.even) + &(&(&self.odd * &o.odd) * &self.radicand);
        let odd = &(&self.even * &o.odd) + &(&self.odd * &o.even);
        QuadExt::new(even, odd, &self.radicand)
    }
}
