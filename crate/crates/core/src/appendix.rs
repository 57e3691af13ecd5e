//! Tridiagonal determinant and characteristic-polynomial identities, checked
//! symbolically in the auxiliary ring `Q[z, a, b, s]`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chern::{binomial, chern_table_gamma0};
use crate::error::{Error, Result};
use crate::poly::{
    det_cofactor, det_poly_matrix, int, rat, rref, CommRing, Poly, PolyMatrix, QuadExt, Rational, Ring,
};

fn aux() -> Arc<Ring> {
    Ring::auxiliary()
}

fn v(name: &str) -> Poly {
    Poly::var(&aux(), name)
}

fn c(x: i64) -> Poly {
    Poly::constant(&aux(), int(x))
}

/// `c~(n, r, b)`: `c~(0) = 1`, `c~(1) = r`,
/// `c~(n) = (r+1-n) c~(n-1) + b (2r+1-n)(n-1) c~(n-2)`.
pub fn tilde_c_int(n: u32, r: u32) -> Poly {
    let b = v("b");
    let (r, n) = (r as i64, n as i64);
    let mut prev = c(1);
    if n == 0 {
        return prev;
    }
    let mut cur = c(r);
    for m in 2..=n {
        let next = cur.scale_int(r + 1 - m) + (&b * &prev).scale_int((2 * r + 1 - m) * (m - 1));
        prev = cur;
        cur = next;
    }
    cur
}

/// `prod_{j=1}^{r} [(2j-1)^2 b - j(j-1)]`.
pub fn top_tilde_product(r: u32) -> Poly {
    (1..=r as i64).fold(c(1), |acc, j| acc * (v("b").scale_int((2 * j - 1) * (2 * j - 1)) - c(j * (j - 1))))
}

pub fn verify_top_tilde_product(r: u32) -> bool {
    tilde_c_int(2 * r, r) == top_tilde_product(r)
}

/// `c~(n, r, (1 - beta)/4)` against `n! c_n(1, beta, 0)`.
pub fn verify_bridge(r: u32, n: u32) -> Result<bool> {
    let canon = Ring::canonical();
    let quarter = (Poly::one(&canon) - Poly::var(&canon, "b")).scale(&rat(1, 4));
    let zero = Poly::zero(&canon);
    let lhs = tilde_c_int(n, r)
        .specialize_into(&canon, &[("z", zero.clone()), ("a", zero.clone()), ("s", zero), ("b", quarter)])?;
    let fact = (1..=n as i64).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    let cn = chern_table_gamma0(r, n as usize).get(n as i64).specialize(&[("a", Poly::one(&canon))]);
    Ok(lhs == cn.scale(&Rational::from_integer(fact)))
}

/// `D(2n; z, a)`: diagonal `z(a + n - i + 1)`, superdiagonal `2n - i`,
/// subdiagonal `i` (1-based `i`).
pub fn build_d(n: u32) -> PolyMatrix {
    let size = 2 * n as usize;
    let (z, a) = (v("z"), v("a"));
    PolyMatrix::from_fn(&aux(), size, size, |i, j| {
        let i1 = i as i64 + 1;
        if i == j {
            &z * &(&a + &c(n as i64 - i1 + 1))
        } else if j == i + 1 {
            c(2 * n as i64 - i1)
        } else if i == j + 1 {
            c(j as i64 + 1)
        } else {
            Poly::zero(&aux())
        }
    })
}

/// `prod_{j=1}^{n} [z^2 (a+j)(a-j+1) - (2j-1)^2]`.
pub fn tridiagonal_product(n: u32) -> Poly {
    let (z, a) = (v("z"), v("a"));
    let z2 = &z * &z;
    (1..=n as i64)
        .fold(c(1), |acc, j| acc * (&z2 * &(&a + &c(j)) * (&a - &c(j - 1)) - c((2 * j - 1) * (2 * j - 1))))
}

pub fn verify_tridiagonal_det(size: u32) -> Result<bool> {
    if size % 2 == 1 {
        return Err(Error::Precondition(format!("D needs even size, got {size}")));
    }
    let n = size / 2;
    Ok(det_poly_matrix(&build_d(n))? == tridiagonal_product(n))
}

/// `C~(n, r, b)` over the formal square root `s` of `radicand`: diagonal
/// `r + 1 - i`, entry `(i, i-1)` is `s(i-1)`, entry `(i, i+1)` is `s(2r-i)`.
pub fn ctilde_matrix(n: u32, r: u32, radicand: &Poly) -> Vec<Vec<QuadExt>> {
    let s = QuadExt::sqrt(radicand);
    let zero = s.zero_like();
    let konst = |x: i64| QuadExt::from_base(c(x), radicand);
    (1..=n as i64)
        .map(|i| {
            (1..=n as i64)
                .map(|j| {
                    if i == j {
                        konst(r as i64 + 1 - i)
                    } else if j == i - 1 {
                        s.ring_mul(&konst(i - 1))
                    } else if j == i + 1 {
                        s.ring_mul(&konst(2 * r as i64 - i))
                    } else {
                        zero.clone()
                    }
                })
                .collect()
        })
        .collect()
}

/// `det C~(n, r, -b) = c~(n, r, b)`.
pub fn ctilde_matrix_check(n: u32, r: u32) -> Result<bool> {
    let neg_b = -v("b");
    let det = det_cofactor(&ctilde_matrix(n, r, &neg_b)).into_base()?;
    Ok(det == tilde_c_int(n, r))
}

/// `C~(2n, n, b)` equals `s * D(2n; 1/s, 0)` entry by entry, and pushing
/// the product for `det D` through that scaling gives the product for
/// `c~(2n, n, b)`.
pub fn scaling_check(n: u32) -> Result<bool> {
    let b = v("b");
    let ct = ctilde_matrix(2 * n, n, &b);
    let zero = Poly::zero(&aux());
    let d = build_d(n);
    // s * (c1 z + c0) at z = 1/s is c1 + c0 s
    for (i, row) in ct.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            let e = d.get(i, j).specialize(&[("a", zero.clone())]);
            let coeffs = e.univariate_coeffs("z")?;
            let c0 = coeffs.first().cloned().unwrap_or_else(Rational::zero);
            let c1 = coeffs.get(1).cloned().unwrap_or_else(Rational::zero);
            let want = QuadExt::new(Poly::constant(&aux(), c1), Poly::constant(&aux(), c0), &b);
            if coeffs.len() > 2 || &want != entry {
                return Ok(false);
            }
        }
    }
    // s^{2n} P(1/s, 0) with s^2 = -b, P(z, 0) even in z
    let p = tridiagonal_product(n).specialize(&[("a", zero)]);
    let coeffs = p.univariate_coeffs("z")?;
    let neg_b = -b;
    let mut chained = Poly::zero(&aux());
    for (e, co) in coeffs.iter().enumerate() {
        if co.is_zero() {
            continue;
        }
        if e % 2 == 1 {
            return Ok(false);
        }
        let power = n as usize - e / 2;
        chained = chained + neg_b.pow(power as u32).scale(co);
    }
    Ok(chained == top_tilde_product(n) && chained == tilde_c_int(2 * n, n))
}

type QMatrix = Vec<Vec<Rational>>;

/// `A_n`: diagonal `i`, subdiagonal entry `(i, i-1) = i - 1`.
pub fn a_matrix(n: usize) -> QMatrix {
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    if i == j {
                        int(i as i64)
                    } else if j + 1 == i {
                        int(i as i64 - 1)
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// `B_n`: diagonal `2i`, superdiagonal `-(n-i)`, subdiagonal `i-1`.
pub fn b_matrix(n: usize) -> QMatrix {
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    if i == j {
                        int(2 * i as i64)
                    } else if j == i + 1 {
                        int(-(n as i64 - i as i64))
                    } else if j + 1 == i {
                        int(i as i64 - 1)
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Row vector `(C(k-1, j-1))_{j=1..n}`.
pub fn binomial_row(k: usize, n: usize) -> Vec<Rational> {
    (1..=n).map(|j| Rational::from_integer(binomial(k as u64 - 1, j as u64 - 1))).collect()
}

fn row_times(x: &[Rational], m: &QMatrix) -> Vec<Rational> {
    (0..m.len())
        .map(|j| x.iter().zip(m).fold(Rational::zero(), |acc, (xi, row)| acc + xi * &row[j]))
        .collect()
}

fn scaled(x: &[Rational], f: i64) -> Vec<Rational> {
    x.iter().map(|y| y * int(f)).collect()
}

fn to_poly_matrix(m: &QMatrix) -> PolyMatrix {
    PolyMatrix::from_fn(&aux(), m.len(), m.len(), |i, j| Poly::constant(&aux(), m[i][j].clone()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenReport {
    pub n: usize,
    /// `alpha_k A_n = k alpha_k` for every `k`.
    pub a_left_eigenvectors: bool,
    /// `chi(B_n) = (z - (n+1))^n`.
    pub b_charpoly: bool,
    pub b_eigenspace_dim: usize,
    /// `alpha_n B_n = (n+1) alpha_n`.
    pub b_eigenvector_is_last: bool,
    /// `alpha_k (n+1 - B_n) = (n-k) alpha_{k+1}`, and `alpha_n` is killed.
    pub shift_maps_eigenvectors: bool,
}

impl EigenReport {
    pub fn passed(&self) -> bool {
        self.a_left_eigenvectors
            && self.b_charpoly
            && self.b_eigenspace_dim == 1
            && self.b_eigenvector_is_last
            && self.shift_maps_eigenvectors
    }
}

pub fn an_bn_eigen_checks(n: usize) -> Result<EigenReport> {
    let a = a_matrix(n);
    let b = b_matrix(n);
    let a_left = (1..=n).all(|k| {
        let row = binomial_row(k, n);
        row_times(&row, &a) == scaled(&row, k as i64)
    });
    let chi = det_poly_matrix(&to_poly_matrix(&b).char_matrix("z")?)?;
    let expected = (v("z") - c(n as i64 + 1)).pow(n as u32);
    let mut shifted: QMatrix = b.clone();
    for (i, row) in shifted.iter_mut().enumerate() {
        row[i] -= int(n as i64 + 1);
    }
    let rank = rref(&mut shifted).len();
    let last = binomial_row(n, n);
    let b_tilde: QMatrix = b
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| if i == j { int(n as i64 + 1) - x } else { -x.clone() })
                .collect()
        })
        .collect();
    let shift = (1..=n).all(|k| {
        let got = row_times(&binomial_row(k, n), &b_tilde);
        if k < n {
            got == scaled(&binomial_row(k + 1, n), (n - k) as i64)
        } else {
            got.iter().all(Zero::is_zero)
        }
    });
    Ok(EigenReport {
        n,
        a_left_eigenvectors: a_left,
        b_charpoly: chi == expected,
        b_eigenspace_dim: n - rank,
        b_eigenvector_is_last: row_times(&last, &b) == scaled(&last, n as i64 + 1),
        shift_maps_eigenvectors: shift,
    })
}

/// Characteristic polynomial `det(z I - M)` together with the matrix.
#[derive(Debug, Clone)]
pub struct CharPoly {
    pub matrix: PolyMatrix,
    pub poly: Poly,
}

impl CharPoly {
    pub fn of(matrix: PolyMatrix) -> Result<CharPoly> {
        let poly = det_poly_matrix(&matrix.char_matrix("z")?)?;
        Ok(CharPoly { matrix, poly })
    }

    /// Monic of degree `size`, with `det M = (-1)^size chi(0)`.
    pub fn is_consistent(&self) -> Result<bool> {
        let size = self.matrix.rows();
        let rest = &self.poly - &v("z").pow(size as u32);
        let monic =
            self.poly.degree_in("z") == size as u32 && (rest.is_zero() || rest.degree_in("z") < size as u32);
        let constant = self.poly.specialize(&[("z", Poly::zero(&aux()))]);
        let det = det_poly_matrix(&self.matrix)?;
        let sign = if size.is_multiple_of(2) { 1 } else { -1 };
        Ok(monic && det == constant.scale_int(sign))
    }
}

/// `C_n(s) = (n+1) A_n + s B_n` with `s` a plain parameter.
pub fn c_matrix(n: usize) -> PolyMatrix {
    let (a, b) = (a_matrix(n), b_matrix(n));
    let s = v("s");
    PolyMatrix::from_fn(&aux(), n, n, |i, j| {
        Poly::constant(&aux(), &a[i][j] * int(n as i64 + 1)) + s.scale(&b[i][j])
    })
}

pub fn charpoly_cn(n: usize) -> Result<CharPoly> {
    CharPoly::of(c_matrix(n))
}

/// `chi(C_n(s); z) = prod_{k=1}^{n} (z - (s+k)(n+1))`.
pub fn verify_cn_charpoly(n: usize) -> Result<bool> {
    let cp = charpoly_cn(n)?;
    let (z, s) = (v("z"), v("s"));
    let expected = (1..=n as i64).fold(c(1), |acc, k| acc * (&z - &(&s + &c(k)).scale_int(n as i64 + 1)));
    Ok(cp.poly == expected && cp.is_consistent()?)
}

/// Tridiagonal with diagonal `diag(i)`, superdiagonal `n - i`, subdiagonal `i`.
fn l_shape(n: usize, diag: impl Fn(i64) -> Poly) -> PolyMatrix {
    PolyMatrix::from_fn(&aux(), n, n, |i, j| {
        let i1 = i as i64 + 1;
        if i == j {
            diag(i1)
        } else if j == i + 1 {
            c(n as i64 - i1)
        } else if i == j + 1 {
            c(j as i64 + 1)
        } else {
            Poly::zero(&aux())
        }
    })
}

/// `L_n(a)`: diagonal `i a`.
pub fn l_matrix(n: usize) -> PolyMatrix {
    l_shape(n, |i| v("a").scale_int(i))
}

pub fn charpoly_ln(n: usize) -> Result<CharPoly> {
    if n % 2 == 1 {
        return Err(Error::Precondition(format!("L_n needs even n, got {n}")));
    }
    CharPoly::of(l_matrix(n))
}

/// `prod_{i+j=n+1, i<j} [f(i) f(j) - (i-j)^2]`.
fn paired_product(n: usize, f: impl Fn(i64) -> Poly) -> Poly {
    let n = n as i64;
    (1..=n / 2).fold(c(1), |acc, i| {
        let j = n + 1 - i;
        acc * (&f(i) * &f(j) - c((i - j) * (i - j)))
    })
}

/// `Lambda_n(a; z)` and the affine restatement with diagonal `a i + b`.
pub fn verify_ln_charpoly(n: usize) -> Result<bool> {
    let cp = charpoly_ln(n)?;
    let (z, a, b) = (v("z"), v("a"), v("b"));
    let lambda = paired_product(n, |i| &z - &a.scale_int(i));
    let eps = |i: i64| &a.scale_int(i) + &b;
    let eps_det = det_poly_matrix(&l_shape(n, eps))?;
    Ok(cp.poly == lambda && cp.is_consistent()? && eps_det == paired_product(n, eps))
}
