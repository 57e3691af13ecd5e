use std::collections::HashMap;
use std::sync::Arc;

use super::{CommRing, Poly, Ring};
use crate::error::{Error, Result};

/// Rectangular matrix of polynomials over a single ring.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn from_fn(
        ring: &Arc<Ring>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Poly,
    ) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert!(Arc::ptr_eq(e.ring(), ring) || e.ring() == ring, "entry ({i},{j}) in foreign ring");
                entries.push(e);
            }
        }
        PolyMatrix { ring: ring.clone(), rows, cols, entries }
    }

    pub fn from_rows(ring: &Arc<Ring>, rows: Vec<Vec<Poly>>) -> Result<PolyMatrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Precondition("ragged matrix rows".into()));
        }
        for e in rows.iter().flatten() {
            if e.ring() != ring {
                return Err(Error::RingMismatch("matrix entry".into()));
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(ring: &Arc<Ring>, n: usize) -> PolyMatrix {
        PolyMatrix::from_fn(ring, n, n, |i, j| if i == j { Poly::one(ring) } else { Poly::zero(ring) })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn to_rows(&self) -> Vec<Vec<Poly>> {
        self.entries.chunks(self.cols.max(1)).map(<[Poly]>::to_vec).collect()
    }

    /// Entrywise map, possibly into another ring.
    pub fn map(&self, ring: &Arc<Ring>, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        PolyMatrix::from_fn(ring, self.rows, self.cols, |i, j| f(self.get(i, j)))
    }

    /// `z * I - self` for a square matrix.
    pub fn char_matrix(&self, var: &str) -> Result<PolyMatrix> {
        self.require_square()?;
        let z = Poly::var(&self.ring, var);
        Ok(PolyMatrix::from_fn(&self.ring, self.rows, self.cols, |i, j| {
            let m = -self.get(i, j);
            if i == j {
                &z + &m
            } else {
                m
            }
        }))
    }

    fn require_square(&self) -> Result<()> {
        if self.rows == self.cols {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn det(&self) -> Result<Poly> {
        det_poly_matrix(self)
    }
}

/// A way of computing the determinant of a square polynomial matrix.
pub trait DeterminantStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn det(&self, m: &PolyMatrix) -> Result<Poly>;
}

/// Fraction-free elimination: every intermediate division is exact in the
/// polynomial ring.
#[derive(Debug, Default, Clone, Copy)]
pub struct Bareiss;

/// Expansion along rows with memoised minors (division free).
#[derive(Debug, Default, Clone, Copy)]
pub struct Cofactor;

impl DeterminantStrategy for Bareiss {
    fn name(&self) -> &'static str {
        "bareiss"
    }

    fn det(&self, m: &PolyMatrix) -> Result<Poly> {
        m.require_square()?;
        let n = m.rows;
        let ring = &m.ring;
        if n == 0 {
            return Ok(Poly::one(ring));
        }
        let mut a = m.to_rows();
        let mut negate = false;
        let mut prev = Poly::one(ring);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return Ok(Poly::zero(ring)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = if k == 0 { num } else { num.div_exact(&prev)? };
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }
}

impl DeterminantStrategy for Cofactor {
    fn name(&self) -> &'static str {
        "cofactor"
    }

    fn det(&self, m: &PolyMatrix) -> Result<Poly> {
        m.require_square()?;
        if m.rows == 0 {
            return Ok(Poly::one(&m.ring));
        }
        Ok(det_cofactor(&m.to_rows()))
    }
}

/// Division-free determinant over any commutative ring, expanding row by row
/// and caching each minor by its set of used columns. `O(n 2^n)` products.
pub fn det_cofactor<T: CommRing>(rows: &[Vec<T>]) -> T {
    let n = rows.len();
    assert!(n > 0 && n <= 24, "cofactor expansion size");
    assert!(rows.iter().all(|r| r.len() == n), "square matrix");
    let mut memo: HashMap<u32, T> = HashMap::new();
    minor(rows, 0, &mut memo)
}

fn minor<T: CommRing>(rows: &[Vec<T>], used: u32, memo: &mut HashMap<u32, T>) -> T {
    let n = rows.len();
    let row = used.count_ones() as usize;
    if row == n {
        return rows[0][0].one_like();
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut acc = rows[0][0].zero_like();
    for j in 0..n {
        if used & (1 << j) != 0 || rows[row][j].is_zero() {
            continue;
        }
        let sub = minor(rows, used | (1 << j), memo);
        if sub.is_zero() {
            continue;
        }
        let term = rows[row][j].ring_mul(&sub);
        // sign = (-1)^(number of used columns to the right of j)
        let inversions = (used >> (j + 1)).count_ones();
        acc = if inversions.is_multiple_of(2) { acc.ring_add(&term) } else { acc.ring_sub(&term) };
    }
    memo.insert(used, acc.clone());
    acc
}

/// Determinant strategies by name.
pub fn determinant_registry() -> Vec<Box<dyn DeterminantStrategy>> {
    vec![Box::new(Bareiss), Box::new(Cofactor)]
}

pub fn det_with(name: &str, m: &PolyMatrix) -> Result<Poly> {
    let strategy = determinant_registry()
        .into_iter()
        .find(|s| s.name() == name)
        .ok_or_else(|| Error::UnknownStrategy { kind: "determinant strategy", name: name.to_string() })?;
    strategy.det(m)
}

/// Exact determinant by fraction-free elimination.
pub fn det_poly_matrix(m: &PolyMatrix) -> Result<Poly> {
    Bareiss.det(m)
}
