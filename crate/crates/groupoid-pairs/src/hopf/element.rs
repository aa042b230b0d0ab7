//! Sparse exact-rational elements of the weak Hopf algebra and its tensor
//! powers. Structure constants are 0/1; rationals only enter through user
//! coefficients and linear solving, and every comparison is exact.

use num_rational::Rational64;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

pub type Rat = Rational64;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// Sparse vector over an ordered index type; zero coefficients are pruned.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sparse<K: Ord + Copy> {
    coeffs: BTreeMap<K, Rat>,
}

impl<K: Ord + Copy> Default for Sparse<K> {
    fn default() -> Self {
        Sparse {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Copy> Sparse<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        let mut s = Self::zero();
        s.add_term(k, Rat::one());
        s
    }

    pub fn add_term(&mut self, k: K, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn get(&self, k: &K) -> Rat {
        self.coeffs.get(k).copied().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rat)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &K> {
        self.coeffs.keys()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, &c) in other.iter() {
            out.add_term(k, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, &c) in other.iter() {
            out.add_term(k, -c);
        }
        out
    }

    pub fn scale(&self, c: Rat) -> Self {
        let mut out = Self::zero();
        if c.is_zero() {
            return out;
        }
        for (&k, &v) in self.iter() {
            out.add_term(k, v * c);
        }
        out
    }
}

/// Element of the algebra itself, indexed by basis cell.
pub type AlgebraElement = Sparse<usize>;
/// Element of the tensor square.
pub type TensorElement = Sparse<(usize, usize)>;
/// Element of the tensor cube.
pub type TripleElement = Sparse<(usize, usize, usize)>;

/// Exact Gaussian elimination: solve `A·x = b` for a dense column-major
/// system; returns one solution if the system is consistent.
#[allow(clippy::needless_range_loop)]
pub fn solve_exact(rows: usize, cols: usize, a: &[Rat], b: &[Rat]) -> Option<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rat> = (0..cols).map(|c| a[r * cols + c]).collect();
            row.push(b[r]);
            row
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = m[rank][col];
        for c in col..=cols {
            let v = m[rank][c] / inv;
            m[rank][c] = v;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col];
                for c in col..=cols {
                    let sub = factor * m[rank][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    // Inconsistent if a zero row has nonzero rhs.
    for r in 0..rows {
        if m[r][..cols].iter().all(|v| v.is_zero()) && !m[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for col in 0..cols {
        if let Some(pr) = pivot_of_col[col] {
            x[col] = m[pr][cols];
        }
    }
    Some(x)
}
