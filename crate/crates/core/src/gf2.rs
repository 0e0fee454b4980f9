//! Dense GF(2) matrices and affine solution sets with `u64` rows.

use std::fmt;

/// Iterate over the indices of the set bits of `mask`.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A matrix over GF(2) with at most 64 columns.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(cols <= 64, "at most 64 columns");
        BitMatrix {
            cols,
            rows: vec![0; rows],
        }
    }

    pub fn square(n: usize) -> Self {
        Self::zeros(n, n)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::square(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<u64>) -> Self {
        assert!(cols <= 64, "at most 64 columns");
        let mask = low_mask(cols);
        assert!(rows.iter().all(|r| r & !mask == 0), "row wider than matrix");
        BitMatrix { cols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> u64 {
        self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.rows[i] ^= 1 << j;
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.rows.len(), other.rows.len());
        BitMatrix {
            cols: self.cols,
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a ^ b).collect(),
        }
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows.len());
        for (i, &r) in self.rows.iter().enumerate() {
            for j in bits(r) {
                t.rows[j] |= 1 << i;
            }
        }
        t
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows.len());
        let mut out = BitMatrix::zeros(self.rows.len(), other.cols);
        for (i, &r) in self.rows.iter().enumerate() {
            let mut acc = 0;
            for k in bits(r) {
                acc ^= other.rows[k];
            }
            out.rows[i] = acc;
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows.len() == self.cols && *self == self.transpose()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn clear_diagonal(&mut self) {
        for i in 0..self.rows.len().min(self.cols) {
            self.set(i, i, false);
        }
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.rows.clone())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows.len(), self.cols)?;
        for &r in &self.rows {
            let line: String = (0..self.cols)
                .map(|j| if r >> j & 1 == 1 { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Rank of a set of row vectors, by elimination on the lowest set bit.
pub fn rank_of_rows(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    let mut i = 0;
    while i < rows.len() {
        let pivot = rows[i];
        if pivot == 0 {
            i += 1;
            continue;
        }
        let lsb = pivot & pivot.wrapping_neg();
        for r in rows.iter_mut().skip(i + 1) {
            if *r & lsb != 0 {
                *r ^= pivot;
            }
        }
        rank += 1;
        i += 1;
    }
    rank
}

pub fn gf2_rank(m: &BitMatrix) -> usize {
    m.rank()
}

/// One linear equation `coeffs . x = rhs` over GF(2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Equation {
    pub coeffs: u64,
    pub rhs: bool,
}

/// The solution set `particular + span(basis)` of a linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpace {
    pub vars: usize,
    pub particular: u64,
    pub basis: Vec<u64>,
}

impl AffineSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn len(&self) -> u128 {
        1u128 << self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: u64) -> bool {
        let mut v = x ^ self.particular;
        for &b in &self.basis {
            let lead = 63 - b.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= b;
            }
        }
        v == 0
    }

    /// All points of the space; the basis is kept in reduced echelon form so
    /// iteration order is deterministic.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        assert!(self.basis.len() < 64);
        (0u64..1 << self.basis.len()).map(move |k| {
            let mut x = self.particular;
            for (i, b) in self.basis.iter().enumerate() {
                if k >> i & 1 == 1 {
                    x ^= b;
                }
            }
            x
        })
    }
}

/// Solve a linear system over GF(2) in `vars` unknowns.
pub fn solve(vars: usize, equations: &[Equation]) -> Option<AffineSpace> {
    assert!(vars <= 64);
    // Gauss-Jordan on augmented rows; the rhs sits in a separate flag.
    let mut rows: Vec<(u64, bool)> = equations.iter().map(|e| (e.coeffs, e.rhs)).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for col in 0..vars {
        let bit = 1u64 << col;
        let Some(p) = (r..rows.len()).find(|&i| rows[i].0 & bit != 0) else {
            continue;
        };
        rows.swap(r, p);
        let (pc, pr) = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.0 & bit != 0 {
                row.0 ^= pc;
                row.1 ^= pr;
            }
        }
        pivots.push((r, col));
        r += 1;
    }
    if rows[r..].iter().any(|&(c, rhs)| c == 0 && rhs) {
        return None;
    }
    let mut particular = 0u64;
    let mut pivot_mask = 0u64;
    for &(row, col) in &pivots {
        pivot_mask |= 1 << col;
        if rows[row].1 {
            particular |= 1 << col;
        }
    }
    let mut basis = Vec::new();
    for free in 0..vars {
        if pivot_mask >> free & 1 == 1 {
            continue;
        }
        let mut v = 1u64 << free;
        for &(row, col) in &pivots {
            if rows[row].0 >> free & 1 == 1 {
                v |= 1 << col;
            }
        }
        basis.push(v);
    }
    Some(AffineSpace {
        vars,
        particular,
        basis: reduced_basis(basis),
    })
}

/// Reduced echelon form keyed on leading bits, so `contains` can reduce greedily.
fn reduced_basis(vectors: Vec<u64>) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for mut v in vectors {
        for &b in &basis {
            let lead = 1u64 << (63 - b.leading_zeros());
            if v & lead != 0 {
                v ^= b;
            }
        }
        if v == 0 {
            continue;
        }
        let lead = 1u64 << (63 - v.leading_zeros());
        for b in basis.iter_mut() {
            if *b & lead != 0 {
                *b ^= v;
            }
        }
        basis.push(v);
    }
    basis.sort_by_key(|b| std::cmp::Reverse(*b));
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_basics() {
        assert_eq!(BitMatrix::square(5).rank(), 0);
        assert_eq!(BitMatrix::identity(7).rank(), 7);
        let m = BitMatrix::from_rows(3, vec![0b011, 0b110, 0b101]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn colour_form_rank_two() {
        // C(x,y) = [chi(x) != chi(y)] with both colours present
        let chi = [false, true, true, false, true];
        let mut m = BitMatrix::square(5);
        for i in 0..5 {
            for j in 0..5 {
                m.set(i, j, chi[i] != chi[j]);
            }
        }
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn inconsistent_system() {
        let eqs = [
            Equation { coeffs: 0b11, rhs: false },
            Equation { coeffs: 0b11, rhs: true },
        ];
        assert!(solve(2, &eqs).is_none());
    }

    fn brute_solutions(vars: usize, eqs: &[Equation]) -> Vec<u64> {
        (0u64..1 << vars)
            .filter(|&x| eqs.iter().all(|e| ((e.coeffs & x).count_ones() % 2 == 1) == e.rhs))
            .collect()
    }

    proptest! {
        #[test]
        fn solve_matches_brute_force(vars in 1usize..8, raw in proptest::collection::vec((0u64..256, any::<bool>()), 0..10)) {
            let eqs: Vec<Equation> = raw.iter().map(|&(c, r)| Equation { coeffs: c & low_mask(vars), rhs: r }).collect();
            let brute = brute_solutions(vars, &eqs);
            match solve(vars, &eqs) {
                None => prop_assert!(brute.is_empty()),
                Some(space) => {
                    let mut got: Vec<u64> = space.iter().collect();
                    got.sort();
                    prop_assert_eq!(got, brute.clone());
                    for x in 0u64..1 << vars {
                        prop_assert_eq!(space.contains(x), brute.contains(&x));
                    }
                }
            }
        }

        #[test]
        fn rank_is_transpose_invariant(rows in proptest::collection::vec(0u64..64, 1..7)) {
            let m = BitMatrix::from_rows(6, rows);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }
    }
}
