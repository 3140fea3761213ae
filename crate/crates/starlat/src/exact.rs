//! Exact integer and rational linear algebra.
//!
//! All rationals are [`num_rational::BigRational`], which keeps every value
//! reduced with a positive denominator, so equality is structural. Integer
//! determinants and minors go through fraction-free (Bareiss) elimination to
//! keep intermediate growth polynomial; the sequence constructor feeds this
//! code minors whose entries run to hundreds of bits.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for a small rational constant.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Parses "num/den" or a bare integer.
pub fn rat_parse(s: &str) -> Result<Rational> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::InvalidParameter(format!("bad integer `{t}`")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::InvalidParameter("zero denominator".into()));
            }
            Ok(Rational::new(parse_int(n)?, den))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Renders a rational as "num/den", omitting "/den" when the denominator is 1.
/// (This matches `BigRational`'s `Display`, kept as a named helper so the
/// serialization convention is greppable.)
pub fn rat_str(r: &Rational) -> String {
    r.to_string()
}

/// Extended gcd: returns `(g, x, y)` with `g = gcd(a,b) >= 0` and `x*a + y*b = g`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    (e.gcd, e.x, e.y)
}

/// gcd of the absolute values of all entries; 0 for the all-zero vector.
pub fn gcd_vector(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        assert!(!rows.is_empty(), "empty matrix");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape");
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .map(|l| &self[(i, l)] * &other[(l, j)])
                .sum()
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * c)
    }

    /// lcm of all entry denominators (always >= 1).
    pub fn denominator_lcm(&self) -> BigInt {
        self.data
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
    }

    /// Clears denominators: returns `(s, N)` with `N = s * self` integral and
    /// `s` the minimal positive such integer.
    pub fn clear_denominators(&self) -> (BigInt, IntegerMatrix) {
        let s = self.denominator_lcm();
        let sr = Rational::from_integer(s.clone());
        let data = self
            .data
            .iter()
            .map(|r| {
                let v = r * &sr;
                debug_assert!(v.is_integer());
                v.to_integer()
            })
            .collect();
        (
            s,
            IntegerMatrix {
                rows: self.rows,
                cols: self.cols,
                data,
            },
        )
    }

    /// Exact determinant. The matrix is scaled to integers row by row and the
    /// integer part goes through Bareiss elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "det of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut scale = BigInt::one();
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let l = self
                .row(i)
                .iter()
                .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            let lr = Rational::from_integer(l.clone());
            rows.push(self.row(i).iter().map(|r| (r * &lr).to_integer()).collect());
            scale *= l;
        }
        let d = IntegerMatrix {
            rows: self.rows,
            cols: self.cols,
            data: rows.into_iter().flatten().collect(),
        }
        .det()?;
        Ok(Rational::new(d, scale))
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<RationalMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "inverse of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] / &p;
                inv[(col, j)] = &inv[(col, j)] / &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let av = &a[(col, j)] * &f;
                    a[(r, j)] = &a[(r, j)] - &av;
                    let iv = &inv[(col, j)] * &f;
                    inv[(r, j)] = &inv[(r, j)] - &iv;
                }
            }
        }
        Ok(inv)
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Dense row-major matrix of exact integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        assert!(!rows.is_empty(), "empty matrix");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape");
        let mut m = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for l in 0..self.cols {
                    acc += &self[(i, l)] * &other[(l, j)];
                }
                m[(i, j)] = acc;
            }
        }
        m
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix::from_fn(self.rows, self.cols, |i, j| {
            Rational::from_integer(self[(i, j)].clone())
        })
    }

    /// Fraction-free determinant (Bareiss). Every intermediate value is an
    /// exact minor of the input, so growth stays polynomial in the bit size.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "det of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.data.clone();
        let at = |a: &Vec<BigInt>, i: usize, j: usize| a[i * n + j].clone();
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for col in 0..n - 1 {
            if at(&a, col, col).is_zero() {
                match (col + 1..n).find(|&r| !at(&a, r, col).is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            a.swap(r * n + j, col * n + j);
                        }
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for r in col + 1..n {
                for j in col + 1..n {
                    let v = &at(&a, col, col) * &at(&a, r, j) - &at(&a, r, col) * &at(&a, col, j);
                    a[r * n + j] = &v / &prev; // exact division
                }
                a[r * n + col] = BigInt::zero();
            }
            prev = at(&a, col, col);
        }
        let d = at(&a, n - 1, n - 1);
        Ok(if sign < 0 { -d } else { d })
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Maximal minors and signed cross product of a `k x (k+1)` integer matrix.
pub struct MinorsCross {
    /// `minors[i]` omits column `i`.
    pub minors: Vec<BigInt>,
    /// `cross[i] = (-1)^i * minors[i]`; orthogonal to every input row.
    pub cross: Vec<BigInt>,
}

/// Computes the `k+1` order-`k` minors of a `k x (k+1)` matrix, each omitting
/// one column, together with the cofactor-signed cross product vector.
pub fn minors_omit_column(m: &IntegerMatrix) -> Result<MinorsCross> {
    if m.cols() != m.rows() + 1 {
        return Err(Error::Dimension(format!(
            "minors_omit_column needs k x (k+1), got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let k = m.rows();
    let mut minors = Vec::with_capacity(k + 1);
    for omit in 0..k + 1 {
        let sub = IntegerMatrix::from_rows(
            (0..k)
                .map(|i| {
                    (0..k + 1)
                        .filter(|&j| j != omit)
                        .map(|j| m[(i, j)].clone())
                        .collect()
                })
                .collect(),
        );
        minors.push(sub.det()?);
    }
    let cross: Vec<BigInt> = minors
        .iter()
        .enumerate()
        .map(|(i, v)| if i % 2 == 0 { v.clone() } else { -v })
        .collect();
    debug_assert!((0..k).all(|i| {
        m.row(i)
            .iter()
            .zip(&cross)
            .map(|(a, b)| a * b)
            .sum::<BigInt>()
            .is_zero()
    }));
    Ok(MinorsCross { minors, cross })
}

/// Row-style Hermite Normal Form with zero rows removed.
pub struct HnfForm {
    pub mat: IntegerMatrix,
    pub rank: usize,
}

/// Canonical HNF of the lattice generated by the rows of `m`: row echelon,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`.
/// Unique for the row lattice, hence usable as a lattice fingerprint.
pub fn hnf(m: &IntegerMatrix) -> HnfForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.row_vecs();
    let mut pivot_row = 0usize;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // Euclidean elimination below the pivot position.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..rows {
                if !a[r][col].is_zero()
                    && best.map_or(true, |b| a[r][col].abs() < a[b][col].abs())
                {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            a.swap(pivot_row, b);
            let mut done = true;
            for r in pivot_row + 1..rows {
                if a[r][col].is_zero() {
                    continue;
                }
                let q = div_round(&a[r][col], &a[pivot_row][col]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let s = &a[pivot_row][j] * &q;
                        a[r][j] -= s;
                    }
                }
                if !a[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[pivot_row][col].is_zero() {
            continue;
        }
        if a[pivot_row][col].is_negative() {
            for j in 0..cols {
                a[pivot_row][j] = -a[pivot_row][j].clone();
            }
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
    }
    // Reduce entries above each pivot into [0, pivot).
    for &(pr, pc) in pivots.iter() {
        for r in 0..pr {
            let q = a[r][pc].div_floor(&a[pr][pc]);
            if !q.is_zero() {
                for j in 0..cols {
                    let s = &a[pr][j] * &q;
                    a[r][j] -= s;
                }
            }
        }
    }
    let rank = pivots.len();
    a.truncate(rank.max(1));
    if rank == 0 {
        a = vec![vec![BigInt::zero(); cols]];
    }
    HnfForm {
        mat: IntegerMatrix::from_rows(a),
        rank,
    }
}

/// Quotient rounded to nearest (ties toward the floor); used to keep HNF
/// elimination remainders small.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if &(r.abs() * 2u8) > &b.abs() {
        q + BigInt::one()
    } else {
        q
    }
}

/// Unimodular `U` with `U * w = (g, 0, ..., 0)` (as column), `g = gcd(w) >= 0`.
/// Also returns `U^{-1}` when requested by `complete_to_unimodular`.
fn gcd_transform(w: &[BigInt]) -> (IntegerMatrix, IntegerMatrix, BigInt) {
    let n = w.len();
    let mut u = IntegerMatrix::identity(n);
    let mut uinv = IntegerMatrix::identity(n);
    let mut w = w.to_vec();
    for j in 1..n {
        if w[j].is_zero() {
            continue;
        }
        let (g, x, y) = extended_gcd(&w[0], &w[j]);
        let a = &w[0] / &g;
        let b = &w[j] / &g;
        // rows (0, j) of U get E = [[x, y], [-b, a]], det(E) = 1;
        // columns (0, j) of U^{-1} get E^{-1} = [[a, -y], [b, x]].
        for c in 0..n {
            let r0 = &x * &u[(0, c)] + &y * &u[(j, c)];
            let rj = &a * &u[(j, c)] - &b * &u[(0, c)];
            u[(0, c)] = r0;
            u[(j, c)] = rj;
        }
        for r in 0..n {
            let c0 = &a * &uinv[(r, 0)] + &b * &uinv[(r, j)];
            let cj = &x * &uinv[(r, j)] - &y * &uinv[(r, 0)];
            uinv[(r, 0)] = c0;
            uinv[(r, j)] = cj;
        }
        w[0] = g;
        w[j] = BigInt::zero();
    }
    if w[0].is_negative() {
        for c in 0..n {
            u[(0, c)] = -u[(0, c)].clone();
        }
        for r in 0..n {
            uinv[(r, 0)] = -uinv[(r, 0)].clone();
        }
        w[0] = -w[0].clone();
    }
    (u, uinv, w.swap_remove(0))
}

/// Completes a primitive vector `n` to a basis of `Z^{k+1}`: returns `k` rows
/// `v_1, ..., v_k` such that the matrix with rows `n, v_1, ..., v_k` has
/// determinant `±1`. Deterministic (iterated extended gcd).
pub fn complete_to_unimodular(n: &[BigInt]) -> Result<IntegerMatrix> {
    if n.iter().all(|x| x.is_zero()) {
        return Err(Error::NotPrimitive(BigInt::zero()));
    }
    let g = gcd_vector(n);
    if !g.is_one() {
        return Err(Error::NotPrimitive(g));
    }
    let (_, uinv, _) = gcd_transform(n);
    // U n^T = e_1, so n is the first column of U^{-1} and A = (U^{-1})^T is a
    // unimodular matrix whose first row is n.
    let a = uinv.transpose();
    debug_assert_eq!(a.row(0), n);
    Ok(IntegerMatrix::from_rows(a.row_vecs()[1..].to_vec()))
}

/// Random unimodular matrix built from elementary row operations; used by the
/// self-test suites to re-represent lattice bases.
pub fn random_unimodular(rng: &mut impl rand::Rng, n: usize, steps: usize) -> IntegerMatrix {
    let mut m = IntegerMatrix::identity(n);
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        match rng.gen_range(0..3) {
            0 => {
                let c = BigInt::from(rng.gen_range(-3i64..=3));
                for col in 0..n {
                    let add = &m[(j, col)] * &c;
                    m[(i, col)] += add;
                }
            }
            1 => {
                for col in 0..n {
                    let t = m[(i, col)].clone();
                    m[(i, col)] = m[(j, col)].clone();
                    m[(j, col)] = t;
                }
            }
            _ => {
                for col in 0..n {
                    m[(i, col)] = -m[(i, col)].clone();
                }
            }
        }
    }
    m
}

/// Basis of the full integer kernel `{ z : z · row_i = 0 for all i }` of the
/// constraint rows. The result is saturated: it spans every integer vector of
/// the rational kernel, not just a finite-index sublattice.
pub fn integer_kernel(constraints: &IntegerMatrix) -> IntegerMatrix {
    let n = constraints.cols();
    let mut kernel = IntegerMatrix::identity(n);
    for ci in 0..constraints.rows() {
        if kernel.rows() == 0 {
            break;
        }
        let w: Vec<BigInt> = (0..kernel.rows())
            .map(|r| {
                kernel
                    .row(r)
                    .iter()
                    .zip(constraints.row(ci))
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect();
        let (u, _, g) = gcd_transform(&w);
        let reduced = u.mul(&kernel);
        let keep = if g.is_zero() { 0 } else { 1 };
        let rows = reduced.row_vecs()[keep..].to_vec();
        if rows.is_empty() {
            return IntegerMatrix::zero(0, n);
        }
        kernel = IntegerMatrix::from_rows(rows);
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rm(rows: &[&[(i64, i64)]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(n, d)| rat(n, d)).collect())
                .collect(),
        )
    }

    #[test]
    fn det_identity_is_one() {
        assert_eq!(RationalMatrix::identity(2).det().unwrap(), rat_int(1));
    }

    #[test]
    fn det_honeycomb_critical_2d() {
        // [[1, 1/2], [1/2, 1]] -> 3/4
        let m = rm(&[&[(1, 1), (1, 2)], &[(1, 2), (1, 1)]]);
        assert_eq!(m.det().unwrap(), rat(3, 4));
    }

    #[test]
    fn det_by_cofactor_expansion() {
        let m = rm(&[&[(1, 2), (1, 2)], &[(0, 1), (1, 1)]]);
        assert_eq!(m.det().unwrap(), rat(1, 2));
    }

    #[test]
    fn det_rejects_non_square() {
        let m = RationalMatrix::zero(2, 3);
        assert!(matches!(m.det(), Err(Error::Dimension(_))));
    }

    #[test]
    fn inverse_examples() {
        let id = RationalMatrix::identity(3);
        assert_eq!(id.inverse().unwrap(), id);

        let m = rm(&[&[(1, 2), (1, 2)], &[(0, 1), (1, 1)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, rm(&[&[(2, 1), (-1, 1)], &[(0, 1), (1, 1)]]));
        assert_eq!(m.mul(&inv), RationalMatrix::identity(2));

        let d = rm(&[&[(2, 1), (0, 1)], &[(0, 1), (2, 1)]]);
        assert_eq!(
            d.inverse().unwrap(),
            rm(&[&[(1, 2), (0, 1)], &[(0, 1), (1, 2)]])
        );
    }

    #[test]
    fn inverse_rejects_singular() {
        let m = rm(&[&[(1, 1), (2, 1)], &[(2, 1), (4, 1)]]);
        assert!(matches!(m.inverse(), Err(Error::Singular)));
    }

    #[test]
    fn minors_and_cross_examples() {
        let m = IntegerMatrix::from_i64_rows(&[vec![1, 0, 0], vec![0, 1, 0]]);
        let mc = minors_omit_column(&m).unwrap();
        assert_eq!(mc.minors, vec![0.into(), 0.into(), 1.into()]);
        assert_eq!(mc.cross, vec![0.into(), 0.into(), 1.into()]);

        // matrix of the worked sequence-construction example at t=3
        let m = IntegerMatrix::from_i64_rows(&[vec![13, 0, -6], vec![0, 14, -9]]);
        let mc = minors_omit_column(&m).unwrap();
        assert_eq!(mc.cross, vec![84.into(), 117.into(), 182.into()]);
        for i in 0..2 {
            let dot: BigInt = m.row(i).iter().zip(&mc.cross).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }

        let m = IntegerMatrix::from_i64_rows(&[vec![2, 0, -1], vec![0, 2, -2]]);
        let mc = minors_omit_column(&m).unwrap();
        assert_eq!(mc.cross, vec![2.into(), 4.into(), 4.into()]);
    }

    #[test]
    fn minors_rejects_bad_shape() {
        let m = IntegerMatrix::identity(3);
        assert!(minors_omit_column(&m).is_err());
    }

    #[test]
    fn hnf_examples() {
        let m = IntegerMatrix::from_i64_rows(&[vec![2, 0], vec![-1, 1]]);
        let h = hnf(&m);
        assert_eq!(h.rank, 2);
        assert_eq!(
            h.mat,
            IntegerMatrix::from_i64_rows(&[vec![1, 1], vec![0, 2]])
        );

        let id = IntegerMatrix::identity(2);
        assert_eq!(hnf(&id).mat, id);

        let m = IntegerMatrix::from_i64_rows(&[vec![1, -1], vec![0, 2]]);
        assert_eq!(
            hnf(&m).mat,
            IntegerMatrix::from_i64_rows(&[vec![1, 1], vec![0, 2]])
        );
    }

    #[test]
    fn hnf_reports_rank_deficiency() {
        let m = IntegerMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4]]);
        let h = hnf(&m);
        assert_eq!(h.rank, 1);
        assert_eq!(h.mat, IntegerMatrix::from_i64_rows(&[vec![1, 2]]));
    }

    #[test]
    fn complete_to_unimodular_examples() {
        for n in [
            vec![1i64, 1, 2],
            vec![1, 0, 0],
            vec![2, 3],
            vec![84, 117, 182],
            vec![-3, 5, 7, 2],
        ] {
            let nv: Vec<BigInt> = n.iter().map(|&x| BigInt::from(x)).collect();
            let v = complete_to_unimodular(&nv).unwrap();
            let mut rows = vec![nv.clone()];
            rows.extend(v.row_vecs());
            let det = IntegerMatrix::from_rows(rows).det().unwrap();
            assert!(det.abs().is_one(), "n={n:?} det={det}");
        }
    }

    #[test]
    fn complete_rejects_non_primitive() {
        let n: Vec<BigInt> = vec![2.into(), 4.into(), 4.into()];
        assert!(matches!(
            complete_to_unimodular(&n),
            Err(Error::NotPrimitive(g)) if g == BigInt::from(2)
        ));
    }

    #[test]
    fn gcd_vector_examples() {
        let v: Vec<BigInt> = vec![84.into(), 117.into(), 182.into()];
        assert!(gcd_vector(&v).is_one());
        let v: Vec<BigInt> = vec![2.into(), 4.into(), 4.into()];
        assert_eq!(gcd_vector(&v), 2.into());
        let v: Vec<BigInt> = vec![0.into(), 0.into()];
        assert!(gcd_vector(&v).is_zero());
    }

    #[test]
    fn kernel_is_orthogonal_and_saturated() {
        let m = IntegerMatrix::from_i64_rows(&[vec![1, 1, 2]]);
        let k = integer_kernel(&m);
        assert_eq!(k.rows(), 2);
        for r in 0..k.rows() {
            let dot: BigInt = k.row(r).iter().zip(m.row(0)).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
        // (1,-1,0) and (0,2,-1) span the kernel; check both are representable.
        let h = hnf(&k).mat;
        let probe = hnf(&IntegerMatrix::from_i64_rows(&[
            vec![1, -1, 0],
            vec![0, 2, -1],
        ]))
        .mat;
        assert_eq!(h, probe);
    }

    #[test]
    fn hnf_invariant_under_unimodular_factors() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(2..=4);
            let base = IntegerMatrix::from_rows(
                (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
                            .collect()
                    })
                    .collect(),
            );
            let u = random_unimodular(&mut rng, n, 12);
            let h1 = hnf(&base);
            let h2 = hnf(&u.mul(&base));
            assert_eq!(h1.rank, h2.rank);
            assert_eq!(h1.mat, h2.mat);
        }
    }

    proptest! {
        #[test]
        fn det_times_det_inverse_is_one(seed in 0u64..500) {
            let mut rng = StdRng::seed_from_u64(seed);
            let n = rng.gen_range(2..=4usize);
            let m = RationalMatrix::from_fn(n, n, |_, _| {
                rat(rng.gen_range(-6i64..=6), rng.gen_range(1i64..=4))
            });
            let d = m.det().unwrap();
            prop_assume!(!d.is_zero());
            let dinv = m.inverse().unwrap().det().unwrap();
            prop_assert_eq!(d * dinv, rat_int(1));
        }

        #[test]
        fn hnf_idempotent(seed in 0u64..200) {
            let mut rng = StdRng::seed_from_u64(seed);
            let r = rng.gen_range(2..=4usize);
            let c = rng.gen_range(r..=4usize);
            let m = IntegerMatrix::from_rows(
                (0..r).map(|_| (0..c).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect()).collect(),
            );
            let h = hnf(&m);
            let h2 = hnf(&h.mat);
            prop_assert_eq!(h.rank, h2.rank);
            prop_assert_eq!(h.mat, h2.mat);
        }
    }
}
