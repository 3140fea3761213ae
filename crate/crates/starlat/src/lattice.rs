//! Full-rank rational lattices and the approximation lattice `Λ(n)`.
//!
//! A lattice is stored with an arbitrary basis plus a canonical fingerprint:
//! the minimal positive integer `s` with `s·Λ ⊆ Z^k` together with the
//! Hermite normal form of `s·Λ`. The scalar is basis-independent (any basis's
//! denominator lcm equals it), so two lattices are equal iff their
//! fingerprints match. Raw bases are never compared; the constructions below
//! routinely produce different bases of the same lattice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::exact::{
    complete_to_unimodular, gcd_vector, hnf, integer_kernel, IntegerMatrix, Rational,
    RationalMatrix,
};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Lattice {
    dim: usize,
    basis: RationalMatrix,
    /// minimal s >= 1 with s·Λ integral
    scalar_den: BigInt,
    /// HNF basis of s·Λ
    hnf: IntegerMatrix,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.scalar_den == other.scalar_den && self.hnf == other.hnf
    }
}
impl Eq for Lattice {}

impl Lattice {
    /// Builds a lattice from `k` linearly independent rational rows.
    pub fn from_basis(basis: RationalMatrix) -> Result<Lattice> {
        if !basis.is_square() {
            return Err(Error::Dimension(format!(
                "lattice basis must be square, got {}x{}",
                basis.rows(),
                basis.cols()
            )));
        }
        let (s, int) = basis.clear_denominators();
        let h = hnf(&int);
        if h.rank != basis.rows() {
            return Err(Error::Singular);
        }
        Ok(Lattice {
            dim: basis.rows(),
            basis,
            scalar_den: s,
            hnf: h.mat,
        })
    }

    /// `Z^k`.
    pub fn standard(k: usize) -> Lattice {
        Lattice::from_basis(RationalMatrix::identity(k)).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn scalar_den(&self) -> &BigInt {
        &self.scalar_den
    }

    pub fn hnf_matrix(&self) -> &IntegerMatrix {
        &self.hnf
    }

    /// The canonical basis: HNF rows divided by the clearing scalar.
    pub fn canonical_basis(&self) -> RationalMatrix {
        let s = Rational::from_integer(self.scalar_den.clone());
        RationalMatrix::from_fn(self.dim, self.dim, |i, j| {
            Rational::from_integer(self.hnf[(i, j)].clone()) / &s
        })
    }

    /// |det| of the lattice, from the HNF diagonal (always positive).
    pub fn det(&self) -> Rational {
        let mut prod = BigInt::one();
        for i in 0..self.dim {
            prod *= &self.hnf[(i, i)];
        }
        Rational::new(prod, self.scalar_den.pow(self.dim as u32))
    }

    /// Polar (dual) lattice: basis = transpose of the inverse basis matrix.
    pub fn polar(&self) -> Result<Lattice> {
        Lattice::from_basis(self.basis.inverse()?.transpose())
    }

    /// Pointwise scaling by a nonzero rational.
    pub fn scale(&self, c: &Rational) -> Result<Lattice> {
        if c.is_zero() {
            return Err(Error::InvalidParameter("scale by zero".into()));
        }
        Lattice::from_basis(self.basis.scale(c))
    }

    /// Exact membership test: solves for basis coefficients and checks
    /// integrality.
    pub fn contains(&self, point: &[Rational]) -> bool {
        assert_eq!(point.len(), self.dim, "point dimension");
        let inv = self
            .canonical_basis()
            .inverse()
            .expect("lattice basis is invertible");
        (0..self.dim).all(|i| {
            let c: Rational = (0..self.dim).map(|j| &point[j] * &inv[(j, i)]).sum();
            c.is_integer()
        })
    }

    /// `{ "dim", "scalar": "num/den", "hnf": [[ints]] }`
    pub fn to_json(&self) -> serde_json::Value {
        let scalar = Rational::new(BigInt::one(), self.scalar_den.clone());
        serde_json::json!({
            "dim": self.dim,
            "scalar": scalar.to_string(),
            "hnf": (0..self.dim)
                .map(|i| self.hnf.row(i).iter().map(big_json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// BigInt -> JSON number (arbitrary precision is enabled on serde_json).
pub(crate) fn big_json(n: &BigInt) -> serde_json::Value {
    serde_json::from_str(&n.to_string()).expect("integer literal is valid JSON")
}

/// Target vector for approximation by smaller denominators: an integer vector
/// `n` with `0 < n_1 <= ... <= n_{k+1}` and `gcd(n) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxTarget {
    n: Vec<BigInt>,
    /// true when the ordering constraint was checked (the relaxed constructor
    /// only enforces positivity and primitivity)
    ordered: bool,
}

impl ApproxTarget {
    pub fn new(n: Vec<BigInt>) -> Result<ApproxTarget> {
        if n.len() < 2 {
            return Err(Error::InvalidParameter(
                "target needs k+1 >= 2 entries".into(),
            ));
        }
        if n.iter().any(|x| !x.is_positive()) {
            return Err(Error::InvalidParameter(
                "target entries must be positive".into(),
            ));
        }
        if n.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidParameter(
                "target entries must be non-decreasing".into(),
            ));
        }
        let g = gcd_vector(&n);
        if !g.is_one() {
            return Err(Error::NotPrimitive(g));
        }
        Ok(ApproxTarget { n, ordered: true })
    }

    /// Relaxed variant: positive and primitive, ordering not required.
    pub fn new_positive(n: Vec<BigInt>) -> Result<ApproxTarget> {
        if n.len() < 2 {
            return Err(Error::InvalidParameter(
                "target needs k+1 >= 2 entries".into(),
            ));
        }
        if n.iter().any(|x| !x.is_positive()) {
            return Err(Error::InvalidParameter(
                "target entries must be positive".into(),
            ));
        }
        let g = gcd_vector(&n);
        if !g.is_one() {
            return Err(Error::NotPrimitive(g));
        }
        let ordered = n.windows(2).all(|w| w[0] <= w[1]);
        Ok(ApproxTarget { n, ordered })
    }

    pub fn from_i64(n: &[i64]) -> Result<ApproxTarget> {
        ApproxTarget::new(n.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Uniform random ordered primitive target with `n_{k+1} <= max_last`.
    pub fn random(rng: &mut impl Rng, k: usize, max_last: u64) -> ApproxTarget {
        loop {
            let mut n: Vec<BigInt> = (0..=k)
                .map(|_| BigInt::from(rng.gen_range(1..=max_last)))
                .collect();
            n.sort();
            if gcd_vector(&n).is_one() {
                return ApproxTarget { n, ordered: true };
            }
        }
    }

    pub fn n(&self) -> &[BigInt] {
        &self.n
    }

    pub fn k(&self) -> usize {
        self.n.len() - 1
    }

    pub fn is_ordered(&self) -> bool {
        self.ordered
    }

    pub fn is_strictly_ordered(&self) -> bool {
        self.n.windows(2).all(|w| w[0] < w[1])
    }

    pub fn n_last(&self) -> &BigInt {
        self.n.last().unwrap()
    }

    /// `θ_i = n_i / n_{k+1}`, i = 1..k.
    pub fn thetas(&self) -> Vec<Rational> {
        let last = self.n_last();
        self.n[..self.k()]
            .iter()
            .map(|ni| Rational::new(ni.clone(), last.clone()))
            .collect()
    }
}

impl std::fmt::Display for ApproxTarget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.n
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// The k-dimensional lattice `Λ(n)` of residues `(m_i - m_{k+1}·n_i/n_{k+1})`:
/// complete `n` to a basis `n, v_1, ..., v_k` of `Z^{k+1}` and take the rows
/// `v'_i = (v_{i,j} - v_{i,k+1}·n_j/n_{k+1})_j`. Its determinant is
/// `1/n_{k+1}` up to sign; the stored basis is canonicalized.
pub fn lattice_from_n(target: &ApproxTarget) -> Lattice {
    let n = target.n();
    let k = target.k();
    let completion = complete_to_unimodular(n).expect("target is primitive");
    let thetas = target.thetas();
    let basis = RationalMatrix::from_fn(k, k, |i, j| {
        let v_last = Rational::from_integer(completion[(i, k)].clone());
        Rational::from_integer(completion[(i, j)].clone()) - &v_last * &thetas[j]
    });
    let lat = Lattice::from_basis(basis).expect("residue rows are independent");
    // det Λ(n) = 1/n_{k+1}; violation means a construction bug.
    debug_assert_eq!(lat.det(), Rational::new(BigInt::one(), n[k].clone()));
    // keep the canonical basis only
    Lattice::from_basis(lat.canonical_basis()).unwrap()
}

/// `Λ⊥_{k+1}(n)`: the integer vectors orthogonal to `n`, with the last
/// coordinate dropped. Requires `n_{k+1} != 0` (otherwise the projection
/// degenerates) and primitivity.
pub fn orthogonal_section(n: &[BigInt]) -> Result<Lattice> {
    let k = n.len() - 1;
    let g = gcd_vector(n);
    if !g.is_one() {
        return Err(Error::NotPrimitive(g));
    }
    if n[k].is_zero() {
        return Err(Error::InvalidParameter(
            "orthogonal section needs a nonzero last coordinate".into(),
        ));
    }
    let kernel = integer_kernel(&IntegerMatrix::from_rows(vec![n.to_vec()]));
    debug_assert_eq!(kernel.rows(), k);
    let projected = RationalMatrix::from_fn(k, k, |i, j| {
        Rational::from_integer(kernel[(i, j)].clone())
    });
    Lattice::from_basis(projected)
}

/// Equality of point sets, decided on canonical fingerprints.
pub fn lattice_equal(a: &Lattice, b: &Lattice) -> bool {
    a == b
}

/// The lattice generated by `Z^k` together with the rational Weyl orbit point
/// `(n_1/n_{k+1}, ..., n_k/n_{k+1})`; equals `Λ(n)`.
pub fn weyl_lattice(target: &ApproxTarget) -> Lattice {
    let k = target.k();
    let last = target.n_last().clone();
    // generating set of n_{k+1}·Λ: n_{k+1}·Z^k plus the numerator vector
    let mut rows: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { last.clone() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    rows.push(target.n()[..k].to_vec());
    let h = hnf(&IntegerMatrix::from_rows(rows));
    assert_eq!(h.rank, k);
    let s = Rational::from_integer(last);
    let basis = RationalMatrix::from_fn(k, k, |i, j| {
        Rational::from_integer(h.mat[(i, j)].clone()) / &s
    });
    Lattice::from_basis(basis).expect("Weyl generators have full rank")
}

/// Searches for `r` in `0..n_{k+1}` solving `x_i + r·n_i ≡ 0 (mod n_{k+1})`
/// for all i; equivalently tests `x ∈ n_{k+1}·Λ(n)`. Returns the witness.
pub fn congruence_member(target: &ApproxTarget, x: &[BigInt]) -> Option<BigInt> {
    assert_eq!(x.len(), target.k(), "x must have k entries");
    let modulus = target.n_last();
    let mut r = BigInt::zero();
    while &r < modulus {
        if x.iter()
            .zip(target.n())
            .all(|(xi, ni)| (xi + &r * ni).mod_floor(modulus).is_zero())
        {
            return Some(r);
        }
        r += 1;
    }
    None
}

/// Gram determinant of the saturated rank-2 section lattice spanned by `m, n`
/// (the integer points of their rational span) and of its integer orthogonal
/// complement. The two values agree exactly.
pub fn section_det_identity(m: &[BigInt], n: &[BigInt]) -> Result<(Rational, Rational)> {
    if m.len() != n.len() {
        return Err(Error::Dimension("m and n must have equal length".into()));
    }
    let pair = IntegerMatrix::from_rows(vec![m.to_vec(), n.to_vec()]);
    let complement = integer_kernel(&pair);
    if complement.rows() != m.len() - 2 {
        return Err(Error::InvalidParameter(
            "m and n must be linearly independent".into(),
        ));
    }
    // saturate span(m, n) as the kernel of its own kernel
    let section = integer_kernel(&complement);
    assert_eq!(section.rows(), 2);
    let gram_det = |mat: &IntegerMatrix| -> Rational {
        let r = mat.rows();
        let gram = IntegerMatrix::from_rows(
            (0..r)
                .map(|i| {
                    (0..r)
                        .map(|j| {
                            mat.row(i)
                                .iter()
                                .zip(mat.row(j))
                                .map(|(a, b)| a * b)
                                .sum::<BigInt>()
                        })
                        .collect()
                })
                .collect(),
        );
        Rational::from_integer(gram.det().expect("square Gram matrix"))
    };
    Ok((gram_det(&section), gram_det(&complement)))
}
