//! Newton polytopes of the structure constants: lattice-point
//! enumeration, saturation and scaling checks, block projection, and
//! the term-count identity.
//!
//! For `(i, j, k)` in the nonvanishing window and `r = i + j - k`, the
//! polytope Q_{i,j}^k consists of the points `x >= 0` with coordinate
//! sum `r`, prefix sums `x_1 + ... + x_l <= l` for `1 <= l <= i`, and
//! `x_m = 0` for `m > k`. Its lattice points are exactly the exponent
//! vectors appearing in the `beta` expansion of `C_{i,j}^k` (the support
//! is saturated), and the polytope has the integer decomposition
//! property: every lattice point of the N-fold dilation splits into N
//! lattice points of Q.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::matchings::{coefficient_via_matchings, matching_count, matching_size};
use crate::polyring::{ExponentVector, SupportSet};
use crate::report::SetCheck;

/// Indices `(i, j, k)` of a structure-constant polytope, validated to
/// lie in the nonvanishing window `max(i,j) <= k <= i+j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolytopeSpec {
    i: u32,
    j: u32,
    k: u32,
    r: u32,
}

impl PolytopeSpec {
    pub fn new(i: u32, j: u32, k: u32) -> Result<Self, Error> {
        match matching_size(i, j, k) {
            Some(r) => Ok(Self { i, j, k, r }),
            None => Err(Error::OutsideWindow { i, j, k }),
        }
    }

    pub fn indices(&self) -> (u32, u32, u32) {
        (self.i, self.j, self.k)
    }

    /// Common coordinate sum `r = i + j - k` of all points.
    pub fn coordinate_sum(&self) -> u32 {
        self.r
    }

    /// Number of coordinates that may be nonzero.
    pub fn dimension(&self) -> u32 {
        self.k
    }

    /// Membership test for an integer point (of the undilated polytope).
    pub fn contains(&self, point: &ExponentVector) -> bool {
        if point.max_index() > self.k || point.total_degree() != self.r as u64 {
            return false;
        }
        let mut prefix = 0;
        for l in 1..=self.i.min(self.k) {
            prefix += point.exponent_of(l);
            if prefix > l {
                return false;
            }
        }
        true
    }
}

/// Lattice points of the N-fold dilation `N * Q_{i,j}^k` (coordinate
/// sum `N*r`, prefix bounds `N*l`), in ascending lexicographic order of
/// dense coordinates.
pub fn dilated_polytope_lattice_points(spec: &PolytopeSpec, scale: u32) -> Vec<ExponentVector> {
    assert!(scale >= 1, "dilation factor must be positive");

    fn descend(
        coords: &mut Vec<u32>,
        remaining: u32,
        prefix: u32,
        spec: &PolytopeSpec,
        scale: u32,
        out: &mut Vec<ExponentVector>,
    ) {
        let pos = coords.len() as u32;
        if pos == spec.k {
            if remaining == 0 {
                out.push(ExponentVector::from_dense(coords));
            }
            return;
        }
        let l = pos + 1;
        let mut cap = remaining;
        if l <= spec.i {
            cap = cap.min(scale * l - prefix);
        }
        for x in 0..=cap {
            coords.push(x);
            descend(coords, remaining - x, prefix + x, spec, scale, out);
            coords.pop();
        }
    }

    let mut out = Vec::new();
    descend(&mut Vec::new(), spec.r * scale, 0, spec, scale, &mut out);
    out
}

/// Lattice points of Q_{i,j}^k itself, in ascending lexicographic order.
pub fn polytope_lattice_points(spec: &PolytopeSpec) -> Vec<ExponentVector> {
    dilated_polytope_lattice_points(spec, 1)
}

/// Saturation check: the support of the `beta` expansion of `C_{i,j}^k`
/// (left) against the lattice points of Q_{i,j}^k (right).
pub fn snp_verify(i: u32, j: u32, k: u32) -> Result<SetCheck, Error> {
    let spec = PolytopeSpec::new(i, j, k)?;
    let support = coefficient_via_matchings(i, j, k).support();
    let polytope: SupportSet = polytope_lattice_points(&spec).into_iter().collect();
    Ok(SetCheck::compare(&support, &polytope))
}

/// Block-sum projection: coordinate `d` of the image is the sum of
/// coordinates `(d-1)*n + 1 ..= d*n` of the input.
pub fn pi_n_project(point: &ExponentVector, n: u32) -> ExponentVector {
    assert!(n >= 1, "block size must be positive");
    ExponentVector::new(point.entries().map(|(m, e)| ((m - 1) / n + 1, e)))
}

/// N-fold Minkowski sum of a point set with itself (`N = 0` gives the
/// origin alone).
pub fn minkowski_power(points: &SupportSet, n: u32) -> SupportSet {
    let mut acc: SupportSet = [ExponentVector::unit()].into_iter().collect();
    for _ in 0..n {
        acc = acc
            .iter()
            .flat_map(|a| points.iter().map(move |b| a.sum(b)))
            .collect();
    }
    acc
}

/// Support-scaling check: projecting the support of `C_{Ni,Nj}^{Nk}`
/// by blocks of size N (left) against the support of the N-th power of
/// `C_{i,j}^k` (right).
pub fn verify_scaling(i: u32, j: u32, k: u32, n: u32) -> Result<SetCheck, Error> {
    assert!(n >= 1, "scaling factor must be positive");
    PolytopeSpec::new(i, j, k)?;
    let scaled: SupportSet = coefficient_via_matchings(n * i, n * j, n * k)
        .support()
        .iter()
        .map(|point| pi_n_project(point, n))
        .collect();
    let power = coefficient_via_matchings(i, j, k).pow(n).support();
    Ok(SetCheck::compare(&scaled, &power))
}

/// Integer-decomposition check: lattice points of the N-fold dilation
/// (left) against the N-fold Minkowski sum of the lattice points of Q
/// (right).
pub fn verify_idp(i: u32, j: u32, k: u32, n: u32) -> Result<SetCheck, Error> {
    assert!(n >= 1, "dilation factor must be positive");
    let spec = PolytopeSpec::new(i, j, k)?;
    let base: SupportSet = polytope_lattice_points(&spec).into_iter().collect();
    let dilated: SupportSet = dilated_polytope_lattice_points(&spec, n)
        .into_iter()
        .collect();
    Ok(SetCheck::compare(&dilated, &minkowski_power(&base, n)))
}

/// The two sides of the matching-count identity: `r! C(i,r) C(j,r)`
/// matchings on one side, the coefficient sum of the `beta` expansion
/// (each matching contributes 1) on the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermCount {
    pub formula: BigInt,
    pub coefficient_sum: BigInt,
}

impl TermCount {
    pub fn is_consistent(&self) -> bool {
        self.formula == self.coefficient_sum
    }
}

/// Evaluates both sides of the count identity for `C_{i,j}^k` (both are
/// zero outside the nonvanishing window).
pub fn term_count(i: u32, j: u32, k: u32) -> TermCount {
    let formula = match matching_size(i, j, k) {
        Some(r) => matching_count(i, j, r),
        None => BigInt::zero(),
    };
    TermCount {
        formula,
        coefficient_sum: coefficient_via_matchings(i, j, k).sum_of_coefficients(),
    }
}
