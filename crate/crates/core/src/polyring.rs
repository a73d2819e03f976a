//! Sparse exact polynomials over Z in two variable families: the torus
//! weights `t_1, t_2, ...` and the simple roots `beta_m = t_m - t_{m+1}`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Variable family a polynomial is written in.
///
/// Arithmetic never mixes families; converting positive `Beta` data to
/// `T` goes through [`Polynomial::beta_to_t`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Torus weights `t_1, t_2, ...`.
    T,
    /// Simple roots `beta_1, beta_2, ...` with `beta_m = t_m - t_{m+1}`.
    Beta,
}

impl Family {
    /// Variable stem used in the plain-text rendering.
    pub fn stem(self) -> &'static str {
        match self {
            Family::T => "t",
            Family::Beta => "beta",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.stem())
    }
}

/// Exponent vector of a monomial, stored sparsely as `(index, exponent)`
/// pairs with 1-based indices, ascending, no zero exponents.
///
/// The `Ord` impl is the crate-wide canonical term order: compare total
/// degree first, then exponents variable-by-variable starting from the
/// highest index present (the monomial with the larger exponent at the
/// highest differing index is the larger). Within one degree this ranks
/// `beta_3^2 > beta_2*beta_3 > beta_1*beta_3 > beta_2^2 > beta_1*beta_2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExponentVector {
    entries: Vec<(u32, u32)>,
}

impl ExponentVector {
    /// The empty exponent vector (the constant monomial `1`).
    pub fn unit() -> Self {
        Self::default()
    }

    /// Exponent vector of the single variable `x_index`.
    pub fn variable(index: u32) -> Self {
        Self::new([(index, 1)])
    }

    /// Builds from `(index, exponent)` pairs in any order; duplicate
    /// indices are merged and zero exponents dropped. Indices are 1-based.
    pub fn new(entries: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut merged: BTreeMap<u32, u32> = BTreeMap::new();
        for (index, exp) in entries {
            assert!(index >= 1, "variable indices are 1-based");
            if exp > 0 {
                *merged.entry(index).or_insert(0) += exp;
            }
        }
        Self {
            entries: merged.into_iter().collect(),
        }
    }

    /// Reads a dense coordinate list `(x_1, ..., x_len)`.
    pub fn from_dense(coords: &[u32]) -> Self {
        Self::new(
            coords
                .iter()
                .enumerate()
                .map(|(pos, &exp)| (pos as u32 + 1, exp)),
        )
    }

    /// Dense coordinates `(x_1, ..., x_len)`; `len` must cover every index.
    pub fn to_dense(&self, len: u32) -> Vec<u32> {
        assert!(self.max_index() <= len, "dense length too small");
        let mut out = vec![0; len as usize];
        for &(index, exp) in &self.entries {
            out[index as usize - 1] = exp;
        }
        out
    }

    /// Exponent of `x_index` (0 when absent).
    pub fn exponent_of(&self, index: u32) -> u32 {
        self.entries
            .binary_search_by_key(&index, |&(i, _)| i)
            .map(|pos| self.entries[pos].1)
            .unwrap_or(0)
    }

    /// `(index, exponent)` pairs, ascending in index.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.entries.iter().copied()
    }

    pub fn total_degree(&self) -> u64 {
        self.entries.iter().map(|&(_, e)| e as u64).sum()
    }

    /// Largest variable index present (0 for the unit).
    pub fn max_index(&self) -> u32 {
        self.entries.last().map_or(0, |&(i, _)| i)
    }

    pub fn is_unit(&self) -> bool {
        self.entries.is_empty()
    }

    /// Componentwise sum — the exponent vector of a product of monomials.
    pub fn sum(&self, other: &Self) -> Self {
        Self::new(self.entries().chain(other.entries()))
    }
}

impl fmt::Display for ExponentVector {
    /// Dense rendering up to the largest index present, e.g. `[0,1,0,3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (pos, exp) in self.to_dense(self.max_index()).iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{exp}")?;
        }
        f.write_str("]")
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                // Walk both from the highest index down; first difference wins.
                let mut lhs = self.entries.iter().rev();
                let mut rhs = other.entries.iter().rev();
                loop {
                    match (lhs.next(), rhs.next()) {
                        (None, None) => return Ordering::Equal,
                        // Leftover entries sit at strictly smaller indices,
                        // where the other side has exponent 0.
                        (Some(_), None) => return Ordering::Greater,
                        (None, Some(_)) => return Ordering::Less,
                        (Some(&(li, le)), Some(&(ri, re))) => {
                            match li.cmp(&ri).then(le.cmp(&re)) {
                                Ordering::Equal => continue,
                                unequal => return unequal,
                            }
                        }
                    }
                }
            })
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Set of exponent vectors — the support of a polynomial or the lattice
/// points of a polytope. Iteration follows the canonical term order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SupportSet(BTreeSet<ExponentVector>);

impl SupportSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, point: ExponentVector) -> bool {
        self.0.insert(point)
    }

    pub fn contains(&self, point: &ExponentVector) -> bool {
        self.0.contains(point)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExponentVector> {
        self.0.iter()
    }
}

impl FromIterator<ExponentVector> for SupportSet {
    fn from_iter<I: IntoIterator<Item = ExponentVector>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl IntoIterator for SupportSet {
    type Item = ExponentVector;
    type IntoIter = std::collections::btree_set::IntoIter<ExponentVector>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

/// Sparse polynomial with exact `BigInt` coefficients in one variable
/// family. Terms are kept normalized: no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    family: Family,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl Polynomial {
    pub fn zero(family: Family) -> Self {
        Self {
            family,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(family: Family) -> Self {
        Self::constant(family, 1)
    }

    pub fn constant(family: Family, value: impl Into<BigInt>) -> Self {
        let mut poly = Self::zero(family);
        poly.add_assign_term(ExponentVector::unit(), value);
        poly
    }

    /// The single variable `x_index` of the given family.
    pub fn variable(family: Family, index: u32) -> Self {
        let mut poly = Self::zero(family);
        poly.add_assign_term(ExponentVector::variable(index), 1);
        poly
    }

    /// `coeff * x^exps`.
    pub fn monomial(family: Family, exps: ExponentVector, coeff: impl Into<BigInt>) -> Self {
        let mut poly = Self::zero(family);
        poly.add_assign_term(exps, coeff);
        poly
    }

    /// The difference `t_a - t_b` (zero when `a == b`).
    pub fn t_difference(a: u32, b: u32) -> Self {
        let mut poly = Self::zero(Family::T);
        if a != b {
            poly.add_assign_term(ExponentVector::variable(a), 1);
            poly.add_assign_term(ExponentVector::variable(b), -1);
        }
        poly
    }

    /// Builds from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms(
        family: Family,
        terms: impl IntoIterator<Item = (ExponentVector, BigInt)>,
    ) -> Self {
        let mut poly = Self::zero(family);
        for (exps, coeff) in terms {
            poly.add_assign_term(exps, coeff);
        }
        poly
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in the family's display order: `Beta` descending (leading
    /// term first), `T` ascending. All renderings use this order.
    pub fn ordered_terms(&self) -> Vec<(&ExponentVector, &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        if self.family == Family::Beta {
            terms.reverse();
        }
        terms
    }

    /// Coefficient of the given monomial (zero when absent).
    pub fn coefficient(&self, exps: &ExponentVector) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Adds `coeff * x^exps` in place, dropping the term if it cancels.
    pub fn add_assign_term(&mut self, exps: ExponentVector, coeff: impl Into<BigInt>) {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_family(&self, other: &Self) -> Result<(), Error> {
        if self.family == other.family {
            Ok(())
        } else {
            Err(Error::FamilyMismatch {
                expected: self.family,
                found: other.family,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_family(other)?;
        let mut out = self.clone();
        for (exps, coeff) in &other.terms {
            out.add_assign_term(exps.clone(), coeff.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_family(other)?;
        let mut out = Self::zero(self.family);
        for (le, lc) in &self.terms {
            for (re, rc) in &other.terms {
                out.add_assign_term(le.sum(re), lc * rc);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.family);
        for _ in 0..n {
            out = out.mul(self).expect("same family");
        }
        out
    }

    /// Substitutes `beta_m = t_m - t_{m+1}` into a `Beta` polynomial.
    pub fn beta_to_t(&self) -> Result<Self, Error> {
        if self.family != Family::Beta {
            return Err(Error::FamilyMismatch {
                expected: Family::Beta,
                found: self.family,
            });
        }
        let mut out = Polynomial::zero(Family::T);
        for (exps, coeff) in &self.terms {
            let mut term = Polynomial::constant(Family::T, coeff.clone());
            for (m, e) in exps.entries() {
                let root = Polynomial::t_difference(m, m + 1);
                for _ in 0..e {
                    term = term.mul(&root).expect("same family");
                }
            }
            out = out.add(&term).expect("same family");
        }
        Ok(out)
    }

    /// Exponent vectors of the nonzero terms.
    pub fn support(&self) -> SupportSet {
        self.terms.keys().cloned().collect()
    }

    /// Sum of all coefficients — the evaluation at `x_m = 1` for all `m`.
    pub fn sum_of_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (pos, (exps, coeff)) in self.ordered_terms().into_iter().enumerate() {
            let magnitude = coeff.abs();
            if pos == 0 {
                if coeff.is_negative() {
                    f.write_str("-")?;
                }
            } else if coeff.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if exps.is_unit() {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            for (factor, (index, exp)) in exps.entries().enumerate() {
                if factor > 0 {
                    f.write_str("*")?;
                }
                write!(f, "{}_{index}", self.family.stem())?;
                if exp > 1 {
                    write!(f, "^{exp}")?;
                }
            }
        }
        Ok(())
    }
}
