//! Closed formulas for the structure constants: the Pieri rule, the
//! row recurrence it induces, the explicit subset-product expansion,
//! and full products of classes in a chosen ambient space.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::Error;
use crate::matchings::{self, SubsetP};
use crate::polyring::{Family, Polynomial};

/// Ambient projective space: P^n cuts classes off at `sigma_n`, the
/// infinite limit keeps every class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Finite(u32),
    Infinite,
}

impl Ambient {
    pub fn contains_class(self, k: u32) -> bool {
        match self {
            Ambient::Finite(n) => k <= n,
            Ambient::Infinite => true,
        }
    }

    fn check_class(self, k: u32) -> Result<(), Error> {
        match self {
            Ambient::Finite(n) if k > n => Err(Error::ClassOutOfRange { k, n }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Finite(n) => write!(f, "P^{n}"),
            Ambient::Infinite => f.write_str("P^infinity"),
        }
    }
}

/// Whether `C_{i,j}^k` is nonzero in the given ambient space:
/// `max(i,j) <= k <= i+j` and `sigma_k` exists there.
pub fn nonvanishing_window(i: u32, j: u32, k: u32, ambient: Ambient) -> bool {
    matchings::matching_size(i, j, k).is_some() && ambient.contains_class(k)
}

/// Pieri rule: `sigma_1 * sigma_k = sigma_{k+1} + (t_1 - t_{k+1}) sigma_k`
/// on P^n, with the first summand dropped when `k = n` and the second
/// vanishing when `k = 0`.
pub fn pieri_expand(k: u32, n: u32) -> Result<ExpansionResult, Error> {
    let ambient = Ambient::Finite(n);
    ambient.check_class(k)?;
    ambient.check_class(1)?;
    let mut coeffs = BTreeMap::new();
    if k < n {
        coeffs.insert(k + 1, Polynomial::one(Family::T));
    }
    let scalar = Polynomial::t_difference(1, k + 1);
    if !scalar.is_zero() {
        coeffs.insert(k, scalar);
    }
    Ok(ExpansionResult {
        i: 1,
        j: k,
        ambient,
        family: Family::T,
        coeffs,
    })
}

/// `C_{i,j}^k` by the recurrence the Pieri rule induces on the first
/// index: `C_{i,j}^k = (t_i - t_{k+1}) C_{i-1,j}^k + C_{i-1,j}^{k-1}`,
/// grounded in the base row `C_{0,j}^k = [k = j]`. Subresults are
/// memoized per call.
pub fn coefficient_via_recurrence(i: u32, j: u32, k: u32) -> Polynomial {
    fn go(i: u32, j: u32, k: u32, memo: &mut HashMap<(u32, u32), Polynomial>) -> Polynomial {
        if matchings::matching_size(i, j, k).is_none() {
            return Polynomial::zero(Family::T);
        }
        if i == 0 {
            return Polynomial::one(Family::T); // in-window means k == j here
        }
        if let Some(hit) = memo.get(&(i, k)) {
            return hit.clone();
        }
        let mut value = Polynomial::t_difference(i, k + 1)
            .mul(&go(i - 1, j, k, memo))
            .expect("t family");
        if k >= 1 {
            value = value.add(&go(i - 1, j, k - 1, memo)).expect("t family");
        }
        memo.insert((i, k), value.clone());
        value
    }
    go(i, j, k, &mut HashMap::new())
}

/// `C_{i,j}^k` by the explicit expansion: with `r = i + j - k`, the sum
/// over r-subsets `p_1 < ... < p_r` of `{1..i}` of the products
/// `prod_s (t_{p_s} - t_{p_s + j + 1 - s})`.
pub fn coefficient_via_explicit(i: u32, j: u32, k: u32) -> Polynomial {
    let Some(r) = matchings::matching_size(i, j, k) else {
        return Polynomial::zero(Family::T);
    };
    let mut acc = Polynomial::zero(Family::T);
    for p in SubsetP::subsets_of(i, r) {
        let mut product = Polynomial::one(Family::T);
        for (s, &p_s) in p.elements().iter().enumerate() {
            let upper = p_s + j + 1 - (s as u32 + 1);
            product = product
                .mul(&Polynomial::t_difference(p_s, upper))
                .expect("t family");
        }
        acc = acc.add(&product).expect("t family");
    }
    acc
}

/// Combined weight of all matchings with matched top subset `p` inside
/// G^i_j: `prod_s (t_{p_s} - t_{p_s + j + 1 - s})`. Both lattice models
/// attach this same factor to `p`; summing it over all r-subsets gives
/// the explicit expansion. Zero when `p` has more elements than `j`
/// (no injection exists).
pub fn grouped_factor(p: &SubsetP, j: u32) -> Polynomial {
    if p.len() as u32 > j {
        return Polynomial::zero(Family::T);
    }
    let mut product = Polynomial::one(Family::T);
    for (s, &p_s) in p.elements().iter().enumerate() {
        let upper = p_s + j + 1 - (s as u32 + 1);
        product = product
            .mul(&Polynomial::t_difference(p_s, upper))
            .expect("t family");
    }
    product
}

/// Expansion of `sigma_i * sigma_j` over the classes of an ambient
/// space, with each nonzero coefficient computed in the requested
/// variable family (`T` via the explicit formula, `Beta` via the
/// matching rule).
pub fn expand_product(
    i: u32,
    j: u32,
    ambient: Ambient,
    family: Family,
) -> Result<ExpansionResult, Error> {
    ambient.check_class(i)?;
    ambient.check_class(j)?;
    let mut coeffs = BTreeMap::new();
    for k in i.max(j)..=i + j {
        if !ambient.contains_class(k) {
            break;
        }
        let coefficient = match family {
            Family::T => coefficient_via_explicit(i, j, k),
            Family::Beta => matchings::coefficient_via_matchings(i, j, k),
        };
        coeffs.insert(k, coefficient);
    }
    Ok(ExpansionResult {
        i,
        j,
        ambient,
        family,
        coeffs,
    })
}

/// The expansion `sigma_i * sigma_j = sum_k C_{i,j}^k sigma_k`,
/// restricted to the classes of the ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionResult {
    i: u32,
    j: u32,
    ambient: Ambient,
    family: Family,
    coeffs: BTreeMap<u32, Polynomial>,
}

impl ExpansionResult {
    /// The two factor indices `(i, j)`.
    pub fn factors(&self) -> (u32, u32) {
        (self.i, self.j)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Coefficient of `sigma_k`; `None` when `k` is outside the window
    /// kept by the ambient space.
    pub fn coefficient(&self, k: u32) -> Option<&Polynomial> {
        self.coeffs.get(&k)
    }

    /// `(k, coefficient)` pairs, ascending in `k`.
    pub fn classes(&self) -> impl Iterator<Item = (u32, &Polynomial)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn num_classes(&self) -> usize {
        self.coeffs.len()
    }
}

/// A Z[t]-linear combination of classes `sigma_0, ..., sigma_n` — the
/// working state when multiplying several classes together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCombination {
    ambient: Ambient,
    coeffs: BTreeMap<u32, Polynomial>,
}

impl ClassCombination {
    /// The single class `sigma_k`.
    pub fn single(k: u32, ambient: Ambient) -> Result<Self, Error> {
        ambient.check_class(k)?;
        let mut coeffs = BTreeMap::new();
        coeffs.insert(k, Polynomial::one(Family::T));
        Ok(Self { ambient, coeffs })
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// Coefficient of `sigma_k` (zero when absent).
    pub fn coefficient(&self, k: u32) -> Polynomial {
        self.coeffs
            .get(&k)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(Family::T))
    }

    /// `(k, coefficient)` pairs with nonzero coefficient, ascending in `k`.
    pub fn classes(&self) -> impl Iterator<Item = (u32, &Polynomial)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    /// Multiplies by `sigma_j`, expanding every `sigma_m sigma_j` product
    /// and collecting like classes.
    pub fn multiply_by_class(&self, j: u32) -> Result<Self, Error> {
        self.ambient.check_class(j)?;
        let mut coeffs: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (&m, scalar) in &self.coeffs {
            let expansion = expand_product(m, j, self.ambient, Family::T)?;
            for (k, c) in expansion.classes() {
                let contribution = scalar.mul(c).expect("t family");
                let slot = coeffs
                    .entry(k)
                    .or_insert_with(|| Polynomial::zero(Family::T));
                *slot = slot.add(&contribution).expect("t family");
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(Self {
            ambient: self.ambient,
            coeffs,
        })
    }
}
