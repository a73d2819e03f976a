//! Two lattice models — puzzles and one-row tableaux — whose weighted
//! counts recover the same structure constants.
//!
//! Both models for `C_{i,j}^k` are indexed by the r-subsets
//! `P = {p_1 < ... < p_r}` of `{1, ..., i}` with `r = i + j - k`: a
//! puzzle is determined by where its r distinguished pieces sit along
//! the boundary, a tableau `T_{p_1,...,p_r}` by its strictly increasing
//! row of entries. Either object carries the factored weight
//! `prod_s (t_{p_s} - t_{p_s + j + 1 - s})` — the combined weight of
//! the matchings with matched top subset P — so the two sums agree
//! with each other and with the closed formulas, while the objects
//! being counted (and their counts' dependence on the order of `i` and
//! `j`) differ.

use std::fmt;

use crate::formulas::{coefficient_via_explicit, grouped_factor};
use crate::matchings::{matching_size, SubsetP};
use crate::polyring::{Family, Polynomial};
use crate::report::PolyCheck;

/// Which lattice model to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    Puzzles,
    Tableaux,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::Puzzles => "puzzles",
            ModelKind::Tableaux => "tableaux",
        })
    }
}

/// One puzzle from P_{i,j}^k: its distinguished pieces sit at the
/// positions recorded in the subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuzzleEncoding {
    p: SubsetP,
    j: u32,
    k: u32,
}

/// One tableau from F_{i,j}^k: a single strictly increasing row
/// `T_{p_1,...,p_r}` with entries drawn from `{1, ..., i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauEncoding {
    p: SubsetP,
    j: u32,
    k: u32,
}

/// `(lower, upper)` t-indices of the s-th weight factor attached to a
/// subset `P`: `(p_s, p_s + j + 1 - s)`.
fn factor_spans(p: &SubsetP, j: u32) -> Vec<(u32, u32)> {
    p.elements()
        .iter()
        .enumerate()
        .map(|(s, &p_s)| (p_s, p_s + j + 1 - (s as u32 + 1)))
        .collect()
}

impl PuzzleEncoding {
    /// Positions of the distinguished pieces, as a subset of `{1..i}`.
    pub fn subset(&self) -> &SubsetP {
        &self.p
    }

    /// `(lower, upper)` t-indices contributed by each piece.
    pub fn factor_spans(&self) -> Vec<(u32, u32)> {
        factor_spans(&self.p, self.j)
    }

    /// Puzzle weight `prod_s (t_{p_s} - t_{p_s + j + 1 - s})`.
    pub fn weight(&self) -> Polynomial {
        grouped_factor(&self.p, self.j)
    }
}

impl fmt::Display for PuzzleEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "puzzle {} in P_{{{},{}}}^{}",
            self.p,
            self.p.bound(),
            self.j,
            self.k
        )
    }
}

impl TableauEncoding {
    /// Row entries `p_1 < ... < p_r`.
    pub fn entries(&self) -> &[u32] {
        self.p.elements()
    }

    /// `(lower, upper)` t-indices contributed by each cell.
    pub fn factor_spans(&self) -> Vec<(u32, u32)> {
        factor_spans(&self.p, self.j)
    }

    /// Tableau weight `prod_s (t_{p_s} - t_{p_s + j + 1 - s})`.
    pub fn weight(&self) -> Polynomial {
        grouped_factor(&self.p, self.j)
    }
}

impl fmt::Display for TableauEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("T_{")?;
        for (pos, e) in self.entries().iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}} in F_{{{},{}}}^{}", self.p.bound(), self.j, self.k)
    }
}

/// Streams P_{i,j}^k in lexicographic order of piece positions (empty
/// outside the nonvanishing window).
pub fn enumerate_puzzles(i: u32, j: u32, k: u32) -> impl Iterator<Item = PuzzleEncoding> {
    matching_size(i, j, k).into_iter().flat_map(move |r| {
        SubsetP::subsets_of(i, r).map(move |p| PuzzleEncoding { p, j, k })
    })
}

/// Streams F_{i,j}^k in lexicographic order of row entries (empty
/// outside the nonvanishing window).
pub fn enumerate_tableaux(i: u32, j: u32, k: u32) -> impl Iterator<Item = TableauEncoding> {
    matching_size(i, j, k).into_iter().flat_map(move |r| {
        SubsetP::subsets_of(i, r).map(move |p| TableauEncoding { p, j, k })
    })
}

/// `C_{i,j}^k` as the weight sum over P_{i,j}^k.
pub fn coefficient_via_puzzles(i: u32, j: u32, k: u32) -> Polynomial {
    let mut acc = Polynomial::zero(Family::T);
    for puzzle in enumerate_puzzles(i, j, k) {
        acc = acc.add(&puzzle.weight()).expect("t family");
    }
    acc
}

/// `C_{i,j}^k` as the weight sum over F_{i,j}^k.
pub fn coefficient_via_tableaux(i: u32, j: u32, k: u32) -> Polynomial {
    let mut acc = Polynomial::zero(Family::T);
    for tableau in enumerate_tableaux(i, j, k) {
        acc = acc.add(&tableau.weight()).expect("t family");
    }
    acc
}

/// Compares a model's weight sum (left) against the explicit formula
/// (right).
pub fn verify_model_sum(kind: ModelKind, i: u32, j: u32, k: u32) -> PolyCheck {
    let sum = match kind {
        ModelKind::Puzzles => coefficient_via_puzzles(i, j, k),
        ModelKind::Tableaux => coefficient_via_tableaux(i, j, k),
    };
    PolyCheck::compare(sum, coefficient_via_explicit(i, j, k))
}
