//! r-matchings of the bipartite graph G^i_j and the crossing weight that
//! turns their enumeration into structure constants.
//!
//! G^i_j is the complete bipartite graph on top vertices `a_1..a_i` and
//! bottom vertices `b_1..b_j`, drawn with both rows increasing to the
//! right. An edge `a_g b_h` inside a matching M has crossing value
//! `X(e) = #{a_p b_q in M : p < g and q < h}` (edges it sits completely
//! to the right of) and weight index `g + h - X(e) - 1`; the weight of M
//! is the product of `beta` variables at those indices. Summing weights
//! over all r-matchings with `r = i + j - k` yields `C_{i,j}^k`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::polyring::{ExponentVector, Family, Polynomial};

/// Expected matching count above which the dispatching coefficient fold
/// switches to the parallel path. Small calls stay on the sequential
/// fold so micro-invocations never pay thread-pool overhead.
#[cfg(feature = "parallel")]
const PARALLEL_CUTOFF: u32 = 10_000;

/// Edge `a_g b_h` of G^i_j (both indices 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub g: u32,
    pub h: u32,
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}b{}", self.g, self.h)
    }
}

/// A partial matching of G^i_j: edges with pairwise distinct top and
/// pairwise distinct bottom endpoints, stored sorted by top index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    i: u32,
    j: u32,
    edges: Vec<Edge>,
}

impl Matching {
    /// Validates endpoints and disjointness, then sorts edges by top index.
    pub fn new(i: u32, j: u32, edges: Vec<Edge>) -> Result<Self, Error> {
        let mut edges = edges;
        edges.sort();
        for e in &edges {
            if e.g < 1 || e.g > i || e.h < 1 || e.h > j {
                return Err(Error::InvalidMatching(format!(
                    "edge {e} does not fit in G^{i}_{j}"
                )));
            }
        }
        for pair in edges.windows(2) {
            if pair[0].g == pair[1].g {
                return Err(Error::InvalidMatching(format!(
                    "top vertex a{} used twice",
                    pair[0].g
                )));
            }
        }
        let mut bottoms: Vec<u32> = edges.iter().map(|e| e.h).collect();
        bottoms.sort_unstable();
        for pair in bottoms.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::InvalidMatching(format!(
                    "bottom vertex b{} used twice",
                    pair[0]
                )));
            }
        }
        Ok(Self { i, j, edges })
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// `(i, j)` of the ambient graph G^i_j.
    pub fn graph_sizes(&self) -> (u32, u32) {
        (self.i, self.j)
    }

    /// Edges sorted by top index.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, edge: Edge) -> bool {
        self.edges.binary_search(&edge).is_ok()
    }

    /// Crossing value `X(e)`: how many matching edges lie strictly
    /// north-west of `e`, i.e. have both endpoints at smaller indices.
    pub fn crossing_value(&self, edge: Edge) -> Result<u32, Error> {
        if !self.contains(edge) {
            return Err(Error::EdgeNotInMatching {
                g: edge.g,
                h: edge.h,
            });
        }
        Ok(self
            .edges
            .iter()
            .filter(|other| other.g < edge.g && other.h < edge.h)
            .count() as u32)
    }

    /// Weight index `g + h - X(e) - 1` of an edge in this matching.
    pub fn weight_index(&self, edge: Edge) -> Result<u32, Error> {
        Ok(edge.g + edge.h - self.crossing_value(edge)? - 1)
    }

    /// Exponent vector of the matching weight: one `beta` factor per edge.
    pub fn weight_exponents(&self) -> ExponentVector {
        let tops: Vec<u32> = self.edges.iter().map(|e| e.g).collect();
        let bottoms: Vec<u32> = self.edges.iter().map(|e| e.h).collect();
        weight_exponents_of(&tops, &bottoms)
    }

    /// Weight `wt(M)` as a `Beta` monomial (the empty matching weighs 1).
    pub fn weight(&self) -> Polynomial {
        Polynomial::monomial(Family::Beta, self.weight_exponents(), 1)
    }

    /// The set of matched top vertices, as a subset of `{1, ..., i}`.
    pub fn subset_p(&self) -> SubsetP {
        let elements = self.edges.iter().map(|e| e.g).collect();
        SubsetP::new(self.i, elements).expect("edges are sorted with distinct tops")
    }

    /// Rotates the picture by a half turn: edge `a_g b_h` becomes
    /// `a_h b_g` of G^j_i. North-west relations between edges and every
    /// `g + h` are unchanged, so each edge keeps its weight index and
    /// the total weight is preserved.
    pub fn rotate180(&self) -> Matching {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { g: e.h, h: e.g })
            .collect();
        Matching::new(self.j, self.i, edges).expect("transpose of a matching is a matching")
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, e) in self.edges.iter().enumerate() {
            if pos > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Strictly increasing subset of `{1, ..., bound}`. Grouping matchings
/// by their matched top vertices produces one of these per group; the
/// closed formulas and both lattice models are indexed by them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetP {
    bound: u32,
    elements: Vec<u32>,
}

impl SubsetP {
    pub fn new(bound: u32, elements: Vec<u32>) -> Result<Self, Error> {
        for pair in elements.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::InvalidSubset(format!(
                    "elements must strictly increase, got {} then {}",
                    pair[0], pair[1]
                )));
            }
        }
        if let (Some(&first), Some(&last)) = (elements.first(), elements.last()) {
            if first < 1 || last > bound {
                return Err(Error::InvalidSubset(format!(
                    "elements must lie in 1..={bound}"
                )));
            }
        }
        Ok(Self { bound, elements })
    }

    pub fn empty(bound: u32) -> Self {
        Self {
            bound,
            elements: Vec::new(),
        }
    }

    /// All r-element subsets of `{1, ..., bound}` in lexicographic order.
    pub fn subsets_of(bound: u32, r: u32) -> impl Iterator<Item = SubsetP> {
        (1..=bound)
            .combinations(r as usize)
            .map(move |elements| SubsetP { bound, elements })
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl fmt::Display for SubsetP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, e) in self.elements.iter().enumerate() {
            if pos > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Weight indices from parallel top/bottom index lists (tops strictly
/// increasing, bottoms the matched partners in top order), merged into
/// an exponent vector. Single home of the crossing rule.
fn weight_exponents_of(tops: &[u32], bottoms: &[u32]) -> ExponentVector {
    debug_assert_eq!(tops.len(), bottoms.len());
    ExponentVector::new((0..tops.len()).map(|s| {
        let crossings = (0..s).filter(|&p| bottoms[p] < bottoms[s]).count() as u32;
        (tops[s] + bottoms[s] - crossings - 1, 1)
    }))
}

/// Matching size `r = i + j - k` when `(i, j, k)` lies in the window
/// where r-matchings exist, i.e. `max(i,j) <= k <= i+j`.
pub(crate) fn matching_size(i: u32, j: u32, k: u32) -> Option<u32> {
    let r = (i + j).checked_sub(k)?;
    (r <= i.min(j)).then_some(r)
}

/// Streams every r-matching of G^i_j: r-subsets of the top row in
/// lexicographic order, and for each, the injections into the bottom
/// row in lexicographic order of their image tuples.
pub fn enumerate_matchings(i: u32, j: u32, r: u32) -> impl Iterator<Item = Matching> {
    let r = r as usize;
    (1..=i).combinations(r).flat_map(move |tops| {
        (1..=j).permutations(r).map(move |bottoms| {
            let edges = tops
                .iter()
                .zip(&bottoms)
                .map(|(&g, &h)| Edge { g, h })
                .collect();
            Matching { i, j, edges }
        })
    })
}

/// Number of r-matchings of G^i_j: `r! * C(i,r) * C(j,r)`.
pub fn matching_count(i: u32, j: u32, r: u32) -> BigInt {
    let mut count = BigInt::one();
    for s in 1..=r {
        count *= s;
    }
    count * binomial(i, r) * binomial(j, r)
}

fn binomial(n: u32, r: u32) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let mut c = BigInt::one();
    for s in 1..=r {
        c *= n - r + s;
        c /= s;
    }
    c
}

/// All r-matchings of G^i_j grouped by matched top subset, preserving
/// enumeration order within each group.
pub fn group_by_subset(i: u32, j: u32, r: u32) -> BTreeMap<SubsetP, Vec<Matching>> {
    let mut groups: BTreeMap<SubsetP, Vec<Matching>> = BTreeMap::new();
    for m in enumerate_matchings(i, j, r) {
        groups.entry(m.subset_p()).or_default().push(m);
    }
    groups
}

/// `C_{i,j}^k` as the weight sum over all `(i+j-k)`-matchings of G^i_j,
/// folded sequentially. Zero outside the nonvanishing window.
pub fn coefficient_via_matchings_seq(i: u32, j: u32, k: u32) -> Polynomial {
    let mut acc = Polynomial::zero(Family::Beta);
    if let Some(r) = matching_size(i, j, k) {
        for m in enumerate_matchings(i, j, r) {
            acc.add_assign_term(m.weight_exponents(), 1);
        }
    }
    acc
}

/// Parallel weight sum: one task per top subset, partial polynomials
/// merged by addition. Identical result to the sequential fold.
#[cfg(feature = "parallel")]
pub fn coefficient_via_matchings_par(i: u32, j: u32, k: u32) -> Polynomial {
    use rayon::prelude::*;

    let Some(r) = matching_size(i, j, k) else {
        return Polynomial::zero(Family::Beta);
    };
    let r = r as usize;
    let top_subsets: Vec<Vec<u32>> = (1..=i).combinations(r).collect();
    top_subsets
        .par_iter()
        .map(|tops| {
            let mut acc = Polynomial::zero(Family::Beta);
            for bottoms in (1..=j).permutations(r) {
                acc.add_assign_term(weight_exponents_of(tops, &bottoms), 1);
            }
            acc
        })
        .reduce(
            || Polynomial::zero(Family::Beta),
            |a, b| a.add(&b).expect("beta family"),
        )
}

/// `C_{i,j}^k` by the matching rule, dispatching to the parallel fold
/// for large enumerations when the `parallel` feature is enabled.
pub fn coefficient_via_matchings(i: u32, j: u32, k: u32) -> Polynomial {
    #[cfg(feature = "parallel")]
    {
        if let Some(r) = matching_size(i, j, k) {
            if matching_count(i, j, r) >= BigInt::from(PARALLEL_CUTOFF) {
                return coefficient_via_matchings_par(i, j, k);
            }
        }
    }
    coefficient_via_matchings_seq(i, j, k)
}
