//! Test-side oracles: the same quantities the library computes, derived
//! here by deliberately different enumeration strategies so agreement is
//! meaningful.

use itertools::Itertools;

use equimatch::polyring::{ExponentVector, Family, Polynomial};

/// `C_{i,j}^k` by brute force: filter the vertex-disjoint r-subsets of
/// the full edge list of G^i_j and weigh each by the crossing rule,
/// recomputed from scratch per edge. No shared code with the library's
/// streamed subset-times-injection enumeration.
pub fn brute_force_coefficient(i: u32, j: u32, k: u32) -> Polynomial {
    let mut acc = Polynomial::zero(Family::Beta);
    let Some(r) = (i + j).checked_sub(k) else {
        return acc;
    };
    if r > i.min(j) {
        return acc;
    }
    let all_edges: Vec<(u32, u32)> = (1..=i)
        .flat_map(|g| (1..=j).map(move |h| (g, h)))
        .collect();
    for subset in all_edges.iter().combinations(r as usize) {
        let tops_distinct = subset.iter().map(|e| e.0).all_unique();
        let bottoms_distinct = subset.iter().map(|e| e.1).all_unique();
        if !tops_distinct || !bottoms_distinct {
            continue;
        }
        let indices = subset.iter().map(|&&(g, h)| {
            let crossings = subset
                .iter()
                .filter(|&&&(p, q)| p < g && q < h)
                .count() as u32;
            (g + h - crossings - 1, 1)
        });
        acc.add_assign_term(ExponentVector::new(indices), 1);
    }
    acc
}

/// Lattice points of the `scale`-fold dilation of Q_{i,j}^k by dense
/// scan: every composition of `scale * r` into `k` parts (stars and
/// bars), filtered by the prefix constraints afterwards. Ascending
/// lexicographic order, matching the library's documented order.
pub fn dense_lattice_points(i: u32, k: u32, r: u32, scale: u32) -> Vec<ExponentVector> {
    let total = r * scale;
    if k == 0 {
        return if total == 0 {
            vec![ExponentVector::unit()]
        } else {
            Vec::new()
        };
    }
    (1..total + k)
        .combinations(k as usize - 1)
        .filter_map(|bars| {
            let mut parts = Vec::with_capacity(k as usize);
            let mut previous = 0;
            for &bar in &bars {
                parts.push(bar - previous - 1);
                previous = bar;
            }
            parts.push(total + k - previous - 1);
            let mut prefix = 0;
            for l in 1..=i.min(k) {
                prefix += parts[l as usize - 1];
                if prefix > scale * l {
                    return None;
                }
            }
            Some(ExponentVector::from_dense(&parts))
        })
        .collect()
}
