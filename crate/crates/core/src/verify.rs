//! Named verification suites sweeping the structural identities over
//! bounded index grids. Each instance reports pass/fail plus a witness
//! describing any discrepancy; with the `parallel` feature the
//! instances of a suite run concurrently (same report either way).

use std::fmt;

use crate::formulas::{
    coefficient_via_explicit, coefficient_via_recurrence, grouped_factor, ClassCombination,
    Ambient,
};
use crate::matchings::{coefficient_via_matchings, matching_size, SubsetP};
use crate::models::{verify_model_sum, ModelKind};
use crate::newton::{snp_verify, term_count, verify_idp, verify_scaling};
use crate::polyring::{Family, Polynomial};
use crate::report::PolyCheck;

/// The eight verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// All four coefficient routes agree (matchings converted to `t`).
    Equivalence,
    /// `C_{i,j}^k = C_{j,i}^k`.
    Symmetry,
    /// Support of the `beta` expansion = lattice points of the polytope.
    Snp,
    /// Block-projected support of `C_{Ni,Nj}^{Nk}` = support of the N-th power.
    Scaling,
    /// Dilated polytope points = N-fold Minkowski sum of the base points.
    Idp,
    /// Matching-count formula = coefficient sum of the `beta` expansion.
    Count,
    /// Triple products of classes agree in both association orders.
    Associativity,
    /// Puzzle and tableau weight sums reproduce the closed formula.
    Models,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Equivalence,
        Suite::Symmetry,
        Suite::Snp,
        Suite::Scaling,
        Suite::Idp,
        Suite::Count,
        Suite::Associativity,
        Suite::Models,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Equivalence => "equivalence",
            Suite::Symmetry => "symmetry",
            Suite::Snp => "snp",
            Suite::Scaling => "scaling",
            Suite::Idp => "idp",
            Suite::Count => "count",
            Suite::Associativity => "associativity",
            Suite::Models => "models",
        }
    }

    /// Grid bounds sized so every suite stays desk-scale.
    pub fn default_bounds(self) -> Bounds {
        let (max_ij, max_scale, ambient_dim) = match self {
            Suite::Equivalence | Suite::Symmetry => (7, 1, 0),
            Suite::Snp => (6, 1, 0),
            Suite::Scaling | Suite::Idp => (3, 3, 0),
            Suite::Count => (8, 1, 0),
            Suite::Associativity => (4, 1, 8),
            Suite::Models => (6, 1, 0),
        };
        Bounds {
            max_ij,
            max_scale,
            ambient_dim,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Grid bounds for a suite run: `max_ij` caps every class index,
/// `max_scale` caps the dilation/scaling factor N (scaling, idp), and
/// `ambient_dim` fixes the P^n used for associativity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_ij: u32,
    pub max_scale: u32,
    pub ambient_dim: u32,
}

impl Bounds {
    pub fn with_max_ij(mut self, max_ij: u32) -> Self {
        self.max_ij = max_ij;
        self
    }

    pub fn with_max_scale(mut self, max_scale: u32) -> Self {
        self.max_scale = max_scale;
        self
    }
}

/// One checked instance: a human-readable key, the verdict, and a
/// witness for failures.
#[derive(Debug, Clone)]
pub struct InstanceOutcome {
    pub key: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl InstanceOutcome {
    fn pass(key: String) -> Self {
        Self {
            key,
            passed: true,
            witness: None,
        }
    }

    fn fail(key: String, witness: String) -> Self {
        Self {
            key,
            passed: false,
            witness: Some(witness),
        }
    }
}

/// Result of running one suite over its grid.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub bounds: Bounds,
    pub outcomes: Vec<InstanceOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn num_passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed).count()
    }

    pub fn len(&self) -> usize {
        self.outcomes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outcomes.is_empty()
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceOutcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }
}

#[cfg(feature = "parallel")]
fn run_checks<I, F>(instances: Vec<I>, check: F) -> Vec<InstanceOutcome>
where
    I: Send + Sync,
    F: Fn(&I) -> InstanceOutcome + Send + Sync,
{
    use rayon::prelude::*;
    instances.par_iter().map(check).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_checks<I, F>(instances: Vec<I>, check: F) -> Vec<InstanceOutcome>
where
    F: Fn(&I) -> InstanceOutcome,
{
    instances.iter().map(check).collect()
}

/// All `(i, j, k)` with `i, j <= max_ij` inside the nonvanishing window.
fn window_triples(max_ij: u32) -> Vec<(u32, u32, u32)> {
    let mut triples = Vec::new();
    for i in 0..=max_ij {
        for j in 0..=max_ij {
            for k in i.max(j)..=i + j {
                triples.push((i, j, k));
            }
        }
    }
    triples
}

/// Runs one suite over the given bounds.
pub fn run_suite(suite: Suite, bounds: Bounds) -> SuiteReport {
    let outcomes = match suite {
        Suite::Equivalence => equivalence_outcomes(bounds),
        Suite::Symmetry => symmetry_outcomes(bounds),
        Suite::Snp => snp_outcomes(bounds),
        Suite::Scaling => scaling_outcomes(bounds),
        Suite::Idp => idp_outcomes(bounds),
        Suite::Count => count_outcomes(bounds),
        Suite::Associativity => associativity_outcomes(bounds),
        Suite::Models => models_outcomes(bounds),
    };
    SuiteReport {
        suite,
        bounds,
        outcomes,
    }
}

fn equivalence_outcomes(bounds: Bounds) -> Vec<InstanceOutcome> {
    run_checks(window_triples(bounds.max_ij), |&(i, j, k)| {
        let key = format!("(i,j,k)=({i},{j},{k})");
        let reference = coefficient_via_explicit(i, j, k);
        let mut grouped = Polynomial::zero(Family::T);
        if let Some(r) = matching_size(i, j, k) {
            for p in SubsetP::subsets_of(i, r) {
                grouped = grouped.add(&grouped_factor(&p, j)).expect("t family");
            }
        }
        let routes = [
            (
                "matchings",
                coefficient_via_matchings(i, j, k)
                    .beta_to_t()
                    .expect("beta input"),
            ),
            ("recurrence", coefficient_via_recurrence(i, j, k)),
            ("grouped", grouped),
        ];
        for (name, value) in routes {
            if value != reference {
                let check = PolyCheck::compare(value, reference);
                return InstanceOutcome::fail(key, format!("{name} vs explicit: {check}"));
            }
        }
        InstanceOutcome::pass(key)
    })
}

fn symmetry_outcomes(bounds: Bounds) -> Vec<InstanceOutcome> {
    let instances: Vec<_> = window_triples(bounds.max_ij)
        .into_iter()
        .filter(|&(i, j, _)| i <= j)
        .collect();
    run_checks(instances, |&(i, j, k)| {
        let key = format!("(i,j,k)=({i},{j},{k}) vs ({j},{i},{k})");
        let check = PolyCheck::compare(
            coefficient_via_matchings(i, j, k),
            coefficient_via_matchings(j, i, k),
        );
        if check.is_equal() {
            InstanceOutcome::pass(key)
        } else {
            InstanceOutcome::fail(key, check.to_string())
        }
    })
}

fn snp_outcomes(bounds: Bounds) -> Vec<InstanceOutcome> {
    run_checks(window_triples(bounds.max_ij), |&(i, j, k)| {
        let key = format!("(i,j,k)=({i},{j},{k})");
        let check = snp_verify(i, j, k).expect("window triple");
        if check.is_equal() {
            InstanceOutcome::pass(key)
        } else {
            InstanceOutcome::fail(key, format!("support vs polytope: {check}"))
        }
    })
}

fn scaled_instances(bounds: Bounds) -> Vec<(u32, u32, u32, u32)> {
    let mut instances = Vec::new();
    for (i, j, k) in window_triples(bounds.max_ij) {
        for n in 1..=bounds.max_scale {
            instances.push((i, j, k, n));
        }
    }
    instances
}

fn scaling_outcomes(bounds: Bounds) -> Vec<InstanceOutcome> {
    run_checks(scaled_instances(bounds), |&(i, j, k, n)| {
        let key = format!("(i,j,k)=({i},{j},{k}) N={n}");
        let check = verify_scaling(i, j, k, n).expect("window triple");
        if check.is_equal() {
            InstanceOutcome::pass(key)
        } else {
            InstanceOutcome::fail(key, format!("projected vs power support: {check}"))
        }
    })
}

fn idp_outcomes(bounds: Bounds) -> Vec<InstanceOutcome> {
    run_checks(scaled_instances(bounds), |&(i, j, k, n)| {
        let key = format!("(i,j,k)=({i},{j},{k}) N={n}");
        let check = verify_idp(i, j, k, n).expect("window triple");
        if check.is_equal() {
            InstanceOutcome::pass(key)
        } else {
            InstanceOutcome::fail(key, format!("dilation vs Minkowski sum: {check}"))
        }
    })
}

fn count_outcomes(bounds: Bounds) -> Vec<InstanceOutcome> {
    run_checks(window_triples(bounds.max_ij), |&(i, j, k)| {
        let key = format!("(i,j,k)=({i},{j},{k})");
        let count = term_count(i, j, k);
        if count.is_consistent() {
            InstanceOutcome::pass(key)
        } else {
            InstanceOutcome::fail(
                key,
                format!(
                    "formula {} vs coefficient sum {}",
                    count.formula, count.coefficient_sum
                ),
            )
        }
    })
}

fn associativity_outcomes(bounds: Bounds) -> Vec<InstanceOutcome> {
    let ambient = Ambient::Finite(bounds.ambient_dim);
    let mut instances = Vec::new();
    for a in 0..=bounds.max_ij {
        for b in a..=bounds.max_ij {
            for c in b..=bounds.max_ij {
                instances.push((a, b, c));
            }
        }
    }
    run_checks(instances, move |&(a, b, c)| {
        let key = format!("sigma_{a}*sigma_{b}*sigma_{c} in {ambient}");
        let left = ClassCombination::single(a, ambient)
            .and_then(|acc| acc.multiply_by_class(b))
            .and_then(|acc| acc.multiply_by_class(c))
            .expect("classes fit the ambient space");
        let right = ClassCombination::single(b, ambient)
            .and_then(|acc| acc.multiply_by_class(c))
            .and_then(|acc| acc.multiply_by_class(a))
            .expect("classes fit the ambient space");
        if left == right {
            return InstanceOutcome::pass(key);
        }
        let witness = left
            .classes()
            .map(|(k, _)| k)
            .chain(right.classes().map(|(k, _)| k))
            .find(|&k| left.coefficient(k) != right.coefficient(k))
            .map(|k| {
                format!(
                    "sigma_{k} coefficient: left = {} ; right = {}",
                    left.coefficient(k),
                    right.coefficient(k)
                )
            })
            .unwrap_or_else(|| "combinations differ".to_string());
        InstanceOutcome::fail(key, witness)
    })
}

fn models_outcomes(bounds: Bounds) -> Vec<InstanceOutcome> {
    let mut instances = Vec::new();
    for (i, j, k) in window_triples(bounds.max_ij) {
        for kind in [ModelKind::Puzzles, ModelKind::Tableaux] {
            instances.push((i, j, k, kind));
        }
    }
    run_checks(instances, |&(i, j, k, kind)| {
        let key = format!("{kind} at (i,j,k)=({i},{j},{k})");
        let check = verify_model_sum(kind, i, j, k);
        if check.is_equal() {
            InstanceOutcome::pass(key)
        } else {
            InstanceOutcome::fail(key, format!("model sum vs explicit: {check}"))
        }
    })
}
