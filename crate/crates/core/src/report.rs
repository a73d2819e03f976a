//! Witness-carrying comparison outcomes. Verifiers return these instead
//! of bare booleans so a failure always says what differed.

use std::fmt;

use crate::polyring::{ExponentVector, Polynomial, SupportSet};

/// Outcome of comparing two point sets. Equal sets leave both witness
/// lists empty; otherwise each list holds the points the other side is
/// missing, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCheck {
    pub left_only: Vec<ExponentVector>,
    pub right_only: Vec<ExponentVector>,
}

impl SetCheck {
    pub fn compare(left: &SupportSet, right: &SupportSet) -> Self {
        Self {
            left_only: left.iter().filter(|p| !right.contains(p)).cloned().collect(),
            right_only: right.iter().filter(|p| !left.contains(p)).cloned().collect(),
        }
    }

    pub fn is_equal(&self) -> bool {
        self.left_only.is_empty() && self.right_only.is_empty()
    }
}

impl fmt::Display for SetCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_equal() {
            return f.write_str("sets agree");
        }
        let render = |points: &[ExponentVector]| {
            points
                .iter()
                .map(ExponentVector::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(
            f,
            "left-only ({}): {}; right-only ({}): {}",
            self.left_only.len(),
            render(&self.left_only),
            self.right_only.len(),
            render(&self.right_only)
        )
    }
}

/// Outcome of comparing two polynomials, keeping both sides as the
/// witness when they differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyCheck {
    pub left: Polynomial,
    pub right: Polynomial,
}

impl PolyCheck {
    pub fn compare(left: Polynomial, right: Polynomial) -> Self {
        Self { left, right }
    }

    pub fn is_equal(&self) -> bool {
        self.left == self.right
    }
}

impl fmt::Display for PolyCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_equal() {
            f.write_str("polynomials agree")
        } else {
            write!(f, "left = {} ; right = {}", self.left, self.right)
        }
    }
}
