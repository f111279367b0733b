//! Mechanical checks of the inequalities behind the extremal
//! characterisation.
//!
//! Statements quantified over every `b` or `c` are either *certified*
//! (reduced to exact polynomial positivity or an exact identity) or
//! *verified* on a finite grid. Each check yields a [`ClaimReport`].

mod formulas;
mod suite;

use alloc::string::String;
use alloc::vec::Vec;

pub use formulas::{
    binomial_sign_polynomial, binomial_sign_polynomial_unexpanded, boundary_bound,
    boundary_bound_slope, boundary_gap, boundary_star_gain, boundary_star_gain_slope,
    central_difference, neighbourhood_bound, peel_gap, peel_gap_slope, slope_term, slope_terms_sum,
    star_gain, SlopeTerm,
};
pub use suite::{
    base_case_integral, boundary_gap_root, run_claim_suite, verify_monotone_in_m, SuiteGrid,
    REPORTED_THRESHOLDS,
};

use crate::numerics::Certificate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClaimStatus {
    /// Every numeric sample met its bound.
    Verified,
    /// Every piece of evidence passed and at least one is exact.
    Certified,
    Failed,
}

/// Whether a check is expected to hold. Sub-threshold parameter pairs are
/// recorded with [`Expectation::Fails`] and must fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Expectation {
    Holds,
    Fails,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Evidence {
    /// A computed number and whether it satisfies `bound`, e.g. `> 0`.
    Sample {
        label: String,
        value: f64,
        bound: Bound,
        passed: bool,
    },
    /// A positivity certificate together with its independent re-check.
    Certificate {
        label: String,
        certificate: Certificate,
        rechecked: bool,
    },
    /// An inequality for which no certificate was found.
    Inconclusive { label: String },
    /// An exact identity between integers or polynomials.
    Identity { label: String, holds: bool },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Bound {
    Positive,
    Negative,
    /// `|value - target| <= tolerance`.
    Near {
        target: f64,
        tolerance: f64,
    },
}

impl Bound {
    pub fn admits(&self, value: f64) -> bool {
        match *self {
            Bound::Positive => value > 0.0,
            Bound::Negative => value < 0.0,
            Bound::Near { target, tolerance } => libm::fabs(value - target) <= tolerance,
        }
    }
}

impl Evidence {
    pub fn passed(&self) -> bool {
        match self {
            Evidence::Sample { passed, .. } => *passed,
            Evidence::Certificate { rechecked, .. } => *rechecked,
            Evidence::Inconclusive { .. } => false,
            Evidence::Identity { holds, .. } => *holds,
        }
    }

    fn is_exact(&self) -> bool {
        matches!(
            self,
            Evidence::Certificate { .. } | Evidence::Identity { .. }
        )
    }

    pub fn label(&self) -> &str {
        match self {
            Evidence::Sample { label, .. }
            | Evidence::Certificate { label, .. }
            | Evidence::Inconclusive { label }
            | Evidence::Identity { label, .. } => label,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClaimReport {
    pub id: String,
    pub summary: String,
    pub status: ClaimStatus,
    pub expectation: Expectation,
    pub evidence: Vec<Evidence>,
}

impl ClaimReport {
    /// Status is derived from the evidence: any failure fails the claim;
    /// otherwise exact evidence makes it certified.
    pub fn from_evidence(
        id: String,
        summary: String,
        expectation: Expectation,
        evidence: Vec<Evidence>,
    ) -> Self {
        let status = if evidence.is_empty() || evidence.iter().any(|e| !e.passed()) {
            ClaimStatus::Failed
        } else if evidence.iter().any(Evidence::is_exact) {
            ClaimStatus::Certified
        } else {
            ClaimStatus::Verified
        };
        Self {
            id,
            summary,
            status,
            expectation,
            evidence,
        }
    }

    /// The outcome agrees with the expectation.
    pub fn is_consistent(&self) -> bool {
        match self.expectation {
            Expectation::Holds => self.status != ClaimStatus::Failed,
            Expectation::Fails => self.status == ClaimStatus::Failed,
        }
    }
}

pub(crate) fn sample(label: String, value: f64, bound: Bound) -> Evidence {
    Evidence::Sample {
        label,
        value,
        bound,
        passed: bound.admits(value),
    }
}
