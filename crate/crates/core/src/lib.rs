//! Citation indexes built from per-paper citation counts.
//!
//! Covers the classical h and g indexes, the unconstrained g*, the nu index
//! and its tempered variant, and the nu-alpha family that interpolates from h
//! (alpha = 0) through nu (alpha = 1) to a closed-form limit. Around the core
//! sit order relations for property checks, a brute-force reference oracle,
//! dataset ingestion, batch analytics and plot rendering for the CLI.

pub mod alpha;
pub mod analytics;
pub mod cli;
pub mod dataset;
pub mod error;
pub mod indexes;
pub mod oracle;
pub mod order;
pub mod report;
pub mod svg;
pub mod vector;

pub use alpha::{nu_alpha_index, nu_infinity_index, AlphaCurve};
pub use error::IndexError;
pub use indexes::{
    full_report, g_index, g_star_index, h_index, m_star, nu_bar_index, nu_index, prefix_sums,
    IndexReport,
};
pub use vector::CitationVector;
