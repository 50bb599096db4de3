//! Flat key = value experiment configuration.

/// Placeholder during scaffolding.
pub struct ExperimentConfig;
