pub mod config;

pub use config::ExperimentConfig;
