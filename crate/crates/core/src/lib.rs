//! Numerical laboratory for L² concentration of Laplace–Beltrami eigenfunctions
//! and quasimodes in shrinking tubes around submanifolds, semiclassical damped
//! resolvent scaling, polynomial energy decay of weakly damped waves, and
//! oscillatory-integral operator-norm decay.
//!
//! Everything is desk scale: closed-form spectra (tori, S²), exact quadrature,
//! dense linear algebra, log–log exponent fits with explicit tolerances.

pub mod error;
pub mod geometry;
pub mod linalg;

pub use error::{Error, Result};
pub use geometry::{
    build_grid, distance_to_submanifold, geodesic_distance, tube_volume, ManifoldKind,
    ManifoldModel, QuadratureGrid, SubmanifoldKind, SubmanifoldSpec, Tube,
};
