//! Exact computations in the RO(C₂)-graded homotopy rings of Real K-theory
//! (`kR`, `KR`) and of topological modular forms with Γ₁(3) level structure
//! (`tmf13`, `TMF13`), together with their C₂-equivariant stable Adams
//! operations.
//!
//! The crate is layered bottom-up:
//!
//! * [`ro_grade`]: degrees `a + bσ`.
//! * [`graded_ring`]: presented graded rings with mixed ℤ / ℤ/2 coefficients,
//!   normal forms and chart data, plus the presentation file format.
//! * [`expr`]: the element expression language used by files and the CLI.
//! * [`spectra`]: the four built-in models, localization, restriction.
//! * [`adams`]: ψᵏ by generator images and by closed formula.
//! * [`render`]: CSV and ASCII charts.
//! * [`verify`]: window sweeps that check ψᵏ against its closed form.

pub mod adams;
pub mod coeff;
pub mod error;
pub mod expr;
pub mod graded_ring;
pub mod render;
pub mod ro_grade;
pub mod spectra;
pub mod verify;

pub use adams::AdamsOperation;
pub use error::{Error, Result};
pub use graded_ring::{ChartCell, ChartData, Element, GeneratorSymbol, Monomial, Presentation, Window};
pub use ro_grade::RODegree;
pub use spectra::SpectrumId;
pub use verify::VerificationReport;
