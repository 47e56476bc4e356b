//! Bracket structures on resolutions of a foliation: the almost-Lie algebroid
//! on `E_{-1}`, its 2-Lie extension over length-two resolutions, the Koszul
//! Lie∞-algebroid of a function, and higher Jacobi residuals.

mod almost;
mod koszul;
mod linfty;
pub mod signs;
mod two;

pub use almost::{almost_lie_algebroid, jacobiator, AlmostLieAlgebroid, Section};
pub use koszul::{koszul_linfty, koszul_linfty_with, KoszulLinfty, NarySign};
pub use linfty::{bracket, higher_jacobi_residual, GradedElement, LinftyStructure};
pub use two::{extend_to_two_algebroid, TwoLieAlgebroid, TwoLieVerdicts};

#[cfg(test)]
mod tests;
