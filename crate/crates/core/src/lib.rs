//! Paths of Kirillov-Reshetikhin crystals of type `A`.
//!
//! Tableaux and RSK machinery, the combinatorial R-matrix with its energy
//! function, path statistics (energy, charge, tau, Haglund's inv and maj),
//! box-ball dynamics, Kostka-type polynomials and checkers for the
//! generating-function identities relating them.

pub mod bbs;
pub mod crystal;
pub mod error;
pub mod poly;
pub mod polynomials;
pub mod statistics;
pub mod tableaux;
pub mod verify;

pub use crystal::{RectTableau, TensorPath};
pub use error::{Error, Result};
pub use poly::{QPoly, QTPoly};
pub use tableaux::{Composition, Letter, Partition, Ssyt};
