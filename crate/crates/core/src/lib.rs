//! Denominator formulas, universal coefficients and invariants for
//! Kirillov-Reshetikhin modules over quantum affine algebras.

pub mod error;
pub mod qfield;
pub mod root_data;
pub mod denominators;
pub mod univcoeff;
pub mod invariants;
pub mod morphisms;
pub mod qdata_iboxes;
pub mod crystals;
pub mod characters;
pub mod qchar_b;
pub mod cli;

pub use error::{Error, Result};
pub use qfield::{FactoredLaurent, PhiProduct, QPoint, Style};
pub use root_data::{AffineType, Kind};
pub use denominators::{DenomPoly, KRModule};
