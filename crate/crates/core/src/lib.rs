//! Exact computational algebra for quarto-quartic birational maps of
//! projective 3-space: polynomial arithmetic over `F_p` and `Q`, a Buchberger
//! engine with ideal operations and Hilbert series, a small intersection ring
//! calculator, analysis of rational maps and constructors for the
//! de Jonquières, ruled, determinantal and double-conic families.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod chow;
pub mod error;
pub mod families;
pub mod groebner;
pub mod random;
pub mod ratmap;

pub use error::{Error, Result};
