#![no_std]

extern crate alloc;

pub mod arrowdiag;
pub mod bracket;
pub mod chebyshev;
pub mod grammar;
pub mod ideals;
pub mod laurent;
pub mod modpres;
pub mod ratfunc;
mod uf;

pub use chebyshev::{Basis, TPoly};
pub use laurent::LaurentPoly;
