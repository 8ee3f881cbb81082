//! Row reduction kernels behind [`crate::charmap::CharMatrix`].

pub mod gf2;
pub mod zint;
