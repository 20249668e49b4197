//! Exact combinatorics of finitely presented presheaves on the simplex, cube,
//! globe and cyclic categories: canonical forms of morphisms, skeletal
//! complexes, sphere fillers and coskeletality certificates.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod complex;
pub mod filler;
pub mod shape;
