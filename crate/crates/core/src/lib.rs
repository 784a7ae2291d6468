//! Exact computations for representations of the special affine group
//! `SAff_n(C) = SL_n(C) ⋉ C^n`.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and
//! the command line live in the companion `saff` crate.

#![no_std]

extern crate alloc;

pub mod catalog;
pub mod constructions;
pub mod filtration;
pub mod linalg;
pub mod matmodel;
pub mod rationality;
pub mod repclass;
pub mod schur;
pub mod sl;
