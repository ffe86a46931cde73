//! Exact and numerical modular-functor data for pointed ribbon
//! Grothendieck-Verdier categories.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of immutable values; IO, config files and reports live in the
//! `gvblocks` companion crate.
//!
//! Layout:
//! - [`graph_operad`]: corollas, graphs with half-edge involutions, cutting,
//!   contracting and composition by vertex substitution.
//! - [`finite_forms`]: finite abelian groups, `Q/Z`-valued quadratic forms,
//!   radicals, Gauss sums and Smith normal form.
//! - [`lattice_data`]: even lattices and their discriminant forms.
//! - [`pointed_gv`]: the pointed category `(G, q, h0)` with duality, twist,
//!   axiom checks and verdicts.
//! - [`surfaces`]: surfaces and pants decompositions with their moves.
//! - [`blocks`]: conformal block dimensions and the Verlinde formula.
//! - [`mcg_torus`]: projective `SL(2, Z)` data, anomaly and fusion rules.
#![no_std]
#![forbid(unsafe_code)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod blocks;
mod error;
pub mod finite_forms;
pub mod graph_operad;
pub mod lattice_data;
pub mod linalg;
pub mod mcg_torus;
pub mod pointed_gv;
pub mod surfaces;

pub use error::{Error, ErrorKind, Result};
