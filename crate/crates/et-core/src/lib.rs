//! Core algorithms for the edge-transformer / Weisfeiler-Leman test bench.
//!
//! Everything in this crate is pure computation over owned data: labeled
//! graphs and a brute-force isomorphism oracle ([`graph`]), exact 1-WL /
//! k-WL / folklore 2-WL colorings ([`wl`]), a small dense f64 tensor kernel
//! with reverse-mode gradients ([`tensor`]), the triangular-attention edge
//! transformer itself ([`et`]), and an exact-rational simulation of the
//! 2-FWL refinement in edge-transformer update form ([`oracle`]).
//!
//! The crate is `no_std`-compatible (requires `alloc`); file formats, the
//! CLI, and benchmarking live in the companion `et-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod et;
pub mod graph;
mod mathx;
pub mod oracle;
pub mod rng;
pub mod tensor;
pub mod wl;
