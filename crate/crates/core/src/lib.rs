#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bound;
pub mod conjecture;
pub mod connectivity;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod path;
pub mod search;
