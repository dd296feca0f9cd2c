pub mod arith;
pub mod linalg;
pub mod geometry;
pub mod lattice;
pub mod config;
pub mod catalog;
