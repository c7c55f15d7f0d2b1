#![no_std]
extern crate alloc;

pub mod linalg;
pub mod report;
pub mod scalars;
pub mod uqrs;
pub mod rmatrix;
pub mod wedge;
