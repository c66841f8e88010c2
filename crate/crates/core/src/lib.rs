//! Exact Clifford algebra toolkit: multivectors, compiled matrix
//! representations, Pin/Spin groups, spinor ideals and Čech obstructions.

pub mod algebra;
pub mod cech;
pub mod cli;
pub mod groups;
pub mod linalg;
pub mod repr;
pub mod sample;
pub mod scalar;
pub mod spinors;
pub mod verify;
