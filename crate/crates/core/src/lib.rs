//! Partition, Brauer, Temperley-Lieb and transformation categories, their
//! generators-and-relations presentations, and bounded checks of those
//! presentations against the concrete categories.

pub mod category;
pub mod diagram;
pub mod free_cat;
pub mod gen;
pub mod linear;
pub mod presentations;
pub mod transform;
pub mod verify;
