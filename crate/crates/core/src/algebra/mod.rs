//! Algebras given by structure constants, their elements, and the
//! bilinear/trilinear maps (cochains) acting on them.

mod cochain;
mod element;
pub mod json;
mod linear_map;
mod structure_constants;

pub use cochain::{Cochain2, Cochain3};
pub use element::Element;
pub(crate) use element::{add_assign, axpy, sub_assign};
pub use json::{algebra_from_json, algebra_to_json};
pub use linear_map::LinearMap;
pub use structure_constants::AlgebraStructure;
