//! Finite models of Bousfield-lattice structure: lattices, smash products,
//! the derived frame `DL` and Boolean algebras, strange ideals, and searches
//! over small quantales.

pub mod dlframe;
pub mod dot;
pub mod enumerate;
pub mod format;
pub mod iso;
pub mod lattice;
pub mod models;
pub mod quantale;
pub mod search;
