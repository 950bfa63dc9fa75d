//! Exact computation of Hochschild cohomology in low degrees for finite
//! dimensional bound quiver algebras.

pub mod fields;
pub mod linalg;
pub mod presentation;
pub mod engine;
pub mod hochschild;
pub mod catalog;
pub mod oracle;
pub mod analysis;
