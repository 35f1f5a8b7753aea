pub mod embedding;
pub mod error;
pub mod io;
pub mod lie;
pub mod presets;
pub mod scalar;
pub mod semidirect;
pub mod variety;
pub mod vector_field;

pub use error::{Error, Result};
