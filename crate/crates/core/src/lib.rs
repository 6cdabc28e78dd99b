pub mod combinatorics;
pub mod error;
pub mod families;
pub mod fine;
pub mod linalg;
pub mod render;
pub mod symgroup;
pub mod verify;

pub use error::{Error, Result};
