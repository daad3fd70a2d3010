pub mod dynamics;
pub mod error;
pub mod function;
pub mod io;
pub mod neighborhood;
pub mod pbn;
pub mod state;
pub mod verify;

pub use error::{Error, Result};
