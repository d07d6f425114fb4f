pub mod algebra;
pub mod error;
pub mod catalog;
pub mod ffield;
pub mod verify;
pub mod engine;
pub mod modpoly;
pub mod agcode;

pub use error::{Error, Result};
