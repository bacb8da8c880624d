pub mod catalog;
pub mod check;
pub mod entmod;
pub mod entwining;
pub mod error;
pub mod exactla;
pub mod galois;
pub mod hochschild;
pub mod io;
pub mod report;
pub mod separability;
pub mod structures;
pub mod witness;

pub use check::CheckReport;
pub use error::{Error, Result};
