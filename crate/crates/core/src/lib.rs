pub mod analysis;
pub mod error;
pub mod logic;
pub mod model;
pub mod oracle;
pub mod property;
pub mod realization;
pub mod stp;

pub use error::{Error, Result};
pub use property::Property;
