//! Root-system arithmetic and certificate construction for `q`-shifted
//! weights of simple algebraic groups in positive characteristic.

pub mod arith;
pub mod bounds;
pub mod cite;
pub mod error;
pub mod genericity;
pub mod kostant;
pub mod rootsys;
pub mod verify;
pub mod weights;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{CartanType, Family, RootSystem};
pub use weights::{DigitExpansion, Weight, ZeroRun};
pub use weyl::{WeylElement, WeylGroup};
