//! Exhaustive law checking for finite categories, monads on them, monoidal
//! structure, and the monoidal structure carried by Kleisli and
//! Eilenberg-Moore categories of monoidal monads.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod fincat;
pub mod lift;
pub mod monad;
pub mod monmonad;
pub mod monoidal;
pub mod report;
pub mod resolutions;
pub mod workspace;

pub use error::{Error, Result};
pub use fincat::{FinCat, Functor, MorId, NatTrans, ObjId};
pub use report::{Report, Violation};
