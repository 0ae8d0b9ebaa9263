//! Exact integer sumset arithmetic at desk scale, with mechanical checkers
//! for explicit bounds on long blocks of consecutive integers in sumsets:
//! sharp interval containment, block-length thresholds, sharpness witnesses,
//! and a counterexample scan of the open conjecture range.

pub mod enumerate;
pub mod error;
pub mod formulas;
pub mod par;
pub mod report;
pub mod sets;
pub mod suites;
pub mod verify;

pub use error::{Error, Result};
pub use sets::{family_sum, APWitness, Block, IntSet};
