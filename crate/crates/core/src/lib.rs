pub mod cli;
pub mod diagram;
pub mod error;
pub mod laurent;
pub mod morse;
pub mod rational;
pub mod relations;
pub mod surgery;
pub mod theta;

pub use diagram::{Diagram, DiagramVector};
pub use error::{Error, Result};
pub use laurent::{LaurentPoly, RationalFn};
pub use rational::Q;
