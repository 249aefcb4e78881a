pub mod hyperplanes;
pub mod quad;
pub mod diagonal;
pub use hyperplanes::*;
pub use quad::*;
pub use diagonal::*;
