//! Wire format and text layouts behind the `gpf` binary.

pub mod render;
pub mod wire;
