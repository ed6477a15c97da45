//! Exact arithmetic in the ring of Lefschetz classes, ℤ[L] localized at `L`
//! and at every `L^n - 1`.

mod class;
pub mod cyclotomic;
mod poly;
mod render;

pub use class::{LefschetzClass, RingError};
pub use cyclotomic::cyclotomic;
pub use poly::IntPoly;
pub use render::{regroup_blocks, render_class};
