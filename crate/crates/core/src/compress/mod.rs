//! The four compressed representations attractors are induced from.

pub mod collage;
pub mod lz77;
pub mod macro_scheme;
pub mod rlbwt;

pub use collage::{collage_expand, CollageSystem, Rule, RuleId};
pub use lz77::{lz77_decode, lz77_parse, Lz77Parse, Phrase};
pub use macro_scheme::{macro_decode, Directive, MacroScheme};
pub use rlbwt::{rlbwt_build, rlbwt_invert, Rlbwt, Run};
