//! String attractors as an executable toolkit.
//!
//! The crate builds attractors from dictionary-compressed representations
//! (LZ77, run-length BWT, macro schemes, collage systems), validates and
//! approximates minimum k-attractors, reduces attractors back to decodable
//! representations, and provides an attractor-based random-access index.

pub mod approx;
pub mod attractor;
pub mod brute;
pub mod compress;
pub mod error;
pub mod families;
pub mod gadgets;
pub mod index;
pub mod induce;
pub mod reduce;
pub mod rmq;
pub mod suffix;
pub mod text;
pub mod validate;

pub use approx::{
    attractor_lower_bound, greedy_set_cover, harmonic, k_attractor_2k, k_attractor_greedy, sigma_k,
    SetCoverInstance,
};
pub use attractor::Attractor;
pub use brute::min_attractor_brute;
pub use compress::{
    collage_expand, lz77_decode, lz77_parse, macro_decode, rlbwt_build, rlbwt_invert,
    CollageSystem, Directive, Lz77Parse, MacroScheme, Phrase, Rlbwt, Rule, RuleId, Run,
};
pub use error::{Error, Result};
pub use gadgets::{
    build_tc, known_attractor, vertex_cover_to_set_cover, GadgetString, GadgetSymbol,
};
pub use index::{build_index, build_index_with, AttractorIndex, IndexParams, SpaceReport};
pub use induce::{
    attractor_from_collage, attractor_from_lz77, attractor_from_macro, attractor_from_rlbwt,
};
pub use reduce::{
    bidirectional_parse_from_attractor, collage_from_attractor, parse_decode, BidirectionalParse,
    ParsePhrase, PhraseKind,
};
pub use suffix::{succ_distance, SuffixIndex};
pub use text::{Alphabet, Text, SENTINEL};
pub use validate::{
    naive_validate, require_attractor, validate_k_attractor, validate_with_index, CrossingFinder,
    Validation, Witness,
};
