//! Construction, verification and search of ternary linear complementary
//! dual (LCD) codes.
//!
//! A code is LCD when it meets its dual trivially, equivalently when the Gram
//! matrix `G * G^T` of any generator is nonsingular.

pub mod code;
pub mod constructions;
pub mod error;
pub mod gf3;
pub mod printed;
pub mod registry;
pub mod search;
pub mod transforms;
pub mod verify;

pub use code::{
    macwilliams_dual_enumerator, CodeParams, EnumBudget, GramReport, LinearCode, WeightEnumerator,
};
pub use constructions::{recipe, recipes, Recipe, Step};
pub use error::{Error, Result};
pub use gf3::{Trit, TritMatrix, TritVector};
pub use registry::{
    bounds_table, build_registry, diff_against_paper, export_registry, import_registry,
    BoundStatus, BoundsEntry, CodeRecord, DiffCell, DiffStatus, PaperMatch, Provenance,
};
pub use search::{exhaustive_best_lcd, exists_lcd, randomized_search, SearchBudget, SearchResult};
pub use transforms::{juxtapose, puncture, scale_columns, shorten, CoordSet};
