//! Pattern complexity of the Robinson tiling made of one infinite-order
//! supertile.
//!
//! Two independent routes to the number of distinct n×n blocks:
//!
//! * [`enumerator`] builds supertiles tile by tile ([`supertile`]) from the
//!   decorated prototiles ([`tileset`]) and counts distinct windows;
//! * [`complexity`] evaluates the recurrences and closed forms exactly.
//!
//! [`cli`] wires both into the `robinson` binary, and [`render`] draws grids.

pub mod cli;
pub mod complexity;
pub mod enumerator;
pub mod error;
pub mod render;
pub mod supertile;
pub mod tileset;

pub use complexity::{
    closed_form_a, coeff_a, coeff_b, decomposition_trace, floor_log2, paperfolding_p, recurrence_a, recurrence_b,
    vacant_places, DecompositionTable, DecompositionTrace, FirstStep, RecurrenceTable, VacantShape,
};
pub use enumerator::{
    canonical_encode, count_stabilized, distinct_patterns, load_pattern_set, restricted_count, save_pattern_set,
    CornerPos, CountReport, Oracle, Pattern, PatternSet,
};
pub use error::{BuildError, CacheError, DomainError, EnumError, GridError, RenderError, TableError};
pub use render::{parse_ascii, render_ascii, render_svg, RenderStyle};
pub use supertile::{build_supertile, solve_cross_cell, validate, Facing, SupertileSpec, TileGrid, ValidationReport};
pub use tileset::{
    all_oriented_tiles, compatible, edge_label, is_bumpy_corner, Adjacency, EdgeLabel, OrientedTile, Pose, Prototile,
    Side,
};
