//! Finite-field analysis of a reduced tower.

pub mod correspondence;
pub mod count;
pub mod genus;
pub mod places;
pub mod series;
pub mod splitting;
pub mod zeta;

pub use correspondence::{index_point, point_index, reduce_tower, reduce_with_ceiling, Correspondence, Point};
pub use count::{chain_weights, count_places, level_counts, level_places};
pub use places::{places_over, PlaceChain};
pub use genus::{genus_char0, genus_hurwitz, ramification_field_degree};
pub use zeta::{genus_zeta_fit, l_polynomial, weil_bound_holds};
pub use splitting::{is_splitting_closed, lambda_table, splitting_locus, LambdaTable, LevelStats};
