//! Constructive cop strategies: cleaning scripts for trees and the rank
//! family, the two subdivided-binary-tree scripts, pursuit on chordal
//! graphs after first sight, and shadow tracking for `ℓ >= 2`.

mod builder;
mod pursuit;
mod search;
mod shadow;
mod tree;

pub use builder::{Builder, Vibration};
pub use pursuit::{
    chordal_pursuit, pursuit_step, verify_chordal_pursuit, ChordalPursuit, PursuitCheck,
    SeeThenPursue,
};
pub use search::{assign_walks, find_cleaning_script, match_step, SearchResult};
pub use shadow::{ShadowCapture, ShadowStage};
pub use tree::{
    rank_cleaning_script, root_guarded_script, t_ell_scripts, t_family_script,
    tree_one_visibility_script, verify_seeing, RootGuard, TEllScripts,
};

#[cfg(test)]
mod tests;
