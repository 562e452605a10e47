//! Seed catalog, clone-extension growth, and the decide/construct pair.

mod decide;
mod grow;
mod seeds;

pub use decide::{construct, decide, Clause, Construction, GrowthPlan, Verdict};
pub use grow::{clone_vertex, grow};
pub use seeds::{seed, seed_table, SeedId, SEED_FILES};
