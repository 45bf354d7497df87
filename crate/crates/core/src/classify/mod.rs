//! The smoothness classification, torus-fixed points, singular witnesses and
//! the fixed-point verification sweep.

pub mod fixed_points;
pub mod staircase;
pub mod theorem;
pub mod verify;
pub mod witness;

pub use fixed_points::{count_fixed_points, enumerate_fixed_points, enumerate_fixed_points_bounded, MonomialIdealChainPoint};
pub use staircase::{enumerate_staircases, staircases_containing, Staircase};
pub use theorem::{canonicalize, classify, CaseLabel, CheahCase, ClassificationVerdict};
pub use verify::{verify_smoothness, FixedPointRecord, SweepOutcome, SweepReport};
pub use witness::{
    fat_point_witness, nested_fat_point_witness, square_of_maximal_ideal_witness, witness_location, witness_singular,
};
