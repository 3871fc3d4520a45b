//! Janowski-class geometry, the inclusion predicates, and sampled verification.

pub mod grid;
pub mod membership;
pub mod region;
pub mod scan;
pub mod theorems;

pub use grid::{DiskGrid, GridSpec};
pub use membership::{check_close_to_convex, membership_of, numeric_membership, CloseToConvexReport, MembershipReport};
pub use region::{mobius_target, target_region, JanowskiPair, TargetRegion};
pub use scan::{read_region_csv, scan_region, write_region_csv, AlphaRange, RegionRecord, CSV_HEADER};
pub use theorems::{check_theorem1, check_theorem2, check_theorems, solve_alpha0, Verdict, CRITICAL_B};
