//! Exact solver for covering a simple polygon's boundary with the fewest
//! contiguous guards.

pub mod candidates;
pub mod corpus;
pub mod exact;
pub mod oracle;
pub mod parallel;
pub mod paths;
pub mod polygon;
pub mod solver;
pub mod visibility;
