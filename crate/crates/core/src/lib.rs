//! Continued fractions, permutation statistics and pattern classes for
//! refined Catalan and central binomial enumeration.
//!
//! Every enumeration result is computed along at least two independent
//! routes (continued-fraction expansion, grammar-driven class enumeration,
//! weighted path diagrams) so they can be compared exactly.

pub mod config;
pub mod contfrac;
pub mod gamma;
pub mod pathdiag;
pub mod patternclass;
pub mod permstats;
pub mod polyring;
pub mod tables;
pub mod verify;
