//! Exact constructions of rational parametric solutions for diagonal quartic
//! equations `Σ αᵢ xᵢ⁴ = 0`, built from congruent-number certificates and
//! rational points on `v² = u³ − n²u`.

pub mod algebra;
pub mod exactnum;
pub mod multipoly;
pub mod json;
pub mod par;
pub mod congruent;
pub mod elliptic;
pub mod surfaces;
pub mod varieties;
pub mod chains;
pub mod verify;
pub mod cli;
