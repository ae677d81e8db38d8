//! Finite-level verification library for two families of finitely generated
//! groups that share all their finite quotients: a branch-group family built
//! from iterated wreath products of Alt(5) acting on a rooted 5-ary tree, and
//! a soluble family built from annihilator ideals in the integral group ring
//! of `C2 wr C2 wr C_inf`.
//!
//! Everything here works at "desk scale": trees are truncated at a finite
//! depth, ideal membership is decided through certified finite truncations,
//! and every randomized check takes an explicit seed.

pub mod lambda;
pub mod permkernel;
pub mod report;
pub mod scenario;
pub mod solring;
pub mod treewreath;
