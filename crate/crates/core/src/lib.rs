//! Kervaire semi-characteristics of triangulated manifolds, the mod-2 index
//! of singular circles of a vector field computed through the Clifford
//! operator `K = tr|A| + Â`, and checks of the counting formula and of
//! cut-and-paste invariance on small triangulations.
//!
//! * [`exactlin`]: exact ranks over GF(2) and Q.
//! * [`simplicial`]: complexes, pairs, Betti numbers, `κ`, cut and glue.
//! * [`clifford`]: exterior algebra, `c(v)`, `ĉ(v)`, `Â`, `K`.
//! * [`circleindex`]: symmetric eigensolver, kernel lines, monodromy, `ind₂`.
//! * [`harness`]: scenario files and theorem verifiers.
//! * [`cli`]: the commands behind the `kervaire` binary.

pub mod circleindex;
pub mod cli;
pub mod clifford;
pub mod exactlin;
pub mod harness;
pub mod simplicial;
