//! Adversarial and statistical harness: tamper matrix, key-separation
//! trials, operation counting and known-answer vectors.

pub mod bench;
pub mod kat;
pub mod suite;
pub mod tamper;

pub use crate::backend::OpCounters;
pub use bench::{bench, BenchReport, SIGNCRYPT_COST, UNSIGNCRYPT_COST, VERIFY_PUBLIC_COST};
pub use kat::{build_kats, generate_kats, verify_kats, KatVerifyReport};
pub use suite::{full_matrix, run_game_suite, sweep_flips, Check, GameConfig, MatrixOutcome, Report};
pub use tamper::{tamper_proof, tamper_sigma, TamperError, TamperMode, TamperSpec, TamperTarget, Tampered};
