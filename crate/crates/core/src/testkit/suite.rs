//! Executable necessary conditions of the confidentiality and
//! unforgeability games: mauling resistance, key separation and length
//! hiding. The games themselves quantify over unbounded adversaries and are
//! not run.

use std::fmt;

use rand::{CryptoRng, Rng, RngCore};

use super::tamper::{
    random_bit, sigma_field_bits, tamper_sigma, TamperSpec, TamperTarget, Tampered,
};
use crate::backend::pair;
use crate::error::Error;
use crate::scheme::{
    keygen, signcrypt, tp_verify, unsigncrypt, verify_public, MasterSecret, Signcryption, SystemParams,
    UserPrivateKey, Verdict,
};

/// One line of a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: u64,
    pub total: u64,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), passed: 0, total: 0 }
    }

    pub fn record(&mut self, ok: bool) {
        self.total += 1;
        self.passed += u64::from(ok);
    }

    pub fn ok(&self) -> bool {
        self.total > 0 && self.passed == self.total
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} ({}/{})", self.name, self.passed, self.total)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(Check::ok)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GameConfig {
    pub trials: usize,
    /// Trials that sweep every bit of c, R, S and T. The rest sample
    /// `sampled_flips` positions per field.
    pub full_matrix_trials: usize,
    pub sampled_flips: usize,
    /// Plaintext length for the tamper matrix.
    pub matrix_message_len: usize,
}

impl Default for GameConfig {
    fn default() -> Self {
        GameConfig { trials: 100, full_matrix_trials: 1, sampled_flips: 8, matrix_message_len: 32 }
    }
}

/// Outcome of sweeping bit flips over a signcryption.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MatrixOutcome {
    pub total: u64,
    /// Rejected by the decoder before reaching the scheme.
    pub undecodable: u64,
    /// Decoded, then rejected by unsigncryption.
    pub rejected: u64,
    /// Positions whose flip was accepted. Must stay empty.
    pub accepted: Vec<(TamperTarget, usize)>,
}

impl MatrixOutcome {
    pub fn all_invalid(&self) -> bool {
        self.accepted.is_empty() && self.total == self.undecodable + self.rejected
    }
}

/// Flips each listed bit of `sigma` and attempts unsigncryption.
pub fn sweep_flips<R, I>(
    params: &SystemParams,
    receiver: &UserPrivateKey,
    id_a: &[u8],
    id_b: &[u8],
    sigma: &Signcryption,
    positions: I,
    rng: &mut R,
) -> MatrixOutcome
where
    R: RngCore + CryptoRng + ?Sized,
    I: IntoIterator<Item = (TamperTarget, usize)>,
{
    let mut out = MatrixOutcome::default();
    for (target, bit) in positions {
        out.total += 1;
        let tampered = tamper_sigma(sigma, TamperSpec::flip(target, bit), rng).expect("position in range");
        match tampered {
            Tampered::Undecodable(_) => out.undecodable += 1,
            Tampered::Object(s) => match unsigncrypt(params, receiver, id_a, id_b, &s) {
                Err(_) => out.rejected += 1,
                Ok(_) => out.accepted.push((target, bit)),
            },
        }
    }
    out
}

/// Every bit position of c, R, S and T.
pub fn full_matrix(sigma: &Signcryption) -> Vec<(TamperTarget, usize)> {
    TamperTarget::SIGMA
        .iter()
        .flat_map(|&t| (0..sigma_field_bits(sigma, t).unwrap()).map(move |b| (t, b)))
        .collect()
}

fn random_identity<R: RngCore + ?Sized>(rng: &mut R, role: &str) -> Vec<u8> {
    format!("{role}-{:016x}@example.org", rng.next_u64()).into_bytes()
}

fn random_message<R: RngCore + ?Sized>(rng: &mut R, len: usize) -> Vec<u8> {
    let mut m = vec![0u8; len];
    rng.fill_bytes(&mut m);
    m
}

/// Key for `identity` that actually holds `other`'s secret elements.
fn impersonating(identity: &[u8], other: &UserPrivateKey) -> UserPrivateKey {
    UserPrivateKey { identity: identity.to_vec(), d1: other.d1, d2: other.d2 }
}

fn decrypts_invalid(r: Result<(Vec<u8>, crate::scheme::TPProof), Error>) -> bool {
    matches!(r, Err(Error::Invalid(_)))
}

/// Runs the adversarial property suite.
///
/// Errors only if key issuance fails. A violated property shows up as a
/// `FAIL` line in the report.
pub fn run_game_suite<R: RngCore + CryptoRng + ?Sized>(
    params: &SystemParams,
    master: &MasterSecret,
    cfg: GameConfig,
    rng: &mut R,
) -> Result<Report, Error> {
    assert!(cfg.trials >= 1, "trials must be at least 1");
    let mut round_trip = Check::new("(a) round-trip recovers message and proof verifies");
    let mut matrix = Check::new("(b) single-bit tamper of c/R/S/T is invalid");
    let mut replace = Check::new("(b) random replacement of R/S/T is rejected");
    let mut wrong_key = Check::new("(c) wrong receiver key is invalid");
    let mut forward = Check::new("(d) sender key cannot decrypt (pair(R, D2_A) != alpha)");
    let mut swap = Check::new("(e) identity-swapped verification rejects");
    let mut lengths = Check::new("(f) equal-length messages give equal-length ciphertexts");

    for trial in 0..cfg.trials {
        let id_a = random_identity(rng, "sender");
        let id_b = random_identity(rng, "receiver");
        let id_c = random_identity(rng, "other");
        let a = keygen(params, master, &id_a)?;
        let b = keygen(params, master, &id_b)?;
        let c = keygen(params, master, &id_c)?;

        let len = rng.gen_range(0..=256);
        let m = random_message(rng, len);
        let sigma = signcrypt(params, &a, &id_a, &id_b, &m, rng)?;
        let ok = match unsigncrypt(params, &b, &id_a, &id_b, &sigma) {
            Ok((out, proof)) => out == m && tp_verify(params, &id_a, &id_b, &proof) == Verdict::Valid,
            Err(_) => false,
        };
        round_trip.record(ok);

        let m32 = random_message(rng, cfg.matrix_message_len);
        let sigma32 = signcrypt(params, &a, &id_a, &id_b, &m32, rng)?;
        let positions = if trial < cfg.full_matrix_trials {
            full_matrix(&sigma32)
        } else {
            let mut p = Vec::new();
            for t in TamperTarget::SIGMA {
                let bits = sigma_field_bits(&sigma32, t).unwrap();
                p.extend((0..cfg.sampled_flips).map(|_| (t, random_bit(bits, rng))));
            }
            p
        };
        let outcome = sweep_flips(params, &b, &id_a, &id_b, &sigma32, positions, rng);
        for _ in 0..outcome.total - outcome.accepted.len() as u64 {
            matrix.record(true);
        }
        for _ in &outcome.accepted {
            matrix.record(false);
        }

        for t in [TamperTarget::R, TamperTarget::S, TamperTarget::T] {
            let s = tamper_sigma(&sigma32, TamperSpec::replace(t), rng)
                .expect("sigma target")
                .object()
                .expect("replacement is a valid element");
            replace.record(
                verify_public(params, &id_a, &id_b, &s) == Verdict::Invalid
                    && decrypts_invalid(unsigncrypt(params, &b, &id_a, &id_b, &s)),
            );
        }

        let (_, proof) = unsigncrypt(params, &b, &id_a, &id_b, &sigma32)?;
        wrong_key.record(
            decrypts_invalid(unsigncrypt(params, &impersonating(&id_b, &c), &id_a, &id_b, &sigma32))
                && pair(&sigma32.r, &c.d2) != proof.alpha,
        );
        forward.record(
            decrypts_invalid(unsigncrypt(params, &impersonating(&id_b, &a), &id_a, &id_b, &sigma32))
                && pair(&sigma32.r, &a.d2) != proof.alpha,
        );

        swap.record(
            verify_public(params, &id_b, &id_a, &sigma32) == Verdict::Invalid
                && verify_public(params, &id_c, &id_b, &sigma32) == Verdict::Invalid
                && verify_public(params, &id_a, &id_c, &sigma32) == Verdict::Invalid,
        );

        let m0 = random_message(rng, len);
        let m1 = random_message(rng, len);
        let s0 = signcrypt(params, &a, &id_a, &id_b, &m0, rng)?;
        let s1 = signcrypt(params, &a, &id_a, &id_b, &m1, rng)?;
        lengths.record(s0.c.len() == s1.c.len() && s0.c.len() == len + params.tag_len());
    }

    Ok(Report { checks: vec![round_trip, matrix, replace, wrong_key, forward, swap, lengths] })
}
