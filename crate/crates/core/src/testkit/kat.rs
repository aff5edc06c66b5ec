//! Known-answer vectors fully determined by a seed.
//!
//! File layout (kind `0x06`): `seed (lp) || count (u32 BE) || vector (lp) *`
//! where each vector is `params digest (32) || id_a (lp) || id_b (lp) ||
//! message (lp) || sigma object (lp) || proof object (lp)` and `lp` means a
//! 4-byte big-endian length prefix.

use std::fs;
use std::io;
use std::path::Path;

use rand::RngCore;
use sha2::{Digest, Sha256};

use crate::backend::CurveProfile;
use crate::codec::wire::{encode, put_bytes, Kind, Reader, HEADER_LEN, MAGIC, VERSION};
use crate::scheme::{keygen, setup, signcrypt, unsigncrypt};
use crate::seeded_rng;

/// Message lengths of the generated vectors.
pub const KAT_MESSAGE_LENS: [usize; 8] = [0, 1, 15, 16, 31, 32, 33, 100];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KatFile {
    pub bytes: Vec<u8>,
    /// `(offset, len)` of each vector's payload inside `bytes`.
    pub spans: Vec<(usize, usize)>,
}

/// SHA-256 of an encoded object; used as the parameter digest.
pub fn digest(bytes: &[u8]) -> [u8; 32] {
    Sha256::digest(bytes).into()
}

pub fn build_kats(seed: &[u8]) -> KatFile {
    let mut rng = seeded_rng(seed);
    let (params, master) = setup(CurveProfile::Bls12_381, &mut rng);
    let params_digest = digest(&encode(&params));

    let mut bytes = MAGIC.to_vec();
    bytes.extend_from_slice(&[VERSION, Kind::Kat as u8]);
    put_bytes(&mut bytes, seed);
    bytes.extend_from_slice(&(KAT_MESSAGE_LENS.len() as u32).to_be_bytes());

    let mut spans = Vec::with_capacity(KAT_MESSAGE_LENS.len());
    for (i, &len) in KAT_MESSAGE_LENS.iter().enumerate() {
        let id_a = format!("alice-{i}@example.com").into_bytes();
        let id_b = format!("bob-{i}@example.com").into_bytes();
        let a = keygen(&params, &master, &id_a).expect("fixed identities are not degenerate");
        let b = keygen(&params, &master, &id_b).expect("fixed identities are not degenerate");
        let mut m = vec![0u8; len];
        rng.fill_bytes(&mut m);
        let sigma = signcrypt(&params, &a, &id_a, &id_b, &m, &mut rng).expect("valid inputs");
        let (_, proof) = unsigncrypt(&params, &b, &id_a, &id_b, &sigma).expect("honest signcryption");

        let mut v = params_digest.to_vec();
        put_bytes(&mut v, &id_a);
        put_bytes(&mut v, &id_b);
        put_bytes(&mut v, &m);
        put_bytes(&mut v, &encode(&sigma));
        put_bytes(&mut v, &encode(&proof));

        bytes.extend_from_slice(&(v.len() as u32).to_be_bytes());
        spans.push((bytes.len(), v.len()));
        bytes.extend_from_slice(&v);
    }
    KatFile { bytes, spans }
}

/// Writes the vectors for `seed` to `path` and returns how many were written.
pub fn generate_kats(seed: &[u8], path: &Path) -> io::Result<usize> {
    let kat = build_kats(seed);
    fs::write(path, &kat.bytes)?;
    Ok(kat.spans.len())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KatVerifyReport {
    pub vectors: usize,
    /// Header, seed or count differ from what the seed produces.
    pub header_ok: bool,
    /// Indices of vectors that differ from the re-derived ones.
    pub failures: Vec<usize>,
}

impl KatVerifyReport {
    pub fn passed(&self) -> bool {
        self.header_ok && self.failures.is_empty()
    }
}

/// Re-derives the vectors for `seed` and compares `actual` byte for byte.
pub fn verify_kats(seed: &[u8], actual: &[u8]) -> KatVerifyReport {
    let expected = build_kats(seed);
    let header_end = expected.spans[0].0 - 4;
    let mut header_ok = actual.len() >= header_end && actual[..header_end] == expected.bytes[..header_end];
    if actual.len() != expected.bytes.len() {
        header_ok = false;
    }
    // The stored seed must also parse back out.
    if actual.len() > HEADER_LEN {
        let mut r = Reader::new(&actual[HEADER_LEN..]);
        header_ok &= r.bytes().map(|s| s == seed).unwrap_or(false);
    }

    let failures = expected
        .spans
        .iter()
        .enumerate()
        .filter(|(_, &(off, len))| {
            let region = off - 4..off + len;
            actual.get(region.clone()) != Some(&expected.bytes[region])
        })
        .map(|(i, _)| i)
        .collect();

    KatVerifyReport { vectors: expected.spans.len(), header_ok, failures }
}
