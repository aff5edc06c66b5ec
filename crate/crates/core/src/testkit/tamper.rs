//! Controlled mauling of signcryptions and third-party proofs.
//!
//! Bit flips on group elements act on the canonical encoding, so a flipped
//! point may no longer decode. Replacement draws a fresh valid element, so
//! any rejection comes from the scheme rather than the decoder.

use rand::{CryptoRng, Rng, RngCore};
use thiserror::Error;

use crate::backend::{G1Elem, G2Elem, GtElem, SourceGroup};
use crate::error::CodecError;
use crate::scheme::{Signcryption, TPProof};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TamperTarget {
    C,
    R,
    S,
    T,
    Tag,
    Alpha,
    Message,
}

impl TamperTarget {
    pub const SIGMA: [TamperTarget; 4] = [TamperTarget::C, TamperTarget::R, TamperTarget::S, TamperTarget::T];
    pub const PROOF: [TamperTarget; 7] = [
        TamperTarget::C,
        TamperTarget::R,
        TamperTarget::S,
        TamperTarget::T,
        TamperTarget::Tag,
        TamperTarget::Alpha,
        TamperTarget::Message,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TamperTarget::C => "c",
            TamperTarget::R => "R",
            TamperTarget::S => "S",
            TamperTarget::T => "T",
            TamperTarget::Tag => "tag",
            TamperTarget::Alpha => "alpha",
            TamperTarget::Message => "message",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TamperMode {
    /// No change; the control case.
    Identity,
    /// Flip one bit of the encoded field (bit 0 is the MSB of byte 0).
    FlipBit(usize),
    /// Replace with a fresh random value of the same type and length.
    ReplaceRandom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TamperSpec {
    pub target: TamperTarget,
    pub mode: TamperMode,
}

impl TamperSpec {
    pub fn flip(target: TamperTarget, bit: usize) -> Self {
        TamperSpec { target, mode: TamperMode::FlipBit(bit) }
    }

    pub fn replace(target: TamperTarget) -> Self {
        TamperSpec { target, mode: TamperMode::ReplaceRandom }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TamperError {
    #[error("bit {bit} out of range for {target} ({bits} bits)")]
    OutOfRange { target: &'static str, bit: usize, bits: usize },
    #[error("target {0} does not exist on a signcryption")]
    NotApplicable(&'static str),
}

/// Result of mauling: either a well-formed object or bytes the decoder
/// refuses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tampered<T> {
    Object(T),
    Undecodable(CodecError),
}

impl<T> Tampered<T> {
    pub fn object(self) -> Option<T> {
        match self {
            Tampered::Object(t) => Some(t),
            Tampered::Undecodable(_) => None,
        }
    }
}

/// Number of bits in the encoding of `target` within `sigma`.
pub fn sigma_field_bits(sigma: &Signcryption, target: TamperTarget) -> Option<usize> {
    Some(
        8 * match target {
            TamperTarget::C => sigma.c.len(),
            TamperTarget::R | TamperTarget::T => G1Elem::ENCODED_LEN,
            TamperTarget::S => G2Elem::ENCODED_LEN,
            _ => return None,
        },
    )
}

pub fn proof_field_bits(proof: &TPProof, target: TamperTarget) -> usize {
    match target {
        TamperTarget::Tag => 8 * proof.tag.len(),
        TamperTarget::Alpha => 8 * crate::backend::GT_LEN,
        TamperTarget::Message => 8 * proof.message.len(),
        other => sigma_field_bits(&proof.sigma, other).expect("sigma target"),
    }
}

fn check_bit(target: TamperTarget, bit: usize, bits: usize) -> Result<(), TamperError> {
    if bit >= bits {
        return Err(TamperError::OutOfRange { target: target.name(), bit, bits });
    }
    Ok(())
}

fn flip(bytes: &mut [u8], bit: usize) {
    bytes[bit / 8] ^= 0x80 >> (bit % 8);
}

fn different_bytes<R: RngCore + ?Sized>(old: &[u8], rng: &mut R) -> Vec<u8> {
    let mut fresh = vec![0u8; old.len()];
    loop {
        rng.fill_bytes(&mut fresh);
        if fresh != old || old.is_empty() {
            return fresh;
        }
    }
}

fn maul_group<G: SourceGroup, R: RngCore + CryptoRng + ?Sized>(
    x: &G,
    mode: TamperMode,
    rng: &mut R,
) -> Result<G, CodecError> {
    match mode {
        TamperMode::Identity => Ok(*x),
        TamperMode::FlipBit(bit) => {
            let mut bytes = x.to_bytes();
            flip(&mut bytes, bit);
            G::from_bytes(&bytes)
        }
        TamperMode::ReplaceRandom => loop {
            let y = G::random(rng);
            if y != *x {
                return Ok(y);
            }
        },
    }
}

fn maul_bytes<R: RngCore + ?Sized>(b: &mut Vec<u8>, mode: TamperMode, rng: &mut R) {
    match mode {
        TamperMode::Identity => {}
        TamperMode::FlipBit(bit) => flip(b, bit),
        TamperMode::ReplaceRandom => *b = different_bytes(b, rng),
    }
}

/// Applies `spec` to a signcryption.
pub fn tamper_sigma<R: RngCore + CryptoRng + ?Sized>(
    sigma: &Signcryption,
    spec: TamperSpec,
    rng: &mut R,
) -> Result<Tampered<Signcryption>, TamperError> {
    let bits = sigma_field_bits(sigma, spec.target).ok_or(TamperError::NotApplicable(spec.target.name()))?;
    if let TamperMode::FlipBit(bit) = spec.mode {
        check_bit(spec.target, bit, bits)?;
    }
    let mut out = sigma.clone();
    let res = match spec.target {
        TamperTarget::C => {
            maul_bytes(&mut out.c, spec.mode, rng);
            Ok(())
        }
        TamperTarget::R => maul_group(&sigma.r, spec.mode, rng).map(|p| out.r = p),
        TamperTarget::S => maul_group(&sigma.s, spec.mode, rng).map(|p| out.s = p),
        TamperTarget::T => maul_group(&sigma.t, spec.mode, rng).map(|p| out.t = p),
        _ => unreachable!("filtered by sigma_field_bits"),
    };
    Ok(match res {
        Ok(()) => Tampered::Object(out),
        Err(e) => Tampered::Undecodable(e),
    })
}

/// Applies `spec` to a third-party proof.
pub fn tamper_proof<R: RngCore + CryptoRng + ?Sized>(
    proof: &TPProof,
    spec: TamperSpec,
    rng: &mut R,
) -> Result<Tampered<TPProof>, TamperError> {
    let bits = proof_field_bits(proof, spec.target);
    if let TamperMode::FlipBit(bit) = spec.mode {
        check_bit(spec.target, bit, bits)?;
    }
    let mut out = proof.clone();
    match spec.target {
        TamperTarget::Tag => maul_bytes(&mut out.tag, spec.mode, rng),
        TamperTarget::Message => maul_bytes(&mut out.message, spec.mode, rng),
        TamperTarget::Alpha => {
            let alpha = match spec.mode {
                TamperMode::Identity => Ok(proof.alpha),
                TamperMode::FlipBit(bit) => {
                    let mut bytes = proof.alpha.to_bytes();
                    flip(&mut bytes, bit);
                    GtElem::from_bytes(&bytes)
                }
                TamperMode::ReplaceRandom => Ok(loop {
                    let y = GtElem::random(rng);
                    if y != proof.alpha {
                        break y;
                    }
                }),
            };
            match alpha {
                Ok(a) => out.alpha = a,
                Err(e) => return Ok(Tampered::Undecodable(e)),
            }
        }
        _ => match tamper_sigma(&proof.sigma, spec, rng)? {
            Tampered::Object(s) => out.sigma = s,
            Tampered::Undecodable(e) => return Ok(Tampered::Undecodable(e)),
        },
    }
    Ok(Tampered::Object(out))
}

/// A random bit position for `target`.
pub fn random_bit<R: RngCore + ?Sized>(bits: usize, rng: &mut R) -> usize {
    rng.gen_range(0..bits)
}
