//! Identity-based signcryption with public verifiability and third-party
//! verification, on a Type-3 pairing over BLS12-381.
//!
//! A PKG runs [`setup`] and issues keys with [`keygen`]. A sender
//! [`signcrypt`]s to a receiver's identity; anyone can check the sender's
//! signature on the ciphertext with [`verify_public`]; the receiver
//! [`unsigncrypt`]s and may hand the resulting [`TPProof`] to a third party
//! who checks it with [`tp_verify`].
//!
//! ```
//! use ibpsc::{keygen, setup, signcrypt, unsigncrypt, tp_verify, CurveProfile};
//! use rand::rngs::OsRng;
//!
//! let (params, master) = setup(CurveProfile::Bls12_381, &mut OsRng);
//! let alice = keygen(&params, &master, b"alice@example.com").unwrap();
//! let bob = keygen(&params, &master, b"bob@example.com").unwrap();
//!
//! let sigma = signcrypt(&params, &alice, b"alice@example.com", b"bob@example.com", b"hi", &mut OsRng).unwrap();
//! let (msg, proof) = unsigncrypt(&params, &bob, b"alice@example.com", b"bob@example.com", &sigma).unwrap();
//! assert_eq!(msg, b"hi");
//! assert!(tp_verify(&params, b"alice@example.com", b"bob@example.com", &proof).is_valid());
//! ```

pub mod backend;
pub mod codec;
pub mod error;
pub mod scheme;
pub mod testkit;

pub use backend::{CurveProfile, G1Elem, G2Elem, GtElem, HashConfig, OpCounters, Scalar, SourceGroup};
pub use error::{CodecError, Error, InvalidReason, Result};
pub use scheme::{
    keygen, public_key_g1, public_key_g2, public_key_of, setup, signcrypt, signcrypt_metered,
    tp_verify, tp_verify_with, unsigncrypt, unsigncrypt_metered, verify_public, verify_public_metered,
    MasterSecret, PublicKey, Signcryption, SystemParams, TPProof, TpMode, UserPrivateKey, Verdict,
};

/// Deterministic randomness derived from an arbitrary seed.
///
/// Only for test vectors: a reused seed reuses signcryption nonces.
pub fn seeded_rng(seed: &[u8]) -> rand_chacha::ChaCha20Rng {
    use rand::SeedableRng;
    use sha2::{Digest, Sha256};
    let mut h = Sha256::new();
    h.update(b"IBPSC-v1-seed");
    h.update(seed);
    rand_chacha::ChaCha20Rng::from_seed(h.finalize().into())
}
