//! Setup, key issuance, signcryption, unsigncryption and the two public
//! verification procedures.
//!
//! Slot assignment on the asymmetric pairing: `R`, `T` and `H` live in G1,
//! `S` lives in G2, and the elements that appear on both sides of a pairing
//! (`P`, `P_pub`, `Q_U`, `D_U`) are carried in both groups.

use rand::{CryptoRng, RngCore};
use subtle::ConstantTimeEq;

use crate::backend::{
    hash_to_g1, hash_to_scalar, pair, xof_stream, CurveProfile, G1Elem, G2Elem, GtElem,
    HashConfig, OpCounters, Scalar, SourceGroup,
};
use crate::codec::transcript::Transcript;
use crate::error::{Error, InvalidReason, Result};

/// Public system parameters published by the PKG.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemParams {
    pub profile: CurveProfile,
    pub p1: G1Elem,
    pub p2: G2Elem,
    pub ppub1: G1Elem,
    pub ppub2: G2Elem,
    /// `pair(P1, P2)`
    pub g: GtElem,
    pub hash: HashConfig,
}

/// The PKG's master scalar `s`.
#[derive(Clone, PartialEq, Eq)]
pub struct MasterSecret {
    s: Scalar,
}

impl std::fmt::Debug for MasterSecret {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("MasterSecret(..)")
    }
}

impl MasterSecret {
    pub fn from_scalar(s: Scalar) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(MasterSecret { s })
    }

    pub fn random<R: RngCore + CryptoRng + ?Sized>(rng: &mut R) -> Self {
        MasterSecret { s: Scalar::random(rng) }
    }

    pub fn scalar(&self) -> &Scalar {
        &self.s
    }
}

/// A user's private key `D_U = (H1(ID) + s)^-1 P`, carried in both groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UserPrivateKey {
    pub identity: Vec<u8>,
    pub d1: G1Elem,
    pub d2: G2Elem,
}

impl UserPrivateKey {
    /// `pair(D1, P2) == pair(P1, D2)`
    pub fn halves_consistent(&self) -> bool {
        pair(&self.d1, &G2Elem::generator()) == pair(&G1Elem::generator(), &self.d2)
    }

    /// Checks that the key was issued under `params`.
    pub fn matches_params(&self, params: &SystemParams) -> bool {
        let Ok(q2) = public_key_g2(params, &self.identity) else {
            return false;
        };
        self.halves_consistent() && pair(&self.d1, &q2) == params.g
    }
}

/// The signcrypted text `(c, R, S, T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signcryption {
    pub c: Vec<u8>,
    pub r: G1Elem,
    pub s: G2Elem,
    pub t: G1Elem,
}

/// The bundle `(m', tag', alpha', sigma)` a receiver hands to a third party.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPProof {
    pub message: Vec<u8>,
    pub tag: Vec<u8>,
    pub alpha: GtElem,
    pub sigma: Signcryption,
}

/// Outcome of a public check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Valid,
    Invalid,
}

impl Verdict {
    pub fn is_valid(self) -> bool {
        self == Verdict::Valid
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Valid
        } else {
            Verdict::Invalid
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Valid => "valid",
            Verdict::Invalid => "invalid",
        })
    }
}

/// Which checks third-party verification performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TpMode {
    /// Tag checks, the carried-message check, and the public signature check.
    #[default]
    Strict,
    /// Only the two tag equalities.
    Relaxed,
}

impl SystemParams {
    /// Derives the public parameters for a given master secret.
    pub fn derive(profile: CurveProfile, master: &MasterSecret) -> Self {
        let (p1, p2) = (G1Elem::generator(), G2Elem::generator());
        SystemParams {
            profile,
            p1,
            p2,
            ppub1: p1.mul_scalar(&master.s),
            ppub2: p2.mul_scalar(&master.s),
            g: pair(&p1, &p2),
            hash: profile.hash_config(),
        }
    }

    /// Structural checks; used when parameters come from untrusted bytes.
    pub fn validate(&self) -> Result<(), &'static str> {
        if self.p1 != G1Elem::generator() || self.p2 != G2Elem::generator() {
            return Err("generators differ from the curve profile");
        }
        if self.g.is_identity() || self.g != pair(&self.p1, &self.p2) {
            return Err("g is not pair(P1, P2)");
        }
        if self.ppub1.is_identity() || pair(&self.ppub1, &self.p2) != pair(&self.p1, &self.ppub2) {
            return Err("master public key halves disagree");
        }
        self.hash.validate()?;
        if self.hash != self.profile.hash_config() {
            return Err("hash configuration differs from the curve profile");
        }
        Ok(())
    }

    pub fn tag_len(&self) -> usize {
        self.hash.tag_len()
    }
}

pub fn setup<R: RngCore + CryptoRng + ?Sized>(
    profile: CurveProfile,
    rng: &mut R,
) -> (SystemParams, MasterSecret) {
    let master = MasterSecret::random(rng);
    (SystemParams::derive(profile, &master), master)
}

/// Same as [`setup`] but takes the profile by name.
pub fn setup_named<R: RngCore + CryptoRng + ?Sized>(
    profile: &str,
    rng: &mut R,
) -> Result<(SystemParams, MasterSecret)> {
    Ok(setup(profile.parse()?, rng))
}

fn h1(params: &SystemParams, identity: &[u8]) -> Result<Scalar> {
    if identity.is_empty() {
        return Err(Error::EmptyIdentity);
    }
    Ok(hash_to_scalar(&params.hash, Transcript::new().identity(identity).as_bytes()))
}

/// `Q_U = H1(ID) P1 + P_pub1`
pub fn public_key_g1(params: &SystemParams, identity: &[u8]) -> Result<G1Elem> {
    Ok(params.p1.mul_scalar(&h1(params, identity)?) + params.ppub1)
}

/// `Q_U = H1(ID) P2 + P_pub2`
pub fn public_key_g2(params: &SystemParams, identity: &[u8]) -> Result<G2Elem> {
    Ok(params.p2.mul_scalar(&h1(params, identity)?) + params.ppub2)
}

/// Public key on one side of the pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PublicKey {
    G1(G1Elem),
    G2(G2Elem),
}

/// Public key of `identity` in G1 (`side == 1`) or G2 (`side == 2`).
pub fn public_key_of(params: &SystemParams, identity: &[u8], side: u8) -> Result<PublicKey> {
    match side {
        1 => public_key_g1(params, identity).map(PublicKey::G1),
        2 => public_key_g2(params, identity).map(PublicKey::G2),
        _ => panic!("pairing side must be 1 or 2, got {side}"),
    }
}

pub fn keygen(params: &SystemParams, master: &MasterSecret, identity: &[u8]) -> Result<UserPrivateKey> {
    let exponent = (h1(params, identity)? + master.s)
        .invert()
        .map_err(|_| Error::DegenerateKey)?;
    Ok(UserPrivateKey {
        identity: identity.to_vec(),
        d1: params.p1.mul_scalar(&exponent),
        d2: params.p2.mul_scalar(&exponent),
    })
}

fn tag_h2(
    params: &SystemParams,
    m: &[u8],
    alpha: &GtElem,
    r: &G1Elem,
    s: &G2Elem,
    id_a: &[u8],
    id_b: &[u8],
) -> Vec<u8> {
    let t = Transcript::new()
        .message(m)
        .gt(alpha)
        .g1(r)
        .g2(s)
        .identity(id_a)
        .identity(id_b);
    xof_stream(&params.hash.tag_h2, t.as_bytes(), params.tag_len())
}

fn mask_h3(params: &SystemParams, alpha: &GtElem, r: &G1Elem, s: &G2Elem, len: usize) -> Vec<u8> {
    let t = Transcript::new().gt(alpha).g1(r).g2(s);
    xof_stream(&params.hash.tag_h3, t.as_bytes(), len)
}

fn point_h4(params: &SystemParams, c: &[u8], r: &G1Elem, s: &G2Elem, id_a: &[u8], id_b: &[u8]) -> G1Elem {
    let t = Transcript::new()
        .ciphertext(c)
        .g1(r)
        .g2(s)
        .identity(id_a)
        .identity(id_b);
    hash_to_g1(&params.hash, t.as_bytes())
}

fn xor_in_place(buf: &mut [u8], mask: &[u8]) {
    debug_assert_eq!(buf.len(), mask.len());
    buf.iter_mut().zip(mask).for_each(|(b, m)| *b ^= m);
}

fn check_pair_of_ids(id_a: &[u8], id_b: &[u8]) -> Result<()> {
    if id_a.is_empty() || id_b.is_empty() {
        return Err(Error::EmptyIdentity);
    }
    if id_a == id_b {
        return Err(Error::SelfSigncrypt);
    }
    Ok(())
}

/// Signcrypts `message` from `id_a` to `id_b`.
///
/// The nonce `r` is the first scalar drawn from `rng`.
pub fn signcrypt<R: RngCore + CryptoRng + ?Sized>(
    params: &SystemParams,
    sender_key: &UserPrivateKey,
    id_a: &[u8],
    id_b: &[u8],
    message: &[u8],
    rng: &mut R,
) -> Result<Signcryption> {
    signcrypt_metered(params, sender_key, id_a, id_b, message, rng, &mut OpCounters::new())
}

pub fn signcrypt_metered<R: RngCore + CryptoRng + ?Sized>(
    params: &SystemParams,
    sender_key: &UserPrivateKey,
    id_a: &[u8],
    id_b: &[u8],
    message: &[u8],
    rng: &mut R,
    ops: &mut OpCounters,
) -> Result<Signcryption> {
    check_pair_of_ids(id_a, id_b)?;
    if sender_key.identity != id_a {
        return Err(Error::KeyIdentityMismatch);
    }
    let qb1 = public_key_g1(params, id_b)?;
    let qa2 = public_key_g2(params, id_a)?;

    let r = Scalar::random(rng);
    let r_inv = r.invert()?;
    let alpha = ops.gt_exp(&params.g, &r_inv);
    let big_r = ops.mul(&r_inv, &qb1);
    let big_s = ops.mul(&r, &qa2);

    let gamma = tag_h2(params, message, &alpha, &big_r, &big_s, id_a, id_b);
    let mut c = Vec::with_capacity(message.len() + gamma.len());
    c.extend_from_slice(message);
    c.extend_from_slice(&gamma);
    let mask = mask_h3(params, &alpha, &big_r, &big_s, c.len());
    xor_in_place(&mut c, &mask);

    let h = point_h4(params, &c, &big_r, &big_s, id_a, id_b);
    let t = ops.mul(&r, &h) + sender_key.d1;

    Ok(Signcryption { c, r: big_r, s: big_s, t })
}

/// `e(T, Q_A) == e(H', S) * g` with `H' = H4(c, R, S, ID_A, ID_B)`.
fn signature_holds(
    params: &SystemParams,
    qa2: &G2Elem,
    id_a: &[u8],
    id_b: &[u8],
    sigma: &Signcryption,
    ops: &mut OpCounters,
) -> bool {
    let h = point_h4(params, &sigma.c, &sigma.r, &sigma.s, id_a, id_b);
    let lhs = ops.pair(&sigma.t, qa2);
    let rhs = ops.pair(&h, &sigma.s).mul(&params.g);
    lhs == rhs
}

/// Recovers the message and the third-party proof, or rejects.
pub fn unsigncrypt(
    params: &SystemParams,
    receiver_key: &UserPrivateKey,
    id_a: &[u8],
    id_b: &[u8],
    sigma: &Signcryption,
) -> Result<(Vec<u8>, TPProof)> {
    unsigncrypt_metered(params, receiver_key, id_a, id_b, sigma, &mut OpCounters::new())
}

pub fn unsigncrypt_metered(
    params: &SystemParams,
    receiver_key: &UserPrivateKey,
    id_a: &[u8],
    id_b: &[u8],
    sigma: &Signcryption,
    ops: &mut OpCounters,
) -> Result<(Vec<u8>, TPProof)> {
    check_pair_of_ids(id_a, id_b)?;
    if receiver_key.identity != id_b {
        return Err(Error::KeyIdentityMismatch);
    }
    let tag_len = params.tag_len();
    let qa2 = public_key_g2(params, id_a)?;

    if !signature_holds(params, &qa2, id_a, id_b, sigma, ops) {
        return Err(Error::Invalid(InvalidReason::SignatureCheck));
    }
    if sigma.c.len() < tag_len {
        return Err(Error::Invalid(InvalidReason::TagCheck));
    }

    let alpha = ops.pair(&sigma.r, &receiver_key.d2);
    let mut plain = sigma.c.clone();
    let mask = mask_h3(params, &alpha, &sigma.r, &sigma.s, plain.len());
    xor_in_place(&mut plain, &mask);
    let tag = plain.split_off(plain.len() - tag_len);
    let expected = tag_h2(params, &plain, &alpha, &sigma.r, &sigma.s, id_a, id_b);
    if !bool::from(expected.ct_eq(&tag)) {
        return Err(Error::Invalid(InvalidReason::TagCheck));
    }

    let proof = TPProof {
        message: plain.clone(),
        tag,
        alpha,
        sigma: sigma.clone(),
    };
    Ok((plain, proof))
}

/// Checks the sender's signature `(R, S, T)` on `c` from public data only.
pub fn verify_public(params: &SystemParams, id_a: &[u8], id_b: &[u8], sigma: &Signcryption) -> Verdict {
    verify_public_metered(params, id_a, id_b, sigma, &mut OpCounters::new())
}

pub fn verify_public_metered(
    params: &SystemParams,
    id_a: &[u8],
    id_b: &[u8],
    sigma: &Signcryption,
    ops: &mut OpCounters,
) -> Verdict {
    if check_pair_of_ids(id_a, id_b).is_err() {
        return Verdict::Invalid;
    }
    let Ok(qa2) = public_key_g2(params, id_a) else {
        return Verdict::Invalid;
    };
    Verdict::from_bool(signature_holds(params, &qa2, id_a, id_b, sigma, ops))
}

/// Third-party verification in [`TpMode::Strict`].
pub fn tp_verify(params: &SystemParams, id_a: &[u8], id_b: &[u8], proof: &TPProof) -> Verdict {
    tp_verify_with(params, id_a, id_b, proof, TpMode::Strict)
}

pub fn tp_verify_with(
    params: &SystemParams,
    id_a: &[u8],
    id_b: &[u8],
    proof: &TPProof,
    mode: TpMode,
) -> Verdict {
    let sigma = &proof.sigma;
    let tag_len = params.tag_len();
    if check_pair_of_ids(id_a, id_b).is_err() || sigma.c.len() < tag_len || proof.tag.len() != tag_len {
        return Verdict::Invalid;
    }

    let mut plain = sigma.c.clone();
    let mask = mask_h3(params, &proof.alpha, &sigma.r, &sigma.s, plain.len());
    xor_in_place(&mut plain, &mask);
    let tag = plain.split_off(plain.len() - tag_len);
    let expected = tag_h2(params, &plain, &proof.alpha, &sigma.r, &sigma.s, id_a, id_b);
    let tags_ok = expected.ct_eq(&tag) & tag.ct_eq(&proof.tag);
    if !bool::from(tags_ok) {
        return Verdict::Invalid;
    }

    match mode {
        TpMode::Relaxed => Verdict::Valid,
        TpMode::Strict => {
            if !bool::from(plain.ct_eq(&proof.message)) {
                return Verdict::Invalid;
            }
            verify_public(params, id_a, id_b, sigma)
        }
    }
}
