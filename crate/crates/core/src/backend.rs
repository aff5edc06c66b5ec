//! Bilinear-group arithmetic and random-oracle instantiations.
//!
//! The scheme runs on a Type-3 pairing `e: G1 x G2 -> GT`. Source group
//! elements are carried as projective points and encoded in the curve's
//! canonical compressed form; target group elements use the canonical
//! 576-byte `Fp12` encoding. Every decode checks curve and subgroup
//! membership and rejects non-canonical byte strings.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use ark_bls12_381::{g1, Bls12_381, Fr, G1Affine, G1Projective, G2Affine, G2Projective};
use ark_ec::hashing::curve_maps::wb::WBMap;
use ark_ec::hashing::map_to_curve_hasher::MapToCurveBasedHasher;
use ark_ec::hashing::HashToCurve;
use ark_ec::pairing::{Pairing, PairingOutput};
use ark_ec::{CurveGroup, PrimeGroup};
use ark_ff::field_hashers::DefaultFieldHasher;
use ark_ff::{BigInteger, Field, One, PrimeField, Zero};
use ark_serialize::{CanonicalDeserialize, CanonicalSerialize, Compress, Validate};
use rand::{CryptoRng, RngCore};
use sha2::Sha256;
use sha3::digest::{ExtendableOutput, Update, XofReader};
use sha3::Shake256;

use crate::codec::transcript::domain_field;
use crate::error::{CodecError, Error, Result};

/// Compressed G1 encoding length.
pub const G1_LEN: usize = 48;
/// Compressed G2 encoding length.
pub const G2_LEN: usize = 96;
/// Canonical GT encoding length.
pub const GT_LEN: usize = 576;
/// Big-endian scalar encoding length.
pub const SCALAR_LEN: usize = 32;

/// Bit length of the group order.
const ORDER_BITS: usize = 255;

/// A supported pairing-friendly curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CurveProfile {
    #[default]
    Bls12_381,
}

impl CurveProfile {
    pub const fn id(self) -> u8 {
        match self {
            CurveProfile::Bls12_381 => 0x01,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            CurveProfile::Bls12_381 => "bls12-381",
        }
    }

    /// Random-oracle configuration fixed by the profile.
    pub fn hash_config(self) -> HashConfig {
        match self {
            CurveProfile::Bls12_381 => HashConfig::default(),
        }
    }

    pub fn from_id(id: u8) -> Option<Self> {
        match id {
            0x01 => Some(CurveProfile::Bls12_381),
            _ => None,
        }
    }
}

impl fmt::Display for CurveProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CurveProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bls12-381" | "bls12_381" | "bls12381" => Ok(CurveProfile::Bls12_381),
            _ => Err(Error::UnsupportedProfile(s.to_owned())),
        }
    }
}

/// An element of the scalar field `Z_p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Scalar(pub(crate) Fr);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Fr::zero())
    }

    pub fn one() -> Self {
        Scalar(Fr::one())
    }

    pub fn from_u64(v: u64) -> Self {
        Scalar(Fr::from(v))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Reduces a big-endian integer of any length modulo `p`.
    pub fn from_be_bytes_mod_order(bytes: &[u8]) -> Self {
        Scalar(Fr::from_be_bytes_mod_order(bytes))
    }

    /// Uniform scalar in `[1, p-1]`, drawn by reducing 48 random bytes and
    /// resampling on zero.
    pub fn random<R: RngCore + CryptoRng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let mut buf = [0u8; 48];
            rng.fill_bytes(&mut buf);
            let s = Scalar::from_be_bytes_mod_order(&buf);
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn invert(&self) -> Result<Self> {
        self.0.inverse().map(Scalar).ok_or(Error::ZeroInverse)
    }

    pub fn to_bytes(&self) -> [u8; SCALAR_LEN] {
        let mut out = [0u8; SCALAR_LEN];
        out.copy_from_slice(&self.0.into_bigint().to_bytes_be());
        out
    }

    /// Parses a canonical (fully reduced) big-endian encoding.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self, CodecError> {
        if bytes.len() != SCALAR_LEN {
            return Err(CodecError::InvalidScalar);
        }
        let s = Scalar::from_be_bytes_mod_order(bytes);
        if s.to_bytes()[..] != *bytes {
            return Err(CodecError::InvalidScalar);
        }
        Ok(s)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", hex_string(&self.to_bytes()))
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 + rhs.0)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 - rhs.0)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 * rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

pub fn scalar_random<R: RngCore + CryptoRng + ?Sized>(rng: &mut R) -> Scalar {
    Scalar::random(rng)
}

pub fn scalar_invert(x: &Scalar) -> Result<Scalar> {
    x.invert()
}

/// Common surface of the two source groups.
pub trait SourceGroup:
    Copy + Eq + fmt::Debug + Add<Output = Self> + Sub<Output = Self> + Neg<Output = Self>
{
    const ENCODED_LEN: usize;

    fn identity() -> Self;
    fn generator() -> Self;
    fn is_identity(&self) -> bool;
    /// Raw scalar multiplication. Scheme code goes through [`OpCounters::mul`].
    fn mul_scalar(&self, s: &Scalar) -> Self;
    fn to_bytes(&self) -> Vec<u8>;
    fn from_bytes(bytes: &[u8]) -> Result<Self, CodecError>;

    fn random<R: RngCore + CryptoRng + ?Sized>(rng: &mut R) -> Self {
        Self::generator().mul_scalar(&Scalar::random(rng))
    }
}

macro_rules! source_group {
    ($name:ident, $proj:ty, $affine:ty, $len:expr) => {
        #[derive(Clone, Copy, PartialEq, Eq)]
        pub struct $name(pub(crate) $proj);

        impl SourceGroup for $name {
            const ENCODED_LEN: usize = $len;

            fn identity() -> Self {
                $name(<$proj>::zero())
            }

            fn generator() -> Self {
                $name(<$proj>::generator())
            }

            fn is_identity(&self) -> bool {
                self.0.is_zero()
            }

            fn mul_scalar(&self, s: &Scalar) -> Self {
                $name(self.0 * s.0)
            }

            fn to_bytes(&self) -> Vec<u8> {
                let mut out = Vec::with_capacity($len);
                self.0
                    .into_affine()
                    .serialize_compressed(&mut out)
                    .expect("serialization into a Vec cannot fail");
                out
            }

            fn from_bytes(bytes: &[u8]) -> Result<Self, CodecError> {
                if bytes.len() != $len {
                    return Err(CodecError::InvalidGroupElement);
                }
                let p = <$affine>::deserialize_with_mode(bytes, Compress::Yes, Validate::Yes)
                    .map_err(|_| CodecError::InvalidGroupElement)?;
                let p = $name(p.into());
                // Reject encodings that decode but are not the canonical form.
                if p.to_bytes()[..] != *bytes {
                    return Err(CodecError::InvalidGroupElement);
                }
                Ok(p)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({})", stringify!($name), hex_string(&self.to_bytes()))
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, rhs: $name) -> $name {
                $name(self.0 + rhs.0)
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, rhs: $name) -> $name {
                $name(self.0 - rhs.0)
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(-self.0)
            }
        }
    };
}

source_group!(G1Elem, G1Projective, G1Affine, G1_LEN);
source_group!(G2Elem, G2Projective, G2Affine, G2_LEN);

/// Element of the order-`p` subgroup of the target group, written
/// multiplicatively.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct GtElem(pub(crate) PairingOutput<Bls12_381>);

impl GtElem {
    pub fn identity() -> Self {
        GtElem(PairingOutput::zero())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_zero()
    }

    /// `pair(P1, P2)` for the profile generators.
    pub fn generator() -> Self {
        GtElem(PairingOutput::<Bls12_381>::generator())
    }

    pub fn mul(&self, rhs: &GtElem) -> GtElem {
        GtElem(self.0 + rhs.0)
    }

    /// Raw exponentiation. Scheme code goes through [`OpCounters::gt_exp`].
    pub fn pow(&self, s: &Scalar) -> GtElem {
        GtElem(self.0 * s.0)
    }

    pub fn inverse(&self) -> GtElem {
        GtElem(-self.0)
    }

    pub fn random<R: RngCore + CryptoRng + ?Sized>(rng: &mut R) -> Self {
        GtElem::generator().pow(&Scalar::random(rng))
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(GT_LEN);
        self.0
            .serialize_compressed(&mut out)
            .expect("serialization into a Vec cannot fail");
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, CodecError> {
        if bytes.len() != GT_LEN {
            return Err(CodecError::InvalidGroupElement);
        }
        let x = PairingOutput::<Bls12_381>::deserialize_with_mode(bytes, Compress::Yes, Validate::Yes)
            .map_err(|_| CodecError::InvalidGroupElement)?;
        // Subgroup membership: x^p = 1.
        if !x.0.pow(Fr::MODULUS).is_one() {
            return Err(CodecError::InvalidGroupElement);
        }
        let x = GtElem(x);
        if x.to_bytes()[..] != *bytes {
            return Err(CodecError::InvalidGroupElement);
        }
        Ok(x)
    }
}

impl fmt::Debug for GtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bytes = self.to_bytes();
        write!(f, "GtElem({}..)", hex_string(&bytes[..16]))
    }
}

/// Uncounted pairing. Scheme code goes through [`OpCounters::pair`].
pub fn pair(x: &G1Elem, y: &G2Elem) -> GtElem {
    GtElem(Bls12_381::pairing(x.0, y.0))
}

/// Logical operation counts accumulated over a call scope.
///
/// One scheme-level operation counts once regardless of its internal cost.
/// Deriving an identity's public key and hashing to the curve are not
/// counted as scalar multiplications.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct OpCounters {
    pub pairings: u64,
    pub scalar_mults: u64,
    pub gt_exps: u64,
}

impl OpCounters {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn reset(&mut self) {
        *self = Self::default();
    }

    pub fn mul<G: SourceGroup>(&mut self, s: &Scalar, x: &G) -> G {
        self.scalar_mults += 1;
        x.mul_scalar(s)
    }

    pub fn pair(&mut self, x: &G1Elem, y: &G2Elem) -> GtElem {
        self.pairings += 1;
        pair(x, y)
    }

    pub fn gt_exp(&mut self, a: &GtElem, s: &Scalar) -> GtElem {
        self.gt_exps += 1;
        a.pow(s)
    }
}

impl Add for OpCounters {
    type Output = OpCounters;
    fn add(self, rhs: OpCounters) -> OpCounters {
        OpCounters {
            pairings: self.pairings + rhs.pairings,
            scalar_mults: self.scalar_mults + rhs.scalar_mults,
            gt_exps: self.gt_exps + rhs.gt_exps,
        }
    }
}

impl fmt::Display for OpCounters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mul={} exp={} pairings={}",
            self.scalar_mults, self.gt_exps, self.pairings
        )
    }
}

pub const TAG_H1: &[u8] = b"IBPSC-v1-H1";
pub const TAG_H2: &[u8] = b"IBPSC-v1-H2";
pub const TAG_H3: &[u8] = b"IBPSC-v1-H3";
pub const TAG_H4: &[u8] = b"IBPSC-v1-H4";

/// Random-oracle configuration: domain tags, tag length and security level.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HashConfig {
    pub tag_h1: Vec<u8>,
    pub tag_h2: Vec<u8>,
    pub tag_h3: Vec<u8>,
    pub tag_h4: Vec<u8>,
    /// Tag length in bits.
    pub n2: u16,
    /// Security parameter in bits.
    pub k: u16,
}

impl Default for HashConfig {
    fn default() -> Self {
        HashConfig {
            tag_h1: TAG_H1.to_vec(),
            tag_h2: TAG_H2.to_vec(),
            tag_h3: TAG_H3.to_vec(),
            tag_h4: TAG_H4.to_vec(),
            n2: 256,
            k: 128,
        }
    }
}

impl HashConfig {
    pub fn validate(&self) -> Result<(), &'static str> {
        let tags = self.tags();
        if tags.iter().any(|t| t.is_empty()) {
            return Err("empty domain tag");
        }
        for i in 0..tags.len() {
            for j in i + 1..tags.len() {
                if tags[i] == tags[j] {
                    return Err("domain tags are not distinct");
                }
            }
        }
        if self.n2 < 128 || !self.n2.is_multiple_of(8) {
            return Err("tag length must be a multiple of 8 and at least 128 bits");
        }
        if self.k < 128 {
            return Err("security parameter below 128 bits");
        }
        Ok(())
    }

    pub fn tags(&self) -> [&[u8]; 4] {
        [&self.tag_h1, &self.tag_h2, &self.tag_h3, &self.tag_h4]
    }

    /// Tag length in bytes.
    pub fn tag_len(&self) -> usize {
        usize::from(self.n2) / 8
    }

    /// Bytes of XOF output reduced into a scalar: `ceil((log2 p + k) / 8)`.
    pub fn scalar_expand_len(&self) -> usize {
        (ORDER_BITS + usize::from(self.k)).div_ceil(8)
    }
}

/// SHAKE256 over `domain_field(tag) || payload`, truncated to `out_len` bytes.
///
/// Outputs for the same input are prefixes of each other.
pub fn xof_stream(tag: &[u8], payload: &[u8], out_len: usize) -> Vec<u8> {
    let mut xof = Shake256::default();
    xof.update(&domain_field(tag));
    xof.update(payload);
    let mut out = vec![0u8; out_len];
    xof.finalize_xof().read(&mut out);
    out
}

/// `H1`: expand with the XOF, reduce mod `p`, and map 0 to 1.
pub fn hash_to_scalar(cfg: &HashConfig, payload: &[u8]) -> Scalar {
    let wide = xof_stream(&cfg.tag_h1, payload, cfg.scalar_expand_len());
    let s = Scalar::from_be_bytes_mod_order(&wide);
    if s.is_zero() {
        Scalar::one()
    } else {
        s
    }
}

type G1Hasher = MapToCurveBasedHasher<G1Projective, DefaultFieldHasher<Sha256, 128>, WBMap<g1::Config>>;

/// `H4`: `BLS12381G1_XMD:SHA-256_SSWU_RO_` with `tag_h4` as the DST, applied to
/// `domain_field(tag_h4) || payload`.
pub fn hash_to_g1(cfg: &HashConfig, payload: &[u8]) -> G1Elem {
    let hasher = G1Hasher::new(&cfg.tag_h4).expect("domain tag is a valid DST");
    let mut msg = domain_field(&cfg.tag_h4);
    msg.extend_from_slice(payload);
    let p = hasher.hash(&msg).expect("hash to curve is total");
    G1Elem(p.into())
}

pub(crate) fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;
    use std::collections::HashSet;

    fn rng() -> ChaCha20Rng {
        ChaCha20Rng::seed_from_u64(7)
    }

    #[test]
    fn scalar_random_is_nonzero_and_distinct() {
        let mut rng = rng();
        let draws: HashSet<_> = (0..1000).map(|_| Scalar::random(&mut rng).to_bytes()).collect();
        assert_eq!(draws.len(), 1000);
        assert!(!draws.contains(&[0u8; 32]));
    }

    #[test]
    fn scalar_random_seeded_is_deterministic() {
        let a = Scalar::random(&mut ChaCha20Rng::seed_from_u64(99));
        let b = Scalar::random(&mut ChaCha20Rng::seed_from_u64(99));
        assert_eq!(a, b);
    }

    #[test]
    fn invert_edge_cases() {
        assert_eq!(Scalar::one().invert().unwrap(), Scalar::one());
        let minus_one = -Scalar::one();
        assert_eq!(minus_one.invert().unwrap(), minus_one);
        assert_eq!(Scalar::zero().invert(), Err(Error::ZeroInverse));
        let mut rng = rng();
        for _ in 0..20 {
            let x = Scalar::random(&mut rng);
            assert_eq!(x * x.invert().unwrap(), Scalar::one());
        }
    }

    #[test]
    fn scalar_encoding_rejects_unreduced() {
        // p itself
        let p = hex::decode("73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001").unwrap();
        assert_eq!(Scalar::from_bytes(&p), Err(CodecError::InvalidScalar));
        let pm1 = (-Scalar::one()).to_bytes();
        let mut expect = p.clone();
        expect[31] = 0;
        assert_eq!(pm1.to_vec(), expect);
        assert_eq!(Scalar::from_bytes(&pm1).unwrap(), -Scalar::one());
    }

    #[test]
    fn group_mul_laws() {
        let p = G1Elem::generator();
        assert_eq!(p.mul_scalar(&Scalar::one()), p);
        assert_eq!(p.mul_scalar(&Scalar::from_u64(2)), p + p);
        assert_eq!(p + G1Elem::identity(), p);
        let mut rng = rng();
        let (s, t) = (Scalar::random(&mut rng), Scalar::random(&mut rng));
        assert_eq!(p.mul_scalar(&t).mul_scalar(&s), p.mul_scalar(&(s * t)));
        let q = G2Elem::generator();
        assert_eq!(q.mul_scalar(&t).mul_scalar(&s), q.mul_scalar(&(s * t)));
        let (x, y, z) = (G1Elem::random(&mut rng), G1Elem::random(&mut rng), G1Elem::random(&mut rng));
        assert_eq!(x + y, y + x);
        assert_eq!((x + y) + z, x + (y + z));
    }

    #[test]
    fn pairing_bilinear_and_nondegenerate() {
        let (p1, p2) = (G1Elem::generator(), G2Elem::generator());
        let g = pair(&p1, &p2);
        assert!(!g.is_identity());
        assert_eq!(g, GtElem::generator());
        let six = Scalar::from_u64(6);
        assert_eq!(
            pair(&p1.mul_scalar(&Scalar::from_u64(2)), &p2.mul_scalar(&Scalar::from_u64(3))),
            g.pow(&six)
        );
        let mut rng = rng();
        for _ in 0..10 {
            let (a, b) = (Scalar::random(&mut rng), Scalar::random(&mut rng));
            assert_eq!(pair(&p1.mul_scalar(&a), &p2), pair(&p1, &p2.mul_scalar(&a)));
            assert_eq!(pair(&p1.mul_scalar(&a), &p2.mul_scalar(&b)), g.pow(&(a * b)));
        }
    }

    #[test]
    fn gt_laws() {
        let g = GtElem::generator();
        assert_eq!(g.pow(&Scalar::one()), g);
        assert_eq!(g.mul(&GtElem::identity()), g);
        let r = Scalar::random(&mut rng());
        assert!(g.pow(&r).mul(&g.pow(&-r)).is_identity());
        assert_eq!(g.mul(&g.inverse()), GtElem::identity());
    }

    #[test]
    fn encoding_lengths_and_round_trip() {
        let mut rng = rng();
        let a = G1Elem::random(&mut rng);
        let b = G2Elem::random(&mut rng);
        let c = GtElem::random(&mut rng);
        assert_eq!(a.to_bytes().len(), G1_LEN);
        assert_eq!(b.to_bytes().len(), G2_LEN);
        assert_eq!(c.to_bytes().len(), GT_LEN);
        assert_eq!(G1Elem::from_bytes(&a.to_bytes()).unwrap(), a);
        assert_eq!(G2Elem::from_bytes(&b.to_bytes()).unwrap(), b);
        assert_eq!(GtElem::from_bytes(&c.to_bytes()).unwrap(), c);
        let id = G1Elem::identity();
        assert!(id.is_identity());
        assert_eq!(G1Elem::from_bytes(&id.to_bytes()).unwrap(), id);
    }

    #[test]
    fn gt_decode_rejects_non_subgroup_element() {
        use ark_bls12_381::Fq12;
        use ark_ff::UniformRand;
        let mut rng = rng();
        let x = Fq12::rand(&mut rng);
        let mut bytes = Vec::new();
        x.serialize_compressed(&mut bytes).unwrap();
        assert_eq!(bytes.len(), GT_LEN);
        assert_eq!(GtElem::from_bytes(&bytes), Err(CodecError::InvalidGroupElement));
    }

    #[test]
    fn g1_decode_rejects_garbage() {
        assert!(G1Elem::from_bytes(&[0xffu8; G1_LEN]).is_err());
        assert!(G1Elem::from_bytes(&[0u8; G1_LEN - 1]).is_err());
    }

    #[test]
    fn xof_prefix_and_separation() {
        let long = xof_stream(b"t", b"payload", 64);
        let short = xof_stream(b"t", b"payload", 32);
        assert_eq!(&long[..32], &short[..]);
        assert_ne!(xof_stream(b"t1", b"payload", 32), xof_stream(b"t2", b"payload", 32));
        assert_eq!(xof_stream(b"t", b"payload", 17), xof_stream(b"t", b"payload", 17));
    }

    #[test]
    fn hash_to_scalar_determinism_and_separation() {
        let cfg = HashConfig::default();
        assert_eq!(hash_to_scalar(&cfg, b"abc"), hash_to_scalar(&cfg, b"abc"));
        let mut rng = rng();
        for _ in 0..100 {
            let mut a = [0u8; 24];
            rng.fill_bytes(&mut a);
            let mut b = a;
            b[(rng.next_u32() % 24) as usize] ^= 1 << (rng.next_u32() % 8);
            let (ha, hb) = (hash_to_scalar(&cfg, &a), hash_to_scalar(&cfg, &b));
            assert_ne!(ha, hb);
            assert!(!ha.is_zero());
        }
    }

    #[test]
    fn hash_to_g1_is_valid_and_distinct() {
        let cfg = HashConfig::default();
        let a = hash_to_g1(&cfg, b"x");
        assert_eq!(a, hash_to_g1(&cfg, b"x"));
        assert_eq!(G1Elem::from_bytes(&a.to_bytes()).unwrap(), a);
        let mut seen = HashSet::new();
        for i in 0..100u32 {
            let p = hash_to_g1(&cfg, &i.to_be_bytes());
            assert!(!p.is_identity());
            assert!(seen.insert(p.to_bytes()));
        }
    }

    #[test]
    fn hash_config_validation() {
        assert!(HashConfig::default().validate().is_ok());
        let mut cfg = HashConfig::default();
        cfg.tag_h3 = cfg.tag_h1.clone();
        assert!(cfg.validate().is_err());
        let cfg = HashConfig { n2: 64, ..HashConfig::default() };
        assert!(cfg.validate().is_err());
        let mut cfg = HashConfig::default();
        cfg.tag_h4.clear();
        assert!(cfg.validate().is_err());
        assert_eq!(HashConfig::default().scalar_expand_len(), 48);
    }

    #[test]
    fn profile_parsing() {
        assert_eq!("BLS12-381".parse::<CurveProfile>().unwrap(), CurveProfile::Bls12_381);
        assert!(matches!("bn254".parse::<CurveProfile>(), Err(Error::UnsupportedProfile(_))));
    }
}
