//! On-disk object framing: `"IBPS" || version || kind || body`.
//!
//! Bodies are concatenations of fixed-length group encodings and byte
//! strings prefixed with a 4-byte big-endian length.

use crate::backend::{CurveProfile, G1Elem, G2Elem, GtElem, HashConfig, Scalar, SourceGroup, SCALAR_LEN};
use crate::error::CodecError;
use crate::scheme::{MasterSecret, Signcryption, SystemParams, TPProof, UserPrivateKey};

pub const MAGIC: [u8; 4] = *b"IBPS";
pub const VERSION: u8 = 0x01;
pub const HEADER_LEN: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum Kind {
    Params = 0x01,
    Master = 0x02,
    Key = 0x03,
    Sigma = 0x04,
    Proof = 0x05,
    Kat = 0x06,
}

impl Kind {
    pub fn from_byte(b: u8) -> Option<Self> {
        Some(match b {
            0x01 => Kind::Params,
            0x02 => Kind::Master,
            0x03 => Kind::Key,
            0x04 => Kind::Sigma,
            0x05 => Kind::Proof,
            0x06 => Kind::Kat,
            _ => return None,
        })
    }

    /// Conventional file extension.
    pub fn extension(self) -> &'static str {
        match self {
            Kind::Params => "params",
            Kind::Master => "msk",
            Kind::Key => "key",
            Kind::Sigma => "ct",
            Kind::Proof => "proof",
            Kind::Kat => "kat",
        }
    }
}

/// Sequential reader over a body.
pub struct Reader<'a> {
    buf: &'a [u8],
}

impl<'a> Reader<'a> {
    pub fn new(buf: &'a [u8]) -> Self {
        Reader { buf }
    }

    pub fn take(&mut self, n: usize) -> Result<&'a [u8], CodecError> {
        if self.buf.len() < n {
            return Err(CodecError::Truncated);
        }
        let (head, rest) = self.buf.split_at(n);
        self.buf = rest;
        Ok(head)
    }

    pub fn u8(&mut self) -> Result<u8, CodecError> {
        Ok(self.take(1)?[0])
    }

    pub fn u16(&mut self) -> Result<u16, CodecError> {
        Ok(u16::from_be_bytes(self.take(2)?.try_into().unwrap()))
    }

    pub fn u32(&mut self) -> Result<u32, CodecError> {
        Ok(u32::from_be_bytes(self.take(4)?.try_into().unwrap()))
    }

    pub fn bytes(&mut self) -> Result<&'a [u8], CodecError> {
        let len = self.u32()? as usize;
        self.take(len)
    }

    pub fn group<G: SourceGroup>(&mut self) -> Result<G, CodecError> {
        G::from_bytes(self.take(G::ENCODED_LEN)?)
    }

    pub fn gt(&mut self) -> Result<GtElem, CodecError> {
        GtElem::from_bytes(self.take(crate::backend::GT_LEN)?)
    }

    pub fn finish(self) -> Result<(), CodecError> {
        if self.buf.is_empty() {
            Ok(())
        } else {
            Err(CodecError::TrailingBytes)
        }
    }
}

/// Body writer helpers.
pub(crate) fn put_bytes(out: &mut Vec<u8>, b: &[u8]) {
    let len = u32::try_from(b.len()).expect("field exceeds 4 GiB");
    out.extend_from_slice(&len.to_be_bytes());
    out.extend_from_slice(b);
}

/// A value with a framed wire representation.
pub trait WireObject: Sized {
    const KIND: Kind;

    fn encode_body(&self, out: &mut Vec<u8>);
    fn decode_body(r: &mut Reader<'_>) -> Result<Self, CodecError>;
}

pub fn encode<T: WireObject>(obj: &T) -> Vec<u8> {
    let mut out = Vec::with_capacity(256);
    out.extend_from_slice(&MAGIC);
    out.push(VERSION);
    out.push(T::KIND as u8);
    obj.encode_body(&mut out);
    out
}

/// Reads the header and returns the object kind without decoding the body.
pub fn peek_kind(bytes: &[u8]) -> Result<u8, CodecError> {
    let mut r = Reader::new(bytes);
    if r.take(4).map_err(|_| CodecError::BadMagic)? != MAGIC {
        return Err(CodecError::BadMagic);
    }
    let version = r.u8()?;
    if version != VERSION {
        return Err(CodecError::BadVersion(version));
    }
    r.u8()
}

pub fn decode<T: WireObject>(bytes: &[u8]) -> Result<T, CodecError> {
    let found = peek_kind(bytes)?;
    if found != T::KIND as u8 {
        return Err(CodecError::KindMismatch { expected: T::KIND as u8, found });
    }
    let mut r = Reader::new(&bytes[HEADER_LEN..]);
    let obj = T::decode_body(&mut r)?;
    r.finish()?;
    Ok(obj)
}

impl WireObject for SystemParams {
    const KIND: Kind = Kind::Params;

    fn encode_body(&self, out: &mut Vec<u8>) {
        out.push(self.profile.id());
        out.extend_from_slice(&self.p1.to_bytes());
        out.extend_from_slice(&self.p2.to_bytes());
        out.extend_from_slice(&self.ppub1.to_bytes());
        out.extend_from_slice(&self.ppub2.to_bytes());
        out.extend_from_slice(&self.g.to_bytes());
        out.extend_from_slice(&self.hash.n2.to_be_bytes());
        out.extend_from_slice(&self.hash.k.to_be_bytes());
        for tag in self.hash.tags() {
            put_bytes(out, tag);
        }
    }

    fn decode_body(r: &mut Reader<'_>) -> Result<Self, CodecError> {
        let id = r.u8()?;
        let profile = CurveProfile::from_id(id).ok_or(CodecError::UnsupportedProfile(id))?;
        let p1 = r.group()?;
        let p2 = r.group()?;
        let ppub1 = r.group()?;
        let ppub2 = r.group()?;
        let g = r.gt()?;
        let n2 = r.u16()?;
        let k = r.u16()?;
        let hash = HashConfig {
            n2,
            k,
            tag_h1: r.bytes()?.to_vec(),
            tag_h2: r.bytes()?.to_vec(),
            tag_h3: r.bytes()?.to_vec(),
            tag_h4: r.bytes()?.to_vec(),
        };
        let params = SystemParams { profile, p1, p2, ppub1, ppub2, g, hash };
        params.validate().map_err(CodecError::InconsistentParams)?;
        Ok(params)
    }
}

impl WireObject for MasterSecret {
    const KIND: Kind = Kind::Master;

    fn encode_body(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.scalar().to_bytes());
    }

    fn decode_body(r: &mut Reader<'_>) -> Result<Self, CodecError> {
        let s = Scalar::from_bytes(r.take(SCALAR_LEN)?)?;
        MasterSecret::from_scalar(s).map_err(|_| CodecError::InvalidScalar)
    }
}

impl WireObject for UserPrivateKey {
    const KIND: Kind = Kind::Key;

    fn encode_body(&self, out: &mut Vec<u8>) {
        put_bytes(out, &self.identity);
        out.extend_from_slice(&self.d1.to_bytes());
        out.extend_from_slice(&self.d2.to_bytes());
    }

    fn decode_body(r: &mut Reader<'_>) -> Result<Self, CodecError> {
        let identity = r.bytes()?.to_vec();
        if identity.is_empty() {
            return Err(CodecError::Malformed("empty identity"));
        }
        let key = UserPrivateKey { identity, d1: r.group()?, d2: r.group()? };
        if !key.halves_consistent() {
            return Err(CodecError::InconsistentKeyHalves);
        }
        Ok(key)
    }
}

/// Smallest ciphertext body any valid configuration can produce (n2 >= 128).
const MIN_C_LEN: usize = 16;

fn encode_sigma(sigma: &Signcryption, out: &mut Vec<u8>) {
    put_bytes(out, &sigma.c);
    out.extend_from_slice(&sigma.r.to_bytes());
    out.extend_from_slice(&sigma.s.to_bytes());
    out.extend_from_slice(&sigma.t.to_bytes());
}

fn decode_sigma(r: &mut Reader<'_>) -> Result<Signcryption, CodecError> {
    let c = r.bytes()?.to_vec();
    if c.len() < MIN_C_LEN {
        return Err(CodecError::Malformed("ciphertext shorter than the minimum tag"));
    }
    Ok(Signcryption { c, r: r.group::<G1Elem>()?, s: r.group::<G2Elem>()?, t: r.group::<G1Elem>()? })
}

impl WireObject for Signcryption {
    const KIND: Kind = Kind::Sigma;

    fn encode_body(&self, out: &mut Vec<u8>) {
        encode_sigma(self, out);
    }

    fn decode_body(r: &mut Reader<'_>) -> Result<Self, CodecError> {
        decode_sigma(r)
    }
}

impl WireObject for TPProof {
    const KIND: Kind = Kind::Proof;

    fn encode_body(&self, out: &mut Vec<u8>) {
        put_bytes(out, &self.message);
        put_bytes(out, &self.tag);
        out.extend_from_slice(&self.alpha.to_bytes());
        encode_sigma(&self.sigma, out);
    }

    fn decode_body(r: &mut Reader<'_>) -> Result<Self, CodecError> {
        let message = r.bytes()?.to_vec();
        let tag = r.bytes()?.to_vec();
        if tag.len() < MIN_C_LEN {
            return Err(CodecError::Malformed("tag too short"));
        }
        let alpha = r.gt()?;
        let sigma = decode_sigma(r)?;
        Ok(TPProof { message, tag, alpha, sigma })
    }
}

/// Length of an encoded [`SystemParams`] under the default hash configuration.
pub const DEFAULT_PARAMS_LEN: usize = HEADER_LEN
    + 1
    + 2 * crate::backend::G1_LEN
    + 2 * crate::backend::G2_LEN
    + crate::backend::GT_LEN
    + 2
    + 2
    + 4 * (4 + 11);

/// Length of an encoded signcryption of an `m_len`-byte message (n2 = 256).
pub const fn sigma_len(m_len: usize) -> usize {
    HEADER_LEN + 4 + m_len + 32 + 2 * crate::backend::G1_LEN + crate::backend::G2_LEN
}
