//! Hash-input serialization.
//!
//! Every field is framed as `type-tag (1 byte) || length (4 bytes, BE) || payload`,
//! which makes the encoding of a field sequence injective.

use crate::backend::{G1Elem, G2Elem, GtElem, SourceGroup};

/// Type tag of a transcript field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum FieldTag {
    Domain = 0x00,
    Message = 0x01,
    Identity = 0x02,
    Ciphertext = 0x03,
    G1 = 0x10,
    G2 = 0x11,
    Gt = 0x12,
}

/// An ordered sequence of tagged fields.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Transcript {
    bytes: Vec<u8>,
}

impl Transcript {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn field(mut self, tag: FieldTag, payload: &[u8]) -> Self {
        push_field(&mut self.bytes, tag, payload);
        self
    }

    pub fn message(self, m: &[u8]) -> Self {
        self.field(FieldTag::Message, m)
    }

    pub fn identity(self, id: &[u8]) -> Self {
        self.field(FieldTag::Identity, id)
    }

    pub fn ciphertext(self, c: &[u8]) -> Self {
        self.field(FieldTag::Ciphertext, c)
    }

    pub fn g1(self, p: &G1Elem) -> Self {
        self.field(FieldTag::G1, &p.to_bytes())
    }

    pub fn g2(self, p: &G2Elem) -> Self {
        self.field(FieldTag::G2, &p.to_bytes())
    }

    pub fn gt(self, x: &GtElem) -> Self {
        self.field(FieldTag::Gt, &x.to_bytes())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }
}

/// Encodes an ordered list of tagged values.
pub fn encode_transcript<'a, I>(fields: I) -> Vec<u8>
where
    I: IntoIterator<Item = (FieldTag, &'a [u8])>,
{
    let mut out = Vec::new();
    for (tag, payload) in fields {
        push_field(&mut out, tag, payload);
    }
    out
}

/// The framed domain-separation field that opens every oracle input.
pub fn domain_field(tag: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(5 + tag.len());
    push_field(&mut out, FieldTag::Domain, tag);
    out
}

fn push_field(out: &mut Vec<u8>, tag: FieldTag, payload: &[u8]) {
    let len = u32::try_from(payload.len()).expect("transcript field exceeds 4 GiB");
    out.push(tag as u8);
    out.extend_from_slice(&len.to_be_bytes());
    out.extend_from_slice(payload);
}
