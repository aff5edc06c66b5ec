//! Canonical byte encodings: hash transcripts and framed wire objects.

pub mod transcript;
pub mod wire;

pub use transcript::{encode_transcript, FieldTag, Transcript};
pub use wire::{decode, encode, peek_kind, Kind, WireObject};
