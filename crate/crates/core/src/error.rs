use std::fmt;

use thiserror::Error;

/// Why a signcryption was rejected.
///
/// The distinction is kept for tests. `Display` is identical for both so
/// that user-facing surfaces cannot leak which check failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvalidReason {
    /// `e(T, Q_A) != e(H', S) * g`
    SignatureCheck,
    /// The recomputed tag did not match the unmasked one.
    TagCheck,
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid")
    }
}

/// Errors produced by the wire codec.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("bad magic bytes")]
    BadMagic,
    #[error("unsupported version {0:#04x}")]
    BadVersion(u8),
    #[error("object kind mismatch: expected {expected:#04x}, found {found:#04x}")]
    KindMismatch { expected: u8, found: u8 },
    #[error("unexpected end of input")]
    Truncated,
    #[error("trailing bytes after object")]
    TrailingBytes,
    #[error("invalid group element")]
    InvalidGroupElement,
    #[error("invalid scalar")]
    InvalidScalar,
    #[error("private key halves are inconsistent")]
    InconsistentKeyHalves,
    #[error("unsupported curve profile {0:#04x}")]
    UnsupportedProfile(u8),
    #[error("inconsistent system parameters: {0}")]
    InconsistentParams(&'static str),
    #[error("malformed field: {0}")]
    Malformed(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("attempted to invert zero")]
    ZeroInverse,
    #[error("unsupported curve profile `{0}`")]
    UnsupportedProfile(String),
    #[error("identity must not be empty")]
    EmptyIdentity,
    #[error("identity hash collides with the master secret; key cannot be issued")]
    DegenerateKey,
    #[error("self-signcryption not permitted")]
    SelfSigncrypt,
    #[error("private key identity does not match the stated identity")]
    KeyIdentityMismatch,
    #[error("{0}")]
    Invalid(InvalidReason),
    #[error(transparent)]
    Codec(#[from] CodecError),
}

impl Error {
    pub fn is_invalid(&self) -> bool {
        matches!(self, Error::Invalid(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
