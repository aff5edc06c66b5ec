//! Operation-count benchmark against the published cost table.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{CryptoRng, RngCore};

use crate::backend::OpCounters;
use crate::error::Error;
use crate::scheme::{
    keygen, signcrypt_metered, unsigncrypt_metered, verify_public_metered, MasterSecret, SystemParams,
};

/// Expected logical costs of one signcryption.
pub const SIGNCRYPT_COST: OpCounters = OpCounters { pairings: 0, scalar_mults: 3, gt_exps: 1 };
/// Expected logical costs of one unsigncryption.
pub const UNSIGNCRYPT_COST: OpCounters = OpCounters { pairings: 3, scalar_mults: 0, gt_exps: 0 };
/// Expected logical costs of one public signature check.
pub const VERIFY_PUBLIC_COST: OpCounters = OpCounters { pairings: 2, scalar_mults: 0, gt_exps: 0 };

/// Published costs of the earlier public-verifiable construction, for display only.
pub const BASELINE_SIGNCRYPT_COST: OpCounters = OpCounters { pairings: 1, scalar_mults: 2, gt_exps: 1 };
pub const BASELINE_UNSIGNCRYPT_COST: OpCounters = OpCounters { pairings: 4, scalar_mults: 0, gt_exps: 0 };

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpRow {
    pub name: &'static str,
    /// Counts of the first call.
    pub counts: OpCounters,
    pub expected: OpCounters,
    /// Every call produced the same counts.
    pub stable: bool,
    pub median: Duration,
}

impl OpRow {
    pub fn matches(&self) -> bool {
        self.stable && self.counts == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub iterations: usize,
    pub rows: Vec<OpRow>,
}

impl BenchReport {
    pub fn matches_table(&self) -> bool {
        self.rows.iter().all(OpRow::matches)
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "iterations: {}", self.iterations)?;
        writeln!(f, "{:<14} {:>4} {:>4} {:>9} {:>12}  status", "operation", "mul", "exp", "pairings", "median")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<14} {:>4} {:>4} {:>9} {:>12?}  {}",
                r.name,
                r.counts.scalar_mults,
                r.counts.gt_exps,
                r.counts.pairings,
                r.median,
                if r.matches() { "ok".to_string() } else { format!("MISMATCH (expected {})", r.expected) }
            )?;
        }
        writeln!(
            f,
            "baseline scheme: signcrypt {BASELINE_SIGNCRYPT_COST}; unsigncrypt {BASELINE_UNSIGNCRYPT_COST}"
        )
    }
}

fn median(mut v: Vec<Duration>) -> Duration {
    v.sort();
    v[v.len() / 2]
}

struct Acc {
    first: Option<OpCounters>,
    stable: bool,
    times: Vec<Duration>,
}

impl Acc {
    fn new(n: usize) -> Self {
        Acc { first: None, stable: true, times: Vec::with_capacity(n) }
    }

    fn push(&mut self, ops: OpCounters, t: Duration) {
        match self.first {
            None => self.first = Some(ops),
            Some(f) => self.stable &= f == ops,
        }
        self.times.push(t);
    }

    fn row(self, name: &'static str, expected: OpCounters) -> OpRow {
        OpRow { name, counts: self.first.unwrap_or_default(), expected, stable: self.stable, median: median(self.times) }
    }
}

/// Runs `iterations` instrumented signcrypt / unsigncrypt / verify calls.
pub fn bench<R: RngCore + CryptoRng + ?Sized>(
    params: &SystemParams,
    master: &MasterSecret,
    iterations: usize,
    rng: &mut R,
) -> Result<BenchReport, Error> {
    assert!(iterations >= 1, "iterations must be at least 1");
    let (id_a, id_b) = (b"bench-sender".as_slice(), b"bench-receiver".as_slice());
    let a = keygen(params, master, id_a)?;
    let b = keygen(params, master, id_b)?;
    let mut msg = vec![0u8; 64];
    rng.fill_bytes(&mut msg);

    let (mut sc, mut us, mut vp) = (Acc::new(iterations), Acc::new(iterations), Acc::new(iterations));
    for _ in 0..iterations {
        let mut ops = OpCounters::new();
        let t = Instant::now();
        let sigma = signcrypt_metered(params, &a, id_a, id_b, &msg, rng, &mut ops)?;
        sc.push(ops, t.elapsed());

        let mut ops = OpCounters::new();
        let t = Instant::now();
        unsigncrypt_metered(params, &b, id_a, id_b, &sigma, &mut ops)?;
        us.push(ops, t.elapsed());

        let mut ops = OpCounters::new();
        let t = Instant::now();
        let v = verify_public_metered(params, id_a, id_b, &sigma, &mut ops);
        debug_assert!(v.is_valid());
        vp.push(ops, t.elapsed());
    }

    Ok(BenchReport {
        iterations,
        rows: vec![
            sc.row("signcrypt", SIGNCRYPT_COST),
            us.row("unsigncrypt", UNSIGNCRYPT_COST),
            vp.row("verify-public", VERIFY_PUBLIC_COST),
        ],
    })
}
