//! `ibpsc`: PKG, sender, receiver and third-party operations on wire files.
//!
//! Exit status: 0 success or valid, 1 cryptographically invalid, 2 usage or
//! I/O error.

mod files;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use ibpsc::codec::encode;
use ibpsc::testkit::kat::digest;
use ibpsc::testkit::{bench, build_kats, run_game_suite, verify_kats, GameConfig};
use ibpsc::{
    keygen, seeded_rng, setup, signcrypt, tp_verify_with, unsigncrypt, verify_public, CurveProfile, Error,
    MasterSecret, Signcryption, SystemParams, TPProof, TpMode, UserPrivateKey, Verdict,
};
use rand::rngs::OsRng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

#[derive(Parser)]
#[command(name = "ibpsc", version, about = "Identity-based signcryption with public verifiability")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct SeedArgs {
    /// Hex seed for deterministic randomness. Test vectors only.
    #[arg(long, value_name = "HEX")]
    seed: Option<String>,
    /// Refuse to run with a seed.
    #[arg(long)]
    production: bool,
}

impl SeedArgs {
    fn rng(&self) -> Result<ChaCha20Rng> {
        match &self.seed {
            None => Ok(ChaCha20Rng::from_rng(OsRng)?),
            Some(_) if self.production => bail!("--seed is refused in --production mode"),
            Some(hex_seed) => {
                let seed = hex::decode(hex_seed).context("--seed must be hex")?;
                eprintln!("WARNING: deterministic seed in use; output is reproducible and NOT secure");
                Ok(seeded_rng(&seed))
            }
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// PKG: generate system parameters and the master secret.
    Setup {
        #[arg(long, default_value = "bls12-381")]
        profile: String,
        #[arg(long)]
        out_params: PathBuf,
        #[arg(long)]
        out_master: PathBuf,
        #[command(flatten)]
        seed: SeedArgs,
    },
    /// PKG: issue the private key of an identity.
    Keygen {
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        master: PathBuf,
        #[arg(long)]
        identity: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sender: signcrypt a file to a receiver.
    Signcrypt {
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        key: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        seed: SeedArgs,
    },
    /// Receiver: recover the message and a third-party proof.
    Unsigncrypt {
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        key: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        proof_out: PathBuf,
    },
    /// Anyone: check the sender's signature on a ciphertext.
    VerifyPublic {
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        ct: PathBuf,
    },
    /// Third party: check a proof released by the receiver.
    TpVerify {
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        proof: PathBuf,
        /// Only check the tag, not the signature or carried message.
        #[arg(long)]
        relaxed: bool,
    },
    /// Count group operations per call and time them.
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        iterations: u32,
        /// Parameters to bench under; requires --master. Defaults to a fresh setup.
        #[arg(long, requires = "master")]
        params: Option<PathBuf>,
        #[arg(long, requires = "params")]
        master: Option<PathBuf>,
    },
    /// Known-answer vectors.
    #[command(subcommand)]
    Kat(KatCmd),
    /// Run the adversarial property suite.
    GameSuite {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
    },
}

#[derive(Subcommand)]
enum KatCmd {
    Generate {
        #[arg(long, value_name = "HEX")]
        seed: String,
        #[arg(long)]
        out: PathBuf,
    },
    Verify {
        #[arg(long, value_name = "HEX")]
        seed: String,
        #[arg(long = "in")]
        input: PathBuf,
    },
}

/// Result of a command that ran to completion.
enum Status {
    Ok,
    Invalid,
}

impl From<Verdict> for Status {
    fn from(v: Verdict) -> Self {
        println!("{v}");
        match v {
            Verdict::Valid => Status::Ok,
            Verdict::Invalid => Status::Invalid,
        }
    }
}

fn invalid() -> Status {
    println!("invalid");
    Status::Invalid
}

fn load_params(path: &Path) -> Result<SystemParams> {
    let params: SystemParams = files::load(path)?;
    params.validate().map_err(anyhow::Error::msg).context("inconsistent parameters")?;
    Ok(params)
}

fn load_key(path: &Path, params: &SystemParams, role: &str, identity: &str) -> Result<UserPrivateKey> {
    let key: UserPrivateKey = files::load(path)?;
    if key.identity != identity.as_bytes() {
        bail!("key is for {:?}, not the {role} {identity:?}", String::from_utf8_lossy(&key.identity));
    }
    if role == "sender" && !key.matches_params(params) {
        bail!("key was not issued under these parameters");
    }
    Ok(key)
}

fn seed_from_hex(seed: &str) -> Result<Vec<u8>> {
    hex::decode(seed).context("--seed must be hex")
}

fn run(cmd: Cmd) -> Result<Status> {
    match cmd {
        Cmd::Setup { profile, out_params, out_master, seed } => {
            let profile: CurveProfile = profile.parse()?;
            let mut rng = seed.rng()?;
            let (params, master) = setup(profile, &mut rng);
            let params_bytes = encode(&params);
            files::write_all(&[(&out_params, &params_bytes), (&out_master, &encode(&master))])?;
            println!("profile: {profile}");
            println!("params sha256: {}", hex::encode(digest(&params_bytes)));
            Ok(Status::Ok)
        }
        Cmd::Keygen { params, master, identity, out } => {
            let params = load_params(&params)?;
            let master: MasterSecret = files::load(&master)?;
            if SystemParams::derive(params.profile, &master) != params {
                bail!("master secret does not match the parameters");
            }
            let key = keygen(&params, &master, identity.as_bytes())?;
            files::write_all(&[(&out, &encode(&key))])?;
            Ok(Status::Ok)
        }
        Cmd::Signcrypt { params, key, from, to, input, out, seed } => {
            let params = load_params(&params)?;
            let key = load_key(&key, &params, "sender", &from)?;
            let m = files::read(&input)?;
            let mut rng = seed.rng()?;
            let sigma = signcrypt(&params, &key, from.as_bytes(), to.as_bytes(), &m, &mut rng)?;
            files::write_all(&[(&out, &encode(&sigma))])?;
            Ok(Status::Ok)
        }
        Cmd::Unsigncrypt { params, key, from, to, input, out, proof_out } => {
            let params = load_params(&params)?;
            let key = load_key(&key, &params, "receiver", &to)?;
            let Some(sigma) = files::load_untrusted::<Signcryption>(&input)? else {
                return Ok(invalid());
            };
            match unsigncrypt(&params, &key, from.as_bytes(), to.as_bytes(), &sigma) {
                Ok((m, proof)) => {
                    files::write_all(&[(&out, &m), (&proof_out, &encode(&proof))])?;
                    Ok(Status::Ok)
                }
                Err(Error::Invalid(_)) => Ok(invalid()),
                Err(e) => Err(e.into()),
            }
        }
        Cmd::VerifyPublic { params, from, to, ct } => {
            let params = load_params(&params)?;
            check_ids(&from, &to)?;
            Ok(match files::load_untrusted::<Signcryption>(&ct)? {
                Some(sigma) => verify_public(&params, from.as_bytes(), to.as_bytes(), &sigma).into(),
                None => invalid(),
            })
        }
        Cmd::TpVerify { params, from, to, proof, relaxed } => {
            let params = load_params(&params)?;
            check_ids(&from, &to)?;
            let mode = if relaxed { TpMode::Relaxed } else { TpMode::Strict };
            Ok(match files::load_untrusted::<TPProof>(&proof)? {
                Some(p) => tp_verify_with(&params, from.as_bytes(), to.as_bytes(), &p, mode).into(),
                None => invalid(),
            })
        }
        Cmd::Bench { iterations, params, master } => {
            let mut rng = ChaCha20Rng::from_rng(OsRng)?;
            let (params, master) = match (params, master) {
                (Some(p), Some(m)) => (load_params(&p)?, files::load(&m)?),
                _ => setup(CurveProfile::Bls12_381, &mut rng),
            };
            let report = bench(&params, &master, iterations as usize, &mut rng)?;
            print!("{report}");
            if report.matches_table() {
                Ok(Status::Ok)
            } else {
                eprintln!("operation counts deviate from the expected table");
                Ok(Status::Invalid)
            }
        }
        Cmd::Kat(KatCmd::Generate { seed, out }) => {
            let kat = build_kats(&seed_from_hex(&seed)?);
            files::write_all(&[(&out, &kat.bytes)])?;
            println!("wrote {} vectors", kat.spans.len());
            Ok(Status::Ok)
        }
        Cmd::Kat(KatCmd::Verify { seed, input }) => {
            let report = verify_kats(&seed_from_hex(&seed)?, &files::read(&input)?);
            if !report.header_ok {
                println!("FAIL header");
            }
            for i in 0..report.vectors {
                let verdict = if report.failures.contains(&i) { "FAIL" } else { "PASS" };
                println!("{verdict} vector {i}");
            }
            Ok(if report.passed() { Status::Ok } else { Status::Invalid })
        }
        Cmd::GameSuite { trials } => {
            let mut rng = ChaCha20Rng::from_rng(OsRng)?;
            let (params, master) = setup(CurveProfile::Bls12_381, &mut rng);
            let cfg = GameConfig { trials: trials as usize, ..GameConfig::default() };
            let report = run_game_suite(&params, &master, cfg, &mut rng)?;
            print!("{report}");
            Ok(if report.all_passed() { Status::Ok } else { Status::Invalid })
        }
    }
}

fn check_ids(from: &str, to: &str) -> Result<()> {
    if from.is_empty() || to.is_empty() {
        return Err(Error::EmptyIdentity.into());
    }
    if from == to {
        return Err(Error::SelfSigncrypt.into());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Invalid) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
