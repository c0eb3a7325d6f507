//! `halidon` — key generation, primitive-root utilities, root transport,
//! and block encryption over the group ring `Z_n[D_m]`.
//!
//! Exit codes: 0 success, 2 usage (bad flags or unreadable files),
//! 3 algebraic failure (a non-unit where a unit is required),
//! 4 validation failure (bad key material, non-root omega, corrupted or
//! mismatched data).

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use halidon_cli::cipherfile::CipherFile;
use halidon_cli::error::CliError;
use halidon_cli::keyfile::{self, KeyFile};
use halidon_cli::selftest;
use halidon_core::codec::{decode, encode, SymbolTable};
use halidon_core::crypto::{
    self, decrypt_block, encrypt_block, RsaKeyPair, WrappedRoot,
};
use halidon_core::halidon::{
    find_primitive_roots, find_primitive_roots_with_factors, HalidonContext,
};
use halidon_core::modint::Modulus;
use num_bigint::BigUint;

#[derive(Parser)]
#[command(
    name = "halidon",
    about = "Two-stage cipher over the group ring Z_n[D_m] of a dihedral group",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a key pair with primes of the form m*t + 1
    Keygen {
        /// Ring index m (the message block length is 2m)
        #[arg(long)]
        index: usize,
        /// Upper bound on prime size in bits
        #[arg(long)]
        bits: u32,
        /// RNG seed; omitted means a fresh random seed
        #[arg(long)]
        seed: Option<u64>,
        /// Output prefix; writes PREFIX.pub and PREFIX.key
        #[arg(long)]
        out: PathBuf,
        /// Also print the secret components
        #[arg(long)]
        reveal: bool,
        /// Custom symbol table: 42 comma-separated codes
        #[arg(long)]
        table: Option<String>,
    },
    /// Enumerate primitive m-th roots of unity, ascending, one per line
    #[command(group(ArgGroup::new("source").required(true).multiple(true).args(["n", "p1"])))]
    Roots {
        /// Ring modulus; enumerated by exhaustive scan unless factors are given
        #[arg(long)]
        n: Option<BigUint>,
        /// Ring index m
        #[arg(long)]
        index: usize,
        /// First prime factor of n (enables the CRT path; needs --p2)
        #[arg(long, requires = "p2")]
        p1: Option<BigUint>,
        /// Second prime factor of n
        #[arg(long, requires = "p1")]
        p2: Option<BigUint>,
        /// Print only the first K roots
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Wrap a secret root: print c = omega^e mod n
    Wrap {
        /// Public key file
        #[arg(long = "pub")]
        public: PathBuf,
        /// The root to wrap
        #[arg(long)]
        omega: BigUint,
        /// Check that omega is a primitive m-th root first
        #[arg(long)]
        validate: bool,
    },
    /// Unwrap a received root: print omega = c^d mod n
    Unwrap {
        /// Private key file
        #[arg(long)]
        key: PathBuf,
        /// The wrapped value
        #[arg(long)]
        c: BigUint,
        /// Reject results that are not primitive m-th roots
        #[arg(long)]
        validate: bool,
    },
    /// Encrypt a message file into a cipher file
    Encrypt {
        #[command(flatten)]
        ring: RingArgs,
        /// Message input path, or - for stdin
        #[arg(long = "in")]
        input: String,
        /// Cipher output path, or - for stdout
        #[arg(long = "out")]
        output: String,
    },
    /// Decrypt a cipher file back into a message
    Decrypt {
        #[command(flatten)]
        ring: RingArgs,
        /// Cipher input path, or - for stdin
        #[arg(long = "in")]
        input: String,
        /// Message output path, or - for stdout
        #[arg(long = "out")]
        output: String,
    },
    /// Reproduce the built-in reference example end to end
    Selftest,
}

/// Ring parameters for encrypt/decrypt: either explicit --n/--index or a
/// public key file, plus the secret root.
#[derive(clap::Args)]
#[command(group(ArgGroup::new("ring_source").required(true).args(["n", "public"])))]
struct RingArgs {
    /// Ring modulus
    #[arg(long, requires = "index")]
    n: Option<BigUint>,
    /// Ring index m
    #[arg(long, conflicts_with = "public")]
    index: Option<usize>,
    /// Public key file supplying n, m, and an optional table
    #[arg(long = "pub")]
    public: Option<PathBuf>,
    /// The secret primitive m-th root
    #[arg(long)]
    omega: BigUint,
    /// Custom symbol table: 42 comma-separated codes (overrides the key file's)
    #[arg(long)]
    table: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("halidon: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Keygen {
            index,
            bits,
            seed,
            out,
            reveal,
            table,
        } => cmd_keygen(index, bits, seed, &out, reveal, table.as_deref()),
        Command::Roots {
            n,
            index,
            p1,
            p2,
            limit,
        } => cmd_roots(n, index, p1, p2, limit),
        Command::Wrap {
            public,
            omega,
            validate,
        } => cmd_wrap(&public, omega, validate),
        Command::Unwrap { key, c, validate } => cmd_unwrap(&key, c, validate),
        Command::Encrypt {
            ring,
            input,
            output,
        } => cmd_encrypt(ring, &input, &output),
        Command::Decrypt {
            ring,
            input,
            output,
        } => cmd_decrypt(ring, &input, &output),
        Command::Selftest => selftest::run(&selftest::REFERENCE_EXAMPLE, &mut std::io::stdout()),
    }
}

fn cmd_keygen(
    index: usize,
    bits: u32,
    seed: Option<u64>,
    out: &Path,
    reveal: bool,
    table: Option<&str>,
) -> Result<(), CliError> {
    if index < 2 {
        return Err(CliError::usage("--index must be at least 2"));
    }
    let table_codes = table.map(keyfile::parse_table_codes).transpose()?;
    if let Some(codes) = &table_codes {
        SymbolTable::from_code_permutation(codes)?;
    }
    let seed = seed.unwrap_or_else(rand::random);
    let keys = RsaKeyPair::generate(index, bits, seed)?;
    let pub_path = out.with_extension("pub");
    let key_path = out.with_extension("key");
    std::fs::write(
        &pub_path,
        keyfile::render_public(keys.public(), table_codes.as_deref()),
    )?;
    std::fs::write(
        &key_path,
        keyfile::render_private(&keys, table_codes.as_deref()),
    )?;
    println!(
        "wrote {} and {}",
        pub_path.display(),
        key_path.display()
    );
    println!("n = {}", keys.public().modulus().get());
    println!("e = {}", keys.public().exponent());
    println!("m = {}", keys.public().index());
    if reveal {
        println!("p1 = {}", keys.p1());
        println!("p2 = {}", keys.p2());
        println!("phi = {}", keys.phi());
        println!("d = {}", keys.d());
    }
    Ok(())
}

fn cmd_roots(
    n: Option<BigUint>,
    index: usize,
    p1: Option<BigUint>,
    p2: Option<BigUint>,
    limit: Option<usize>,
) -> Result<(), CliError> {
    if index < 1 {
        return Err(CliError::usage("--index must be at least 1"));
    }
    let roots = match (p1, p2) {
        (Some(p1), Some(p2)) => {
            for p in [&p1, &p2] {
                if !crypto::is_probable_prime(p, crypto::MILLER_RABIN_ROUNDS) {
                    return Err(CliError::validation(format!("{p} is not prime")));
                }
            }
            if p1 == p2 {
                return Err(CliError::validation("--p1 and --p2 must be distinct"));
            }
            if let Some(n) = n {
                if &p1 * &p2 != n {
                    return Err(CliError::validation("--n does not equal --p1 * --p2"));
                }
            }
            find_primitive_roots_with_factors(&p1, &p2, index, limit)
        }
        (None, None) => {
            let n = n.ok_or_else(|| CliError::usage("--n or --p1/--p2 required"))?;
            let modulus = Modulus::new(n)?;
            find_primitive_roots(&modulus, index, limit)
        }
        _ => unreachable!("clap enforces p1/p2 together"),
    };
    let mut stdout = std::io::stdout().lock();
    for root in roots {
        writeln!(stdout, "{root}")?;
    }
    Ok(())
}

fn cmd_wrap(public: &Path, omega: BigUint, validate: bool) -> Result<(), CliError> {
    let (key, _) = load_keyfile(public)?.into_public()?;
    let omega = residue_arg(key.modulus(), omega, "--omega")?;
    let wrapped = key.wrap_root(&omega, validate)?;
    println!("{}", wrapped.value());
    Ok(())
}

fn cmd_unwrap(key: &Path, c: BigUint, validate: bool) -> Result<(), CliError> {
    let (keys, _) = load_keyfile(key)?.into_keypair()?;
    let c = residue_arg(keys.public().modulus(), c, "--c")?;
    let omega = keys.unwrap_root(&WrappedRoot::new(c), validate)?;
    println!("{omega}");
    Ok(())
}

fn cmd_encrypt(ring: RingArgs, input: &str, output: &str) -> Result<(), CliError> {
    let (ctx, table) = resolve_ring(ring)?;
    let message = read_input(input)?;
    let message = message.trim_end_matches(['\n', '\r']);
    let code_blocks = encode(message, &table, ctx.index())?;
    let mut blocks = Vec::with_capacity(code_blocks.len());
    for (i, codes) in code_blocks.iter().enumerate() {
        blocks.push(encrypt_block(codes, &ctx, i + 1)?);
    }
    let file = CipherFile::from_blocks(ctx.modulus(), ctx.index(), &blocks);
    write_output(output, &file.render())?;
    Ok(())
}

fn cmd_decrypt(ring: RingArgs, input: &str, output: &str) -> Result<(), CliError> {
    let (ctx, table) = resolve_ring(ring)?;
    let file = CipherFile::parse(&read_input(input)?)?;
    if &file.n != ctx.modulus().get() {
        return Err(CliError::validation(
            "cipher file n does not match the given ring",
        ));
    }
    if file.m != ctx.index() {
        return Err(CliError::validation(
            "cipher file m does not match the given ring",
        ));
    }
    let mut codes = Vec::new();
    for block in file.to_cipher_blocks()? {
        codes.extend(decrypt_block(&block, &ctx)?);
    }
    let mut text = decode(&codes, &table)?;
    text.push('\n');
    write_output(output, &text)?;
    Ok(())
}

/// Builds the halidon context and symbol table from either explicit
/// flags or a public key file.
fn resolve_ring(ring: RingArgs) -> Result<(HalidonContext, SymbolTable), CliError> {
    let (modulus, index, file_table) = match (ring.n, ring.public) {
        (Some(n), None) => {
            let index = ring
                .index
                .ok_or_else(|| CliError::usage("--index is required with --n"))?;
            (Modulus::new(n)?, index, None)
        }
        (None, Some(path)) => {
            let (key, table) = load_keyfile(&path)?.into_public()?;
            (key.modulus().clone(), key.index(), table)
        }
        _ => unreachable!("clap enforces exactly one ring source"),
    };
    if index < 1 {
        return Err(CliError::usage("--index must be at least 1"));
    }
    let omega = residue_arg(&modulus, ring.omega, "--omega")?;
    let ctx = HalidonContext::new(modulus, index, omega.into_value())?;
    let table = match ring.table.as_deref() {
        Some(spec) => SymbolTable::from_code_permutation(&keyfile::parse_table_codes(spec)?)?,
        None => file_table.unwrap_or_default(),
    };
    Ok((ctx, table))
}

fn residue_arg(
    modulus: &Modulus,
    value: BigUint,
    flag: &str,
) -> Result<halidon_core::Residue, CliError> {
    if &value >= modulus.get() {
        return Err(CliError::usage(format!(
            "{flag} must be below n = {}",
            modulus.get()
        )));
    }
    Ok(modulus.residue(value))
}

fn load_keyfile(path: &Path) -> Result<KeyFile, CliError> {
    KeyFile::parse(&std::fs::read_to_string(path)?)
}

fn read_input(spec: &str) -> Result<String, CliError> {
    if spec == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(spec)?)
    }
}

fn write_output(spec: &str, content: &str) -> Result<(), CliError> {
    if spec == "-" {
        std::io::stdout().write_all(content.as_bytes())?;
        Ok(())
    } else {
        std::fs::write(spec, content)?;
        Ok(())
    }
}
