use std::fs;
use std::io::Write;
use std::path::Path;

use sboxforge::cloning::{clone_with_options, CloneOptions};
use sboxforge::enumerate::{enumerate_clones, Enumeration, Plan};
use sboxforge::{analyze, compare_reports, key_to_permutations, Error, Exec, KeyMaterial, SBox};

use crate::args::{Cli, Command};
use crate::report::render;
use crate::sbox_file::{parse_sbox, serialize_sbox, Radix};

/// Process exit status, one per failure class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    /// Unreadable or malformed input, bad flags, invalid hex.
    Input = 1,
    NotBijective = 2,
    /// Fixed-point removal found no clean clone.
    RemovalFailed = 3,
    /// An enumerated clone's report differs from the seed's.
    InvarianceFailed = 4,
    /// `verify`: the two reports differ.
    Mismatch = 5,
    /// `verify`: the two files have different widths.
    WidthMismatch = 6,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug)]
pub struct Failure {
    pub exit: Exit,
    pub message: String,
}

impl Failure {
    fn new(exit: Exit, message: impl Into<String>) -> Self {
        Self {
            exit,
            message: message.into(),
        }
    }

    fn input(message: impl Into<String>) -> Self {
        Self::new(Exit::Input, message)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::input(e.to_string())
    }
}

fn read_sbox(path: &Path) -> Result<SBox, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_sbox(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_seed(path: &Path) -> Result<SBox, Failure> {
    let seed = read_sbox(path)?;
    if !seed.is_permutation() {
        return Err(Failure::new(
            Exit::NotBijective,
            format!("{}: seed is not bijective", path.display()),
        ));
    }
    Ok(seed)
}

fn write_to(path: Option<&Path>, out: &mut dyn Write, contents: &str) -> Result<(), Failure> {
    match path {
        Some(p) => {
            fs::write(p, contents).map_err(|e| Failure::input(format!("{}: {e}", p.display())))
        }
        None => Ok(out.write_all(contents.as_bytes())?),
    }
}

/// Runs one parsed command. Results go to `out`, diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Exit, Failure> {
    match cli.command {
        Command::Clone {
            seed,
            key,
            sigma1,
            sigma2,
            remove_fixed_points,
            max_attempts,
            output,
            hex,
        } => {
            let seed = read_seed(&seed)?;
            let (s1, s2) = match (key, sigma1, sigma2) {
                (Some(hex), _, _) => {
                    let key =
                        KeyMaterial::from_hex(&hex).map_err(|e| Failure::input(e.to_string()))?;
                    key_to_permutations(&key, seed.n() as usize)
                        .map_err(|e| Failure::input(e.to_string()))?
                }
                (None, Some(a), Some(b)) => {
                    let n = seed.n() as usize;
                    (a.resolve(n), b.resolve(n))
                }
                _ => return Err(Failure::input("give --key or both --sigma1 and --sigma2")),
            };
            let opts = CloneOptions {
                remove_fixed_points,
                max_attempts,
            };
            let outcome = clone_with_options(&seed, &s1, &s2, &opts).map_err(|e| match e {
                Error::RemovalExhausted { .. } | Error::FixedPointUnavoidable { .. } => {
                    Failure::new(Exit::RemovalFailed, e.to_string())
                }
                Error::NotBijective => Failure::new(Exit::NotBijective, e.to_string()),
                other => Failure::input(other.to_string()),
            })?;
            writeln!(err, "sigma1={}", outcome.sigma1)?;
            writeln!(err, "sigma2={}", outcome.sigma2)?;
            writeln!(err, "attempts={}", outcome.attempt + 1)?;
            let radix = if hex { Radix::Hex } else { Radix::Decimal };
            write_to(
                output.as_deref(),
                out,
                &serialize_sbox(&outcome.sbox, radix),
            )?;
            Ok(Exit::Ok)
        }

        Command::Analyze { sbox, format } => {
            let s = read_sbox(&sbox)?;
            out.write_all(render(&analyze(&s), format).as_bytes())?;
            Ok(Exit::Ok)
        }

        Command::Derive { key, n } => {
            let key = KeyMaterial::from_hex(&key).map_err(|e| Failure::input(e.to_string()))?;
            let (s1, s2) =
                key_to_permutations(&key, n as usize).map_err(|e| Failure::input(e.to_string()))?;
            writeln!(out, "sigma1={s1}")?;
            writeln!(out, "sigma2={s2}")?;
            Ok(Exit::Ok)
        }

        Command::Enumerate {
            seed,
            all,
            sample,
            rng_seed,
            check_invariance,
            out: csv_path,
        } => {
            let seed = read_seed(&seed)?;
            let plan = match (all, sample) {
                (true, _) => Plan::All,
                (false, Some(count)) => Plan::Sample { count, rng_seed },
                (false, None) => return Err(Failure::input("give --all or --sample N")),
            };
            let result = enumerate_clones(&seed, plan, check_invariance, Exec::default())
                .map_err(|e| Failure::input(e.to_string()))?;
            let csv_text = render_csv(&result)?;
            let summary = format!(
                "rows={} distinct={} passes={}\n",
                result.rows.len(),
                result.distinct,
                if result.checked {
                    result.passes.to_string()
                } else {
                    "unchecked".into()
                }
            );
            match csv_path {
                Some(p) => {
                    write_to(Some(&p), out, &csv_text)?;
                    out.write_all(summary.as_bytes())?;
                }
                None => {
                    out.write_all(csv_text.as_bytes())?;
                    err.write_all(summary.as_bytes())?;
                }
            }
            if result.all_passed() {
                Ok(Exit::Ok)
            } else {
                writeln!(
                    err,
                    "invariance check failed for {} clones",
                    result.rows.len() - result.passes
                )?;
                Ok(Exit::InvarianceFailed)
            }
        }

        Command::Verify { seed, clone } => {
            let a = read_sbox(&seed)?;
            let b = read_sbox(&clone)?;
            if a.n() != b.n() {
                return Err(Failure::new(
                    Exit::WidthMismatch,
                    format!("width mismatch: {} vs {}", a.n(), b.n()),
                ));
            }
            let diff = compare_reports(&analyze(&a), &analyze(&b));
            if diff.is_equal() {
                writeln!(out, "match: bijective, nl, sac, bic_nl, bic_sac")?;
                Ok(Exit::Ok)
            } else {
                writeln!(out, "mismatch:")?;
                for d in &diff.differences {
                    writeln!(out, "  {}: {} != {}", d.field, d.left, d.right)?;
                }
                Ok(Exit::Mismatch)
            }
        }
    }
}

pub const CSV_HEADER: [&str; 9] = [
    "sigma1_rank",
    "sigma2_rank",
    "sigma1",
    "sigma2",
    "prefix",
    "hash",
    "fixed_points",
    "reverse_fixed_points",
    "invariance",
];

pub fn render_csv(e: &Enumeration) -> Result<String, Failure> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in &e.rows {
        let prefix: Vec<String> = r.prefix.iter().map(u32::to_string).collect();
        let invariance = match r.invariant {
            Some(true) => "pass",
            Some(false) => "fail",
            None => "",
        };
        w.write_record([
            r.sigma1_rank.to_string(),
            r.sigma2_rank.to_string(),
            r.sigma1.to_string(),
            r.sigma2.to_string(),
            prefix.join(" "),
            format!("{:016x}", r.hash),
            r.fixed_points.to_string(),
            r.reverse_fixed_points.to_string(),
            invariance.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::input(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::input(e.to_string()))
}
