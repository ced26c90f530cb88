//! `wcn`: classify, scan, tabulate and construct weak Carmichael numbers.

mod cache;
mod record;
mod tables;

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wcn_core::arith::{factorize, gcd, is_prime, Factorization};
use wcn_core::classify::{fermat_liar_count, is_weak_carmichael, profile};
use wcn_core::construct::{
    chernick, extended_chernick, k_number_power, k_number_power_family, lift_carmichael, lift_family,
    prime_power_pair_descriptor, wong_family_descriptor, FamilyDescriptor,
};
use wcn_core::enumerate::{count_table, scan_batches, NumberClass, ScanConfig, ScanMember, TableSchema};

use record::{OutputRecord, MD_HEADER, TSV_HEADER};

#[derive(Parser)]
#[command(name = "wcn", version, about = "Weak Carmichael numbers and related classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a single integer.
    Classify {
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// List the members of a class in [from, to).
    Scan(ScanArgs),
    /// Reproduce one of the published count tables.
    Table {
        #[arg(long, value_parser = ["1", "3", "4", "5"])]
        schema: String,
        #[arg(long)]
        to: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Md)]
        format: TableFormat,
        /// Compare against the printed values; exit 1 on any difference.
        #[arg(long)]
        verify: bool,
        #[arg(long, env = "WCN_JOBS")]
        jobs: Option<usize>,
    },
    /// Build members of a parametric family.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Fermat liar count, exact and optionally sampled.
    Fermat {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(clap::Args)]
struct ScanArgs {
    #[arg(long)]
    from: u64,
    #[arg(long)]
    to: u64,
    #[arg(long, default_value = "weak", value_parser = parse_class)]
    class: NumberClass,
    #[arg(long)]
    exclude_prime_powers: bool,
    /// Exact number of distinct prime factors.
    #[arg(long)]
    factors: Option<usize>,
    #[arg(long, requires = "max_prime_hi")]
    max_prime_lo: Option<u64>,
    #[arg(long, requires = "max_prime_lo")]
    max_prime_hi: Option<u64>,
    #[arg(long, value_enum, default_value_t = ScanFormat::Tsv)]
    format: ScanFormat,
    #[arg(long, env = "WCN_JOBS")]
    jobs: Option<usize>,
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Family {
    /// (6m+1)(12m+1)(18m+1).
    Chernick {
        #[arg(long)]
        m: u64,
    },
    /// (6m+1)(12m+1)(18m+1)(36m/d+1)^l.
    Extended {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        l: u32,
    },
    /// n p^(m d) for a Carmichael number n.
    Lift {
        #[arg(long)]
        n: u64,
    },
    /// p^a q^b.
    Pair {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// p_1^(k_1 e_1) ... p_s^(k_s e_s).
    Wong {
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        primes: Vec<u64>,
    },
    /// n^(d lambda(n)) for a K-number n.
    Kpower {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        d: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanFormat {
    Tsv,
    Json,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Md,
    Tsv,
}

fn parse_class(s: &str) -> Result<NumberClass, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = NumberClass::ALL.iter().map(|c| c.name()).collect();
        format!("unknown class {s:?}; expected one of {}", names.join(", "))
    })
}

/// An error reported to the user with an exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Self { code: 2, message: message.to_string() }
    }
}

impl From<wcn_core::Error> for Failure {
    fn from(e: wcn_core::Error) -> Self {
        Self::usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self { code: 1, message: e.to_string() }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Classify { n, json } => classify(&mut out, n, json),
        Command::Scan(args) => run_scan(&mut out, &args),
        Command::Table { schema, to, format, verify, jobs } => {
            table(&mut out, &schema, to, format, verify, jobs)
        }
        Command::Construct { family } => construct(&mut out, family),
        Command::Fermat { n, sample, seed } => fermat(&mut out, n, sample, seed),
    };
    let flushed = out.flush();
    match result {
        Ok(()) => match flushed {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                eprintln!("wcn: {e}");
                ExitCode::from(1)
            }
            _ => ExitCode::SUCCESS,
        },
        Err(f) if f.code == 0 => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("wcn: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn write_out(out: &mut impl Write, s: &str) -> CmdResult {
    out.write_all(s.as_bytes()).map_err(|e| {
        if e.kind() == io::ErrorKind::BrokenPipe {
            // the reader went away (`| head`); stop quietly
            Failure { code: 0, message: String::new() }
        } else {
            Failure::from(e)
        }
    })
}

fn classify(out: &mut impl Write, n: u64, json: bool) -> CmdResult {
    if n < 2 {
        return Err(Failure::usage(format!("classify needs n >= 2, got {n}")));
    }
    let p = profile(n)?;
    let rec = OutputRecord::from_profile(&p);
    if json {
        return write_out(out, &format!("{}\n", rec.to_json()));
    }
    let tags = if rec.flags.is_empty() { "-".to_string() } else { rec.flags.join(" ") };
    let mut s = format!("{} = {}\ntags: {}\n", rec.n, rec.factorization, tags);
    s.push_str(&format!("F={} f={} c_w={} lambda={}\n", rec.liars, rec.liar_fraction, rec.c_w, rec.lambda));
    if let Some(k) = p.almost_order {
        s.push_str(&format!("almost Carmichael of order {k}\n"));
    }
    write_out(out, &s)
}

fn scan_config(args: &ScanArgs) -> ScanConfig {
    let mut cfg = ScanConfig::new(args.from, args.to, args.class);
    cfg.exclude_prime_powers = args.exclude_prime_powers;
    cfg.factor_count = args.factors;
    cfg.max_prime_window = args.max_prime_lo.zip(args.max_prime_hi);
    cfg.jobs = args.jobs;
    cfg
}

/// The query as recorded in the cache; independent of format and workers.
fn cache_query(cfg: &ScanConfig) -> String {
    let window = cfg.max_prime_window.map_or_else(|| "-".to_string(), |(c, d)| format!("{c}..{d}"));
    let factors = cfg.factor_count.map_or_else(|| "-".to_string(), |k| k.to_string());
    format!(
        "scan from={} to={} class={} exclude-prime-powers={} factors={} max-prime={}",
        cfg.lo, cfg.hi, cfg.class, cfg.exclude_prime_powers, factors, window
    )
}

fn emit(out: &mut impl Write, format: ScanFormat, records: &[OutputRecord]) -> CmdResult {
    let mut s = String::new();
    for r in records {
        match format {
            ScanFormat::Tsv => s.push_str(&r.to_tsv()),
            ScanFormat::Json => s.push_str(&r.to_json()),
            ScanFormat::Md => s.push_str(&r.to_md()),
        }
        s.push('\n');
    }
    write_out(out, &s)
}

fn records(batch: &[ScanMember]) -> Vec<OutputRecord> {
    batch
        .iter()
        .map(|m| OutputRecord::from_profile(&profile(m.n).expect("scan members are at least 2")))
        .collect()
}

fn run_scan(out: &mut impl Write, args: &ScanArgs) -> CmdResult {
    let cfg = scan_config(args);
    cfg.validate()?;
    let query = cache_query(&cfg);
    let header = match args.format {
        ScanFormat::Tsv => Some(TSV_HEADER),
        ScanFormat::Md => Some(MD_HEADER),
        ScanFormat::Json => None,
    };
    if let Some(path) = &args.cache {
        match cache::lookup(path, &query)? {
            cache::Lookup::Hit(rows) => {
                if let Some(h) = header {
                    write_out(out, &format!("{h}\n"))?;
                }
                return emit(out, args.format, &rows);
            }
            cache::Lookup::Corrupt { expected, found } => {
                eprintln!("wcn: cache block for this query has {found} of {expected} rows; recomputing");
            }
            cache::Lookup::Miss => {}
        }
    }
    if let Some(h) = header {
        write_out(out, &format!("{h}\n"))?;
    }
    let mut cached = Vec::new();
    let keep = args.cache.is_some();
    scan_batches(&cfg, |batch| {
        let recs = records(&batch);
        emit(out, args.format, &recs)?;
        if keep {
            cached.extend(recs);
        }
        Ok::<(), Failure>(())
    })??;
    if let Some(path) = &args.cache {
        cache::append(path, &query, &cached)?;
    }
    Ok(())
}

fn table(
    out: &mut impl Write,
    schema: &str,
    to: u64,
    format: TableFormat,
    verify: bool,
    jobs: Option<usize>,
) -> CmdResult {
    let schema = match schema {
        "1" => TableSchema::Table1Summary,
        "3" => TableSchema::Table3,
        "4" => TableSchema::Table4,
        _ => TableSchema::Table5,
    };
    let rows = count_table(to, schema, jobs)?;
    let text = match format {
        TableFormat::Md => tables::render_md(schema, &rows),
        TableFormat::Tsv => tables::render_tsv(schema, &rows),
    };
    write_out(out, &text)?;
    if verify {
        let problems = tables::verify(schema, &rows);
        if !problems.is_empty() {
            return Err(Failure {
                code: 1,
                message: format!("mismatch with the printed table:\n{}", problems.join("\n")),
            });
        }
    }
    Ok(())
}

fn status(f: &Factorization) -> &'static str {
    if is_weak_carmichael(f) {
        "weak-carmichael"
    } else {
        "NOT weak-carmichael"
    }
}

fn member_line(f: &Factorization) -> String {
    match f.value() {
        Some(v) => format!("{v} = {f} [{}]", status(f)),
        None => format!("{f} (exceeds 64 bits) [{}]", status(f)),
    }
}

fn describe(fam: &FamilyDescriptor) -> Result<String, Failure> {
    Ok(format!("family {fam}\nsmallest member: {}\n", member_line(&fam.smallest_member()?)))
}

fn construct(out: &mut impl Write, family: Family) -> CmdResult {
    let text = match family {
        Family::Chernick { m } => {
            let c = chernick(m)?;
            let comps: Vec<String> = c.components.iter().map(u64::to_string).collect();
            if c.is_carmichael {
                format!("{} = {} [carmichael]\n", c.n, comps.join("·"))
            } else {
                let bad: Vec<String> = c
                    .components
                    .iter()
                    .zip(c.component_prime)
                    .filter(|(_, p)| !p)
                    .map(|(x, _)| x.to_string())
                    .collect();
                format!("{} = {} [not carmichael: {} not prime]\n", c.n, comps.join("·"), bad.join(", "))
            }
        }
        Family::Extended { m, d, l } => {
            let e = extended_chernick(m, d, l)?;
            let mut s = format!("C({m}; {d}, {l}) = {}\n", member_line(&e.factorization));
            let l0 = e.smallest_l.map_or_else(|| "none".to_string(), |x| x.to_string());
            s.push_str(&format!("w = {}, w^l = 1 mod {}: {}, smallest l = {l0}\n", e.w, 36 * m, e.member));
            if let Some(fam) = e.descriptor() {
                s.push_str(&describe(&fam)?);
            }
            s
        }
        Family::Lift { n } => {
            let f = factorize(n);
            let lifts = lift_carmichael(&f)?;
            let pairs: Vec<String> = lifts.iter().map(|(p, d)| format!("({p},{d})")).collect();
            let mut s = format!("{}\n", pairs.join(" "));
            for i in 0..lifts.len() {
                s.push_str(&describe(&lift_family(&f, i)?)?);
            }
            s
        }
        Family::Pair { p, q } => {
            let fam = prime_power_pair_descriptor(p, q)?;
            format!("(u, v) = ({}, {})\n{}", fam.parameters["u"], fam.parameters["v"], describe(&fam)?)
        }
        Family::Wong { primes } => {
            let fam = wong_family_descriptor(&primes)?;
            let exps: Vec<String> =
                fam.generators.iter().map(|g| g.iter().sum::<u32>().to_string()).collect();
            format!("exponents ({})\n{}", exps.join(", "), describe(&fam)?)
        }
        Family::Kpower { n, d } => {
            let f = factorize(n);
            let power = k_number_power(&f, d)?;
            let fam = k_number_power_family(&f)?;
            format!("{}\n{}", member_line(&power), describe(&fam)?)
        }
    };
    write_out(out, &text)
}

fn fermat(out: &mut impl Write, n: u64, sample: Option<u64>, seed: u64) -> CmdResult {
    let stats = fermat_liar_count(&factorize(n))?;
    let mut s = format!("F={} f={}\n", stats.liars, stats.fraction);
    if is_prime(n) {
        s.push_str(&format!("note: {n} is prime, so every base coprime to it passes\n"));
    }
    if let Some(count) = sample {
        if n < 3 {
            return Err(Failure::usage("sampling needs n >= 3"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut liars = 0u64;
        let mut drawn = 0u64;
        while drawn < count {
            let a = rng.gen_range(1..n);
            if gcd(a, n) != 1 {
                continue;
            }
            drawn += 1;
            if wcn_core::arith::mod_pow(a, n - 1, n)? == 1 {
                liars += 1;
            }
        }
        let empirical = if count == 0 { 0.0 } else { liars as f64 / count as f64 };
        s.push_str(&format!(
            "sampled {count} coprime bases (seed {seed}): {liars} liars, empirical f = {empirical:.6}\n"
        ));
    }
    write_out(out, &s)
}
