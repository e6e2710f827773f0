//! The `skewlat` command line. [`run`] takes the arguments and two sinks
//! and returns the process exit code:
//!
//! - `0` when the verdict is true or the output was produced,
//! - `1` when the verdict is false (the certificate is printed),
//! - `2` for usage, parse and precondition errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use skewlat::census::{enumerate, CensusFilter};
use skewlat::format::{emit, parse_structure};
use skewlat::models::{
    build_pfn_algebra, fi_one_point_chain, om_verify_no_infimum_of_infs,
    om_verify_no_join_of_naturals, om_window, SymbolicElement,
};
use skewlat::{
    check_identity, check_symmetric, check_theorem_ncframes, commutation_graph,
    completeness_profile, green_d, inf_natural, is_ncframe, lattice_sections, quotient,
    sup_natural, Certificate, Error, Identity, SkewLattice, Witness,
};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "skewlat",
    version,
    about = "Check finite skew lattices and their completeness properties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate the skew lattice axioms (and the zero laws if a zero is declared).
    Check { file: PathBuf },
    /// Print the table of identities and completeness properties.
    Classify { file: PathBuf },
    /// Emit the commutative shadow S/D.
    Quotient {
        file: PathBuf,
        /// Write to this file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Supremum (and infimum) of a set of elements in the natural order.
    Sup {
        file: PathBuf,
        /// Comma-separated element ids.
        #[arg(long, value_delimiter = ',', required = true)]
        elements: Vec<usize>,
    },
    /// List the lattice sections of a normal symmetric skew lattice.
    Sections { file: PathBuf },
    /// Enumerate skew lattices of one order up to isomorphism.
    Census {
        #[arg(long)]
        order: usize,
        /// Comma-separated properties, `!` to forbid, e.g. `zero,!commutative`.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        count_only: bool,
    },
    /// Build or verify one of the worked models.
    Paper {
        model: Model,
        /// Window size for `omega`, chain length for `finimg`.
        #[arg(long)]
        window: Option<u64>,
        /// Domain and codomain sizes for `pfn`.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        sizes: Option<Vec<usize>>,
        #[arg(long)]
        verify: bool,
    },
    /// Check that a noncommutative frame has a frame as its shadow.
    Theorem { file: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Model {
    Pfn,
    Omega,
    Finimg,
}

const DEFAULT_WINDOW: u64 = 5;
const DEFAULT_CHAIN: u64 = 50;

/// Why a command stopped without a verdict.
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<bool, Failure>;

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let to_stdout = !e.use_stderr();
            let text = e.render().to_string();
            let _ = if to_stdout {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return if to_stdout { EXIT_TRUE } else { EXIT_ERROR };
        }
    };
    let mut report = String::new();
    let outcome = dispatch(cli.command, &mut report);
    let _ = out.write_all(report.as_bytes());
    match outcome {
        Ok(true) => EXIT_TRUE,
        Ok(false) => EXIT_FALSE,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, out: &mut String) -> Outcome {
    match command {
        Command::Check { file } => cmd_check(&file, out),
        Command::Classify { file } => cmd_classify(&load(&file)?, out),
        Command::Quotient { file, output } => cmd_quotient(&load(&file)?, output.as_deref(), out),
        Command::Sup { file, elements } => cmd_sup(&load(&file)?, &elements, out),
        Command::Sections { file } => cmd_sections(&load(&file)?, out),
        Command::Census {
            order,
            filter,
            count_only,
        } => cmd_census(order, filter.as_deref(), count_only, out),
        Command::Paper {
            model,
            window,
            sizes,
            verify,
        } => match model {
            Model::Pfn => paper_pfn(sizes, verify, out),
            Model::Omega => paper_omega(window.unwrap_or(DEFAULT_WINDOW), verify, out),
            Model::Finimg => paper_finimg(window.unwrap_or(DEFAULT_CHAIN), out),
        },
        Command::Theorem { file } => cmd_theorem(&load(&file)?, out),
    }
}

fn read(path: &Path) -> Result<skewlat::FiniteSkewLattice, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_structure(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Reads and validates; an invalid structure is a precondition error here.
fn load(path: &Path) -> Result<SkewLattice, Failure> {
    Ok(read(path)?.validate()?)
}

fn line(out: &mut String, text: impl AsRef<str>) {
    out.push_str(text.as_ref());
    out.push('\n');
}

fn show(s: &SkewLattice, a: usize) -> String {
    match s.labels() {
        Some(_) => format!("{a} ({})", s.label(a)),
        None => a.to_string(),
    }
}

fn show_set(s: &SkewLattice, xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(|&x| show(s, x)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn certificate(out: &mut String, name: &str, c: &Certificate) -> bool {
    match c.witness {
        Witness::None => line(out, format!("{name}: {}", c.verdict)),
        ref w => line(out, format!("{name}: {} ({w})", c.verdict)),
    }
    c.verdict
}

fn cmd_check(path: &Path, out: &mut String) -> Outcome {
    let raw = read(path)?;
    let c = raw.validate_skew_axioms();
    if c.verdict {
        line(out, format!("skew lattice of order {}", raw.order()));
    }
    Ok(certificate(out, "axioms", &c))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_classify(s: &SkewLattice, out: &mut String) -> Outcome {
    line(out, format!("order: {}", s.order()));
    let row = |out: &mut String, name: &str, value: &str| line(out, format!("{name:<22}{value}"));
    for id in [Identity::Regular, Identity::Normal] {
        row(out, id.name(), yes(check_identity(s, id).verdict));
    }
    row(out, "symmetric", yes(check_symmetric(s).verdict));
    for id in [
        Identity::Distributive,
        Identity::StronglyDistributive,
        Identity::LeftHanded,
        Identity::RightHanded,
        Identity::Commutative,
    ] {
        row(out, id.name(), yes(check_identity(s, id).verdict));
    }
    let zero = s.zero().or_else(|| s.detect_zero());
    row(
        out,
        "zero",
        &zero.map_or_else(|| "none".to_string(), |z| show(s, z)),
    );
    row(out, "d_classes", &green_d(s).len().to_string());
    match completeness_profile(s) {
        Ok(p) => {
            for (name, v) in p.as_array() {
                row(out, name, yes(v));
            }
        }
        Err(_) => {
            for name in ["JC", "BA", "EX", "LS"] {
                row(out, name, "n/a (needs normal and symmetric)");
            }
        }
    }
    row(out, "ncframe", yes(is_ncframe(s).verdict));
    Ok(true)
}

fn cmd_quotient(s: &SkewLattice, target: Option<&Path>, out: &mut String) -> Outcome {
    let q = quotient(s)?;
    let text = emit(&q.lattice);
    match target {
        Some(path) => {
            fs::write(path, &text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            line(
                out,
                format!(
                    "wrote quotient of order {} to {}",
                    q.order(),
                    path.display()
                ),
            );
        }
        None => out.push_str(&text),
    }
    Ok(true)
}

fn cmd_sup(s: &SkewLattice, elements: &[usize], out: &mut String) -> Outcome {
    for &a in elements {
        s.check_id(a)?;
    }
    let commuting = commutation_graph(s).is_clique(elements);
    line(out, format!("subset: {}", show_set(s, elements)));
    line(out, format!("commuting: {}", yes(commuting)));
    let sup = sup_natural(s, elements)?;
    let inf = inf_natural(s, elements)?;
    let name = |x: Option<usize>| x.map_or_else(|| "none".to_string(), |x| show(s, x));
    line(out, format!("sup: {}", name(sup)));
    line(out, format!("inf: {}", name(inf)));
    Ok(sup.is_some())
}

fn cmd_sections(s: &SkewLattice, out: &mut String) -> Outcome {
    let sections = lattice_sections(s)?;
    line(out, format!("lattice sections: {}", sections.len()));
    for l in &sections {
        line(out, show_set(s, l.members()));
    }
    Ok(!sections.is_empty())
}

fn cmd_census(order: usize, filter: Option<&str>, count_only: bool, out: &mut String) -> Outcome {
    let filter: CensusFilter = filter.unwrap_or("").parse()?;
    let found = enumerate(order, &filter)?;
    if count_only {
        line(out, found.len().to_string());
        return Ok(true);
    }
    line(out, format!("# order {order}: {} structures", found.len()));
    for (i, s) in found.iter().enumerate() {
        line(out, format!("# structure {i}"));
        out.push_str(&emit(s));
    }
    Ok(true)
}

fn paper_pfn(sizes: Option<Vec<usize>>, verify: bool, out: &mut String) -> Outcome {
    let (m, b) = match sizes.as_deref() {
        None => (2, 2),
        Some(&[m, b]) => (m, b),
        Some(_) => return Err(Failure::Usage("--sizes takes two numbers, A,B".into())),
    };
    let s = build_pfn_algebra(m, b)?;
    if !verify {
        out.push_str(&emit(&s));
        return Ok(true);
    }
    line(
        out,
        format!("partial functions {m} -> {b}: order {}", s.order()),
    );
    let mut ok = certificate(out, "axioms", &s.validate_skew_axioms());
    for id in [Identity::StronglyDistributive, Identity::LeftHanded] {
        ok &= certificate(out, id.name(), &check_identity(&s, id));
    }
    let zero = s.zero() == Some(0) && s.detect_zero() == Some(0);
    line(out, format!("zero is the empty function: {zero}"));
    let q = quotient(&s)?;
    let boolean = q.order() == 1 << m && is_boolean(&q.lattice);
    line(out, format!("shadow is Boolean of order 2^{m}: {boolean}"));
    Ok(ok && zero && boolean)
}

/// Distributive and complemented.
fn is_boolean(l: &SkewLattice) -> bool {
    let bottom = l.elements().find(|&b| l.elements().all(|x| l.leq(b, x)));
    let top = l.elements().find(|&t| l.elements().all(|x| l.leq(x, t)));
    let (Some(bottom), Some(top)) = (bottom, top) else {
        return false;
    };
    check_identity(l, Identity::Distributive).verdict
        && l.elements().all(|x| {
            l.elements()
                .any(|y| l.meet(x, y) == bottom && l.join(x, y) == top)
        })
}

fn paper_omega(k: u64, verify: bool, out: &mut String) -> Outcome {
    if k == 0 {
        return Err(Failure::Usage("--window must be at least 1".into()));
    }
    let w = om_window(k);
    if !verify {
        out.push_str(&emit(&w));
        return Ok(true);
    }
    let mut ok = certificate(
        out,
        "no join of the naturals",
        &om_verify_no_join_of_naturals(k),
    );
    ok &= certificate(
        out,
        "no infimum of {inf_a, inf_b}",
        &om_verify_no_infimum_of_infs(k),
    );
    line(out, format!("window of order {}", w.order()));
    for id in [Identity::LeftHanded, Identity::StronglyDistributive] {
        ok &= certificate(out, id.name(), &check_identity(&w, id));
    }
    let zero = w.zero() == Some(0);
    line(out, format!("zero: {}", yes(zero)));
    let a = skewlat::models::om_id(k, SymbolicElement::InfA).expect("window contains inf_a");
    let b = skewlat::models::om_id(k, SymbolicElement::InfB).expect("window contains inf_b");
    let missing = commutation_graph(&w).missing_edges();
    let names: Vec<String> = missing
        .iter()
        .map(|&(x, y)| format!("({}, {})", show(&w, x), show(&w, y)))
        .collect();
    line(out, format!("non-commuting pairs: {}", names.join(" ")));
    Ok(ok && zero && missing == vec![(a, b)])
}

fn paper_finimg(k: u64, out: &mut String) -> Outcome {
    let chain = fi_one_point_chain(k)?;
    line(out, "step image_size");
    for &(step, size) in &chain {
        line(out, format!("{step} {size}"));
    }
    let increasing = chain.windows(2).all(|w| w[0].1 < w[1].1);
    let sizes_match = chain.iter().all(|&(step, size)| size as u64 == step + 1);
    line(out, format!("strictly increasing: {increasing}"));
    Ok(increasing && sizes_match)
}

fn cmd_theorem(s: &SkewLattice, out: &mut String) -> Outcome {
    let c = check_theorem_ncframes(s)?;
    Ok(certificate(
        out,
        "noncommutative frame implies frame shadow",
        &c,
    ))
}
