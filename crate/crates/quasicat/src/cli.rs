//! Command-line front end. The `quasicat` binary parses [`Cli`] and hands
//! it to [`run`].

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::homotopy::homotopy_category_with;
use crate::io::{parse_diagram, parse_monoidal, parse_sset, render_category, render_monoidal, render_sset};
use crate::join_slice::{candidates_with, final_vertices, join, slice_with, Side};
use crate::lifting::{check_kan_with, check_quasicategory_with, check_unique_inner_fillers_with, ClassificationVerdict};
use crate::monoidal::{
    build_opfib, check_algebra_section, check_opfibration, extract_symmetric, extract_tensor, is_initial_algebra,
    monoid_violations, monoidal_isomorphism, section_from_monoid, validate_monoidal, BaseKind, MonoidalCategory,
    MonoidalPresentation,
};
use crate::report::RunReport;
use crate::sset::FiniteSimplicialSet;
use crate::symmetric::{find_right_dual, matrix_category};

#[derive(Debug, Parser)]
#[command(name = "quasicat", version, about = "Finite checks for quasi-categories and monoidal encodings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Highest simplicial level examined.
    #[arg(long, global = true, default_value_t = 3)]
    pub dmax: usize,
    /// Truncation of the base for opfibration encodings.
    #[arg(long, global = true, default_value_t = 3)]
    pub nmax: usize,
    /// Enumeration budget in search nodes.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub budget: u64,
    /// Largest simplicial level size a check may touch.
    #[arg(long = "max-level", global = true, default_value_t = 200)]
    pub max_level: usize,
    /// Use the encoding over Fin instead of Δᵒᵖ.
    #[arg(long, global = true)]
    pub symmetric: bool,
    /// Where to write the constructed object, if the command builds one.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Horn-filling classification of a simplicial set.
    Classify { path: PathBuf },
    /// Homotopy category of a quasi-category.
    Ho { path: PathBuf },
    /// Join of two simplicial sets, truncated at `--dmax`.
    Join { left: PathBuf, right: PathBuf },
    /// Slice `C_{/p}` over a diagram.
    Slice { base: PathBuf, diagram: PathBuf },
    /// Limit candidates of a diagram.
    Limits { base: PathBuf, diagram: PathBuf },
    #[command(subcommand)]
    Monoidal(MonoidalCommand),
}

#[derive(Debug, Subcommand)]
pub enum MonoidalCommand {
    /// Check every monoidal (and braiding) law.
    Validate { path: PathBuf },
    /// Build the encoding and check it is an opfibration.
    BuildOpfib { path: PathBuf },
    /// Build the encoding, extract a presentation and compare.
    Extract { path: PathBuf },
    /// Check a monoid and its section.
    AlgebraCheck {
        path: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
    },
    /// Search for right duals of an object.
    DualFind {
        path: Option<PathBuf>,
        /// Use the matrix category over 𝔽₂ with objects `0..=N`.
        #[arg(long, value_name = "N")]
        matrix: Option<usize>,
        #[arg(long)]
        object: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Ho { .. } => "ho",
            Command::Join { .. } => "join",
            Command::Slice { .. } => "slice",
            Command::Limits { .. } => "limits",
            Command::Monoidal(m) => match m {
                MonoidalCommand::Validate { .. } => "monoidal validate",
                MonoidalCommand::BuildOpfib { .. } => "monoidal build-opfib",
                MonoidalCommand::Extract { .. } => "monoidal extract",
                MonoidalCommand::AlgebraCheck { .. } => "monoidal algebra-check",
                MonoidalCommand::DualFind { .. } => "monoidal dual-find",
            },
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn write_out(cli: &Cli, r: &mut RunReport, text: &str) -> Result<()> {
    if let Some(p) = &cli.out {
        fs::write(p, text).map_err(|e| Error::Invalid(format!("{}: {e}", p.display())))?;
        r.fact("written", p.display());
    }
    Ok(())
}

/// Runs one command; errors are folded into the report.
pub fn run(cli: &Cli) -> RunReport {
    let mut r = RunReport::new(cli.command.name());
    let budget = Budget::new(cli.budget, cli.max_level);
    let outcome = match &cli.command {
        Command::Classify { path } => classify(cli, &budget, path, &mut r),
        Command::Ho { path } => ho(cli, &budget, path, &mut r),
        Command::Join { left, right } => join_cmd(cli, left, right, &mut r),
        Command::Slice { base, diagram } => slice_cmd(cli, &budget, base, diagram, false, &mut r),
        Command::Limits { base, diagram } => slice_cmd(cli, &budget, base, diagram, true, &mut r),
        Command::Monoidal(m) => monoidal(cli, m, &mut r),
    };
    if let Err(e) = outcome {
        r.fail_with(&e);
    }
    r
}

fn horn_witness(x: &FiniteSimplicialSet, v: &ClassificationVerdict) -> Option<String> {
    v.failure_witness.as_ref().map(|h| format!("no filler for {}", h.render(x))).or_else(|| {
        v.multiplicity_witness.as_ref().map(|(h, a, b)| {
            format!("{} has fillers {} and {}", h.render(x), x.name(h.dim, *a), x.name(h.dim, *b))
        })
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn load_sset(path: &Path, dmax: usize) -> Result<FiniteSimplicialSet> {
    let x = parse_sset(&read(path)?)?;
    if dmax > x.trunc_dim() {
        return Err(Error::Truncation { needed: dmax, available: x.trunc_dim() });
    }
    Ok(x)
}

fn validity(x: &FiniteSimplicialSet, r: &mut RunReport) {
    let v = x.validate();
    let w = v.issues.first().map(|i| format!("{} at {}-simplex {} {:?}", i.identity, i.level, i.simplex, i.indices));
    r.verdict("simplicial identities", v.is_clean(), w);
}

fn classify(cli: &Cli, budget: &Budget, path: &Path, r: &mut RunReport) -> Result<()> {
    let x = load_sset(path, cli.dmax)?;
    validity(&x, r);
    if !r.all_pass() {
        return Ok(());
    }
    let q = check_quasicategory_with(&x, cli.dmax, budget)?;
    r.verdict("quasicategory", q.passed(), horn_witness(&x, &q));
    let k = check_kan_with(&x, cli.dmax, budget)?;
    let u = check_unique_inner_fillers_with(&x, cli.dmax, budget)?;
    r.fact("kan", yes_no(k.passed()));
    if let Some(w) = horn_witness(&x, &k) {
        r.fact("kan witness", w);
    }
    r.fact("unique inner fillers", yes_no(u.passed()));
    if let Some(w) = horn_witness(&x, &u).filter(|_| q.passed()) {
        r.fact("uniqueness witness", w);
    }
    let kinds: Vec<&str> = [(k.passed(), "kan"), (q.passed(), "quasicategory"), (u.passed(), "nerve_like")]
        .iter()
        .filter(|(b, _)| *b)
        .map(|(_, n)| *n)
        .collect();
    let label = if kinds.is_empty() { "none".to_string() } else { kinds.join(", ") };
    r.fact("classification", format!("{label} up to dim {}", cli.dmax));
    Ok(())
}

fn ho(cli: &Cli, budget: &Budget, path: &Path, r: &mut RunReport) -> Result<()> {
    let x = load_sset(path, cli.dmax)?;
    let q = check_quasicategory_with(&x, cli.dmax, budget)?;
    if !q.passed() {
        let w = horn_witness(&x, &q).unwrap_or_default();
        return Err(Error::Precondition(format!("not a quasi-category: {w}")));
    }
    r.verdict("quasicategory", true, None);
    let h = homotopy_category_with(&x, cli.dmax, budget)?;
    r.fact("objects", h.category.num_objects());
    r.fact("morphisms", h.category.num_morphisms());
    r.fact("closure needed", yes_no(h.closure_needed));
    write_out(cli, r, &render_category(&h.category))
}

fn join_cmd(cli: &Cli, left: &Path, right: &Path, r: &mut RunReport) -> Result<()> {
    let k = load_sset(left, cli.dmax)?;
    let m = load_sset(right, cli.dmax)?;
    let j = join(&k, &m, cli.dmax)?;
    validity(&j.set, r);
    r.fact("level sizes", format!("{:?}", j.set.level_sizes()));
    let nd: Vec<usize> = (0..=cli.dmax).map(|n| j.set.nondegenerate_count(n)).collect();
    r.fact("non-degenerate", format!("{nd:?}"));
    write_out(cli, r, &render_sset(&j.set))
}

fn slice_cmd(cli: &Cli, budget: &Budget, base: &Path, diagram: &Path, limits: bool, r: &mut RunReport) -> Result<()> {
    let c = parse_sset(&read(base)?)?;
    let doc = parse_diagram(&read(diagram)?)?;
    let (m, p) = doc.build(&c, c.trunc_dim())?;
    r.verdict("diagram", true, None);
    if limits {
        let cands = candidates_with(&c, &m, &p, cli.dmax, Side::Over, budget)?;
        let apexes: Vec<&str> = cands.apexes().into_iter().map(|v| c.name(0, v)).collect();
        r.fact("limit cones", format!("{:?}", cands.names()));
        r.fact("limit apexes", format!("{apexes:?}"));
        return write_out(cli, r, &render_sset(&cands.slice.set));
    }
    let s = slice_with(&c, &m, &p, cli.dmax, Side::Over, budget)?;
    validity(&s.set, r);
    r.fact("level sizes", format!("{:?}", s.set.level_sizes()));
    if cli.dmax >= 1 {
        let fin = final_vertices(&s.set, cli.dmax - 1)?;
        let names: Vec<&str> = fin.iter().map(|&v| s.set.name(0, v)).collect();
        r.fact("has final object", yes_no(!fin.is_empty()));
        r.fact("final objects", format!("{names:?}"));
    }
    write_out(cli, r, &render_sset(&s.set))
}

fn kind(cli: &Cli) -> BaseKind {
    if cli.symmetric {
        BaseKind::Fin
    } else {
        BaseKind::DeltaOp
    }
}

fn load_monoidal(path: &Path) -> Result<MonoidalPresentation> {
    parse_monoidal(&read(path)?)
}

fn named(m: &MonoidalPresentation, what: &str, name: &str) -> Result<usize> {
    match what {
        "object" => m.base.object_index(name),
        _ => m.base.morphism_index(name),
    }
    .ok_or_else(|| Error::Parse(format!("unknown {what} `{name}`")))
}

fn monoidal(cli: &Cli, cmd: &MonoidalCommand, r: &mut RunReport) -> Result<()> {
    match cmd {
        MonoidalCommand::Validate { path } => {
            let m = load_monoidal(path)?;
            let v = validate_monoidal(&m);
            r.verdict("monoidal laws", v.is_clean(), v.violations.first().map(|x| x.to_string()));
            r.fact("violations", v.violations.len());
            r.fact("braided", yes_no(m.braiding.is_some()));
        }
        MonoidalCommand::BuildOpfib { path } => {
            let m = load_monoidal(path)?;
            let p = build_opfib(&m, kind(cli), cli.nmax)?;
            let v = check_opfibration(&p);
            r.verdict("opfibration", v.holds, v.failure);
            r.fact("objects", p.objects.len());
            r.fact("base arrows", p.bases.len());
            r.fact("morphisms", p.num_morphisms());
            r.fact("lifts checked", v.lifts_checked);
        }
        MonoidalCommand::Extract { path } => {
            let m = load_monoidal(path)?;
            let p = build_opfib(&m, kind(cli), cli.nmax)?;
            let (e, target) = if cli.symmetric {
                (extract_symmetric(&p)?, m.clone())
            } else {
                (extract_tensor(&p)?, m.forget_braiding())
            };
            let iso = monoidal_isomorphism(&e, &target).is_some();
            r.verdict("monoidally isomorphic", iso, None);
            r.fact("monoidally isomorphic", yes_no(iso));
            write_out(cli, r, &render_monoidal(&e))?;
        }
        MonoidalCommand::AlgebraCheck { path, object, mu, eta } => {
            let m = load_monoidal(path)?;
            let (a, mu, eta) = (named(&m, "object", object)?, named(&m, "morphism", mu)?, named(&m, "morphism", eta)?);
            let bad = monoid_violations(&m, a, mu, eta, cli.symmetric);
            r.verdict("monoid laws", bad.is_empty(), bad.first().cloned());
            if bad.is_empty() {
                let p = build_opfib(&m, kind(cli), cli.nmax)?;
                let s = section_from_monoid(&p, a, mu, eta)?;
                let v = check_algebra_section(&p, &s);
                r.verdict("algebra section", v.holds(), v.failures.first().cloned());
                r.fact("pairs checked", v.pairs_checked);
                r.fact("inert arrows checked", v.inert_checked);
                r.fact("initial", yes_no(is_initial_algebra(&p, &s)?));
            }
        }
        MonoidalCommand::DualFind { path, matrix, object } => match (path, matrix) {
            (None, Some(d)) => {
                let m = matrix_category(2, *d)?;
                let x: usize = object.parse().map_err(|_| Error::Parse(format!("`{object}` is not a dimension")))?;
                if x > *d {
                    return Err(Error::Parse(format!("dimension {x} exceeds {d}")));
                }
                duals(&m, &x, cli.budget, r)?;
            }
            (Some(path), None) => {
                let m = load_monoidal(path)?;
                let x = named(&m, "object", object)?;
                duals(&m, &x, cli.budget, r)?;
            }
            _ => return Err(Error::Parse("give either a presentation path or --matrix".into())),
        },
    }
    Ok(())
}

fn duals<M: MonoidalCategory>(m: &M, x: &M::Obj, cap: u64, r: &mut RunReport) -> Result<()> {
    let found = find_right_dual(m, x, usize::try_from(cap).unwrap_or(usize::MAX))?;
    r.verdict("dual exists", !found.is_empty(), None);
    r.fact("witnesses", found.len());
    for w in &found {
        r.fact("witness", format!("Y = {}, η = {}, ε = {}", m.obj_name(&w.y), m.mor_name(&w.eta), m.mor_name(&w.eps)));
    }
    Ok(())
}
