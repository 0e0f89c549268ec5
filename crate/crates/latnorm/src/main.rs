use std::error::Error;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use latnorm::analysis::{classify, find_forbidden_1_sublattice, Verdict, Witness};
use latnorm::io::dot::write_dot;
use latnorm::io::lat::{parse_lattice, write_lattice};
use latnorm::io::report as rpt;
use latnorm::io::table::{parse_table, write_table};
use latnorm::lattice::FiniteLattice;
use latnorm::search::{
    enumerate_lattices, run_law_suite, search_tables, EnumFilters, LawScope, SearchConfig,
    SearchOutcome, SearchStatus, DEFAULT_NODE_BUDGET,
};
use latnorm::tnorm::{
    check_associative, check_boundary, check_below_meet, check_commutative,
    check_join_distributive, check_meet_distributive, check_monotone, check_neutral,
    construct_planar, t_meet, t_weakest, verify_left_continuous, verify_right_continuous,
    verify_tnorm, OpTable,
};
use latnorm::corpus;

#[derive(Parser)]
#[command(name = "latnorm", version, about = "Finite lattices and t-norm-style tables")]
struct Cli {
    /// Worker threads for the law suite and enumeration filtering.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the structure of a lattice file.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Look for a forbidden sublattice through the top (exit 1 when found).
    Forbidden {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Search for commutative join-distributive pseudo-t-norms.
    Search {
        file: PathBuf,
        /// Require associativity and a neutral top (full t-norms).
        #[arg(long)]
        tnorm: bool,
        /// Collect every solution instead of stopping at the first.
        #[arg(long)]
        all: bool,
        /// Stop after this many solutions.
        #[arg(long, conflicts_with = "all")]
        limit: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        /// Explore the non-commutative space instead (budgeted).
        #[arg(long)]
        non_commutative: bool,
        /// Write the first solution as CSV here.
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Build a table by a named construction.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Verify table laws against a lattice (exit 1 on any failure).
    Verify {
        file: PathBuf,
        table: PathBuf,
        /// Check one specific law instead of the full battery.
        #[arg(long)]
        law: Option<LawArg>,
        #[arg(long)]
        json: bool,
    },
    /// Stack two lattice files into a sum.
    Sum {
        /// New bridge edge between the parts.
        #[arg(long, conflicts_with = "glued")]
        ordinal: bool,
        /// Identify the lower top with the upper bottom.
        #[arg(long)]
        glued: bool,
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Direct product of two lattice files.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Double an element inside a covering square.
    Eye {
        file: PathBuf,
        /// The covering square as `lo,x,y,hi`.
        #[arg(long)]
        square: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Enumerate all lattices of one size up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        modular: bool,
        #[arg(long)]
        atomistic: bool,
        #[arg(long)]
        distributive: bool,
        /// Write each lattice into this directory.
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// The built-in reference corpus.
    Corpus {
        #[command(subcommand)]
        what: CorpusCmd,
    },
    /// Cross-check the structural theory against the searches
    /// (exit 1 on any counterexample).
    Laws {
        /// Run over the built-in corpus (the default).
        #[arg(long, conflicts_with = "enumerated")]
        corpus: bool,
        /// Run over all lattices with this many elements instead.
        #[arg(long)]
        enumerated: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Render the covering diagram as Graphviz.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Comma-separated labels to highlight.
        #[arg(long)]
        highlight: Option<String>,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Table from two doubly irreducible anchors spanning a product
    /// interval (exit 2 when the preconditions fail).
    Planar {
        file: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The meet table.
    Meet {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The weakest t-norm table.
    Weakest {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// Names, sizes and descriptions of every entry.
    List,
    /// Print one entry as a lattice file.
    Show { name: String },
    /// Write every entry as a lattice file into a directory.
    Export { dir: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum LawArg {
    Boundary,
    Monotone,
    Commutative,
    BelowMeet,
    Neutral,
    Associative,
    JoinDistributive,
    MeetDistributive,
    LeftContinuous,
    RightContinuous,
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`latnorm ... | head`) like other Unix
    // filters instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type AnyError = Box<dyn Error>;

fn load_lattice(path: &Path) -> Result<(String, FiniteLattice), AnyError> {
    let text = fs::read_to_string(path)?;
    let l = parse_lattice(&text)?;
    Ok((text, l))
}

fn resolve_label(l: &FiniteLattice, label: &str) -> Result<usize, AnyError> {
    l.index_of(label)
        .ok_or_else(|| format!("no element labelled `{label}`").into())
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), AnyError> {
    match out {
        Some(path) => fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn yes_no(l: &FiniteLattice, v: &Verdict) -> String {
    match (&v.holds, &v.witness) {
        (true, _) => "yes".to_string(),
        (false, None) => "no".to_string(),
        (false, Some(w)) => format!("no  ({})", witness_line(l, w)),
    }
}

fn witness_line(l: &FiniteLattice, w: &Witness) -> String {
    format!("{}: {} at {}", w.law, w.note, l.tuple(&w.elements))
}

fn run(cli: Cli) -> Result<ExitCode, AnyError> {
    let threads = cli.threads;
    match cli.command {
        Command::Check { file, json } => {
            let (text, l) = load_lattice(&file)?;
            let report = classify(&l);
            if json {
                let env = rpt::envelope("check", text.as_bytes(), rpt::classification_dto(&l, &report));
                println!("{}", serde_json::to_string_pretty(&env)?);
            } else {
                let names = |xs: &[usize]| {
                    xs.iter().map(|&x| l.label(x)).collect::<Vec<_>>().join(" ")
                };
                println!("elements: {}  bottom: {}  top: {}", l.n(), l.label(l.bottom()), l.label(l.top()));
                println!("atoms: {}", names(&report.classes.atoms));
                println!("join-irreducible: {}", names(&report.classes.join_irr));
                println!("meet-irreducible: {}", names(&report.classes.meet_irr));
                println!("doubly irreducible: {}", names(&report.classes.bi_irr));
                println!("1-distributive elements: {}", names(&report.one_distributive_elements));
                println!("modular: {}", yes_no(&l, &report.modular));
                println!("distributive: {}", yes_no(&l, &report.distributive));
                println!("1-distributive: {}", yes_no(&l, &report.one_distributive));
                println!("atomistic: {}", yes_no(&l, &report.atomistic));
                println!("complemented: {}", yes_no(&l, &report.complemented));
                println!("boolean: {}", yes_no(&l, &report.boolean));
                match report.rectangular {
                    Some((a, b)) => println!("rectangular pair: {} {}", l.label(a), l.label(b)),
                    None => println!("rectangular pair: none"),
                }
                match &report.forbidden_1_sublattice {
                    Some(w) => println!("forbidden 1-sublattice: {}", witness_line(&l, w)),
                    None => println!("forbidden 1-sublattice: none"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Forbidden { file, json } => {
            let (text, l) = load_lattice(&file)?;
            let found = find_forbidden_1_sublattice(&l);
            if json {
                let dto = found.as_ref().map(|w| rpt::witness_dto(&l, w));
                let env = rpt::envelope("forbidden", text.as_bytes(), dto);
                println!("{}", serde_json::to_string_pretty(&env)?);
            } else {
                match &found {
                    Some(w) => println!("forbidden 1-sublattice: {}", witness_line(&l, w)),
                    None => println!("forbidden 1-sublattice: none"),
                }
            }
            Ok(if found.is_some() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Search {
            file,
            tnorm,
            all,
            limit,
            node_budget,
            non_commutative,
            out,
            json,
        } => {
            let (text, l) = load_lattice(&file)?;
            let config = SearchConfig {
                require_associative: tnorm,
                require_commutative: !non_commutative,
                solution_limit: if all { usize::MAX } else { limit.unwrap_or(1) },
                node_budget,
            };
            let outcome = search_tables(&l, &config);
            if let (Some(path), Some(t)) = (out.as_deref(), outcome.solutions.first()) {
                fs::write(path, write_table(&l, t))?;
            }
            if json {
                let env = rpt::envelope("search", text.as_bytes(), rpt::search_dto(&l, &outcome));
                println!("{}", serde_json::to_string_pretty(&env)?);
            } else {
                print_search(&l, &outcome);
            }
            Ok(search_exit(&outcome))
        }
        Command::Construct { what } => match what {
            ConstructCmd::Planar { file, a, b, out } => {
                let (_, l) = load_lattice(&file)?;
                let ai = resolve_label(&l, &a)?;
                let bi = resolve_label(&l, &b)?;
                let t = construct_planar(&l, ai, bi)?;
                emit(out.as_deref(), &write_table(&l, &t))?;
                Ok(ExitCode::SUCCESS)
            }
            ConstructCmd::Meet { file, out } => {
                let (_, l) = load_lattice(&file)?;
                emit(out.as_deref(), &write_table(&l, &t_meet(&l)))?;
                Ok(ExitCode::SUCCESS)
            }
            ConstructCmd::Weakest { file, out } => {
                let (_, l) = load_lattice(&file)?;
                emit(out.as_deref(), &write_table(&l, &t_weakest(&l)))?;
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Verify {
            file,
            table,
            law,
            json,
        } => {
            let (ltext, l) = load_lattice(&file)?;
            let ttext = fs::read_to_string(&table)?;
            let t = parse_table(&l, &ttext)?;
            let mut input = ltext.into_bytes();
            input.extend_from_slice(ttext.as_bytes());
            verify_command(&l, &t, law, json, &input)
        }
        Command::Sum {
            ordinal,
            glued,
            a,
            b,
            out,
        } => {
            if ordinal == glued {
                return Err("pass exactly one of --ordinal / --glued".into());
            }
            let (_, la) = load_lattice(&a)?;
            let (_, lb) = load_lattice(&b)?;
            let sum = if ordinal {
                la.ordinal_sum(&lb)
            } else {
                la.glued_sum(&lb)
            };
            emit(out.as_deref(), &write_lattice(&sum))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Product { a, b, out } => {
            let (_, la) = load_lattice(&a)?;
            let (_, lb) = load_lattice(&b)?;
            emit(out.as_deref(), &write_lattice(&la.direct_product(&lb)))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Eye { file, square, out } => {
            let (_, l) = load_lattice(&file)?;
            let parts: Vec<&str> = square.split(',').collect();
            let [lo, x, y, hi] = parts[..] else {
                return Err("--square needs four comma-separated labels: lo,x,y,hi".into());
            };
            let square = (
                resolve_label(&l, lo)?,
                resolve_label(&l, x)?,
                resolve_label(&l, y)?,
                resolve_label(&l, hi)?,
            );
            emit(out.as_deref(), &write_lattice(&l.add_eye(square)?))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            n,
            modular,
            atomistic,
            distributive,
            out,
            json,
        } => {
            let filters = EnumFilters {
                modular,
                atomistic,
                distributive,
            };
            let found = enumerate_lattices(n, filters, threads)?;
            let mut names = Vec::new();
            if let Some(dir) = out.as_deref() {
                fs::create_dir_all(dir)?;
                for (i, l) in found.iter().enumerate() {
                    let name = format!("lat_{n}_{i:03}.lat");
                    fs::write(dir.join(&name), write_lattice(l))?;
                    names.push(name);
                }
            }
            if json {
                #[derive(serde::Serialize)]
                struct EnumerateDto {
                    n: usize,
                    count: usize,
                    files: Vec<String>,
                }
                let env = rpt::envelope(
                    "enumerate",
                    n.to_string().as_bytes(),
                    EnumerateDto {
                        n,
                        count: found.len(),
                        files: names,
                    },
                );
                println!("{}", serde_json::to_string_pretty(&env)?);
            } else {
                println!("lattices with {n} elements: {}", found.len());
                for name in &names {
                    println!("wrote {name}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus { what } => match what {
            CorpusCmd::List => {
                for e in corpus::entries() {
                    let l = e.build();
                    println!("{} (n={}): {}", e.name, l.n(), e.provenance);
                }
                Ok(ExitCode::SUCCESS)
            }
            CorpusCmd::Show { name } => {
                let entry = corpus::by_name(&name).ok_or_else(|| {
                    let known: Vec<&str> = corpus::entries().iter().map(|e| e.name).collect();
                    format!("no corpus entry `{name}`; known: {}", known.join(" "))
                })?;
                print!("{}", write_lattice(&entry.build()));
                Ok(ExitCode::SUCCESS)
            }
            CorpusCmd::Export { dir } => {
                fs::create_dir_all(&dir)?;
                for e in corpus::entries() {
                    fs::write(dir.join(format!("{}.lat", e.name)), write_lattice(&e.build()))?;
                }
                println!("wrote {} lattice files to {}", corpus::entries().len(), dir.display());
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Laws {
            corpus: _,
            enumerated,
            json,
        } => {
            let scope = match enumerated {
                Some(n) => LawScope::Enumerated(n),
                None => LawScope::Corpus,
            };
            let report = run_law_suite(scope, threads)?;
            if json {
                let input = match enumerated {
                    Some(n) => format!("enumerated:{n}"),
                    None => "corpus".to_string(),
                };
                let env = rpt::envelope("laws", input.as_bytes(), rpt::law_suite_dto(&report));
                println!("{}", serde_json::to_string_pretty(&env)?);
            } else {
                print_law_suite(&report);
            }
            Ok(if report.counterexamples.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Render {
            file,
            out,
            highlight,
        } => {
            let (_, l) = load_lattice(&file)?;
            let marks = match highlight.as_deref() {
                Some(spec) => spec
                    .split(',')
                    .map(|s| resolve_label(&l, s.trim()))
                    .collect::<Result<Vec<_>, _>>()?,
                None => Vec::new(),
            };
            emit(out.as_deref(), &write_dot(&l, &marks))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn search_exit(outcome: &SearchOutcome) -> ExitCode {
    match outcome.status {
        SearchStatus::Found => ExitCode::SUCCESS,
        SearchStatus::ExhaustedNone => ExitCode::from(1),
        SearchStatus::BudgetExceeded => ExitCode::from(3),
    }
}

fn print_search(l: &FiniteLattice, outcome: &SearchOutcome) {
    let status = match outcome.status {
        SearchStatus::Found => "found",
        SearchStatus::ExhaustedNone => "exhausted, no solution",
        SearchStatus::BudgetExceeded => "node budget exceeded",
    };
    println!(
        "status: {status}  solutions: {}  nodes: {}",
        outcome.solutions.len(),
        outcome.nodes_explored
    );
    if let Some(t) = outcome.solutions.first() {
        print!("{}", write_table(l, t));
    }
}

fn verify_command(
    l: &FiniteLattice,
    t: &OpTable,
    law: Option<LawArg>,
    json: bool,
    input: &[u8],
) -> Result<ExitCode, AnyError> {
    if let Some(law) = law {
        let verdict = match law {
            LawArg::Boundary => check_boundary(l, t),
            LawArg::Monotone => check_monotone(l, t),
            LawArg::Commutative => check_commutative(l, t),
            LawArg::BelowMeet => check_below_meet(l, t),
            LawArg::Neutral => check_neutral(l, t),
            LawArg::Associative => check_associative(l, t),
            LawArg::JoinDistributive => check_join_distributive(l, t),
            LawArg::MeetDistributive => check_meet_distributive(l, t),
            LawArg::LeftContinuous => return continuity_command(l, t, true, json, input),
            LawArg::RightContinuous => return continuity_command(l, t, false, json, input),
        };
        if json {
            let env = rpt::envelope("verify-law", input, rpt::verdict_dto(l, &verdict));
            println!("{}", serde_json::to_string_pretty(&env)?);
        } else {
            print_verdict(l, &verdict);
        }
        return Ok(pass_fail(verdict.holds));
    }
    let report = verify_tnorm(l, t)?;
    let all = report.all_pass();
    if json {
        let env = rpt::envelope("verify", input, rpt::verification_dto(l, &report));
        println!("{}", serde_json::to_string_pretty(&env)?);
    } else {
        let line = |name: &str, v: &Verdict| match &v.witness {
            None if v.holds => println!("{name}: pass"),
            Some(w) if !v.holds => println!("{name}: fail  ({})", witness_line(l, w)),
            _ => println!("{name}: {}", if v.holds { "pass" } else { "fail" }),
        };
        line("boundary", &report.boundary);
        line("monotone", &report.monotone);
        line("commutative", &report.commutative);
        line("below-meet", &report.below_meet);
        if let Some(v) = &report.neutral {
            line("neutral", v);
        }
        if let Some(v) = &report.associative {
            line("associative", v);
        }
    }
    Ok(pass_fail(all))
}

fn continuity_command(
    l: &FiniteLattice,
    t: &OpTable,
    left: bool,
    json: bool,
    input: &[u8],
) -> Result<ExitCode, AnyError> {
    let report = if left {
        verify_left_continuous(l, t)?
    } else {
        verify_right_continuous(l, t)?
    };
    if json {
        let kind = if left {
            "verify-left-continuous"
        } else {
            "verify-right-continuous"
        };
        let env = rpt::envelope(kind, input, rpt::continuity_dto(l, &report));
        println!("{}", serde_json::to_string_pretty(&env)?);
    } else {
        print_verdict(l, &report.pairwise);
        match &report.subset {
            Some(v) => print_verdict(l, v),
            None => println!("subset sweep skipped: lattice too large"),
        }
    }
    Ok(pass_fail(report.holds()))
}

fn pass_fail(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_verdict(l: &FiniteLattice, v: &Verdict) {
    match &v.witness {
        Some(w) if !v.holds => println!("fail  ({})", witness_line(l, w)),
        _ => println!("{}", if v.holds { "pass" } else { "fail" }),
    }
}

fn print_law_suite(report: &latnorm::search::LawSuiteReport) {
    let flag = |b: bool| if b { "yes" } else { "no" };
    let opt = |o: Option<bool>| match o {
        Some(true) => "yes",
        Some(false) => "no",
        None => "?",
    };
    println!(
        "{:<10} {:>3} {:>7} {:>7} {:>8} {:>9} {:>7} {:>10} {:>7} {:>6}",
        "name", "n", "modular", "distrib", "1-distr", "atomistic", "boolean", "forbidden", "pseudo", "tnorm"
    );
    for r in &report.rows {
        println!(
            "{:<10} {:>3} {:>7} {:>7} {:>8} {:>9} {:>7} {:>10} {:>7} {:>6}",
            r.name,
            r.n,
            flag(r.modular),
            flag(r.distributive),
            flag(r.one_distributive),
            flag(r.atomistic),
            flag(r.boolean),
            r.forbidden.as_deref().unwrap_or("none"),
            opt(r.pseudo_found),
            opt(r.tnorm_found),
        );
    }
    println!();
    for p in &report.pair_checks {
        println!(
            "{} atop {}: ordinal-sum lc t-norm {} (upper alone: {}); 1-distributive glued/ordinal/upper {}/{}/{}",
            p.upper,
            p.lower,
            opt(p.ordinal_has_lc_tnorm),
            opt(p.upper_has_lc_tnorm),
            flag(p.glued_one_distributive),
            flag(p.ordinal_one_distributive),
            flag(p.upper_one_distributive)
        );
    }
    println!();
    match &report.converse_witness {
        Some(name) => println!("1-distributive without any pseudo-t-norm: {name}"),
        None => println!("1-distributive without any pseudo-t-norm: none in scope"),
    }
    if report.counterexamples.is_empty() {
        println!("counterexamples: none");
    } else {
        for c in &report.counterexamples {
            println!("counterexample: {c}");
        }
    }
}
