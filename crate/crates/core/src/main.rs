use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use grasscoh::admissible::{enumerate_admissible, hat};
use grasscoh::bott::oracle_table;
use grasscoh::bounds::{bracket_pair_bound, BoundInput};
use grasscoh::degeneracy::{resolution_terms, rho, verify_tables};
use grasscoh::extremal::{brute_force_pmax, maximize};
use grasscoh::flag::{envelopes, product_flag_cohomology, single_flag_cohomology, FlagFactor};
use grasscoh::grassmann::{cohomology_table, CohomologyTable};
use grasscoh::verify::{run_suite, SuiteReport, SUITES};
use grasscoh::{Error, Partition};

#[derive(Parser)]
#[command(name = "grasscoh", version, about = "Partition combinatorics and line-bundle cohomology on Grassmannians and flags")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Ascii, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Ascii,
}

#[derive(Subcommand)]
enum Command {
    /// Hook numbers of a partition, one row per line.
    Hooks {
        partition: Partition,
        /// Draw the Young diagram with the hook number in each cell.
        #[arg(long)]
        diagram: bool,
    },
    /// Enumerate the l-admissible partitions with at most r rows.
    Admissible {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        l: usize,
        /// Keep only partitions with first part at most this.
        #[arg(long)]
        width: Option<usize>,
    },
    /// The admissible partition attached to a partition in the (l−1)×r box.
    Hat {
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        r: usize,
    },
    /// Cohomology table of Λ^p Ω ⊗ O(l) on G(r, e).
    Cohomology {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        l: usize,
        /// Recompute with Borel–Weil–Bott and fail on any difference.
        #[arg(long)]
        oracle: bool,
    },
    /// Largest p with a nonzero group, via the extremal families.
    Pmax {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        /// Cross-check against exhaustive search of the box.
        #[arg(long)]
        brute: bool,
    },
    /// Vanishing bounds.
    Bounds {
        #[command(subcommand)]
        which: BoundsCommand,
    },
    /// Cohomology of line bundles on products of two-step flag varieties.
    Flag {
        #[arg(long)]
        r: u64,
        /// Comma-separated `s:l` pairs.
        #[arg(long, value_delimiter = ',', value_parser = parse_factor)]
        factors: Vec<FlagFactor>,
        #[arg(long)]
        e: u64,
        #[arg(long, requires = "q")]
        p: Option<u64>,
        #[arg(long, requires = "p")]
        q: Option<u64>,
    },
    /// Terms of the resolution of a symmetric degeneracy locus.
    Resolution {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        k: usize,
        /// Only this term; otherwise all terms up to t(e−k).
        #[arg(long)]
        i: Option<usize>,
    },
    /// ρ = n − t(e−k).
    Rho {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        e: u64,
        #[arg(long)]
        k: u64,
    },
    /// Run property suites; exit 0 iff all pass.
    Verify {
        /// One suite by name; all suites when omitted.
        suite: Option<String>,
        /// Audit this threshold table file instead of the shipped one.
        #[arg(long)]
        tables: Option<std::path::PathBuf>,
    },
}

#[derive(Args)]
struct BoundShared {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    sigma: u64,
    #[arg(long)]
    a: u64,
    #[arg(long)]
    e: u64,
    #[arg(long)]
    k: u64,
}

impl BoundShared {
    fn input(&self) -> BoundInput {
        BoundInput::new(self.n, self.sigma, self.a, self.e, self.k)
    }
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// Largest q with H^{p,q} possibly nonzero.
    Q {
        #[command(flatten)]
        shared: BoundShared,
        #[arg(long)]
        p: u64,
    },
    /// Largest p with H^{p,q} possibly nonzero.
    P {
        #[command(flatten)]
        shared: BoundShared,
        #[arg(long)]
        q: u64,
    },
    /// Whether the combined criterion forces H^{p,q} = 0.
    Combined {
        #[command(flatten)]
        shared: BoundShared,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// Bound for a pair of rank-two bracket powers.
    Bracket {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        s: u64,
    },
}

fn parse_factor(text: &str) -> Result<FlagFactor, String> {
    FlagFactor::parse(text).map_err(|e| e.to_string())
}

/// A command result: JSON payload, table rows for tsv/ascii, and an exit status.
struct Output {
    json: Value,
    rows: Vec<Vec<String>>,
    /// Replaces the ascii rendering when set.
    ascii: Option<String>,
    failed: bool,
}

impl Output {
    fn new(json: Value, rows: Vec<Vec<String>>) -> Self {
        Output {
            json,
            rows,
            ascii: None,
            failed: false,
        }
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Tsv => self.rows.iter().map(|r| r.join("\t") + "\n").collect(),
            Format::Ascii => self.ascii.clone().unwrap_or_else(|| align(&self.rows)),
        }
    }
}

/// Pads columns to a common width. Single-cell rows are notes and do not widen the columns.
fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().filter(|r| r.len() > 1).filter_map(|r| r.get(j)).map(|c| c.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, c)| format!("{c:<w$}", w = widths[j]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn list<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn hooks(lambda: &Partition, diagram: bool) -> Output {
    let table = lambda.hook_table();
    let rows: Vec<Vec<String>> = table
        .iter()
        .map(|r| r.iter().map(usize::to_string).collect())
        .collect();
    let mut out = Output::new(json!({ "partition": lambda, "hooks": table }), rows);
    out.ascii = Some(out.rows.iter().map(|r| r.join(" ") + "\n").collect());
    if diagram {
        let width = table.iter().flatten().map(|h| h.to_string().len()).max().unwrap_or(1);
        let mut s = String::new();
        for r in &table {
            for h in r {
                s.push_str(&format!("[{h:>width$}]"));
            }
            s.push('\n');
        }
        out.ascii = Some(s);
    }
    out
}

fn admissible(r: usize, l: usize, width: Option<usize>) -> Result<Output, Error> {
    let records: Vec<_> = enumerate_admissible(r, l, width)?.collect();
    let mut rows = vec![vec!["lambda".into(), "h_minus".into(), "v_minus".into(), "p".into(), "q".into()]];
    for rec in &records {
        rows.push(vec![
            rec.lambda.to_string(),
            list(&rec.h_minus),
            list(&rec.v_minus),
            rec.p.to_string(),
            rec.q.to_string(),
        ]);
    }
    Ok(Output::new(json!({ "r": r, "l": l, "width": width, "records": records }), rows))
}

fn table_json(t: &CohomologyTable) -> Value {
    let groups: Vec<Value> = t
        .entries
        .iter()
        .map(|(&(p, q), comps)| {
            let weights: Vec<&Vec<i64>> = comps.iter().map(|c| &c.weight).collect();
            let lambda: Vec<&Partition> = comps.iter().map(|c| &c.source).collect();
            json!({ "p": p, "q": q, "weights": weights, "lambda": lambda })
        })
        .collect();
    json!({ "r": t.r, "e": t.e, "l": t.l, "groups": groups })
}

fn table_rows(t: &CohomologyTable) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["p".into(), "q".into(), "weight".into(), "lambda".into()]];
    for (&(p, q), comps) in &t.entries {
        for c in comps {
            rows.push(vec![p.to_string(), q.to_string(), list(&c.weight), c.source.to_string()]);
        }
    }
    rows
}

fn cohomology(r: usize, e: usize, l: usize, oracle: bool) -> Result<Output, Error> {
    let table = cohomology_table(r, e, l)?;
    let mut json = table_json(&table);
    let mut rows = table_rows(&table);
    let mut failed = false;
    if oracle {
        let other = oracle_table(r, e, l)?;
        let diff = table.diff(&other);
        failed = !table.same_weights(&other);
        let mismatches: Vec<Value> = diff
            .iter()
            .map(|(pq, mine, theirs)| json!({ "p": pq.0, "q": pq.1, "table": mine, "oracle": theirs }))
            .collect();
        json["oracle_agrees"] = json!(!failed);
        json["mismatches"] = json!(mismatches);
        rows.push(vec![if failed { "oracle: MISMATCH" } else { "oracle: agrees" }.into()]);
        for (pq, mine, theirs) in &diff {
            rows.push(vec![format!("({},{}) table {mine:?} oracle {theirs:?}", pq.0, pq.1)]);
        }
    }
    Ok(Output {
        failed,
        ..Output::new(json, rows)
    })
}

fn pmax(r: usize, n: usize, l: usize, brute: bool) -> Result<Output, Error> {
    let m = maximize(r, n, l)?;
    let mut json = serde_json::to_value(&m).expect("values serialize");
    let p = m.params;
    let mut rows = vec![
        vec!["pmax".into(), m.pmax.to_string()],
        vec!["lambda".into(), m.lambda.to_string()],
        vec!["nu".into(), list(&m.nu)],
        vec![
            "params".into(),
            format!("a={} alpha={} beta={} c={} gamma={}", p.a, p.alpha, p.beta, p.c, p.gamma),
        ],
    ];
    let mut failed = false;
    if brute {
        let b = brute_force_pmax(r, n, l)?;
        failed = b != m.pmax;
        json["brute"] = json!(b);
        rows.push(vec!["brute".into(), b.to_string()]);
    }
    Ok(Output {
        failed,
        ..Output::new(json, rows)
    })
}

fn bounds(which: &BoundsCommand) -> Result<Output, Error> {
    Ok(match which {
        BoundsCommand::Q { shared, p } => {
            let v = shared.input().bound_q(*p)?;
            Output::new(json!({ "input": shared.input(), "p": p, "bound_q": v }), vec![vec![v.to_string()]])
        }
        BoundsCommand::P { shared, q } => {
            let v = shared.input().bound_p(*q)?;
            Output::new(json!({ "input": shared.input(), "q": q, "bound_p": v }), vec![vec![v.to_string()]])
        }
        BoundsCommand::Combined { shared, p, q } => {
            let v = shared.input().vanishes(*p, *q);
            Output::new(
                json!({ "input": shared.input(), "p": p, "q": q, "vanishes": v }),
                vec![vec![if v { "vanishes" } else { "undecided" }.into()]],
            )
        }
        BoundsCommand::Bracket { a, b, c, d, r, s } => {
            let v = bracket_pair_bound(*a, *b, *c, *d, *r, *s)?;
            Output::new(
                json!({ "a": a, "b": b, "c": c, "d": d, "r": r, "s": s, "bound": v }),
                vec![vec![v.to_string()]],
            )
        }
    })
}

fn flag(r: u64, factors: &[FlagFactor], e: u64, pq: Option<(u64, u64)>) -> Result<Output, Error> {
    let (pm, qm) = envelopes(r, factors)?;
    let mut rows = vec![vec!["P_max".into(), pm.to_string()], vec!["Q_max".into(), qm.to_string()]];
    let mut json = json!({ "r": r, "e": e, "factors": factors, "p_max": pm, "q_max": qm });
    let grid: Vec<(u64, u64)> = match pq {
        Some(x) => vec![x],
        None => (0..=pm).flat_map(|p| (0..=qm).map(move |q| (p, q))).collect(),
    };
    let mut groups = Vec::new();
    for (p, q) in grid {
        let entry = match product_flag_cohomology(e, r, factors, p, q) {
            Ok(x) => x,
            Err(Error::OutsideValidity { .. }) if pq.is_none() => continue,
            Err(err) => return Err(err),
        };
        let Some(entry) = entry else { continue };
        let mut g = json!({ "p": p, "q": q, "sigma": entry.sigma,
            "multiplicity": entry.multiplicity, "splittings": entry.splittings });
        if let [f] = factors {
            g["single"] = json!(single_flag_cohomology(e, r, f.s, f.l, p, q)?);
        }
        rows.push(vec![
            format!("({p},{q})"),
            format!("sigma={}", entry.sigma),
            format!("mult={}", entry.multiplicity),
            entry.splittings.iter().map(|s| format!("[{}]", list(s))).collect::<Vec<_>>().join(" "),
        ]);
        groups.push(g);
    }
    json["groups"] = json!(groups);
    Ok(Output::new(json, rows))
}

fn resolution(e: usize, k: usize, i: Option<usize>) -> Result<Output, Error> {
    let range = match i {
        Some(i) => i..=i,
        None => {
            if k >= e {
                return Err(Error::InvalidParameter(format!("need k < e, got k={k}, e={e}")));
            }
            0..=(e - k) * (e - k + 1) / 2
        }
    };
    let mut terms = Vec::new();
    for i in range {
        terms.extend(resolution_terms(e, k, i)?);
    }
    let mut rows = vec![vec!["i".into(), "lambda".into(), "twist".into()]];
    for t in &terms {
        rows.push(vec![t.i.to_string(), t.lambda.to_string(), t.twist.to_string()]);
    }
    Ok(Output::new(json!({ "e": e, "k": k, "terms": terms }), rows))
}

fn verify(suite: Option<&str>, tables: Option<&std::path::Path>) -> Result<Output, Error> {
    let mut reports: Vec<SuiteReport> = Vec::new();
    if let Some(path) = tables {
        if suite.is_some_and(|s| s != "tables") {
            return Err(Error::InvalidParameter("--tables only applies to the tables suite".into()));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
        let rows = verify_tables(Some(&text))?;
        let failing: Vec<String> = rows
            .iter()
            .filter(|r| !r.passed())
            .map(|r| format!("line {} ({}): {}", r.line, r.partition, r.failures.join("; ")))
            .collect();
        reports.push(SuiteReport {
            name: "tables",
            checked: rows.len() as u64,
            failed: failing.len() as u64,
            witnesses: failing,
        });
    } else {
        let names: Vec<&str> = match suite {
            Some(s) => vec![s],
            None => SUITES.to_vec(),
        };
        for name in names {
            let rep = run_suite(name).ok_or_else(|| {
                Error::InvalidParameter(format!("unknown suite `{name}`; known: {}", SUITES.join(", ")))
            })?;
            reports.push(rep);
        }
    }
    let mut rows = Vec::new();
    for rep in &reports {
        let status = if rep.passed() { "PASS" } else { "FAIL" };
        rows.push(vec![status.into(), rep.name.into(), format!("{} checked", rep.checked), format!("{} failed", rep.failed)]);
        for w in &rep.witnesses {
            rows.push(vec![format!("  {w}")]);
        }
    }
    let failed = reports.iter().any(|r| !r.passed());
    Ok(Output {
        failed,
        ..Output::new(json!({ "suites": reports, "passed": !failed }), rows)
    })
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Hooks { partition, diagram } => Ok(hooks(partition, *diagram)),
        Command::Admissible { r, l, width } => admissible(*r, *l, *width),
        Command::Hat { nu, l, r } => {
            if nu.len() > *r {
                return Err(Error::TooLong {
                    partition: nu.clone(),
                    length: nu.len(),
                    limit: *r,
                });
            }
            let lambda = hat(&nu.padded(*r), *l, *r)?;
            Ok(Output::new(json!({ "nu": nu, "l": l, "r": r, "lambda": lambda }), vec![vec![lambda.to_string()]]))
        }
        Command::Cohomology { r, e, l, oracle } => cohomology(*r, *e, *l, *oracle),
        Command::Pmax { r, n, l, brute } => pmax(*r, *n, *l, *brute),
        Command::Bounds { which } => bounds(which),
        Command::Flag { r, factors, e, p, q } => flag(*r, factors, *e, p.zip(*q)),
        Command::Resolution { e, k, i } => resolution(*e, *k, *i),
        Command::Rho { n, e, k } => {
            let v = rho(*n, *e, *k)?;
            Ok(Output::new(json!({ "n": n, "e": e, "k": k, "rho": v }), vec![vec![v.to_string()]]))
        }
        Command::Verify { suite, tables } => verify(suite.as_deref(), tables.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.format));
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
