use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ndtopo::alkane::{enumerate_alkanes, write_alkane};
use ndtopo::bounds::random_graph_suite;
use ndtopo::dataset::{self, index_table, load_builtin, load_csv, Dataset};
use ndtopo::degeneracy::{sensitivity_table, DEFAULT_TOLERANCE};
use ndtopo::format::format_sig;
use ndtopo::indices::{compute_all, parse_index_list, IndexKind};
use ndtopo::stats::{correlation_graph, correlation_matrix};
use ndtopo::{parse_alkane, Error, MolGraph};

/// Neighborhood degree sum indices for alkanes.
#[derive(Parser)]
#[command(name = "ndtopo", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Significant digits for floating point output
    #[arg(long, global = true, default_value_t = 6)]
    precision: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Index values per compound (dataset) or for a single structure
    Indices {
        /// Built-in name (octane, alkanes) or a CSV file
        #[arg(long, conflicts_with_all = ["smiles", "graph"])]
        dataset: Option<String>,
        /// A single carbon skeleton, e.g. CC(C)C
        #[arg(long, conflicts_with = "graph")]
        smiles: Option<String>,
        /// Edge-list file (`n m` header, then `u v` lines)
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Comma separated index names, or all / nd / classic
        #[arg(long, default_value = "nd", value_parser = index_list)]
        indices: IndexList,
        #[command(flatten)]
        output: Output,
    },
    /// Simple linear regression of a property on an index
    Regress {
        #[arg(long)]
        dataset: String,
        #[arg(long, value_parser = index_kind)]
        x: IndexKind,
        #[arg(long)]
        y: String,
        #[command(flatten)]
        output: Output,
    },
    /// Pearson correlation matrix between indices, then the threshold graph
    Correlate {
        /// Built-in name (octane, alkanes) or a CSV file
        #[arg(long, conflicts_with = "isomers")]
        dataset: Option<String>,
        /// Use every alkane isomer with this many carbons instead of a dataset
        #[arg(long)]
        isomers: Option<usize>,
        #[arg(long, default_value = "nd", value_parser = index_list)]
        indices: IndexList,
        #[arg(long, default_value_t = 0.95)]
        threshold: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Sensitivity of indices over complete isomer families
    Sensitivity {
        /// Carbon counts, comma separated
        #[arg(long, value_delimiter = ',', default_value = "8,10")]
        n: Vec<usize>,
        #[arg(long, default_value = "all", value_parser = index_list)]
        indices: IndexList,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        #[command(flatten)]
        output: Output,
    },
    /// List every alkane isomer with a given number of carbons
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Smiles)]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Check every inequality on random connected graphs
    VerifyBounds {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Emit every check as JSON instead of a summary
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Built-in dataset utilities
    Datasets {
        #[command(subcommand)]
        action: DatasetsAction,
    },
}

#[derive(Subcommand)]
enum DatasetsAction {
    /// Write a built-in dataset as CSV
    Export {
        name: String,
        #[command(flatten)]
        output: Output,
    },
    /// Show built-in datasets, their columns and curation notes
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Smiles,
    Edgelist,
}

fn index_kind(s: &str) -> Result<IndexKind, String> {
    s.parse().map_err(|e: ndtopo::IndexError| e.to_string())
}

/// Comma separated index names as one CLI value.
#[derive(Clone)]
struct IndexList(Vec<IndexKind>);

fn index_list(s: &str) -> Result<IndexList, String> {
    parse_index_list(s).map(IndexList).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Data(Error),
    Bounds(String),
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Data(e.into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Data(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Bounds(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(3)
        }
    }
}

fn load(name: &str) -> Result<Dataset, Failure> {
    if dataset::BUILTIN.contains(&name) {
        Ok(load_builtin(name)?)
    } else {
        Ok(load_csv(name)?)
    }
}

fn emit(output: &Output, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Indices {
            dataset,
            smiles,
            graph,
            indices,
            output,
        } => {
            let kinds = indices.0;
            let table = if let Some(name) = dataset {
                index_table(&load(&name)?, &kinds)?.to_csv(output.precision)?
            } else {
                let g = match (smiles, graph) {
                    (Some(s), _) => parse_alkane(&s)?,
                    (None, Some(path)) => {
                        let text = fs::read_to_string(&path)
                            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                        MolGraph::from_edge_list(&text)?
                    }
                    (None, None) => {
                        return Err(Failure::Usage(
                            "one of --dataset, --smiles or --graph is required".into(),
                        ))
                    }
                };
                let values = compute_all(&g, &kinds)?;
                let header: Vec<&str> = kinds.iter().map(|k| k.name()).collect();
                let row: Vec<String> = values.iter().map(|v| format_sig(v.value, output.precision)).collect();
                format!("{}\n{}\n", header.join(","), row.join(","))
            };
            emit(&output, &table)
        }

        Command::Regress { dataset, x, y, output } => {
            let d = load(&dataset)?;
            let property = d.column(&y)?;
            let fit = dataset::regress(&d, x, &property)?;
            let p = output.precision;
            let cells = [fit.intercept, fit.slope, fit.r, fit.se, fit.f_stat, fit.sig_f]
                .map(|v| format_sig(v, p))
                .join(",");
            emit(&output, &format!("x,y,n,c,m,r,se,f,sf\n{x},{y},{},{cells}\n", fit.n))
        }

        Command::Correlate {
            dataset,
            isomers,
            indices,
            threshold,
            output,
        } => {
            let kinds = indices.0;
            let graphs = match (dataset, isomers) {
                (Some(name), None) => load(&name)?.graphs(),
                (None, Some(n)) => enumerate_alkanes(n)?,
                _ => return Err(Failure::Usage("one of --dataset or --isomers is required".into())),
            };
            let rows = graphs
                .iter()
                .map(|g| compute_all(g, &kinds))
                .collect::<Result<Vec<_>, _>>()?;
            let columns: Vec<(String, Vec<f64>)> = kinds
                .iter()
                .enumerate()
                .map(|(c, k)| (k.name().to_string(), rows.iter().map(|r| r[c].value).collect()))
                .collect();
            let matrix = correlation_matrix(&columns)?;
            let graph = correlation_graph(&matrix, threshold);

            let mut text = format!("index,{}\n", matrix.names.join(","));
            for (name, row) in matrix.names.iter().zip(&matrix.values) {
                let cells: Vec<String> = row.iter().map(|&v| format_sig(v, output.precision)).collect();
                text.push_str(&format!("{name},{}\n", cells.join(",")));
            }
            text.push_str("\nsource,target,r\n");
            for &(a, b) in &graph.edges {
                let r = format_sig(matrix.values[a][b], output.precision);
                text.push_str(&format!("{},{},{r}\n", graph.nodes[a], graph.nodes[b]));
            }
            emit(&output, &text)
        }

        Command::Sensitivity {
            n,
            indices,
            tolerance,
            output,
        } => {
            let kinds = indices.0;
            let reports = sensitivity_table(&n, &kinds, tolerance)?;
            let mut text = String::from("carbons,index,family_size,distinct,sensitivity\n");
            for r in reports {
                text.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.carbons,
                    r.index,
                    r.family_size,
                    r.distinct_values,
                    format_sig(r.sensitivity, output.precision)
                ));
            }
            emit(&output, &text)
        }

        Command::Enumerate { n, format, output } => {
            let mut text = String::new();
            for (i, g) in enumerate_alkanes(n)?.iter().enumerate() {
                match format {
                    Format::Smiles => {
                        text.push_str(&write_alkane(g)?);
                        text.push('\n');
                    }
                    Format::Edgelist => {
                        text.push_str(&format!("# isomer {}\n", i + 1));
                        text.push_str(&g.to_edge_list());
                    }
                }
            }
            emit(&output, &text)
        }

        Command::VerifyBounds {
            trials,
            max_n,
            seed,
            json,
            output,
        } => {
            if max_n < 2 {
                return Err(Failure::Usage("--max-n must be at least 2".into()));
            }
            let entries = random_graph_suite(trials, max_n, seed)?;
            let failed: Vec<_> = entries.iter().filter(|e| !e.check.passed()).collect();
            let text = if json {
                serde_json::to_string_pretty(&entries).expect("checks serialize") + "\n"
            } else {
                let mut s = format!(
                    "graphs checked: {}\nchecks: {}\nfailed: {}\n",
                    trials + ndtopo::bounds::equality_case_graphs().len(),
                    entries.len(),
                    failed.len()
                );
                for e in &failed {
                    let c = &e.check;
                    s.push_str(&format!(
                        "FAIL {} on {}: {} {} {} (gap {})\n",
                        c.name,
                        e.graph,
                        format_sig(c.lhs, output.precision),
                        c.relation,
                        format_sig(c.rhs, output.precision),
                        format_sig(c.gap, output.precision)
                    ));
                }
                s
            };
            emit(&output, &text)?;
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::Bounds(format!("{} bound checks failed", failed.len())))
            }
        }

        Command::Datasets { action } => match action {
            DatasetsAction::Export { name, output } => {
                let d = load_builtin(&name)?;
                emit(&output, &dataset::write_csv(&d)?)
            }
            DatasetsAction::List => {
                let mut text = String::new();
                for name in dataset::BUILTIN {
                    let d = load_builtin(name)?;
                    text.push_str(&format!("{name}: {} compounds\n", d.len()));
                    for c in &d.columns {
                        text.push_str(&format!(
                            "  {:<9} {:<12} {} ({} values)\n",
                            c.name(),
                            c.unit(),
                            c.description(),
                            d.property_count(c)
                        ));
                    }
                    for n in &d.provenance_notes {
                        text.push_str(&format!(
                            "  note [{}] {}: {}\n",
                            d.records[n.record].name, n.field, n.note
                        ));
                    }
                }
                emit(&Output { out: None, precision: 6 }, &text)
            }
        },
    }
}
