use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use hemispheres::complex::{classify_pseudomanifold, reduced_homology, SimplicialComplex};
use hemispheres::exact::{format_rational, parse_rational, QVector};
use hemispheres::verify::{all_pass, run_suite, SuiteOptions, VerifyError};
use hemispheres::{arrangement, digraph, gale, posets, sphere, tda};
use std::io::Read;
use std::path::PathBuf;

/// Exact-arithmetic toolkit for hemisphere covering nerves, digraph
/// complexes, intersection lattices and their integral homology.
#[derive(Parser)]
#[command(name = "hemispheres", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct OutputFormat {
    /// Emit machine-readable JSON (the default).
    #[arg(long, conflicts_with = "table")]
    json: bool,
    /// Emit a human-readable table instead of JSON.
    #[arg(long)]
    table: bool,
}

impl OutputFormat {
    fn is_table(&self) -> bool {
        self.table
    }
}

#[derive(Subcommand)]
enum Command {
    /// Spherical configurations and their hemisphere nerves.
    Sphere {
        #[command(subcommand)]
        cmd: SphereCmd,
    },
    /// Hyperplane arrangements and intersection lattices.
    Arrangement {
        #[command(subcommand)]
        cmd: ArrangementCmd,
    },
    /// Digraph complexes and the spherical DAG encoding.
    Dag {
        #[command(subcommand)]
        cmd: DagCmd,
    },
    /// Posets of orders, preorders and finite topologies.
    Posets {
        #[command(subcommand)]
        cmd: PosetsCmd,
    },
    /// Gale duality and the cycle lattice.
    Gale {
        #[command(subcommand)]
        cmd: GaleCmd,
    },
    /// Filtrations and persistence.
    Tda {
        #[command(subcommand)]
        cmd: TdaCmd,
    },
    /// Run the verification suite.
    Verify {
        /// Claim selector: "all" or a substring of a claim family name.
        #[arg(long, default_value = "all")]
        claims: String,
        /// Seed for the randomized claims.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Smallest instance sizes only.
        #[arg(long)]
        quick: bool,
        /// Write the JSON report array to this path.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        format: OutputFormat,
    },
}

#[derive(Subcommand)]
enum SphereCmd {
    /// The nerve of the open-hemisphere covering.
    Stel {
        /// Configuration JSON file ("-" for stdin).
        #[arg(long)]
        config: PathBuf,
        /// Also compute reduced homology.
        #[arg(long)]
        homology: bool,
        #[command(flatten)]
        format: OutputFormat,
    },
    /// The nerve of the closed-hemisphere covering.
    Bstel {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        homology: bool,
        #[command(flatten)]
        format: OutputFormat,
    },
    /// Ampleness, antipodality and the essential dimension.
    Check {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        format: OutputFormat,
    },
}

#[derive(Subcommand)]
enum ArrangementCmd {
    /// Intersection lattice with dimensions, covering edges and Möbius values.
    Lattice {
        /// Arrangement JSON file ("-" for stdin).
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        format: OutputFormat,
    },
    /// Full fiber diagnostics of the comparison map for the induced
    /// antipodal configuration.
    Quillen {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        format: OutputFormat,
    },
}

#[derive(Subcommand)]
enum DagCmd {
    /// The complex of acyclic digraphs (or of non-strongly-connected ones).
    Complex {
        #[arg(long)]
        n: usize,
        /// Build the non-strongly-connected complex instead.
        #[arg(long)]
        disds: bool,
        #[arg(long)]
        homology: bool,
        /// Also classify purity and pseudomanifold structure.
        #[arg(long)]
        classify: bool,
        #[command(flatten)]
        format: OutputFormat,
    },
    /// Compare the digraph complexes with the root-system nerves.
    Verify {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        format: OutputFormat,
    },
    /// Spherical ray representative of a weighted DAG (JSON on stdin or file).
    Encode {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        format: OutputFormat,
    },
    /// Weighted DAG of a zero-sum rational vector.
    Decode {
        /// Comma-separated rational coordinates, e.g. "-2,0,2" or "-1/2,0,1/2".
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        #[command(flatten)]
        format: OutputFormat,
    },
}

#[derive(Subcommand)]
enum PosetsCmd {
    /// Order-complex homology of the chosen poset family.
    Homology {
        /// orders | preorders | topologies | t0
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        format: OutputFormat,
    },
}

#[derive(Subcommand)]
enum GaleCmd {
    /// Duality check for the type-A root configuration.
    Check {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        format: OutputFormat,
    },
    /// The lattice of unions of directed cycles.
    CycleLattice {
        #[arg(long)]
        n: usize,
        /// Compute order-complex homology of the proper part.
        #[arg(long)]
        homology: bool,
        /// Proceed with homology even for large lattices (n = 4).
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        format: OutputFormat,
    },
}

#[derive(Subcommand)]
enum TdaCmd {
    /// Persistence diagram of the hypercube vertex cloud.
    Cube {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Allow the 65535-simplex filtration of the 4-cube.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        format: OutputFormat,
    },
    /// The two hemisphere endpoints of the geodesic ball filtration.
    SphereEndpoints {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        format: OutputFormat,
    },
}

fn read_json(path: &PathBuf) -> Result<serde_json::Value> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(serde_json::from_str(&text)?)
}

fn emit(format: OutputFormat, json: serde_json::Value, table: impl FnOnce() -> String) {
    if format.is_table() {
        println!("{}", table());
    } else {
        println!("{}", serde_json::to_string_pretty(&json).expect("valid JSON"));
    }
}

fn complex_summary(k: &SimplicialComplex, homology: bool) -> (serde_json::Value, String) {
    let h = homology.then(|| reduced_homology(k));
    let mut json = serde_json::json!({
        "complex": k.to_json(),
        "num_faces": k.num_faces(),
        "dim": k.dim(),
    });
    let mut text = format!(
        "faces: {} (dimension {}, {} facets)",
        k.num_faces(),
        k.dim().map_or_else(|| "void".to_string(), |d| d.to_string()),
        k.facets().len()
    );
    if let Some(h) = h {
        json["homology"] = h.to_json();
        text.push_str(&format!("\nreduced homology: {}", h.describe()));
    }
    (json, text)
}

fn run() -> Result<i32> {
    let cli = Cli::parse();
    match cli.command {
        Command::Sphere { cmd } => sphere_cmd(cmd)?,
        Command::Arrangement { cmd } => arrangement_cmd(cmd)?,
        Command::Dag { cmd } => dag_cmd(cmd)?,
        Command::Posets { cmd } => posets_cmd(cmd)?,
        Command::Gale { cmd } => gale_cmd(cmd)?,
        Command::Tda { cmd } => tda_cmd(cmd)?,
        Command::Verify {
            claims,
            seed,
            quick,
            output,
            format,
        } => {
            let opts = SuiteOptions {
                selector: claims,
                seed,
                quick,
            };
            let reports = match run_suite(&opts) {
                Ok(reports) => reports,
                Err(VerifyError::UnknownSelector(sel, known)) => {
                    eprintln!("unknown claim selector {sel:?}; known families: {known}");
                    return Ok(2);
                }
            };
            let json = serde_json::Value::Array(reports.iter().map(|r| r.to_json()).collect());
            if let Some(path) = output {
                std::fs::write(&path, serde_json::to_string_pretty(&json)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            emit(format, json, || {
                reports
                    .iter()
                    .map(|r| r.line())
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            return Ok(if all_pass(&reports) { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn sphere_cmd(cmd: SphereCmd) -> Result<()> {
    match cmd {
        SphereCmd::Stel {
            config,
            homology,
            format,
        } => {
            let c = sphere::Configuration::from_json(&read_json(&config)?)?.essentialize();
            let k = sphere::stel_complex(&c)?;
            let (json, text) = complex_summary(&k, homology);
            emit(format, json, || text);
        }
        SphereCmd::Bstel {
            config,
            homology,
            format,
        } => {
            let c = sphere::Configuration::from_json(&read_json(&config)?)?.essentialize();
            let k = sphere::bstel_complex(&c)?;
            let (json, text) = complex_summary(&k, homology);
            emit(format, json, || text);
        }
        SphereCmd::Check { config, format } => {
            let c = sphere::Configuration::from_json(&read_json(&config)?)?;
            let e = c.essentialize();
            let ample = sphere::is_ample(&c);
            let antipodal = sphere::is_antipodal(&c);
            let json = serde_json::json!({
                "points": c.len(),
                "ambient_dim": c.dim(),
                "essential_dim": e.dim(),
                "ample": ample,
                "antipodal": antipodal,
            });
            emit(format, json, || {
                format!(
                    "{} points, ambient dim {}, essential dim {}\nample: {}\nantipodal: {}",
                    c.len(),
                    c.dim(),
                    e.dim(),
                    ample,
                    antipodal
                )
            });
        }
    }
    Ok(())
}

fn arrangement_cmd(cmd: ArrangementCmd) -> Result<()> {
    match cmd {
        ArrangementCmd::Lattice { input, format } => {
            let a = arrangement::Arrangement::from_json(&read_json(&input)?)?;
            let l = arrangement::intersection_lattice(&a)?;
            let mobius = arrangement::mobius_invariant(&l);
            let mut json = l.to_json();
            json["mobius_invariant"] = serde_json::json!({
                "signed": mobius.signed.to_string(),
                "absolute": mobius.absolute.to_string(),
            });
            emit(format, json, || {
                let mut lines = vec![format!(
                    "{} flats in dimension {}; Moebius invariant {} (signed {})",
                    l.len(),
                    l.ambient_dim(),
                    mobius.absolute,
                    mobius.signed
                )];
                for (i, s) in l.elements().iter().enumerate() {
                    lines.push(format!(
                        "  [{}] dim {} mu {} hyperplanes {:?}",
                        i,
                        s.dim(),
                        l.mobius_from_bottom(i),
                        l.hyperplanes_through(i)
                    ));
                }
                lines.join("\n")
            });
        }
        ArrangementCmd::Quillen { input, format } => {
            let a = arrangement::Arrangement::from_json(&read_json(&input)?)?;
            let c = arrangement::config_from_arrangement(&a);
            let report = arrangement::quillen_map_check(&c)?;
            let json = serde_json::json!({
                "faces_checked": report.faces_checked,
                "well_defined": report.well_defined,
                "monotone": report.monotone,
                "simplex_fibers": report.simplex_fibers,
                "simplex_fibers_with_greatest": report.simplex_fibers_with_greatest,
                "flat_fibers": report.flat_fibers,
                "flat_fibers_acyclic": report.flat_fibers_acyclic,
                "flat_fibers_matching_nerve": report.flat_fibers_matching_nerve,
                "all_pass": report.all_pass(),
                "failures": report.failures,
            });
            emit(format, json, || {
                format!(
                    "{} faces; well-defined {}; monotone {}; {}/{} simplex fibers have a greatest element; {}/{} flat fibers acyclic; {}/{} match their halfspace nerves",
                    report.faces_checked,
                    report.well_defined,
                    report.monotone,
                    report.simplex_fibers_with_greatest,
                    report.simplex_fibers,
                    report.flat_fibers_acyclic,
                    report.flat_fibers,
                    report.flat_fibers_matching_nerve,
                    report.flat_fibers
                )
            });
        }
    }
    Ok(())
}

fn dag_cmd(cmd: DagCmd) -> Result<()> {
    match cmd {
        DagCmd::Complex {
            n,
            disds,
            homology,
            classify,
            format,
        } => {
            let k = if disds {
                digraph::disds_complex(n)?
            } else {
                digraph::dag_complex(n)?
            };
            let (mut json, mut text) = complex_summary(&k, homology);
            if classify {
                let report = classify_pseudomanifold(&k);
                json["classification"] = serde_json::json!(format!("{report:?}"));
                text.push_str(&format!("\nclassification: {report:?}"));
            }
            emit(format, json, || text);
        }
        DagCmd::Verify { n, format } => {
            let report = digraph::verify_identifications(n)?;
            let json = serde_json::json!({
                "n": report.n,
                "stel_equal": report.stel_equal,
                "bstel_equal": report.bstel_equal,
                "counterexample": report.counterexample,
            });
            emit(format, json, || {
                format!(
                    "open nerve matches acyclic complex: {}\nclosed nerve matches non-strongly-connected complex: {}",
                    report.stel_equal, report.bstel_equal
                )
            });
        }
        DagCmd::Encode { input, format } => {
            let w = digraph::WeightedDag::from_json(&read_json(&input)?)?;
            let x = digraph::encode_dag(&w)?;
            let coords: Vec<String> = x.iter().map(format_rational).collect();
            emit(format, serde_json::json!({ "vector": coords }), || {
                coords.join(",")
            });
        }
        DagCmd::Decode { vector, format } => {
            let coords: Result<Vec<_>, _> =
                vector.split(',').map(|s| parse_rational(s.trim())).collect();
            let x = QVector::new(coords.map_err(|e| anyhow!("{e}"))?);
            let w = digraph::decode_vector(&x)?;
            emit(format, w.to_json(), || {
                w.weights()
                    .map(|((a, b), wt)| format!("({a},{b}) -> {}", format_rational(wt)))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
    }
    Ok(())
}

fn posets_cmd(cmd: PosetsCmd) -> Result<()> {
    match cmd {
        PosetsCmd::Homology { kind, n, format } => {
            let (poset, count_note) = match kind.as_str() {
                "orders" => {
                    let (p, elements) = posets::poset_of_orders(n)?;
                    (p, format!("{} nontrivial orders", elements.len()))
                }
                "preorders" => {
                    let (p, elements) = posets::poset_of_preorders(n)?;
                    (p, format!("{} proper preorders", elements.len()))
                }
                "topologies" => {
                    let (p, elements) = posets::poset_of_topologies(n)?;
                    (p, format!("{} proper topologies", elements.len()))
                }
                "t0" => {
                    let (p, elements) = posets::poset_of_t0_topologies(n)?;
                    (p, format!("{} non-discrete T0 topologies", elements.len()))
                }
                other => return Err(anyhow!("unknown kind {other:?} (orders | preorders | topologies | t0)")),
            };
            let h = reduced_homology(&poset.order_complex()?);
            let mut json = h.to_json();
            json["elements"] = serde_json::json!(poset.len());
            json["kind"] = serde_json::json!(kind);
            emit(format, json, || {
                format!("{count_note}\nreduced homology: {}", h.describe())
            });
        }
    }
    Ok(())
}

fn gale_cmd(cmd: GaleCmd) -> Result<()> {
    match cmd {
        GaleCmd::Check { n, format } => {
            let report = gale::gale_duality_check(&digraph::root_system(n))?;
            let json = serde_json::json!({
                "vertex_count": report.vertex_count,
                "minimal_nonfaces": report.minimal_nonface_count,
                "facet_sizes": report.facet_sizes,
                "dual_equals_stel": report.dual_equals_stel,
            });
            emit(format, json, || {
                format!(
                    "{} vertices, {} minimal non-faces, facet sizes {:?}\ndual of nerve equals the open-hemisphere nerve: {}",
                    report.vertex_count,
                    report.minimal_nonface_count,
                    report.facet_sizes,
                    report.dual_equals_stel
                )
            });
        }
        GaleCmd::CycleLattice {
            n,
            homology,
            force,
            format,
        } => {
            let lattice = gale::cycle_lattice(n)?;
            let proper = lattice.proper_elements();
            let mut json = serde_json::json!({
                "n": n,
                "generators": lattice.generators().len(),
                "elements": lattice.len(),
                "proper_elements": proper.len(),
            });
            let mut text = format!(
                "{} cycle generators; {} lattice elements ({} proper)",
                lattice.generators().len(),
                lattice.len(),
                proper.len()
            );
            if homology {
                if proper.len() > 100 && !force {
                    text.push_str("\nproper part is large; pass --force to compute homology");
                    json["homology"] = serde_json::json!("skipped (pass --force)");
                } else {
                    let h = reduced_homology(&lattice.proper_poset().order_complex()?);
                    json["homology"] = h.to_json();
                    text.push_str(&format!("\nreduced homology: {}", h.describe()));
                }
            }
            emit(format, json, || text);
        }
    }
    Ok(())
}

fn tda_cmd(cmd: TdaCmd) -> Result<()> {
    match cmd {
        TdaCmd::Cube { n, force, format } => {
            if n > 4 {
                return Err(anyhow!("hypercube dimension is limited to 4"));
            }
            if n == 4 && !force {
                return Err(anyhow!(
                    "n = 4 builds 65535 simplices; pass --force to proceed"
                ));
            }
            let points: Vec<QVector> = (0..1u32 << n)
                .map(|m| {
                    let coords: Vec<i64> = (0..n)
                        .map(|b| if m >> b & 1 == 1 { 1 } else { -1 })
                        .collect();
                    QVector::from_ints(&coords)
                })
                .collect();
            let max_dim = points.len() - 1;
            let diagram = tda::persistence(&tda::vr_filtration(&points, max_dim)?);
            emit(format, diagram.to_json(), || {
                diagram
                    .bars()
                    .iter()
                    .map(|b| {
                        format!(
                            "degree {} born {} dies {}",
                            b.degree,
                            format_rational(&b.birth),
                            b.death
                                .as_ref()
                                .map(format_rational)
                                .unwrap_or_else(|| "never".to_string())
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        TdaCmd::SphereEndpoints { config, format } => {
            let c = sphere::Configuration::from_json(&read_json(&config)?)?;
            let (stel, bstel, report) = tda::hemisphere_cech_endpoints(&c)?;
            let json = serde_json::json!({
                "essential_dim": report.essential_dim,
                "mobius": report.mobius.to_string(),
                "open_endpoint": {
                    "faces": stel.num_faces(),
                    "homology": report.stel_homology.to_json(),
                    "is_sphere": report.stel_is_sphere,
                },
                "closed_endpoint": {
                    "faces": bstel.num_faces(),
                    "homology": report.bstel_homology.to_json(),
                    "is_wedge": report.bstel_is_wedge,
                },
            });
            emit(format, json, || {
                format!(
                    "essential dim {}; Moebius invariant {}\nopen endpoint: {} faces, homology {}\nclosed endpoint: {} faces, homology {}",
                    report.essential_dim,
                    report.mobius,
                    stel.num_faces(),
                    report.stel_homology.describe(),
                    bstel.num_faces(),
                    report.bstel_homology.describe()
                )
            });
        }
    }
    Ok(())
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}
