//! Argument parsing and command dispatch. Every command renders either a text
//! summary or a JSON report; verdicts such as "does not hold" are results,
//! not errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hypersid_core::analysis::{self, Assumption, BoundCertificate, SearchConfig, UnifiedCase};
use hypersid_core::catalog::Property;
use hypersid_core::constructions::ConstructionSpec;
use hypersid_core::domination::{self, EdgeColoring, FalsifyConfig, FalsifyOutcome, NormingConfig};
use hypersid_core::exact::to_f64;
use hypersid_core::extremal::{self, LiftOutcome};
use hypersid_core::{hom, Hypergraph, PartiteHypergraph};
use serde_json::{json, Value};

use crate::config::{Format, RunConfig};
use crate::format::{parse_hypergraph, write_hypergraph, HypergraphFile};
use crate::json::{parse_rational, rational_string as rs, AssumptionJson, CertificateJson, HypergraphJson, KernelJson, Report};
use crate::parallel::{self, Threaded};
use crate::Error;

/// Largest hypergraph a construction spec may build.
const MAX_BUILD_VERTICES: usize = 4096;

#[derive(Parser, Debug)]
#[command(name = "hypersid", version, about = "Exact homomorphism densities, Sidorenko exponent bounds and extremal searches for uniform hypergraphs")]
pub struct Cli {
    /// Seed for every randomised step; drawn and reported when omitted.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Node-visit budget for exact counting and searches.
    #[arg(long, global = true, default_value_t = 1_000_000_000)]
    pub budget: u64,
    /// Worker threads (default: HYPERSID_JOBS or the available parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest host, in vertices, for exhaustive host enumeration.
    #[arg(long, global = true)]
    pub max_host: Option<usize>,
    /// Also write the certificate of a bound or exponent search to this file.
    #[arg(long, global = true)]
    pub cert_out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

/// Hypergraph arguments take a file path or a construction such as
/// `cycle:4`, `tight-cycle:3,6` or `complete-partite:2,2,2`.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a named construction and print it in the text format.
    Construct {
        spec: String,
        /// Base hypergraphs for `lift`, `tensor` and `tensor-power`.
        #[arg(long)]
        base: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// hom(F, H).
    Hom {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        host: String,
    },
    /// t_F(H) = hom(F, H) / v(H)^{v(F)}.
    Density {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        host: String,
    },
    /// Compare t_F(H) with t(H)^{e(F)}.
    CheckSidorenko {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        host: String,
    },
    /// Check t_F^{e(F')} ≥ t_{F'}^{e(F)} on one host, or search for a violation
    /// over all sub-hypergraphs and small hosts when `--fp`/`--host` are omitted.
    CheckDominate {
        #[arg(long)]
        f: String,
        #[arg(long)]
        fp: Option<String>,
        #[arg(long)]
        host: Option<String>,
        /// Extra seeded random hosts in search mode.
        #[arg(long, default_value_t = 0)]
        random_hosts: usize,
    },
    /// Cauchy-Schwarz-Gowers check for kernels given as JSON files.
    Csg {
        #[arg(long)]
        pattern: String,
        #[arg(long, value_delimiter = ',', required = true)]
        kernels: Vec<PathBuf>,
        /// Kernel index per edge, in edge order; all zero when omitted.
        #[arg(long, value_delimiter = ',')]
        coloring: Option<Vec<usize>>,
        /// Allow signed kernels.
        #[arg(long)]
        signed: bool,
    },
    /// Randomised triangle-inequality and CSG trials on step kernels.
    NormingSuite {
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long)]
        signed: bool,
        #[arg(long, default_value_t = 4)]
        resolution: usize,
        #[arg(long, default_value_t = 16)]
        max_denominator: i64,
        #[arg(long)]
        no_csg: bool,
    },
    /// Certified upper bounds on Sidorenko exponents.
    Bound {
        #[command(subcommand)]
        which: BoundCommand,
    },
    /// Certified lower bound on the Sidorenko exponent from host search.
    SearchExponent {
        #[arg(long)]
        pattern: String,
        /// Host evaluations across all tiers.
        #[arg(long, default_value_t = 20_000)]
        evaluations: u64,
        #[arg(long, default_value_t = 10)]
        max_denominator: u64,
    },
    /// Run the counting argument behind the unified bound on one host.
    Trace {
        /// Partite pattern F.
        #[arg(long)]
        pattern: String,
        /// Container M, labelled inside V(F).
        #[arg(long)]
        m: String,
        #[arg(long)]
        host: String,
    },
    /// Look for F(t) in an r-graph H, where F is an (r−1)-graph.
    Embed {
        #[arg(long)]
        host: String,
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value_t = 1)]
        t: usize,
    },
    /// Exact ex(n, F) for small n.
    ExSmall {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        /// Write an extremal host here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Edge count forcing F(t) from a known exponent bound s ≥ s(F).
    Threshold {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        t: usize,
        /// s as `p/q`.
        #[arg(long)]
        s: String,
    },
    /// Deletion-method lower bound on ex(n, G).
    DeletionLower {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        /// Also report the log-log slope over this many doublings of n.
        #[arg(long)]
        sweep: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    /// Links are unions of Sidorenko components of M.
    Components,
    /// M is dominating.
    Dominating,
}

#[derive(Subcommand, Debug)]
pub enum BoundCommand {
    /// Σ d_M over the designated links of F.
    Unified {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        m: String,
        #[arg(long, value_enum)]
        case: CaseArg,
        /// `HYPERGRAPH=PROPERTY`, taken on trust and listed in the certificate.
        #[arg(long)]
        assert: Vec<String>,
    },
    /// Tight cycle C_{3ℓ}^{(3)}.
    TightCycle {
        #[arg(long)]
        ell: usize,
    },
    /// Bound for patterns with sparse links.
    Sparse {
        #[arg(long)]
        pattern: String,
    },
    /// Bound for patterns whose links embed in the grid T_k.
    GridLinks {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        k: usize,
    },
    /// Bound for iterated lifts F(t_1)...(t_m) from s(F).
    Lift {
        #[arg(long)]
        s: String,
        #[arg(long)]
        edges: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<usize>,
    },
    /// Extremal exponent for F(t) when F's links are bipartite graphs inside G.
    BipartiteLinks {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        g: String,
    },
}

/// What a command produced.
struct Outcome {
    name: &'static str,
    text: String,
    json: Value,
    seeded: bool,
    certificate: Option<CertificateJson>,
}

impl Outcome {
    fn new(name: &'static str, text: String, json: Value) -> Self {
        Outcome { name, text, json, seeded: false, certificate: None }
    }

    fn seeded(mut self) -> Self {
        self.seeded = true;
        self
    }

    fn with_certificate(mut self, c: CertificateJson) -> Self {
        self.certificate = Some(c);
        self
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

fn write_file(path: &Path, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

/// A hypergraph from a file in the text format, or from a construction spec.
pub fn load(arg: &str) -> Result<HypergraphFile, Error> {
    let path = Path::new(arg);
    if path.exists() {
        let text = read_file(path)?;
        return parse_hypergraph(&text).map_err(|source| Error::Parse { path: arg.to_string(), source });
    }
    let spec = ConstructionSpec::parse(arg)
        .map_err(|e| Error::Input(format!("`{}` is neither a readable file nor a construction ({})", arg, e)))?;
    let built = spec.build(&[], MAX_BUILD_VERTICES)?;
    Ok(HypergraphFile { hypergraph: built.hypergraph, parts: built.parts })
}

pub fn load_hypergraph(arg: &str) -> Result<Hypergraph, Error> {
    Ok(load(arg)?.hypergraph)
}

/// As `load`, with the stored partition or a detected one.
pub fn load_partite(arg: &str) -> Result<PartiteHypergraph, Error> {
    let file = load(arg)?;
    Ok(match file.parts {
        Some(p) => PartiteHypergraph::new(file.hypergraph, p)?,
        None => PartiteHypergraph::detect(file.hypergraph)?,
    })
}

fn parse_property(text: &str) -> Result<Property, Error> {
    [Property::Sidorenko, Property::Dominating, Property::WeaklyNorming, Property::Norming]
        .into_iter()
        .find(|p| p.name() == text)
        .ok_or_else(|| Error::Input(format!("unknown property `{}` (sidorenko, dominating, weakly-norming, norming)", text)))
}

fn parse_assertion(text: &str) -> Result<Assumption, Error> {
    let (h, p) = text
        .rsplit_once('=')
        .ok_or_else(|| Error::Input(format!("assertion `{}` must look like HYPERGRAPH=PROPERTY", text)))?;
    Ok(Assumption::asserted(load_hypergraph(h)?, parse_property(p)?))
}

fn hg(h: &Hypergraph) -> Value {
    serde_json::to_value(HypergraphJson::of(h)).expect("hypergraph serialises")
}

fn verdict(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), Error> {
    let mut cfg = RunConfig::new(cli.seed, cli.budget, cli.jobs, cli.format);
    cfg.max_host = cli.max_host;
    cfg.cert_out = cli.cert_out;
    let outcome = dispatch(cli.command, &cfg)?;
    if let Some(path) = &cfg.cert_out {
        let cert = outcome
            .certificate
            .as_ref()
            .ok_or_else(|| Error::Input(format!("`{}` produces no certificate for --cert-out", outcome.name)))?;
        write_file(path, &(serde_json::to_string_pretty(cert)? + "\n"))?;
    }
    let io = |source| Error::Io { path: String::from("<stdout>"), source };
    match cfg.format {
        Format::Text => {
            if outcome.seeded {
                writeln!(out, "seed: {}{}", cfg.seed, if cfg.seed_drawn { " (drawn)" } else { "" }).map_err(io)?;
            }
            out.write_all(outcome.text.as_bytes()).map_err(io)?;
        }
        Format::Json => {
            let report = Report { command: outcome.name.to_string(), seed: outcome.seeded.then_some(cfg.seed), result: outcome.json };
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?).map_err(io)?;
        }
    }
    Ok(())
}

fn dispatch(command: Command, cfg: &RunConfig) -> Result<Outcome, Error> {
    let hc = cfg.hom();
    match command {
        Command::Construct { spec, base, out } => {
            let spec = ConstructionSpec::parse(&spec)?;
            let bases = base.iter().map(|b| load_hypergraph(b)).collect::<Result<Vec<_>, _>>()?;
            let built = spec.build(&bases, MAX_BUILD_VERTICES)?;
            let file = HypergraphFile { hypergraph: built.hypergraph, parts: built.parts };
            let text = write_hypergraph(&file);
            let mut json = hg(&file.hypergraph);
            if let Some(p) = &file.parts {
                json["parts"] = json!(p);
            }
            match out {
                Some(path) => {
                    write_file(&path, &text)?;
                    let summary = format!(
                        "wrote {} ({} vertices, {} edges)\n",
                        path.display(),
                        file.hypergraph.vertex_count(),
                        file.hypergraph.edge_count()
                    );
                    Ok(Outcome::new("construct", summary, json))
                }
                None => Ok(Outcome::new("construct", text, json)),
            }
        }
        Command::Hom { pattern, host } => {
            let (f, h) = (load_hypergraph(&pattern)?, load_hypergraph(&host)?);
            let count = hom::count_homomorphisms_with(&f, &h, &hc)?;
            Ok(Outcome::new("hom", format!("{}\n", count), json!({ "hom": count.to_string() })))
        }
        Command::Density { pattern, host } => {
            let (f, h) = (load_hypergraph(&pattern)?, load_hypergraph(&host)?);
            let d = hom::density_with(&f, &h, &hc)?;
            let text = format!("{}/{} = {}\n", d.hom_count, d.denominator(), d.value);
            let json = json!({
                "hom": d.hom_count.to_string(),
                "denominator": d.denominator().to_string(),
                "density": rs(&d.value),
                "approx": to_f64(&d.value),
            });
            Ok(Outcome::new("density", text, json))
        }
        Command::CheckSidorenko { pattern, host } => {
            let (f, h) = (load_hypergraph(&pattern)?, load_hypergraph(&host)?);
            let c = analysis::sidorenko_check_with(&f, &h, &hc)?;
            let text = format!(
                "{}: t_F = {} vs t^{} = {} (margin {})\n",
                verdict(c.holds),
                c.pattern_density.value,
                f.edge_count(),
                c.target,
                c.margin
            );
            let json = json!({
                "holds": c.holds,
                "pattern_density": rs(&c.pattern_density.value),
                "edge_density": rs(&c.edge_density),
                "target": rs(&c.target),
                "margin": rs(&c.margin),
            });
            Ok(Outcome::new("check-sidorenko", text, json))
        }
        Command::CheckDominate { f, fp, host, random_hosts } => check_dominate(cfg, &f, fp.as_deref(), host.as_deref(), random_hosts),
        Command::Csg { pattern, kernels, coloring, signed } => {
            let f = load_hypergraph(&pattern)?;
            let ks = kernels
                .iter()
                .map(|p| {
                    let j: KernelJson = serde_json::from_str(&read_file(p)?)
                        .map_err(|e| Error::Input(format!("{}: {}", p.display(), e)))?;
                    j.to_kernel()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let chi = match coloring {
                Some(c) => EdgeColoring::new(&f, c)?,
                None => EdgeColoring::uniform(&f),
            };
            let c = domination::csg_check(&f, &chi, &ks, !signed)?;
            let norms: Vec<String> = c.norms.iter().map(rs).collect();
            let text = format!(
                "{}: <F;chi> = {}, <F;chi>^e = {} vs product of norms = {}\n",
                verdict(c.holds),
                c.lhs,
                c.lhs_power,
                c.rhs_power
            );
            let json = json!({
                "holds": c.holds,
                "lhs": rs(&c.lhs),
                "lhs_power": rs(&c.lhs_power),
                "rhs_power": rs(&c.rhs_power),
                "norm_powers": norms,
                "multiplicities": c.multiplicities,
            });
            Ok(Outcome::new("csg", text, json))
        }
        Command::NormingSuite { pattern, trials, signed, resolution, max_denominator, no_csg } => {
            let f = load_hypergraph(&pattern)?;
            let nc = NormingConfig {
                trials,
                seed: cfg.seed,
                max_resolution: resolution,
                max_denominator,
                signed,
                csg: !no_csg,
                ..NormingConfig::default()
            };
            let rep = parallel::norming_suite(&f, &nc, cfg.jobs)?;
            let mut text = format!(
                "{}: {} trials, triangle passed {} ({} undecided), csg passed {} failed {}\n",
                if rep.passed() { "passed" } else { "failed" },
                rep.trials,
                rep.triangle_passed,
                rep.undecided,
                rep.csg_passed,
                rep.csg_failed
            );
            let cex = rep.counterexample.as_ref().map(|c| {
                writeln!(
                    text,
                    "counterexample at trial {}: |f+g|^e = {} > (|f| + |g|)^e with |f|^e = {}, |g|^e = {}",
                    c.trial, c.sum_power, c.f_power, c.g_power
                )
                .unwrap();
                json!({
                    "trial": c.trial,
                    "f": KernelJson::of(&c.f),
                    "g": KernelJson::of(&c.g),
                    "sum_power": rs(&c.sum_power),
                    "f_power": rs(&c.f_power),
                    "g_power": rs(&c.g_power),
                })
            });
            let json = json!({
                "passed": rep.passed(),
                "trials": rep.trials,
                "triangle_passed": rep.triangle_passed,
                "undecided": rep.undecided,
                "csg_passed": rep.csg_passed,
                "csg_failed": rep.csg_failed,
                "counterexample": cex,
            });
            Ok(Outcome::new("norming-suite", text, json).seeded())
        }
        Command::Bound { which } => bound(which),
        Command::SearchExponent { pattern, evaluations, max_denominator } => {
            let f = load_hypergraph(&pattern)?;
            let sc = SearchConfig { budget: evaluations, seed: cfg.seed, max_denominator, hom: hc, ..SearchConfig::default() };
            let rep = analysis::exponent_lower_search_with(&f, &sc, &Threaded { jobs: cfg.jobs })?;
            rep.best.verify()?;
            let mut text = format!(
                "s(F) >= {} (t_F^{} <= t^{} on a {}-vertex host from the {} tier; ratio {:.6})\n",
                rep.best.certified,
                rep.best.q,
                rep.best.p,
                rep.best.host.vertex_count(),
                rep.best_tier.name(),
                rep.best.ratio
            );
            writeln!(text, "baseline {} (e(F) = {})", rep.baseline.certified, f.edge_count()).unwrap();
            for t in &rep.tiers {
                writeln!(
                    text,
                    "  {}: {} hosts, best ratio {}{}",
                    t.tier.name(),
                    t.evaluated,
                    t.best_ratio.map_or(String::from("-"), |r| format!("{:.6}", r)),
                    if t.truncated { " (truncated)" } else { "" }
                )
                .unwrap();
            }
            let cert = CertificateJson::witness(&rep.best);
            let tiers: Vec<Value> = rep
                .tiers
                .iter()
                .map(|t| json!({ "tier": t.tier.name(), "evaluated": t.evaluated, "best_ratio": t.best_ratio, "truncated": t.truncated }))
                .collect();
            let json = json!({
                "certified": rs(&rep.best.certified),
                "best_tier": rep.best_tier.name(),
                "baseline": rs(&rep.baseline.certified),
                "evaluated": rep.evaluated,
                "tiers": tiers,
                "witness": cert,
            });
            Ok(Outcome::new("search-exponent", text, json).seeded().with_certificate(cert))
        }
        Command::Trace { pattern, m, host } => {
            let f = load_partite(&pattern)?;
            let m = load_hypergraph(&m)?;
            let h = load_hypergraph(&host)?;
            let tr = analysis::proof_trace(&f, &m, &h, &hc)?;
            let consistent = tr.recheck();
            let text = format!(
                "claim 1: {} ({} <= {})\nclaim 2: {} ({} good of {} vertices)\nfinal: {} (hom = {} >= {} * t^{} * n^v, {} >= {})\nrecount consistent: {}\n",
                verdict(tr.claim1),
                tr.claim1_lhs,
                tr.claim1_rhs,
                verdict(tr.claim2),
                tr.good.len(),
                tr.host_vertices,
                verdict(tr.final_holds),
                tr.hom_pattern,
                tr.constant,
                tr.exponent,
                tr.rich_sum,
                tr.final_rhs,
                consistent
            );
            let json = json!({
                "claim1": tr.claim1,
                "claim1_lhs": rs(&tr.claim1_lhs),
                "claim1_rhs": rs(&tr.claim1_rhs),
                "claim2": tr.claim2,
                "final_holds": tr.final_holds,
                "hom_pattern": tr.hom_pattern.to_string(),
                "rich_sum": tr.rich_sum.to_string(),
                "final_rhs": rs(&tr.final_rhs),
                "exponent": tr.exponent,
                "constant": rs(&tr.constant),
                "thresholds": tr.thresholds.iter().map(rs).collect::<Vec<_>>(),
                "rare": tr.rare,
                "z_total": tr.z_total,
                "good": tr.good,
                "bad": tr.bad,
                "rich": tr.rich,
                "consistent": consistent,
            });
            Ok(Outcome::new("trace", text, json))
        }
        Command::Embed { host, pattern, t } => {
            let h = load_hypergraph(&host)?;
            let f = load_hypergraph(&pattern)?;
            let res = extremal::find_lift_copy(&h, &f, t, cfg.budget)?;
            let (text, json) = match &res.outcome {
                LiftOutcome::Found { phi, witness, copy } => (
                    format!("found F({}): phi = {:?}, common neighbours {:?}\ncopy {:?}\n", t, phi, witness, copy),
                    json!({ "found": true, "phi": phi, "witness": witness, "copy": copy, "visits": res.visits }),
                ),
                LiftOutcome::None { best } => (
                    format!("no copy of F({}); best common neighbourhood {} (exhaustive, {} visits)\n", t, best, res.visits),
                    json!({ "found": false, "best": best, "visits": res.visits }),
                ),
            };
            Ok(Outcome::new("embed", text, json))
        }
        Command::ExSmall { n, pattern, out } => {
            let f = load_hypergraph(&pattern)?;
            let res = extremal::ex_small_with(n, &f, cfg.budget)?;
            let host_text = write_hypergraph(&HypergraphFile::plain(res.host.clone()));
            let mut text = format!("ex({}, F) = {} ({} copies of F in K_n, {} visits)\n", n, res.value, res.copies, res.visits);
            match &out {
                Some(path) => {
                    write_file(path, &host_text)?;
                    writeln!(text, "extremal host written to {}", path.display()).unwrap();
                }
                None => text.push_str(&host_text),
            }
            let json = json!({ "n": n, "value": res.value, "copies": res.copies, "visits": res.visits, "host": hg(&res.host) });
            Ok(Outcome::new("ex-small", text, json))
        }
        Command::Threshold { n, pattern, t, s } => {
            let f = load_hypergraph(&pattern)?;
            let th = extremal::kst_threshold(n, &f, t, &parse_rational(&s)?)?;
            let text = format!(
                "e(H) >= {} forces F({}) on {} vertices (exponent {}, approx {:.3}){}\n",
                th.min_edges,
                t,
                n,
                th.exponent,
                th.approx,
                if th.attainable() { "" } else { "; vacuous: exceeds C(n, r)" }
            );
            let json = json!({
                "n": n,
                "t": t,
                "uniformity": th.uniformity,
                "exponent": rs(&th.exponent),
                "min_edges": th.min_edges,
                "approx": th.approx,
                "attainable": th.attainable(),
            });
            Ok(Outcome::new("threshold", text, json))
        }
        Command::DeletionLower { n, pattern, sweep } => {
            let g = load_hypergraph(&pattern)?;
            let d = extremal::deletion_lower_with(n, &g, &hc)?;
            let mut text = format!("ex({}, G) >= {} (approx {:.3}) at p = {}\n", n, d.value, to_f64(&d.value), d.p);
            let mut json = json!({
                "n": n,
                "value": rs(&d.value),
                "approx": to_f64(&d.value),
                "p": rs(&d.p),
                "copies_in_complete": rs(&d.copies),
            });
            if let Some(steps) = sweep {
                let pts = extremal::deletion_sweep(&g, n, steps, &hc)?;
                let slope = extremal::loglog_slope(&pts);
                for p in &pts {
                    writeln!(text, "  n = {}: {:.3}", p.n, to_f64(&p.value)).unwrap();
                }
                writeln!(text, "log-log slope {}", slope.map_or(String::from("-"), |s| format!("{:.4}", s))).unwrap();
                json["sweep"] = json!(pts.iter().map(|p| json!({ "n": p.n, "value": rs(&p.value) })).collect::<Vec<_>>());
                json["slope"] = json!(slope);
            }
            Ok(Outcome::new("deletion-lower", text, json))
        }
    }
}

fn check_dominate(cfg: &RunConfig, f: &str, fp: Option<&str>, host: Option<&str>, random_hosts: usize) -> Result<Outcome, Error> {
    let f = load_hypergraph(f)?;
    let hc = cfg.hom();
    match (fp, host) {
        (Some(fp), Some(host)) => {
            let sub = load_hypergraph(fp)?;
            let h = load_hypergraph(host)?;
            let c = domination::domination_check_with(&f, &sub, &h, &hc)?;
            let text = format!(
                "{}, sides {} vs {} (t_F = {}, t_F' = {})\n",
                verdict(c.holds),
                c.lhs,
                c.rhs,
                c.pattern_density,
                c.sub_density
            );
            let json = json!({
                "holds": c.holds,
                "lhs": rs(&c.lhs),
                "rhs": rs(&c.rhs),
                "pattern_density": rs(&c.pattern_density),
                "sub_density": rs(&c.sub_density),
                "embedding": c.embedding,
            });
            Ok(Outcome::new("check-dominate", text, json))
        }
        (None, None) => {
            let fc = FalsifyConfig {
                max_host_vertices: cfg.max_host.unwrap_or(5),
                random_hosts,
                seed: cfg.seed,
                hom: hc,
                ..FalsifyConfig::default()
            };
            let outcome = match domination::dominating_falsify(&f, &fc)? {
                FalsifyOutcome::Counterexample { sub, host, check } => {
                    let text = format!(
                        "counterexample: F' with edges {:?} on host with edges {:?}: {} < {}\n",
                        sub.edges().collect::<Vec<_>>(),
                        host.edges().collect::<Vec<_>>(),
                        check.lhs,
                        check.rhs
                    );
                    let json = json!({
                        "counterexample": true,
                        "sub": hg(&sub),
                        "host": hg(&host),
                        "lhs": rs(&check.lhs),
                        "rhs": rs(&check.rhs),
                    });
                    Outcome::new("check-dominate", text, json)
                }
                FalsifyOutcome::Exhausted { subs, hosts } => {
                    let text = format!(
                        "no counterexample: {} sub-hypergraphs against {} hosts (up to {} vertices)\n",
                        subs, hosts, fc.max_host_vertices
                    );
                    Outcome::new("check-dominate", text, json!({ "counterexample": false, "subs": subs, "hosts": hosts }))
                }
            };
            Ok(if random_hosts > 0 { outcome.seeded() } else { outcome })
        }
        _ => Err(Error::Input(String::from("give both --fp and --host, or neither to search"))),
    }
}

fn certificate_text(c: &BoundCertificate) -> String {
    let mut text = format!("bound: {}\ntheorem: {}\n", c.bound, c.theorem.tag());
    if let Some(ib) = &c.instance_bound {
        writeln!(text, "instance bound: {}", ib).unwrap();
    }
    for (k, v) in &c.inputs {
        writeln!(text, "input {}: {}", k, v).unwrap();
    }
    text.push_str("checks:\n");
    for k in &c.transcript {
        writeln!(text, "  [{}] {}: {}", if k.passed { "ok" } else { "FAIL" }, k.name, k.detail).unwrap();
    }
    if !c.assumptions.is_empty() {
        text.push_str("assumptions:\n");
        for a in &c.assumptions {
            let j = AssumptionJson::of(a);
            writeln!(text, "  - {} is {} ({}{})", a.label, j.property, j.source, j.reference.map_or(String::new(), |r| format!(": {}", r)))
                .unwrap();
        }
    }
    text
}

fn bound(which: BoundCommand) -> Result<Outcome, Error> {
    let cert = match which {
        BoundCommand::Unified { pattern, m, case, assert } => {
            let f = load_partite(&pattern)?;
            let m = load_hypergraph(&m)?;
            let asserted = assert.iter().map(|a| parse_assertion(a)).collect::<Result<Vec<_>, _>>()?;
            let case = match case {
                CaseArg::Components => UnifiedCase::SidorenkoComponents,
                CaseArg::Dominating => UnifiedCase::Dominating,
            };
            analysis::bound_unified(&f, &m, case, &asserted)?
        }
        BoundCommand::TightCycle { ell } => analysis::bound_tight_cycle(ell)?,
        BoundCommand::Sparse { pattern } => analysis::bound_sparse(&load_partite(&pattern)?)?,
        BoundCommand::GridLinks { pattern, k } => analysis::bound_grid_links(&load_partite(&pattern)?, k)?,
        BoundCommand::Lift { s, edges, t } => analysis::lift_bound(&parse_rational(&s)?, edges, &t)?,
        BoundCommand::BipartiteLinks { pattern, g } => extremal::bipartite_links_bound(&load_partite(&pattern)?, &load_hypergraph(&g)?)?,
    };
    let cj = CertificateJson::bound(&cert);
    let json = serde_json::to_value(&cj)?;
    Ok(Outcome::new("bound", certificate_text(&cert), json).with_certificate(cj))
}
