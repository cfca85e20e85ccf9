use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use super::output::{ErrorReport, ExitCode, Report, Timing};
use super::{BudgetArgs, Cli, Command, Format, GraphArgs, ProviderKind};
use crate::cover::{make_cover, validate_cover, CoverParams};
use crate::emb::{
    embedding_dimension, embedding_dimension_oracle, embeds_in_dim, Provider, SearchLimits,
    SearchOutcome,
};
use crate::error::{Error, Result};
use crate::graph::{generate_graph, growth_stats, load_graph, FiniteGraph};
use crate::lipschitz::{
    check_distance_lower_bound, extend_lipschitz, fold_box, fold_map, is_k_lipschitz,
    is_r_locally_injective, is_valid_embedding, LatticeMap, PartialMap,
};
use crate::pipeline::{extract_cocycle, key_lemma_map, merge_maps, shift_chart, verify_cocycle};

/// Largest window the fold table will enumerate.
const MAX_FOLD_WINDOW: u128 = 1_000_000;

struct Outcome {
    result: Value,
    code: ExitCode,
}

impl Outcome {
    fn new(result: impl Serialize, code: ExitCode) -> Result<Self> {
        Ok(Self {
            result: serde_json::to_value(result)?,
            code,
        })
    }

    fn ok(result: impl Serialize) -> Result<Self> {
        Self::new(result, ExitCode::Ok)
    }
}

/// Runs one command, writes its report and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let start = Instant::now();
    let name = cli.command.name();
    let (report, code) = match dispatch(cli) {
        Ok(out) => (
            Report {
                command: name,
                result: Some(out.result),
                error: None,
                timing: timing(start),
            },
            out.code,
        ),
        Err(e) => {
            eprintln!("gridemb {name}: {e}");
            (
                Report {
                    command: name,
                    result: None,
                    error: Some(ErrorReport::new(&e)),
                    timing: timing(start),
                },
                ExitCode::of_error(&e),
            )
        }
    };
    match emit(cli, &report) {
        Ok(()) => code as i32,
        Err(e) => {
            eprintln!("gridemb {name}: cannot write report: {e}");
            ExitCode::Invalid as i32
        }
    }
}

fn timing(start: Instant) -> Timing {
    Timing {
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<()> {
    let text = match cli.output {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report)?;
            s.push('\n');
            s
        }
        Format::Tsv => super::flatten_tsv(&serde_json::to_value(report)?),
    };
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn load(args: &GraphArgs) -> Result<FiniteGraph> {
    match (&args.graph, &args.family) {
        (Some(path), _) => load_graph(path, args.auto_edges),
        (None, Some(family)) => generate_graph(family),
        (None, None) => Err(Error::InvalidParameter(
            "give a graph file or --family".into(),
        )),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

fn save_map(path: Option<&Path>, map: &LatticeMap) -> Result<()> {
    if let Some(path) = path {
        fs::write(path, serde_json::to_string_pretty(map)? + "\n")?;
    }
    Ok(())
}

fn limits(b: &BudgetArgs) -> SearchLimits {
    SearchLimits {
        max_nodes: b.max_nodes,
        time_limit: Duration::from_millis(b.time_limit_ms),
    }
}

fn default_cell(radius: u64, scale: Option<u64>) -> u64 {
    scale.unwrap_or_else(|| radius.saturating_mul(3).saturating_add(1))
}

fn violated_if(ok: bool) -> ExitCode {
    if ok {
        ExitCode::Ok
    } else {
        ExitCode::Violated
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Analyze { graph } => {
            let g = load(graph)?;
            Outcome::ok(json!({
                "n": g.n(),
                "edges": g.edge_count(),
                "components": g.component_sets().len(),
                "connected": g.is_connected(),
                "diameter": g.diameter(),
                "max_degree": (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0),
                "coord_dim": g.coord_dim(),
                "growth": growth_stats(&g),
            }))
        }

        Command::Embdim {
            graph,
            budget,
            oracle,
        } => {
            let g = load(graph)?;
            let cert = embedding_dimension(&g, limits(budget))?;
            let mut code = if cert.stats.budget_exceeded.is_empty() {
                ExitCode::Ok
            } else {
                ExitCode::Budget
            };
            let mut result = serde_json::to_value(&cert)?;
            if *oracle {
                let d = embedding_dimension_oracle(&g)?;
                let agrees = d == cert.d;
                code = code.worst(violated_if(agrees));
                result["oracle"] = json!({ "d": d, "agrees": agrees });
            }
            Ok(Outcome { result, code })
        }

        Command::Embed {
            graph,
            budget,
            dim,
            save_map: path,
        } => {
            let g = load(graph)?;
            let (map, nodes, code) = match dim {
                Some(d) => {
                    let search = embeds_in_dim(&g, *d, limits(budget));
                    match search.outcome {
                        SearchOutcome::Embedded(m) => (Some(m), search.stats.nodes, ExitCode::Ok),
                        SearchOutcome::NotEmbeddable => {
                            (None, search.stats.nodes, ExitCode::Violated)
                        }
                        SearchOutcome::BudgetExceeded => {
                            (None, search.stats.nodes, ExitCode::Budget)
                        }
                    }
                }
                None => {
                    let cert = embedding_dimension(&g, limits(budget))?;
                    (Some(cert.witness), cert.stats.nodes, ExitCode::Ok)
                }
            };
            if let Some(m) = &map {
                save_map(path.as_deref(), m)?;
            }
            Outcome::new(
                json!({
                    "embedded": map.is_some(),
                    "dim": map.as_ref().map_or(*dim, |m| Some(m.dim())),
                    "nodes": nodes,
                    "budget_exceeded": code == ExitCode::Budget,
                    "map": map,
                }),
                code,
            )
        }

        Command::Fold { radius, window } => {
            if window.len() > MAX_FOLD_WINDOW {
                return Err(Error::SizeCap {
                    found: window.len().min(usize::MAX as u128) as usize,
                    cap: MAX_FOLD_WINDOW as usize,
                });
            }
            let table = window
                .points()
                .map(|p| Ok(json!({ "image": fold_map(*radius, &p)?, "point": p })))
                .collect::<Result<Vec<_>>>()?;
            Outcome::ok(json!({
                "radius": radius,
                "window": window,
                "codomain": fold_box(window.dim(), *radius),
                "table": table,
            }))
        }

        Command::Extend {
            graph,
            map,
            save_map: path,
        } => {
            let g = load(graph)?;
            let partial: PartialMap = read_json(map)?;
            let ext = extend_lipschitz(&g, &partial)?;
            let lipschitz = is_k_lipschitz(&g, &ext, 1)?;
            save_map(path.as_deref(), &ext)?;
            Outcome::new(
                json!({ "lipschitz": lipschitz, "map": ext }),
                violated_if(lipschitz.holds),
            )
        }

        Command::Cover {
            graph,
            cover,
            radius,
            scale,
            bound,
        } => {
            let g = load(graph)?;
            let params = CoverParams {
                cell: default_cell(*radius, *scale),
                radius: *radius,
            };
            let c = make_cover(&g, *cover, params)?;
            let report = validate_cover(&g, &c, c.scale as usize, *bound)?;
            let code = violated_if(report.within_bound);
            Outcome::new(json!({ "cover": c, "report": report }), code)
        }

        Command::Pipeline {
            graph,
            budget,
            radius,
            cover,
            scale,
            provider,
            dim,
            map,
            save_map: path,
        } => {
            let g = load(graph)?;
            let kind = provider.unwrap_or(if g.coords().is_some() {
                ProviderKind::Ambient
            } else {
                ProviderKind::Solver
            });
            let provider = match kind {
                ProviderKind::Ambient => Provider::Ambient,
                ProviderKind::Supplied => {
                    let path = map.as_deref().ok_or_else(|| {
                        Error::InvalidParameter("supplied provider needs --map".into())
                    })?;
                    Provider::Supplied(read_json(path)?)
                }
                ProviderKind::Solver => {
                    let dim = match dim {
                        Some(d) => *d,
                        None => embedding_dimension(&g, limits(budget))?.d,
                    };
                    Provider::Solver {
                        dim,
                        limits: limits(budget),
                    }
                }
            };
            let params = CoverParams {
                cell: default_cell(*radius, *scale),
                radius: *radius,
            };
            let c = make_cover(&g, *cover, params)?;
            let report = key_lemma_map(&g, *radius, &c, &provider)?;
            save_map(path.as_deref(), &report.output)?;
            Outcome::new(&report, violated_if(report.holds()))
        }

        Command::Merge {
            map,
            with,
            graph,
            save_map: path,
        } => {
            let f: LatticeMap = read_json(map)?;
            let h: LatticeMap = read_json(with)?;
            let merged = merge_maps(&f, &h)?;
            let mut ok = merged.max_identity.holds;
            let mut result = serde_json::to_value(&merged)?;
            if graph.graph.is_some() || graph.family.is_some() {
                let g = load(graph)?;
                let checks = [&f, &h, &merged.map].map(|m| is_k_lipschitz(&g, m, 1));
                let [cf, ch, cm] = checks;
                let (cf, ch, cm) = (cf?, ch?, cm?);
                ok &= cf.holds && ch.holds && cm.holds;
                result["lipschitz"] = json!({ "map": cf, "with": ch, "merged": cm });
            }
            save_map(path.as_deref(), &merged.map)?;
            Ok(Outcome {
                result,
                code: violated_if(ok),
            })
        }

        Command::Verify {
            graph,
            map,
            lipschitz,
            injective,
            embedding,
            lower_bound,
            epsilon,
            r0,
            cocycle,
            samples,
        } => {
            let g = load(graph)?;
            let m: LatticeMap = read_json(map)?;
            let mut result = serde_json::Map::new();
            let mut ok = true;
            let mut record = |key: &str, holds: bool, value: Value| {
                ok &= holds;
                result.insert(key.to_string(), value);
            };
            if let Some(k) = lipschitz {
                let c = is_k_lipschitz(&g, &m, *k)?;
                record("lipschitz", c.holds, json!({ "k": k, "check": c }));
            }
            if let Some(r) = injective {
                let c = is_r_locally_injective(&g, &m, *r)?;
                record(
                    "locally_injective",
                    c.holds,
                    json!({ "radius": r, "check": c }),
                );
            }
            if *embedding {
                let c = is_valid_embedding(&g, &m)?;
                record("embedding", c.holds, serde_json::to_value(c)?);
            }
            if *lower_bound {
                let c = check_distance_lower_bound(&g, &m, *epsilon, *r0)?;
                record(
                    "lower_bound",
                    c.holds,
                    json!({ "epsilon": epsilon, "r0": r0, "check": c }),
                );
            }
            if *cocycle {
                let c = extract_cocycle(&g, &m)?;
                let identities = verify_cocycle(&c, *samples, cli.seed);
                record(
                    "cocycle",
                    c.kernel_trivial.holds && identities.holds,
                    json!({ "kernel_trivial": c.kernel_trivial, "identities": identities }),
                );
            }
            if result.is_empty() {
                return Err(Error::InvalidParameter(
                    "choose at least one of --lipschitz, --injective, --embedding, --lower-bound, --cocycle".into(),
                ));
            }
            result.insert("holds".into(), Value::Bool(ok));
            Outcome::new(result, violated_if(ok))
        }

        Command::Chart {
            graph,
            vertex,
            window,
        } => {
            let g = load(graph)?;
            Outcome::ok(shift_chart(&g, *vertex, window)?)
        }
    }
}
