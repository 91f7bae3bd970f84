use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use super::args::{Cli, Command, FamilyArg, GraphArgs, ListArgs, RoundingArg};
use super::{Report, EXIT_BUDGET, EXIT_FAILS, EXIT_HOLDS};
use crate::bounds::{
    audit_graph, avg_degree_coefficient, format_decimal, min_edges, table1, BoundSource, Rendering,
    Trichotomy,
};
use crate::cover::{cover_from_lists, Cover, EnumerationOptions, HardFamily};
use crate::discharging::{check_cases, component_sum_vs_phi, discharge, ComponentSumReport};
use crate::error::{Error, Result};
use crate::io::{read_cover, read_graph_auto, write_cover, MultigraphDocument};
use crate::multigraph::{BlockFamily, ComponentClass, Multigraph};
use crate::potential::{is_exceptional, phi, rho_set, PotentialParams};
use crate::solver::{
    chi_dp, find_transversal, is_dp_critical, is_dp_h_colorable, is_h_minimal, verify_lemma31,
    ChiDp, ColorabilityVerdict, CriticalityStatus, DecisionOptions, Deletion, Status,
};

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text)
        .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))
}

fn load_graph(args: &GraphArgs) -> Result<MultigraphDocument> {
    read_graph_auto(&read_text(&args.graph)?)
}

/// Resolves `--h`: a constant, a file of integers, or the document's `h`.
fn list_sizes(doc: &MultigraphDocument, lists: &ListArgs) -> Result<Vec<usize>> {
    let n = doc.graph.vertex_count();
    let h = match &lists.h {
        Some(spec) => match spec.parse::<usize>() {
            Ok(c) => vec![c; n],
            Err(_) => {
                let text = read_text(Path::new(spec))?;
                let text = text.trim();
                if text.starts_with('[') {
                    serde_json::from_str(text)?
                } else {
                    text.split_whitespace()
                        .map(|w| {
                            w.parse::<usize>().map_err(|_| {
                                Error::InvalidParameter(format!(
                                    "{w:?} in {spec} is not a list size"
                                ))
                            })
                        })
                        .collect::<Result<Vec<_>>>()?
                }
            }
        },
        None => doc
            .h
            .clone()
            .ok_or_else(|| Error::InvalidParameter("no list sizes: pass --h".into()))?,
    };
    if h.len() != n {
        return Err(Error::ListSizeLength {
            expected: n,
            got: h.len(),
        });
    }
    Ok(h)
}

fn infer_k(h: &[usize], lists: &ListArgs) -> usize {
    lists
        .k
        .unwrap_or_else(|| h.iter().copied().max().map_or(1, |m| m + 1))
}

fn options(cli: &Cli) -> DecisionOptions {
    DecisionOptions {
        max_covers: cli.global.max_covers,
        max_nodes: cli.global.max_nodes,
        jobs: cli.global.jobs.max(1),
        ..DecisionOptions::default()
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Colorable => "colorable",
        Status::NotColorable => "not colorable",
        Status::Undecided => "undecided",
    }
}

fn exit_for(s: Status) -> i32 {
    match s {
        Status::Colorable => EXIT_HOLDS,
        Status::NotColorable => EXIT_FAILS,
        Status::Undecided => EXIT_BUDGET,
    }
}

fn cover_json(c: &Cover) -> Value {
    serde_json::from_str(&write_cover(c)).expect("cover documents are JSON")
}

fn verdict_json(v: &ColorabilityVerdict) -> Value {
    json!({
        "status": status_word(v.status),
        "witness": v.witness.as_ref().map(|t| t.0.clone()),
        "bad_cover": v.bad_cover.as_ref().map(cover_json),
        "covers_examined": v.covers_examined.to_string(),
        "reason": v.reason,
    })
}

fn graph_summary(g: &Multigraph) -> String {
    format!("{} vertices, {} edges", g.vertex_count(), g.edge_count())
}

fn plain(exit: i32, text: String, json: Value) -> Report {
    Report {
        exit,
        text,
        json,
        csv: None,
    }
}

pub(crate) fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Solve { cover } => {
            let c = read_cover(&read_text(cover)?)?;
            let v = find_transversal(&c, cli.global.max_nodes)?;
            let mut text = format!("{}\n", status_word(v.status));
            if let Some(w) = &v.witness {
                writeln!(text, "witness: {:?}", w.0).unwrap();
            }
            if let Some(r) = &v.reason {
                writeln!(text, "reason: {r}").unwrap();
            }
            let mut j = verdict_json(&v);
            j["bad_cover"] = Value::Null;
            Ok(plain(exit_for(v.status), text, j))
        }
        Command::Dpcolor {
            graph,
            lists,
            certificate,
            raw,
        } => {
            let doc = load_graph(graph)?;
            let h = list_sizes(&doc, lists)?;
            let mut opts = options(cli);
            if *raw {
                opts.enumeration = EnumerationOptions::raw();
            }
            let v = is_dp_h_colorable(&doc.graph, &h, &opts)?;
            let mut text = format!(
                "DP h-colorable: {}\ncovers examined: {}\n",
                status_word(v.status),
                v.covers_examined
            );
            if let Some(c) = &v.bad_cover {
                let shape: Vec<String> = c
                    .conflict_components()
                    .iter()
                    .map(|(n, m)| format!("{n}v/{m}e"))
                    .collect();
                writeln!(text, "bad cover: H has components [{}]", shape.join(", ")).unwrap();
                if let Some(path) = certificate {
                    write_text(path, &write_cover(c))?;
                    writeln!(text, "certificate written to {}", path.display()).unwrap();
                }
            }
            if let Some(r) = &v.reason {
                writeln!(text, "reason: {r}").unwrap();
            }
            Ok(plain(exit_for(v.status), text, verdict_json(&v)))
        }
        Command::Chidp { graph, max_k } => {
            let doc = load_graph(graph)?;
            let r = chi_dp(&doc.graph, *max_k, &options(cli))?;
            Ok(match r {
                ChiDp::Exact(k) => {
                    plain(EXIT_HOLDS, format!("chi_DP = {k}\n"), json!({"chi_dp": k}))
                }
                ChiDp::ExceedsMax(m) => plain(
                    EXIT_FAILS,
                    format!("chi_DP exceeds {m}\n"),
                    json!({"chi_dp": null, "exceeds": m}),
                ),
                ChiDp::Undecided { k, reason } => plain(
                    EXIT_BUDGET,
                    format!("undecided at k = {k}: {reason}\n"),
                    json!({"chi_dp": null, "undecided_at": k, "reason": reason}),
                ),
            })
        }
        Command::Critical { graph, lists } => {
            let doc = load_graph(graph)?;
            let (report, label) = if lists.h.is_some() || (lists.k.is_none() && doc.h.is_some()) {
                let h = list_sizes(&doc, lists)?;
                (
                    is_h_minimal(&doc.graph, &h, &options(cli))?,
                    "h-minimal".to_string(),
                )
            } else {
                let k = lists
                    .k
                    .ok_or_else(|| Error::InvalidParameter("critical needs --k or --h".into()))?;
                (
                    is_dp_critical(&doc.graph, k, &options(cli))?,
                    format!("DP {k}-critical"),
                )
            };
            let exceptional = match lists.k {
                Some(k) if k >= 5 && report.status == CriticalityStatus::HMinimal => {
                    exceptional_label(&doc.graph, k)
                }
                _ => None,
            };
            let mut text = match report.status {
                CriticalityStatus::HMinimal => label.clone(),
                CriticalityStatus::Colorable => format!("not {label}: the graph is colorable"),
                CriticalityStatus::HasNonColorableProperSubgraph => {
                    format!("not {label}: a proper subgraph is already not colorable")
                }
                CriticalityStatus::Undecided => {
                    format!("undecided: {}", report.reason.clone().unwrap_or_default())
                }
            };
            if let Some(e) = exceptional {
                write!(text, " (exceptional: {e})").unwrap();
            }
            text.push('\n');
            if let Some(p) = &report.offending {
                let what = match p.deletion {
                    Deletion::EdgeCopy(u, v) => format!("one copy of {u}-{v} removed"),
                    Deletion::Vertex(v) => format!("isolated vertex {v} removed"),
                };
                writeln!(text, "offending subgraph: {what}").unwrap();
            }
            let exit = match report.holds() {
                Some(true) => EXIT_HOLDS,
                Some(false) => EXIT_FAILS,
                None => EXIT_BUDGET,
            };
            let j = json!({
                "status": format!("{:?}", report.status),
                "exceptional": exceptional,
                "bad_cover": report.bad_cover.as_ref().map(cover_json),
                "offending_deletion": report.offending.as_ref().map(|p| format!("{:?}", p.deletion)),
                "offending_bad_cover": report.offending.as_ref().map(|p| cover_json(&p.bad_cover)),
                "reason": report.reason,
            });
            Ok(plain(exit, text, j))
        }
        Command::Potential { graph, lists, set } => {
            let doc = load_graph(graph)?;
            let h = list_sizes(&doc, lists)?;
            let params = PotentialParams::new(infer_k(&h, lists))?;
            let all: Vec<usize> = (0..doc.graph.vertex_count()).collect();
            let a = set.clone().unwrap_or(all);
            let value = rho_set(&doc.graph, &h, &a, &params)?;
            let text = format!(
                "k = {}, lambda = {}\nrho({:?}) = {value}\n",
                params.k, params.lambda, a
            );
            Ok(plain(
                EXIT_HOLDS,
                text,
                json!({"k": params.k, "lambda": params.lambda, "set": a, "rho": value}),
            ))
        }
        Command::Phi { graph, lists } => {
            let doc = load_graph(graph)?;
            let h = list_sizes(&doc, lists)?;
            let params = PotentialParams::new(infer_k(&h, lists))?;
            let r = phi(&doc.graph, &h, &params)?;
            let hy = r.hypotheses;
            let above = r.value > params.alpha + 1;
            let text = format!(
                "Phi = {}\nalpha = {}\nsigma = {}, excess = {}, top = {}, below top = {}\n\
                 list sizes in 3..=k-1: {}\nlists cover degrees: {}\nGDP-tree: {}\nno (k-1)- or (k-2)-regular block: {}\n\
                 Phi > 1 + alpha: {above}\n",
                r.value,
                params.alpha,
                r.sigma,
                r.excess,
                r.top,
                r.below_top,
                hy.list_sizes_in_range,
                hy.lists_cover_degrees,
                hy.gdp_tree,
                hy.no_forbidden_regular_block
            );
            let exit = if hy.all() && !above {
                EXIT_FAILS
            } else {
                EXIT_HOLDS
            };
            Ok(plain(
                exit,
                text,
                json!({
                    "phi": r.value.to_string(),
                    "alpha": params.alpha.to_string(),
                    "sigma": r.sigma,
                    "excess": r.excess,
                    "top": r.top,
                    "below_top": r.below_top,
                    "hypotheses": {
                        "list_sizes_in_range": hy.list_sizes_in_range,
                        "lists_cover_degrees": hy.lists_cover_degrees,
                        "gdp_tree": hy.gdp_tree,
                        "no_forbidden_regular_block": hy.no_forbidden_regular_block,
                    },
                    "exceeds_one_plus_alpha": above,
                }),
            ))
        }
        Command::Classify { graph } => {
            let doc = load_graph(graph)?;
            let c = doc.graph.classify_gdp();
            let mut text = format!("{}\n", graph_summary(&doc.graph));
            let mut comps = Vec::new();
            for comp in &c.components {
                writeln!(
                    text,
                    "component {:?}: {}",
                    comp.vertices,
                    class_name(comp.class)
                )
                .unwrap();
                let mut blocks = Vec::new();
                for (b, f) in &comp.blocks {
                    writeln!(text, "  block {:?}: {}", b, family_name(f)).unwrap();
                    blocks.push(json!({"vertices": b, "family": family_name(f)}));
                }
                comps.push(json!({"vertices": comp.vertices, "class": class_name(comp.class), "blocks": blocks}));
            }
            Ok(plain(
                EXIT_HOLDS,
                text,
                json!({"gdp_forest": c.is_gdp_forest(), "gdp_tree": c.is_gdp_tree(), "gallai_tree": c.is_gallai_tree(), "components": comps}),
            ))
        }
        Command::Bounds {
            table,
            k,
            source,
            n,
            rounding,
        } => {
            let mode = match rounding {
                RoundingArg::Truncate => Rendering::Truncate,
                RoundingArg::HalfEven => Rendering::RoundHalfEven,
            };
            if *table || source.is_none() {
                let t = table1(k);
                let rows: Vec<Value> = t
                    .rows
                    .iter()
                    .map(|(k, cells)| {
                        let mut row = serde_json::Map::new();
                        row.insert("k".into(), json!(k));
                        for (s, c) in t.sources.iter().zip(cells) {
                            row.insert(
                                s.tag().into(),
                                json!(c.map(|v| format_decimal(v, 4, mode))),
                            );
                        }
                        Value::Object(row)
                    })
                    .collect();
                return Ok(Report {
                    exit: EXIT_HOLDS,
                    text: t.to_text(mode),
                    json: json!({"rows": rows}),
                    csv: Some(t.to_csv(mode)),
                });
            }
            let tag = source.as_deref().unwrap_or_default();
            let src = BoundSource::from_tag(tag)
                .ok_or_else(|| Error::InvalidParameter(format!("unknown bound source {tag:?}")))?;
            let mut text = String::new();
            let mut csv = String::from("source,k,n,value,exact\n");
            let mut rows = Vec::new();
            for &kk in k {
                let (value, what) = match n {
                    Some(n) => (min_edges(src, *n, kk)?, "edges"),
                    None => (avg_degree_coefficient(src, kk)?, "coefficient"),
                };
                let dec = format_decimal(value, 4, mode);
                writeln!(
                    text,
                    "{} k={kk}{}: {what} >= {value} ({dec})",
                    src.tag(),
                    n.map(|n| format!(" n={n}")).unwrap_or_default()
                )
                .unwrap();
                writeln!(
                    csv,
                    "{},{kk},{},{dec},{value}",
                    src.tag(),
                    n.map(|n| n.to_string()).unwrap_or_default()
                )
                .unwrap();
                rows.push(json!({"source": src.tag(), "k": kk, "n": n, "exact": value.to_string(), "decimal": dec}));
            }
            Ok(Report {
                exit: EXIT_HOLDS,
                text,
                json: json!({"rows": rows}),
                csv: Some(csv),
            })
        }
        Command::Audit { graph, k } => {
            let doc = load_graph(graph)?;
            let a = audit_graph(&doc.graph, *k)?;
            let case = match a.case {
                Trichotomy::Complete => "exceptional: K_k",
                Trichotomy::QuadrupleEdgeOrDoubleCycle => "exceptional: K_2^4 or double cycle",
                Trichotomy::EdgeThreshold => "edge threshold met",
                Trichotomy::Neither => "none: cannot be DP k-critical",
            };
            let text = format!(
                "{}\nk = {}, lambda = {}\nedge threshold: {} (met: {})\nrho with h = k-1: {}\n{}case: {case}\n",
                graph_summary(&doc.graph),
                a.k,
                a.lambda,
                a.threshold,
                a.meets_threshold,
                a.potential,
                a.potential_matches_threshold
                    .map(|m| format!("rho <= -2 agrees with threshold: {m}\n"))
                    .unwrap_or_default()
            );
            let exit = if a.case == Trichotomy::Neither {
                EXIT_FAILS
            } else {
                EXIT_HOLDS
            };
            Ok(plain(
                exit,
                text,
                json!({
                    "k": a.k, "lambda": a.lambda, "vertices": a.vertices, "edges": a.edges,
                    "threshold": a.threshold.to_string(), "meets_threshold": a.meets_threshold,
                    "potential": a.potential, "potential_matches_threshold": a.potential_matches_threshold,
                    "case": format!("{:?}", a.case),
                }),
            ))
        }
        Command::Discharge { graph, lists } => {
            let doc = load_graph(graph)?;
            let h = list_sizes(&doc, lists)?;
            let ledger = discharge(&doc.graph, &h, infer_k(&h, lists))?;
            let cases = check_cases(&ledger);
            let sums = component_sum_vs_phi(&ledger);
            let case_of = |v: usize| cases.iter().find(|c| c.vertex == v);
            let mut text = format!(
                "S0* = {:?}, x0* = {:?}, y0* = {:?}\nlow = {:?}\n{:>3} {:>3} {:>3} {:>9} {:>9} {:>9} {:>9} {:>9}\n",
                ledger.sets.s0_star, ledger.sets.x0_star, ledger.sets.y0_star, ledger.sets.low_set,
                "v", "h", "d", "case", "initial", "final", "bound", "holds"
            );
            let mut csv =
                String::from("vertex,h,degree,case,initial,after_pairs,final,bound,holds\n");
            let mut rows = Vec::new();
            for vc in &ledger.vertices {
                let c = case_of(vc.vertex);
                let tag = c
                    .map(|c| format!("{:?}", c.tag))
                    .unwrap_or_else(|| "-".into());
                let bound = c
                    .and_then(|c| c.bound)
                    .map(|b| b.to_string())
                    .unwrap_or_else(|| "-".into());
                let holds = c.map(|c| c.holds.to_string()).unwrap_or_else(|| "-".into());
                writeln!(
                    text,
                    "{:>3} {:>3} {:>3} {:>9} {:>9} {:>9} {:>9} {:>9}",
                    vc.vertex, vc.h, vc.degree, tag, vc.initial, vc.final_charge, bound, holds
                )
                .unwrap();
                writeln!(
                    csv,
                    "{},{},{},{tag},{},{},{},{bound},{holds}",
                    vc.vertex, vc.h, vc.degree, vc.initial, vc.after_pairs, vc.final_charge
                )
                .unwrap();
                rows.push(json!({
                    "vertex": vc.vertex, "h": vc.h, "degree": vc.degree, "case": tag,
                    "initial": vc.initial.to_string(), "after_pairs": vc.after_pairs.to_string(),
                    "final": vc.final_charge.to_string(), "bound": bound, "holds": holds,
                }));
            }
            let total = ledger.total();
            writeln!(
                text,
                "total = {total}, rho = {}, outside S0* = {}",
                ledger.potential,
                ledger.outside_total()
            )
            .unwrap();
            let components: Vec<Value> = match &sums {
                ComponentSumReport::Vacuous => {
                    writeln!(text, "low part of S0*: empty").unwrap();
                    Vec::new()
                }
                ComponentSumReport::Components(cs) => cs
                    .iter()
                    .map(|c| {
                        writeln!(
                            text,
                            "low component {:?}: sum = {}, Phi = {}, sum <= -Phi + alpha: {}, strict < -1: {}",
                            c.vertices,
                            c.charge_sum,
                            c.phi,
                            c.sum_within_phi_bound,
                            c.strict_bound.map_or("not asserted".to_string(), |b| b.to_string())
                        )
                        .unwrap();
                        json!({
                            "vertices": c.vertices, "sum": c.charge_sum.to_string(), "phi": c.phi.to_string(),
                            "within_phi_bound": c.sum_within_phi_bound, "strict": c.strict_bound,
                        })
                    })
                    .collect(),
            };
            let ok = total == num_rational::Ratio::from_integer(ledger.potential)
                && cases.iter().all(|c| c.holds)
                && sums.holds();
            Ok(Report {
                exit: if ok { EXIT_HOLDS } else { EXIT_FAILS },
                text,
                json: json!({
                    "s0_star": ledger.sets.s0_star, "x0_star": ledger.sets.x0_star, "y0_star": ledger.sets.y0_star,
                    "low": ledger.sets.low_set, "vertices": rows, "total": total.to_string(),
                    "rho": ledger.potential, "outside_s0_star": ledger.outside_total().to_string(),
                    "components": components, "all_checks_hold": ok,
                }),
                csv: Some(csv),
            })
        }
        Command::Lemma31 { family, t, q } => {
            let fam = match family {
                FamilyArg::EvenCycle => HardFamily::EvenCycle,
                FamilyArg::Clique => HardFamily::Clique,
                FamilyArg::OddCycle => HardFamily::OddCycle,
            };
            let r = verify_lemma31(fam, *t, *q, &options(cli))?;
            let verdict = match r.passed {
                Some(true) => "pass",
                Some(false) => "fail",
                None => "undecided",
            };
            let mut text = format!(
                "{verdict}\ncovers: {}\nnot colorable: {}\nhard cover not colorable: {}\n",
                r.covers, r.non_colorable, r.hard_cover_non_colorable
            );
            if let Some(reason) = &r.reason {
                writeln!(text, "reason: {reason}").unwrap();
            }
            let exit = match r.passed {
                Some(true) => EXIT_HOLDS,
                Some(false) => EXIT_FAILS,
                None => EXIT_BUDGET,
            };
            Ok(plain(
                exit,
                text,
                json!({
                    "result": verdict, "covers": r.covers.to_string(), "non_colorable": r.non_colorable.to_string(),
                    "hard_cover_non_colorable": r.hard_cover_non_colorable,
                    "counterexample": r.counterexample.as_ref().map(cover_json), "reason": r.reason,
                }),
            ))
        }
        Command::Listcover {
            graph,
            lists,
            output,
        } => {
            let doc = load_graph(graph)?;
            let raw: Vec<Vec<String>> = serde_json::from_str(&read_text(lists)?)?;
            let lc = cover_from_lists(&doc.graph, &raw)?;
            let text = write_cover(&lc.cover);
            if let Some(path) = output {
                write_text(path, &text)?;
            }
            let j = json!({"cover": cover_json(&lc.cover), "palette": lc.palette});
            Ok(plain(EXIT_HOLDS, text, j))
        }
    }
}

fn exceptional_label(g: &Multigraph, k: usize) -> Option<&'static str> {
    if g.vertex_count() == k && g.is_complete_simple() {
        Some("K_k")
    } else if k == 5 && !g.is_simple() && is_exceptional(g, 5) {
        Some(if g.vertex_count() == 2 {
            "K_2^4"
        } else {
            "double cycle"
        })
    } else {
        None
    }
}

fn class_name(c: ComponentClass) -> &'static str {
    match c {
        ComponentClass::GallaiTree => "Gallai tree",
        ComponentClass::GdpTreeOnly => "GDP-tree (not Gallai)",
        ComponentClass::NotGdpTree => "not a GDP-tree",
    }
}

fn family_name(f: &BlockFamily) -> String {
    match *f {
        BlockFamily::Clique { t, s } => format!("K_{t}^{s}"),
        BlockFamily::Cycle { t, s } => format!("C_{t}^{s}"),
        BlockFamily::Neither => "neither".into(),
    }
}
