use std::collections::BTreeSet;
use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};
use sepgraph_bratteli::{budget_from_env, grothendieck, monoid_presentation, tower, BratteliTower};
use sepgraph_classify::{classify_simplicity, SimplicityVerdict};
use sepgraph_core::{save, DiGraph, EdgeId, SeparatedGraph, VertexId};
use sepgraph_hereditary::{closure_hs, enumerate_hsets, is_hereditary, is_saturated, quotient_graph, VertexSet};
use sepgraph_prime::{is_cantor, is_prime, CantorReport, PrimeVerdict, SignedEdgeSet};
use sepgraph_subshift::{
    enumerate_balls, prune_allowed_balls, represent_finite_type, Ball, RecodedAlphabet, DEFAULT_MAX_BALLS,
};
use sepgraph_wordshift::{
    finite_type_detect, forbidden_to_hset, parse_word_list, word_quotient, FiniteTypeVerdict, WordIdeal,
};

use crate::error::CliError;
use crate::export::{document, graph_json, graph_summary, render_json, to_dot};
use crate::input::{load_graph, read_text, split_list, write_file, SubshiftSpec};
use crate::repro;
use crate::{Command, GraphFormat};

/// A failed command, with any output produced before the failure.
pub(crate) struct Failure {
    pub error: Box<CliError>,
    pub output: Option<String>,
}

impl<E: Into<CliError>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure { error: Box::new(e.into()), output: None }
    }
}

pub(crate) fn dispatch(command: Command) -> Result<String, Failure> {
    Ok(match command {
        Command::Validate { input } => validate(&input)?,
        Command::Level { n, input, format, output } => {
            let t = build_tower(&load_graph(&input)?, n)?;
            emit_graph(t.level(n), format, &format!("level {n}"), output.as_deref())?
        }
        Command::Tower { n, input, output } => tower_command(&input, n, output.as_deref())?,
        Command::Hsets { input, n, cap } => hsets(&input, n, cap)?,
        Command::Closure { input, n, set } => closure(&input, n, &set)?,
        Command::Quotient { input, n, set, format, output } => {
            let t = build_tower(&load_graph(&input)?, n)?;
            let g = t.level(n);
            let h = VertexSet::from_names(g, n, &split_list(&set))?;
            emit_graph(&quotient_graph(g, &h)?, format, &format!("level {n} quotient"), output.as_deref())?
        }
        Command::K0 { input, n } => k0(&input, n)?,
        Command::Balls { input, n } => balls(&input, n)?,
        Command::Recode { spec, n } => recode(&spec, n)?,
        Command::Represent { spec, format, output } => represent(&spec, format, output.as_deref())?,
        Command::Classify { input, bound } => classify(&input, bound)?,
        Command::Cantor { input } => {
            let g = load_graph(&input)?;
            render_json(&document(cantor_json(&g, &is_cantor(&g))))
        }
        Command::Prime { input } => prime(&input)?,
        Command::Fromwords { words, n, orbit, even, detect, quotient, output } => {
            fromwords(words.as_deref(), n, orbit, even, detect, quotient, output.as_deref())?
        }
        Command::Dot { input, n, output } => {
            let t = build_tower(&load_graph(&input)?, n)?;
            emit_graph(t.level(n), GraphFormat::Dot, &format!("level {n}"), output.as_deref())?
        }
        Command::Repro { only, json } => return repro_command(&only, json),
    })
}

fn build_tower(g: &SeparatedGraph, n: usize) -> Result<BratteliTower, CliError> {
    Ok(tower(g, n, budget_from_env())?)
}

/// Renders a graph in the requested format, to a file when `output` is set.
fn emit_graph(g: &SeparatedGraph, format: GraphFormat, title: &str, output: Option<&Path>) -> Result<String, CliError> {
    let text = match format {
        GraphFormat::Sgf => save(g),
        GraphFormat::Json => render_json(&document(json!({ "graph": graph_json(g), "summary": graph_summary(g) }))),
        GraphFormat::Dot => to_dot(g, title),
    };
    match output {
        Some(path) => {
            write_file(path, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn vertex_names(g: &SeparatedGraph, set: &BTreeSet<VertexId>) -> Vec<String> {
    set.iter().map(|&v| g.vertex_name(v).to_string()).collect()
}

fn validate(input: &str) -> Result<String, CliError> {
    let g = load_graph(input)?;
    Ok(render_json(&document(json!({
        "valid": true,
        "summary": graph_summary(&g),
        "warnings": g.warnings(),
    }))))
}

fn tower_command(input: &str, n: usize, output: Option<&Path>) -> Result<String, CliError> {
    let t = build_tower(&load_graph(input)?, n)?;
    let levels: Vec<Value> = (0..=n)
        .map(|k| {
            let mut summary = graph_summary(t.level(k));
            summary["level"] = json!(k);
            summary
        })
        .collect();
    if let Some(dir) = output {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
        let mut files = Vec::new();
        for k in 0..=n {
            let name = format!("level_{k}.sgf");
            write_file(&dir.join(&name), &save(t.level(k)))?;
            files.push(name);
        }
        let naming: Vec<Value> = (1..=n).map(|k| naming_json(&t, k)).collect();
        let manifest = document(json!({ "files": files, "naming": naming }));
        write_file(&dir.join("manifest.json"), &render_json(&manifest))?;
    }
    Ok(render_json(&document(json!({ "height": n, "levels": levels }))))
}

/// How level `k` is named from level `k - 1`.
fn naming_json(t: &BratteliTower, k: usize) -> Value {
    let (lower, upper) = (t.level(k - 1), t.level(k));
    let naming = t.naming(k);
    let tuples: Vec<Value> = upper
        .vertex_ids()
        .filter_map(|v| {
            naming.tuples[v.idx()].as_ref().map(|(u, tuple)| {
                let edges: Vec<&str> = tuple.iter().map(|&e| lower.edge_name(e)).collect();
                json!({ "vertex": upper.vertex_name(v), "over": lower.vertex_name(*u), "tuple": edges })
            })
        })
        .collect();
    let edges: Vec<Value> = upper
        .edge_ids()
        .map(|e| {
            let (x, slot) = naming.edge_parent[e.idx()];
            json!({ "edge": upper.edge_name(e), "parent": lower.edge_name(x), "slot": slot })
        })
        .collect();
    let groups: Vec<Value> = upper
        .groups()
        .iter()
        .zip(&naming.group_parent)
        .map(|(x, &e)| json!({ "group": x.name, "parent": lower.edge_name(e) }))
        .collect();
    json!({ "level": k, "tuples": tuples, "edges": edges, "groups": groups })
}

fn hsets(input: &str, n: usize, cap: usize) -> Result<String, CliError> {
    let t = build_tower(&load_graph(input)?, n)?;
    let g = t.level(n);
    let lattice = enumerate_hsets(g, cap)?;
    let sets: Vec<Vec<String>> = lattice.sets.iter().map(|s| vertex_names(g, s)).collect();
    let covers: Vec<[usize; 2]> = lattice.covers.iter().map(|&(a, b)| [a, b]).collect();
    Ok(render_json(&document(json!({
        "level": n,
        "count": sets.len(),
        "trivial": lattice.is_trivial(),
        "sets": sets,
        "covers": covers,
        "maximal_proper": lattice.maximal_proper(),
    }))))
}

fn closure(input: &str, n: usize, set: &str) -> Result<String, CliError> {
    let t = build_tower(&load_graph(input)?, n)?;
    let g = t.level(n);
    let seed = VertexSet::from_names(g, n, &split_list(set))?;
    let closed = closure_hs(g, &seed.vertices);
    Ok(render_json(&document(json!({
        "level": n,
        "input": seed.names(g),
        "input_hereditary": is_hereditary(g, &seed.vertices),
        "input_saturated": is_saturated(g, &seed.vertices),
        "closure": vertex_names(g, &closed),
        "full": closed.len() == g.vertex_count(),
    }))))
}

fn bigint_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(small) => json!(small),
        Err(_) => json!(x.to_string()),
    }
}

fn k0(input: &str, n: usize) -> Result<String, CliError> {
    let t = build_tower(&load_graph(input)?, n)?;
    let p = monoid_presentation(&t, n)?;
    let group = grothendieck(&p);
    let mut parts: Vec<String> = Vec::new();
    if group.free_rank > 0 {
        parts.push(if group.free_rank == 1 { "Z".to_string() } else { format!("Z^{}", group.free_rank) });
    }
    parts.extend(group.torsion.iter().map(|d| format!("Z/{d}")));
    let description = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
    Ok(render_json(&document(json!({
        "level": n,
        "generators": p.generators.len(),
        "relations": p.relations.len(),
        "free_rank": group.free_rank,
        "torsion": group.torsion.iter().map(bigint_json).collect::<Vec<_>>(),
        "group": description,
    }))))
}

fn ball_json<'a>(ball: &Ball, name: impl Fn(u32) -> &'a str + Copy) -> Value {
    let words: Vec<String> = ball.words().iter().map(|w| w.render(name)).collect();
    json!({ "base": ball.base(), "radius": ball.radius(), "words": words })
}

fn graph_ball_json(g: &SeparatedGraph, ball: &Ball) -> Value {
    ball_json(ball, |i| g.edge_name(EdgeId(i)))
}

fn balls(input: &str, n: usize) -> Result<String, CliError> {
    let g = load_graph(input)?;
    let balls = enumerate_balls(&g, n, DEFAULT_MAX_BALLS)?;
    let rendered: Vec<Value> = balls.iter().map(|b| graph_ball_json(&g, b)).collect();
    Ok(render_json(&document(json!({ "radius": n, "count": balls.len(), "balls": rendered }))))
}

fn recode(spec_path: &str, n: Option<usize>) -> Result<String, CliError> {
    let spec = SubshiftSpec::parse(&read_text(spec_path)?)?;
    let letters = spec.letters();
    let forbidden = spec.forbidden_balls()?;
    let allowed = prune_allowed_balls(letters.len(), spec.radius, &forbidden, DEFAULT_MAX_BALLS)?;
    let depth = n.or(spec.n).unwrap_or(spec.radius.saturating_sub(1));
    let recoded = RecodedAlphabet::new(&letters, &allowed, depth)?;
    let name = |i: u32| letters.names[i as usize].as_str();
    let balls: Vec<Value> = recoded.balls().iter().map(|b| ball_json(b, name)).collect();
    Ok(render_json(&document(json!({
        "radius": spec.radius,
        "depth": depth,
        "allowed": allowed.len(),
        "balls": balls,
        "symbols": recoded.names(),
    }))))
}

fn represent(spec_path: &str, format: GraphFormat, output: Option<&Path>) -> Result<String, CliError> {
    let spec = SubshiftSpec::parse(&read_text(spec_path)?)?;
    let rep = represent_finite_type(&spec.letters(), spec.radius, &spec.forbidden_balls()?, DEFAULT_MAX_BALLS)?;
    let g = &rep.representation.graph;
    let text = match format {
        GraphFormat::Json => render_json(&document(json!({
            "allowed": rep.allowed.len(),
            "one_step_balls": rep.one_step.len(),
            "symbols": rep.representation.symbols.names(),
            "corner": rep.representation.corner,
            "summary": graph_summary(g),
            "graph": graph_json(g),
        }))),
        other => return emit_graph(g, other, "representation", output),
    };
    match output {
        Some(path) => {
            write_file(path, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn digraph_json(d: &DiGraph) -> Value {
    let edges: Vec<Value> = d
        .edges
        .iter()
        .map(|(name, s, r)| json!({ "name": name, "source": d.vertices[*s], "range": d.vertices[*r] }))
        .collect();
    json!({ "vertices": d.vertices, "edges": edges })
}

fn classify(input: &str, bound: usize) -> Result<String, CliError> {
    let g = load_graph(input)?;
    let body = match classify_simplicity(&g, bound, budget_from_env())? {
        SimplicityVerdict::NotSimple { level, witness, maximal } => {
            json!({ "verdict": "not_simple", "level": level, "witness": witness, "maximal": maximal })
        }
        SimplicityVerdict::GraphAlgebra { level, graph, inverted } => json!({
            "verdict": "graph_algebra",
            "level": level,
            "graph": digraph_json(&graph),
            "inverted": inverted,
        }),
        SimplicityVerdict::FreeGroup { level, rank, base, generators } => json!({
            "verdict": "free_group",
            "level": level,
            "rank": rank,
            "base": base,
            "generators": generators,
        }),
        SimplicityVerdict::Inconclusive { bound, reason } => {
            json!({ "verdict": "inconclusive", "bound": bound, "reason": reason })
        }
    };
    Ok(render_json(&document(body)))
}

fn cantor_json(g: &SeparatedGraph, report: &CantorReport) -> Value {
    let isolated: Vec<Value> = report
        .isolated
        .iter()
        .map(|w| {
            json!({
                "vertex": g.vertex_name(w.vertex),
                "radius": w.radius,
                "ball": graph_ball_json(g, &w.ball),
                "boundary": w.boundary.names(g),
                "verified": w.verified,
            })
        })
        .collect();
    json!({ "cantor": report.cantor, "dead_ends": report.dead_ends.names(g), "isolated": isolated })
}

fn signed_json(g: &SeparatedGraph, set: &SignedEdgeSet) -> Value {
    json!(set.names(g))
}

fn prime(input: &str) -> Result<String, CliError> {
    let g = load_graph(input)?;
    let report = is_prime(&g)?;
    let mut body = match &report.verdict {
        PrimeVerdict::Prime => json!({ "verdict": "prime" }),
        PrimeVerdict::NotPrime { pair, v_left, v_right } => json!({
            "verdict": "not_prime",
            "witness": {
                "left": signed_json(&g, &pair.left),
                "right": signed_json(&g, &pair.right),
                "v_left": vertex_names(&g, v_left),
                "v_right": vertex_names(&g, v_right),
            },
        }),
        PrimeVerdict::NotApplicable { isolated } => json!({
            "verdict": "not_applicable",
            "isolated": isolated.iter().map(|w| g.vertex_name(w.vertex)).collect::<Vec<_>>(),
        }),
    };
    let pairs: Vec<Value> = report
        .pairs
        .iter()
        .map(|p| {
            json!({
                "left": signed_json(&g, &p.left),
                "right": signed_json(&g, &p.right),
                "degenerate": p.is_degenerate(),
            })
        })
        .collect();
    let c = &report.connectivity;
    let disconnected = c.disconnected.as_ref().map(|(level, a, b)| json!({ "level": level, "from": a, "to": b }));
    body["cantor"] = cantor_json(&g, &report.cantor);
    body["pairs"] = json!(pairs);
    body["connectivity"] = json!({
        "checked_levels": c.checked_levels,
        "skipped_levels": c.skipped_levels,
        "disconnected": disconnected,
        "agrees": c.agrees(&report.verdict),
    });
    Ok(render_json(&document(body)))
}

fn fromwords(
    words: Option<&str>,
    n: usize,
    orbit: bool,
    even: bool,
    detect: Option<usize>,
    quotient: bool,
    output: Option<&Path>,
) -> Result<String, CliError> {
    let ideal = if even {
        WordIdeal::even_shift(n.max(detect.unwrap_or(0)) + 3)?
    } else {
        let list = parse_word_list(words.ok_or_else(|| CliError::Input("no forbidden words given".to_string()))?)?;
        if orbit {
            match list.as_slice() {
                [w] => WordIdeal::periodic_orbit(w)?,
                _ => return Err(CliError::Input("--orbit takes exactly one word".to_string())),
            }
        } else {
            WordIdeal::new(list)?
        }
    };
    let (graph, h) = forbidden_to_hset(&ideal, n)?;
    let forbidden: Vec<&str> = ideal.forbidden().iter().map(|w| w.as_str()).collect();
    let h_words = ideal.h_words(n);
    let words: Vec<&str> = h_words.iter().map(|w| w.as_str()).collect();
    let mut body = json!({
        "forbidden": forbidden,
        "hset": { "level": n, "words": words, "vertices": h.names(&graph) },
    });
    if let Some(bound) = detect {
        body["finite_type"] = match finite_type_detect(&ideal, bound)? {
            FiniteTypeVerdict::FiniteType(k) => json!({ "n": k }),
            FiniteTypeVerdict::UnknownUpTo(b) => json!(format!("unknown_up_to_{b}")),
        };
    }
    if quotient {
        let q = save(&word_quotient(&ideal, n)?);
        match output {
            Some(path) => {
                write_file(path, &q)?;
                body["quotient_file"] = json!(path.display().to_string());
            }
            None => body["quotient"] = json!(q),
        }
    }
    Ok(render_json(&document(body)))
}

fn repro_command(only: &[u32], as_json: bool) -> Result<String, Failure> {
    let results = repro::run_selected(only);
    let text = if as_json {
        render_json(&document(json!({ "criteria": results })))
    } else {
        repro::table(&results)
    };
    let failed = results.iter().filter(|r| !r.passed).count();
    if failed == 0 {
        Ok(text)
    } else {
        Err(Failure { error: Box::new(CliError::ReproFailed { failed, total: results.len() }), output: Some(text) })
    }
}
