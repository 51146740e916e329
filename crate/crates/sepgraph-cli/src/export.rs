use std::fmt::Write;

use serde_json::{json, Map, Value};
use sepgraph_core::{Layer, SeparatedGraph};

/// Version of every JSON document the tool emits.
pub const SCHEMA_VERSION: u64 = 1;

/// Edge colors cycled over the groups, one color per group.
const PALETTE: &[&str] = &[
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
];

/// Wraps an object in a schema-versioned document.
pub fn document(body: Value) -> Value {
    let mut map = match body {
        Value::Object(map) => map,
        other => {
            let mut map = Map::new();
            map.insert("result".to_string(), other);
            map
        }
    };
    map.insert("schema".to_string(), json!(SCHEMA_VERSION));
    Value::Object(map)
}

/// Pretty JSON with a trailing newline.
pub fn render_json(value: &Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("JSON values serialize");
    out.push('\n');
    out
}

/// The graph as plain JSON data: vertices with layers, edges with endpoints
/// and groups with their range and members, all in canonical order.
pub fn graph_json(g: &SeparatedGraph) -> Value {
    let vertices: Vec<Value> =
        g.vertices().iter().map(|v| json!({ "name": v.name, "layer": v.layer.as_u8() })).collect();
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .map(|e| json!({ "name": e.name, "source": g.vertex_name(e.source), "range": g.vertex_name(e.range) }))
        .collect();
    let groups: Vec<Value> = g
        .groups()
        .iter()
        .map(|x| {
            let members: Vec<&str> = x.edges.iter().map(|&e| g.edge_name(e)).collect();
            json!({ "name": x.name, "range": g.vertex_name(x.range), "edges": members })
        })
        .collect();
    json!({ "vertices": vertices, "edges": edges, "groups": groups })
}

/// Vertex, edge and group counts of a graph.
pub fn graph_summary(g: &SeparatedGraph) -> Value {
    let mut sizes: Vec<usize> = g.groups().iter().map(|x| x.edges.len()).collect();
    sizes.sort_unstable();
    json!({
        "layer0": g.layer_vertices(Layer::Zero).count(),
        "layer1": g.layer_vertices(Layer::One).count(),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "groups": g.group_count(),
        "group_sizes": sizes,
    })
}

fn quote(name: &str) -> String {
    let mut out = String::with_capacity(name.len() + 2);
    out.push('"');
    for c in name.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// DOT rendering: layer-1 vertices on top as boxes, layer-0 vertices below as
/// ellipses, and every edge colored by its group.
pub fn to_dot(g: &SeparatedGraph, title: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(title)).unwrap();
    writeln!(out, "  rankdir=TB;").unwrap();
    for (layer, shape) in [(Layer::One, "box"), (Layer::Zero, "ellipse")] {
        writeln!(out, "  {{ rank=same;").unwrap();
        for v in g.layer_vertices(layer) {
            writeln!(out, "    {} [shape={shape}];", quote(g.vertex_name(v))).unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    for e in g.edge_ids() {
        let x = g.group_of(e);
        let color = PALETTE[x.idx() % PALETTE.len()];
        let edge = g.edge(e);
        writeln!(
            out,
            "  {} -> {} [label={}, color={}, fontcolor={}, tooltip={}];",
            quote(g.vertex_name(edge.source)),
            quote(g.vertex_name(edge.range)),
            quote(&edge.name),
            quote(color),
            quote(color),
            quote(&g.group(x).name),
        )
        .unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
